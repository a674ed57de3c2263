// Walks, Heller translates, projective structure, validators and stem
// completion on the bundled trees, plus invariant checks on randomly
// generated planar trees.  The bundled expectations (walk sequences,
// survivor counts, elimination reasons) are frozen here.
#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "dlrep/brauer.hpp"
#include "dlrep/data_io.hpp"

using namespace dlrep;

namespace {

BrauerTree load(const std::string& name) {
  return load_tree_file(data_dir() + "/trees/" + name + ".json");
}

TreeVertex vert(const std::string& label) {
  TreeVertex v;
  v.label = label;
  return v;
}

std::vector<std::string> edge_sequence(const std::vector<WalkStep>& walk) {
  std::vector<std::string> out;
  for (const auto& s : walk) out.push_back(s.edge);
  return out;
}

std::vector<std::string> char_sequence(const std::vector<WalkStep>& walk) {
  std::vector<std::string> out;
  for (const auto& s : walk) out.push_back(s.character);
  return out;
}

bool same_cyclic_word(std::vector<std::string> a, std::vector<std::string> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto la = std::min_element(a.begin(), a.end());
  std::rotate(a.begin(), la, a.end());
  auto lb = std::min_element(b.begin(), b.end());
  std::rotate(b.begin(), lb, b.end());
  return a == b;
}

RuleStatus status_of(const std::vector<RuleReport>& reports, const std::string& rule) {
  for (const auto& r : reports)
    if (r.rule == rule) return r.status;
  REQUIRE(false);
  return RuleStatus::untested;
}

bool some_elimination_mentions(const DetermineResult& res, const std::string& a,
                               const std::string& b) {
  for (const auto& line : res.eliminations)
    if (line.find(a) != std::string::npos && line.find(b) != std::string::npos) return true;
  return false;
}

// Two-vertex tree: one simple "S" between a trivial-like leaf and the
// exceptional vertex of multiplicity m.
BrauerTree single_edge_tree(int m) {
  BrauerTree t;
  t.name = "single_edge";
  t.vertices.push_back(vert("1_G"));
  TreeVertex exc;
  exc.label = "exc";
  exc.exceptional = true;
  exc.multiplicity = m;
  t.vertices.push_back(exc);
  TreeEdge e;
  e.label = "S";
  e.ends[0] = "1_G";
  e.ends[1] = "exc";
  t.edges.push_back(e);
  t.normalize();
  t.check();
  return t;
}

// Star: e simples around the exceptional centre, leaves theta1..thetaE.
BrauerTree star_tree(int arms, int m) {
  BrauerTree t;
  t.name = "star";
  TreeVertex exc;
  exc.label = "exc";
  exc.exceptional = true;
  exc.multiplicity = m;
  t.vertices.push_back(exc);
  for (int i = 1; i <= arms; ++i) {
    std::string leaf = "theta" + std::to_string(i);
    t.vertices.push_back(vert(leaf));
    TreeEdge e;
    e.label = "S" + std::to_string(i);
    e.ends[0] = "exc";
    e.ends[1] = leaf;
    t.edges.push_back(e);
  }
  t.normalize();
  t.check();
  return t;
}

std::multiset<std::string> flatten(const std::vector<std::vector<std::string>>& layers) {
  std::multiset<std::string> out;
  for (const auto& row : layers)
    for (const auto& s : row) out.insert(s);
  return out;
}

}  // namespace

TEST_CASE("walk around the six-vertex example tree") {
  BrauerTree t = load("walk_example");
  auto walk = green_walk(t, "S");
  CHECK(walk.size() == 10);
  CHECK(edge_sequence(walk) ==
        std::vector<std::string>{"S", "S1", "S2", "S2", "S3", "S3", "S4", "S4", "S1", "S"});
  CHECK(char_sequence(walk) == std::vector<std::string>{"chi", "rho1", "rho2", "rho3", "rho2",
                                                        "exc", "rho2", "rho4", "rho2", "rho1"});
  // Every simple appears exactly twice.
  std::map<std::string, int> seen;
  for (const auto& s : walk) ++seen[s.edge];
  CHECK(seen.size() == t.edges.size());
  for (const auto& [edge, count] : seen) {
    (void)edge;
    CHECK(count == 2);
  }
  // Consecutive characters are the endpoints of the projective in between.
  for (size_t i = 0; i < walk.size(); ++i) {
    PimCharacter p = pim_character(t, walk[i].edge);
    std::set<std::string> got{p.chi, p.chi_prime};
    std::set<std::string> want{walk[i].character, walk[(i + 1) % walk.size()].character};
    CHECK(got == want);
  }
  // Walks must start next to a leaf.
  CHECK_THROWS_AS(green_walk(t, "S1"), data_error);
}

TEST_CASE("walk on a single edge starts at the non-exceptional leaf") {
  BrauerTree t = single_edge_tree(3);
  auto walk = green_walk(t, "S");
  CHECK(walk.size() == 2);
  CHECK(walk[0].edge == "S");
  CHECK(walk[0].character == "1_G");
  CHECK(walk[1].edge == "S");
  CHECK(walk[1].character == "exc");
}

TEST_CASE("heller translates on the example tree") {
  BrauerTree t = load("walk_example");

  OmegaModule om3 = omega_power(t, "S", 3);
  CHECK(om3.character == "rho3");
  CHECK(om3.head == "S2");
  CHECK(om3.socle == "S2");
  CHECK(om3.factors == std::vector<std::string>{"S2"});

  OmegaModule om8 = omega_power(t, "S", 8);
  CHECK(om8.character == "rho2");
  CHECK(om8.head == "S1");
  CHECK(om8.socle == "S4");
  CHECK(same_cyclic_word(om8.factors, {"S4", "S1", "S2", "S3"}));

  OmegaModule om0 = omega_power(t, "S", 0);
  CHECK(om0.character == "chi");
  CHECK(om0.head == "S");
  CHECK(om0.socle == "S");
  CHECK(om0.factors == std::vector<std::string>{"S"});

  // Period 2e, and negative powers wrap the same way.
  OmegaModule om10 = omega_power(t, "S", 10);
  CHECK(om10.character == om0.character);
  CHECK(om10.factors == om0.factors);
  OmegaModule omm2 = omega_power(t, "S", -2);
  CHECK(omm2.character == om8.character);
  CHECK(omm2.head == om8.head);
  CHECK(omm2.socle == om8.socle);
}

TEST_CASE("projective characters pick up the exceptional multiplicity") {
  BrauerTree one = single_edge_tree(4);
  PimCharacter p = pim_character(one, "S");
  CHECK(std::set<std::string>{p.chi, p.chi_prime} == std::set<std::string>{"1_G", "exc"});
  CHECK(p.multiplicity_chi * p.multiplicity_chi_prime == 4);

  BrauerTree star = star_tree(4, 3);
  PimCharacter p2 = pim_character(star, "S2");
  CHECK(std::set<std::string>{p2.chi, p2.chi_prime} == std::set<std::string>{"exc", "theta2"});

  BrauerTree g2 = load("g2_phi6");
  PimCharacter pst = pim_character(g2, "St");
  CHECK(std::set<std::string>{pst.chi, pst.chi_prime} == std::set<std::string>{"exc", "St"});
}

TEST_CASE("loewy layers") {
  // Cyclic group of order ell = 5: the projective cover of the trivial
  // module is the regular module, uniserial with five trivial factors.
  BrauerTree zl = single_edge_tree(4);
  auto reg = loewy_layers(zl, "S");
  CHECK(reg.size() == 5);
  for (const auto& row : reg) CHECK(row == std::vector<std::string>{"S"});

  // Multiplicity one: the two-layer degenerate case S over S.
  auto two = loewy_layers(single_edge_tree(1), "S");
  CHECK(two == std::vector<std::vector<std::string>>{{"S"}, {"S"}});

  // Interior edge: successors around both endpoints interleave.
  BrauerTree t = load("walk_example");
  auto mid = loewy_layers(t, "S1");
  CHECK(mid.size() == 5);
  CHECK(mid[0] == std::vector<std::string>{"S1"});
  CHECK(mid[1] == std::vector<std::string>{"S", "S2"});
  CHECK(mid[2] == std::vector<std::string>{"S3"});
  CHECK(mid[3] == std::vector<std::string>{"S4"});
  CHECK(mid[4] == std::vector<std::string>{"S1"});

  // Cuspidal edge of the e7 tree.
  BrauerTree e7 = load("e7_phi14");
  auto cusp = loewy_layers(e7, "E7[i]");
  CHECK(cusp == std::vector<std::vector<std::string>>{
                    {"E7[i]"}, {"L"}, {"E7[-i]"}, {"S6"}, {"E7[i]"}});

  // Composition multiset = incident simples of both endpoints, the
  // exceptional side taken with its multiplicity.
  for (const char* name : {"walk_example", "g2_phi6", "g2_phi3", "e7_phi14", "f4_phi12"}) {
    BrauerTree tree = load(name);
    for (const auto& e : tree.edges) {
      std::multiset<std::string> expect;
      for (const auto& end : e.ends) {
        const TreeVertex& v = tree.vertex(end);
        int m = v.exceptional ? v.multiplicity : 1;
        for (int i = 0; i < m; ++i)
          for (const auto& inc : tree.incident(end)) expect.insert(inc);
      }
      CHECK(flatten(loewy_layers(tree, e.label)) == expect);
    }
  }
}

TEST_CASE("validators accept the bundled trees") {
  auto g2a = validate_tree(load("g2_phi6"));
  CHECK(all_rules_hold(g2a));
  for (const char* rule : {"parity", "degree", "stem", "hecke"})
    CHECK(status_of(g2a, rule) == RuleStatus::pass);

  auto g2b = validate_tree(load("g2_phi3"));
  CHECK(all_rules_hold(g2b));
  for (const char* rule : {"parity", "degree", "stem", "hecke"})
    CHECK(status_of(g2b, rule) == RuleStatus::pass);

  // Without degree data the dimension rules stay untested, not failed.
  auto e7 = validate_tree(load("e7_phi14"));
  CHECK(all_rules_hold(e7));
  CHECK(status_of(e7, "parity") == RuleStatus::untested);
  CHECK(status_of(e7, "degree") == RuleStatus::untested);
  CHECK(status_of(e7, "stem") == RuleStatus::pass);
  CHECK(status_of(e7, "hecke") == RuleStatus::pass);

  auto f4 = validate_tree(load("f4_phi12"));
  CHECK(all_rules_hold(f4));
  CHECK(status_of(f4, "stem") == RuleStatus::pass);
  CHECK(status_of(f4, "hecke") == RuleStatus::pass);

  // A tree with no attached data at all: everything untested.
  auto bare = validate_tree(load("walk_example"));
  for (const char* rule : {"parity", "degree", "stem", "hecke"})
    CHECK(status_of(bare, rule) == RuleStatus::untested);

  // One-edge tree: nothing fails vacuously.
  auto tiny = validate_tree(single_edge_tree(2));
  CHECK(all_rules_hold(tiny));
}

TEST_CASE("validators catch planted violations") {
  BrauerTree base = load("g2_phi6");

  // Same residue class on both ends of an edge.
  BrauerTree bad_parity = base;
  for (auto& v : bad_parity.vertices)
    if (v.label == "St") v.parity = "-";
  auto rep = validate_tree(bad_parity);
  CHECK(status_of(rep, "parity") == RuleStatus::fail);

  // A degree lowered until a solved dimension goes negative.
  BrauerTree bad_degree = base;
  for (auto& v : bad_degree.vertices)
    if (v.label == "phi21") v.degree = v.degree - QPoly(Poly::constant(100000), 1);
  rep = validate_tree(bad_degree);
  CHECK(status_of(rep, "degree") == RuleStatus::fail);
  bool mentions = false;
  for (const auto& r : rep)
    if (r.rule == "degree")
      for (const auto& n : r.notes) mentions = mentions || n.find("phi21") != std::string::npos;
  CHECK(mentions);

  // Conjugate leaves placed so that conjugation cannot reverse orientation.
  BrauerTree bad_stem = base;
  bad_stem.embedding["exc"] = {"St", "G2[theta]", "G2[theta2]", "G2[-1]"};
  rep = validate_tree(bad_stem);
  CHECK(status_of(rep, "stem") == RuleStatus::fail);

  // a-values out of order along the principal series.
  BrauerTree bad_hecke = base;
  for (auto& v : bad_hecke.vertices)
    if (v.label == "phi21") v.a_value = 7;
  rep = validate_tree(bad_hecke);
  CHECK(status_of(rep, "hecke") == RuleStatus::fail);
}

TEST_CASE("stem completion recovers both G2 trees up to chirality") {
  for (const char* name : {"g2_phi6", "g2_phi3"}) {
    DetermineProblem p = load_determine_file(data_dir() + "/determine/" + name + ".json");
    DetermineResult res = determine_tree(p);
    INFO(name);
    CHECK(res.candidates == 22);
    CHECK(res.trees.size() == 2);
    REQUIRE(res.chirality_classes.size() == 1);
    CHECK(res.chirality_classes[0].size() == 2);
    CHECK(res.unique_up_to_chirality());

    BrauerTree expected = load(name);
    std::set<std::string> got{res.trees[0].canonical_form(), res.trees[1].canonical_form()};
    std::set<std::string> want{expected.canonical_form(), expected.mirrored().canonical_form()};
    CHECK(got == want);
  }

  // The eliminations name the rules that did the work.
  DetermineResult phi6 =
      determine_tree(load_determine_file(data_dir() + "/determine/g2_phi6.json"));
  CHECK(some_elimination_mentions(phi6, "phi21", "degree"));
  CHECK(some_elimination_mentions(phi6, "exc", "stem"));
  CHECK(some_elimination_mentions(phi6, "at St", "parity"));

  DetermineResult phi3 =
      determine_tree(load_determine_file(data_dir() + "/determine/g2_phi3.json"));
  CHECK(some_elimination_mentions(phi3, "at exc", "parity"));
  CHECK(some_elimination_mentions(phi3, "at 1", "degree"));
  CHECK(some_elimination_mentions(phi3, "at G2[1]", "degree"));
  CHECK(some_elimination_mentions(phi3, "at St", "stem"));
}

TEST_CASE("stem completion pins the e7 tree including its orientation") {
  DetermineProblem p = load_determine_file(data_dir() + "/determine/e7_phi14.json");
  DetermineResult res = determine_tree(p);
  CHECK(res.candidates == 70);
  REQUIRE(res.trees.size() == 1);
  CHECK(res.unique_up_to_chirality());
  CHECK(res.chirality_classes == std::vector<std::vector<size_t>>{{0}});
  CHECK(res.trees[0].canonical_form() == load("e7_phi14").canonical_form());

  // The projective-character fact rules out every other attachment vertex,
  // and the walk fact kills the mirror image.
  CHECK(some_elimination_mentions(res, "no projective has character", "E7[-i]"));
  CHECK(some_elimination_mentions(res, "Omega^8", "lifts to E7[-i]"));
}

TEST_CASE("stem completion pins the f4 tree from walk facts alone") {
  DetermineProblem p = load_determine_file(data_dir() + "/determine/f4_phi12.json");
  DetermineResult res = determine_tree(p);
  REQUIRE(res.trees.size() == 1);
  CHECK(res.unique_up_to_chirality());
  CHECK(res.trees[0].canonical_form() == load("f4_phi12").canonical_form());
  CHECK(res.candidates > 500);
  CHECK(some_elimination_mentions(res, "Omega^", "lifts to"));

  // The six walk facts hold on the bundled tree itself.
  BrauerTree t = load("f4_phi12");
  for (const auto& f : p.omega_facts) CHECK(omega_power(t, f.start, f.power).character == f.character);
}

TEST_CASE("an all-real stem with no pairs is its own unique completion") {
  DetermineProblem p;
  p.name = "line";
  p.stem.push_back(vert("a"));
  TreeVertex exc;
  exc.label = "exc";
  exc.exceptional = true;
  p.stem.push_back(exc);
  p.stem.push_back(vert("b"));
  p.stem_edges = {"Sa", "Sb"};
  DetermineResult res = determine_tree(p);
  CHECK(res.candidates == 1);
  REQUIRE(res.trees.size() == 1);
  CHECK(res.chirality_classes == std::vector<std::vector<size_t>>{{0}});
  // A line is achiral: its mirror image is the same embedded tree.
  CHECK(res.trees[0].mirrored().canonical_form() == res.trees[0].canonical_form());
}

TEST_CASE("an infeasible completion reports the violated rule") {
  DetermineProblem p;
  p.name = "clash";
  TreeVertex a;
  a.label = "a";
  a.parity = "+";
  p.stem.push_back(a);
  TreeVertex exc;
  exc.label = "exc";
  exc.exceptional = true;
  exc.parity = "+";
  p.stem.push_back(exc);
  p.stem_edges = {"Sa"};
  DetermineResult res = determine_tree(p);
  CHECK(res.trees.empty());
  CHECK_FALSE(res.unique_up_to_chirality());
  REQUIRE(res.eliminations.size() == 1);
  CHECK(res.eliminations[0].find("parity") != std::string::npos);
}

TEST_CASE("canonical form is rotation-invariant but keeps chirality") {
  BrauerTree t = load("g2_phi6");
  BrauerTree rotated = t;
  auto& order = rotated.embedding["exc"];
  std::rotate(order.begin(), order.begin() + 2, order.end());
  CHECK(rotated.canonical_form() == t.canonical_form());

  CHECK(t.mirrored().canonical_form() != t.canonical_form());
  CHECK(t.mirrored().mirrored().canonical_form() == t.canonical_form());

  BrauerTree walk = load("walk_example");
  CHECK(walk.mirrored().canonical_form() != walk.canonical_form());
}

TEST_CASE("tree files round trip through json") {
  BrauerTree t = load("g2_phi6");
  std::string path = "roundtrip_tree.json";
  save_tree_file(t, path);
  BrauerTree back = load_tree_file(path);
  CHECK(back.canonical_form() == t.canonical_form());
  CHECK(back.phi_d == t.phi_d);
  CHECK(back.q_checks == t.q_checks);
  CHECK(back.vertex("St").a_value == 6);
  CHECK(back.vertex("G2[theta]").conjugate == "G2[theta2]");
  CHECK(back.vertex("phi21").degree == t.vertex("phi21").degree);
  std::remove(path.c_str());
}

TEST_CASE("dot export preserves the embedding") {
  for (const char* name : {"walk_example", "g2_phi6", "g2_phi3", "e7_phi14", "f4_phi12"}) {
    BrauerTree t = load(name);
    std::string dot = tree_to_dot(t);
    CHECK(dot.find("peripheries=2") != std::string::npos);
    BrauerTree back = tree_from_dot(dot);
    INFO(name);
    CHECK(back.canonical_form() == t.canonical_form());
    CHECK(back.name == t.name);
  }
  // Multiplicity survives the round trip.
  BrauerTree big = single_edge_tree(7);
  CHECK(tree_from_dot(tree_to_dot(big)).multiplicity() == 7);
}

TEST_CASE("malformed trees are rejected") {
  BrauerTree t;
  t.vertices.push_back(vert("a"));
  t.vertices.push_back(vert("b"));
  t.vertices.push_back(vert("c"));
  TreeEdge e;
  e.label = "e1";
  e.ends[0] = "a";
  e.ends[1] = "b";
  t.edges.push_back(e);
  // Disconnected (c isolated), and no exceptional vertex.
  t.normalize();
  CHECK_THROWS_AS(t.check(), data_error);

  BrauerTree cyc;
  for (const char* l : {"a", "b", "c"}) cyc.vertices.push_back(vert(l));
  cyc.vertices[0].exceptional = true;
  int k = 0;
  for (const auto* pair : {"ab", "bc", "ca"}) {
    TreeEdge f;
    f.label = "e" + std::to_string(++k);
    f.ends[0] = std::string(1, pair[0]);
    f.ends[1] = std::string(1, pair[1]);
    cyc.edges.push_back(f);
  }
  cyc.normalize();
  CHECK_THROWS_AS(cyc.check(), data_error);
}

TEST_CASE("walk invariants hold on random planar trees") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    BrauerTree t;
    t.name = "random";
    t.vertices.push_back(vert("v0"));
    t.embedding["v0"] = {};
    for (int i = 1; i < n; ++i) {
      std::string label = "v" + std::to_string(i);
      std::string host = "v" + std::to_string(rng() % i);
      TreeEdge e;
      e.label = "e" + std::to_string(i);
      e.ends[0] = host;
      e.ends[1] = label;
      t.edges.push_back(e);
      t.vertices.push_back(vert(label));
      auto& order = t.embedding[host];
      order.insert(order.begin() + static_cast<long>(rng() % (order.size() + 1)), e.label);
      t.embedding[label] = {e.label};
    }
    size_t exc_at = rng() % n;
    t.vertices[exc_at].exceptional = true;
    t.vertices[exc_at].multiplicity = 1 + static_cast<int>(rng() % 4);
    t.check();

    i64 period = 2 * static_cast<i64>(t.edges.size());
    for (const auto& e : t.edges) {
      if (!t.is_leaf(e.ends[0]) && !t.is_leaf(e.ends[1])) continue;
      auto walk = green_walk(t, e.label);
      REQUIRE(static_cast<i64>(walk.size()) == period);
      std::map<std::string, int> count;
      for (const auto& s : walk) ++count[s.edge];
      for (const auto& [label, c] : count) {
        (void)label;
        CHECK(c == 2);
      }
      for (size_t i = 0; i < walk.size(); ++i) {
        PimCharacter p = pim_character(t, walk[i].edge);
        std::set<std::string> got{p.chi, p.chi_prime};
        std::set<std::string> want{walk[i].character, walk[(i + 1) % walk.size()].character};
        CHECK(got == want);
      }
      OmegaModule om0 = omega_power(t, e.label, 0);
      OmegaModule omp = omega_power(t, e.label, period);
      CHECK(om0.character == omp.character);
      CHECK(om0.head == omp.head);
      CHECK(om0.socle == omp.socle);
      CHECK(om0.factors == omp.factors);
      // Socle of one translate is the head of the previous one.
      i64 mid = 1 + static_cast<i64>(rng() % (period - 1));
      CHECK(omega_power(t, e.label, mid).socle == omega_power(t, e.label, mid - 1).head);
    }
  }
}
