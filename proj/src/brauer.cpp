// Planar-embedded Brauer trees: the walk around the tree, Heller translates,
// projective covers, structural validators, stem completion, and JSON/DOT
// serialization.

#include "dlrep/brauer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dlrep {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw data_error(msg); }

// Labels double as DOT identifiers and as tokens in serialized cyclic
// orders, so they must be quote- and whitespace-free.
void check_label(const std::string& s, const char* what) {
  if (s.empty()) fail(std::string(what) + " with an empty label");
  for (char ch : s)
    if (ch == '"' || std::isspace(static_cast<unsigned char>(ch)))
      fail(std::string(what) + " label '" + s + "' contains whitespace or a quote");
}

std::vector<std::string> rotated_to_min(std::vector<std::string> v) {
  if (v.empty()) return v;
  auto least = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), least, v.end());
  return v;
}

bool cyclic_equal(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return a.size() == b.size() && rotated_to_min(a) == rotated_to_min(b);
}

}  // namespace

void BrauerTree::normalize() {
  for (const auto& v : vertices) {
    if (embedding.count(v.label)) continue;
    auto& list = embedding[v.label];
    for (const auto& e : edges)
      if (e.ends[0] == v.label || e.ends[1] == v.label) list.push_back(e.label);
  }
}

void BrauerTree::check() const {
  if (vertices.empty() || edges.empty()) fail("a Brauer tree needs vertices and edges");

  std::map<std::string, const TreeVertex*> vmap;
  for (const auto& v : vertices) {
    check_label(v.label, "vertex");
    if (!vmap.emplace(v.label, &v).second) fail("duplicate vertex label '" + v.label + "'");
    if (v.parity != "" && v.parity != "+" && v.parity != "-")
      fail("vertex '" + v.label + "': parity must be \"+\" or \"-\"");
    if (v.multiplicity < 1) fail("vertex '" + v.label + "': multiplicity must be positive");
    if (!v.exceptional && v.multiplicity != 1)
      fail("vertex '" + v.label + "': only the exceptional vertex may have multiplicity");
  }

  std::set<std::string> elabels;
  std::map<std::string, std::vector<std::string>> adj;
  std::set<std::pair<std::string, std::string>> endpoint_pairs;
  for (const auto& e : edges) {
    check_label(e.label, "edge");
    if (!elabels.insert(e.label).second) fail("duplicate edge label '" + e.label + "'");
    for (const auto& end : e.ends)
      if (!vmap.count(end)) fail("edge '" + e.label + "' references unknown vertex '" + end + "'");
    if (e.ends[0] == e.ends[1]) fail("edge '" + e.label + "' is a loop");
    auto pairkey = std::minmax(e.ends[0], e.ends[1]);
    if (!endpoint_pairs.insert(pairkey).second)
      fail("vertices '" + pairkey.first + "' and '" + pairkey.second + "' are joined twice");
    adj[e.ends[0]].push_back(e.ends[1]);
    adj[e.ends[1]].push_back(e.ends[0]);
  }

  if (edges.size() + 1 != vertices.size())
    fail("not a tree: " + std::to_string(vertices.size()) + " vertices but " +
         std::to_string(edges.size()) + " edges");
  std::set<std::string> reached{vertices.front().label};
  std::vector<std::string> queue{vertices.front().label};
  while (!queue.empty()) {
    std::string v = queue.back();
    queue.pop_back();
    for (const auto& w : adj[v])
      if (reached.insert(w).second) queue.push_back(w);
  }
  if (reached.size() != vertices.size()) fail("not a tree: the graph is disconnected");

  int exceptional_count = 0;
  for (const auto& v : vertices) {
    if (v.exceptional) {
      ++exceptional_count;
      if (!v.real) fail("the exceptional vertex must be real");
    }
    if (v.real) {
      if (!v.conjugate.empty() && v.conjugate != v.label)
        fail("real vertex '" + v.label + "' has conjugate '" + v.conjugate + "'");
    } else {
      if (v.conjugate.empty()) fail("non-real vertex '" + v.label + "' needs a conjugate");
      if (v.conjugate == v.label) fail("non-real vertex '" + v.label + "' is its own conjugate");
      auto it = vmap.find(v.conjugate);
      if (it == vmap.end())
        fail("vertex '" + v.label + "' names unknown conjugate '" + v.conjugate + "'");
      if (it->second->real || it->second->conjugate != v.label)
        fail("conjugation is not involutive at '" + v.label + "'");
    }
  }
  if (exceptional_count != 1)
    fail("a Brauer tree needs exactly one exceptional vertex, found " +
         std::to_string(exceptional_count));

  for (const auto& v : vertices) {
    auto it = embedding.find(v.label);
    if (it == embedding.end()) fail("no cyclic edge order recorded at vertex '" + v.label + "'");
    std::vector<std::string> expect;
    for (const auto& e : edges)
      if (e.ends[0] == v.label || e.ends[1] == v.label) expect.push_back(e.label);
    std::vector<std::string> got = it->second;
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (expect != got)
      fail("the cyclic order at vertex '" + v.label + "' does not list its incident edges");
  }
  for (const auto& [label, order] : embedding) {
    (void)order;
    if (!vmap.count(label)) fail("cyclic order recorded for unknown vertex '" + label + "'");
  }
}

const TreeVertex& BrauerTree::vertex(const std::string& label) const {
  for (const auto& v : vertices)
    if (v.label == label) return v;
  fail("unknown vertex '" + label + "'");
}

const TreeEdge& BrauerTree::edge(const std::string& label) const {
  for (const auto& e : edges)
    if (e.label == label) return e;
  fail("unknown edge '" + label + "'");
}

bool BrauerTree::has_vertex(const std::string& label) const {
  for (const auto& v : vertices)
    if (v.label == label) return true;
  return false;
}

const std::string& BrauerTree::exceptional_label() const {
  for (const auto& v : vertices)
    if (v.exceptional) return v.label;
  fail("no exceptional vertex");
}

int BrauerTree::multiplicity() const { return vertex(exceptional_label()).multiplicity; }

const std::vector<std::string>& BrauerTree::incident(const std::string& vertex) const {
  auto it = embedding.find(vertex);
  if (it == embedding.end()) fail("no cyclic edge order recorded at vertex '" + vertex + "'");
  return it->second;
}

bool BrauerTree::is_leaf(const std::string& vertex) const { return incident(vertex).size() == 1; }

const std::string& BrauerTree::other_end(const std::string& edge_label,
                                         const std::string& vertex_label) const {
  const TreeEdge& e = edge(edge_label);
  if (e.ends[0] == vertex_label) return e.ends[1];
  if (e.ends[1] == vertex_label) return e.ends[0];
  fail("edge '" + edge_label + "' is not incident to vertex '" + vertex_label + "'");
}

const std::string& BrauerTree::successor(const std::string& edge_label,
                                         const std::string& vertex_label) const {
  const auto& list = incident(vertex_label);
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == edge_label) return list[(i + 1) % list.size()];
  fail("edge '" + edge_label + "' is not incident to vertex '" + vertex_label + "'");
}

std::string BrauerTree::edge_between(const std::string& u, const std::string& v) const {
  for (const auto& e : edges)
    if ((e.ends[0] == u && e.ends[1] == v) || (e.ends[0] == v && e.ends[1] == u)) return e.label;
  return "";
}

BrauerTree BrauerTree::mirrored() const {
  BrauerTree t = *this;
  for (auto& [label, order] : t.embedding) {
    (void)label;
    std::reverse(order.begin(), order.end());
  }
  return t;
}

std::string BrauerTree::canonical_form() const {
  std::vector<std::string> vlabels;
  for (const auto& v : vertices) vlabels.push_back(v.label);
  std::sort(vlabels.begin(), vlabels.end());
  std::ostringstream os;
  for (const auto& label : vlabels) {
    const TreeVertex& v = vertex(label);
    os << "v " << label;
    if (v.exceptional) os << " *" << v.multiplicity;
    os << " :";
    for (const auto& e : rotated_to_min(incident(label))) os << ' ' << e;
    os << '\n';
  }
  std::vector<std::string> elines;
  for (const auto& e : edges) {
    auto ends = std::minmax(e.ends[0], e.ends[1]);
    elines.push_back("e " + e.label + " " + ends.first + " " + ends.second);
  }
  std::sort(elines.begin(), elines.end());
  for (const auto& line : elines) os << line << '\n';
  return os.str();
}

std::vector<WalkStep> green_walk(const BrauerTree& tree, const std::string& start) {
  const TreeEdge& e0 = tree.edge(start);
  bool leaf0 = tree.is_leaf(e0.ends[0]);
  bool leaf1 = tree.is_leaf(e0.ends[1]);
  std::string chi;
  if (leaf0 && leaf1)
    chi = tree.vertex(e0.ends[0]).exceptional ? e0.ends[1] : e0.ends[0];
  else if (leaf0)
    chi = e0.ends[0];
  else if (leaf1)
    chi = e0.ends[1];
  else
    fail("the walk must start at an edge with a leaf endpoint; '" + start + "' has none");

  size_t length = 2 * tree.edges.size();
  std::vector<WalkStep> walk;
  walk.reserve(length);
  std::string t = start;
  for (size_t i = 0; i < length; ++i) {
    walk.push_back({static_cast<int>(i), t, chi});
    chi = tree.other_end(t, chi);
    t = tree.successor(t, chi);
  }
  return walk;
}

OmegaModule omega_power(const BrauerTree& tree, const std::string& start, i64 n) {
  std::vector<WalkStep> walk = green_walk(tree, start);
  i64 length = static_cast<i64>(walk.size());
  i64 idx = ((n % length) + length) % length;
  OmegaModule m;
  m.character = walk[idx].character;
  m.head = walk[idx].edge;
  m.socle = walk[(idx + length - 1) % length].edge;
  m.factors.push_back(m.head);
  std::string cur = m.head;
  while (cur != m.socle) {
    cur = tree.successor(cur, m.character);
    m.factors.push_back(cur);
  }
  const TreeVertex& v = tree.vertex(m.character);
  if (v.exceptional && v.multiplicity > 1) {
    size_t around = tree.incident(m.character).size();
    for (int turn = 1; turn < v.multiplicity; ++turn)
      for (size_t s = 0; s < around; ++s) {
        cur = tree.successor(cur, m.character);
        m.factors.push_back(cur);
      }
  }
  return m;
}

PimCharacter pim_character(const BrauerTree& tree, const std::string& edge_label) {
  const TreeEdge& e = tree.edge(edge_label);
  PimCharacter p;
  p.chi = e.ends[0];
  p.chi_prime = e.ends[1];
  const TreeVertex& u = tree.vertex(p.chi);
  const TreeVertex& v = tree.vertex(p.chi_prime);
  p.multiplicity_chi = u.exceptional ? u.multiplicity : 1;
  p.multiplicity_chi_prime = v.exceptional ? v.multiplicity : 1;
  return p;
}

std::vector<std::vector<std::string>> loewy_layers(const BrauerTree& tree,
                                                   const std::string& edge_label) {
  const TreeEdge& e = tree.edge(edge_label);
  auto strand = [&](const std::string& at) {
    const TreeVertex& v = tree.vertex(at);
    size_t around = tree.incident(at).size();
    size_t steps = around - 1;
    if (v.exceptional) steps += static_cast<size_t>(v.multiplicity - 1) * around;
    std::vector<std::string> s;
    s.reserve(steps);
    std::string cur = edge_label;
    for (size_t i = 0; i < steps; ++i) {
      cur = tree.successor(cur, at);
      s.push_back(cur);
    }
    return s;
  };
  std::vector<std::string> a = strand(e.ends[0]);
  std::vector<std::string> b = strand(e.ends[1]);
  std::vector<std::vector<std::string>> layers;
  layers.push_back({edge_label});
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::vector<std::string> row;
    if (i < a.size()) row.push_back(a[i]);
    if (i < b.size()) row.push_back(b[i]);
    layers.push_back(row);
  }
  layers.push_back({edge_label});
  return layers;
}

std::string rule_status_str(RuleStatus s) {
  switch (s) {
    case RuleStatus::pass: return "pass";
    case RuleStatus::fail: return "fail";
    default: return "untested";
  }
}

namespace {

RuleReport make_report(const std::string& rule, bool tested, std::vector<std::string> bad,
                       std::vector<std::string> info) {
  RuleReport r;
  r.rule = rule;
  r.status = !bad.empty() ? RuleStatus::fail : (tested ? RuleStatus::pass : RuleStatus::untested);
  r.notes = std::move(bad);
  for (auto& n : info) r.notes.push_back(std::move(n));
  return r;
}

RuleReport parity_rule(const BrauerTree& t) {
  bool tested = false;
  std::vector<std::string> bad, info;
  Poly phi = t.phi_d ? Poly::cyclotomic(t.phi_d) : Poly();
  for (const auto& e : t.edges) {
    const TreeVertex& u = t.vertex(e.ends[0]);
    const TreeVertex& v = t.vertex(e.ends[1]);
    if (!u.parity.empty() && !v.parity.empty()) {
      tested = true;
      if (u.parity == v.parity)
        bad.push_back("adjacent characters " + u.label + " and " + v.label +
                      " lie in the same residue class");
    }
    if (t.phi_d && u.has_degree && v.has_degree) {
      tested = true;
      QPoly sum = u.degree + v.degree;
      if (!sum.num.mod_monic(phi).is_zero())
        bad.push_back("Phi_" + std::to_string(t.phi_d) + " does not divide " + u.label +
                      "(1) + " + v.label + "(1)");
    }
  }
  if (!tested) info.push_back("no residue classes or degree pairs recorded");
  return make_report("parity", tested, std::move(bad), std::move(info));
}

// Dimension of each simple, solved from the ordinary degrees: for an edge
// e the component of the tree on the far side from the exceptional vertex
// carries the alternating sum of its degrees.  Requires a degree at every
// non-exceptional vertex; returns false and names the first gap otherwise.
bool solve_dims(const BrauerTree& t, std::map<std::string, QPoly>& dims, std::string& missing) {
  const std::string& exc = t.exceptional_label();
  for (const auto& v : t.vertices)
    if (!v.exceptional && !v.has_degree) {
      missing = v.label;
      return false;
    }
  // Root the tree at the exceptional vertex.
  std::map<std::string, std::string> parent_edge;
  std::vector<std::string> order;
  std::set<std::string> seen{exc};
  std::vector<std::string> queue{exc};
  while (!queue.empty()) {
    std::string at = queue.back();
    queue.pop_back();
    order.push_back(at);
    for (const auto& e : t.incident(at)) {
      const std::string& next = t.other_end(e, at);
      if (seen.insert(next).second) {
        parent_edge[next] = e;
        queue.push_back(next);
      }
    }
  }
  // Leaves first: subtree sum below a vertex is its degree minus the sums
  // hanging below its children.
  std::map<std::string, QPoly> below;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it == exc) continue;
    QPoly d = t.vertex(*it).degree;
    for (const auto& e : t.incident(*it)) {
      if (e == parent_edge[*it]) continue;
      d = d - below[t.other_end(e, *it)];
    }
    below[*it] = d;
    dims[parent_edge[*it]] = d;
  }
  return true;
}

RuleReport degree_rule(const BrauerTree& t) {
  std::vector<std::string> bad, info;
  std::map<std::string, QPoly> dims;
  std::string missing;
  if (!solve_dims(t, dims, missing)) {
    info.push_back("no degree recorded for " + missing);
    return make_report("degree", false, std::move(bad), std::move(info));
  }
  for (const auto& [label, dim] : dims) {
    if (dim.leading_sign() <= 0)
      bad.push_back("dimension of " + label + " is " + dim.str() + ", not positive for large q");
    for (i64 q : t.q_checks)
      if (dim.num.eval(q) <= 0)
        bad.push_back("dimension of " + label + " is not positive at q = " + std::to_string(q));
    const TreeEdge& e = t.edge(label);
    if (e.has_dim && !(e.dim == dim))
      bad.push_back("recorded dimension of " + label + " (" + e.dim.str() +
                    ") differs from the solved " + dim.str());
  }
  if (t.q_checks.empty()) info.push_back("no q values supplied; leading coefficients only");
  return make_report("degree", true, std::move(bad), std::move(info));
}

RuleReport stem_rule(const BrauerTree& t) {
  bool any_nonreal = false;
  for (const auto& v : t.vertices) any_nonreal = any_nonreal || !v.real;
  std::vector<std::string> bad, info;
  if (!any_nonreal) {
    info.push_back("no reality data recorded");
    return make_report("stem", false, std::move(bad), std::move(info));
  }

  // The real characters must induce a path through the exceptional vertex.
  std::set<std::string> real;
  for (const auto& v : t.vertices)
    if (v.real) real.insert(v.label);
  std::map<std::string, int> induced_degree;
  for (const auto& e : t.edges)
    if (real.count(e.ends[0]) && real.count(e.ends[1])) {
      ++induced_degree[e.ends[0]];
      ++induced_degree[e.ends[1]];
    }
  for (const auto& [label, deg] : induced_degree)
    if (deg > 2) bad.push_back("real characters branch at " + label);
  std::set<std::string> reached{t.exceptional_label()};
  std::vector<std::string> queue{t.exceptional_label()};
  while (!queue.empty()) {
    std::string at = queue.back();
    queue.pop_back();
    for (const auto& e : t.incident(at)) {
      const std::string& next = t.other_end(e, at);
      if (real.count(next) && reached.insert(next).second) queue.push_back(next);
    }
  }
  for (const auto& label : real)
    if (!reached.count(label))
      bad.push_back("real character " + label + " is separated from the exceptional vertex");

  // Conjugation must be a tree automorphism that reverses the orientation
  // of the plane.
  auto sigma = [&](const std::string& label) -> std::string {
    const TreeVertex& v = t.vertex(label);
    return v.real ? label : v.conjugate;
  };
  std::map<std::string, std::string> edge_image;
  bool structure_ok = true;
  for (const auto& e : t.edges) {
    std::string image = t.edge_between(sigma(e.ends[0]), sigma(e.ends[1]));
    if (image.empty()) {
      bad.push_back("conjugation does not carry the edge " + e.label + " to an edge");
      structure_ok = false;
    } else {
      edge_image[e.label] = image;
    }
  }
  if (structure_ok) {
    for (const auto& v : t.vertices) {
      std::vector<std::string> mapped;
      for (const auto& e : t.incident(v.label)) mapped.push_back(edge_image[e]);
      std::reverse(mapped.begin(), mapped.end());
      if (!cyclic_equal(mapped, t.incident(sigma(v.label))))
        bad.push_back("conjugation is not an orientation-reversing planar map at " + v.label);
    }
  }
  return make_report("stem", true, std::move(bad), std::move(info));
}

RuleReport hecke_rule(const BrauerTree& t) {
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& v : t.vertices)
    if (!v.series.empty()) groups[v.series].push_back(v.label);

  // Tree distances from the exceptional vertex.
  std::map<std::string, int> dist{{t.exceptional_label(), 0}};
  std::vector<std::string> queue{t.exceptional_label()};
  for (size_t head = 0; head < queue.size(); ++head) {
    std::string at = queue[head];
    for (const auto& e : t.incident(at)) {
      const std::string& next = t.other_end(e, at);
      if (!dist.count(next)) {
        dist[next] = dist[at] + 1;
        queue.push_back(next);
      }
    }
  }

  bool tested = false;
  std::vector<std::string> bad, info;
  for (const auto& [series, members] : groups) {
    if (members.size() < 2) continue;
    tested = true;
    std::set<std::string> in_series(members.begin(), members.end());
    std::map<std::string, int> deg;
    std::vector<std::pair<std::string, std::string>> induced;
    for (const auto& e : t.edges)
      if (in_series.count(e.ends[0]) && in_series.count(e.ends[1])) {
        ++deg[e.ends[0]];
        ++deg[e.ends[1]];
        induced.emplace_back(e.ends[0], e.ends[1]);
      }
    bool line = induced.size() + 1 == members.size();
    for (const auto& [label, d] : deg)
      if (d > 2) line = false;
    if (!line) {
      bad.push_back("the " + series + " series does not form a line");
      continue;
    }
    bool have_a = true;
    for (const auto& m : members) have_a = have_a && t.vertex(m).has_a;
    if (!have_a) {
      info.push_back("a-values missing in the " + series + " series; shape checked only");
      continue;
    }
    for (const auto& [x, y] : induced) {
      const std::string& outer = dist[x] > dist[y] ? x : y;
      const std::string& inner = dist[x] > dist[y] ? y : x;
      if (t.vertex(outer).a_value >= t.vertex(inner).a_value)
        bad.push_back("a-values in the " + series +
                      " series do not increase towards the exceptional vertex (" + outer +
                      " vs " + inner + ")");
    }
  }
  if (!tested) info.push_back("no series with two or more characters");
  return make_report("hecke", tested, std::move(bad), std::move(info));
}

}  // namespace

std::vector<RuleReport> validate_tree(const BrauerTree& tree) {
  tree.check();
  return {parity_rule(tree), degree_rule(tree), stem_rule(tree), hecke_rule(tree)};
}

bool all_rules_hold(const std::vector<RuleReport>& reports) {
  for (const auto& r : reports)
    if (r.status == RuleStatus::fail) return false;
  return true;
}

namespace {

// Adds a leaf for `who` at `host`, inserted before position `slot` of the
// host's cyclic order; the new edge is labeled by the new vertex.
BrauerTree attach(const BrauerTree& t, const std::string& host, const TreeVertex& who,
                  size_t slot) {
  BrauerTree out = t;
  out.vertices.push_back(who);
  TreeEdge e;
  e.label = who.label;
  e.ends[0] = host;
  e.ends[1] = who.label;
  out.edges.push_back(e);
  auto& order = out.embedding[host];
  order.insert(order.begin() + static_cast<long>(slot % (order.size() + 1)), who.label);
  out.embedding[who.label] = {who.label};
  return out;
}

struct DetermineState {
  const DetermineProblem* problem = nullptr;
  DetermineResult result;
  std::set<std::string> seen;
  std::set<std::string> elim_seen;
};

void finish_candidate(DetermineState& st, const BrauerTree& t, const std::string& desc) {
  if (!st.seen.insert(t.canonical_form()).second) return;
  ++st.result.candidates;
  auto reject = [&](const std::string& why) {
    std::string line = (desc.empty() ? std::string("the stem itself") : desc) + ": " + why;
    if (st.elim_seen.insert(line).second) st.result.eliminations.push_back(line);
  };

  for (const auto& report : validate_tree(t))
    if (report.status == RuleStatus::fail) {
      reject(report.rule + ": " + (report.notes.empty() ? "violated" : report.notes.front()));
      return;
    }
  for (const auto& f : st.problem->adjacency_facts)
    if (t.edge_between(f.chi, f.chi_prime).empty()) {
      reject("no projective has character " + f.chi + " + " + f.chi_prime);
      return;
    }
  for (const auto& f : st.problem->omega_facts) {
    const TreeEdge& e = t.edge(f.start);
    if (!t.is_leaf(e.ends[0]) && !t.is_leaf(e.ends[1])) {
      reject("the walk from " + f.start + " lost its starting leaf");
      return;
    }
    OmegaModule m = omega_power(t, f.start, f.power);
    if (m.character != f.character) {
      reject("Omega^" + std::to_string(f.power) + " of " + f.start + " lifts to " + m.character +
             ", not " + f.character);
      return;
    }
  }
  st.result.trees.push_back(t);
}

void place_pairs(DetermineState& st, const BrauerTree& t, const std::vector<size_t>& remaining,
                 const std::string& desc) {
  if (remaining.empty()) {
    finish_candidate(st, t, desc);
    return;
  }
  for (size_t pick = 0; pick < remaining.size(); ++pick) {
    const auto& [x, y] = st.problem->pairs[remaining[pick]];
    std::vector<size_t> rest;
    for (size_t i = 0; i < remaining.size(); ++i)
      if (i != pick) rest.push_back(remaining[i]);
    auto extend = [&](const std::string& note) {
      return desc.empty() ? note : desc + "; " + note;
    };

    // Both members at one real vertex, in every pair of slots.
    for (const auto& v : t.vertices) {
      if (!v.real) continue;
      size_t arity = t.incident(v.label).size();
      for (size_t sx = 0; sx < arity; ++sx)
        for (size_t sy = 0; sy < arity + 1; ++sy) {
          BrauerTree t2 = attach(attach(t, v.label, x, sx), v.label, y, sy);
          place_pairs(st, t2, rest,
                      extend(x.label + "," + y.label + " at " + v.label + " slots " +
                             std::to_string(sx) + "," + std::to_string(sy)));
        }
    }
    // Or at a conjugate pair of vertices placed earlier.
    for (const auto& v : t.vertices) {
      if (v.real || v.label > v.conjugate) continue;
      BrauerTree t2 = attach(attach(t, v.label, x, 0), v.conjugate, y, 0);
      place_pairs(st, t2, rest, extend(x.label + " at " + v.label + ", " + y.label + " at " + v.conjugate));
      BrauerTree t3 = attach(attach(t, v.label, y, 0), v.conjugate, x, 0);
      place_pairs(st, t3, rest, extend(y.label + " at " + v.label + ", " + x.label + " at " + v.conjugate));
    }
  }
}

}  // namespace

DetermineResult determine_tree(const DetermineProblem& problem) {
  if (problem.stem.size() < 2) fail("the stem needs at least two vertices");
  if (problem.stem_edges.size() + 1 != problem.stem.size())
    fail("a stem on " + std::to_string(problem.stem.size()) + " vertices needs " +
         std::to_string(problem.stem.size() - 1) + " edge labels");

  BrauerTree base;
  base.name = problem.name;
  base.phi_d = problem.phi_d;
  base.q_checks = problem.q_checks;
  base.vertices = problem.stem;
  for (size_t i = 0; i < problem.stem_edges.size(); ++i) {
    TreeEdge e;
    e.label = problem.stem_edges[i];
    e.ends[0] = problem.stem[i].label;
    e.ends[1] = problem.stem[i + 1].label;
    base.edges.push_back(e);
  }
  base.normalize();
  base.check();
  for (const auto& v : problem.stem)
    if (!v.real) fail("stem vertex '" + v.label + "' is not real");
  for (const auto& [x, y] : problem.pairs) {
    if (x.real || y.real) fail("pair " + x.label + "," + y.label + " must be non-real");
    if (x.conjugate != y.label || y.conjugate != x.label)
      fail("pair " + x.label + "," + y.label + " must name each other as conjugates");
  }

  DetermineState st;
  st.problem = &problem;
  std::vector<size_t> all;
  for (size_t i = 0; i < problem.pairs.size(); ++i) all.push_back(i);
  place_pairs(st, base, all, "");

  DetermineResult res = std::move(st.result);
  std::sort(res.trees.begin(), res.trees.end(), [](const BrauerTree& a, const BrauerTree& b) {
    return a.canonical_form() < b.canonical_form();
  });
  std::vector<bool> grouped(res.trees.size(), false);
  for (size_t i = 0; i < res.trees.size(); ++i) {
    if (grouped[i]) continue;
    grouped[i] = true;
    std::vector<size_t> cls{i};
    std::string mirror = res.trees[i].mirrored().canonical_form();
    if (mirror != res.trees[i].canonical_form()) {
      for (size_t j = i + 1; j < res.trees.size(); ++j)
        if (!grouped[j] && res.trees[j].canonical_form() == mirror) {
          grouped[j] = true;
          cls.push_back(j);
          break;
        }
    }
    res.chirality_classes.push_back(cls);
  }
  return res;
}

namespace {

QPoly qpoly_from_json(const json& j, const std::string& where) {
  if (j.is_array()) return QPoly(Poly(j.get<std::vector<i64>>()), 1);
  if (j.is_object()) {
    Poly num(j.at("num").get<std::vector<i64>>());
    i64 den = j.value("den", static_cast<i64>(1));
    return QPoly(num, den);
  }
  fail(where + ": a degree must be a coefficient array or {\"num\", \"den\"}");
}

json qpoly_to_json(const QPoly& p) {
  if (p.den == 1) return json(p.num.c);
  return json{{"num", p.num.c}, {"den", p.den}};
}

TreeVertex vertex_from_json(const json& j) {
  TreeVertex v;
  v.label = j.at("label").get<std::string>();
  v.exceptional = j.value("exceptional", false);
  v.multiplicity = j.value("multiplicity", 1);
  if (j.contains("degree_poly")) {
    v.has_degree = true;
    v.degree = qpoly_from_json(j.at("degree_poly"), "vertex '" + v.label + "'");
  }
  v.real = j.value("real", true);
  v.conjugate = j.value("conjugate", std::string());
  v.series = j.value("series", std::string());
  if (j.contains("a")) {
    v.has_a = true;
    v.a_value = j.at("a").get<i64>();
  }
  v.parity = j.value("parity", std::string());
  return v;
}

json vertex_to_json(const TreeVertex& v) {
  json j{{"label", v.label}};
  if (v.exceptional) j["exceptional"] = true;
  if (v.multiplicity != 1) j["multiplicity"] = v.multiplicity;
  if (v.has_degree) j["degree_poly"] = qpoly_to_json(v.degree);
  if (!v.real) j["real"] = false;
  if (!v.conjugate.empty()) j["conjugate"] = v.conjugate;
  if (!v.series.empty()) j["series"] = v.series;
  if (v.has_a) j["a"] = v.a_value;
  if (!v.parity.empty()) j["parity"] = v.parity;
  return j;
}

BrauerTree tree_from_json(const json& j) {
  BrauerTree t;
  t.name = j.value("name", std::string());
  t.phi_d = j.value("phi_d", 0u);
  t.q_checks = j.value("q_checks", std::vector<i64>());
  for (const json& vj : j.at("vertices")) t.vertices.push_back(vertex_from_json(vj));
  for (const json& ej : j.at("edges")) {
    TreeEdge e;
    e.label = ej.at("label").get<std::string>();
    const json& ends = ej.at("ends");
    if (!ends.is_array() || ends.size() != 2)
      fail("edge '" + e.label + "': \"ends\" must list two vertices");
    e.ends[0] = ends[0].get<std::string>();
    e.ends[1] = ends[1].get<std::string>();
    if (ej.contains("dim_poly")) {
      e.has_dim = true;
      e.dim = qpoly_from_json(ej.at("dim_poly"), "edge '" + e.label + "'");
    }
    t.edges.push_back(e);
  }
  const json emb = j.value("embedding", json::object());
  for (const auto& item : emb.items())
    t.embedding[item.key()] = item.value().get<std::vector<std::string>>();
  t.normalize();
  t.check();
  return t;
}

json tree_to_json(const BrauerTree& t) {
  json j;
  if (!t.name.empty()) j["name"] = t.name;
  if (t.phi_d) j["phi_d"] = t.phi_d;
  if (!t.q_checks.empty()) j["q_checks"] = t.q_checks;
  j["vertices"] = json::array();
  for (const auto& v : t.vertices) j["vertices"].push_back(vertex_to_json(v));
  j["edges"] = json::array();
  for (const auto& e : t.edges) {
    json ej{{"label", e.label}, {"ends", {e.ends[0], e.ends[1]}}};
    if (e.has_dim) ej["dim_poly"] = qpoly_to_json(e.dim);
    j["edges"].push_back(ej);
  }
  j["embedding"] = json::object();
  for (const auto& [label, order] : t.embedding)
    if (order.size() > 1) j["embedding"][label] = order;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("'" + path + "': " + e.what());
  }
  return j;
}

}  // namespace

BrauerTree load_tree_file(const std::string& path) {
  try {
    return tree_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    fail("'" + path + "': " + e.what());
  }
}

void save_tree_file(const BrauerTree& tree, const std::string& path) {
  tree.check();
  std::ofstream out(path);
  if (!out) fail("cannot write '" + path + "'");
  out << tree_to_json(tree).dump(2) << '\n';
}

DetermineProblem load_determine_file(const std::string& path) {
  try {
    json j = read_json_file(path);
    DetermineProblem p;
    p.name = j.value("name", std::string());
    p.phi_d = j.value("phi_d", 0u);
    p.q_checks = j.value("q_checks", std::vector<i64>());
    const json& stem = j.at("stem");
    for (const json& vj : stem.at("vertices")) p.stem.push_back(vertex_from_json(vj));
    p.stem_edges = stem.at("edges").get<std::vector<std::string>>();

    std::set<std::string> labels, edge_labels(p.stem_edges.begin(), p.stem_edges.end());
    for (const auto& v : p.stem) labels.insert(v.label);
    for (const json& pj : j.value("pairs", json::array())) {
      TreeVertex x = vertex_from_json(pj.at("first"));
      TreeVertex y = vertex_from_json(pj.at("second"));
      x.real = y.real = false;
      if (x.conjugate.empty()) x.conjugate = y.label;
      if (y.conjugate.empty()) y.conjugate = x.label;
      for (const auto* v : {&x, &y}) {
        if (!labels.insert(v->label).second)
          fail("duplicate character label '" + v->label + "'");
        if (!edge_labels.insert(v->label).second)
          fail("pair label '" + v->label + "' collides with a stem edge");
      }
      if (x.conjugate != y.label || y.conjugate != x.label)
        fail("pair " + x.label + "," + y.label + " must name each other as conjugates");
      p.pairs.emplace_back(std::move(x), std::move(y));
    }
    for (const json& fj : j.value("adjacency_facts", json::array())) {
      const json& chars = fj.at("chars");
      if (!chars.is_array() || chars.size() != 2)
        fail("an adjacency fact needs exactly two characters");
      DetermineProblem::AdjacencyFact f{chars[0].get<std::string>(), chars[1].get<std::string>()};
      for (const auto& c : {f.chi, f.chi_prime})
        if (!labels.count(c)) fail("adjacency fact names unknown character '" + c + "'");
      p.adjacency_facts.push_back(f);
    }
    for (const json& fj : j.value("omega_facts", json::array())) {
      DetermineProblem::OmegaFact f;
      f.start = fj.at("start").get<std::string>();
      f.power = fj.at("power").get<i64>();
      f.character = fj.at("character").get<std::string>();
      if (!edge_labels.count(f.start)) fail("walk fact starts at unknown simple '" + f.start + "'");
      if (!labels.count(f.character))
        fail("walk fact names unknown character '" + f.character + "'");
      p.omega_facts.push_back(f);
    }
    return p;
  } catch (const json::exception& e) {
    fail("'" + path + "': " + e.what());
  }
}

std::string tree_to_dot(const BrauerTree& tree) {
  tree.check();
  std::ostringstream os;
  os << "graph \"" << (tree.name.empty() ? "brauer_tree" : tree.name) << "\" {\n";
  os << "  node [shape=circle];\n";
  for (const auto& v : tree.vertices) {
    os << "  \"" << v.label << "\" [";
    if (v.exceptional) os << "peripheries=2, ";
    os << "comment=\"";
    if (v.exceptional) os << "m=" << v.multiplicity << "; ";
    os << "order:";
    for (const auto& e : tree.incident(v.label)) os << ' ' << e;
    os << "\"];\n";
  }
  for (const auto& e : tree.edges)
    os << "  \"" << e.ends[0] << "\" -- \"" << e.ends[1] << "\" [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

std::vector<std::string> quoted_tokens(const std::string& line) {
  std::vector<std::string> out;
  size_t at = 0;
  while (true) {
    size_t open = line.find('"', at);
    if (open == std::string::npos) break;
    size_t close = line.find('"', open + 1);
    if (close == std::string::npos) fail("unbalanced quote in DOT line: " + line);
    out.push_back(line.substr(open + 1, close - open - 1));
    at = close + 1;
  }
  return out;
}

}  // namespace

BrauerTree tree_from_dot(const std::string& dot) {
  BrauerTree t;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line.rfind("graph", 0) == 0) {
      auto q = quoted_tokens(line);
      if (!q.empty()) t.name = q[0];
      continue;
    }
    if (line.rfind("node", 0) == 0 || line[0] == '{' || line[0] == '}') continue;
    auto q = quoted_tokens(line);
    if (line.find("--") != std::string::npos) {
      if (q.size() != 3) fail("cannot parse DOT edge line: " + line);
      TreeEdge e;
      e.ends[0] = q[0];
      e.ends[1] = q[1];
      e.label = q[2];
      t.edges.push_back(e);
      continue;
    }
    if (q.size() != 2) fail("cannot parse DOT vertex line: " + line);
    TreeVertex v;
    v.label = q[0];
    v.exceptional = line.find("peripheries=2") != std::string::npos;
    std::string comment = q[1];
    if (comment.rfind("m=", 0) == 0) {
      size_t semi = comment.find(';');
      if (semi == std::string::npos) fail("cannot parse DOT multiplicity in: " + line);
      v.multiplicity = std::stoi(comment.substr(2, semi - 2));
      comment = comment.substr(semi + 1);
    }
    size_t tag = comment.find("order:");
    if (tag == std::string::npos) fail("DOT vertex line lacks a cyclic order: " + line);
    std::istringstream words(comment.substr(tag + 6));
    std::string w;
    std::vector<std::string> order;
    while (words >> w) order.push_back(w);
    t.embedding[v.label] = order;
    t.vertices.push_back(v);
  }
  t.normalize();
  t.check();
  return t;
}

}  // namespace dlrep
