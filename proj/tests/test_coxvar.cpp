// Eigenvalue ladders, congruence reduction, Heller identifications and
// their cross-checks against the bundled trees.  The F4 identification
// table and the E7 block deductions are frozen here.
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "dlrep/brauer.hpp"
#include "dlrep/coxvar.hpp"
#include "dlrep/data_io.hpp"

using namespace dlrep;

namespace {

GroupSeries load_f4() { return load_series_file(data_dir() + "/series/f4.json"); }

}  // namespace

TEST_CASE("hook ladders of the general linear group") {
  for (int n = 2; n <= 8; ++n) {
    GroupSeries gl = gl_series(n);
    CHECK(gl.r == n - 1);
    CHECK(gl.cong.h == n);
    REQUIRE(gl.series.size() == 1);
    auto ladder = eigen_ladder(gl.series[0], gl.r);
    REQUIRE(ladder.size() == static_cast<size_t>(n));
    std::set<int> classes;
    for (int j = 0; j < n; ++j) {
      CHECK(ladder[j].degree == n - 1 + j);
      CHECK(ladder[j].eigenvalue.twice_power == 2 * j);
      CHECK(gl.cong.q_power(ladder[j].eigenvalue) == j);
      classes.insert(gl.cong.q_power(ladder[j].eigenvalue));
    }
    // The ladder runs from the single column to the single row.
    std::string column = "[1";
    for (int i = 1; i < n; ++i) column += ",1";
    column += "]";
    CHECK(ladder.front().character == column);
    CHECK(ladder.back().character == "[" + std::to_string(n) + "]");
    // All n-th roots of unity occur exactly once mod ell.
    CHECK(classes.size() == static_cast<size_t>(n));

    Identification id = omega_identification(gl.cong, gl.r, gl.series[0]);
    CHECK(id.m == 0);
    CHECK(id.exponent == 1 - n);
    CHECK(id.character == column);
  }

  GroupSeries stored = load_series_file(data_dir() + "/series/gl5.json");
  GroupSeries built = gl_series(5);
  CHECK(stored.r == built.r);
  CHECK(stored.cong.h == built.cong.h);
  REQUIRE(stored.series.size() == 1);
  CHECK(stored.series[0].chars == built.series[0].chars);
}

TEST_CASE("the f4 ladders and their eigenvalues") {
  GroupSeries f4 = load_f4();
  CHECK(f4.r == 4);
  CHECK(f4.cong.h == 12);
  REQUIRE(f4.series.size() == 6);

  auto principal = eigen_ladder(f4.series[0], f4.r);
  REQUIRE(principal.size() == 5);
  CHECK(principal[0].degree == 4);
  CHECK(principal[0].character == "St");
  CHECK(eigenvalue_str(principal[0].eigenvalue) == "1");
  CHECK(eigenvalue_str(principal[1].eigenvalue) == "q");
  CHECK(eigenvalue_str(principal[4].eigenvalue) == "q^4");
  CHECK(principal[4].character == "1");

  auto b2 = eigen_ladder(f4.series[1], f4.r);
  REQUIRE(b2.size() == 3);
  CHECK(b2[0].degree == 4);
  CHECK(eigenvalue_str(b2[0].eigenvalue) == "-q");
  CHECK(eigenvalue_str(b2[1].eigenvalue) == "-q^2");
  CHECK(eigenvalue_str(b2[2].eigenvalue) == "-q^3");
  CHECK(b2[0].character == "B2eps");
  CHECK(b2[2].character == "B21");

  auto cusp = eigen_ladder(f4.series[2], f4.r);
  REQUIRE(cusp.size() == 1);
  CHECK(cusp[0].degree == 4);
  CHECK(eigenvalue_str(cusp[0].eigenvalue) == "i q^2");

  // The largest eigenvalue of the conjugate series closes each ladder.
  for (const auto& s : f4.series) {
    Eigenvalue last = eigen_ladder(s, f4.r).back().eigenvalue;
    Eigenvalue m = mu(s, f4.r);
    CHECK(m.twice_power == last.twice_power);
    CHECK(m.zeta.order == last.zeta.order);
    CHECK((m.zeta.exp + last.zeta.exp) % std::max(m.zeta.order, 1) == 0);
  }

  // The twelve ladder entries hit the twelve 12th roots of unity mod ell,
  // each exactly once.
  std::set<int> classes;
  size_t entries = 0;
  for (const auto& s : f4.series)
    for (const auto& entry : eigen_ladder(s, f4.r)) {
      classes.insert(f4.cong.q_power(entry.eigenvalue));
      ++entries;
    }
  CHECK(entries == 12);
  CHECK(classes.size() == 12);
  CHECK(*classes.begin() == 0);
  CHECK(*classes.rbegin() == 11);
}

TEST_CASE("the six f4 identifications") {
  GroupSeries f4 = load_f4();
  std::vector<Identification> ids = identify_all(f4);
  REQUIRE(ids.size() == 6);

  const std::vector<std::pair<i64, std::string>> expected = {
      {-4, "St"},      {10, "B2eps"},     {6, "F4[i]"},
      {18, "F4[-i]"},  {8, "F4[theta]"},  {16, "F4[theta2]"}};
  const std::vector<int> expected_m = {0, 7, 5, 11, 6, 10};
  for (size_t i = 0; i < 6; ++i) {
    CHECK(ids[i].exponent == expected[i].first);
    CHECK(ids[i].character == expected[i].second);
    CHECK(ids[i].m == expected_m[i]);
  }

  BrauerTree tree = load_tree_file(data_dir() + "/trees/f4_phi12.json");
  auto report = cross_check_tree(tree, "1", ids);
  REQUIRE(report.size() == 6);
  CHECK(all_consistent(report));
}

TEST_CASE("the e7 block eigenspaces") {
  BlockCohomology block = load_block_file(data_dir() + "/series/e7_block.json");
  CHECK(block.r == 7);
  CHECK(block.trivial == "1");
  REQUIRE(block.entries.size() == 4);

  EigenspaceFacts facts = eigenspace_facts(block);
  // The +1 eigenspace lives in degree 7 only: St + E7[-i] is a projective
  // character.  The -1 eigenspace spans degrees 7 and 14 and identifies
  // Omega^8 of the trivial simple with E7[i].
  REQUIRE(facts.adjacent.size() == 1);
  CHECK(facts.adjacent[0] == std::pair<std::string, std::string>{"St", "E7[-i]"});
  REQUIRE(facts.omegas.size() == 1);
  CHECK(facts.omegas[0].exponent == 8);
  CHECK(facts.omegas[0].character == "E7[i]");
  CHECK(facts.omegas[0].start_character == "1");

  BrauerTree tree = load_tree_file(data_dir() + "/trees/e7_phi14.json");
  auto report = cross_check_tree(tree, block.trivial, facts);
  REQUIRE(report.size() == 2);
  CHECK(all_consistent(report));
}

TEST_CASE("a zero-power identification holds on any tree with a trivial leaf") {
  BrauerTree tree = load_tree_file(data_dir() + "/trees/walk_example.json");
  Identification id;
  id.exponent = 0;
  id.character = "chi";
  auto report = cross_check_tree(tree, "chi", std::vector<Identification>{id});
  REQUIRE(report.size() == 1);
  CHECK(report[0].ok);
}

TEST_CASE("a wrong identification is reported, not silently dropped") {
  BrauerTree tree = load_tree_file(data_dir() + "/trees/f4_phi12.json");
  Identification id;
  id.exponent = 6;
  id.character = "F4[theta]";  // the walk actually yields F4[i] here
  auto report = cross_check_tree(tree, "1", std::vector<Identification>{id});
  REQUIRE(report.size() == 1);
  CHECK_FALSE(report[0].ok);
  CHECK(report[0].description.find("F4[i]") != std::string::npos);
  CHECK_FALSE(all_consistent(report));
}

TEST_CASE("congruence failures are diagnosed") {
  EigenvalueCongruence bare;
  bare.h = 12;
  bare.q_half_order = 24;
  bare.check();
  CHECK(bare.resolve_root({1, 0}) == 0);
  CHECK_THROWS_AS(bare.resolve_root({4, 1}), data_error);

  // i = q^{7/2} for the e7 block: i alone is an odd half-power, not a
  // power of q.
  EigenvalueCongruence e7;
  e7.h = 14;
  e7.q_half_order = 28;
  e7.rules.push_back({4, 7});
  e7.check();
  CHECK(e7.resolve(Eigenvalue{{4, 1}, 7}) == 14);
  CHECK(e7.q_power(Eigenvalue{{4, 1}, 7}) == 7);
  CHECK_THROWS_AS(e7.q_power(Eigenvalue{{4, 1}, 0}), data_error);
  // -1 = i^2 resolves through the rule for i.
  CHECK(e7.resolve_root({2, 1}) == 14);

  EigenvalueCongruence bad;
  bad.h = 12;
  bad.q_half_order = 24;
  bad.rules.push_back({4, 5});  // 4*5 = 20 is not 0 mod 24
  CHECK_THROWS_AS(bad.check(), data_error);

  EigenvalueCongruence imprimitive;
  imprimitive.h = 12;
  imprimitive.q_half_order = 24;
  imprimitive.rules.push_back({4, 12});  // squares to 1 already
  CHECK_THROWS_AS(imprimitive.check(), data_error);

  SeriesDatum short_ladder;
  short_ladder.id = "broken";
  short_ladder.zeta = {1, 0};
  short_ladder.twice_m = 0;
  short_ladder.chars = {"a", "b"};
  CHECK_THROWS_AS(eigen_ladder(short_ladder, 4), data_error);
}
