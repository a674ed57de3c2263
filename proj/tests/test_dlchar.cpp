#include "dlrep/dlchar.hpp"

#include "doctest.h"

using namespace dlrep;

TEST_CASE("sign calibration for GU5") {
  UnitaryData d = unitary_data(5);
  CHECK(d.epsilon == std::vector<int>{1, 1, 1, -1, 1, -1, 1});
  // First and last shapes carry the trivial and Steinberg characters.
  CHECK(d.degrees.front() == QPoly::from(Poly::constant(1)));
  CHECK(d.degrees.back() == QPoly::from(Poly::monomial(1, 10)));
}

TEST_CASE("GU3 degrees") {
  UnitaryData d = unitary_data(3);
  REQUIRE(d.shapes.size() == 3);
  CHECK(d.degrees[0] == QPoly::from(Poly::constant(1)));
  CHECK(d.degrees[1] == QPoly::from(Poly({0, -1, 1})));  // q^2 - q
  CHECK(d.degrees[2] == QPoly::from(Poly::monomial(1, 3)));
}

TEST_CASE("degrees are positive and divide the group order") {
  for (int n = 2; n <= 6; ++n) {
    UnitaryData d = unitary_data(n);
    Poly order = Poly::monomial(1, n * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
      order = order * (Poly::monomial(1, i) + Poly::constant(i % 2 == 0 ? -1 : 1));
    for (const auto& deg : d.degrees) {
      CHECK(deg.leading_sign() == 1);
      CHECK(deg.num.eval(2) > 0);
      CHECK(deg.is_integral());
      CHECK_NOTHROW(order.divide_exact(deg.num));
    }
  }
}

TEST_CASE("hook-row coefficient equals n - 1") {
  for (int n = 3; n <= 8; ++n) CHECK(gu_hook_coefficient(n) == n - 1);
}

TEST_CASE("twisted induction table for GU5") {
  RwTable t = unitary_rw_table(5);
  REQUIRE(t.basis.size() == 7);
  CHECK(t.basis[0] == "(5)");
  CHECK(t.basis[6] == "(1,1,1,1,1)");
  auto coeffs = [&](const std::string& k) { return rw_unipotent(t, k).coeffs; };
  CHECK(coeffs("") == std::vector<i64>{1, 0, 1, 2, 1, 0, 1});
  CHECK(coeffs("1") == std::vector<i64>{1, 0, -1, 0, 1, 0, -1});
  CHECK(coeffs("2") == std::vector<i64>{1, -1, 1, 0, -1, -1, -1});
  CHECK(coeffs("12") == std::vector<i64>{1, -1, 0, -1, 0, 1, 1});
  CHECK(coeffs("232") == std::vector<i64>{1, 2, 1, 0, -1, 2, -1});
  CHECK(coeffs("1232") == std::vector<i64>{1, 1, -1, 0, -1, -1, 1});
  CHECK(coeffs("1213214321") == std::vector<i64>{1, 4, 5, -6, 5, -4, 1});
  CHECK(rw_unipotent(t, "").length == 0);
  CHECK(rw_unipotent(t, "1213214321").length == 10);
  CHECK_THROWS_AS(rw_unipotent(t, "21"), data_error);
}

TEST_CASE("table norms match centralizer orders of the paired classes") {
  RwTable t = unitary_rw_table(5);
  CoxeterSystem W("A", 4);
  Word w0 = W.longest_word();
  for (const auto& [key, entry] : t.rw) {
    Word rw0 = word_from_string(key);
    rw0.insert(rw0.end(), w0.begin(), w0.end());
    Partition type = type_a_cycle_type(rw0, 5);
    CHECK(pair_characters(entry.coeffs, entry.coeffs) == centralizer_order(type));
  }
}

TEST_CASE("class resolution against the twisted orbit") {
  RwTable t = unitary_rw_table(5);
  CoxeterSystem W("A", 4);
  // s2 s1 delta(s2) lies in the twisted class of s1.
  const RwEntry& e = rw_unipotent(t, W, Word{2, 1, 3}, true);
  CHECK(e.coeffs == rw_unipotent(t, "1").coeffs);
  // Any word resolves somewhere; the longest element resolves to itself.
  CHECK(rw_unipotent(t, W, W.longest_word(), true).length == 10);
}
