#include "dlrep/coxeter.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "doctest.h"

using namespace dlrep;
using Element = CoxeterSystem::Element;

namespace {

// Independent oracle: breadth-first search over words appending generators
// in increasing order reaches every element first through its shortlex
// minimal word, which is exactly the lexicographically least reduced word.
std::map<Element, Word> shortlex_words(const CoxeterSystem& W) {
  std::map<Element, Word> out;
  std::queue<std::pair<Element, Word>> todo;
  out[W.identity()] = {};
  todo.push({W.identity(), {}});
  while (!todo.empty()) {
    auto [x, w] = todo.front();
    todo.pop();
    for (int i = 1; i <= W.rank(); ++i) {
      Element y = W.product(x, W.generator(i));
      if (out.count(y)) continue;
      Word wy = w;
      wy.push_back(i);
      out[y] = wy;
      todo.push({y, wy});
    }
  }
  return out;
}

// Independent oracle for type A lengths: a word acts on [1..n+1] by
// adjacent swaps and the length of the element is the inversion count.
int inversion_count(const Word& w, int n_symbols) {
  std::vector<int> arr(n_symbols);
  for (int i = 0; i < n_symbols; ++i) arr[i] = i + 1;
  for (int letter : w) std::swap(arr[letter - 1], arr[letter]);
  int inv = 0;
  for (int i = 0; i < n_symbols; ++i)
    for (int j = i + 1; j < n_symbols; ++j)
      if (arr[i] > arr[j]) ++inv;
  return inv;
}

// Cycle type (as a sorted-descending partition) of the permutation that a
// type-A word induces on [1..n+1].
std::vector<int> cycle_type(const Word& w, int n_symbols) {
  std::vector<int> arr(n_symbols);
  for (int i = 0; i < n_symbols; ++i) arr[i] = i + 1;
  for (int letter : w) std::swap(arr[letter - 1], arr[letter]);
  std::vector<bool> used(n_symbols, false);
  std::vector<int> type;
  for (int i = 0; i < n_symbols; ++i) {
    if (used[i]) continue;
    int len = 0, j = i;
    while (!used[j]) {
      used[j] = true;
      j = arr[j] - 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

// All products of subwords of `word` that are reduced expressions of their
// product; the result is the Bruhat lower interval of the word's element.
std::set<Element> subword_products(const CoxeterSystem& W, const Word& word) {
  std::set<Element> reach = {W.identity()};
  for (int letter : word) {
    std::set<Element> next = reach;
    for (const auto& x : reach) {
      Element y = W.product(x, W.generator(letter));
      if (W.length(y) == W.length(x) + 1) next.insert(y);
    }
    reach = std::move(next);
  }
  return reach;
}

std::vector<std::string> rep_strings(const std::vector<Word>& reps) {
  std::vector<std::string> out;
  for (const auto& w : reps) out.push_back(word_to_string(w));
  return out;
}

}  // namespace

TEST_CASE("canonical words match the shortlex oracle on all rank <= 3 types") {
  for (auto [type, rank] : std::vector<std::pair<std::string, int>>{
           {"A", 1}, {"A", 2}, {"A", 3}, {"B", 2}, {"B", 3}, {"G", 2}}) {
    CoxeterSystem W(type, rank);
    auto oracle = shortlex_words(W);
    for (const auto& [x, w] : oracle) {
      CHECK(W.canonical_word(x) == w);
      CHECK(W.length(x) == w.size());
    }
  }
}

TEST_CASE("type A lengths agree with permutation inversion counts") {
  for (int rank = 1; rank <= 4; ++rank) {
    CoxeterSystem W("A", rank);
    // All words of length <= 5 over the generators.
    std::vector<Word> words = {{}};
    std::vector<Word> frontier = {{}};
    for (int len = 0; len < 5; ++len) {
      std::vector<Word> next;
      for (const auto& base : frontier)
        for (int i = 1; i <= rank; ++i) {
          Word w = base;
          w.push_back(i);
          next.push_back(w);
        }
      words.insert(words.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    for (const auto& w : words)
      CHECK(W.length(w) == static_cast<unsigned>(inversion_count(w, rank + 1)));
  }
}

TEST_CASE("group orders and Poincare polynomials") {
  CHECK(CoxeterSystem("A", 2).order() == 6);
  CHECK(CoxeterSystem("A", 3).order() == 24);
  CHECK(CoxeterSystem("B", 2).order() == 8);
  CHECK(CoxeterSystem("B", 3).order() == 48);
  CHECK(CoxeterSystem("G", 2).order() == 12);
  CHECK(CoxeterSystem("A", 4).order() == 120);
  CHECK(CoxeterSystem("F", 4).order() == 1152);

  // Rank-two Poincare polynomials factor as [2]_q [m]_q.
  CHECK(CoxeterSystem("A", 2).poincare_polynomial() == Poly({1, 2, 2, 1}));
  CHECK(CoxeterSystem("B", 2).poincare_polynomial() ==
        Poly({1, 1}) * Poly({1, 1, 1, 1}));
  CHECK(CoxeterSystem("G", 2).poincare_polynomial() ==
        Poly({1, 1}) * Poly({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("longest elements") {
  CoxeterSystem A2("A", 2);
  CHECK(word_to_string(A2.longest_word()) == "121");
  CoxeterSystem B2("B", 2);
  CHECK(B2.longest_word().size() == 4);
  CoxeterSystem A3("A", 3);
  CHECK(word_to_string(A3.longest_word()) == "121321");

  for (auto [type, rank] : std::vector<std::pair<std::string, int>>{
           {"A", 3}, {"B", 3}, {"G", 2}, {"A", 4}}) {
    CoxeterSystem W(type, rank);
    Element w0 = W.longest_element();
    CHECK(W.length(w0) == static_cast<unsigned>(W.num_positive_roots()));
    CHECK(W.product(w0, w0) == W.identity());
    // Conjugation by w0 permutes the generators (a diagram automorphism).
    for (int i = 1; i <= rank; ++i) {
      Element c = W.product(W.product(w0, W.generator(i)), w0);
      bool is_gen = false;
      for (int j = 1; j <= rank; ++j) is_gen |= (c == W.generator(j));
      CHECK(is_gen);
    }
  }
}

TEST_CASE("coxeter numbers across types") {
  CHECK(CoxeterSystem("A", 2).coxeter_number() == 3);
  CHECK(CoxeterSystem("A", 4).coxeter_number() == 5);
  CHECK(CoxeterSystem("B", 2).coxeter_number() == 4);
  CHECK(CoxeterSystem("G", 2).coxeter_number() == 6);
  CHECK(CoxeterSystem("F", 4).coxeter_number() == 12);
  CHECK(CoxeterSystem("E", 7).coxeter_number() == 18);  // matrix order only
}

TEST_CASE("bruhat order matches the exhaustive subword oracle, rank <= 3") {
  for (auto [type, rank] : std::vector<std::pair<std::string, int>>{
           {"A", 2}, {"A", 3}, {"B", 2}, {"B", 3}, {"G", 2}}) {
    CoxeterSystem W(type, rank);
    auto all = W.elements();
    for (const auto& w : all) {
      auto interval = subword_products(W, W.canonical_word(w));
      for (const auto& u : all) {
        bool expected = interval.count(u) > 0;
        CHECK(W.bruhat_leq(u, w) == expected);
      }
    }
  }
}

TEST_CASE("bruhat order does not depend on the chosen reduced word") {
  // Decide u <= w once from the canonical word of w and once from a
  // different reduced word (the reverse of the canonical word of w^{-1}).
  for (auto [type, rank] :
       std::vector<std::pair<std::string, int>>{{"A", 3}, {"B", 2}}) {
    CoxeterSystem W(type, rank);
    auto all = W.elements();
    for (const auto& w : all) {
      Word alt = W.canonical_word(W.inverse(w));
      std::reverse(alt.begin(), alt.end());
      CHECK(W.from_word(alt) == w);  // it is a reduced word for w
      auto from_canonical = subword_products(W, W.canonical_word(w));
      auto from_alt = subword_products(W, alt);
      CHECK(from_canonical == from_alt);
    }
  }
}

TEST_CASE("bruhat order is a graded partial order with top w0") {
  for (auto [type, rank] :
       std::vector<std::pair<std::string, int>>{{"A", 2}, {"B", 2}, {"G", 2}}) {
    CoxeterSystem W(type, rank);
    auto all = W.elements();
    Element w0 = W.longest_element();
    for (const auto& u : all) {
      CHECK(W.bruhat_leq(u, u));
      CHECK(W.bruhat_leq(u, w0));
      for (const auto& v : all) {
        bool uv = W.bruhat_leq(u, v), vu = W.bruhat_leq(v, u);
        if (uv && vu) CHECK(u == v);
        if (uv && !(u == v)) CHECK(W.length(u) < W.length(v));
        for (const auto& x : all)
          if (uv && W.bruhat_leq(v, x)) CHECK(W.bruhat_leq(u, x));
      }
    }
  }
}

TEST_CASE("minimal conjugacy class representatives") {
  CHECK(rep_strings(CoxeterSystem("G", 2).min_class_representatives()) ==
        std::vector<std::string>{"", "1", "2", "12", "1212", "121212"});
  CHECK(rep_strings(CoxeterSystem("B", 2).min_class_representatives()) ==
        std::vector<std::string>{"", "1", "2", "12", "1212"});
  // One representative per cycle type in type A.
  CHECK(rep_strings(CoxeterSystem("A", 4).min_class_representatives()) ==
        std::vector<std::string>{"", "1", "12", "13", "123", "124", "1234"});
}

TEST_CASE("twisted classes in type A correspond to ordinary classes of w * w0") {
  CoxeterSystem W("A", 4);
  auto reps = W.min_twisted_class_representatives();
  CHECK(rep_strings(reps) == std::vector<std::string>{"", "1", "2", "12", "232",
                                                      "1232", "1213214321"});
  // Multiplication by w0 maps twisted classes bijectively onto ordinary
  // conjugacy classes; check via cycle types of the resulting permutations.
  Word w0 = W.longest_word();
  std::set<std::vector<int>> types;
  for (const auto& r : reps) {
    Word rw0 = r;
    rw0.insert(rw0.end(), w0.begin(), w0.end());
    types.insert(cycle_type(rw0, 5));
  }
  CHECK(types.size() == 7);  // all partitions of 5 appear exactly once
  CHECK(types.count({2, 2, 1}) == 1);  // the identity key pairs with w0 itself
  CHECK(types.count({1, 1, 1, 1, 1}) == 1);
}

TEST_CASE("twisted class data used by the unitary-group tables") {
  CoxeterSystem W("A", 4);
  Word w0 = W.longest_word();
  auto type_of = [&](const std::string& key) {
    Word r = word_from_string(key);
    r.insert(r.end(), w0.begin(), w0.end());
    return cycle_type(r, 5);
  };
  CHECK(type_of("") == std::vector<int>{2, 2, 1});
  CHECK(type_of("1") == std::vector<int>{4, 1});
  CHECK(type_of("2") == std::vector<int>{3, 2});
  CHECK(type_of("12") == std::vector<int>{5});
  CHECK(type_of("232") == std::vector<int>{2, 1, 1, 1});
  CHECK(type_of("1232") == std::vector<int>{3, 1, 1});
}

TEST_CASE("diagram automorphisms") {
  CoxeterSystem A3("A", 3);
  auto d = A3.diagram_automorphism();
  CHECK(d[1] == 3);
  CHECK(d[2] == 2);
  // The flip is inner, realized by conjugation with w0.
  Element w0 = A3.longest_element();
  for (int i = 1; i <= 3; ++i)
    CHECK(A3.product(A3.product(w0, A3.generator(i)), w0) == A3.generator(d[i]));
  CHECK_THROWS_AS(CoxeterSystem("B", 2).diagram_automorphism(), data_error);
}
