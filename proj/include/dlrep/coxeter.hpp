// Finite Coxeter groups of crystallographic type, realized exactly on the
// root lattice in simple-root coordinates.
//
// Elements are integer matrices; the matrix of a simple reflection differs
// from the identity only in one row, so products and root images are cheap.
// Length is computed as the number of positive roots mapped to negative
// ones, canonical words are the lexicographically least reduced words, and
// Bruhat order is decided by the subword characterization.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "dlrep/common.hpp"
#include "dlrep/poly.hpp"

namespace dlrep {

// A word in the generators, 1-based (e.g. {1,2,1} for s1 s2 s1).
using Word = std::vector<int>;

Word word_from_string(const std::string& s);   // "121" -> {1,2,1}
std::string word_to_string(const Word& w);     // {1,2,1} -> "121"

class CoxeterSystem {
 public:
  // Supported types: A (rank >= 1), B/C (rank >= 2), D (rank >= 4),
  // E (rank 6..8), F (rank 4), G (rank 2).
  CoxeterSystem(const std::string& type, int rank);

  const std::string& type() const { return type_; }
  int rank() const { return rank_; }
  // Coxeter matrix entry m(i, j) for 1-based generator indices.
  int coxeter_m(int i, int j) const { return m_[i - 1][j - 1]; }
  int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }

  // Group elements as matrices on the root lattice, stored row-major.
  struct Element {
    std::vector<int> mat;
    bool operator==(const Element& o) const { return mat == o.mat; }
    bool operator<(const Element& o) const { return mat < o.mat; }
  };

  Element identity() const;
  Element generator(int i) const;
  Element product(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element from_word(const Word& w) const;

  unsigned length(const Element& w) const;
  unsigned length(const Word& w) const { return length(from_word(w)); }

  // Lexicographically least reduced word (built greedily from left descents).
  Word canonical_word(const Element& w) const;
  Word canonical_word(const Word& w) const { return canonical_word(from_word(w)); }

  // Bruhat order by the subword property, via the lower-interval closure of w.
  bool bruhat_leq(const Word& u, const Word& w) const;
  bool bruhat_leq(const Element& u, const Element& w) const;

  Element longest_element() const;
  Word longest_word() const { return canonical_word(longest_element()); }

  // The product s1 s2 ... sn and its order.
  Element coxeter_element() const;
  unsigned coxeter_number() const;

  // Full enumeration (breadth-first); throws data_error beyond `cap`.
  std::vector<Element> elements(size_t cap = 250000) const;
  size_t order(size_t cap = 250000) const { return elements(cap).size(); }
  Poly poincare_polynomial(size_t cap = 250000) const;

  // Conjugacy classes; each class lists all its elements.
  std::vector<std::vector<Element>> conjugacy_classes(size_t cap = 250000) const;

  // One representative per conjugacy class, of minimal length within the
  // class and with lexicographically least canonical word among those;
  // sorted by (length, word).
  std::vector<Word> min_class_representatives(size_t cap = 250000) const;

  // Same for twisted conjugacy x ~ g x delta(g)^{-1}, where delta is the
  // nontrivial diagram automorphism (type A flip; D swap; E6 flip).
  // Throws data_error if the diagram has no nontrivial automorphism.
  std::vector<Word> min_twisted_class_representatives(size_t cap = 250000) const;

  // The nontrivial diagram automorphism as a permutation of generator
  // indices (1-based), if one exists.
  std::vector<int> diagram_automorphism() const;

  // Image of a root-lattice vector (simple-root coordinates).
  std::vector<int> apply(const Element& w, const std::vector<int>& v) const;

 private:
  std::string type_;
  int rank_;
  std::vector<std::vector<int>> m_;       // Coxeter matrix
  std::vector<std::vector<int>> cartan_;  // cartan_[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<int>> pos_roots_;

  void build_roots();
  bool is_negative_root(const std::vector<int>& v) const;
  std::vector<Word> min_reps_impl(const std::vector<int>* twist, size_t cap) const;
};

}  // namespace dlrep
