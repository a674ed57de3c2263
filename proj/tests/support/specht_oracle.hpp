// Independent character oracle: an explicit Specht module.
//
// The module is realized inside the space spanned by tabloids.  For a
// standard Young tableau t, the polytabloid e_t is the signed sum of the
// tabloids sigma * t over the column group of t.  A permutation g sends e_t
// to the polytabloid of g * t, which is expressed in the standard basis by
// exact rational elimination; the character value is the trace.
//
// Everything here is deliberately written from the textbook definitions,
// independent of the border-strip recursion it is used to check.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "dlrep/common.hpp"
#include "dlrep/partitions.hpp"

namespace specht_oracle {

using dlrep::i64;
using dlrep::Partition;

struct Rational {
  i64 num = 0, den = 1;
  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    i64 g = dlrep::gcd64(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }
  Rational() = default;
  Rational(i64 n, i64 d = 1) : num(n), den(d) { reduce(); }
  Rational operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
  }
  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
  Rational operator/(const Rational& o) const { return Rational(num * o.den, den * o.num); }
  bool is_zero() const { return num == 0; }
};

using Tableau = std::vector<std::vector<int>>;  // rows of 0-based entries

class SpechtModule {
 public:
  explicit SpechtModule(const Partition& shape) : shape_(shape), n_(dlrep::partition_sum(shape)) {
    enumerate_tabloids();
    enumerate_standard_tableaux();
    for (const auto& t : standard_) basis_.push_back(polytabloid(t));
  }

  int dimension() const { return static_cast<int>(standard_.size()); }

  // Trace of the permutation g (images, 0-based) on the Specht module.
  i64 character(const std::vector<int>& g) const {
    Rational trace(0);
    for (size_t k = 0; k < standard_.size(); ++k) {
      Tableau gt = standard_[k];
      for (auto& row : gt)
        for (auto& x : row) x = g[x];
      std::vector<i64> image = polytabloid(gt);
      std::vector<Rational> coords = solve_in_basis(image);
      trace = trace + coords[k];
    }
    if (trace.den != 1) throw dlrep::data_error("specht oracle: non-integral trace");
    return trace.num;
  }

 private:
  Partition shape_;
  int n_;
  std::vector<std::vector<int>> tabloids_;  // row_of vectors
  std::map<std::vector<int>, int> tabloid_index_;
  std::vector<Tableau> standard_;
  std::vector<std::vector<i64>> basis_;  // polytabloids over the tabloid space

  void enumerate_tabloids() {
    std::vector<int> row_of(n_, -1);
    std::vector<int> left(shape_.begin(), shape_.end());
    rec_tabloid(0, row_of, left);
  }

  void rec_tabloid(int x, std::vector<int>& row_of, std::vector<int>& left) {
    if (x == n_) {
      tabloid_index_[row_of] = static_cast<int>(tabloids_.size());
      tabloids_.push_back(row_of);
      return;
    }
    for (size_t r = 0; r < left.size(); ++r) {
      if (left[r] == 0) continue;
      --left[r];
      row_of[x] = static_cast<int>(r);
      rec_tabloid(x + 1, row_of, left);
      ++left[r];
    }
    row_of[x] = -1;
  }

  // Standard tableaux built by inserting 0..n-1 in order; a number may end a
  // row whose current length is strictly less than the row above, which
  // makes rows and columns automatically increasing.
  void enumerate_standard_tableaux() {
    Tableau t(shape_.size());
    rec_standard(0, t);
  }

  void rec_standard(int x, Tableau& t) {
    if (x == n_) {
      standard_.push_back(t);
      return;
    }
    for (size_t r = 0; r < shape_.size(); ++r) {
      if (static_cast<int>(t[r].size()) >= shape_[r]) continue;
      if (r > 0 && t[r].size() >= t[r - 1].size()) continue;
      t[r].push_back(x);
      rec_standard(x + 1, t);
      t[r].pop_back();
    }
  }

  // Signed sum over the column group of t.
  std::vector<i64> polytabloid(const Tableau& t) const {
    // Columns of t.
    std::vector<std::vector<int>> cols;
    for (size_t c = 0;; ++c) {
      std::vector<int> col;
      for (const auto& row : t)
        if (c < row.size()) col.push_back(row[c]);
      if (col.empty()) break;
      cols.push_back(col);
    }
    std::vector<i64> vec(tabloids_.size(), 0);
    std::vector<int> sigma(n_);
    std::iota(sigma.begin(), sigma.end(), 0);
    rec_col(t, cols, 0, sigma, 1, vec);
    return vec;
  }

  std::vector<int> row_of(const Tableau& t) const {
    std::vector<int> ro(n_, -1);
    for (size_t r = 0; r < t.size(); ++r)
      for (int x : t[r]) ro[x] = static_cast<int>(r);
    return ro;
  }

  void rec_col(const Tableau& t, const std::vector<std::vector<int>>& cols, size_t c,
               std::vector<int>& sigma, int sign, std::vector<i64>& vec) const {
    if (c == cols.size()) {
      std::vector<int> ro(n_, -1);
      std::vector<int> base = row_of(t);
      for (int x = 0; x < n_; ++x) ro[sigma[x]] = base[x];
      vec[tabloid_index_.at(ro)] += sign;
      return;
    }
    const auto& col = cols[c];
    std::vector<int> idx(col.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end());
    do {
      int s = perm_sign(idx);
      for (size_t i = 0; i < col.size(); ++i) sigma[col[i]] = col[idx[i]];
      rec_col(t, cols, c + 1, sigma, sign * s, vec);
    } while (std::next_permutation(idx.begin(), idx.end()));
    for (int x : col) sigma[x] = x;
  }

  static int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) s = -s;
    return s;
  }

  // Solve basis * x = target exactly (the basis has full column rank).
  std::vector<Rational> solve_in_basis(const std::vector<i64>& target) const {
    size_t rows = tabloids_.size(), ncols = basis_.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(ncols + 1));
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < ncols; ++j) a[i][j] = Rational(basis_[j][i]);
      a[i][ncols] = Rational(target[i]);
    }
    std::vector<int> pivot_row(ncols, -1);
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows; ++c) {
      size_t p = r;
      while (p < rows && a[p][c].is_zero()) ++p;
      if (p == rows) continue;
      std::swap(a[p], a[r]);
      Rational inv = Rational(1) / a[r][c];
      for (size_t j = c; j <= ncols; ++j) a[r][j] = a[r][j] * inv;
      for (size_t i = 0; i < rows; ++i) {
        if (i == r || a[i][c].is_zero()) continue;
        Rational f = a[i][c];
        for (size_t j = c; j <= ncols; ++j) a[i][j] = a[i][j] - f * a[r][j];
      }
      pivot_row[c] = static_cast<int>(r);
      ++r;
    }
    std::vector<Rational> x(ncols, Rational(0));
    for (size_t c = 0; c < ncols; ++c) {
      if (pivot_row[c] < 0) throw dlrep::data_error("specht oracle: basis not independent");
      x[c] = a[pivot_row[c]][ncols];
    }
    // Consistency: rows below the pivots must have zero right-hand side.
    for (size_t i = r; i < rows; ++i)
      if (!a[i][ncols].is_zero())
        throw dlrep::data_error("specht oracle: image not in the module");
    return x;
  }
};

// A permutation of cycle type mu (0-based images).
inline std::vector<int> permutation_of_type(const Partition& mu) {
  int n = dlrep::partition_sum(mu);
  std::vector<int> g(n);
  int start = 0;
  for (int len : mu) {
    for (int i = 0; i < len; ++i) g[start + i] = start + (i + 1) % len;
    start += len;
  }
  return g;
}

inline i64 specht_character(const Partition& lambda, const Partition& mu) {
  static std::map<Partition, SpechtModule> cache;
  auto it = cache.find(lambda);
  if (it == cache.end()) it = cache.emplace(lambda, SpechtModule(lambda)).first;
  return it->second.character(permutation_of_type(mu));
}

}  // namespace specht_oracle
