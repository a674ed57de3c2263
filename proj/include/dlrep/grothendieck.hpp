// Character-lattice calculus around a decomposition matrix with interval
// unknowns.
//
// Matrix entries are either known integers or named unknowns carrying an
// integer interval.  Coefficients that arise from back-substitution through
// the unitriangular pattern are sparse multilinear polynomials in the
// unknowns (products of distinct unknowns; a square can never occur because
// every unknown names a single cell, and this is enforced).
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlrep/common.hpp"
#include "dlrep/poly.hpp"

namespace dlrep {

// ---- Ordinary-character basis metadata -----------------------------------

struct CharacterInfo {
  std::string label;
  i64 a_value = 0;
  bool has_degree = false;
  QPoly degree;         // degree polynomial in q, when provided
  std::string series;   // Harish-Chandra series tag ("" when not tagged)
  bool real = true;     // fixed by complex conjugation
};

struct CharacterBasis {
  std::vector<CharacterInfo> chars;
  int index_of(const std::string& label) const;  // -1 if absent
  // True if a-values are weakly increasing in the stored order.
  bool sorted_by_a() const;
  // Stable re-sort by a-value, keeping file order among ties.
  void sort_by_a();
};

// ---- Multilinear expressions ---------------------------------------------

// Sparse multilinear polynomial over Z in named unknowns.
class MExpr {
 public:
  MExpr() = default;
  static MExpr constant(i64 v);
  static MExpr var(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  i64 constant_value() const;  // throws unless is_constant()

  MExpr operator+(const MExpr& o) const;
  MExpr operator-(const MExpr& o) const;
  MExpr operator-() const;
  MExpr operator*(const MExpr& o) const;  // throws on repeated unknowns
  MExpr operator*(i64 s) const;
  bool operator==(const MExpr& o) const { return terms_ == o.terms_; }

  std::set<std::string> variables() const;
  MExpr substitute(const std::string& name, i64 value) const;
  i64 evaluate(const std::map<std::string, i64>& assignment) const;

  // Coefficient split E = B + C * x for an unknown x: returns (B, C).
  std::pair<MExpr, MExpr> split(const std::string& name) const;

  std::string str() const;

  // Terms: sorted distinct variable lists -> nonzero coefficient.
  const std::map<std::vector<std::string>, i64>& terms() const { return terms_; }

 private:
  std::map<std::vector<std::string>, i64> terms_;
  void prune();
};

// ---- Intervals -----------------------------------------------------------

struct Interval {
  i64 lo = 0, hi = 0;
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
  bool collapsed() const { return lo == hi; }
};

// Range of a multilinear expression as the unknowns range over their
// intervals; exact, since the extrema sit at corners of the box.
Interval eval_interval(const MExpr& e, const std::map<std::string, Interval>& box);

// ---- Decomposition matrix ------------------------------------------------

struct MatrixEntry {
  bool known = true;
  i64 value = 0;         // when known
  std::string unknown;   // when not: name of the interval unknown
};

// Value semantics with structure sharing: the row/column labels and the
// entry pattern are immutable and shared between copies, while the interval
// state of the unknowns is copied.  Copying a matrix is therefore cheap and
// saved snapshots are unaffected by later narrowing.
class DecompositionMatrix {
 public:
  DecompositionMatrix() = default;
  DecompositionMatrix(std::string name, std::vector<std::string> rows,
                      std::vector<std::string> cols,
                      std::vector<std::vector<MatrixEntry>> entries,
                      std::map<std::string, Interval> unknowns);

  const std::string& name() const;
  const std::vector<std::string>& rows() const;
  const std::vector<std::string>& cols() const;
  const MatrixEntry& entry(size_t r, size_t c) const;
  MExpr entry_expr(size_t r, size_t c) const;  // value or unknown as MExpr

  const std::map<std::string, Interval>& unknowns() const { return state_; }
  const Interval& interval(const std::string& name) const;
  void set_interval(const std::string& name, Interval v);

  // Known value if the entry is known or its unknown has collapsed.
  std::optional<i64> known_value(size_t r, size_t c) const;

  // All unknowns collapsed?
  bool fully_determined() const;

  // Matrix of plain integers (throws if not fully determined).
  std::vector<std::vector<i64>> values() const;

  // Unitriangular shape check: square, unit diagonal, zeros above.
  bool is_unitriangular() const;

 private:
  struct Structure {
    std::string name;
    std::vector<std::string> rows, cols;
    std::vector<std::vector<MatrixEntry>> entries;
  };
  std::shared_ptr<const Structure> structure_;
  std::map<std::string, Interval> state_;
};

// ---- Lattice maps --------------------------------------------------------

// Inner product of two virtual ordinary characters on the same basis.
i64 pair(const std::vector<i64>& a, const std::vector<i64>& b);

// Image of a projective-column combination in the ordinary character
// lattice: (e p)_r = sum_c D[r][c] p_c.
std::vector<MExpr> e_map(const DecompositionMatrix& D, const std::vector<i64>& p);

// Image of an ordinary virtual character in the Brauer character lattice:
// (d c)_col = sum_r c_r D[r][col]; adjoint to e_map.
std::vector<MExpr> d_map(const DecompositionMatrix& D, const std::vector<i64>& c);

// Coefficients x with D x = c, by back-substitution through the
// unitriangular pattern (square matrices).
std::vector<MExpr> expand_in_pims(const DecompositionMatrix& D, const std::vector<i64>& c);

// Membership of a virtual character in the nonnegative cone spanned by the
// projective columns.  For rectangular matrices each column must have a
// pivot row (first nonzero entry equal to 1, strictly increasing down the
// matrix); rows outside the pivots impose consistency.
struct ConeResult {
  enum Status { inside, outside_negative, outside_span, undetermined } status;
  std::vector<MExpr> coeffs;
};
ConeResult cone_class(const DecompositionMatrix& D, const std::vector<i64>& c);

}  // namespace dlrep
