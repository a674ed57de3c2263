// Point counting and compact-support cohomology bookkeeping for varieties
// stratified into products of affine spaces and split tori.
//
// A CellVariety is a finite disjoint union of cells A^a x (G_m)^t.  Each
// cell contributes a known graded class: A^1 gives one rank in degree 2
// with Tate twist 1, and each torus factor gives ranks in degrees 1 and 2
// (twists 0 and 1), multiplied out degreewise.  Summing cells degreewise
// is only legitimate when no connecting map can be nonzero, i.e. when no
// two cells produce classes in adjacent degrees with the same twist;
// hc_classes refuses otherwise instead of returning a wrong answer.
//
// All twists produced this way are integers, so the trace of Frobenius on
// a class of twist w is the exact integer q^(n*w) and the alternating sum
// can be compared against literal point counts over F_{q^n}.
#pragma once

#include <string>
#include <vector>

#include "dlrep/common.hpp"
#include "dlrep/poly.hpp"

namespace dlrep {

struct Cell {
  int affine_dim = 0;
  int torus_rank = 0;
};

struct CellVariety {
  std::string name;
  std::vector<Cell> cells;
  bool smooth = false;
  bool pure_dimension = false;
  bool projective = false;

  void check() const;      // rejects negative cell dimensions
  int dimension() const;   // max over cells of affine_dim + torus_rank (0 if empty)
};

struct ClassEntry {
  int degree = 0;
  i64 rank = 0;
  int twist = 0;

  bool operator==(const ClassEntry& o) const {
    return degree == o.degree && rank == o.rank && twist == o.twist;
  }
};

// Sorted by (degree, twist); equal positions are merged, zero ranks dropped.
struct GradedClass {
  std::vector<ClassEntry> entries;

  void add(int degree, i64 rank, int twist);
  void normalize();
  bool operator==(const GradedClass& o) const { return entries == o.entries; }
  bool operator!=(const GradedClass& o) const { return !(*this == o); }
  std::string str() const;
};

// Degreewise tensor product (degrees and twists add, ranks multiply).
GradedClass convolve(const GradedClass& a, const GradedClass& b);

// Class of a single cell A^a x (G_m)^t: degrees 2a+t .. 2a+2t, the part in
// degree 2a+t+k having rank binomial(t,k) and twist a+k.
GradedClass cell_classes(const Cell& c);

// Degreewise sum over cells; throws data_error("splitting not guaranteed...")
// when two different cells contribute classes in adjacent degrees with equal
// twist, since the long exact sequence need not split in that situation.
GradedClass hc_classes(const CellVariety& v);

// Number of F_{q^n}-points as a polynomial identity: sum over cells of
// q^a (q-1)^t, evaluated at q^n.
Poly point_count_poly(const CellVariety& v);
i64 point_count(const CellVariety& v, i64 q, int n);

struct LefschetzReport {
  bool ok = true;
  int witness_n = 0;   // first n where the trace and the count disagree
  i64 counted = 0;
  i64 traced = 0;
};

// Compares the alternating twist-weighted trace of hc_classes with the
// literal point count for n = 1..max_n.
LefschetzReport lefschetz_check(const CellVariety& v, i64 q, int max_n);

// Alternating sum of ranks; always equals point_count_poly evaluated at 1.
i64 euler_characteristic(const CellVariety& v);

// Image of hc_classes under degree i -> 2d - i, twist w -> d - w, where d is
// the dimension.  Requires the smooth and pure_dimension flags.
GradedClass dual_class(const CellVariety& v);

// For a variety additionally flagged projective: checks that hc_classes is
// fixed by the duality involution.
bool duality_check(const CellVariety& v);

// Disjoint-union-of-products: every cell of a paired with every cell of b.
CellVariety product(const CellVariety& a, const CellVariety& b);

CellVariety point_variety();
CellVariety affine_space(int n);
CellVariety torus(int rank);
CellVariety projective_space(int n);

struct DrinfeldCount {
  i64 solution_count = 0;     // pairs (x,y) in F_{q^n}^2 with x y^q - y x^q = 1
  i64 projective_count = 0;   // points [x:y] of P^1(F_{q^n}) with x y^q - y x^q != 0
};

// Literal enumeration over F_{q^n} (q a prime power); refuses when q^(2n)
// exceeds 10^8.  The projective count always comes out to q^n - q, i.e.
// the q^n+1 points of the line minus its q+1 rational ones.
DrinfeldCount brute_force_drinfeld(i64 q, int n);

// Points of P^(dim-1)(F_{q^n}) whose homogeneous coordinates x_1..x_dim have
// nonvanishing q-power determinant det(x_i^(q^(j-1))).  dim = 2 recovers the
// projective Drinfeld count.  Same enumeration budget as above.
i64 gl_coxeter_points(int dim, i64 q, int n);

// Alternating-sum prediction for the same count from the graded classes of
// the GL_dim Coxeter-length stratification: hook characters of leg k have
// degree q^(k(k+1)/2) * gaussian_binomial(dim-1, k).
i64 gl_coxeter_prediction(int dim, i64 q, int n);

}  // namespace dlrep
