// Dense univariate polynomials over Z, plus a rational wrapper (integer
// polynomial divided by a positive integer) for degree polynomials whose
// natural form has denominators dividing the Weyl group order.
#pragma once

#include <string>
#include <vector>

#include "dlrep/common.hpp"

namespace dlrep {

// Polynomial in one variable with 64-bit integer coefficients, stored
// low-degree first with no trailing zeros (the zero polynomial is {}).
struct Poly {
  std::vector<i64> c;

  Poly() = default;
  explicit Poly(std::vector<i64> coeffs);
  static Poly constant(i64 v);
  // c * q^k
  static Poly monomial(i64 coeff, unsigned k);
  // The d-th cyclotomic polynomial (d >= 1).
  static Poly cyclotomic(unsigned d);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  i64 leading() const { return c.empty() ? 0 : c.back(); }
  i64 coeff(unsigned k) const { return k < c.size() ? c[k] : 0; }
  i64 eval(i64 x) const;  // overflow-checked

  void trim();
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(i64 s) const;
  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return c != o.c; }

  // Exact division; throws data_error if the remainder is nonzero.
  Poly divide_exact(const Poly& o) const;

  // Remainder of division by a monic polynomial.
  Poly mod_monic(const Poly& m) const;

  // Human-readable form, e.g. "q^3 - 2q + 1" with variable name `var`.
  std::string str(const std::string& var = "q") const;
};

// A polynomial with rational coefficients, represented as num/den with
// den > 0.  Kept in lowest terms (gcd of den and the content of num is 1).
struct QPoly {
  Poly num;
  i64 den = 1;

  QPoly() = default;
  QPoly(Poly n, i64 d);
  static QPoly from(const Poly& p) { return QPoly(p, 1); }

  bool is_zero() const { return num.is_zero(); }
  bool is_integral() const { return den == 1; }
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(i64 s) const;
  bool operator==(const QPoly& o) const { return den == o.den && num == o.num; }

  // Sign of the leading coefficient (0 for the zero polynomial).
  int leading_sign() const;
  std::string str(const std::string& var = "q") const;
};

}  // namespace dlrep
