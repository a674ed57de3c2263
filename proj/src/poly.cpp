#include "dlrep/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dlrep {

Poly::Poly(std::vector<i64> coeffs) : c(std::move(coeffs)) { trim(); }

Poly Poly::constant(i64 v) {
  Poly p;
  if (v != 0) p.c = {v};
  return p;
}

Poly Poly::monomial(i64 coeff, unsigned k) {
  Poly p;
  if (coeff != 0) {
    p.c.assign(k + 1, 0);
    p.c[k] = coeff;
  }
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

i64 Poly::eval(i64 x) const {
  i64 r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r = checked_mul(r, x);
    // Addition overflow is checked by widening.
    i128 s = static_cast<i128>(r) + *it;
    if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("Poly::eval overflow");
    r = static_cast<i64>(s);
  }
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c) v = -v;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  Poly r;
  r.c.assign(c.size() + o.c.size() - 1, 0);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) {
      i128 s = static_cast<i128>(r.c[i + j]) + static_cast<i128>(c[i]) * o.c[j];
      if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("Poly::operator* overflow");
      r.c[i + j] = static_cast<i64>(s);
    }
  r.trim();
  return r;
}

Poly Poly::operator*(i64 s) const {
  Poly r = *this;
  for (auto& v : r.c) v = checked_mul(v, s);
  r.trim();
  return r;
}

Poly Poly::divide_exact(const Poly& o) const {
  if (o.is_zero()) throw data_error("Poly::divide_exact: division by zero");
  Poly rem = *this;
  if (rem.is_zero()) return {};
  if (rem.degree() < o.degree()) throw data_error("Poly::divide_exact: not divisible");
  Poly quot;
  quot.c.assign(rem.degree() - o.degree() + 1, 0);
  while (!rem.is_zero() && rem.degree() >= o.degree()) {
    if (rem.leading() % o.leading() != 0)
      throw data_error("Poly::divide_exact: not divisible");
    i64 q = rem.leading() / o.leading();
    unsigned shift = static_cast<unsigned>(rem.degree() - o.degree());
    quot.c[shift] = q;
    rem = rem - Poly::monomial(q, shift) * o;
  }
  if (!rem.is_zero()) throw data_error("Poly::divide_exact: nonzero remainder");
  quot.trim();
  return quot;
}

Poly Poly::mod_monic(const Poly& m) const {
  if (m.is_zero() || m.leading() != 1)
    throw data_error("Poly::mod_monic: modulus must be monic");
  Poly rem = *this;
  while (!rem.is_zero() && rem.degree() >= m.degree()) {
    i64 q = rem.leading();
    unsigned shift = static_cast<unsigned>(rem.degree() - m.degree());
    rem = rem - Poly::monomial(q, shift) * m;
  }
  return rem;
}

// Computed by the standard sieve: q^d - 1 = prod_{e | d} Phi_e, so Phi_d is
// (q^d - 1) divided by the cyclotomics of all proper divisors.
Poly Poly::cyclotomic(unsigned d) {
  if (d == 0) throw data_error("cyclotomic: d must be >= 1");
  Poly num = Poly::monomial(1, d) - Poly::constant(1);
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) num = num.divide_exact(cyclotomic(e));
  return num;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    i64 a = c[k];
    if (a == 0) continue;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    i64 mag = a < 0 ? -a : a;
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

QPoly::QPoly(Poly n, i64 d) : num(std::move(n)), den(d) {
  if (den == 0) throw data_error("QPoly: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  i64 g = den;
  for (i64 v : num.c) g = gcd64(g, v);
  if (g > 1) {
    for (auto& v : num.c) v /= g;
    den /= g;
  }
  if (num.is_zero()) den = 1;
}

QPoly QPoly::operator+(const QPoly& o) const {
  return QPoly(num * o.den + o.num * den, checked_mul(den, o.den));
}

QPoly QPoly::operator-(const QPoly& o) const {
  return QPoly(num * o.den - o.num * den, checked_mul(den, o.den));
}

QPoly QPoly::operator*(const QPoly& o) const {
  return QPoly(num * o.num, checked_mul(den, o.den));
}

QPoly QPoly::operator*(i64 s) const { return QPoly(num * s, den); }

int QPoly::leading_sign() const {
  i64 l = num.leading();
  return (l > 0) - (l < 0);
}

std::string QPoly::str(const std::string& var) const {
  if (den == 1) return num.str(var);
  return "(" + num.str(var) + ")/" + std::to_string(den);
}

}  // namespace dlrep
