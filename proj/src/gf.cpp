#include "dlrep/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dlrep {

namespace {

constexpr i64 kTableCap = i64(1) << 20;

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over F_p, coefficient of x^i at index i.  Used only
// while building the tables; runtime arithmetic never touches these.
using FpPoly = std::vector<i64>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& f, i64 p) {
  // f is monic of degree k; the result has degree < k.
  const int k = int(f.size()) - 1;
  std::vector<i64> prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int d = int(prod.size()) - 1; d >= k; --d) {
    const i64 c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i)
      prod[d - k + i] = ((prod[d - k + i] - c * f[i]) % p + p) % p;
  }
  prod.resize(k);
  fp_trim(prod);
  return prod;
}

FpPoly fp_pow_mod(FpPoly base, i64 e, const FpPoly& f, i64 p) {
  FpPoly r{1};
  while (e > 0) {
    if (e & 1) r = fp_mul_mod(r, base, f, p);
    base = fp_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& b, i64 p) {
  const i64 lead = b.back();
  i64 lead_inv = 1;
  for (i64 t = 1; t < p; ++t)
    if (lead * t % p == 1) { lead_inv = t; break; }
  fp_trim(a);
  while (a.size() >= b.size()) {
    const i64 c = a.back() * lead_inv % p;
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    fp_trim(a);
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, i64 p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

bool fp_irreducible(const FpPoly& f, i64 p, int k) {
  if (k == 1) return true;
  // x^(p^k) must equal x mod f, and for every prime l dividing k the
  // polynomial x^(p^(k/l)) - x must be coprime to f.
  const FpPoly x{0, 1};
  FpPoly frob = x;  // x^(p^i) mod f
  std::vector<FpPoly> steps(k + 1);
  steps[0] = x;
  for (int i = 1; i <= k; ++i) {
    frob = fp_pow_mod(frob, p, f, p);
    steps[i] = frob;
  }
  if (steps[k] != x) return false;
  for (i64 l : prime_factors(k)) {
    FpPoly diff = steps[k / l];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    fp_trim(diff);
    FpPoly g = fp_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

i64 pack(const FpPoly& a, i64 p, int k) {
  i64 v = 0;
  for (int i = k - 1; i >= 0; --i)
    v = v * p + (i < int(a.size()) ? a[i] : 0);
  return v;
}

FpPoly unpack(i64 v, i64 p, int k) {
  FpPoly a(k, 0);
  for (int i = 0; i < k; ++i) {
    a[i] = v % p;
    v /= p;
  }
  fp_trim(a);
  return a;
}

i64 packed_add(i64 a, i64 b, i64 p, int k) {
  i64 out = 0, mult = 1;
  for (int i = 0; i < k; ++i) {
    out += (a % p + b % p) % p * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return out;
}

}  // namespace

GF::GF(i64 p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw data_error("GF: characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw data_error("GF: extension degree must be positive");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > kTableCap)
      throw cap_exceeded_error("GF: field size exceeds table budget 2^20");
  }

  // Find a monic irreducible polynomial of degree k over F_p.
  FpPoly f;
  for (i64 tail = 0;; ++tail) {
    if (tail >= q_) throw data_error("GF: no irreducible polynomial found");
    f = unpack(tail, p, k);
    f.resize(k + 1, 0);
    f[k] = 1;
    if (fp_irreducible(f, p, k)) break;
  }

  // Find a generator of the multiplicative group of the quotient.
  const std::vector<i64> ell = prime_factors(q_ - 1);
  i64 gen_packed = 0;
  for (i64 cand = 1; cand < q_; ++cand) {
    const FpPoly c = unpack(cand, p, k);
    bool ok = true;
    for (i64 l : ell) {
      if (pack(fp_pow_mod(c, (q_ - 1) / l, f, p), p, k) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) { gen_packed = cand; break; }
  }
  if (gen_packed == 0 && q_ > 2) throw data_error("GF: no generator found");
  if (q_ == 2) gen_packed = 1;

  std::vector<i64> exp_table(size_t(q_ - 1), 0);
  std::vector<i64> log_table(size_t(q_), -1);
  const FpPoly g = unpack(gen_packed, p, k);
  FpPoly cur{1};
  for (i64 i = 0; i < q_ - 1; ++i) {
    const i64 packed = pack(cur, p, k);
    exp_table[size_t(i)] = packed;
    log_table[size_t(packed)] = i;
    cur = fp_mul_mod(cur, g, f, p);
  }
  if (pack(cur, p, k) != 1) throw data_error("GF: generator order mismatch");

  zech_.assign(size_t(q_ - 1), -1);
  for (i64 d = 0; d < q_ - 1; ++d) {
    const i64 s = packed_add(exp_table[size_t(d)], 1, p, k);
    zech_[size_t(d)] = (s == 0) ? -1 : log_table[size_t(s)];
  }
  minus_log_ = (p == 2) ? 0 : (q_ - 1) / 2;
}

GF::elem GF::add(elem a, elem b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  i64 la = a - 1, lb = b - 1;
  if (la > lb) std::swap(la, lb);
  const i64 z = zech_[size_t(lb - la)];
  if (z < 0) return 0;
  return 1 + (la + z) % (q_ - 1);
}

GF::elem GF::neg(elem a) const {
  if (a == 0) return 0;
  return 1 + (a - 1 + minus_log_) % (q_ - 1);
}

GF::elem GF::mul(elem a, elem b) const {
  if (a == 0 || b == 0) return 0;
  return 1 + (a - 1 + b - 1) % (q_ - 1);
}

GF::elem GF::inv(elem a) const {
  if (a == 0) throw data_error("GF: inverse of zero");
  return 1 + (q_ - 1 - (a - 1)) % (q_ - 1);
}

GF::elem GF::pow(elem a, i64 e) const {
  if (a == 0) {
    if (e < 0) throw data_error("GF: negative power of zero");
    return e == 0 ? one() : zero();
  }
  i64 r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return 1 + (a - 1) * r % (q_ - 1);
}

}  // namespace dlrep
