#include "dlrep/lefschetz.hpp"

#include <algorithm>
#include <sstream>

#include "dlrep/gf.hpp"

namespace dlrep {

namespace {

constexpr i64 kEnumBudget = 100000000;  // 10^8 enumerated tuples

// Smallest prime factor; used to recognize prime powers.
i64 smallest_prime(i64 n) {
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

struct PrimePower {
  i64 p;
  int k;
};

PrimePower as_prime_power(i64 q) {
  if (q < 2) throw data_error("field size must be at least 2");
  const i64 p = smallest_prime(q);
  int k = 0;
  i64 m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1)
    throw data_error("field size " + std::to_string(q) + " is not a prime power");
  return {p, k};
}

}  // namespace

void CellVariety::check() const {
  for (const Cell& c : cells) {
    if (c.affine_dim < 0 || c.torus_rank < 0)
      throw data_error("cell with negative dimension in '" + name + "'");
  }
}

int CellVariety::dimension() const {
  int d = 0;
  for (const Cell& c : cells) d = std::max(d, c.affine_dim + c.torus_rank);
  return d;
}

void GradedClass::add(int degree, i64 rank, int twist) {
  if (rank == 0) return;
  auto pos = std::lower_bound(
      entries.begin(), entries.end(), std::make_pair(degree, twist),
      [](const ClassEntry& e, const std::pair<int, int>& key) {
        return std::make_pair(e.degree, e.twist) < key;
      });
  if (pos != entries.end() && pos->degree == degree && pos->twist == twist) {
    pos->rank += rank;
    if (pos->rank == 0) entries.erase(pos);
  } else {
    entries.insert(pos, ClassEntry{degree, rank, twist});
  }
}

void GradedClass::normalize() {
  GradedClass out;
  for (const ClassEntry& e : entries) out.add(e.degree, e.rank, e.twist);
  entries = std::move(out.entries);
}

std::string GradedClass::str() const {
  if (entries.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const ClassEntry& e : entries) {
    if (!first) os << " + ";
    first = false;
    os << "H^" << e.degree << "(rank " << e.rank << ", twist " << e.twist << ")";
  }
  return os.str();
}

GradedClass convolve(const GradedClass& a, const GradedClass& b) {
  GradedClass out;
  for (const ClassEntry& x : a.entries)
    for (const ClassEntry& y : b.entries)
      out.add(x.degree + y.degree, checked_mul(x.rank, y.rank), x.twist + y.twist);
  return out;
}

GradedClass cell_classes(const Cell& c) {
  if (c.affine_dim < 0 || c.torus_rank < 0)
    throw data_error("cell with negative dimension");
  const int a = c.affine_dim, t = c.torus_rank;
  GradedClass out;
  i64 binom = 1;
  for (int k = 0; k <= t; ++k) {
    out.add(2 * a + t + k, binom, a + k);
    binom = binom * (t - k) / (k + 1);
  }
  return out;
}

GradedClass hc_classes(const CellVariety& v) {
  v.check();
  std::vector<GradedClass> per_cell;
  per_cell.reserve(v.cells.size());
  for (const Cell& c : v.cells) per_cell.push_back(cell_classes(c));

  for (size_t i = 0; i < per_cell.size(); ++i) {
    for (size_t j = i + 1; j < per_cell.size(); ++j) {
      for (const ClassEntry& x : per_cell[i].entries) {
        for (const ClassEntry& y : per_cell[j].entries) {
          if (x.twist == y.twist && std::abs(x.degree - y.degree) == 1) {
            const int lo = std::min(x.degree, y.degree);
            throw data_error(
                "splitting not guaranteed: different strata contribute twist " +
                std::to_string(x.twist) + " in adjacent degrees " +
                std::to_string(lo) + " and " + std::to_string(lo + 1));
          }
        }
      }
    }
  }

  GradedClass out;
  for (const GradedClass& g : per_cell)
    for (const ClassEntry& e : g.entries) out.add(e.degree, e.rank, e.twist);
  return out;
}

Poly point_count_poly(const CellVariety& v) {
  v.check();
  const Poly q_minus_1(std::vector<i64>{-1, 1});
  Poly total;
  for (const Cell& c : v.cells) {
    Poly term = Poly::monomial(1, unsigned(c.affine_dim));
    for (int i = 0; i < c.torus_rank; ++i) term = term * q_minus_1;
    total = total + term;
  }
  return total;
}

i64 point_count(const CellVariety& v, i64 q, int n) {
  if (q < 2) throw data_error("point counts need q >= 2");
  if (n < 1) throw data_error("point counts need n >= 1");
  return point_count_poly(v).eval(checked_pow(q, unsigned(n)));
}

LefschetzReport lefschetz_check(const CellVariety& v, i64 q, int max_n) {
  const GradedClass classes = hc_classes(v);
  LefschetzReport rep;
  for (int n = 1; n <= max_n; ++n) {
    const i64 qn = checked_pow(q, unsigned(n));
    i64 traced = 0;
    for (const ClassEntry& e : classes.entries) {
      const i64 term = checked_mul(e.rank, checked_pow(qn, unsigned(e.twist)));
      traced += (e.degree % 2 == 0) ? term : -term;
    }
    const i64 counted = point_count(v, q, n);
    if (traced != counted) {
      rep.ok = false;
      rep.witness_n = n;
      rep.counted = counted;
      rep.traced = traced;
      return rep;
    }
  }
  return rep;
}

i64 euler_characteristic(const CellVariety& v) {
  return point_count_poly(v).eval(1);
}

GradedClass dual_class(const CellVariety& v) {
  if (!v.smooth || !v.pure_dimension)
    throw data_error("duality needs the smooth and pure-dimension flags on '" +
                     v.name + "'");
  const int d = v.dimension();
  const GradedClass classes = hc_classes(v);
  GradedClass out;
  for (const ClassEntry& e : classes.entries)
    out.add(2 * d - e.degree, e.rank, d - e.twist);
  return out;
}

bool duality_check(const CellVariety& v) {
  if (!v.projective)
    throw data_error("duality comparison needs the projective flag on '" +
                     v.name + "'");
  return dual_class(v) == hc_classes(v);
}

CellVariety product(const CellVariety& a, const CellVariety& b) {
  CellVariety out;
  out.name = a.name + " x " + b.name;
  out.smooth = a.smooth && b.smooth;
  out.pure_dimension = a.pure_dimension && b.pure_dimension;
  out.projective = a.projective && b.projective;
  for (const Cell& x : a.cells)
    for (const Cell& y : b.cells)
      out.cells.push_back(Cell{x.affine_dim + y.affine_dim, x.torus_rank + y.torus_rank});
  return out;
}

CellVariety point_variety() {
  return CellVariety{"point", {Cell{0, 0}}, true, true, true};
}

CellVariety affine_space(int n) {
  if (n < 0) throw data_error("affine space of negative dimension");
  return CellVariety{"A^" + std::to_string(n), {Cell{n, 0}}, true, true, false};
}

CellVariety torus(int rank) {
  if (rank < 0) throw data_error("torus of negative rank");
  return CellVariety{"G_m^" + std::to_string(rank), {Cell{0, rank}}, true, true, false};
}

CellVariety projective_space(int n) {
  if (n < 0) throw data_error("projective space of negative dimension");
  CellVariety out{"P^" + std::to_string(n), {}, true, true, true};
  for (int k = 0; k <= n; ++k) out.cells.push_back(Cell{k, 0});
  return out;
}

DrinfeldCount brute_force_drinfeld(i64 q, int n) {
  if (n < 1) throw data_error("extension degree must be positive");
  const PrimePower pp = as_prime_power(q);
  const i64 pairs = checked_pow(q, unsigned(2 * n));
  if (pairs > kEnumBudget)
    throw cap_exceeded_error("enumeration budget exceeded: q^(2n) > 10^8");

  const GF F(pp.p, pp.k * n);
  const i64 Q = F.size();
  // x |-> x^q is the q-power Frobenius on F_{q^n}; table it once.
  std::vector<GF::elem> frob(static_cast<size_t>(Q));
  for (i64 x = 0; x < Q; ++x) frob[size_t(x)] = F.pow(x, q);

  DrinfeldCount out;
  const GF::elem one = F.one();
  for (i64 x = 0; x < Q; ++x) {
    const GF::elem fx = frob[size_t(x)];
    for (i64 y = 0; y < Q; ++y) {
      const GF::elem det = F.sub(F.mul(x, frob[size_t(y)]), F.mul(y, fx));
      if (det == one) ++out.solution_count;
    }
  }
  // [x:y] with x = 1 covers every point except [0:1], where the determinant
  // vanishes anyway; det(1, y) = y^q - y.
  for (i64 y = 0; y < Q; ++y)
    if (frob[size_t(y)] != y) ++out.projective_count;
  return out;
}

i64 gl_coxeter_points(int dim, i64 q, int n) {
  if (dim < 1) throw data_error("projective coordinates need dim >= 1");
  if (n < 1) throw data_error("extension degree must be positive");
  const PrimePower pp = as_prime_power(q);
  const i64 tuples = checked_pow(q, unsigned(dim * n));
  if (tuples > kEnumBudget)
    throw cap_exceeded_error("enumeration budget exceeded: q^(dim*n) > 10^8");

  const GF F(pp.p, pp.k * n);
  const i64 Q = F.size();
  std::vector<GF::elem> frob(static_cast<size_t>(Q));
  for (i64 x = 0; x < Q; ++x) frob[size_t(x)] = F.pow(x, q);

  const size_t d = size_t(dim);
  std::vector<GF::elem> x(d);
  std::vector<std::vector<GF::elem>> m(d, std::vector<GF::elem>(d));
  i64 count = 0;

  // Projective representatives: leading zeros, then 1, then free coordinates.
  for (int lead = 0; lead < dim; ++lead) {
    const int free = dim - 1 - lead;
    const i64 total = checked_pow(Q, unsigned(free));
    for (i64 idx = 0; idx < total; ++idx) {
      for (int i = 0; i < lead; ++i) x[size_t(i)] = F.zero();
      x[size_t(lead)] = F.one();
      i64 rest = idx;
      for (int i = lead + 1; i < dim; ++i) {
        x[size_t(i)] = rest % Q;
        rest /= Q;
      }
      // Moore matrix m[i][j] = x_i^(q^j).
      for (int i = 0; i < dim; ++i) {
        GF::elem v = x[size_t(i)];
        for (int j = 0; j < dim; ++j) {
          m[size_t(i)][size_t(j)] = v;
          v = frob[size_t(v)];
        }
      }
      // Row reduce; the determinant is nonzero exactly when full rank.
      bool singular = false;
      for (int col = 0; col < dim && !singular; ++col) {
        int pivot = -1;
        for (int row = col; row < dim; ++row)
          if (!F.is_zero(m[size_t(row)][size_t(col)])) { pivot = row; break; }
        if (pivot < 0) { singular = true; break; }
        std::swap(m[size_t(col)], m[size_t(pivot)]);
        const GF::elem inv = F.inv(m[size_t(col)][size_t(col)]);
        for (int row = col + 1; row < dim; ++row) {
          const GF::elem factor = F.mul(m[size_t(row)][size_t(col)], inv);
          if (F.is_zero(factor)) continue;
          for (int cc = col; cc < dim; ++cc)
            m[size_t(row)][size_t(cc)] = F.sub(
                m[size_t(row)][size_t(cc)], F.mul(factor, m[size_t(col)][size_t(cc)]));
        }
      }
      if (!singular) ++count;
    }
  }
  return count;
}

namespace {

// Gaussian binomial coefficient [m choose k]_q as an exact integer.
i64 gaussian_binomial(int m, int k, i64 q) {
  if (k < 0 || k > m) return 0;
  i64 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num = checked_mul(num, checked_pow(q, unsigned(m - i)) - 1);
    den = checked_mul(den, checked_pow(q, unsigned(k - i)) - 1);
  }
  if (num % den != 0) throw data_error("gaussian binomial not integral");
  return num / den;
}

}  // namespace

i64 gl_coxeter_prediction(int dim, i64 q, int n) {
  if (dim < 1) throw data_error("projective coordinates need dim >= 1");
  const int r = dim - 1;
  i64 total = 0;
  for (int j = 0; j <= r; ++j) {
    const int k = r - j;  // hook leg length at cohomological offset j
    const i64 degree = checked_mul(checked_pow(q, unsigned(k * (k + 1) / 2)),
                                   gaussian_binomial(r, k, q));
    const i64 term = checked_mul(checked_pow(q, unsigned(n * j)), degree);
    total += ((r + j) % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace dlrep
