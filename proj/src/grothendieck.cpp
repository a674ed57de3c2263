#include "dlrep/grothendieck.hpp"

#include <algorithm>
#include <sstream>

namespace dlrep {

int CharacterBasis::index_of(const std::string& label) const {
  for (size_t i = 0; i < chars.size(); ++i)
    if (chars[i].label == label) return static_cast<int>(i);
  return -1;
}

bool CharacterBasis::sorted_by_a() const {
  for (size_t i = 1; i < chars.size(); ++i)
    if (chars[i].a_value < chars[i - 1].a_value) return false;
  return true;
}

void CharacterBasis::sort_by_a() {
  std::stable_sort(chars.begin(), chars.end(),
                   [](const CharacterInfo& x, const CharacterInfo& y) {
                     return x.a_value < y.a_value;
                   });
}

// ---- MExpr ---------------------------------------------------------------

MExpr MExpr::constant(i64 v) {
  MExpr e;
  if (v != 0) e.terms_[{}] = v;
  return e;
}

MExpr MExpr::var(const std::string& name) {
  MExpr e;
  e.terms_[{name}] = 1;
  return e;
}

bool MExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

i64 MExpr::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw data_error("MExpr::constant_value: expression has unknowns: " + str());
  return terms_.begin()->second;
}

void MExpr::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

MExpr MExpr::operator+(const MExpr& o) const {
  MExpr r = *this;
  for (const auto& [vars, coef] : o.terms_) r.terms_[vars] += coef;
  r.prune();
  return r;
}

MExpr MExpr::operator-(const MExpr& o) const { return *this + (-o); }

MExpr MExpr::operator-() const {
  MExpr r = *this;
  for (auto& [vars, coef] : r.terms_) coef = -coef;
  return r;
}

MExpr MExpr::operator*(const MExpr& o) const {
  MExpr r;
  for (const auto& [va, ca] : terms_)
    for (const auto& [vb, cb] : o.terms_) {
      std::vector<std::string> merged;
      merged.reserve(va.size() + vb.size());
      std::merge(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(merged));
      for (size_t i = 1; i < merged.size(); ++i)
        if (merged[i] == merged[i - 1])
          throw data_error("MExpr: repeated unknown '" + merged[i] +
                           "' in product; expressions must stay multilinear");
      r.terms_[merged] += checked_mul(ca, cb);
    }
  r.prune();
  return r;
}

MExpr MExpr::operator*(i64 s) const {
  MExpr r = *this;
  for (auto& [vars, coef] : r.terms_) coef = checked_mul(coef, s);
  r.prune();
  return r;
}

std::set<std::string> MExpr::variables() const {
  std::set<std::string> out;
  for (const auto& [vars, coef] : terms_) out.insert(vars.begin(), vars.end());
  return out;
}

MExpr MExpr::substitute(const std::string& name, i64 value) const {
  MExpr r;
  for (const auto& [vars, coef] : terms_) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) {
      r.terms_[vars] += coef;
    } else {
      std::vector<std::string> rest;
      for (const auto& v : vars)
        if (v != name) rest.push_back(v);
      r.terms_[rest] += checked_mul(coef, value);
    }
  }
  r.prune();
  return r;
}

i64 MExpr::evaluate(const std::map<std::string, i64>& assignment) const {
  i64 total = 0;
  for (const auto& [vars, coef] : terms_) {
    i64 t = coef;
    for (const auto& v : vars) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw data_error("MExpr::evaluate: no value for unknown '" + v + "'");
      t = checked_mul(t, it->second);
    }
    total += t;
  }
  return total;
}

std::pair<MExpr, MExpr> MExpr::split(const std::string& name) const {
  MExpr b, c;
  for (const auto& [vars, coef] : terms_) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) {
      b.terms_[vars] += coef;
    } else {
      std::vector<std::string> rest;
      for (const auto& v : vars)
        if (v != name) rest.push_back(v);
      c.terms_[rest] += coef;
    }
  }
  b.prune();
  c.prune();
  return {b, c};
}

std::string MExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [vars, coef] : terms_) {
    i64 mag = coef < 0 ? -coef : coef;
    if (first) {
      if (coef < 0) os << "-";
    } else {
      os << (coef < 0 ? " - " : " + ");
    }
    first = false;
    if (vars.empty() || mag != 1) os << mag;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (i > 0 || mag != 1) os << "*";
      os << vars[i];
    }
  }
  return os.str();
}

Interval eval_interval(const MExpr& e, const std::map<std::string, Interval>& box) {
  std::set<std::string> var_set = e.variables();
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  if (vars.size() > 16) throw data_error("eval_interval: too many unknowns in one expression");
  i64 lo = 0, hi = 0;
  bool any = false;
  size_t corners = size_t{1} << vars.size();
  for (size_t mask = 0; mask < corners; ++mask) {
    std::map<std::string, i64> a;
    for (size_t k = 0; k < vars.size(); ++k) {
      auto it = box.find(vars[k]);
      if (it == box.end()) throw data_error("eval_interval: no interval for '" + vars[k] + "'");
      a[vars[k]] = (mask >> k) & 1 ? it->second.hi : it->second.lo;
    }
    i64 v = e.evaluate(a);
    if (!any || v < lo) lo = v;
    if (!any || v > hi) hi = v;
    any = true;
  }
  return {lo, hi};
}

// ---- DecompositionMatrix -------------------------------------------------

DecompositionMatrix::DecompositionMatrix(std::string name, std::vector<std::string> rows,
                                         std::vector<std::string> cols,
                                         std::vector<std::vector<MatrixEntry>> entries,
                                         std::map<std::string, Interval> unknowns)
    : state_(std::move(unknowns)) {
  if (entries.size() != rows.size())
    throw data_error("DecompositionMatrix: row count mismatch in " + name);
  for (const auto& r : entries)
    if (r.size() != cols.size())
      throw data_error("DecompositionMatrix: column count mismatch in " + name);
  std::set<std::string> used;
  for (const auto& r : entries)
    for (const auto& e : r)
      if (!e.known) {
        if (!used.insert(e.unknown).second)
          throw data_error("DecompositionMatrix: unknown '" + e.unknown +
                           "' used in more than one cell of " + name);
        if (!state_.count(e.unknown))
          throw data_error("DecompositionMatrix: unknown '" + e.unknown +
                           "' has no interval in " + name);
      }
  auto s = std::make_shared<Structure>();
  s->name = std::move(name);
  s->rows = std::move(rows);
  s->cols = std::move(cols);
  s->entries = std::move(entries);
  structure_ = std::move(s);
}

const std::string& DecompositionMatrix::name() const { return structure_->name; }
const std::vector<std::string>& DecompositionMatrix::rows() const { return structure_->rows; }
const std::vector<std::string>& DecompositionMatrix::cols() const { return structure_->cols; }

const MatrixEntry& DecompositionMatrix::entry(size_t r, size_t c) const {
  return structure_->entries.at(r).at(c);
}

MExpr DecompositionMatrix::entry_expr(size_t r, size_t c) const {
  const MatrixEntry& e = entry(r, c);
  if (e.known) return MExpr::constant(e.value);
  const Interval& iv = interval(e.unknown);
  if (iv.collapsed()) return MExpr::constant(iv.lo);
  return MExpr::var(e.unknown);
}

const Interval& DecompositionMatrix::interval(const std::string& name) const {
  auto it = state_.find(name);
  if (it == state_.end())
    throw data_error("DecompositionMatrix: no unknown named '" + name + "'");
  return it->second;
}

void DecompositionMatrix::set_interval(const std::string& name, Interval v) {
  auto it = state_.find(name);
  if (it == state_.end())
    throw data_error("DecompositionMatrix: no unknown named '" + name + "'");
  if (v.lo > v.hi)
    throw infeasible_error("interval of '" + name + "' became empty");
  it->second = v;
}

std::optional<i64> DecompositionMatrix::known_value(size_t r, size_t c) const {
  const MatrixEntry& e = entry(r, c);
  if (e.known) return e.value;
  const Interval& iv = interval(e.unknown);
  if (iv.collapsed()) return iv.lo;
  return std::nullopt;
}

bool DecompositionMatrix::fully_determined() const {
  for (const auto& [name, iv] : state_)
    if (!iv.collapsed()) return false;
  return true;
}

std::vector<std::vector<i64>> DecompositionMatrix::values() const {
  std::vector<std::vector<i64>> out(rows().size(), std::vector<i64>(cols().size(), 0));
  for (size_t r = 0; r < rows().size(); ++r)
    for (size_t c = 0; c < cols().size(); ++c) {
      auto v = known_value(r, c);
      if (!v) throw data_error("DecompositionMatrix::values: entry (" + rows()[r] + ", " +
                               cols()[c] + ") is undetermined");
      out[r][c] = *v;
    }
  return out;
}

bool DecompositionMatrix::is_unitriangular() const {
  if (rows().size() != cols().size()) return false;
  for (size_t r = 0; r < rows().size(); ++r)
    for (size_t c = 0; c < cols().size(); ++c) {
      auto v = known_value(r, c);
      if (r == c && !(v && *v == 1)) return false;
      if (c > r && !(v && *v == 0)) return false;
    }
  return true;
}

// ---- Lattice maps --------------------------------------------------------

i64 pair(const std::vector<i64>& a, const std::vector<i64>& b) {
  if (a.size() != b.size()) throw data_error("pair: basis size mismatch");
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += checked_mul(a[i], b[i]);
  return s;
}

std::vector<MExpr> e_map(const DecompositionMatrix& D, const std::vector<i64>& p) {
  if (p.size() != D.cols().size()) throw data_error("e_map: column count mismatch");
  std::vector<MExpr> out(D.rows().size());
  for (size_t r = 0; r < D.rows().size(); ++r) {
    MExpr s;
    for (size_t c = 0; c < D.cols().size(); ++c)
      if (p[c] != 0) s = s + D.entry_expr(r, c) * p[c];
    out[r] = s;
  }
  return out;
}

std::vector<MExpr> d_map(const DecompositionMatrix& D, const std::vector<i64>& c) {
  if (c.size() != D.rows().size()) throw data_error("d_map: row count mismatch");
  std::vector<MExpr> out(D.cols().size());
  for (size_t j = 0; j < D.cols().size(); ++j) {
    MExpr s;
    for (size_t r = 0; r < D.rows().size(); ++r)
      if (c[r] != 0) s = s + D.entry_expr(r, j) * c[r];
    out[j] = s;
  }
  return out;
}

std::vector<MExpr> expand_in_pims(const DecompositionMatrix& D, const std::vector<i64>& c) {
  size_t n = D.rows().size();
  if (D.cols().size() != n) throw data_error("expand_in_pims: matrix must be square");
  if (c.size() != n) throw data_error("expand_in_pims: vector length mismatch");
  // Unit diagonal and zeros above are required for back-substitution.
  for (size_t r = 0; r < n; ++r) {
    auto diag = D.known_value(r, r);
    if (!diag || *diag != 1)
      throw data_error("expand_in_pims: diagonal of " + D.name() + " is not known 1");
    for (size_t j = r + 1; j < n; ++j) {
      auto v = D.known_value(r, j);
      if (!v || *v != 0)
        throw data_error("expand_in_pims: " + D.name() + " is not unitriangular");
    }
  }
  std::vector<MExpr> x(n);
  for (size_t r = 0; r < n; ++r) {
    MExpr s = MExpr::constant(c[r]);
    for (size_t j = 0; j < r; ++j) s = s - D.entry_expr(r, j) * x[j];
    x[r] = s;
  }
  return x;
}

ConeResult cone_class(const DecompositionMatrix& D, const std::vector<i64>& c) {
  size_t nrows = D.rows().size(), ncols = D.cols().size();
  if (c.size() != nrows) throw data_error("cone_class: vector length mismatch");
  // Locate pivot rows: first nonzero entry of each column must be a known 1,
  // strictly below the previous pivot.
  std::vector<size_t> pivot(ncols);
  size_t prev = 0;
  bool have_prev = false;
  for (size_t j = 0; j < ncols; ++j) {
    size_t r = have_prev ? prev + 1 : 0;
    bool found = false;
    for (; r < nrows && !found; ++r) {
      auto v = D.known_value(r, j);
      if (v && *v == 0) continue;
      if (v && *v == 1) {
        pivot[j] = r;
        found = true;
        break;
      }
      throw data_error("cone_class: column " + D.cols()[j] + " has no unit pivot");
    }
    if (!found) throw data_error("cone_class: column " + D.cols()[j] + " has no pivot row");
    // Entries above the pivot in this column must be known zero.
    for (size_t rr = 0; rr < pivot[j]; ++rr) {
      auto v = D.known_value(rr, j);
      if (!(v && *v == 0))
        throw data_error("cone_class: nonzero entry above pivot in column " + D.cols()[j]);
    }
    prev = pivot[j];
    have_prev = true;
  }

  // Solve at the pivots, then test the remaining rows.
  std::vector<MExpr> x(ncols);
  for (size_t j = 0; j < ncols; ++j) {
    MExpr s = MExpr::constant(c[pivot[j]]);
    for (size_t k = 0; k < j; ++k) s = s - D.entry_expr(pivot[j], k) * x[k];
    x[j] = s;
  }
  ConeResult res;
  res.coeffs = x;

  std::set<size_t> pivot_set(pivot.begin(), pivot.end());
  bool undetermined = false;
  for (size_t r = 0; r < nrows; ++r) {
    if (pivot_set.count(r)) continue;
    MExpr resid = MExpr::constant(c[r]);
    for (size_t j = 0; j < ncols; ++j) resid = resid - D.entry_expr(r, j) * x[j];
    if (resid.is_constant()) {
      if (resid.constant_value() != 0) {
        res.status = ConeResult::outside_span;
        return res;
      }
    } else {
      Interval iv = eval_interval(resid, D.unknowns());
      if (iv.lo > 0 || iv.hi < 0) {
        res.status = ConeResult::outside_span;
        return res;
      }
      undetermined = true;
    }
  }
  for (const auto& coeff : x) {
    if (coeff.is_constant()) {
      if (coeff.constant_value() < 0) {
        res.status = ConeResult::outside_negative;
        return res;
      }
    } else {
      Interval iv = eval_interval(coeff, D.unknowns());
      if (iv.hi < 0) {
        res.status = ConeResult::outside_negative;
        return res;
      }
      if (iv.lo < 0) undetermined = true;
    }
  }
  res.status = undetermined ? ConeResult::undetermined : ConeResult::inside;
  return res;
}

}  // namespace dlrep
