#include "dlrep/decsolver.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace dlrep {

namespace {

constexpr i64 kNoBound = std::numeric_limits<i64>::max();

i64 floor_div(i64 a, i64 b) {  // b > 0
  i64 q = a / b, r = a % b;
  return (r != 0 && a < 0) ? q - 1 : q;
}

i64 ceil_div(i64 a, i64 b) {  // b > 0
  i64 q = a / b, r = a % b;
  return (r != 0 && a > 0) ? q + 1 : q;
}

std::string interval_str(const Interval& v) {
  std::ostringstream os;
  os << '[' << v.lo << ',' << v.hi << ']';
  return os.str();
}

// Intersects the interval of `cell` with [lo, hi], logging the change.
bool tighten(DecompositionMatrix& M, const std::string& cell, i64 lo, i64 hi,
             const std::string& rule, const std::string& reason,
             DeductionLog& log) {
  Interval cur = M.interval(cell);
  Interval next{std::max(cur.lo, lo), std::min(cur.hi, hi)};
  if (next.lo > next.hi)
    throw infeasible_error("constraint \"" + reason + "\" empties the interval " +
                           interval_str(cur) + " of '" + cell + "'");
  if (next == cur) return false;
  M.set_interval(cell, next);
  log.entries.push_back({rule, cell, cur, next, reason});
  return true;
}

MExpr substituted(const DecompositionMatrix& M, MExpr e) {
  for (const auto& v : e.variables()) {
    const Interval& iv = M.interval(v);
    if (iv.collapsed()) e = e.substitute(v, iv.lo);
  }
  return e;
}

std::map<std::string, Interval> box_of(const DecompositionMatrix& M,
                                       const MExpr& e) {
  std::map<std::string, Interval> box;
  for (const auto& v : e.variables()) box[v] = M.interval(v);
  return box;
}

// Best bounds on x implied by B + C x >= 0 as the other unknowns range over
// the box.  Both bounds of the ratio -B/C sit at corners of the box: B and C
// are multilinear, so C keeps one sign on the whole box whenever it does on
// the corners, and -B/C restricted to one coordinate is a Moebius function,
// monotone between corner values.  Mixed signs of C yield nothing.
struct RatioBound {
  bool has_lo = false, has_hi = false;
  i64 lo = 0, hi = 0;
};

RatioBound ratio_bound(const MExpr& B, const MExpr& C,
                       const std::map<std::string, Interval>& box) {
  std::vector<std::string> vars;
  {
    auto bv = B.variables();
    auto cv = C.variables();
    bv.insert(cv.begin(), cv.end());
    vars.assign(bv.begin(), bv.end());
  }
  RatioBound out;
  if (vars.size() > 20) return out;  // never reached by the bundled data
  size_t corners = size_t{1} << vars.size();
  bool all_pos = true, all_neg = true;
  bool have_min = false, have_max = false;
  i64 min_n = 0, min_d = 1, max_n = 0, max_d = 1;  // ratios n/d with d > 0
  for (size_t mask = 0; mask < corners; ++mask) {
    std::map<std::string, i64> at;
    for (size_t k = 0; k < vars.size(); ++k) {
      const Interval& iv = box.at(vars[k]);
      at[vars[k]] = ((mask >> k) & 1) ? iv.hi : iv.lo;
    }
    i64 b = B.evaluate(at), c = C.evaluate(at);
    if (c > 0) all_neg = false;
    else if (c < 0) all_pos = false;
    else return out;  // C can vanish: no division possible
    // x >= -b/c when c > 0, x <= -b/c when c < 0; normalize denominator.
    i64 n = (c > 0) ? -b : b;
    i64 d = (c > 0) ? c : -c;
    if (!have_min || i128(n) * min_d < i128(min_n) * d) {
      min_n = n;
      min_d = d;
      have_min = true;
    }
    if (!have_max || i128(n) * max_d > i128(max_n) * d) {
      max_n = n;
      max_d = d;
      have_max = true;
    }
  }
  if (all_pos) {
    // x >= -B/C pointwise, hence x >= the smallest corner ratio.
    out.has_lo = true;
    out.lo = ceil_div(min_n, min_d);
  } else if (all_neg) {
    out.has_hi = true;
    out.hi = floor_div(max_n, max_d);
  }
  return out;
}

// Imposes E >= 0, narrowing intervals until nothing more follows.
bool constrain_nonneg(DecompositionMatrix& M, const MExpr& raw,
                      const std::string& rule, const std::string& reason,
                      DeductionLog& log) {
  bool changed = false;
  for (;;) {
    MExpr e = substituted(M, raw);
    if (e.is_constant()) {
      if (e.constant_value() < 0)
        throw infeasible_error("constraint \"" + reason + "\" evaluates to " +
                               std::to_string(e.constant_value()));
      return changed;
    }
    auto box = box_of(M, e);
    Interval range = eval_interval(e, box);
    if (range.hi < 0)
      throw infeasible_error("constraint \"" + reason +
                             "\" is negative on the whole box, at most " +
                             std::to_string(range.hi));
    if (range.lo >= 0) return changed;  // already satisfied everywhere
    bool stepped = false;
    for (const auto& x : e.variables()) {
      auto [B, C] = e.split(x);
      std::map<std::string, Interval> others = box;
      others.erase(x);
      RatioBound rb = ratio_bound(B, C, others);
      if (rb.has_lo && tighten(M, x, rb.lo, kNoBound, rule, reason, log)) {
        stepped = changed = true;
        break;  // refresh substitution and box before the next variable
      }
      if (rb.has_hi && tighten(M, x, std::numeric_limits<i64>::min(), rb.hi,
                               rule, reason, log)) {
        stepped = changed = true;
        break;
      }
    }
    if (!stepped) return changed;  // leave the rest to the search
  }
}

i64 key_sign(const RwEntry& e) { return (e.length % 2 == 0) ? 1 : -1; }

std::string display_key(const std::string& key) {
  return key.empty() ? "1" : key;
}

}  // namespace

int DeductionLog::collapse_index(const std::string& cell) const {
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].cell == cell && entries[i].after.collapsed())
      return int(i);
  return -1;
}

std::string DeductionLog::str() const {
  std::ostringstream os;
  for (const auto& e : entries)
    os << e.rule << "  " << e.cell << ": " << interval_str(e.before) << " -> "
       << interval_str(e.after) << "  (" << e.reason << ")\n";
  return os.str();
}

bool apply_hc(SolverProblem& p, DeductionLog& log) {
  bool changed = false;
  const auto& rows = p.matrix.rows();
  const auto& cols = p.matrix.cols();
  for (const auto& hc : p.hc_columns) {
    const std::string rule = (hc.channel == "hecke") ? "Hecke" : "HC";
    if (hc.character.size() != rows.size())
      throw data_error("projective character from \"" + hc.source +
                       "\" has length " + std::to_string(hc.character.size()) +
                       ", expected " + std::to_string(rows.size()));
    for (i64 v : hc.character)
      if (v < 0)
        throw data_error("projective character from \"" + hc.source +
                         "\" has a negative coefficient");
    if (hc.indecomposable) {
      // The input is a single indecomposable projective: by the triangular
      // shape its column index is its first nonzero row, and the whole
      // column is forced.
      size_t j = size_t(hc.column - 1);
      if (j >= cols.size())
        throw data_error("column index " + std::to_string(hc.column) +
                         " out of range for \"" + hc.source + "\"");
      for (size_t r = 0; r < j; ++r)
        if (hc.character[r] != 0)
          throw data_error("indecomposable input \"" + hc.source +
                           "\" is nonzero above its pinned column");
      if (hc.character[j] != 1)
        throw data_error("indecomposable input \"" + hc.source +
                         "\" does not have coefficient 1 on its diagonal row");
      for (size_t r = 0; r < rows.size(); ++r) {
        const MatrixEntry& ent = p.matrix.entry(r, j);
        i64 want = hc.character[r];
        if (ent.known) {
          if (ent.value != want)
            throw infeasible_error("pinned column " + cols[j] + " from \"" +
                                   hc.source + "\" contradicts the fixed entry at row " +
                                   rows[r]);
        } else {
          changed |= tighten(p.matrix, ent.unknown, want, want, rule,
                             "column " + cols[j] + " pinned by " + hc.source,
                             log);
        }
      }
    } else {
      // Expansion coefficients of the character in the columns must all be
      // nonnegative; rerun after any narrowing since the coefficients of
      // later rows depend on entries fixed by earlier ones.
      for (;;) {
        auto coeffs = expand_in_pims(p.matrix, hc.character);
        bool step = false;
        for (size_t r = 0; r < coeffs.size(); ++r)
          step |= constrain_nonneg(p.matrix, coeffs[r], rule,
                                   "coefficient of " + cols[r] +
                                       " in the expansion of " + hc.source,
                                   log);
        changed |= step;
        if (!step) break;
      }
    }
  }
  return changed;
}

bool apply_uni(SolverProblem& p, DeductionLog&) {
  // The triangular shape is carried by the pattern itself; this pass only
  // re-validates that no upstream step damaged it.
  const auto& rows = p.matrix.rows();
  const auto& cols = p.matrix.cols();
  if (rows.size() != cols.size())
    throw data_error("matrix " + p.matrix.name() + " is not square");
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = r; c < cols.size(); ++c) {
      auto v = p.matrix.known_value(r, c);
      if (r == c && !(v && *v == 1))
        throw data_error("matrix " + p.matrix.name() +
                         " lost its unit diagonal at row " + rows[r]);
      if (c > r && !(v && *v == 0))
        throw data_error("matrix " + p.matrix.name() +
                         " has a nonzero entry above the diagonal at row " +
                         rows[r]);
    }
  return false;
}

bool apply_reg(SolverProblem& p, DeductionLog& log) {
  if (!p.reg_enabled) return false;
  bool changed = false;
  const auto& rows = p.matrix.rows();
  const auto& cols = p.matrix.cols();
  for (const auto& key : p.reg_keys) {
    const RwEntry& ent = rw_unipotent(p.rw, key);
    for (size_t j = 0; j < cols.size(); ++j) {
      MExpr ip = MExpr::constant(0);
      for (size_t r = 0; r < rows.size(); ++r)
        ip = ip + p.matrix.entry_expr(r, j) * ent.coeffs[r];
      changed |= constrain_nonneg(
          p.matrix, ip * key_sign(ent), "Reg",
          "signed pairing of column " + cols[j] +
              " with the induction at '" + display_key(key) + "'",
          log);
    }
  }
  return changed;
}

bool apply_dl(SolverProblem& p, DeductionLog& log) {
  bool changed = false;
  const auto& cols = p.matrix.cols();
  // Collapses can turn coefficients identically zero and enlarge the set of
  // fresh (column, representative) pairs, so iterate to a local fixed point.
  for (;;) {
    std::map<std::string, std::vector<MExpr>> coeff;
    for (const auto& key : p.keys) {
      auto c = expand_in_pims(p.matrix, rw_unipotent(p.rw, key).coeffs);
      for (auto& e : c) e = substituted(p.matrix, e);
      coeff[key] = std::move(c);
    }
    bool step = false;
    for (const auto& key : p.keys) {
      const RwEntry& ent = rw_unipotent(p.rw, key);
      for (size_t j = 0; j < cols.size(); ++j) {
        bool fresh = true;
        for (const auto& v : p.smaller.at(key))
          if (!coeff[v][j].is_zero()) {
            fresh = false;
            break;
          }
        if (!fresh) continue;
        step |= constrain_nonneg(
            p.matrix, coeff[key][j] * key_sign(ent), "DL",
            "signed coefficient of " + cols[j] + " in the expansion at '" +
                display_key(key) + "' (length " + std::to_string(ent.length) +
                "), first possible occurrence",
            log);
      }
    }
    changed |= step;
    if (!step) break;
  }
  return changed;
}

bool check_assignment(const SolverProblem& p,
                      const std::map<std::string, i64>& assignment) {
  const auto& rows = p.matrix.rows();
  const auto& cols = p.matrix.cols();
  size_t n = rows.size(), m = cols.size();
  if (n != m) throw data_error("check_assignment needs a square matrix");

  // Numeric matrix; priors come from the problem as given, not from any
  // propagation state.
  std::vector<std::vector<i64>> D(n, std::vector<i64>(m, 0));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < m; ++c) {
      const MatrixEntry& ent = p.matrix.entry(r, c);
      if (ent.known) {
        D[r][c] = ent.value;
      } else {
        auto it = assignment.find(ent.unknown);
        if (it == assignment.end())
          throw data_error("assignment is missing unknown '" + ent.unknown + "'");
        const Interval& prior = p.matrix.interval(ent.unknown);
        if (it->second < prior.lo || it->second > prior.hi) return false;
        D[r][c] = it->second;
      }
    }
  for (size_t r = 0; r < n; ++r) {
    if (D[r][r] != 1) return false;
    for (size_t c = r + 1; c < m; ++c)
      if (D[r][c] != 0) return false;
  }

  // Expansion of a character vector in the columns.
  auto expand = [&](const std::vector<i64>& ch) {
    std::vector<i64> x(m, 0);
    for (size_t r = 0; r < n; ++r) {
      i64 acc = ch[r];
      for (size_t c = 0; c < r; ++c) acc -= D[r][c] * x[c];
      x[r] = acc;
    }
    return x;
  };

  for (const auto& hc : p.hc_columns) {
    if (hc.indecomposable) {
      size_t j = size_t(hc.column - 1);
      for (size_t r = 0; r < n; ++r)
        if (D[r][j] != hc.character[r]) return false;
    } else {
      for (i64 c : expand(hc.character))
        if (c < 0) return false;
    }
  }

  if (p.reg_enabled)
    for (const auto& key : p.reg_keys) {
      const RwEntry& ent = rw_unipotent(p.rw, key);
      for (size_t j = 0; j < m; ++j) {
        i64 ip = 0;
        for (size_t r = 0; r < n; ++r) ip += ent.coeffs[r] * D[r][j];
        if (key_sign(ent) * ip < 0) return false;
      }
    }

  std::map<std::string, std::vector<i64>> pw;
  for (const auto& key : p.keys)
    pw[key] = expand(rw_unipotent(p.rw, key).coeffs);
  for (const auto& key : p.keys) {
    i64 sign = key_sign(rw_unipotent(p.rw, key));
    for (size_t j = 0; j < m; ++j) {
      bool fresh = true;
      for (const auto& v : p.smaller.at(key))
        if (pw[v][j] != 0) {
          fresh = false;
          break;
        }
      // At the first representative where the column can appear, a nonzero
      // coefficient must carry the parity sign (nonzero + correct sign is
      // automatically strict).
      if (fresh && sign * pw[key][j] < 0) return false;
    }
  }
  return true;
}

SolveResult solve(const SolverProblem& input) {
  SolverProblem p = input;  // working copy; the matrix shares its structure
  SolveResult out;
  for (;;) {
    bool changed = false;
    changed |= apply_hc(p, out.log);
    changed |= apply_uni(p, out.log);
    changed |= apply_reg(p, out.log);
    changed |= apply_dl(p, out.log);
    if (!changed) break;
  }
  out.fixpoint = p.matrix;

  // Cells still reaching the cap cannot be enumerated soundly: a solution
  // beyond the cap may exist.
  const auto& rows = p.matrix.rows();
  const auto& cols = p.matrix.cols();
  std::vector<std::string> free_cells;  // row-major order
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) {
      const MatrixEntry& ent = p.matrix.entry(r, c);
      if (ent.known) continue;
      const Interval& iv = p.matrix.interval(ent.unknown);
      if (iv.hi >= p.cap)
        throw cap_exceeded_error("unknown '" + ent.unknown +
                                 "' still reaches the cap " +
                                 std::to_string(p.cap) + " after propagation");
      if (!iv.collapsed()) free_cells.push_back(ent.unknown);
    }

  std::map<std::string, i64> assignment;
  for (const auto& [name, iv] : p.matrix.unknowns())
    if (iv.collapsed()) assignment[name] = iv.lo;

  // Odometer over the free cells, row-major outermost, values ascending.
  std::vector<i64> value(free_cells.size());
  for (size_t k = 0; k < free_cells.size(); ++k)
    value[k] = p.matrix.interval(free_cells[k]).lo;
  for (;;) {
    for (size_t k = 0; k < free_cells.size(); ++k)
      assignment[free_cells[k]] = value[k];
    if (check_assignment(input, assignment)) {
      DecompositionMatrix sol = p.matrix;
      for (size_t k = 0; k < free_cells.size(); ++k)
        sol.set_interval(free_cells[k], {value[k], value[k]});
      out.solutions.push_back(std::move(sol));
    }
    if (free_cells.empty()) break;
    size_t k = free_cells.size();
    while (k > 0) {
      --k;
      if (value[k] < p.matrix.interval(free_cells[k]).hi) {
        ++value[k];
        for (size_t j = k + 1; j < free_cells.size(); ++j)
          value[j] = p.matrix.interval(free_cells[j]).lo;
        break;
      }
      if (k == 0) {
        k = SIZE_MAX;
        break;
      }
    }
    if (k == SIZE_MAX) break;
  }

  if (out.solutions.empty())
    throw infeasible_error("no assignment within the bounds satisfies every constraint");
  return out;
}

DecompositionMatrix replay(const SolverProblem& problem, const DeductionLog& log) {
  DecompositionMatrix M = problem.matrix;
  for (const auto& e : log.entries) M.set_interval(e.cell, e.after);
  return M;
}

}  // namespace dlrep
