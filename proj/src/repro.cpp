#include "dlrep/repro.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "dlrep/brauer.hpp"
#include "dlrep/coxvar.hpp"
#include "dlrep/dlchar.hpp"
#include "dlrep/lefschetz.hpp"

namespace dlrep {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::string solve_target(const std::string& group) {
  const GroupData g = load_group_file(data_dir() + "/groups/" + group + ".json");
  const SolveResult res = solve(build_problem(g));
  return render_solution(g, res);
}

std::string tree_target(const std::string& file) {
  return tree_to_dot(load_tree_file(data_dir() + "/trees/" + file + ".json"));
}

std::string gu_target() {
  std::ostringstream os;
  os << "# multiplicity of the hook column in the last projective of GU_n, l | q+1\n";
  for (int n = 3; n <= 8; ++n)
    os << "n=" << n << ": d = " << gu_hook_coefficient(n) << "\n";
  return os.str();
}

std::string walk_target() {
  const BrauerTree tree = load_tree_file(data_dir() + "/trees/walk_example.json");
  const std::vector<WalkStep> walk = green_walk(tree, "S");
  std::ostringstream edges, chars;
  for (size_t i = 0; i < walk.size(); ++i) {
    if (i) {
      edges << ",";
      chars << ",";
    }
    edges << walk[i].edge;
    chars << walk[i].character;
  }
  std::ostringstream os;
  os << "# green walk on the six-vertex example tree, from the leaf edge S\n"
     << "T   = " << edges.str() << "\n"
     << "chi = " << chars.str() << "\n";
  return os.str();
}

std::string omega_f4_target() {
  const GroupSeries f4 = load_series_file(data_dir() + "/series/f4.json");
  std::ostringstream os;
  os << "# Omega powers of the trivial simple from the eigenvalue ladders (F4, r=4)\n";
  for (const Identification& id : identify_all(f4)) {
    os << id.series << ": m=" << id.m << "  Omega^" << id.exponent << " -> "
       << id.character << "\n";
  }
  return os.str();
}

std::string e7_block_target() {
  const BlockCohomology block =
      load_block_file(data_dir() + "/series/e7_block.json");
  const EigenspaceFacts facts = eigenspace_facts(block);
  std::ostringstream os;
  os << "# mod-l eigenspace deductions in the " << block.name << " block\n";
  for (const auto& [a, b] : facts.adjacent)
    os << "one projective: " << a << " + " << b << "\n";
  for (const Identification& id : facts.omegas)
    os << "Omega^" << id.exponent << " of the simple at " << id.start_character
       << " lifts to " << id.character << "\n";
  return os.str();
}

void points_row(std::ostringstream& os, const std::string& variety, i64 q,
                int n, i64 count, i64 prediction) {
  os << variety << "," << q << "," << n << "," << count << "," << prediction
     << "," << (count == prediction ? "yes" : "no") << "\n";
}

std::string points_target() {
  std::ostringstream os;
  os << "variety,q,n,count,prediction,match\n";
  for (i64 q : {2, 3, 4, 5}) {
    for (int n = 1; n <= 3; ++n) {
      const i64 qn = checked_pow(q, unsigned(n));
      points_row(os, "p1", q, n, point_count(projective_space(1), q, n), qn + 1);
      points_row(os, "gm", q, n, point_count(torus(1), q, n), qn - 1);
      points_row(os, "a2", q, n, point_count(affine_space(2), q, n),
                 checked_mul(qn, qn));
      points_row(os, "a3", q, n, point_count(affine_space(3), q, n),
                 checked_mul(qn, checked_mul(qn, qn)));
    }
  }
  for (i64 q : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      points_row(os, "drinfeld", q, n, brute_force_drinfeld(q, n).projective_count,
                 gl_coxeter_prediction(2, q, n));
      points_row(os, "glcox3", q, n, gl_coxeter_points(3, q, n),
                 gl_coxeter_prediction(3, q, n));
    }
  }
  return os.str();
}

}  // namespace

std::string render_solution(const GroupData& g, const SolveResult& res) {
  std::ostringstream os;
  os << "# " << g.name << ": " << g.case_tag << "\n";
  os << res.log.str();

  const DecompositionMatrix& m = res.solutions.empty() ? res.fixpoint
                                                       : res.solutions.front();
  const auto values = m.values();
  const auto& rows = m.rows();
  const auto& cols = m.cols();

  size_t label_w = 0;
  for (const std::string& r : rows) label_w = std::max(label_w, r.size());
  std::vector<size_t> col_w(cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    col_w[c] = cols[c].size();
    for (size_t r = 0; r < rows.size(); ++r) {
      const std::string cell =
          values[r][c] == 0 ? "." : std::to_string(values[r][c]);
      col_w[c] = std::max(col_w[c], cell.size());
    }
  }

  os << "D_unip =\n";
  os << std::string(label_w, ' ');
  for (size_t c = 0; c < cols.size(); ++c)
    os << "  " << std::setw(int(col_w[c])) << cols[c];
  os << "\n";
  for (size_t r = 0; r < rows.size(); ++r) {
    os << std::left << std::setw(int(label_w)) << rows[r] << std::right;
    for (size_t c = 0; c < cols.size(); ++c) {
      const std::string cell =
          values[r][c] == 0 ? "." : std::to_string(values[r][c]);
      os << "  " << std::setw(int(col_w[c])) << cell;
    }
    os << "\n";
  }
  os << "solutions: " << res.solutions.size()
     << (res.unique() ? " (unique)" : "") << "\n";
  return os.str();
}

const std::vector<ReproTarget>& repro_targets() {
  static const std::vector<ReproTarget> targets = {
      {"sp4", "Sp4(q), l | q+1: unipotent decomposition matrix with deduction log"},
      {"su5", "SU5(q), l | q+1: unipotent decomposition matrix with deduction log"},
      {"g2", "G2(q) exercise: the two remaining below-diagonal entries"},
      {"gu", "GU_n hook-column multiplicities for n = 3..8"},
      {"walk", "green walk sequences on the six-vertex example tree"},
      {"g2-phi6", "planar tree for G2(q), l | Phi6 (DOT)"},
      {"g2-phi3", "planar tree for G2(q), l | Phi3 (DOT)"},
      {"e7-phi14", "planar tree for E7(q), l | Phi14 (DOT)"},
      {"f4-phi12", "planar tree for F4(q), l | Phi12 (DOT)"},
      {"omega-f4", "Heller identifications from the F4 eigenvalue ladders"},
      {"e7-block", "eigenspace deductions in the E7 Phi14 block"},
      {"points", "point counts against graded-class predictions (CSV)"},
  };
  return targets;
}

std::string run_repro(const std::string& name) {
  if (name == "sp4" || name == "su5" || name == "g2") return solve_target(name);
  if (name == "gu") return gu_target();
  if (name == "walk") return walk_target();
  if (name == "g2-phi6") return tree_target("g2_phi6");
  if (name == "g2-phi3") return tree_target("g2_phi3");
  if (name == "e7-phi14") return tree_target("e7_phi14");
  if (name == "f4-phi12") return tree_target("f4_phi12");
  if (name == "omega-f4") return omega_f4_target();
  if (name == "e7-block") return e7_block_target();
  if (name == "points") return points_target();
  throw data_error("unknown repro target '" + name + "'");
}

std::string golden_path(const std::string& name) {
  return data_dir() + "/golden/" + name + ".txt";
}

std::string line_diff(const std::string& expected, const std::string& actual) {
  if (expected == actual) return "";
  const std::vector<std::string> a = split_lines(expected);
  const std::vector<std::string> b = split_lines(actual);

  // Trim the common prefix and suffix; report the middle as one hunk.
  size_t lo = 0;
  while (lo < a.size() && lo < b.size() && a[lo] == b[lo]) ++lo;
  size_t ta = a.size(), tb = b.size();
  while (ta > lo && tb > lo && a[ta - 1] == b[tb - 1]) {
    --ta;
    --tb;
  }

  std::ostringstream os;
  os << "@@ expected lines " << lo + 1 << ".." << ta << ", actual lines "
     << lo + 1 << ".." << tb << " @@\n";
  for (size_t i = lo; i < ta; ++i) os << "-" << a[i] << "\n";
  for (size_t i = lo; i < tb; ++i) os << "+" << b[i] << "\n";
  return os.str();
}

}  // namespace dlrep
