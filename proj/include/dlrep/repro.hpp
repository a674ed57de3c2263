// Reproduction targets: each named target recomputes one of the bundled
// tables or figures from its data files and renders it as deterministic
// text.  The rendered output is byte-compared against the pinned golden
// file under data/golden/ by the CLI and the test suite.
#pragma once

#include <string>
#include <vector>

#include "dlrep/data_io.hpp"
#include "dlrep/decsolver.hpp"

namespace dlrep {

struct ReproTarget {
  std::string name;
  std::string description;
};

// All registered targets, in presentation order.
const std::vector<ReproTarget>& repro_targets();

// Recomputes the named target; throws data_error for unknown names.
std::string run_repro(const std::string& name);

// data_dir() + "/golden/" + name + ".txt"
std::string golden_path(const std::string& name);

// Text rendering of a solver run: the deduction log, the determined matrix
// under a "D_unip =" header (zeros printed as dots), and the solution
// count.  Shared by the decsolve subcommand and the solver repro targets.
std::string render_solution(const GroupData& g, const SolveResult& res);

// Minimal line diff between expected and actual text ("-" expected lines,
// "+" actual lines, with a @@ header per run); empty when equal.
std::string line_diff(const std::string& expected, const std::string& actual);

}  // namespace dlrep
