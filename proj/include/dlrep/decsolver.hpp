// Finite-domain solver for unipotent decomposition matrices.
//
// The matrix starts as a unitriangular pattern whose below-diagonal entries
// are bounded integer unknowns.  Three deduction channels narrow their
// intervals:
//
//   HC / Hecke  Characters of known projective modules must expand as
//               nonnegative integer combinations of the columns; an input
//               flagged indecomposable is itself a column and pins it.
//   Reg         For class representatives flagged as admitting a torus
//               character in general position, every column pairs
//               nonnegatively with (-1)^l(w) times the twisted-induction
//               character at w.
//   DL          Expanding the twisted-induction character at w in the
//               columns, a column whose coefficient vanishes identically at
//               every Bruhat-smaller representative must appear in the
//               expansion at w with the sign (-1)^l(w).
//
// Propagation runs the channels to a fixed point, then enumerates any
// remaining unknowns exhaustively (row-major, values ascending); every
// candidate is re-validated by an evaluator that knows nothing about the
// propagation.  All bound changes are logged, and replaying the log against
// the initial matrix reproduces the fixed point exactly.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "dlrep/common.hpp"
#include "dlrep/dlchar.hpp"
#include "dlrep/grothendieck.hpp"

namespace dlrep {

// One projective-character input for the HC/Hecke channel, already cut to
// the unipotent characters of the block (matrix row order).
struct HcColumn {
  int column = 0;              // 1-based column it documents (= pins when flagged)
  std::string channel;         // "hecke" or "hc"; selects the log tag
  bool indecomposable = false;
  std::vector<i64> character;
  std::string source;          // human-readable provenance, quoted in the log
};

struct SolverProblem {
  CharacterBasis basis;        // block characters in matrix row order
  DecompositionMatrix matrix;
  std::vector<HcColumn> hc_columns;

  // Twisted-induction coefficients on the matrix row basis, keyed by the
  // canonical minimal representative word of each class.
  RwTable rw;
  bool rw_complete = true;     // a table may omit classes; constraints from
                               // the listed ones remain valid
  std::vector<std::string> keys;                          // sorted by (length, word)
  std::map<std::string, std::vector<std::string>> smaller; // strict Bruhat predecessors

  bool reg_enabled = false;
  std::vector<std::string> reg_keys;   // keys with a general-position character

  int cap = 16;                // search bound; intervals still touching it
                               // at the fixed point abort the solve
};

struct LogEntry {
  std::string rule;            // HC, Uni, Hecke, Reg or DL
  std::string cell;            // name of the narrowed unknown
  Interval before, after;
  std::string reason;
};

struct DeductionLog {
  std::vector<LogEntry> entries;
  // Index of the entry that first collapses `cell` to a point, -1 if none.
  int collapse_index(const std::string& cell) const;
  std::string str() const;     // one line per entry
};

struct SolveResult {
  DecompositionMatrix fixpoint;                // interval state after propagation
  std::vector<DecompositionMatrix> solutions;  // fully determined, search order
  DeductionLog log;
  bool unique() const { return solutions.size() == 1; }
};

// Single propagation passes.  Each returns whether any interval changed and
// appends its bound changes to the log; contradictions raise
// infeasible_error naming the violated constraint.
bool apply_hc(SolverProblem& p, DeductionLog& log);
bool apply_uni(SolverProblem& p, DeductionLog& log);   // shape validation only
bool apply_reg(SolverProblem& p, DeductionLog& log);
bool apply_dl(SolverProblem& p, DeductionLog& log);

// Full pipeline: propagation fixed point, cap check, exhaustive search,
// independent re-validation of every solution.  Raises infeasible_error or
// cap_exceeded_error as appropriate.
SolveResult solve(const SolverProblem& problem);

// Propagation-independent evaluation of a complete assignment of the
// unknowns against every constraint family (pattern, priors, HC/Hecke,
// Reg, DL).  Plain integer arithmetic throughout.
bool check_assignment(const SolverProblem& problem,
                      const std::map<std::string, i64>& assignment);

// Re-applies the logged bound changes to the initial matrix.
DecompositionMatrix replay(const SolverProblem& problem, const DeductionLog& log);

}  // namespace dlrep
