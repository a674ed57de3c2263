// JSON ingestion of the bundled group descriptions: ordinary-character
// metadata, the unitriangular pattern with its named unknowns, projective
// character inputs, the twisted-induction coefficient table, torus orders
// and the general-position flags.  Loading validates every cross-reference;
// building a solver problem recomputes lengths, canonical representatives
// and Bruhat relations from the Weyl group and cuts the coefficient table
// to the block basis.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlrep/decsolver.hpp"
#include "dlrep/grothendieck.hpp"
#include "dlrep/poly.hpp"

namespace dlrep {

// Raw (pre-validation) unknown cell of the matrix pattern.
struct UnknownSpec {
  std::string name;
  i64 lo = 0;
  std::optional<i64> hi;  // absent: bounded by the problem cap
};

struct GroupData {
  std::string name;
  std::string case_tag;  // which l the computation assumes, e.g. "l | q+1"
  std::string type;      // Cartan type letter
  int rank = 0;
  bool twisted = false;

  CharacterBasis characters;     // every unipotent character, sorted by a
  std::vector<bool> in_block;    // aligned with characters.chars

  std::string matrix_name;
  std::vector<std::string> matrix_rows, matrix_cols;
  std::vector<std::vector<MatrixEntry>> pattern;
  std::vector<UnknownSpec> unknown_specs;

  std::vector<HcColumn> hc_columns;  // characters on the matrix row basis

  RwTable rw_full;          // coefficients on the full character basis
  bool rw_complete = true;
  bool reg_enabled = false;
  std::vector<std::string> reg_keys;

  std::map<std::string, Poly> torus_orders;  // |T_w| as a polynomial in q

  int cap = 16;
};

// Parses and validates a group file; appends human-readable notes (e.g. an
// a-value resort) to `warnings` when provided.  Throws data_error with the
// offending location on schema or consistency violations.
GroupData load_group_file(const std::string& path,
                          std::vector<std::string>* warnings = nullptr);

// Assembles the solver problem: builds the matrix, recomputes lengths and
// Bruhat order for the table keys, checks them against the minimal class
// representatives and cuts the coefficient table to the matrix rows.
// A positive cap_override replaces the cap from the file.
SolverProblem build_problem(const GroupData& g, int cap_override = 0);

// Directory holding the bundled data files: the DLREP_DATA environment
// variable when set, otherwise the compiled-in default.
std::string data_dir();

// Canonical JSON rendering of solver output (sorted keys, newline-closed),
// used by the reproduction targets and the golden tests.
std::string matrix_to_json(const DecompositionMatrix& m);
std::string log_to_json(const DeductionLog& log);

}  // namespace dlrep
