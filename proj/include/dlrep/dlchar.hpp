// Unipotent Deligne-Lusztig character data.
//
// For the unitary groups the multiplicity of the unipotent character indexed
// by a partition lambda in the twisted induction from the torus attached to
// a twisted class is, up to a sign epsilon_lambda, a symmetric-group
// character value.  The signs are calibrated here from generic degrees: the
// averaged degree polynomial must have positive leading coefficient.
// For other groups the coefficient tables are ingested from data files.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "dlrep/coxeter.hpp"
#include "dlrep/partitions.hpp"
#include "dlrep/poly.hpp"

namespace dlrep {

// Coefficients of a twisted-induction character on a fixed ordered basis of
// unipotent characters, stored per minimal class-representative word.
struct RwEntry {
  std::vector<i64> coeffs;
  unsigned length = 0;
};

struct RwTable {
  std::string group;
  std::vector<std::string> basis;
  std::map<std::string, RwEntry> rw;
};

// Exact lookup by canonical representative word; throws data_error if the
// key is absent.
const RwEntry& rw_unipotent(const RwTable& table, const std::string& key);

// Resolve an arbitrary word to the table key representing its conjugacy
// class (twisted conjugacy when `twisted` is set), then look it up.
const RwEntry& rw_unipotent(const RwTable& table, const CoxeterSystem& W,
                            const Word& w, bool twisted);

// Inner product of two virtual characters given on the same ordered
// orthonormal basis.
i64 pair_characters(const std::vector<i64>& a, const std::vector<i64>& b);

// ---- Unitary groups GU_n -------------------------------------------------

// Averaged degree polynomial before sign correction:
//   (1/n!) sum_v chi_lambda(v) e_G e_{T_v} |G|_{p'} / |T_v|
// where |G|_{p'} = prod_{i<=n} (q^i - (-1)^i), |T_v| = prod_cycles
// (q^d - (-1)^d), e_G = (-1)^{floor(n/2)} and e_{T_v} = (-1)^{#even cycles}.
QPoly gu_raw_degree(int n, const Partition& lambda);

struct UnitaryData {
  int n;
  std::vector<Partition> shapes;   // partitions_of(n) order
  std::vector<int> epsilon;        // sign making the degree positive
  std::vector<QPoly> degrees;      // epsilon * raw degree (leading > 0)
};

UnitaryData unitary_data(int n);

// Twisted-induction table for GU_n on the basis of partitions of n:
// the coefficient of row lambda at the class key w is
// epsilon_lambda * chi_lambda(cycle type of w * w0).
RwTable unitary_rw_table(int n);

// Sign-corrected hook-row coefficient (-1)^{l(w0)+1} epsilon_{(2,1^{n-2})}
// (n-1): the multiplicity forced in the final projective column by the
// positivity of the regular character.  Equals n-1 whenever the sign
// calibration is consistent.
i64 gu_hook_coefficient(int n);

// Cycle type of the permutation of [1..n] induced by a type-A word
// (the generator i acts as the adjacent transposition (i, i+1)).
Partition type_a_cycle_type(const Word& w, int n_symbols);

}  // namespace dlrep
