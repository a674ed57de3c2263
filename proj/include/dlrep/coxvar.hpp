// Frobenius-eigenvalue bookkeeping for the Deligne-Lusztig variety of a
// Coxeter element.  The cohomology over K splits into eigenvalue ladders,
// one per Harish-Chandra series; reducing the eigenvalues mod ell turns
// the ladders into statements about Heller translates of the trivial
// module, which pin down planar Brauer trees (see brauer.hpp).
//
// All eigenvalues are exact: a root of unity (order and exponent) times a
// half-integer power of q.  The half-power q^{1/2} is a formal symbol
// whose square is q; modular reduction happens in the cyclic group it
// generates, whose order the data file declares.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dlrep/brauer.hpp"
#include "dlrep/common.hpp"

namespace dlrep {

// zeta = exp(2*pi*i*exp/order); order 1 (or exp 0 mod order) is 1 itself.
struct RootOfUnity {
  int order = 1;
  int exp = 0;
};

// zeta * q^{twice_power/2}.
struct Eigenvalue {
  RootOfUnity zeta;
  int twice_power = 0;
};

std::string root_str(const RootOfUnity& z);
std::string eigenvalue_str(const Eigenvalue& e);

// One Harish-Chandra series inside the cohomology of the Coxeter variety:
// its characters sit in the consecutive degrees r, r+1, ..., 2r - twice_m/..
// two steps of q at a time, starting from zeta * q^{twice_m/2} in the
// middle degree.  chars are listed in that order, lowest degree first.
struct SeriesDatum {
  std::string id;
  RootOfUnity zeta;
  int twice_m = 0;  // twice the half-integer m for this series
  std::vector<std::string> chars;
};

// Reduction of the eigenvalues modulo ell when q has order h.  Rules give
// the class of selected primitive roots of unity as powers of q^{1/2};
// classes of other roots are derived by taking powers.
struct CongruenceRule {
  int order = 1;       // the primitive root being classified
  int half_power = 0;  // its class, as a power of q^{1/2}
};

struct EigenvalueCongruence {
  int h = 0;             // multiplicative order of q mod ell
  int q_half_order = 0;  // order of the class of q^{1/2}; always 2h
  std::vector<CongruenceRule> rules;

  void check() const;
  // Class of a root of unity / an eigenvalue as a power of q^{1/2},
  // reduced into [0, 2h).  Throws data_error when no rule applies.
  int resolve_root(const RootOfUnity& z) const;
  int resolve(const Eigenvalue& e) const;
  // The class as a power of q, in [0, h); throws when the class is an odd
  // power of q^{1/2} and hence not a power of q.
  int q_power(const Eigenvalue& e) const;
};

// A group's worth of series data: the ladders for every Harish-Chandra
// series meeting the cohomology, plus the reduction rules.
struct GroupSeries {
  std::string name;
  int r = 0;  // length of the Coxeter element = dimension of the variety
  EigenvalueCongruence cong;
  std::vector<SeriesDatum> series;
};

struct LadderEntry {
  int degree = 0;
  Eigenvalue eigenvalue;
  std::string character;
};

// The explicit (degree, eigenvalue, character) triples of one series.
// Throws data_error when the declared characters do not fill the ladder.
std::vector<LadderEntry> eigen_ladder(const SeriesDatum& series, int r);

// The largest eigenvalue within the conjugate series: the last ladder
// eigenvalue with the root of unity inverted.
Eigenvalue mu(const SeriesDatum& series, int r);

// One identified Heller translate: Omega^exponent of the simple module of
// start_character (the trivial character when empty) lifts to a lattice
// with the named character.  m records the q-power class when the
// identification came from an eigenvalue congruence, -1 otherwise.
struct Identification {
  std::string series;
  i64 exponent = 0;
  std::string character;
  std::string start_character;
  int m = -1;
};

// The smallest series eigenvalue zeta * q^{twice_m/2} is congruent to q^m;
// the eigenspace is then Omega^{2m-r} of the trivial module, concentrated
// in the middle degree where the first ladder character lives.
Identification omega_identification(const EigenvalueCongruence& cong, int r,
                                    const SeriesDatum& series);

// omega_identification for every series of the group, in file order.
std::vector<Identification> identify_all(const GroupSeries& data);

// Cohomology of the Coxeter variety cut by a block: the surviving
// characters with their degrees and Frobenius eigenvalues.  Used when q
// does not have order equal to the Coxeter number, so the full ladders do
// not apply but the block part is known.
struct BlockEntry {
  std::string character;
  int degree = 0;
  Eigenvalue eigenvalue;
};

struct BlockCohomology {
  std::string name;
  int r = 0;
  EigenvalueCongruence cong;
  std::vector<BlockEntry> entries;
  std::string trivial;  // label of the trivial character
};

// What the mod-ell eigenspaces of a block-cut complex tell us: an
// eigenspace living in a single degree is a projective lattice, so its two
// characters share an edge of the tree; an eigenspace with two degrees a <
// b identifies Omega^{b-a+1} of the top character's simple with the bottom
// character.
struct EigenspaceFacts {
  std::vector<std::pair<std::string, std::string>> adjacent;
  std::vector<Identification> omegas;
};

EigenspaceFacts eigenspace_facts(const BlockCohomology& block);

// Walks the tree to confirm each identification: Omega^n of the simple at
// the start character's leaf must carry the predicted character, and each
// adjacent pair must share an edge.  One report line per fact.
struct CrossCheckItem {
  std::string description;
  bool ok = false;
};

std::vector<CrossCheckItem> cross_check_tree(const BrauerTree& tree,
                                             const std::string& trivial_char,
                                             const EigenspaceFacts& facts);
std::vector<CrossCheckItem> cross_check_tree(const BrauerTree& tree,
                                             const std::string& trivial_char,
                                             const std::vector<Identification>& ids);
bool all_consistent(const std::vector<CrossCheckItem>& items);

// The hook ladder of GL_n: one principal series whose characters are the
// hook partitions from the single column up to the single row.
GroupSeries gl_series(int n);

GroupSeries load_series_file(const std::string& path);
BlockCohomology load_block_file(const std::string& path);

}  // namespace dlrep
