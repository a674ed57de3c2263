// Planar-embedded Brauer trees for blocks with cyclic defect groups.
//
// A tree records the ordinary characters of the block (vertices, one of
// them exceptional with a multiplicity), the simple modules (edges), and a
// planar embedding: the anticlockwise cyclic order of the edges around each
// vertex.  On top of that sit the walk around the tree, Heller translates
// of the simples, characters and Loewy series of the projective modules,
// structural validators (parity, dimension, symmetry of the real stem,
// Harish-Chandra lines), and a search that recovers the embedded tree from
// its real stem plus whatever evidence is available.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dlrep/common.hpp"
#include "dlrep/poly.hpp"

namespace dlrep {

// An ordinary character of the block.  Everything beyond the label is
// optional evidence for the validators: a dimension polynomial in q, the
// complex conjugate, the Harish-Chandra series with its a-value, and a
// parity tag sorting the degree into one of the two residue classes modulo
// ell (adjacent characters fall into opposite classes; only the partition
// matters, so the "+"/"-" names are conventional).
struct TreeVertex {
  std::string label;
  bool exceptional = false;
  int multiplicity = 1;     // number of exceptional characters (1 elsewhere)
  bool has_degree = false;
  QPoly degree;             // character degree as a polynomial in q
  bool real = true;
  std::string conjugate;    // label of the complex conjugate when not real
  std::string series;       // Harish-Chandra series tag ("" = not recorded)
  bool has_a = false;
  i64 a_value = 0;
  std::string parity;       // "+", "-" or "" (not recorded)
};

// A simple module of the block, joining its two lifts.
struct TreeEdge {
  std::string label;
  std::string ends[2];      // vertex labels
  bool has_dim = false;
  QPoly dim;                // dimension polynomial, when independently known
};

struct BrauerTree {
  std::string name;
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;
  // Anticlockwise cyclic order of the incident edge labels, per vertex.
  std::map<std::string, std::vector<std::string>> embedding;

  // Optional check configuration carried with the data: the index d of the
  // cyclotomic polynomial dividing the order (ell | Phi_d(q)) and the prime
  // powers q at which dimension positivity is meaningful.
  unsigned phi_d = 0;
  std::vector<i64> q_checks;

  // Fills in the embedding lists of vertices that have none (in edge
  // declaration order -- only the cyclic order at vertices of degree three
  // or more carries information, but the walk machinery wants a list
  // everywhere).
  void normalize();

  // Throws data_error unless the graph is a tree with exactly one
  // exceptional vertex, the embedding lists each vertex's incident edges
  // exactly once, and conjugation data is involutive.
  void check() const;

  const TreeVertex& vertex(const std::string& label) const;
  const TreeEdge& edge(const std::string& label) const;
  bool has_vertex(const std::string& label) const;
  const std::string& exceptional_label() const;
  int multiplicity() const;   // of the exceptional vertex

  // Incident edge labels in anticlockwise order.
  const std::vector<std::string>& incident(const std::string& vertex) const;
  bool is_leaf(const std::string& vertex) const;
  // The endpoint of `edge` other than `vertex`.
  const std::string& other_end(const std::string& edge, const std::string& vertex) const;
  // The next edge after `edge` anticlockwise around `vertex` (itself at a leaf).
  const std::string& successor(const std::string& edge, const std::string& vertex) const;
  // The unique edge joining two vertices, or "" if they are not adjacent.
  std::string edge_between(const std::string& u, const std::string& v) const;

  // The same tree with the opposite orientation of the plane (every cyclic
  // order reversed).
  BrauerTree mirrored() const;

  // Serialization that identifies trees up to rotation of the cyclic orders
  // but not reflection: two trees describe the same embedded tree iff their
  // canonical forms agree, and chirality partners have equal canonical
  // forms after mirroring one of them.
  std::string canonical_form() const;
};

// The walk around the tree: T_0 is an edge with a leaf endpoint and chi_0
// that leaf; then chi_{i+1} is the other endpoint of T_i and T_{i+1} the
// anticlockwise successor of T_i around chi_{i+1}.  The walk has length 2e
// (e = number of edges), visits every edge exactly twice, and step i
// describes the Heller translate Omega^i of the simple T_0: a module with
// head T_i, socle T_{i-1}, and ordinary character chi_i.
struct WalkStep {
  int index = 0;
  std::string edge;
  std::string character;
};

// Throws data_error if `start` has no leaf endpoint.  When both endpoints
// are leaves (a single-edge tree) the walk starts at the non-exceptional one.
std::vector<WalkStep> green_walk(const BrauerTree& tree, const std::string& start);

// Omega^n of the simple module `start` (n taken modulo 2e, negatives
// allowed): its character, head, socle, and composition series from the
// head down.  The factors follow the cyclic order around the character's
// vertex from head to socle; at the exceptional vertex with multiplicity m
// the walk around the vertex is taken m times in total.
struct OmegaModule {
  std::string character;
  std::string head;
  std::string socle;
  std::vector<std::string> factors;   // head first
};
OmegaModule omega_power(const BrauerTree& tree, const std::string& start, i64 n);

// Character of the projective cover of the simple `edge`: the two endpoint
// characters (the exceptional one taken with its multiplicity).
struct PimCharacter {
  std::string chi;
  std::string chi_prime;
  int multiplicity_chi = 1;         // multiplicity of chi in the sum
  int multiplicity_chi_prime = 1;
};
PimCharacter pim_character(const BrauerTree& tree, const std::string& edge);

// Loewy layers of the projective cover of `edge`, head first.  The two
// strands between head and socle list the successors of `edge` around its
// two endpoints; at an exceptional endpoint with multiplicity m the turn
// around the vertex is taken m times.
std::vector<std::vector<std::string>> loewy_layers(const BrauerTree& tree,
                                                   const std::string& edge);

enum class RuleStatus { pass, fail, untested };
std::string rule_status_str(RuleStatus s);

struct RuleReport {
  std::string rule;           // "parity", "degree", "stem", "hecke"
  RuleStatus status = RuleStatus::untested;
  std::vector<std::string> notes;   // witnesses for failures, skipped inputs
};

// Structural validators.  Each rule reports untested when the tree carries
// no data for it.
//
//   parity  Adjacent characters have opposite dimension residues mod ell:
//           opposite "+"/"-" tags where tagged, and, where both endpoint
//           degrees and phi_d are known, Phi_d divides the sum of the
//           degree polynomials.
//   degree  The dimension of each simple, solved from the vertex degrees
//           leafward of its edge, is a polynomial with positive leading
//           coefficient and positive value at every q in q_checks; recorded
//           edge dimensions must match the solved ones.
//   stem    The real characters form a path through the exceptional vertex,
//           and complex conjugation is an automorphism of the embedded tree
//           that reverses the plane's orientation.
//   hecke   Vertices sharing a Harish-Chandra series tag form a path, with
//           a-values strictly increasing towards the exceptional vertex.
std::vector<RuleReport> validate_tree(const BrauerTree& tree);
bool all_rules_hold(const std::vector<RuleReport>& reports);   // no "fail"

// Recovering the embedded tree from partial knowledge.  The input is the
// real stem (a path of vertices, one exceptional, with edge labels between
// consecutive vertices) plus the non-real characters in conjugate pairs,
// and the available evidence: the validators' data on the vertices, known
// projective characters ("these two characters span a projective"), and
// walk facts ("Omega^n of this simple lifts to that character").
struct DetermineProblem {
  std::string name;
  std::vector<TreeVertex> stem;          // in path order
  std::vector<std::string> stem_edges;   // size stem.size() - 1
  std::vector<std::pair<TreeVertex, TreeVertex>> pairs;   // conjugate pairs
  unsigned phi_d = 0;
  std::vector<i64> q_checks;

  struct AdjacencyFact { std::string chi, chi_prime; };
  std::vector<AdjacencyFact> adjacency_facts;

  struct OmegaFact { std::string start; i64 power; std::string character; };
  std::vector<OmegaFact> omega_facts;
};

// Attaches every conjugate pair to the stem in all structurally viable
// ways -- both members at one real vertex, in every pair of slots of its
// cyclic order, or at conjugate non-real vertices placed earlier -- and
// keeps the candidates that pass every validator and reproduce every fact.
// A walk fact whose starting leaf was consumed by an attachment counts as
// a failure of that fact.  Survivors are grouped into chirality classes:
// a class of size two is a tree together with its mirror image, a class of
// size one a tree whose mirror was ruled out.
struct DetermineResult {
  std::vector<BrauerTree> trees;                    // sorted by canonical form
  std::vector<std::vector<size_t>> chirality_classes;
  size_t candidates = 0;                            // total attachments tried
  std::vector<std::string> eliminations;            // one line per rejection
  bool unique_up_to_chirality() const { return chirality_classes.size() == 1; }
};
DetermineResult determine_tree(const DetermineProblem& problem);

// JSON serialization of trees and determination problems; see
// data/trees/*.json and data/determine/*.json for the layout.
BrauerTree load_tree_file(const std::string& path);
void save_tree_file(const BrauerTree& tree, const std::string& path);
DetermineProblem load_determine_file(const std::string& path);

// Graphviz round trip.  The emitted DOT keeps the planar data: vertex
// comments carry the anticlockwise edge order (and the multiplicity on the
// doubly-circled exceptional vertex), so parsing the output reproduces the
// embedded tree exactly.
std::string tree_to_dot(const BrauerTree& tree);
BrauerTree tree_from_dot(const std::string& dot);

}  // namespace dlrep
