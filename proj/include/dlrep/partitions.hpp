// Partitions and symmetric-group character values.
//
// Characters are computed by the border-strip recursion (remove a strip of
// length equal to a cycle of the class, with sign (-1)^height), memoized
// across calls.  Dimensions come from the hook length formula.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dlrep/common.hpp"

namespace dlrep {

// Weakly decreasing positive parts; the empty partition is {}.
using Partition = std::vector<int>;

// All partitions of n, first part descending, then recursively likewise:
// for n = 5: (5), (4,1), (3,2), (3,1,1), (2,2,1), (2,1,1,1), (1,1,1,1,1).
std::vector<Partition> partitions_of(int n);

Partition conjugate_partition(const Partition& p);
int partition_sum(const Partition& p);
std::string partition_str(const Partition& p);         // e.g. "(3,1,1)"
Partition partition_from_str(const std::string& s);    // accepts "(3,1,1)" or "311"

// Sign of any permutation with cycle type mu.
int cycle_type_sign(const Partition& mu);

// Order of the centralizer of a permutation of cycle type mu in S_n.
i64 centralizer_order(const Partition& mu);

i64 factorial(int n);

// Dimension of the irreducible character indexed by lambda (hook lengths).
i64 hook_dimension(const Partition& lambda);

// All removals of a border strip of length k: (remaining shape, strip height).
std::vector<std::pair<Partition, int>> border_strip_removals(const Partition& lambda, int k);

// Irreducible symmetric-group character value chi^lambda at cycle type mu.
i64 mn_value(const Partition& lambda, const Partition& mu);

}  // namespace dlrep
