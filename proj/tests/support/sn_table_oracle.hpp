// Independent character oracle: decompose permutation-module characters.
//
// The character of the action on tabloids of shape lambda counts, for a
// permutation g, the ways to distribute the cycles of g into rows with exact
// fill.  Subtracting previously found irreducibles (largest shapes first,
// which refines dominance) with exact inner products leaves the irreducible
// character of shape lambda.  No border strips and no Specht modules here.
#pragma once

#include <map>
#include <vector>

#include "dlrep/common.hpp"
#include "dlrep/partitions.hpp"

namespace sn_table_oracle {

using dlrep::i64;
using dlrep::Partition;

// Number of ways to assign the cycles of mu to the rows of lambda so that
// every row is filled exactly; this is the permutation character value.
inline i64 fixed_tabloids(const Partition& lambda, const Partition& mu) {
  std::map<std::pair<std::vector<int>, size_t>, i64> memo;
  std::vector<int> caps(lambda.begin(), lambda.end());
  std::function<i64(std::vector<int>&, size_t)> rec = [&](std::vector<int>& c, size_t k) -> i64 {
    if (k == mu.size()) {
      for (int v : c)
        if (v != 0) return 0;
      return 1;
    }
    auto key = std::make_pair(c, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    i64 total = 0;
    for (size_t r = 0; r < c.size(); ++r) {
      if (c[r] < mu[k]) continue;
      c[r] -= mu[k];
      total += rec(c, k + 1);
      c[r] += mu[k];
    }
    memo[key] = total;
    return total;
  };
  return rec(caps, 0);
}

// Full character table of S_n: table[lambda][mu] = chi^lambda(mu).
inline std::map<Partition, std::map<Partition, i64>> character_table(int n) {
  auto shapes = dlrep::partitions_of(n);  // lex-descending refines dominance
  i64 group_order = dlrep::factorial(n);
  std::map<Partition, std::map<Partition, i64>> table;
  for (const auto& lambda : shapes) {
    std::map<Partition, i64> chi;
    for (const auto& mu : shapes) chi[mu] = fixed_tabloids(lambda, mu);
    for (const auto& nu : shapes) {
      if (nu == lambda) break;  // only previously completed shapes
      const auto& prev = table.at(nu);
      i64 inner = 0;
      for (const auto& mu : shapes)
        inner += (group_order / dlrep::centralizer_order(mu)) * chi[mu] * prev.at(mu);
      if (inner % group_order != 0)
        throw dlrep::data_error("character table oracle: non-integral multiplicity");
      i64 mult = inner / group_order;
      for (const auto& mu : shapes) chi[mu] -= mult * prev.at(mu);
    }
    table[lambda] = chi;
  }
  return table;
}

}  // namespace sn_table_oracle
