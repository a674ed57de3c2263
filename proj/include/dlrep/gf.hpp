// Small finite fields F_{p^k} with Zech-logarithm arithmetic.  Elements
// are opaque integers in [0, p^k): 0 is the zero element and e > 0 stands
// for g^{e-1} for a fixed multiplicative generator g, so iterating over
// all field elements is just an integer loop.  Addition costs one table
// lookup; multiplication is addition of logarithms.
#pragma once

#include <vector>

#include "dlrep/common.hpp"

namespace dlrep {

class GF {
 public:
  using elem = i64;

  // p prime, k >= 1, p^k no larger than 2^20 (table budget).
  GF(i64 p, int k);

  i64 size() const { return q_; }
  i64 characteristic() const { return p_; }
  int degree() const { return k_; }

  elem zero() const { return 0; }
  elem one() const { return 1; }
  elem generator() const { return q_ > 2 ? 2 : 1; }
  bool is_zero(elem a) const { return a == 0; }

  elem add(elem a, elem b) const;
  elem neg(elem a) const;
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  elem mul(elem a, elem b) const;
  elem inv(elem a) const;
  elem pow(elem a, i64 e) const;

 private:
  i64 p_;
  int k_;
  i64 q_;
  i64 minus_log_;            // log of -1
  std::vector<i64> zech_;    // zech_[d] = log(1 + g^d), or -1 when that is zero
};

}  // namespace dlrep
