#include "dlrep/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dlrep {

namespace {

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw data_error("partitions_of: negative n");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

Partition conjugate_partition(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int count = 0;
    for (int part : p)
      if (part >= j) ++count;
    c.push_back(count);
  }
  return c;
}

int partition_sum(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  os << ")";
  return os.str();
}

Partition partition_from_str(const std::string& s) {
  Partition p;
  std::string digits;
  bool has_comma = s.find(',') != std::string::npos;
  for (char ch : s) {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    if (ch == ',') {
      if (!digits.empty()) p.push_back(std::stoi(digits));
      digits.clear();
    } else if (ch >= '0' && ch <= '9') {
      if (has_comma) {
        digits.push_back(ch);
      } else {
        p.push_back(ch - '0');  // compact form "311"
      }
    } else {
      throw data_error("partition_from_str: bad character in '" + s + "'");
    }
  }
  if (!digits.empty()) p.push_back(std::stoi(digits));
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) throw data_error("partition_from_str: parts not decreasing in '" + s + "'");
  for (int x : p)
    if (x <= 0) throw data_error("partition_from_str: nonpositive part in '" + s + "'");
  return p;
}

int cycle_type_sign(const Partition& mu) {
  int s = 1;
  for (int part : mu)
    if (part % 2 == 0) s = -s;
  return s;
}

i64 centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int part : mu) ++mult[part];
  i64 z = 1;
  for (auto [k, m] : mult) {
    for (int i = 0; i < m; ++i) z = checked_mul(z, k);
    z = checked_mul(z, factorial(m));
  }
  return z;
}

i64 factorial(int n) {
  if (n < 0) throw data_error("factorial: negative argument");
  i64 r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

i64 hook_dimension(const Partition& lambda) {
  int n = partition_sum(lambda);
  Partition conj = conjugate_partition(lambda);
  i64 num = factorial(n);
  // Divide n! by each hook length h(i,j) = (lambda_i - j) + (lambda'_j - i) + 1.
  // Dividing incrementally keeps everything within 64 bits for the sizes used
  // here; do it exactly by accumulating the hook product first.
  i64 hooks = 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      hooks = checked_mul(hooks, (lambda[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1);
  if (num % hooks != 0) throw data_error("hook_dimension: hook product does not divide n!");
  return num / hooks;
}

std::vector<std::pair<Partition, int>> border_strip_removals(const Partition& lambda, int k) {
  // Work with beta-numbers b_i = lambda_i + (m - 1 - i), i = 0..m-1 (distinct).
  // Removing a border strip of length k means replacing some b_i by b_i - k,
  // provided b_i - k >= 0 and is not already a beta-number; the strip height
  // is the number of beta-numbers strictly between b_i - k and b_i.
  std::vector<std::pair<Partition, int>> out;
  int m = static_cast<int>(lambda.size());
  std::vector<int> beta(m);
  for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);
  for (int i = 0; i < m; ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    bool clash = false;
    int height = 0;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      if (beta[j] == target) clash = true;
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    }
    if (clash) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    Partition rest;
    for (int j = 0; j < m; ++j) {
      int part = nb[j] - (m - 1 - j);
      if (part < 0) throw data_error("border_strip_removals: negative part");
      if (part > 0) rest.push_back(part);
    }
    out.push_back({rest, height});
  }
  return out;
}

i64 mn_value(const Partition& lambda, const Partition& mu) {
  if (partition_sum(lambda) != partition_sum(mu))
    throw data_error("mn_value: sizes of " + partition_str(lambda) + " and " +
                     partition_str(mu) + " differ");
  static std::map<std::pair<Partition, Partition>, i64> memo;
  if (lambda.empty()) return 1;
  auto key = std::make_pair(lambda, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // Recurse on the first (largest) cycle; the result is independent of the
  // order in which cycles are consumed.
  int k = mu[0];
  Partition rest_mu(mu.begin() + 1, mu.end());
  i64 total = 0;
  for (const auto& [rest, height] : border_strip_removals(lambda, k)) {
    i64 sign = (height % 2 == 0) ? 1 : -1;
    total += sign * mn_value(rest, rest_mu);
  }
  memo[key] = total;
  return total;
}

}  // namespace dlrep
