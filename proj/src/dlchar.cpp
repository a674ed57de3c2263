#include "dlrep/dlchar.hpp"

#include <algorithm>
#include <set>

namespace dlrep {

const RwEntry& rw_unipotent(const RwTable& table, const std::string& key) {
  auto it = table.rw.find(key);
  if (it == table.rw.end())
    throw data_error("rw_unipotent: no entry for class representative '" + key +
                     "' in table for " + table.group);
  return it->second;
}

const RwEntry& rw_unipotent(const RwTable& table, const CoxeterSystem& W,
                            const Word& w, bool twisted) {
  // Walk the (twisted) conjugacy orbit of w until a table key is hit.
  using Element = CoxeterSystem::Element;
  std::vector<int> twist;
  if (twisted) twist = W.diagram_automorphism();
  std::map<Element, std::string> keys;
  for (const auto& [k, entry] : table.rw) keys[W.from_word(word_from_string(k))] = k;
  std::set<Element> orbit;
  std::vector<Element> todo = {W.from_word(w)};
  orbit.insert(todo[0]);
  while (!todo.empty()) {
    Element x = todo.back();
    todo.pop_back();
    auto it = keys.find(x);
    if (it != keys.end()) return rw_unipotent(table, it->second);
    for (int i = 1; i <= W.rank(); ++i) {
      Element y = W.product(W.product(W.generator(i), x),
                            W.generator(twisted ? twist[i] : i));
      if (orbit.insert(y).second) todo.push_back(y);
    }
  }
  throw data_error("rw_unipotent: class of word '" + word_to_string(w) +
                   "' has no representative in table for " + table.group);
}

i64 pair_characters(const std::vector<i64>& a, const std::vector<i64>& b) {
  if (a.size() != b.size()) throw data_error("pair_characters: basis size mismatch");
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += checked_mul(a[i], b[i]);
  return s;
}

Partition type_a_cycle_type(const Word& w, int n_symbols) {
  std::vector<int> arr(n_symbols);
  for (int i = 0; i < n_symbols; ++i) arr[i] = i + 1;
  for (int letter : w) {
    if (letter < 1 || letter >= n_symbols)
      throw data_error("type_a_cycle_type: generator out of range");
    std::swap(arr[letter - 1], arr[letter]);
  }
  std::vector<bool> used(n_symbols, false);
  Partition type;
  for (int i = 0; i < n_symbols; ++i) {
    if (used[i]) continue;
    int len = 0, j = i;
    while (!used[j]) {
      used[j] = true;
      j = arr[j] - 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

QPoly gu_raw_degree(int n, const Partition& lambda) {
  // Group the average over the Weyl group by cycle type; the class of type
  // mu has n!/z_mu elements, so the 1/n! collapses to 1/z_mu per class.
  Poly order_part = Poly::constant(1);  // prod_{i<=n} (q^i - (-1)^i)
  for (int i = 1; i <= n; ++i) {
    i64 sign = (i % 2 == 0) ? -1 : 1;  // q^i - (-1)^i
    order_part = order_part * (Poly::monomial(1, i) + Poly::constant(sign));
  }
  int eps_g = (n / 2) % 2 == 0 ? 1 : -1;
  QPoly total;
  for (const auto& mu : partitions_of(n)) {
    Poly torus = Poly::constant(1);
    int eps_t = 1;
    for (int d : mu) {
      i64 sign = (d % 2 == 0) ? -1 : 1;
      torus = torus * (Poly::monomial(1, d) + Poly::constant(sign));
      if (d % 2 == 0) eps_t = -eps_t;
    }
    Poly quotient = order_part.divide_exact(torus);
    i64 weight = mn_value(lambda, mu) * eps_g * eps_t;
    total = total + QPoly(quotient * weight, centralizer_order(mu));
  }
  return total;
}

UnitaryData unitary_data(int n) {
  UnitaryData d;
  d.n = n;
  d.shapes = partitions_of(n);
  for (const auto& lambda : d.shapes) {
    QPoly raw = gu_raw_degree(n, lambda);
    int eps = raw.leading_sign();
    if (eps == 0) throw data_error("unitary_data: vanishing degree for " + partition_str(lambda));
    d.epsilon.push_back(eps);
    d.degrees.push_back(raw * eps);
    if (!d.degrees.back().is_integral())
      throw data_error("unitary_data: non-integral degree for " + partition_str(lambda));
  }
  return d;
}

RwTable unitary_rw_table(int n) {
  UnitaryData ud = unitary_data(n);
  CoxeterSystem W("A", n - 1);
  Word w0 = W.longest_word();
  RwTable t;
  t.group = "gu" + std::to_string(n);
  for (const auto& lambda : ud.shapes) t.basis.push_back(partition_str(lambda));
  for (const auto& rep : W.min_twisted_class_representatives()) {
    Word rw0 = rep;
    rw0.insert(rw0.end(), w0.begin(), w0.end());
    Partition type = type_a_cycle_type(rw0, n);
    RwEntry e;
    e.length = W.length(rep);
    for (size_t i = 0; i < ud.shapes.size(); ++i)
      e.coeffs.push_back(ud.epsilon[i] * mn_value(ud.shapes[i], type));
    t.rw[word_to_string(rep)] = e;
  }
  return t;
}

i64 gu_hook_coefficient(int n) {
  if (n < 3) throw data_error("gu_hook_coefficient: needs n >= 3");
  Partition hook{2};
  for (int i = 0; i < n - 2; ++i) hook.push_back(1);
  UnitaryData ud = unitary_data(n);
  int eps = 0;
  for (size_t i = 0; i < ud.shapes.size(); ++i)
    if (ud.shapes[i] == hook) eps = ud.epsilon[i];
  if (eps == 0) throw data_error("gu_hook_coefficient: hook shape not found");
  i64 l_w0 = static_cast<i64>(n) * (n - 1) / 2;
  i64 sign = (l_w0 + 1) % 2 == 0 ? 1 : -1;
  return sign * eps * (n - 1);
}

}  // namespace dlrep
