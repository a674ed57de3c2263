// Eigenvalue ladders of the Coxeter variety, their reduction mod ell, and
// the resulting Heller-translate identifications cross-checked against
// planar Brauer trees.

#include "dlrep/coxvar.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace dlrep {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw data_error(msg); }

int positive_mod(int value, int mod) { return ((value % mod) + mod) % mod; }

}  // namespace

std::string root_str(const RootOfUnity& z) {
  int e = z.order > 0 ? positive_mod(z.exp, z.order) : 0;
  if (z.order <= 1 || e == 0) return "1";
  if (z.order == 2) return "-1";
  if (z.order == 4 && e == 1) return "i";
  if (z.order == 4 && e == 3) return "-i";
  if (z.order == 3 && e == 1) return "theta";
  if (z.order == 3 && e == 2) return "theta^2";
  std::ostringstream os;
  os << "zeta" << z.order;
  if (e != 1) os << "^" << e;
  return os.str();
}

std::string eigenvalue_str(const Eigenvalue& e) {
  std::string root = root_str(e.zeta);
  std::string qpart;
  if (e.twice_power == 2)
    qpart = "q";
  else if (e.twice_power != 0 && e.twice_power % 2 == 0)
    qpart = "q^" + std::to_string(e.twice_power / 2);
  else if (e.twice_power % 2 != 0)
    qpart = "q^" + std::to_string(e.twice_power) + "/2";
  if (qpart.empty()) return root;
  if (root == "1") return qpart;
  if (root == "-1") return "-" + qpart;
  return root + " " + qpart;
}

void EigenvalueCongruence::check() const {
  if (h < 2) fail("the order of q mod ell must be at least 2");
  if (q_half_order != 2 * h)
    fail("the class of q^(1/2) must have order " + std::to_string(2 * h) + ", declared " +
         std::to_string(q_half_order));
  std::map<int, int> seen;
  for (const auto& rule : rules) {
    if (rule.order < 2) fail("congruence rules must classify roots of order at least 2");
    if (rule.half_power < 0 || rule.half_power >= q_half_order)
      fail("congruence rule class out of range for a root of order " +
           std::to_string(rule.order));
    if (!seen.emplace(rule.order, rule.half_power).second)
      fail("two congruence rules for roots of order " + std::to_string(rule.order));
    // zeta^order = 1, and no smaller power may hit 1.
    for (int j = 1; j < rule.order; ++j)
      if (positive_mod(j * rule.half_power, q_half_order) == 0)
        fail("congruence rule for order " + std::to_string(rule.order) +
             " does not map to a primitive root");
    if (positive_mod(rule.order * rule.half_power, q_half_order) != 0)
      fail("congruence rule for order " + std::to_string(rule.order) +
           " is inconsistent with zeta^order = 1");
  }
}

int EigenvalueCongruence::resolve_root(const RootOfUnity& z) const {
  if (z.order < 1) fail("a root of unity needs a positive order");
  int e = positive_mod(z.exp, z.order);
  if (e == 0) return 0;
  int g = std::gcd(e, z.order);
  int order = z.order / g;  // primitive order of zeta^exp
  int exp = e / g;
  for (const auto& rule : rules)
    if (rule.order == order) return positive_mod(exp * rule.half_power, q_half_order);
  for (const auto& rule : rules)
    if (rule.order % order == 0)
      return positive_mod(exp * (rule.order / order) * rule.half_power, q_half_order);
  fail("no congruence rule resolves a root of unity of order " + std::to_string(order));
}

int EigenvalueCongruence::resolve(const Eigenvalue& e) const {
  return positive_mod(resolve_root(e.zeta) + e.twice_power, q_half_order);
}

int EigenvalueCongruence::q_power(const Eigenvalue& e) const {
  int v = resolve(e);
  if (v % 2 != 0)
    fail("eigenvalue " + eigenvalue_str(e) + " reduces to an odd power of q^(1/2), not a power of q");
  return v / 2;
}

std::vector<LadderEntry> eigen_ladder(const SeriesDatum& series, int r) {
  if (r < 1) fail("the Coxeter length must be positive");
  if (series.twice_m < 0 || series.twice_m > r)
    fail("series '" + series.id + "': the ladder offset must lie between 0 and " +
         std::to_string(r));
  size_t count = static_cast<size_t>(r - series.twice_m + 1);
  if (series.chars.size() != count)
    fail("series '" + series.id + "': the ladder from degree " + std::to_string(r) + " to " +
         std::to_string(2 * r - series.twice_m) + " needs " + std::to_string(count) +
         " characters, got " + std::to_string(series.chars.size()));
  std::vector<LadderEntry> out;
  out.reserve(count);
  for (size_t j = 0; j < count; ++j) {
    LadderEntry entry;
    entry.degree = r + static_cast<int>(j);
    entry.eigenvalue = {series.zeta, series.twice_m + 2 * static_cast<int>(j)};
    entry.character = series.chars[j];
    out.push_back(entry);
  }
  return out;
}

Eigenvalue mu(const SeriesDatum& series, int r) {
  RootOfUnity inv{series.zeta.order,
                  positive_mod(-series.zeta.exp, std::max(series.zeta.order, 1))};
  return {inv, 2 * r - series.twice_m};
}

Identification omega_identification(const EigenvalueCongruence& cong, int r,
                                    const SeriesDatum& series) {
  std::vector<LadderEntry> ladder = eigen_ladder(series, r);
  int m = cong.q_power(ladder.front().eigenvalue);
  Identification id;
  id.series = series.id;
  id.exponent = 2 * static_cast<i64>(m) - r;
  id.character = ladder.front().character;
  id.m = m;
  return id;
}

std::vector<Identification> identify_all(const GroupSeries& data) {
  data.cong.check();
  std::vector<Identification> out;
  for (const auto& s : data.series) out.push_back(omega_identification(data.cong, data.r, s));
  return out;
}

namespace {

std::string class_str(int half_power) {
  if (half_power == 0) return "1";
  if (half_power % 2 == 0) return "q^" + std::to_string(half_power / 2);
  return "q^" + std::to_string(half_power) + "/2";
}

}  // namespace

EigenspaceFacts eigenspace_facts(const BlockCohomology& block) {
  block.cong.check();
  std::map<int, std::vector<const BlockEntry*>> classes;
  for (const auto& e : block.entries) classes[block.cong.resolve(e.eigenvalue)].push_back(&e);

  EigenspaceFacts facts;
  for (const auto& [value, members] : classes) {
    std::map<int, std::vector<const BlockEntry*>> by_degree;
    for (const auto* e : members) by_degree[e->degree].push_back(e);

    if (by_degree.size() == 1) {
      // Concentrated in one degree: the eigenspace is a projective lattice,
      // so two characters there must label the ends of a single edge.
      if (members.size() == 2)
        facts.adjacent.emplace_back(members[0]->character, members[1]->character);
      else if (members.size() > 2)
        fail("eigenvalue class " + class_str(value) + " has " +
             std::to_string(members.size()) + " characters in one degree; unsupported");
      continue;
    }
    if (by_degree.size() == 2) {
      // Two degrees a < b: the complex identifies Omega^{b-a+1} of the top
      // character's simple with the bottom character.
      auto low = by_degree.begin();
      auto high = std::next(low);
      if (low->second.size() != 1 || high->second.size() != 1)
        fail("eigenvalue class " + class_str(value) +
             " has several characters in one of its two degrees; unsupported");
      Identification id;
      id.series = class_str(value);
      id.exponent = high->first - low->first + 1;
      id.character = low->second.front()->character;
      id.start_character = high->second.front()->character;
      facts.omegas.push_back(id);
      continue;
    }
    fail("eigenvalue class " + class_str(value) + " spreads over " +
         std::to_string(by_degree.size()) + " degrees; unsupported");
  }
  return facts;
}

std::vector<CrossCheckItem> cross_check_tree(const BrauerTree& tree,
                                             const std::string& trivial_char,
                                             const EigenspaceFacts& facts) {
  std::vector<CrossCheckItem> items;
  for (const auto& [a, b] : facts.adjacent) {
    CrossCheckItem item;
    std::string edge = tree.edge_between(a, b);
    item.ok = !edge.empty();
    item.description = a + " and " + b + " share a projective: " +
                       (item.ok ? "edge '" + edge + "'" : "no edge between them");
    items.push_back(item);
  }
  for (const auto& id : facts.omegas) {
    const std::string& start = id.start_character.empty() ? trivial_char : id.start_character;
    if (!tree.has_vertex(start)) fail("unknown start character '" + start + "'");
    if (!tree.is_leaf(start)) fail("start character '" + start + "' is not a leaf");
    const std::string& edge = tree.incident(start).front();
    OmegaModule om = omega_power(tree, edge, id.exponent);
    CrossCheckItem item;
    item.ok = om.character == id.character;
    item.description = "Omega^" + std::to_string(id.exponent) + " of the simple at " + start +
                       " lifts to " + om.character +
                       (item.ok ? "" : ", expected " + id.character);
    items.push_back(item);
  }
  return items;
}

std::vector<CrossCheckItem> cross_check_tree(const BrauerTree& tree,
                                             const std::string& trivial_char,
                                             const std::vector<Identification>& ids) {
  EigenspaceFacts facts;
  facts.omegas = ids;
  return cross_check_tree(tree, trivial_char, facts);
}

bool all_consistent(const std::vector<CrossCheckItem>& items) {
  for (const auto& item : items)
    if (!item.ok) return false;
  return true;
}

GroupSeries gl_series(int n) {
  if (n < 2) fail("gl_series needs n >= 2");
  GroupSeries data;
  data.name = "gl" + std::to_string(n);
  data.r = n - 1;
  data.cong.h = n;
  data.cong.q_half_order = 2 * n;
  SeriesDatum principal;
  principal.id = "principal";
  principal.zeta = {1, 0};
  principal.twice_m = 0;
  for (int arm = 0; arm < n; ++arm) {
    // Hook with `arm` boxes to the right of the corner.
    std::ostringstream os;
    os << "[" << arm + 1;
    for (int i = 0; i < n - arm - 1; ++i) os << ",1";
    os << "]";
    principal.chars.push_back(os.str());
  }
  data.series.push_back(std::move(principal));
  return data;
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("'" + path + "': " + e.what());
  }
  return j;
}

RootOfUnity root_from_json(const json& j) {
  RootOfUnity z;
  z.order = j.at("order").get<int>();
  z.exp = j.value("exp", z.order == 1 ? 0 : 1);
  if (z.order < 1) fail("a root of unity needs a positive order");
  return z;
}

Eigenvalue eigenvalue_from_json(const json& j) {
  Eigenvalue e;
  e.zeta = root_from_json(j);
  e.twice_power = j.value("twice_power", 0);
  return e;
}

EigenvalueCongruence cong_from_json(const json& j) {
  EigenvalueCongruence cong;
  cong.h = j.at("h").get<int>();
  cong.q_half_order = j.value("q_half_order", 2 * cong.h);
  const json rules = j.value("congruences", json::array());
  for (const json& rj : rules) {
    CongruenceRule rule;
    rule.order = rj.at("order").get<int>();
    rule.half_power = rj.at("half_power").get<int>();
    cong.rules.push_back(rule);
  }
  cong.check();
  return cong;
}

}  // namespace

GroupSeries load_series_file(const std::string& path) {
  try {
    json j = read_json_file(path);
    GroupSeries data;
    data.name = j.value("name", std::string());
    data.r = j.at("r").get<int>();
    data.cong = cong_from_json(j);
    std::map<std::string, int> seen;
    for (const json& sj : j.at("series")) {
      SeriesDatum s;
      s.id = sj.at("id").get<std::string>();
      s.zeta = root_from_json(sj.at("zeta"));
      s.twice_m = sj.at("twice_m").get<int>();
      s.chars = sj.at("chars").get<std::vector<std::string>>();
      eigen_ladder(s, data.r);  // validates the ladder shape
      for (const auto& c : s.chars)
        if (++seen[c] > 1) fail("character '" + c + "' appears in two ladders");
      data.series.push_back(std::move(s));
    }
    if (data.series.empty()) fail("'" + path + "': no series");
    return data;
  } catch (const json::exception& e) {
    fail("'" + path + "': " + e.what());
  }
}

BlockCohomology load_block_file(const std::string& path) {
  try {
    json j = read_json_file(path);
    BlockCohomology block;
    block.name = j.value("name", std::string());
    block.r = j.at("r").get<int>();
    block.cong = cong_from_json(j);
    block.trivial = j.at("trivial").get<std::string>();
    std::map<std::string, int> seen;
    for (const json& ej : j.at("block_cohomology")) {
      BlockEntry e;
      e.character = ej.at("character").get<std::string>();
      e.degree = ej.at("degree").get<int>();
      e.eigenvalue = eigenvalue_from_json(ej.at("eigenvalue"));
      if (e.degree < block.r || e.degree > 2 * block.r)
        fail("character '" + e.character + "' sits in degree " + std::to_string(e.degree) +
             ", outside [" + std::to_string(block.r) + ", " + std::to_string(2 * block.r) + "]");
      if (++seen[e.character] > 1) fail("character '" + e.character + "' listed twice");
      block.entries.push_back(std::move(e));
    }
    if (!seen.count(block.trivial))
      fail("the declared trivial character '" + block.trivial + "' is not listed");
    return block;
  } catch (const json::exception& e) {
    fail("'" + path + "': " + e.what());
  }
}

}  // namespace dlrep
