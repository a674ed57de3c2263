#include "dlrep/data_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "dlrep/coxeter.hpp"

namespace dlrep {

using nlohmann::json;

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw data_error("cannot parse '" + path + "': " + e.what());
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw data_error(path + ": " + what);
}

}  // namespace

GroupData load_group_file(const std::string& path,
                          std::vector<std::string>* warnings) {
  json j = parse_file(path);
  GroupData g;
  try {
    g.name = j.at("name").get<std::string>();
    g.case_tag = j.value("case", "");
    const json& grp = j.at("group");
    g.type = grp.at("type").get<std::string>();
    g.rank = grp.at("rank").get<int>();
    g.twisted = grp.value("twisted", false);
    g.cap = j.value("cap", 16);
    if (g.cap < 1) fail(path, "cap must be positive");

    for (const json& c : j.at("characters")) {
      CharacterInfo info;
      info.label = c.at("label").get<std::string>();
      info.a_value = c.at("a").get<i64>();
      if (c.contains("degree")) {
        info.has_degree = true;
        info.degree = QPoly(Poly(c.at("degree").get<std::vector<i64>>()), 1);
      }
      info.series = c.value("series", "");
      info.real = c.value("real", true);
      g.characters.chars.push_back(info);
      g.in_block.push_back(c.value("block", true));
    }
    if (!g.characters.sorted_by_a()) {
      // Stable re-sort keeps ties in file order; block flags follow labels.
      std::map<std::string, bool> block_of;
      for (size_t i = 0; i < g.characters.chars.size(); ++i)
        block_of[g.characters.chars[i].label] = g.in_block[i];
      g.characters.sort_by_a();
      for (size_t i = 0; i < g.characters.chars.size(); ++i)
        g.in_block[i] = block_of.at(g.characters.chars[i].label);
      if (warnings)
        warnings->push_back(path + ": characters were not sorted by a-value; re-sorted");
    }
    std::set<std::string> labels;
    for (const auto& c : g.characters.chars)
      if (!labels.insert(c.label).second)
        fail(path, "duplicate character label '" + c.label + "'");

    const json& mat = j.at("matrix");
    g.matrix_name = mat.value("name", g.name);
    g.matrix_rows = mat.at("rows").get<std::vector<std::string>>();
    g.matrix_cols = mat.at("cols").get<std::vector<std::string>>();
    // Matrix rows must list exactly the block characters in basis order.
    {
      std::vector<std::string> block_labels;
      for (size_t i = 0; i < g.characters.chars.size(); ++i)
        if (g.in_block[i]) block_labels.push_back(g.characters.chars[i].label);
      if (g.matrix_rows != block_labels) {
        std::string msg = "matrix rows do not match the block characters in basis order; expected [";
        for (size_t i = 0; i < block_labels.size(); ++i)
          msg += (i ? " " : "") + block_labels[i];
        fail(path, msg + "]");
      }
    }
    const json& ent = mat.at("entries");
    if (ent.size() != g.matrix_rows.size())
      fail(path, "matrix has " + std::to_string(ent.size()) + " entry rows, expected " +
                     std::to_string(g.matrix_rows.size()));
    std::set<std::string> unames;
    for (size_t r = 0; r < ent.size(); ++r) {
      const json& row = ent[r];
      if (row.size() != g.matrix_cols.size())
        fail(path, "matrix row " + std::to_string(r + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(g.matrix_cols.size()));
      std::vector<MatrixEntry> out_row;
      for (size_t c = 0; c < row.size(); ++c) {
        const json& cell = row[c];
        MatrixEntry e;
        if (cell.is_number_integer()) {
          e.known = true;
          e.value = cell.get<i64>();
        } else if (cell.is_object()) {
          e.known = false;
          UnknownSpec spec;
          spec.name = cell.value("name", "d" + std::to_string(r + 1) +
                                             std::to_string(c + 1));
          spec.lo = cell.value("lo", i64{0});
          if (cell.contains("hi")) spec.hi = cell.at("hi").get<i64>();
          if (spec.lo < 0) fail(path, "unknown '" + spec.name + "' has a negative floor");
          if (!unames.insert(spec.name).second)
            fail(path, "unknown name '" + spec.name + "' used twice");
          e.unknown = spec.name;
          g.unknown_specs.push_back(spec);
        } else {
          fail(path, "matrix entry at row " + std::to_string(r + 1) + ", column " +
                         std::to_string(c + 1) + " is neither an integer nor an object");
        }
        out_row.push_back(e);
      }
      g.pattern.push_back(std::move(out_row));
    }

    std::map<std::string, size_t> row_index;
    for (size_t i = 0; i < g.matrix_rows.size(); ++i)
      row_index[g.matrix_rows[i]] = i;

    for (const json& h : j.value("hc_columns", json::array())) {
      HcColumn hc;
      hc.column = h.at("column").get<int>();
      hc.channel = h.at("channel").get<std::string>();
      if (hc.channel != "hc" && hc.channel != "hecke")
        fail(path, "hc_columns channel must be 'hc' or 'hecke'");
      hc.indecomposable = h.value("indecomposable", false);
      hc.source = h.value("source", "unattributed projective character");
      hc.character.assign(g.matrix_rows.size(), 0);
      for (const auto& [label, mult] : h.at("character").items()) {
        auto it = row_index.find(label);
        if (it == row_index.end())
          fail(path, "hc_columns character mentions '" + label +
                         "', not a block character");
        i64 v = mult.get<i64>();
        if (v < 0) fail(path, "hc_columns character has negative multiplicity at '" + label + "'");
        hc.character[it->second] = v;
      }
      if (hc.column < 1 || size_t(hc.column) > g.matrix_cols.size())
        fail(path, "hc_columns column index " + std::to_string(hc.column) + " out of range");
      g.hc_columns.push_back(std::move(hc));
    }

    const json& rwj = j.at("rw_table");
    g.rw_full.group = g.name;
    g.rw_full.basis = rwj.at("basis").get<std::vector<std::string>>();
    g.rw_complete = rwj.value("complete", true);
    for (const auto& label : g.rw_full.basis)
      if (!labels.count(label))
        fail(path, "rw_table basis mentions unknown character '" + label + "'");
    for (const auto& [key, val] : rwj.at("rw").items()) {
      RwEntry e;
      e.coeffs = val.at("coeffs").get<std::vector<i64>>();
      e.length = val.at("length").get<unsigned>();
      if (e.coeffs.size() != g.rw_full.basis.size())
        fail(path, "induction vector for representative '" + key + "' has " +
                       std::to_string(e.coeffs.size()) + " coefficients, expected " +
                       std::to_string(g.rw_full.basis.size()));
      g.rw_full.rw[key] = std::move(e);
    }
    if (g.rw_full.rw.empty()) fail(path, "rw_table has no entries");

    if (j.contains("reg")) {
      g.reg_enabled = j["reg"].value("enabled", false);
      g.reg_keys = j["reg"].value("keys", std::vector<std::string>{});
      for (const auto& k : g.reg_keys)
        if (!g.rw_full.rw.count(k))
          fail(path, "general-position key '" + k + "' is not in the rw_table");
    }

    const json torus = j.value("torus_orders", json::object());
    for (const auto& [key, coeffs] : torus.items()) {
      if (!g.rw_full.rw.count(key))
        fail(path, "torus order given for '" + key + "', not a table key");
      g.torus_orders[key] = Poly(coeffs.get<std::vector<i64>>());
    }
  } catch (const json::exception& e) {
    fail(path, std::string("schema violation: ") + e.what());
  }
  return g;
}

SolverProblem build_problem(const GroupData& g, int cap_override) {
  SolverProblem p;
  p.cap = cap_override > 0 ? cap_override : g.cap;

  for (size_t i = 0; i < g.characters.chars.size(); ++i)
    if (g.in_block[i]) p.basis.chars.push_back(g.characters.chars[i]);

  std::map<std::string, Interval> unknowns;
  for (const auto& spec : g.unknown_specs) {
    Interval iv{spec.lo, spec.hi ? *spec.hi : p.cap};
    if (iv.lo > iv.hi)
      throw data_error("unknown '" + spec.name + "' has an empty prior interval");
    unknowns[spec.name] = iv;
  }
  p.matrix = DecompositionMatrix(g.matrix_name, g.matrix_rows, g.matrix_cols,
                                 g.pattern, unknowns);
  for (size_t r = 0; r < g.matrix_rows.size(); ++r)
    for (size_t c = 0; c < g.matrix_cols.size(); ++c) {
      const MatrixEntry& e = p.matrix.entry(r, c);
      if (r == c && !(e.known && e.value == 1))
        throw data_error("matrix " + g.matrix_name + " has no unit diagonal at row " +
                         g.matrix_rows[r]);
      if (c > r && !(e.known && e.value == 0))
        throw data_error("matrix " + g.matrix_name +
                         " has a non-fixed entry above the diagonal at row " +
                         g.matrix_rows[r]);
    }

  p.hc_columns = g.hc_columns;
  p.rw_complete = g.rw_complete;
  p.reg_enabled = g.reg_enabled;
  p.reg_keys = g.reg_keys;

  // Validate the table keys against the Weyl group and recompute what the
  // solver needs from them.
  CoxeterSystem W(g.type, g.rank);
  std::vector<Word> reps = g.twisted ? W.min_twisted_class_representatives()
                                     : W.min_class_representatives();
  std::set<std::string> rep_set;
  for (const auto& w : reps) rep_set.insert(word_to_string(w));

  std::map<std::string, Word> words;
  for (const auto& [key, ent] : g.rw_full.rw) {
    Word w = word_from_string(key);
    for (int s : w)
      if (s < 1 || s > g.rank)
        throw data_error("representative '" + key + "' uses a generator outside rank " +
                         std::to_string(g.rank));
    if (W.length(W.from_word(w)) != ent.length)
      throw data_error("representative '" + key + "' declares length " +
                       std::to_string(ent.length) + " but has length " +
                       std::to_string(W.length(W.from_word(w))));
    if (!rep_set.count(key))
      throw data_error("representative '" + key +
                       "' is not a minimal class representative");
    words[key] = w;
    p.keys.push_back(key);
  }
  if (g.rw_complete && p.keys.size() != reps.size())
    throw data_error("rw_table declares itself complete but lists " +
                     std::to_string(p.keys.size()) + " of " +
                     std::to_string(reps.size()) + " classes");
  std::sort(p.keys.begin(), p.keys.end(),
            [&](const std::string& a, const std::string& b) {
              size_t la = g.rw_full.rw.at(a).length, lb = g.rw_full.rw.at(b).length;
              return la != lb ? la < lb : a < b;
            });
  for (const auto& a : p.keys) {
    p.smaller[a] = {};
    for (const auto& b : p.keys)
      if (b != a && W.bruhat_leq(words[b], words[a])) p.smaller[a].push_back(b);
  }

  // Cut the coefficient table to the matrix rows (dropping characters
  // outside the block, e.g. defect-zero ones).
  std::map<std::string, size_t> basis_index;
  for (size_t i = 0; i < g.rw_full.basis.size(); ++i)
    basis_index[g.rw_full.basis[i]] = i;
  p.rw.group = g.rw_full.group;
  p.rw.basis = g.matrix_rows;
  for (const auto& key : p.keys) {
    RwEntry cut;
    cut.length = g.rw_full.rw.at(key).length;
    for (const auto& row : g.matrix_rows) {
      auto it = basis_index.find(row);
      if (it == basis_index.end())
        throw data_error("rw_table basis is missing block character '" + row + "'");
      cut.coeffs.push_back(g.rw_full.rw.at(key).coeffs[it->second]);
    }
    p.rw.rw[key] = std::move(cut);
  }
  return p;
}

std::string data_dir() {
  if (const char* env = std::getenv("DLREP_DATA")) return env;
#ifdef DLREP_DEFAULT_DATA_DIR
  return DLREP_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

std::string matrix_to_json(const DecompositionMatrix& m) {
  json out;
  out["name"] = m.name();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  json entries = json::array();
  for (size_t r = 0; r < m.rows().size(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols().size(); ++c) {
      auto v = m.known_value(r, c);
      if (v) {
        row.push_back(*v);
      } else {
        const MatrixEntry& e = m.entry(r, c);
        const Interval& iv = m.interval(e.unknown);
        row.push_back({{"name", e.unknown}, {"lo", iv.lo}, {"hi", iv.hi}});
      }
    }
    entries.push_back(row);
  }
  out["entries"] = entries;
  return out.dump(2) + "\n";
}

std::string log_to_json(const DeductionLog& log) {
  json out = json::array();
  for (const auto& e : log.entries)
    out.push_back({{"rule", e.rule},
                   {"cell", e.cell},
                   {"before", {e.before.lo, e.before.hi}},
                   {"after", {e.after.lo, e.after.hi}},
                   {"reason", e.reason}});
  return out.dump(2) + "\n";
}

}  // namespace dlrep
