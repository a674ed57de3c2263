// Command-line front end.  Exit codes: 0 ok, 1 mismatch/infeasible,
// 2 usage error, 3 data error.
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dlrep/brauer.hpp"
#include "dlrep/coxeter.hpp"
#include "dlrep/coxvar.hpp"
#include "dlrep/data_io.hpp"
#include "dlrep/decsolver.hpp"
#include "dlrep/dlchar.hpp"
#include "dlrep/lefschetz.hpp"
#include "dlrep/partitions.hpp"
#include "dlrep/repro.hpp"

namespace {

using namespace dlrep;

// Bundled-name-or-path resolution: anything with a slash or a .json suffix
// is a literal path, otherwise it names a file in the given data subdir.
std::string resolve(const std::string& arg, const std::string& subdir) {
  if (arg.find('/') != std::string::npos ||
      (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json"))
    return arg;
  return data_dir() + "/" + subdir + "/" + arg + ".json";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_decsolve(const std::string& group, bool as_json, int cap) {
  std::vector<std::string> warnings;
  const GroupData g = load_group_file(resolve(group, "groups"), &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  const SolveResult res = solve(build_problem(g, cap));
  if (as_json) {
    const DecompositionMatrix& m =
        res.solutions.empty() ? res.fixpoint : res.solutions.front();
    std::cout << matrix_to_json(m) << log_to_json(res.log);
  } else {
    std::cout << render_solution(g, res);
  }
  return res.solutions.empty() ? 1 : 0;
}

int cmd_brauer_walk(const std::string& tree_arg, const std::string& start) {
  const BrauerTree tree = load_tree_file(resolve(tree_arg, "trees"));
  const auto walk = green_walk(tree, start);
  std::ostringstream edges, chars;
  for (size_t i = 0; i < walk.size(); ++i) {
    if (i) {
      edges << ",";
      chars << ",";
    }
    edges << walk[i].edge;
    chars << walk[i].character;
  }
  std::cout << "T   = " << edges.str() << "\n"
            << "chi = " << chars.str() << "\n";
  return 0;
}

int cmd_brauer_validate(const std::string& tree_arg) {
  const BrauerTree tree = load_tree_file(resolve(tree_arg, "trees"));
  const auto reports = validate_tree(tree);
  for (const RuleReport& r : reports) {
    std::cout << r.rule << ": " << rule_status_str(r.status) << "\n";
    for (const std::string& note : r.notes) std::cout << "  " << note << "\n";
  }
  return all_rules_hold(reports) ? 0 : 1;
}

int cmd_brauer_determine(const std::string& problem_arg, bool verbose,
                         bool dot) {
  const DetermineProblem problem =
      load_determine_file(resolve(problem_arg, "determine"));
  const DetermineResult res = determine_tree(problem);
  std::cout << "candidates tried: " << res.candidates << "\n";
  std::cout << "surviving trees: " << res.trees.size()
            << " in " << res.chirality_classes.size() << " chirality class"
            << (res.chirality_classes.size() == 1 ? "" : "es") << "\n";
  for (size_t i = 0; i < res.trees.size(); ++i) {
    std::cout << "tree " << i + 1 << ":\n";
    std::istringstream canon(res.trees[i].canonical_form());
    for (std::string line; std::getline(canon, line);)
      std::cout << "  " << line << "\n";
    if (dot) std::cout << tree_to_dot(res.trees[i]);
  }
  if (verbose) {
    std::cout << "eliminations:\n";
    for (const std::string& line : res.eliminations)
      std::cout << "  " << line << "\n";
  }
  return res.trees.empty() ? 1 : 0;
}

int cmd_brauer_dot(const std::string& tree_arg, const std::string& out) {
  const BrauerTree tree = load_tree_file(resolve(tree_arg, "trees"));
  const std::string dot = tree_to_dot(tree);
  if (out.empty()) {
    std::cout << dot;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw data_error("cannot write '" + out + "'");
    f << dot;
  }
  return 0;
}

int cmd_dl_table(int gu_n, const std::string& group) {
  RwTable table;
  if (gu_n > 0) {
    table = unitary_rw_table(gu_n);
    std::cout << "# twisted induction table for GU" << gu_n << "\n";
  } else {
    const GroupData g = load_group_file(resolve(group, "groups"));
    table = g.rw_full;
    std::cout << "# induction table from " << g.name << "\n";
  }
  std::cout << "basis:";
  for (const std::string& b : table.basis) std::cout << " " << b;
  std::cout << "\n";
  std::vector<std::string> keys;
  for (const auto& [key, entry] : table.rw) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [&](const std::string& a, const std::string& b) {
    return std::make_pair(table.rw.at(a).length, a) <
           std::make_pair(table.rw.at(b).length, b);
  });
  for (const std::string& key : keys) {
    const RwEntry& e = table.rw.at(key);
    std::cout << "w=" << (key.empty() ? "e" : key) << " l=" << e.length << ":";
    for (i64 c : e.coeffs) std::cout << " " << c;
    std::cout << "\n";
  }
  return 0;
}

int cmd_mn(int n, bool orthogonality) {
  const auto shapes = partitions_of(n);
  std::cout << "# character table of S_" << n
            << " (rows chi^lambda, columns cycle types)\n";
  std::vector<std::string> col_names;
  for (const Partition& mu : shapes) col_names.push_back(partition_str(mu));
  size_t label_w = 0;
  for (const std::string& s : col_names) label_w = std::max(label_w, s.size());

  std::vector<std::vector<i64>> table(shapes.size(),
                                      std::vector<i64>(shapes.size()));
  std::vector<size_t> col_w(shapes.size());
  for (size_t c = 0; c < shapes.size(); ++c) col_w[c] = col_names[c].size();
  for (size_t r = 0; r < shapes.size(); ++r) {
    for (size_t c = 0; c < shapes.size(); ++c) {
      table[r][c] = mn_value(shapes[r], shapes[c]);
      col_w[c] = std::max(col_w[c], std::to_string(table[r][c]).size());
    }
  }
  std::cout << std::string(label_w, ' ');
  for (size_t c = 0; c < shapes.size(); ++c)
    std::cout << "  " << std::setw(int(col_w[c])) << col_names[c];
  std::cout << "\n";
  for (size_t r = 0; r < shapes.size(); ++r) {
    std::cout << std::left << std::setw(int(label_w)) << col_names[r]
              << std::right;
    for (size_t c = 0; c < shapes.size(); ++c)
      std::cout << "  " << std::setw(int(col_w[c])) << table[r][c];
    std::cout << "\n";
  }

  if (orthogonality) {
    for (size_t c1 = 0; c1 < shapes.size(); ++c1) {
      for (size_t c2 = 0; c2 < shapes.size(); ++c2) {
        i64 sum = 0;
        for (size_t r = 0; r < shapes.size(); ++r)
          sum += table[r][c1] * table[r][c2];
        const i64 expected = (c1 == c2) ? centralizer_order(shapes[c1]) : 0;
        if (sum != expected) {
          std::cout << "column orthogonality FAILS at " << col_names[c1]
                    << ", " << col_names[c2] << "\n";
          return 1;
        }
      }
    }
    std::cout << "column orthogonality: ok\n";
  }
  return 0;
}

void points_row(const std::string& variety, i64 q, int n, i64 count,
                i64 prediction, bool& all_match) {
  std::cout << variety << "," << q << "," << n << "," << count << ","
            << prediction << "," << (count == prediction ? "yes" : "no")
            << "\n";
  if (count != prediction) all_match = false;
}

int cmd_points(const std::string& variety, i64 q, int n, int dim, bool all) {
  bool ok = true;
  std::cout << "variety,q,n,count,prediction,match\n";
  if (all) {
    std::cout << run_repro("points").substr(
        std::string("variety,q,n,count,prediction,match\n").size());
    return 0;
  }
  if (variety == "p1") {
    points_row("p1", q, n, point_count(projective_space(1), q, n),
               checked_pow(q, unsigned(n)) + 1, ok);
  } else if (variety == "gm") {
    points_row("gm", q, n, point_count(torus(1), q, n),
               checked_pow(q, unsigned(n)) - 1, ok);
  } else if (variety == "an") {
    points_row("a" + std::to_string(dim), q, n, point_count(affine_space(dim), q, n),
               checked_pow(q, unsigned(n * dim)), ok);
  } else if (variety == "drinfeld") {
    points_row("drinfeld", q, n, brute_force_drinfeld(q, n).projective_count,
               gl_coxeter_prediction(2, q, n), ok);
  } else if (variety == "glcox") {
    points_row("glcox" + std::to_string(dim), q, n, gl_coxeter_points(dim, q, n),
               gl_coxeter_prediction(dim, q, n), ok);
  }
  return ok ? 0 : 1;
}

int cmd_coxeter(const std::string& type, int rank, const std::string& word,
                bool classes, bool twisted) {
  const CoxeterSystem W(type, rank);
  if (!word.empty()) {
    const Word w = word_from_string(word);
    std::cout << "word: " << word << "\n"
              << "canonical: " << word_to_string(W.canonical_word(w)) << "\n"
              << "length: " << W.length(w) << "\n";
    return 0;
  }
  if (classes) {
    const auto reps =
        twisted ? W.min_twisted_class_representatives() : W.min_class_representatives();
    std::cout << "# minimal " << (twisted ? "twisted " : "")
              << "class representatives of " << type << rank << "\n";
    for (const Word& w : reps)
      std::cout << (w.empty() ? "e" : word_to_string(w)) << " (l=" << W.length(w)
                << ")\n";
    return 0;
  }
  std::cout << "type: " << type << rank << "\n"
            << "order: " << W.order() << "\n"
            << "positive roots: " << W.num_positive_roots() << "\n"
            << "coxeter number: " << W.coxeter_number() << "\n"
            << "longest word: " << word_to_string(W.longest_word()) << "\n"
            << "poincare polynomial: " << W.poincare_polynomial().str() << "\n";
  return 0;
}

int cmd_repro(const std::string& target, bool all, bool write) {
  std::vector<std::string> names;
  if (all) {
    for (const ReproTarget& t : repro_targets()) names.push_back(t.name);
  } else if (!target.empty()) {
    bool known = false;
    for (const ReproTarget& t : repro_targets()) known |= (t.name == target);
    if (!known) {
      std::cerr << "unknown repro target '" << target << "'; available:\n";
      for (const ReproTarget& t : repro_targets())
        std::cerr << "  " << t.name << "  " << t.description << "\n";
      return 2;
    }
    names.push_back(target);
  } else {
    std::cerr << "repro needs a target name or --all; available:\n";
    for (const ReproTarget& t : repro_targets())
      std::cerr << "  " << t.name << "  " << t.description << "\n";
    return 2;
  }

  int rc = 0;
  for (const std::string& name : names) {
    const std::string actual = run_repro(name);
    if (write) {
      std::ofstream f(golden_path(name), std::ios::binary);
      if (!f) throw data_error("cannot write '" + golden_path(name) + "'");
      f << actual;
      std::cout << "target " << name << ": written\n";
      continue;
    }
    const std::string expected = read_file(golden_path(name));
    if (actual == expected) {
      std::cout << "target " << name << ": ok\n";
    } else {
      std::cout << "target " << name << ": MISMATCH\n"
                << line_diff(expected, actual);
      rc = 1;
    }
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact modular representation data of finite reductive groups"};
  app.require_subcommand(1);
  int rc = 0;

  // decsolve
  auto* decsolve = app.add_subcommand(
      "decsolve", "solve a unipotent decomposition matrix from a group file");
  std::string ds_group;
  bool ds_json = false;
  int ds_cap = 0;
  decsolve->add_option("--group", ds_group, "bundled group name or JSON path")
      ->required();
  decsolve->add_flag("--json", ds_json, "emit canonical JSON instead of text");
  decsolve->add_option("--cap", ds_cap, "override the search cap");
  decsolve->callback([&] { rc = cmd_decsolve(ds_group, ds_json, ds_cap); });

  // brauer
  auto* brauer = app.add_subcommand("brauer", "planar-tree computations");
  brauer->require_subcommand(1);
  std::string br_tree, br_start, br_problem, br_out;
  bool br_verbose = false, br_dot = false;

  auto* walk = brauer->add_subcommand("walk", "walk around a tree from a leaf edge");
  walk->add_option("--tree", br_tree, "bundled tree name or JSON path")->required();
  walk->add_option("--start", br_start, "starting edge label")->required();
  walk->callback([&] { rc = cmd_brauer_walk(br_tree, br_start); });

  auto* validate = brauer->add_subcommand("validate", "run the structural rules");
  validate->add_option("--tree", br_tree, "bundled tree name or JSON path")->required();
  validate->callback([&] { rc = cmd_brauer_validate(br_tree); });

  auto* determine = brauer->add_subcommand(
      "determine", "recover the embedded tree from stem, pairs and facts");
  determine->add_option("--problem", br_problem, "bundled problem name or JSON path")
      ->required();
  determine->add_flag("--eliminations", br_verbose, "list rejected attachments");
  determine->add_flag("--dot", br_dot, "emit DOT for each surviving tree");
  determine->callback([&] { rc = cmd_brauer_determine(br_problem, br_verbose, br_dot); });

  auto* dot = brauer->add_subcommand("dot", "export a tree as Graphviz DOT");
  dot->add_option("--tree", br_tree, "bundled tree name or JSON path")->required();
  dot->add_option("--out", br_out, "output file (stdout when absent)");
  dot->callback([&] { rc = cmd_brauer_dot(br_tree, br_out); });

  // dl-table
  auto* dltable = app.add_subcommand("dl-table", "twisted-induction coefficient tables");
  int dt_gu = 0;
  std::string dt_group;
  dltable->add_option("--gu", dt_gu, "compute the table for GU_n");
  dltable->add_option("--group", dt_group, "load the table of a bundled group file");
  dltable->callback([&] {
    if (dt_gu <= 0 && dt_group.empty())
      throw CLI::ValidationError("dl-table", "needs --gu N or --group NAME");
    rc = cmd_dl_table(dt_gu, dt_group);
  });

  // mn
  auto* mn = app.add_subcommand("mn", "symmetric-group character table");
  int mn_n = 4;
  bool mn_orth = false;
  mn->add_option("--n", mn_n, "symbols")->required()->check(CLI::Range(1, 12));
  mn->add_flag("--orthogonality", mn_orth, "verify column orthogonality");
  mn->callback([&] { rc = cmd_mn(mn_n, mn_orth); });

  // points
  auto* points = app.add_subcommand("points", "point counts over F_{q^n} (CSV)");
  std::string pt_variety = "p1";
  i64 pt_q = 2;
  int pt_n = 1, pt_dim = 1;
  bool pt_all = false;
  points->add_option("--variety", pt_variety, "p1, gm, an, drinfeld or glcox")
      ->check(CLI::IsMember({"p1", "gm", "an", "drinfeld", "glcox"}));
  points->add_option("--q", pt_q, "base field size");
  points->add_option("--n", pt_n, "extension degree");
  points->add_option("--dim", pt_dim, "dimension for an / glcox");
  points->add_flag("--all", pt_all, "emit the full bundled table");
  points->callback([&] { rc = cmd_points(pt_variety, pt_q, pt_n, pt_dim, pt_all); });

  // coxeter
  auto* coxeter = app.add_subcommand("coxeter", "finite Coxeter group facts");
  std::string cx_type = "A";
  int cx_rank = 2;
  std::string cx_word;
  bool cx_classes = false, cx_twisted = false;
  coxeter->add_option("--type", cx_type, "Cartan type letter")->required();
  coxeter->add_option("--rank", cx_rank, "rank")->required();
  coxeter->add_option("--word", cx_word, "canonicalize a generator word");
  coxeter->add_flag("--classes", cx_classes, "minimal class representatives");
  coxeter->add_flag("--twisted", cx_twisted, "twisted classes (with --classes)");
  coxeter->callback(
      [&] { rc = cmd_coxeter(cx_type, cx_rank, cx_word, cx_classes, cx_twisted); });

  // repro
  auto* repro = app.add_subcommand("repro", "recompute pinned tables and figures");
  std::string rp_target;
  bool rp_all = false, rp_write = false;
  repro->add_option("target", rp_target, "target name");
  repro->add_flag("--all", rp_all, "run every target");
  repro->add_flag("--write", rp_write, "rewrite the golden files");
  repro->callback([&] { rc = cmd_repro(rp_target, rp_all, rp_write); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const cap_exceeded_error& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
