#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxmatch/canonical.hpp"
#include "maxmatch/errors.hpp"
#include "maxmatch/extremal.hpp"
#include "maxmatch/families.hpp"
#include "maxmatch/generate.hpp"
#include "maxmatch/oracle.hpp"
#include "maxmatch/signs.hpp"
#include "maxmatch/structure.hpp"
#include "maxmatch/tree.hpp"

namespace {

using namespace maxmatch;
using nlohmann::json;

Forest forest_of(Tree t) {
  Forest f;
  std::vector<int> ids(t.n);
  for (int i = 0; i < t.n; ++i) ids[i] = i;
  f.components.push_back(std::move(t));
  f.global_ids.push_back(std::move(ids));
  return f;
}

Forest load_input(const std::string& input, const std::string& family) {
  if (!family.empty() && !input.empty())
    throw std::invalid_argument("give either an input file or --family, not both");
  if (!family.empty()) return forest_of(parse_family_spec(family).tree);
  if (input.empty()) throw std::invalid_argument("no input: expected an edge-list file or --family");
  std::ifstream in(input);
  if (!in) throw std::invalid_argument("cannot open '" + input + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

int run_count(const Forest& f, bool signs, const std::string& format) {
  BigNat value = psi_forest(f);
  json sign_rows = json::array();
  std::vector<std::string> text_rows;
  if (signs) {
    for (size_t c = 0; c < f.components.size(); ++c) {
      auto table = compute_signs(root_tree(f.components[c], 0));
      for (int v = 0; v < f.components[c].n; ++v) {
        const Sign& s = table.signs[v];
        int g = f.global_ids[c][v];
        sign_rows.push_back({{"vertex", g},
                             {"alpha", to_decimal(s.alpha)},
                             {"beta", to_decimal(s.beta)},
                             {"gamma", to_decimal(s.gamma)}});
        text_rows.push_back(std::to_string(g) + ": " + to_decimal(s.alpha) + " " +
                            to_decimal(s.beta) + " " + to_decimal(s.gamma));
      }
    }
  }
  if (format == "json") {
    json out{{"psi", to_decimal(value)}};
    if (signs) out["signs"] = sign_rows;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_decimal(value) << "\n";
    for (const auto& row : text_rows) std::cout << row << "\n";
  }
  return 0;
}

int run_enumerate(const Forest& f, int cap, const std::string& format) {
  std::vector<Matching> all;
  for_each_maximal(f, [&](const Matching& m) {
    all.push_back(m);
    return true;
  }, cap);
  if (format == "json") {
    json matchings = json::array();
    for (const auto& m : all) {
      json edges = json::array();
      for (auto [u, v] : m) edges.push_back({u, v});
      matchings.push_back(edges);
    }
    std::cout << json{{"count", all.size()}, {"matchings", matchings}}.dump() << "\n";
  } else {
    for (const auto& m : all) {
      std::string line;
      for (auto [u, v] : m) {
        if (!line.empty()) line += ' ';
        line += std::to_string(u) + "-" + std::to_string(v);
      }
      std::cout << line << "\n";
    }
    std::cout << "count: " << all.size() << "\n";
  }
  return 0;
}

int run_gen(const std::string& spec, const std::string& out_path) {
  FamilyInstance fi = parse_family_spec(spec);
  std::string text = format_edge_list(fi.tree);
  std::ostream* info = &std::cout;
  if (out_path.empty()) {
    std::cout << text;
    info = &std::cerr;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << text;
  }
  *info << "order: " << fi.tree.n << "\n";
  if (fi.expected_psi) *info << "expected_psi: " << to_decimal(*fi.expected_psi) << "\n";
  return 0;
}

struct SignsSuiteStats {
  long long exhaustive_trees = 0;
  long long random_trees = 0;
};

// Sign inequalities and root invariance: exhaustively over all trees of
// order 2..n_max with every root, then on seeded random trees.
json run_signs_suite(int n_max, int cap, std::uint64_t seed, SignsSuiteStats& stats) {
  json violations = json::array();
  auto check_tree = [&](const Tree& t, int root, const BigNat* expect_psi) {
    auto rt = root_tree(t, root);
    auto table = compute_signs(rt);
    for (int v = 0; v < t.n; ++v) {
      const Sign& s = table.signs[v];
      bool ok = s.alpha <= s.gamma && s.alpha + s.beta >= s.gamma && s.gamma >= 1 &&
                (rt.children[v].empty() || s.beta >= 1);
      if (!ok)
        violations.push_back({{"kind", "sign_inequality"},
                              {"code", canonical_code(t)},
                              {"root", root},
                              {"vertex", v}});
    }
    BigNat total = table.signs[root].alpha + table.signs[root].beta;
    if (expect_psi && total != *expect_psi)
      violations.push_back({{"kind", "root_dependence"},
                            {"code", canonical_code(t)},
                            {"root", root}});
    return total;
  };

  for (int n = 2; n <= n_max; ++n) {
    all_trees(n, [&](const Tree& t) {
      ++stats.exhaustive_trees;
      BigNat reference = check_tree(t, 0, nullptr);
      for (int root = 1; root < t.n; ++root) check_tree(t, root, &reference);
    }, cap);
  }

  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    int n = 2 + static_cast<int>(rng() % 59);
    Tree t = random_tree(n, rng());
    ++stats.random_trees;
    BigNat reference = check_tree(t, 0, nullptr);
    for (int k = 0; k < 5; ++k)
      check_tree(t, static_cast<int>(rng() % n), &reference);
  }
  return violations;
}

int run_verify(const std::string& suite, int n_max, int threads, int cap_search,
               int cap_oracle, std::uint64_t seed, const std::string& format) {
  if (n_max > cap_search)
    throw cap_exceeded("n_max " + std::to_string(n_max) + " exceeds search cap " +
                       std::to_string(cap_search));
  json out{{"suite", suite}, {"n_max", n_max}};
  bool pass = true;
  std::ostringstream text;

  if (suite == "bound") {
    auto r = verify_lower_bound(n_max, threads, cap_search);
    pass = r.pass;
    out.merge_patch(to_json(r));
    for (size_t i = 0; i < r.tree_counts.size(); ++i)
      text << "n=" << i + 2 << " trees=" << r.tree_counts[i] << "\n";
  } else if (suite == "characterization") {
    json reports = json::array();
    for (int n = 2; n <= n_max; ++n) {
      auto r = min_psi_search(n, threads, cap_search);
      pass = pass && r.pass;
      reports.push_back(to_json(r));
      text << "n=" << n << " min_psi=" << to_decimal(r.min_psi)
           << " achievers=" << r.achievers.size() << (r.pass ? " ok" : " MISMATCH") << "\n";
    }
    out["reports"] = reports;
  } else if (suite == "structure") {
    if (n_max < 8) throw std::invalid_argument("structure suite needs n_max >= 8");
    json reports = json::array();
    for (int n = 8; n <= n_max; ++n) {
      auto r = check_structural_theorems(n, threads, cap_search);
      pass = pass && r.pass;
      reports.push_back(to_json(r));
      text << "n=" << n << " minimizers=" << r.minimizer_count
           << (r.pass ? " ok" : " VIOLATION") << "\n";
    }
    out["reports"] = reports;
  } else if (suite == "even") {
    if (n_max < 3) throw std::invalid_argument("even suite needs n_max >= 3");
    json reports = json::array();
    for (int n = 3; n <= n_max; ++n) {
      auto r = check_even_theorem(n, cap_search);
      pass = pass && r.pass;
      reports.push_back(to_json(r));
      text << "n=" << n << " qualifying=" << r.qualifying.size()
           << (r.pass ? " ok" : " VIOLATION") << "\n";
    }
    out["reports"] = reports;
  } else if (suite == "oracle") {
    json violations = json::array();
    long long checked = 0;
    for (int n = 2; n <= n_max; ++n) {
      all_trees(n, [&](const Tree& t) {
        ++checked;
        BigNat dp = psi(t);
        BigNat brute = count_maximal(t, cap_oracle);
        if (dp != brute) {
          violations.push_back({{"n", n},
                                {"code", canonical_code(t)},
                                {"psi", to_decimal(dp)},
                                {"enumerated", to_decimal(brute)}});
        }
      }, cap_search);
      text << "n=" << n << " done\n";
    }
    pass = violations.empty();
    out["checked"] = checked;
    out["violations"] = violations;
  } else {  // signs
    SignsSuiteStats stats;
    json violations = run_signs_suite(n_max, cap_search, seed, stats);
    pass = violations.empty();
    out["exhaustive_trees"] = stats.exhaustive_trees;
    out["random_trees"] = stats.random_trees;
    out["violations"] = violations;
    text << "exhaustive_trees=" << stats.exhaustive_trees
         << " random_trees=" << stats.random_trees << "\n";
  }

  out["pass"] = pass;
  if (format == "json") {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << text.str() << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting of maximal matchings in trees and forests"};
  app.require_subcommand(1);

  std::string input, family, format, out_path, spec, suite;
  bool signs = false;
  int n_max = 0;
  int threads = 1;
  int cap_search = kDefaultTreeCap;
  int cap_oracle = kDefaultOracleCap;
  std::uint64_t seed = 12345;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* count = app.add_subcommand("count", "number of maximal matchings of a forest");
  count->add_option("input", input, "edge-list file");
  count->add_option("--family", family, "inline family spec, e.g. spider:1,2,2");
  count->add_flag("--signs", signs, "also print the per-vertex (alpha, beta, gamma) table");
  add_format(count);

  auto* enumerate = app.add_subcommand("enumerate", "list every maximal matching");
  enumerate->add_option("input", input, "edge-list file");
  enumerate->add_option("--family", family, "inline family spec");
  enumerate->add_option("--cap-oracle", cap_oracle, "enumeration order cap")
      ->check(CLI::PositiveNumber);
  add_format(enumerate);

  auto* gen = app.add_subcommand("gen", "write a named family as an edge list");
  gen->add_option("spec", spec, "family spec, e.g. subdivided_star:5,2")->required();
  gen->add_option("--out", out_path, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "bound|characterization|structure|even|oracle|signs")
      ->required()
      ->check(CLI::IsMember({"bound", "characterization", "structure", "even", "oracle", "signs"}));
  verify->add_option("n_max", n_max, "largest order checked")->required()->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "worker threads")
      ->envname("MAXMATCH_THREADS")
      ->check(CLI::PositiveNumber);
  verify->add_option("--cap-search", cap_search, "tree enumeration cap")->check(CLI::PositiveNumber);
  verify->add_option("--cap-oracle", cap_oracle, "enumeration order cap")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for the randomized checks");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    // count and enumerate default to text, verify to a JSON report
    if (count->parsed()) return run_count(load_input(input, family), signs,
                                          format.empty() ? "text" : format);
    if (enumerate->parsed()) return run_enumerate(load_input(input, family), cap_oracle,
                                                  format.empty() ? "text" : format);
    if (gen->parsed()) return run_gen(spec, out_path);
    return run_verify(suite, n_max, threads, cap_search, cap_oracle, seed,
                      format.empty() ? "json" : format);
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
