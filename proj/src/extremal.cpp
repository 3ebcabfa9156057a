#include "maxmatch/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "maxmatch/canonical.hpp"
#include "maxmatch/families.hpp"
#include "maxmatch/signs.hpp"
#include "maxmatch/tree.hpp"

namespace maxmatch {

namespace {

// psi over a tree list, chunked across threads; results land per index so
// the outcome does not depend on the thread count.
std::vector<BigNat> psi_all(const std::vector<Tree>& trees, int threads) {
  std::vector<BigNat> vals(trees.size());
  threads = std::max(1, threads);
  if (threads == 1 || trees.size() < 2) {
    for (size_t i = 0; i < trees.size(); ++i) vals[i] = psi(trees[i]);
    return vals;
  }
  size_t workers = std::min<size_t>(threads, trees.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = w; i < trees.size(); i += workers) vals[i] = psi(trees[i]);
    });
  }
  for (auto& th : pool) th.join();
  return vals;
}

AchieverFlags flags_of(const Tree& t) {
  auto s = structural_predicates(t);
  AchieverFlags f;
  f.branch_vertex_count = static_cast<int>(s.branch_vertices.size());
  f.max_leaf_siblings = s.max_leaf_siblings;
  f.pendant_star_sizes = s.pendant_star_sizes;
  f.max_pendant_path_length =
      s.pendant_path_lengths.empty() ? 0 : s.pendant_path_lengths.back();
  return f;
}

struct Minimizers {
  BigNat min_psi;
  std::vector<Tree> trees;  // sorted by canonical code
  std::vector<std::string> codes;
};

Minimizers find_minimizers(int n, int threads, int cap) {
  auto trees = all_trees_vec(n, cap);
  auto vals = psi_all(trees, threads);
  Minimizers m;
  m.min_psi = vals[0];
  for (const auto& v : vals) m.min_psi = std::min(m.min_psi, v);
  std::vector<std::pair<std::string, size_t>> hits;
  for (size_t i = 0; i < trees.size(); ++i)
    if (vals[i] == m.min_psi) hits.emplace_back(canonical_code(trees[i]), i);
  std::sort(hits.begin(), hits.end());
  for (auto& [code, i] : hits) {
    m.codes.push_back(code);
    m.trees.push_back(std::move(trees[i]));
  }
  return m;
}

}  // namespace

ExtremalReport min_psi_search(int n, int threads, int cap) {
  if (n < 2) throw std::invalid_argument("min_psi_search: n must be at least 2");
  auto m = find_minimizers(n, threads, cap);

  ExtremalReport r;
  r.n = n;
  r.min_psi = m.min_psi;
  r.bound = ceil_half(n);
  for (size_t i = 0; i < m.trees.size(); ++i) {
    Achiever a;
    a.code = m.codes[i];
    a.legs = is_spider(m.trees[i]);
    a.flags = flags_of(m.trees[i]);
    r.achievers.push_back(std::move(a));
  }
  for (const auto& fi : extremal_family(n)) r.predicted.push_back(canonical_code(fi.tree));
  std::sort(r.predicted.begin(), r.predicted.end());

  r.pass = r.min_psi == r.bound && r.predicted == m.codes;
  if (r.min_psi != r.bound) {
    r.violations.push_back({{"kind", "min_psi_mismatch"},
                            {"min_psi", to_decimal(r.min_psi)},
                            {"bound", to_decimal(r.bound)}});
  }
  for (const auto& a : r.achievers)
    if (!std::binary_search(r.predicted.begin(), r.predicted.end(), a.code))
      r.violations.push_back({{"kind", "unexpected_achiever"}, {"code", a.code}});
  for (const auto& code : r.predicted)
    if (!std::binary_search(m.codes.begin(), m.codes.end(), code))
      r.violations.push_back({{"kind", "missing_predicted"}, {"code", code}});
  return r;
}

StructureReport check_structural_theorems(int n, int threads, int cap) {
  if (n < 8) throw std::invalid_argument("check_structural_theorems: n must be at least 8");
  auto m = find_minimizers(n, threads, cap);
  StructureReport r;
  r.n = n;
  r.minimizer_count = static_cast<int>(m.trees.size());
  for (size_t i = 0; i < m.trees.size(); ++i) {
    auto s = structural_predicates(m.trees[i]);
    auto fail = [&](const char* what) { r.violations.push_back({m.codes[i], what}); };
    if (s.max_leaf_siblings >= 3) fail("vertex_with_three_leaves");
    if (!s.pendant_star_sizes.empty()) fail("pendant_star");
    if (!s.pendant_path_lengths.empty() && s.pendant_path_lengths.back() >= 4)
      fail("pendant_path_p4");
    if (s.branch_vertices.size() != 1) fail("branch_vertex_count");
  }
  r.pass = r.violations.empty();
  return r;
}

EvenReport check_even_theorem(int n, int cap) {
  if (n < 3) throw std::invalid_argument("check_even_theorem: n must be at least 3");
  EvenReport r;
  r.n = n;
  all_trees(n, [&](const Tree& t) {
    BigNat full = psi(t);
    bool qualifies = true;
    for (int v = 0; v < t.n && qualifies; ++v) {
      if (t.degree(v) != 1) continue;
      if (psi(delete_leaf(t, v).tree) != full) qualifies = false;
    }
    if (!qualifies) return;
    std::string code = canonical_code(t);
    r.qualifying.push_back(code);
    if (n % 2 != 0) r.violations.push_back({code, "odd_order"});
    for (int v = 0; v < t.n; ++v) {
      if (t.degree(v) < 2) continue;
      int leaves = 0;
      for (int w : t.adj[v])
        if (t.degree(w) == 1) ++leaves;
      if (leaves != 1) {
        r.violations.push_back({code, "inner_vertex_leaf_count"});
        break;
      }
    }
  }, cap);
  std::sort(r.qualifying.begin(), r.qualifying.end());
  r.pass = r.violations.empty();
  return r;
}

BoundReport verify_lower_bound(int n_max, int threads, int cap) {
  BoundReport r;
  r.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    auto trees = all_trees_vec(n, cap);
    auto vals = psi_all(trees, threads);
    r.tree_counts.push_back(static_cast<long long>(trees.size()));
    BigNat bound = ceil_half(n);
    for (size_t i = 0; i < trees.size(); ++i)
      if (vals[i] < bound)
        r.violations.push_back({n, canonical_code(trees[i]), vals[i]});
  }
  r.pass = r.violations.empty();
  return r;
}

nlohmann::json to_json(const ExtremalReport& r) {
  nlohmann::json achievers = nlohmann::json::array();
  for (const auto& a : r.achievers) {
    nlohmann::json legs;
    if (a.legs)
      legs = a.legs->legs;
    else
      legs = nullptr;
    achievers.push_back({{"code", a.code},
                         {"legs", legs},
                         {"flags",
                          {{"branch_vertices", a.flags.branch_vertex_count},
                           {"max_leaf_siblings", a.flags.max_leaf_siblings},
                           {"pendant_star_sizes", a.flags.pendant_star_sizes},
                           {"max_pendant_path_length", a.flags.max_pendant_path_length}}}});
  }
  return {{"n", r.n},
          {"min_psi", to_decimal(r.min_psi)},
          {"bound", to_decimal(r.bound)},
          {"achievers", achievers},
          {"predicted", r.predicted},
          {"pass", r.pass},
          {"violations", r.violations}};
}

nlohmann::json to_json(const StructureReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"code", v.code}, {"assertion", v.assertion}});
  return {{"n", r.n},
          {"minimizers", r.minimizer_count},
          {"pass", r.pass},
          {"violations", violations}};
}

nlohmann::json to_json(const EvenReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"code", v.code}, {"assertion", v.assertion}});
  return {{"n", r.n},
          {"qualifying", r.qualifying},
          {"pass", r.pass},
          {"violations", violations}};
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json checked = nlohmann::json::array();
  for (size_t i = 0; i < r.tree_counts.size(); ++i)
    checked.push_back({{"n", static_cast<int>(i) + 2}, {"trees", r.tree_counts[i]}});
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back(
        {{"n", v.n}, {"code", v.code}, {"psi", to_decimal(v.psi_value)}});
  return {{"n_max", r.n_max}, {"checked", checked}, {"pass", r.pass}, {"violations", violations}};
}

}  // namespace maxmatch
