#include "maxmatch/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "maxmatch/canonical.hpp"
#include "maxmatch/errors.hpp"

namespace maxmatch {

namespace {

// Decodes every Prufer sequence over [0,n)^(n-2) in odometer order into a
// reusable buffer tree (unsorted adjacency, not validated).
template <class Fn>
void scan_prufer(int n, Fn&& fn) {
  Tree t;
  t.n = n;
  t.adj.assign(n, {});
  if (n == 1) {
    fn(t);
    return;
  }
  std::vector<int> seq(n - 2, 0);
  std::vector<int> degree(n);
  for (;;) {
    for (auto& a : t.adj) a.clear();
    std::fill(degree.begin(), degree.end(), 1);
    for (int a : seq) ++degree[a];
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int a : seq) {
      t.adj[leaf].push_back(a);
      t.adj[a].push_back(leaf);
      if (--degree[a] == 1 && a < ptr) {
        leaf = a;
      } else {
        ++ptr;
        while (degree[ptr] != 1) ++ptr;
        leaf = ptr;
      }
    }
    t.adj[leaf].push_back(n - 1);
    t.adj[n - 1].push_back(leaf);
    fn(t);

    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
}

Tree normalized_copy(const Tree& t) {
  Tree out;
  out.n = t.n;
  out.adj = t.adj;
  for (auto& a : out.adj) std::sort(a.begin(), a.end());
  return out;
}

}  // namespace

void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_labeled_tree: n must be at least 1");
  scan_prufer(n, [&](const Tree& t) { fn(normalized_copy(t)); });
}

void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_free_tree: n must be at least 1");
  if (n == 1) {
    Tree t;
    t.n = 1;
    t.adj.assign(1, {});
    fn(t);
    return;
  }

  // Beyer-Hedetniemi successor over canonical level sequences of rooted
  // trees, lexicographically decreasing from the path to the star.
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i + 1;

  Tree t;
  t.n = n;
  t.adj.assign(n, {});
  std::vector<int> at_level(n + 2, -1);
  detail::AhuScratch scratch;
  const bool packed = n <= 30;

  for (;;) {
    for (auto& a : t.adj) a.clear();
    at_level[1] = 0;
    for (int i = 1; i < n; ++i) {
      int p = at_level[level[i] - 1];
      t.adj[p].push_back(i);
      t.adj[i].push_back(p);
      at_level[level[i]] = i;
    }

    // keep only the rooting the free-tree canon picks: the root must be a
    // centroid, and at a bicentroid the one with the smaller rooted code
    int cs[2];
    int ccount = 0;
    detail::centroids_into(t, scratch, cs, ccount);
    bool accept = false;
    if (ccount == 1) {
      accept = cs[0] == 0;
    } else if (cs[0] == 0 || cs[1] == 0) {
      int other = cs[0] == 0 ? cs[1] : cs[0];
      if (packed) {
        accept = detail::packed_code(t, 0, scratch) <= detail::packed_code(t, other, scratch);
      } else {
        accept = rooted_code(t, 0) <= rooted_code(t, other);
      }
    }
    if (accept) fn(normalized_copy(t));

    int p = n - 1;
    while (p >= 0 && level[p] <= 2) --p;
    if (p < 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
}

void all_trees(int n, const std::function<void(const Tree&)>& fn, int cap) {
  if (n < 1) throw std::invalid_argument("all_trees: n must be at least 1");
  if (n > cap) throw cap_exceeded("all_trees: n exceeds cap " + std::to_string(cap));
  if (n <= 9) {
    detail::AhuScratch scratch;
    std::unordered_set<std::uint64_t> seen;
    scan_prufer(n, [&](const Tree& t) {
      if (seen.insert(detail::packed_canonical(t, scratch)).second) fn(normalized_copy(t));
    });
  } else {
    for_each_free_tree(n, fn);
  }
}

std::vector<Tree> all_trees_vec(int n, int cap) {
  std::vector<Tree> out;
  all_trees(n, [&](const Tree& t) { out.push_back(t); }, cap);
  return out;
}

}  // namespace maxmatch
