#include "maxmatch/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maxmatch {

int SpiderSpec::order() const {
  return 1 + std::accumulate(legs.begin(), legs.end(), 0);
}

namespace {

// Walks away from `from` through degree-2 vertices; returns the number of
// edges traversed and the endpoint reached.
std::pair<int, int> walk_leg(const Tree& t, int from, int first) {
  int prev = from, cur = first, edges = 1;
  while (t.degree(cur) == 2) {
    int next = t.adj[cur][0] == prev ? t.adj[cur][1] : t.adj[cur][0];
    prev = cur;
    cur = next;
    ++edges;
  }
  return {edges, cur};
}

}  // namespace

std::optional<SpiderSpec> is_spider(const Tree& t) {
  if (t.n < 2) throw std::invalid_argument("is_spider: tree must have at least 2 vertices");
  int branch = -1;
  for (int v = 0; v < t.n; ++v) {
    if (t.degree(v) >= 3) {
      if (branch >= 0) return std::nullopt;
      branch = v;
    }
  }
  SpiderSpec spec;
  if (branch >= 0) {
    // every maximal walk from the only branch vertex ends in a leaf
    for (int w : t.adj[branch]) spec.legs.push_back(walk_leg(t, branch, w).first);
  } else {
    // a path: split at the interior vertex ceil(n/2) positions along it
    int end = 0;
    while (t.degree(end) != 1) ++end;
    std::vector<int> seq{end};
    int prev = -1, cur = end;
    while (static_cast<int>(seq.size()) < t.n) {
      int next = -1;
      for (int w : t.adj[cur])
        if (w != prev) next = w;
      prev = cur;
      cur = next;
      seq.push_back(cur);
    }
    int center = (t.n + 1) / 2 - 1;  // index into seq
    if (center > 0) spec.legs.push_back(center);
    if (t.n - 1 - center > 0) spec.legs.push_back(t.n - 1 - center);
  }
  std::sort(spec.legs.begin(), spec.legs.end());
  return spec;
}

StructureSummary structural_predicates(const Tree& t) {
  StructureSummary s;
  std::vector<int> leaf_neighbors(t.n, 0);
  for (int v = 0; v < t.n; ++v)
    for (int w : t.adj[v])
      if (t.degree(w) == 1) ++leaf_neighbors[v];

  for (int v = 0; v < t.n; ++v) {
    s.max_leaf_siblings = std::max(s.max_leaf_siblings, leaf_neighbors[v]);
    if (t.degree(v) >= 3) {
      s.branch_vertices.push_back(v);
      if (leaf_neighbors[v] == t.degree(v) - 1) s.pendant_star_sizes.push_back(t.degree(v));
      for (int w : t.adj[v]) {
        auto [edges, end] = walk_leg(t, v, w);
        if (t.degree(end) == 1) s.pendant_path_lengths.push_back(edges + 1);
      }
    }
  }
  std::sort(s.pendant_path_lengths.begin(), s.pendant_path_lengths.end());
  std::sort(s.pendant_star_sizes.begin(), s.pendant_star_sizes.end());
  return s;
}

}  // namespace maxmatch
