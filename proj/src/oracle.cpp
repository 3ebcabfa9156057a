#include "maxmatch/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxmatch/errors.hpp"

namespace maxmatch {

namespace {

// Branches on edges in sorted order, include before exclude. An edge with
// a covered endpoint is skipped; excluding an addable edge is pruned when
// neither endpoint can be covered by a later edge. Maximality is checked
// when the edge list is exhausted.
struct MatchingScan {
  const std::vector<Edge>& edges;
  const std::function<bool(const Matching&)>& fn;
  std::vector<int> last_touch;
  std::vector<char> covered;
  Matching current;
  bool keep_going = true;

  MatchingScan(int n_, const std::vector<Edge>& edges_,
               const std::function<bool(const Matching&)>& fn_)
      : edges(edges_), fn(fn_), last_touch(n_, -1), covered(n_, 0) {
    for (size_t i = 0; i < edges.size(); ++i) {
      last_touch[edges[i].first] = static_cast<int>(i);
      last_touch[edges[i].second] = static_cast<int>(i);
    }
  }

  bool maximal() const {
    for (auto [u, v] : edges)
      if (!covered[u] && !covered[v]) return false;
    return true;
  }

  void run(size_t idx) {
    if (!keep_going) return;
    if (idx == edges.size()) {
      if (maximal()) keep_going = fn(current);
      return;
    }
    auto [u, v] = edges[idx];
    if (covered[u] || covered[v]) {
      run(idx + 1);
      return;
    }
    covered[u] = covered[v] = 1;
    current.push_back(edges[idx]);
    run(idx + 1);
    current.pop_back();
    covered[u] = covered[v] = 0;
    if (last_touch[u] <= static_cast<int>(idx) && last_touch[v] <= static_cast<int>(idx))
      return;  // the excluded edge would stay addable forever
    run(idx + 1);
  }
};

void scan_matchings(int n, const std::vector<Edge>& edges,
                    const std::function<bool(const Matching&)>& fn) {
  MatchingScan scan(n, edges, fn);
  scan.run(0);
}

std::vector<Edge> forest_edges(const Forest& f) {
  std::vector<Edge> edges;
  for (size_t c = 0; c < f.components.size(); ++c) {
    const auto& ids = f.global_ids[c];
    for (auto [u, v] : tree_edges(f.components[c])) {
      int a = ids[u], b = ids[v];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

void check_cap(int order, int cap) {
  if (order > cap)
    throw cap_exceeded("enumeration order " + std::to_string(order) +
                       " exceeds cap " + std::to_string(cap));
}

}  // namespace

bool is_maximal(const Tree& t, const Matching& m) {
  std::vector<char> covered(t.n, 0);
  for (auto [u, v] : m) {
    if (u < 0 || u >= t.n || v < 0 || v >= t.n || !t.has_edge(u, v))
      throw std::invalid_argument("is_maximal: edge not in tree");
    if (covered[u] || covered[v])
      throw std::invalid_argument("is_maximal: edges share a vertex");
    covered[u] = covered[v] = 1;
  }
  for (auto [u, v] : tree_edges(t))
    if (!covered[u] && !covered[v]) return false;
  return true;
}

void for_each_maximal(const Tree& t, const std::function<bool(const Matching&)>& fn, int cap) {
  check_cap(t.n, cap);
  scan_matchings(t.n, tree_edges(t), fn);
}

void for_each_maximal(const Forest& f, const std::function<bool(const Matching&)>& fn, int cap) {
  check_cap(f.order(), cap);
  int max_id = 0;
  for (const auto& ids : f.global_ids)
    for (int g : ids) max_id = std::max(max_id, g);
  scan_matchings(max_id + 1, forest_edges(f), fn);
}

std::vector<Matching> enumerate_maximal(const Tree& t, int cap) {
  std::vector<Matching> out;
  for_each_maximal(t, [&](const Matching& m) {
    out.push_back(m);
    return true;
  }, cap);
  return out;
}

BigNat count_maximal(const Tree& t, int cap) {
  unsigned long long count = 0;
  for_each_maximal(t, [&](const Matching&) {
    ++count;
    return true;
  }, cap);
  return BigNat(static_cast<unsigned long>(count));
}

BigNat count_maximal(const Forest& f, int cap) {
  unsigned long long count = 0;
  for_each_maximal(f, [&](const Matching&) {
    ++count;
    return true;
  }, cap);
  return BigNat(static_cast<unsigned long>(count));
}

bool covered_by_all(const Tree& t, int v, int cap) {
  if (t.n < 2) throw std::invalid_argument("covered_by_all: tree must have at least 2 vertices");
  if (v < 0 || v >= t.n) throw std::invalid_argument("covered_by_all: vertex out of range");
  bool all = true;
  for_each_maximal(t, [&](const Matching& m) {
    for (auto [a, b] : m)
      if (a == v || b == v) return true;  // covered, keep scanning
    all = false;
    return false;
  }, cap);
  return all;
}

}  // namespace maxmatch
