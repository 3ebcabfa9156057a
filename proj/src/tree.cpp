#include "maxmatch/tree.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace maxmatch {

namespace {

std::invalid_argument err(const std::string& msg) { return std::invalid_argument(msg); }

struct UnionFind {
  std::vector<int> parent;

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // false if x and y were already connected
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

}  // namespace

bool Tree::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Forest::order() const {
  int total = 0;
  for (const auto& c : components) total += c.n;
  return total;
}

Tree tree_from_edges(int n, const std::vector<Edge>& edges) {
  Tree t;
  t.n = n;
  t.adj.assign(n, {});
  for (auto [u, v] : edges) {
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
  }
  for (auto& a : t.adj) std::sort(a.begin(), a.end());
  validate_tree(t);
  return t;
}

void validate_tree(const Tree& t) {
  if (t.n < 1) throw err("tree must have at least one vertex");
  if (static_cast<int>(t.adj.size()) != t.n) throw err("adjacency size mismatch");
  long long edge_ends = 0;
  for (int u = 0; u < t.n; ++u) {
    const auto& a = t.adj[u];
    edge_ends += static_cast<long long>(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      int v = a[i];
      if (v < 0 || v >= t.n) throw err("neighbor id out of range");
      if (v == u) throw err("self-loop");
      if (i > 0 && a[i] == a[i - 1]) throw err("parallel edge");
      if (i > 0 && a[i] < a[i - 1]) throw err("adjacency not sorted");
      if (!t.has_edge(v, u)) throw err("adjacency not symmetric");
    }
  }
  if (edge_ends != 2LL * (t.n - 1)) throw err("edge count is not n-1");
  // n-1 edges + connectivity check; acyclicity follows
  std::vector<char> seen(t.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int w : t.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  if (visited != t.n) throw err("tree is not connected");
}

std::vector<Edge> tree_edges(const Tree& t) {
  std::vector<Edge> edges;
  edges.reserve(t.n > 0 ? t.n - 1 : 0);
  for (int u = 0; u < t.n; ++u)
    for (int v : t.adj[u])
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

RootedTree root_tree(const Tree& t, int root) {
  if (root < 0 || root >= t.n) throw err("root out of range");
  RootedTree rt;
  rt.tree = t;
  rt.root = root;
  rt.parent.assign(t.n, -1);
  rt.children.assign(t.n, {});
  std::vector<int> order;
  order.reserve(t.n);
  std::vector<char> seen(t.n, 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        rt.parent[w] = v;
        stack.push_back(w);
      }
  }
  for (int v : order)
    if (v != root) rt.children[rt.parent[v]].push_back(v);
  rt.post_order.assign(order.rbegin(), order.rend());
  return rt;
}

Forest parse_edge_list(const std::string& text) {
  std::unordered_map<long long, int> id_of;
  std::vector<std::pair<int, int>> edges;
  int next_id = 0;
  auto intern = [&](long long label) {
    auto [it, fresh] = id_of.emplace(label, next_id);
    if (fresh) ++next_id;
    return it->second;
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  UnionFind uf;
  auto grow_uf = [&](int upto) {
    while (static_cast<int>(uf.parent.size()) <= upto)
      uf.parent.push_back(static_cast<int>(uf.parent.size()));
  };
  std::unordered_map<long long, char> edge_seen;  // key = min*2^32 + max

  while (std::getline(in, line)) {
    ++line_no;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;

    long long vals[2];
    int count = 0;
    const char* p = line.data() + pos;
    const char* end = line.data() + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
      if (p >= end) break;
      if (count == 2) throw err("malformed line " + std::to_string(line_no) + ": too many tokens");
      long long value = 0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc() || next == p || value < 0)
        throw err("malformed line " + std::to_string(line_no) + ": expected non-negative integer");
      if (next < end && *next != ' ' && *next != '\t' && *next != '\r')
        throw err("malformed line " + std::to_string(line_no) + ": expected non-negative integer");
      vals[count++] = value;
      p = next;
    }
    if (count == 1) {
      intern(vals[0]);  // declares an isolated vertex
      grow_uf(next_id - 1);
      continue;
    }
    if (vals[0] == vals[1]) throw err("self-loop at line " + std::to_string(line_no));
    int u = intern(vals[0]);
    int v = intern(vals[1]);
    grow_uf(next_id - 1);
    long long key = (static_cast<long long>(std::min(u, v)) << 32) | std::max(u, v);
    if (!edge_seen.emplace(key, 1).second)
      throw err("duplicate edge at line " + std::to_string(line_no));
    if (!uf.unite(u, v)) throw err("cycle detected at line " + std::to_string(line_no));
    edges.emplace_back(u, v);
  }

  int n = next_id;
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  // components in order of their smallest global id
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int c = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members[c].push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
  }

  Forest f;
  for (auto& verts : members) {
    std::sort(verts.begin(), verts.end());
    std::unordered_map<int, int> local;
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    Tree t;
    t.n = static_cast<int>(verts.size());
    t.adj.assign(t.n, {});
    for (int g : verts)
      for (int w : adj[g]) t.adj[local[g]].push_back(local[w]);
    for (auto& a : t.adj) std::sort(a.begin(), a.end());
    validate_tree(t);
    f.components.push_back(std::move(t));
    f.global_ids.push_back(std::move(verts));
  }
  return f;
}

std::string format_edge_list(const Tree& t) {
  std::string out;
  if (t.n == 1) return "0\n";
  for (auto [u, v] : tree_edges(t)) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string format_edge_list(const Forest& f) {
  std::string out;
  for (size_t c = 0; c < f.components.size(); ++c) {
    const Tree& t = f.components[c];
    const auto& ids = f.global_ids[c];
    if (t.n == 1) {
      out += std::to_string(ids[0]);
      out += '\n';
      continue;
    }
    for (auto [u, v] : tree_edges(t)) {
      int a = ids[u], b = ids[v];
      out += std::to_string(std::min(a, b));
      out += ' ';
      out += std::to_string(std::max(a, b));
      out += '\n';
    }
  }
  return out;
}

Tree from_prufer(const std::vector<int>& seq, int n) {
  if (n < 2) throw err("from_prufer: n must be at least 2");
  if (static_cast<int>(seq.size()) != n - 2) throw err("from_prufer: sequence length must be n-2");
  for (int a : seq)
    if (a < 0 || a >= n) throw err("from_prufer: entry out of range");

  std::vector<int> degree(n, 1);
  for (int a : seq) ++degree[a];

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int a : seq) {
    edges.emplace_back(std::min(leaf, a), std::max(leaf, a));
    if (--degree[a] == 1 && a < ptr) {
      leaf = a;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return tree_from_edges(n, edges);
}

std::vector<int> to_prufer(const Tree& t) {
  if (t.n < 2) throw err("to_prufer: n must be at least 2");
  int n = t.n;
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = t.degree(v);
  std::vector<char> removed(n, 0);
  std::vector<int> seq;
  seq.reserve(n - 2);

  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int k = 0; k < n - 2; ++k) {
    removed[leaf] = 1;
    degree[leaf] = 0;
    int next = -1;
    for (int w : t.adj[leaf])
      if (!removed[w]) {
        next = w;
        break;
      }
    seq.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return seq;
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw err("random_tree: n must be at least 1");
  if (n == 1) {
    Tree t;
    t.n = 1;
    t.adj.assign(1, {});
    return t;
  }
  if (n == 2) return tree_from_edges(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) {
    // unbiased modulo rejection
    std::uint64_t x, r;
    do {
      x = rng();
      r = x % bound;
    } while (x - r > ~std::uint64_t{0} - (bound - 1));
    return static_cast<int>(r);
  };
  std::vector<int> seq(n - 2);
  for (auto& a : seq) a = draw(static_cast<std::uint64_t>(n));
  return from_prufer(seq, n);
}

LeafDeletion delete_leaf(const Tree& t, int v) {
  if (t.n < 2) throw err("delete_leaf: tree must have at least 2 vertices");
  if (v < 0 || v >= t.n) throw err("delete_leaf: vertex out of range");
  if (t.degree(v) != 1) throw err("delete_leaf: vertex is not a leaf");
  LeafDeletion out;
  out.new_id.assign(t.n, -1);
  for (int u = 0; u < t.n; ++u)
    if (u != v) out.new_id[u] = u < v ? u : u - 1;
  std::vector<Edge> edges;
  for (auto [a, b] : tree_edges(t))
    if (a != v && b != v) edges.emplace_back(out.new_id[a], out.new_id[b]);
  out.tree = tree_from_edges(t.n - 1, edges);
  return out;
}

Forest delete_vertex(const Tree& t, int v) {
  if (v < 0 || v >= t.n) throw err("delete_vertex: vertex out of range");
  int n = t.n;
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (s == v || comp[s] >= 0) continue;
    int c = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members[c].push_back(x);
      for (int w : t.adj[x])
        if (w != v && comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
  }
  Forest f;
  for (auto& verts : members) {
    std::sort(verts.begin(), verts.end());
    std::vector<int> local(n, -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int g : verts)
      for (int w : t.adj[g])
        if (w != v && g < w) edges.emplace_back(local[g], local[w]);
    f.components.push_back(tree_from_edges(static_cast<int>(verts.size()), edges));
    f.global_ids.push_back(std::move(verts));
  }
  return f;
}

Tree leaf_slide(const Tree& t, int v1, int v2, int x) {
  if (v1 < 0 || v1 >= t.n || v2 < 0 || v2 >= t.n || x < 0 || x >= t.n)
    throw err("leaf_slide: vertex out of range");
  if (v1 == v2 || v2 == x || v1 == x) throw err("leaf_slide: v1 v2 x must be distinct");
  if (!t.has_edge(v1, v2) || !t.has_edge(v2, x))
    throw err("leaf_slide: v1 v2 x is not a path");
  if (t.degree(v1) != 1) throw err("leaf_slide: v1 is not a leaf");
  if (t.degree(v2) != 2) throw err("leaf_slide: v2 must have degree 2");
  std::vector<Edge> edges;
  for (auto [a, b] : tree_edges(t))
    if (!(a == std::min(v1, v2) && b == std::max(v1, v2))) edges.emplace_back(a, b);
  edges.emplace_back(std::min(v1, x), std::max(v1, x));
  return tree_from_edges(t.n, edges);
}

}  // namespace maxmatch
