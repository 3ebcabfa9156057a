#include "maxmatch/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxmatch {

namespace {

// DFS order + parent array without touching RootedTree (these run inside
// enumeration loops).
void orient(const Tree& t, int root, std::vector<int>& parent, std::vector<int>& order) {
  parent.assign(t.n, -2);
  order.clear();
  order.reserve(t.n);
  parent[root] = -1;
  order.push_back(root);
  for (size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : t.adj[v])
      if (parent[w] == -2) {
        parent[w] = v;
        order.push_back(w);
      }
  }
}

}  // namespace

std::vector<int> centroids(const Tree& t) {
  std::vector<int> parent, order;
  orient(t, 0, parent, order);
  std::vector<int> size(t.n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];

  int best = t.n;
  std::vector<int> out;
  for (int v = 0; v < t.n; ++v) {
    int largest = t.n - size[v];
    for (int w : t.adj[v])
      if (w != parent[v]) largest = std::max(largest, size[w]);
    if (largest < best) {
      best = largest;
      out.clear();
    }
    if (largest == best) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string rooted_code(const Tree& t, int root) {
  if (root < 0 || root >= t.n) throw std::invalid_argument("rooted_code: root out of range");
  std::vector<int> parent, order;
  orient(t, root, parent, order);
  std::vector<std::string> code(t.n);
  std::vector<std::string> kids;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    kids.clear();
    for (int w : t.adj[v])
      if (w != parent[v]) kids.push_back(std::move(code[w]));
    std::sort(kids.begin(), kids.end());
    std::string& c = code[v];
    c.reserve(2 + 2 * kids.size());
    c = "(";
    for (auto& k : kids) c += k;
    c += ")";
  }
  return code[root];
}

std::string canonical_code(const Tree& t) {
  auto cs = centroids(t);
  if (cs.size() == 1) return rooted_code(t, cs[0]);
  return std::min(rooted_code(t, cs[0]), rooted_code(t, cs[1]));
}

namespace detail {

void centroids_into(const Tree& t, AhuScratch& s, int out[2], int& count) {
  s.parent.assign(t.n, -2);
  s.order.clear();
  s.parent[0] = -1;
  s.order.push_back(0);
  for (size_t head = 0; head < s.order.size(); ++head) {
    int v = s.order[head];
    for (int w : t.adj[v])
      if (s.parent[w] == -2) {
        s.parent[w] = v;
        s.order.push_back(w);
      }
  }
  s.size.assign(t.n, 1);
  for (auto it = s.order.rbegin(); it != s.order.rend(); ++it)
    if (s.parent[*it] >= 0) s.size[s.parent[*it]] += s.size[*it];

  int best = t.n;
  count = 0;
  for (int v = 0; v < t.n; ++v) {
    int largest = t.n - s.size[v];
    for (int w : t.adj[v])
      if (w != s.parent[v]) largest = std::max(largest, s.size[w]);
    if (largest < best) {
      best = largest;
      count = 0;
    }
    if (largest == best && count < 2) out[count++] = v;
  }
}

std::uint64_t packed_code(const Tree& t, int root, AhuScratch& s) {
  if (t.n > 30) throw std::invalid_argument("packed code requires n <= 30");
  s.parent.assign(t.n, -2);
  s.order.clear();
  s.parent[root] = -1;
  s.order.push_back(root);
  for (size_t head = 0; head < s.order.size(); ++head) {
    int v = s.order[head];
    for (int w : t.adj[v])
      if (s.parent[w] == -2) {
        s.parent[w] = v;
        s.order.push_back(w);
      }
  }
  s.code.assign(t.n, 0);
  s.len.assign(t.n, 0);
  for (auto it = s.order.rbegin(); it != s.order.rend(); ++it) {
    int v = *it;
    s.child_buf.clear();
    for (int w : t.adj[v])
      if (w != s.parent[v]) s.child_buf.push_back(w);
    // ascending by the left-aligned bit pattern; codes are prefix-free so
    // this matches string order on the parenthesis alphabet with '(' = 0
    std::sort(s.child_buf.begin(), s.child_buf.end(), [&](int a, int b) {
      return (s.code[a] << (64 - s.len[a])) < (s.code[b] << (64 - s.len[b]));
    });
    std::uint64_t bits = 0;  // leading '(' is a 0 bit
    int len = 1;
    for (int w : s.child_buf) {
      bits = (bits << s.len[w]) | s.code[w];
      len += s.len[w];
    }
    bits = (bits << 1) | 1;  // closing ')'
    ++len;
    s.code[v] = bits;
    s.len[v] = len;
  }
  return s.code[root];
}

std::uint64_t packed_canonical(const Tree& t, AhuScratch& s) {
  int cs[2];
  int count = 0;
  centroids_into(t, s, cs, count);
  std::uint64_t best = packed_code(t, cs[0], s);
  if (count == 2) best = std::min(best, packed_code(t, cs[1], s));
  return best;
}

}  // namespace detail

std::uint64_t rooted_code_packed(const Tree& t, int root) {
  detail::AhuScratch s;
  return detail::packed_code(t, root, s);
}

std::uint64_t canonical_code_packed(const Tree& t) {
  detail::AhuScratch s;
  return detail::packed_canonical(t, s);
}

}  // namespace maxmatch
