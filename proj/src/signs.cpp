#include "maxmatch/signs.hpp"

#include <stdexcept>

namespace maxmatch {

namespace {

// Bottom-up fold over the post-order. With release_children, every child's
// storage is dropped as soon as its parent is folded, so peak memory
// follows the live frontier of the traversal instead of the whole table.
void fold_signs(const RootedTree& rt, std::vector<Sign>& signs, bool release_children) {
  for (int v : rt.post_order) {
    const auto& ch = rt.children[v];
    Sign& out = signs[v];
    if (ch.empty()) {
      out.alpha = 1;
      out.beta = 0;
      out.gamma = 1;
      continue;
    }
    if (ch.size() == 1) {
      Sign& c = signs[ch[0]];
      out.alpha = c.beta;
      out.beta = c.gamma;
      out.gamma = c.alpha + c.beta;
      if (release_children) c = Sign{};
      continue;
    }

    const size_t k = ch.size();
    std::vector<BigNat> sum(k);  // alpha + beta per child
    for (size_t i = 0; i < k; ++i) {
      const Sign& c = signs[ch[i]];
      sum[i] = c.alpha + c.beta;
    }
    std::vector<BigNat> prefix(k + 1), suffix(k + 1);
    prefix[0] = 1;
    for (size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * sum[i];
    suffix[k] = 1;
    for (size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * sum[i];

    out.gamma = prefix[k];
    out.alpha = 1;
    for (size_t i = 0; i < k; ++i) {
      const Sign& c = signs[ch[i]];
      if (c.beta == 0) {
        out.alpha = 0;
        break;
      }
      out.alpha *= c.beta;
    }
    BigNat beta = 0, term;
    for (size_t i = 0; i < k; ++i) {
      term = prefix[i];
      term *= suffix[i + 1];
      term *= signs[ch[i]].gamma;
      beta += term;
    }
    out.beta = std::move(beta);
    if (release_children)
      for (int c : ch) signs[c] = Sign{};
  }
}

BigNat psi_rooted(const Tree& t, int root) {
  auto rt = root_tree(t, root);
  std::vector<Sign> signs(t.n);
  fold_signs(rt, signs, true);
  return signs[root].alpha + signs[root].beta;
}

}  // namespace

SignTable compute_signs(const RootedTree& rt) {
  SignTable table;
  table.root = rt.root;
  table.signs.resize(rt.tree.n);
  fold_signs(rt, table.signs, false);
  return table;
}

BigNat psi(const Tree& t) { return psi_rooted(t, 0); }

BigNat psi_forest(const Forest& f) {
  BigNat result = 1;
  for (const Tree& c : f.components) result *= psi(c);
  return result;
}

std::pair<BigNat, BigNat> psi_split(const Tree& t, int root) {
  if (root < 0 || root >= t.n) throw std::invalid_argument("psi_split: root out of range");
  auto rt = root_tree(t, root);
  std::vector<Sign> signs(t.n);
  fold_signs(rt, signs, true);
  return {signs[root].alpha, signs[root].beta};
}

}  // namespace maxmatch
