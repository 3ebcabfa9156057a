#pragma once

#include <utility>
#include <vector>

#include "maxmatch/bignat.hpp"
#include "maxmatch/tree.hpp"

namespace maxmatch {

// Per-vertex counters of the bottom-up pass over a rooted tree:
//   alpha — maximal matchings of the rooted subtree not covering its root,
//   beta  — maximal matchings of the rooted subtree covering its root,
//   gamma — maximal matchings of the rooted subtree minus its root.
// Psi of the subtree is alpha + beta.
struct Sign {
  BigNat alpha;
  BigNat beta;
  BigNat gamma;

  bool operator==(const Sign&) const = default;
};

struct SignTable {
  int root = 0;
  std::vector<Sign> signs;
};

// Bottom-up pass: leaves get (1, 0, 1); a vertex with children x_1..x_k gets
//   alpha = prod beta_i
//   beta  = sum_i gamma_i * prod_{j != i} (alpha_j + beta_j)
//   gamma = prod_i (alpha_i + beta_i)
// Evaluated over an explicit post-order, so path-shaped trees of any depth
// are fine; beta uses prefix/suffix products, so star-shaped vertices cost
// a linear number of multiplications.
SignTable compute_signs(const RootedTree& rt);

// Number of maximal matchings of t (rooted at vertex 0; root choice does
// not affect the result).
BigNat psi(const Tree& t);

// Product over components; 1 for the empty forest.
BigNat psi_forest(const Forest& f);

// (alpha, beta) at the given root: maximal matchings of t leaving the root
// uncovered / covering it.
std::pair<BigNat, BigNat> psi_split(const Tree& t, int root);

}  // namespace maxmatch
