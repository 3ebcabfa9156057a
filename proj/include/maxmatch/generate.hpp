#pragma once

#include <functional>
#include <vector>

#include "maxmatch/tree.hpp"

namespace maxmatch {

inline constexpr int kDefaultTreeCap = 16;

// Every labeled tree on n vertices, by decoding all n^(n-2) Prufer
// sequences in odometer order (n >= 1).
void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& fn);

// One representative per isomorphism class of free trees on n vertices:
// Beyer-Hedetniemi level-sequence successor over rooted trees, filtered to
// the canonical centroid rooting.
void for_each_free_tree(int n, const std::function<void(const Tree&)>& fn);

// Exhaustive unlabeled enumeration. Prufer decoding + canonical dedupe for
// n <= 9 (trivially correct, and the oracle for the level-sequence
// generator), the free-tree generator above for larger n.
void all_trees(int n, const std::function<void(const Tree&)>& fn,
               int cap = kDefaultTreeCap);

std::vector<Tree> all_trees_vec(int n, int cap = kDefaultTreeCap);

}  // namespace maxmatch
