#pragma once

#include <optional>
#include <vector>

#include "maxmatch/tree.hpp"

namespace maxmatch {

// A spider (starlike tree) described by the multiset of its leg lengths,
// in edges. Order implied = 1 + sum(legs).
struct SpiderSpec {
  std::vector<int> legs;  // sorted ascending

  int order() const;
  bool operator==(const SpiderSpec&) const = default;
};

// Leg multiset if t has at most one vertex of degree >= 3, absent
// otherwise. A path (no branch vertex) reports the two legs from the
// interior vertex at position ceil(n/2) along it; P_2 reports {1}.
std::optional<SpiderSpec> is_spider(const Tree& t);

struct StructureSummary {
  std::vector<int> branch_vertices;      // degree >= 3, ascending
  int max_leaf_siblings = 0;             // max count of degree-1 neighbors
  std::vector<int> pendant_star_sizes;   // t = deg(u) for each u with t-1 leaf neighbors, t >= 3
  std::vector<int> pendant_path_lengths; // vertex counts, branch vertex through leaf
};

StructureSummary structural_predicates(const Tree& t);

}  // namespace maxmatch
