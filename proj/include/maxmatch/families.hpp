#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxmatch/bignat.hpp"
#include "maxmatch/tree.hpp"

namespace maxmatch {

// A named tree construction. expected_psi is attached only where a closed
// form is known; everything else is measured, never invented.
struct FamilyInstance {
  Tree tree;
  std::string family_name;
  std::vector<int> parameters;
  std::optional<BigNat> expected_psi;
};

FamilyInstance path(int n);
FamilyInstance star(int m);  // K_{1,m}, expected_psi = m

// Star K_{1,m} with m-t of its edges subdivided once: t legs of 1 edge,
// m-t legs of 2 edges, order 2m-t+1. For t <= 2 the count is known to be
// ceil(order/2).
FamilyInstance subdivided_star(int m, int t);

// One center with pendant paths of the given edge lengths.
FamilyInstance spider(const std::vector<int>& legs);

// K_{1,n} with every leaf replaced by a K_{1,3} whose center attaches to
// the hub: 4n+1 vertices, expected_psi = 3^n + n*3^(n-1).
FamilyInstance star_of_triples(int n);

// The predicted minimizers of order n: legs {1,2,...,2} for even n, legs
// {2,...,2} and {1,1,2,...,2} for odd n, deduplicated when the degenerate
// forms coincide. expected_psi = ceil(n/2) each.
std::vector<FamilyInstance> extremal_family(int n);

// "name:p1,p2,..." as accepted by the CLI, e.g. "spider:1,2,2".
FamilyInstance parse_family_spec(const std::string& spec);

}  // namespace maxmatch
