#pragma once

#include <map>
#include <vector>

#include "maxmatch/generate.hpp"
#include "maxmatch/tree.hpp"

namespace testutil {

// all_trees is re-derived per order by several suites; cache within a test
// binary.
inline const std::vector<maxmatch::Tree>& trees_of_order(int n) {
  static std::map<int, std::vector<maxmatch::Tree>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, maxmatch::all_trees_vec(n)).first;
  return it->second;
}

}  // namespace testutil
