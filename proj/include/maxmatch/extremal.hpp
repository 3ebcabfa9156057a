#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "maxmatch/bignat.hpp"
#include "maxmatch/generate.hpp"
#include "maxmatch/structure.hpp"

namespace maxmatch {

struct AchieverFlags {
  int branch_vertex_count = 0;
  int max_leaf_siblings = 0;
  std::vector<int> pendant_star_sizes;
  int max_pendant_path_length = 0;
};

struct Achiever {
  std::string code;
  std::optional<SpiderSpec> legs;
  AchieverFlags flags;
};

struct ExtremalReport {
  int n = 0;
  BigNat min_psi;
  BigNat bound;  // ceil(n/2)
  std::vector<Achiever> achievers;       // sorted by canonical code
  std::vector<std::string> predicted;    // canonical codes, sorted
  bool pass = false;                     // min_psi == bound and achievers == predicted
  nlohmann::json violations = nlohmann::json::array();
};

// Minimum psi over all trees of order n, with every achiever and the
// comparison against the predicted family.
ExtremalReport min_psi_search(int n, int threads = 1, int cap = kDefaultTreeCap);

struct StructureViolation {
  std::string code;
  std::string assertion;
};

struct StructureReport {
  int n = 0;
  int minimizer_count = 0;
  bool pass = false;
  std::vector<StructureViolation> violations;
};

// Asserts, for every psi-minimizing tree of order n (n >= 8): no vertex
// with >= 3 leaf neighbors, no pendant star, no pendant path on >= 4
// vertices, exactly one branch vertex.
StructureReport check_structural_theorems(int n, int threads = 1, int cap = kDefaultTreeCap);

struct EvenReport {
  int n = 0;
  bool pass = false;
  std::vector<std::string> qualifying;  // canonical codes
  std::vector<StructureViolation> violations;
};

// Finds the trees of order n (n >= 3) with psi(T) = psi(T - x) for every
// leaf x, and asserts each has even order and every internal vertex
// adjacent to exactly one leaf.
EvenReport check_even_theorem(int n, int cap = kDefaultTreeCap);

struct BoundViolation {
  int n = 0;
  std::string code;
  BigNat psi_value;
};

struct BoundReport {
  int n_max = 0;
  bool pass = false;
  std::vector<long long> tree_counts;  // per order 2..n_max
  std::vector<BoundViolation> violations;
};

// psi(t) >= ceil(n/2) over every tree of every order 2..n_max.
BoundReport verify_lower_bound(int n_max, int threads = 1, int cap = kDefaultTreeCap);

nlohmann::json to_json(const ExtremalReport& r);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const EvenReport& r);
nlohmann::json to_json(const BoundReport& r);

}  // namespace maxmatch
