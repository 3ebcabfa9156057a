#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "maxmatch/canonical.hpp"
#include "maxmatch/errors.hpp"
#include "maxmatch/generate.hpp"
#include "test_util.hpp"

using namespace maxmatch;

// number of free trees on n vertices (A000055), n = 1..16
static const long long kFreeTreeCounts[] = {1,    1,    1,    2,    3,    6,
                                            11,   23,   47,   106,  235,  551,
                                            1301, 3159, 7741, 19320};

TEST_CASE("all_trees counts for small orders") {
  CHECK(testutil::trees_of_order(1).size() == 1);
  CHECK(testutil::trees_of_order(4).size() == 2);
  CHECK(testutil::trees_of_order(7).size() == 11);
  for (int n = 1; n <= 9; ++n)
    CHECK(testutil::trees_of_order(n).size() ==
          static_cast<size_t>(kFreeTreeCounts[n - 1]));
}

TEST_CASE("level-sequence generator matches the published counts to 16") {
  for (int n = 1; n <= 16; ++n) {
    long long count = 0;
    for_each_free_tree(n, [&](const Tree& t) {
      ++count;
      CHECK(t.n == n);
    });
    CHECK(count == kFreeTreeCounts[n - 1]);
  }
}

TEST_CASE("level-sequence generator agrees with Prufer dedupe for n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    std::set<std::string> from_generator;
    for_each_free_tree(n, [&](const Tree& t) {
      CHECK(from_generator.insert(canonical_code(t)).second);  // no duplicates
    });
    std::set<std::string> from_prufer_scan;
    for (const Tree& t : testutil::trees_of_order(n))
      from_prufer_scan.insert(canonical_code(t));
    CHECK(from_generator == from_prufer_scan);
  }
}

TEST_CASE("all_trees yields valid, pairwise non-isomorphic trees at n = 12") {
  std::set<std::string> codes;
  all_trees(12, [&](const Tree& t) {
    validate_tree(t);
    CHECK(codes.insert(canonical_code(t)).second);
  });
  CHECK(codes.size() == 551);
}

TEST_CASE("cap and argument errors") {
  CHECK_THROWS_AS(all_trees_vec(17), cap_exceeded);
  CHECK_THROWS_AS(all_trees_vec(0), std::invalid_argument);
  CHECK(all_trees_vec(17, 17).size() == 48629);  // raising the cap unlocks the order
}

TEST_CASE("labeled scan covers n^(n-2) trees") {
  long long count = 0;
  for_each_labeled_tree(5, [&](const Tree& t) {
    validate_tree(t);
    ++count;
  });
  CHECK(count == 125);
}
