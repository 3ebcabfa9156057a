#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "maxmatch/canonical.hpp"
#include "maxmatch/families.hpp"
#include "maxmatch/structure.hpp"
#include "maxmatch/tree.hpp"

using namespace maxmatch;

TEST_CASE("parse_edge_list basics") {
  auto p3 = parse_edge_list("0 1\n1 2");
  REQUIRE(p3.components.size() == 1);
  CHECK(p3.components[0].n == 3);
  CHECK(p3.components[0].degree(1) == 2);

  auto star = parse_edge_list("0 1\n0 2\n0 3");
  REQUIRE(star.components.size() == 1);
  CHECK(star.components[0].degree(0) == 3);

  CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n1 2\n2 0"),
                       doctest::Contains("cycle"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n0 1"),
                       doctest::Contains("duplicate"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_edge_list("0 1\n1 0"),
                       doctest::Contains("duplicate"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 3"),
                       doctest::Contains("self-loop"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_edge_list("0 1 2"),
                       doctest::Contains("malformed"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_edge_list("0 x"),
                       doctest::Contains("malformed"), std::invalid_argument);
}

TEST_CASE("parse_edge_list comments, blanks, normalization") {
  auto f = parse_edge_list("# a path\n\n5 9\n  \n9 7\n");
  REQUIRE(f.components.size() == 1);
  CHECK(f.components[0].n == 3);
  // ids by first appearance: 5 -> 0, 9 -> 1, 7 -> 2
  CHECK(f.global_ids[0] == std::vector<int>{0, 1, 2});
  CHECK(f.components[0].degree(1) == 2);

  auto single = parse_edge_list("4\n");
  REQUIRE(single.components.size() == 1);
  CHECK(single.components[0].n == 1);

  auto empty = parse_edge_list("");
  CHECK(empty.components.empty());
  CHECK(empty.order() == 0);
}

TEST_CASE("parse_edge_list interleaved components keep global ids") {
  auto f = parse_edge_list("0 1\n2 3\n0 4");
  REQUIRE(f.components.size() == 2);
  CHECK(f.components[0].n == 3);
  CHECK(f.global_ids[0] == std::vector<int>{0, 1, 4});
  CHECK(f.global_ids[1] == std::vector<int>{2, 3});
  CHECK(f.order() == 5);
}

TEST_CASE("format_edge_list round trip") {
  // first-appearance normalization may relabel, so the round trip is up to
  // isomorphism, and stable once normalized
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 1 + static_cast<int>(rng() % 20);
    Tree t = random_tree(n, rng());
    auto f = parse_edge_list(format_edge_list(t));
    REQUIRE(f.components.size() == 1);
    CHECK(f.components[0].n == t.n);
    CHECK(canonical_code(f.components[0]) == canonical_code(t));
    auto again = parse_edge_list(format_edge_list(f));
    CHECK(again.components[0].n == t.n);
    CHECK(canonical_code(again.components[0]) == canonical_code(t));
  }
}

TEST_CASE("from_prufer decodes the standard examples") {
  Tree e = from_prufer({}, 2);
  CHECK(e.n == 2);
  CHECK(e.has_edge(0, 1));

  Tree star = from_prufer({0, 0}, 4);
  CHECK(star.degree(0) == 3);

  Tree p4 = from_prufer({1, 2}, 4);
  CHECK(p4.has_edge(0, 1));
  CHECK(p4.has_edge(1, 2));
  CHECK(p4.has_edge(2, 3));

  CHECK_THROWS_AS(from_prufer({4}, 3), std::invalid_argument);
  CHECK_THROWS_AS(from_prufer({0}, 4), std::invalid_argument);
}

TEST_CASE("prufer round trip is the identity, exhaustively to n = 8") {
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> seq(std::max(0, n - 2), 0);
    for (;;) {
      Tree t = from_prufer(seq, n);
      validate_tree(t);
      CHECK(to_prufer(t) == seq);
      int pos = n - 3;
      while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
      if (pos < 0) break;
      ++seq[pos];
    }
  }
}

TEST_CASE("prufer encodes every labeled tree, from first principles to n = 7") {
  // labeled trees rebuilt the hard way: every (n-1)-subset of vertex pairs
  // that happens to be connected; counts must hit n^(n-2)
  for (int n = 2; n <= 7; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    long long trees = 0;
    std::vector<int> pick(n - 1);
    for (int i = 0; i < n - 1; ++i) pick[i] = i;
    for (;;) {
      std::vector<Edge> edges;
      for (int i : pick) edges.push_back(pairs[i]);
      Tree t;
      bool is_tree = true;
      try {
        t = tree_from_edges(n, edges);
      } catch (const std::invalid_argument&) {
        is_tree = false;
      }
      if (is_tree) {
        ++trees;
        CHECK(from_prufer(to_prufer(t), n).adj == t.adj);
      }
      int pos = n - 2;
      int limit = static_cast<int>(pairs.size());
      while (pos >= 0 && pick[pos] == limit - (n - 1) + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < n - 1; ++i) pick[i] = pick[i - 1] + 1;
    }
    long long cayley = 1;
    for (int i = 0; i < n - 2; ++i) cayley *= n;
    CHECK(trees == cayley);
  }
}

TEST_CASE("random_tree is deterministic and valid") {
  Tree a = random_tree(10, 1);
  Tree b = random_tree(10, 1);
  CHECK(a.adj == b.adj);
  CHECK_THROWS_AS(random_tree(0, 1), std::invalid_argument);
  CHECK(random_tree(1, 5).n == 1);
  CHECK(random_tree(2, 5).has_edge(0, 1));
  for (int seed = 0; seed < 20; ++seed) validate_tree(random_tree(30, seed));
}

TEST_CASE("delete_leaf") {
  auto p3 = parse_edge_list("0 1\n1 2").components[0];
  auto del = delete_leaf(p3, 2);
  CHECK(del.tree.n == 2);
  CHECK(del.new_id == std::vector<int>{0, 1, -1});

  auto star = parse_edge_list("0 1\n0 2\n0 3").components[0];
  CHECK(delete_leaf(star, 3).tree.degree(0) == 2);
  CHECK_THROWS_AS(delete_leaf(star, 0), std::invalid_argument);

  auto mid = delete_leaf(star, 1);
  CHECK(mid.new_id == std::vector<int>{0, -1, 1, 2});
  CHECK(mid.tree.has_edge(0, 1));
  CHECK(mid.tree.has_edge(0, 2));

  // clipping a leg tip of the {2,2,2} spider leaves legs {1,2,2}
  auto sp = maxmatch::spider({2, 2, 2});
  CHECK(is_spider(delete_leaf(sp.tree, 2).tree).value().legs == std::vector<int>{1, 2, 2});
}

TEST_CASE("delete_vertex splits into components") {
  auto p3 = parse_edge_list("0 1\n1 2").components[0];
  auto f = delete_vertex(p3, 1);
  CHECK(f.components.size() == 2);
  CHECK(f.components[0].n == 1);
  CHECK(f.global_ids[0] == std::vector<int>{0});
  CHECK(f.global_ids[1] == std::vector<int>{2});

  auto leaf_case = delete_vertex(p3, 0);
  CHECK(leaf_case.components.size() == 1);
  CHECK(leaf_case.components[0].n == 2);
}

TEST_CASE("leaf_slide on P_4 gives the star") {
  auto p4 = parse_edge_list("0 1\n1 2\n2 3").components[0];
  Tree slid = leaf_slide(p4, 0, 1, 2);
  CHECK(slid.degree(2) == 3);
  CHECK(canonical_code(slid) == canonical_code(parse_edge_list("0 1\n0 2\n0 3").components[0]));
}

TEST_CASE("leaf_slide pulls a spider leg tip onto the center") {
  auto sp = maxmatch::spider({2, 2, 2});  // center 0, legs 0-1-2, 0-3-4, 0-5-6
  Tree slid = leaf_slide(sp.tree, 2, 1, 0);
  CHECK(is_spider(slid).value().legs == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("leaf_slide precondition violations") {
  auto p3 = parse_edge_list("0 1\n1 2").components[0];
  CHECK_THROWS_AS(leaf_slide(p3, 0, 1, 0), std::invalid_argument);   // not a path
  CHECK_THROWS_AS(leaf_slide(p3, 0, 2, 1), std::invalid_argument);   // v1 v2 not adjacent
  auto p4 = parse_edge_list("0 1\n1 2\n2 3").components[0];
  CHECK_THROWS_AS(leaf_slide(p4, 1, 2, 3), std::invalid_argument);   // v1 not a leaf
  auto star = parse_edge_list("0 1\n0 2\n0 3").components[0];
  CHECK_THROWS_AS(leaf_slide(star, 1, 0, 2), std::invalid_argument);  // deg(v2) != 2
}

TEST_CASE("leaf_slide keeps order and edge count") {
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 200) {
    int n = 4 + static_cast<int>(rng() % 15);
    Tree t = random_tree(n, rng());
    // any leaf whose neighbor has degree 2 gives a valid slide
    int v1 = -1, v2 = -1, x = -1;
    for (int v = 0; v < n && v1 < 0; ++v) {
      if (t.degree(v) != 1) continue;
      int w = t.adj[v][0];
      if (t.degree(w) != 2) continue;
      v1 = v;
      v2 = w;
      x = t.adj[w][0] == v ? t.adj[w][1] : t.adj[w][0];
    }
    if (v1 < 0) continue;
    Tree slid = leaf_slide(t, v1, v2, x);
    validate_tree(slid);
    CHECK(slid.n == t.n);
    CHECK(tree_edges(slid).size() == static_cast<size_t>(t.n - 1));
    ++done;
  }
}
