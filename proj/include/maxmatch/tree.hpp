#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace maxmatch {

using Edge = std::pair<int, int>;  // stored with first < second

// Undirected simple acyclic connected graph on vertices 0..n-1.
struct Tree {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
};

// Acyclic graph split into connected components. Each component is a Tree
// on local ids 0..k-1; global_ids[c][v] is the id vertex v had in the
// object the forest came from (a parsed file, or a tree before deletion).
struct Forest {
  std::vector<Tree> components;
  std::vector<std::vector<int>> global_ids;

  int order() const;
};

struct RootedTree {
  Tree tree;
  int root = 0;
  std::vector<int> parent;                // -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> post_order;            // every child before its parent
};

Tree tree_from_edges(int n, const std::vector<Edge>& edges);
void validate_tree(const Tree& t);  // throws std::invalid_argument on violation
std::vector<Edge> tree_edges(const Tree& t);  // lexicographically sorted

RootedTree root_tree(const Tree& t, int root);

// Edge-list text format: one "u v" line per edge, a line with a single
// integer declares an isolated vertex, blank lines and lines starting
// with '#' are ignored. Vertex ids are normalized to 0..n-1 in order of
// first appearance.
Forest parse_edge_list(const std::string& text);
std::string format_edge_list(const Tree& t);
std::string format_edge_list(const Forest& f);

Tree from_prufer(const std::vector<int>& seq, int n);
std::vector<int> to_prufer(const Tree& t);

// Uniform labeled tree from a seeded deterministic generator; the same
// (n, seed) always yields the same tree.
Tree random_tree(int n, std::uint64_t seed);

struct LeafDeletion {
  Tree tree;
  std::vector<int> new_id;  // new_id[old] = id in the smaller tree, -1 for the leaf
};
LeafDeletion delete_leaf(const Tree& t, int v);

Forest delete_vertex(const Tree& t, int v);

// Replaces edge v1v2 by v1x, where v1v2x is a path, v1 a leaf, deg(v2)=2.
Tree leaf_slide(const Tree& t, int v1, int v2, int x);

}  // namespace maxmatch
