#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxmatch/tree.hpp"

namespace maxmatch {

// The one or two vertices minimizing the largest component left by their
// removal, in ascending order.
std::vector<int> centroids(const Tree& t);

// AHU encoding of the tree rooted at the given vertex: "(" + the sorted
// codes of the subtrees + ")". Equal codes <=> isomorphic rooted trees.
std::string rooted_code(const Tree& t, int root);

// Canonical form of a free tree: the AHU code rooted at the centroid, the
// lexicographically smaller of the two codes at a bicentroid. Equal codes
// <=> isomorphic trees.
std::string canonical_code(const Tree& t);

// Bit-packed variants ('(' = 0 bit, ')' = 1 bit, 2n bits total) for trees
// with n <= 30; same equality semantics as the string codes. Used on the
// hot enumeration paths.
std::uint64_t rooted_code_packed(const Tree& t, int root);
std::uint64_t canonical_code_packed(const Tree& t);

namespace detail {

// Reusable buffers for packed-code computation in tight loops.
struct AhuScratch {
  std::vector<int> parent, order, size, len, child_buf;
  std::vector<std::uint64_t> code, key_buf;
};

std::uint64_t packed_code(const Tree& t, int root, AhuScratch& s);
std::uint64_t packed_canonical(const Tree& t, AhuScratch& s);
void centroids_into(const Tree& t, AhuScratch& s, int out[2], int& count);

}  // namespace detail

}  // namespace maxmatch
