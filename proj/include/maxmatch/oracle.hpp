#pragma once

#include <functional>
#include <vector>

#include "maxmatch/bignat.hpp"
#include "maxmatch/tree.hpp"

namespace maxmatch {

inline constexpr int kDefaultOracleCap = 22;

// A set of pairwise vertex-disjoint edges, kept sorted.
using Matching = std::vector<Edge>;

// True iff no edge of t has both endpoints uncovered by m. Throws if m is
// not a matching of t.
bool is_maximal(const Tree& t, const Matching& m);

// Visits every maximal matching exactly once, in the deterministic order
// given by branching on edges in sorted order, include before exclude.
// The callback returns false to stop early. Throws cap_exceeded when the
// order exceeds cap.
void for_each_maximal(const Tree& t,
                      const std::function<bool(const Matching&)>& fn,
                      int cap = kDefaultOracleCap);
void for_each_maximal(const Forest& f,
                      const std::function<bool(const Matching&)>& fn,
                      int cap = kDefaultOracleCap);

std::vector<Matching> enumerate_maximal(const Tree& t, int cap = kDefaultOracleCap);

BigNat count_maximal(const Tree& t, int cap = kDefaultOracleCap);
BigNat count_maximal(const Forest& f, int cap = kDefaultOracleCap);

// True iff every maximal matching of t covers v (n >= 2).
bool covered_by_all(const Tree& t, int v, int cap = kDefaultOracleCap);

}  // namespace maxmatch
