#pragma once

#include "matchbound/bigcount.hpp"
#include "matchbound/graph.hpp"

#include <vector>

namespace matchbound {

inline constexpr int kDefaultCountLimit = 32;
// Hard cap: the memo key is a 64-bit vertex subset.
inline constexpr int kHardCountLimit = 64;
inline constexpr int kEnumerationLimit = 12;
inline constexpr int kPermanentLimit = 24;
inline constexpr int kNaivePermanentLimit = 8;
inline constexpr int kWeightedHafnianLimit = 16;

// Every perfect matching of g, lexicographically sorted. Brute force,
// guarded to n <= kEnumerationLimit; serves as a cross-check oracle for
// count_perfect_matchings.
std::vector<Matching> enumerate_matchings(const Graph& g);

// Exact number of perfect matchings: memoized recursion on the set of
// unmatched vertices, always expanding on its lowest-index vertex.
// Throws if vertex_count() exceeds `limit` (or limit > kHardCountLimit).
BigCount count_perfect_matchings(const Graph& g, int limit = kDefaultCountLimit);

// Row expansion at `pivot`: sum over neighbors j of the count of
// g - {pivot, j}. Equals count_perfect_matchings(g) for every pivot.
BigCount hafnian_expand(const Graph& g, int pivot, int limit = kDefaultCountLimit);

// Permanent of a square 0/1 matrix by Gray-coded inclusion-exclusion
// (n <= kPermanentLimit).
BigCount permanent(const ZeroOneMatrix& m);

// Literal sum over permutations (n <= kNaivePermanentLimit); oracle for
// permanent().
BigCount permanent_naive(const ZeroOneMatrix& m);

// Perfect matchings of a bipartite graph via the permanent of its
// incidence matrix. Throws std::invalid_argument if the graph is not
// bipartite or the two sides differ in size (the count is 0 in the
// unbalanced case; use count_perfect_matchings when in doubt).
BigCount count_via_permanent(const Graph& g);

// Hafnian of a real symmetric matrix of even order (<= 16) by direct
// pairing enumeration; the diagonal is ignored. On a 0/1 adjacency
// matrix this is the perfect-matching count (as a double).
double weighted_hafnian(const std::vector<std::vector<double>>& m);

}  // namespace matchbound
