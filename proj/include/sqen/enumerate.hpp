#pragma once

// Canonical labelling for small graphs and isomorph-free enumeration.
//
// The canonical form of a graph on n <= 10 vertices is the lexicographically
// minimal upper-triangle adjacency bit-string over all vertex permutations,
// bits in graph6 column-major order with (0,1) most significant.  Because
// n(n-1)/2 <= 45, the string packs into a single 64-bit key; two graphs are
// isomorphic iff their keys are equal.

#include <cstdint>
#include <string>
#include <vector>

#include "sqen/graph.hpp"

namespace sqen {

// Packed minimal bit-string (n <= 10; throws std::invalid_argument beyond).
std::uint64_t canonical_key(const Graph& g);

// The same minimal labelling rendered as a graph6 line, suitable for
// printing and for cross-tool comparison.
std::string canonical_form(const Graph& g);

// The graph relabelled into its canonical ordering.
Graph canonical_graph(const Graph& g);

// All non-isomorphic graphs on n vertices, 1 <= n <= 7, built by one-vertex
// augmentation of the (n-1)-vertex classes with canonical-key dedup.  Counts
// match 1, 2, 4, 11, 34, 156, 1044 for n = 1..7.
std::vector<Graph> enumerate_nonisomorphic(int n);

}  // namespace sqen
