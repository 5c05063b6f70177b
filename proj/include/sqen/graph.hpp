#pragma once

// Simple undirected graphs on 0-indexed dense vertex labels, stored as a
// packed adjacency bitset (row-major, 64 vertices per word).  Graphs are
// immutable in practice once built: constructors and samplers return
// finished objects, and all analysis code takes const references, so sharing
// across threads is safe.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sqen {

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const;
  // Inserts the edge {u,v}; no-op if already present.  Self-loops and
  // out-of-range endpoints throw std::invalid_argument.
  void add_edge(int u, int v);
  // Removes the edge {u,v}; no-op if absent.
  void remove_edge(int u, int v);

  int degree(int v) const;
  // All edges as (u,v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  // Labelled equality (same n and identical adjacency).
  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// ---- Constructors for the structured families ----

Graph make_complete(int n);                       // n >= 1
Graph make_complete_bipartite(int a, int b);      // a, b >= 1
Graph make_cycle(int n);                          // n >= 3
Graph make_path(int n);                           // n >= 1
Graph make_star(int n);                           // n >= 1; K_{1,n-1}
// Kneser graph K(n,k): vertices are the k-subsets of {0..n-1} in
// lexicographic order, edges join disjoint subsets.  Requires n >= 2k >= 2
// and C(n,k) <= 100000 (adjacency realization budget; exact spectra handle
// larger parameters).
Graph make_kneser(int n, int k);

// t-blowup: vertex (v, c) -> v*t + c, each edge becomes K_{t,t}.  t >= 1;
// blowup(g, 1) returns g itself (same labels).
Graph blowup(const Graph& g, int t);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph disjoint_copies(const Graph& g, int count);  // count >= 1
Graph complement(const Graph& g);

// ---- Predicates ----

bool is_connected(const Graph& g);                 // vacuously true for n = 0
// Component label per vertex, labels dense in discovery order from vertex 0.
std::vector<int> component_labels(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
// Degree if regular, nullopt otherwise (n = 0 -> degree 0).
std::optional<int> is_regular(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);  // sorted descending
// Two-colorability; fills *side with a 0/1 class per vertex when bipartite.
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);
bool has_isolated_vertex(const Graph& g);

}  // namespace sqen
