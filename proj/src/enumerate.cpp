#include "sqen/enumerate.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "sqen/graph6.hpp"

namespace sqen {

namespace {

// Backtracking minimization of the packed adjacency bit-string.  perm[i] is
// the original vertex assigned new label i; placing label t appends column t
// (bits (0,t)..(t-1,t)) to the partial string, so the string grows
// append-only and partial prefixes can be pruned against the best complete
// key found so far.
struct CanonSearch {
  const Graph& g;
  int n;
  int width;  // n(n-1)/2 <= 45
  std::uint64_t best = ~0ull;
  std::vector<int> best_perm;
  std::vector<int> perm;
  std::vector<bool> used;

  explicit CanonSearch(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        width(graph.vertex_count() * (graph.vertex_count() - 1) / 2),
        best_perm(n),
        perm(n, -1),
        used(n, false) {}

  void run() {
    if (n <= 1) {
      best = 0;
      std::iota(best_perm.begin(), best_perm.end(), 0);
      return;
    }
    descend(0, 0, 0);
  }

  void descend(int placed, std::uint64_t cur, int bits_done) {
    if (placed == n) {
      if (cur < best) {
        best = cur;
        best_perm = perm;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < placed; ++i)
        col = (col << 1) | (g.has_edge(perm[i], v) ? 1u : 0u);
      const int new_bits = bits_done + placed;
      const std::uint64_t ext = cur | (col << (width - new_bits));
      // Lexicographic prefix pruning against the best complete key.
      if (best != ~0ull &&
          (ext >> (width - new_bits)) > (best >> (width - new_bits)))
        continue;
      used[v] = true;
      perm[placed] = v;
      descend(placed + 1, ext, new_bits);
      used[v] = false;
    }
  }
};

void check_budget(const Graph& g) {
  if (g.vertex_count() > 10)
    throw std::invalid_argument(
        "canonical form: n <= 10 budget exceeded (n = " +
        std::to_string(g.vertex_count()) + ")");
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  check_budget(g);
  CanonSearch search(g);
  search.run();
  return search.best;
}

Graph canonical_graph(const Graph& g) {
  check_budget(g);
  CanonSearch search(g);
  search.run();
  const int n = g.vertex_count();
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(search.best_perm[i], search.best_perm[j]))
        h.add_edge(i, j);
  return h;
}

std::string canonical_form(const Graph& g) {
  return encode_graph6(canonical_graph(g));
}

std::vector<Graph> enumerate_nonisomorphic(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument(
        "enumerate_nonisomorphic: supported range is 1 <= n <= 7");
  std::vector<Graph> current = {Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& base : current) {
      // Attach a new vertex with every possible neighborhood; every class on
      // `size` vertices arises this way from some class on size-1 vertices.
      const unsigned limit = 1u << (size - 1);
      for (unsigned mask = 0; mask < limit; ++mask) {
        Graph ext(size);
        for (auto [u, v] : base.edges()) ext.add_edge(u, v);
        for (int u = 0; u < size - 1; ++u)
          if ((mask >> u) & 1u) ext.add_edge(u, size - 1);
        if (seen.insert(canonical_key(ext)).second)
          next.push_back(std::move(ext));
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace sqen
