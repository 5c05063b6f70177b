#include "sqen/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace sqen {

namespace {

// Binomial coefficient capped at a ceiling to avoid overflow while sizing
// Kneser vertex sets.
long long binomial_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

Graph::Graph(int n) : n_(n), m_(0), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >>
          (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
  if (has_edge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !has_edge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(1ull << (v % 64));
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(1ull << (u % 64));
  --m_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("make_complete: n >= 1 required");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("make_complete_bipartite: a, b >= 1 required");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: n >= 3 required");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: n >= 1 required");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("make_star: n >= 1 required");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph make_kneser(int n, int k) {
  if (k < 1 || n < 2 * k)
    throw std::invalid_argument("make_kneser: n >= 2k >= 2 required");
  constexpr long long kVertexBudget = 100000;
  if (binomial_capped(n, k, kVertexBudget) > kVertexBudget)
    throw std::invalid_argument(
        "make_kneser: C(n,k) exceeds the adjacency realization budget");

  // Enumerate k-subsets lexicographically; store each as an element bitmask
  // so disjointness is a word-wise AND.
  const int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<std::uint64_t> mask(words, 0);
    for (int i : idx) mask[i / 64] |= 1ull << (i % 64);
    masks.push_back(std::move(mask));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }

  Graph g(static_cast<int>(masks.size()));
  for (std::size_t u = 0; u < masks.size(); ++u)
    for (std::size_t v = u + 1; v < masks.size(); ++v) {
      bool disjoint = true;
      for (int w = 0; w < words; ++w)
        if (masks[u][w] & masks[v][w]) {
          disjoint = false;
          break;
        }
      if (disjoint) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  return g;
}

Graph blowup(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("blowup: t >= 1 required");
  if (t == 1) return g;
  Graph h(g.vertex_count() * t);
  for (auto [u, v] : g.edges())
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b) h.add_edge(u * t + a, v * t + b);
  return h;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.vertex_count() + h.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  const int off = g.vertex_count();
  for (auto [u, v] : h.edges()) out.add_edge(off + u, off + v);
  return out;
}

Graph disjoint_copies(const Graph& g, int count) {
  if (count < 1) throw std::invalid_argument("disjoint_copies: count >= 1");
  Graph out(g.vertex_count() * count);
  for (int c = 0; c < count; ++c) {
    const int off = c * g.vertex_count();
    for (auto [u, v] : g.edges()) out.add_edge(off + u, off + v);
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<int> component_labels(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (label[v] == -1 && g.has_edge(u, v)) {
          label[v] = next;
          q.push(v);
        }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto label = component_labels(g);
  for (int l : label)
    if (l != 0) return false;
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const auto label = component_labels(g);
  int count = 0;
  for (int l : label) count = std::max(count, l + 1);
  std::vector<std::vector<int>> comps(count);
  for (int v = 0; v < g.vertex_count(); ++v) comps[label[v]].push_back(v);
  return comps;
}

std::optional<int> is_regular(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

bool is_bipartite(const Graph& g, std::vector<int>* side) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (!g.has_edge(u, v)) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  if (side) *side = std::move(color);
  return true;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

}  // namespace sqen
