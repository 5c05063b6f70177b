#include "sqen/random_graphs.hpp"

#include <array>
#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

namespace sqen {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_sample_seed(std::uint64_t seed, std::uint64_t index,
                                 double p) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(p));
  h = splitmix64(h ^ index);
  return h;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("sample_gnp: n >= 0 required");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("sample_gnp: p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) g.add_edge(u, v);
    }
  return g;
}

namespace {

// Faces of the triangulation as vertex triples; the sphere triangulation
// starts as a tetrahedron (or a single doubled face for K_3).
using Face = std::array<int, 3>;

bool face_has_edge(const Face& f, int u, int v) {
  int hit = 0;
  for (int x : f) hit += (x == u) + (x == v);
  return hit == 2;
}

int face_apex(const Face& f, int u, int v) {
  for (int x : f)
    if (x != u && x != v) return x;
  return -1;
}

}  // namespace

Graph generate_maximal_planar(int n, std::uint64_t seed, int flips) {
  if (n < 3)
    throw std::invalid_argument("generate_maximal_planar: n >= 3 required");
  if (flips < 0)
    throw std::invalid_argument("generate_maximal_planar: flips >= 0");

  if (n == 3) return make_cycle(3);

  std::mt19937_64 rng(splitmix64(seed));
  Graph g(n);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  std::vector<Face> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

  for (int v = 4; v < n; ++v) {
    const std::size_t pick = rng() % faces.size();
    const Face f = faces[pick];
    faces[pick] = {f[0], f[1], v};
    faces.push_back({f[0], f[2], v});
    faces.push_back({f[1], f[2], v});
    for (int corner : f) g.add_edge(v, corner);
  }

  auto edge_list = g.edges();
  for (int attempt = 0; attempt < flips; ++attempt) {
    const auto [u, v] = edge_list[rng() % edge_list.size()];
    int fa = -1, fb = -1;
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (face_has_edge(faces[i], u, v)) (fa < 0 ? fa : fb) = static_cast<int>(i);
    const int a = face_apex(faces[fa], u, v);
    const int b = face_apex(faces[fb], u, v);
    if (a == b || g.has_edge(a, b)) continue;  // flip would break simplicity
    g.remove_edge(u, v);
    g.add_edge(a, b);
    faces[fa] = {u, a, b};
    faces[fb] = {v, a, b};
    for (auto& e : edge_list)
      if (e == std::pair<int, int>(std::min(u, v), std::max(u, v)))
        e = {std::min(a, b), std::max(a, b)};
  }
  return g;
}

}  // namespace sqen
