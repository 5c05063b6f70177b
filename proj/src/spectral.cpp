#include "sqen/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "sqen/kernels.hpp"

namespace sqen {

namespace {

Spectrum spectrum_from(const EigenSystem& sys, const Graph& g) {
  Spectrum spec;
  spec.values = sys.values;
  spec.residual = sys.residual;
  spec.scale = 1.0;
  if (!spec.values.empty())
    spec.scale = std::max({1.0, std::fabs(spec.values.front()),
                           std::fabs(spec.values.back())});
  const double bound =
      1e-9 * g.vertex_count() * std::max(1.0, 2.0 * g.edge_count());
  if (spec.residual > bound)
    throw EigenError("eigenvalues_symmetric: residual " +
                     std::to_string(spec.residual) +
                     " exceeds accuracy contract " + std::to_string(bound));
  return spec;
}

}  // namespace

Matrix adjacency_matrix(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  Matrix a(n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

Spectrum eigenvalues_symmetric(const Graph& g) {
  return spectral_decomposition(g).spectrum;
}

SpectralDecomposition spectral_decomposition(const Graph& g) {
  EigenSystem sys = eigen_symmetric(adjacency_matrix(g));
  SpectralDecomposition out;
  out.spectrum = spectrum_from(sys, g);
  out.vectors = std::move(sys.vectors);
  return out;
}

double default_sign_tol(const Spectrum& spec) { return 1e-8 * spec.scale; }

Inertia inertia(const Spectrum& spec, double tau) {
  Inertia in;
  for (double mu : spec.values) {
    if (mu > tau)
      ++in.n_plus;
    else if (mu < -tau)
      ++in.n_minus;
    else
      ++in.n_zero;
  }
  return in;
}

SquareEnergies square_energies(const Spectrum& spec, double tau) {
  SquareEnergies e;
  for (double mu : spec.values) {
    if (mu > tau)
      e.s_plus += mu * mu;
    else if (mu < -tau)
      e.s_minus += mu * mu;
  }
  e.spread = e.s_plus - e.s_minus;
  const double lo = std::min(e.s_plus, e.s_minus);
  if (lo >= tau * tau && lo > 0.0)
    e.ratio_max = std::max(e.s_plus, e.s_minus) / lo;
  return e;
}

ResolutionPair spectral_resolution(const Graph& g, double tau) {
  const SpectralDecomposition dec = spectral_decomposition(g);
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  ResolutionPair out{Matrix(n), Matrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double mu = dec.spectrum.values[i];
    if (std::fabs(mu) <= tau) continue;
    Matrix& target = mu > 0 ? out.b : out.c;
    const double weight = std::fabs(mu);
    const double* v = dec.vectors.row(i);
    for (std::size_t r = 0; r < n; ++r)
      kernels::axpy(weight * v[r], v, target.row(r), n);
  }
  return out;
}

bool support_irreducible(const Matrix& m, double tau) {
  const std::size_t n = m.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> q;
  seen[0] = true;
  q.push(0);
  std::size_t count = 1;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || seen[v] || std::fabs(m(u, v)) <= tau) continue;
      seen[v] = true;
      ++count;
      q.push(v);
    }
  }
  return count == n;
}

double spectral_radius(const Graph& g) {
  const Spectrum spec = eigenvalues_symmetric(g);
  if (spec.values.empty()) return 0.0;
  return spec.values.front();
}

}  // namespace sqen
