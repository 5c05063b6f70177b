#pragma once

// Adjacency spectra, sign classification, square energies, and the spectral
// resolution A = B - C.
//
// Sign tolerance: an eigenvalue mu is counted positive when mu > tau,
// negative when mu < -tau, zero otherwise.  The default tau is
// 1e-8 * spec.scale, validated against the exact integer-arithmetic inertia
// oracle over the whole small-graph corpus.

#include <limits>
#include <vector>

#include "sqen/eigen_sym.hpp"
#include "sqen/graph.hpp"
#include "sqen/matrix.hpp"

namespace sqen {

struct Spectrum {
  std::vector<double> values;  // descending
  double scale = 1.0;          // max(1, |mu_1|, |mu_n|)
  double residual = 0.0;       // Frobenius reconstruction error
};

struct Inertia {
  long long n_plus = 0;
  long long n_zero = 0;
  long long n_minus = 0;
  bool operator==(const Inertia&) const = default;
};

struct SquareEnergies {
  double s_plus = 0.0;
  double s_minus = 0.0;
  // max(s+/s-, s-/s+); +infinity sentinel when min(s+,s-) < tau^2.
  double ratio_max = std::numeric_limits<double>::infinity();
  double spread = 0.0;  // s_plus - s_minus
};

struct ResolutionPair {
  Matrix b;  // positive part, PSD
  Matrix c;  // negative part, PSD
};

Matrix adjacency_matrix(const Graph& g);

// Full adjacency spectrum.  Enforces the accuracy contract
// residual <= 1e-9 * n * max(1, 2m) and throws EigenError when violated.
Spectrum eigenvalues_symmetric(const Graph& g);

// Spectrum plus eigenvectors (rows), for resolution work.
struct SpectralDecomposition {
  Spectrum spectrum;
  Matrix vectors;  // row i = unit eigenvector of values[i]
};
SpectralDecomposition spectral_decomposition(const Graph& g);

double default_sign_tol(const Spectrum& spec);

Inertia inertia(const Spectrum& spec, double tau);
SquareEnergies square_energies(const Spectrum& spec, double tau);

// B = sum_{mu_i > tau} mu_i v_i v_i^T, C = sum_{mu_i < -tau} (-mu_i) v_i v_i^T.
ResolutionPair spectral_resolution(const Graph& g, double tau);

// True iff the support graph {(i,j): i != j, |M_ij| > tau} is connected
// (symmetric matrix: irreducible iff support connected).
bool support_irreducible(const Matrix& m, double tau);

double spectral_radius(const Graph& g);

}  // namespace sqen
