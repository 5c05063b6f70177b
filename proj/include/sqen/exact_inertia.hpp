#pragma once

// Exact inertia via the integer characteristic polynomial.  Since adjacency
// matrices are symmetric, all roots of p(x) = det(xI - A) are real, so
// Descartes' rule of signs is exact: n+ equals the sign variations of the
// coefficients of p(x), n- those of p(-x), and n0 the multiplicity of the
// zero root.  Budget n <= 30 (dense Faddeev-LeVerrier with big integers).

#include <gmpxx.h>

#include <vector>

#include "sqen/graph.hpp"
#include "sqen/spectral.hpp"

namespace sqen {

// Monic characteristic polynomial of the adjacency matrix, coefficients
// ascending (size n+1, last entry 1).
std::vector<mpz_class> characteristic_polynomial(const Graph& g);

Inertia exact_inertia(const Graph& g);

}  // namespace sqen
