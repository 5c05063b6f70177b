#pragma once

// Dense symmetric eigensolver: Householder tridiagonalization followed by
// implicit-shift QL iteration, with eigenvectors accumulated as rows of a
// contiguous matrix so the hot loops are straight runs over the vector
// kernels.  The iteration cap is 50 QL sweeps per eigenvalue; exceeding it
// throws EigenError rather than returning partial results.

#include <stdexcept>
#include <string>
#include <vector>

#include "sqen/matrix.hpp"

namespace sqen {

class EigenError : public std::runtime_error {
 public:
  explicit EigenError(const std::string& what) : std::runtime_error(what) {}
};

struct EigenSystem {
  std::vector<double> values;  // descending
  Matrix vectors;              // row i = unit eigenvector for values[i]
  double residual;             // ||A - V^T diag(values) V||_F
};

// Full eigendecomposition of a symmetric matrix (only the given matrix's
// symmetric part is meaningful; the input is read as-is and assumed
// symmetric).
EigenSystem eigen_symmetric(const Matrix& a);

}  // namespace sqen
