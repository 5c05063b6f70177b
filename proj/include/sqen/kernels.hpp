#pragma once

// Low-level dense vector kernels used by the symmetric eigensolver and the
// spectral-resolution code.  Every kernel has a scalar reference
// implementation and (on x86-64) an AVX2+FMA implementation; the backend is
// selected once at startup from cpuid, and can be overridden with the
// SQEN_KERNEL environment variable ("scalar" or "avx2") or programmatically
// with use_backend().  Both implementations compute the same quantities; they
// may differ in the last bits because of reassociation, which the callers'
// tolerances absorb.

#include <cstddef>
#include <stdexcept>
#include <string_view>

namespace sqen::kernels {

enum class Backend { scalar, avx2 };

// Inner product sum_i x[i]*y[i].
double dot(const double* x, const double* y, std::size_t n);

// y[i] += a*x[i].
void axpy(double a, const double* x, double* y, std::size_t n);

// y[i] -= a*u[i] + b*v[i]  (fused rank-2 row update).
void rank2_update(double a, const double* u, double b, const double* v,
                  double* y, std::size_t n);

// Plane rotation applied to two rows in place:
//   (a[i], b[i]) <- (c*a[i] - s*b[i], s*a[i] + c*b[i]).
void rotate_rows(double* a, double* b, double c, double s, std::size_t n);

// sum_i x[i]^2.
double sum_sq(const double* x, std::size_t n);

// sum_i (x[i]-y[i])^2.
double sum_sq_diff(const double* x, const double* y, std::size_t n);

// Backend currently in use.
Backend active_backend();
std::string_view backend_name(Backend b);

// True if the given backend can run on this machine/build.
bool backend_available(Backend b);

// Force a backend (used by the equivalence tests).  Throws std::runtime_error
// if the backend is not available.
void use_backend(Backend b);

}  // namespace sqen::kernels
