#include "sqen/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sqen/kernels.hpp"

namespace sqen {

namespace {

// Householder reduction to tridiagonal form.  Works on the full symmetric
// matrix so every inner product and update runs over a contiguous row
// prefix.  On return d holds the diagonal of T, e[i] (i >= 1) the
// subdiagonal T[i-1][i], h[i] the reflector scalar of step i (0 if the step
// was skipped), and row i of `a` keeps the reflector vector u. The reflector
// of step i is H_i = I - u u^T / h[i] acting on coordinates 0..i-1.
void tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e,
                    std::vector<double>& h) {
  const std::size_t n = a.size();
  std::vector<double> p(n);
  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t l = i - 1;
    double* u = a.row(i);
    if (l == 0) {
      e[i] = u[0];
      h[i] = 0.0;
      continue;
    }
    double scale = 0.0;
    for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(u[k]);
    if (scale == 0.0) {
      e[i] = 0.0;
      h[i] = 0.0;
      continue;
    }
    for (std::size_t k = 0; k <= l; ++k) u[k] /= scale;
    double hh = kernels::sum_sq(u, l + 1);
    const double f = u[l];
    const double g = (f >= 0.0) ? -std::sqrt(hh) : std::sqrt(hh);
    e[i] = scale * g;
    hh -= f * g;
    u[l] = f - g;
    h[i] = hh;
    // p = A_sub u / h over rows 0..l, then q = p - (u^T p / 2h) u; the
    // similarity update is A_sub -= q u^T + u q^T.
    for (std::size_t j = 0; j <= l; ++j)
      p[j] = kernels::dot(a.row(j), u, l + 1) / hh;
    const double k2 = kernels::dot(p.data(), u, l + 1) / (2.0 * hh);
    kernels::axpy(-k2, u, p.data(), l + 1);
    for (std::size_t j = 0; j <= l; ++j)
      kernels::rank2_update(p[j], u, u[j], p.data(), a.row(j), l + 1);
  }
  for (std::size_t j = 0; j < n; ++j) d[j] = a(j, j);
  e[0] = 0.0;
}

// Accumulate W = Q^T (rows of W are the tridiagonalizing basis) by
// premultiplying the reflectors in descending step order.
void accumulate_basis(const Matrix& a, const std::vector<double>& h,
                      Matrix& w) {
  const std::size_t n = a.size();
  std::vector<double> s(n);
  for (std::size_t r = 0; r < n; ++r) w(r, r) = 1.0;
  for (std::size_t i = n - 1; i >= 1; --i) {
    if (h[i] == 0.0) continue;
    const std::size_t l = i - 1;
    const double* u = a.row(i);
    std::fill(s.begin(), s.end(), 0.0);
    for (std::size_t r = 0; r <= l; ++r)
      kernels::axpy(u[r] / h[i], w.row(r), s.data(), n);
    for (std::size_t r = 0; r <= l; ++r)
      kernels::axpy(-u[r], s.data(), w.row(r), n);
  }
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the rows of W along.
// e uses the shifted convention e[i] = T[i][i+1].
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix& w) {
  const std::size_t n = d.size();
  constexpr int kMaxSweeps = 50;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxSweeps)
          throw EigenError(
              "eigen_symmetric: QL iteration exceeded 50 sweeps without "
              "converging");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(m) - 1;
        for (; i >= static_cast<std::ptrdiff_t>(l); --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          kernels::rotate_rows(w.row(i), w.row(i + 1), c, s, w.size());
        }
        if (r == 0.0 && i >= static_cast<std::ptrdiff_t>(l)) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

EigenSystem eigen_symmetric(const Matrix& a_in) {
  const std::size_t n = a_in.size();
  EigenSystem out;
  out.vectors = Matrix(n);
  out.residual = 0.0;
  if (n == 0) return out;
  if (n == 1) {
    out.values = {a_in(0, 0)};
    out.vectors(0, 0) = 1.0;
    return out;
  }

  Matrix a = a_in;
  std::vector<double> d(n, 0.0), e(n, 0.0), h(n, 0.0);
  tridiagonalize(a, d, e, h);

  Matrix w(n);
  accumulate_basis(a, h, w);

  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  ql_implicit(d, e, w);

  // Sort descending, permuting eigenvector rows along.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return d[x] > d[y]; });
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = d[order[i]];
    std::copy(w.row(order[i]), w.row(order[i]) + n, out.vectors.row(i));
  }

  // Frobenius reconstruction residual ||A - V^T diag V||_F.
  Matrix recon(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* v = out.vectors.row(i);
    for (std::size_t r = 0; r < n; ++r)
      kernels::axpy(out.values[i] * v[r], v, recon.row(r), n);
  }
  double acc = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    acc += kernels::sum_sq_diff(a_in.row(r), recon.row(r), n);
  out.residual = std::sqrt(acc);
  return out;
}

}  // namespace sqen
