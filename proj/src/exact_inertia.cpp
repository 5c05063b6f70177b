#include "sqen/exact_inertia.hpp"

#include <stdexcept>
#include <string>

namespace sqen {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

ZMatrix zmatrix(int n) {
  return ZMatrix(n, std::vector<mpz_class>(n, 0));
}

ZMatrix multiply(const ZMatrix& a, const ZMatrix& b) {
  const int n = static_cast<int>(a.size());
  ZMatrix out = zmatrix(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

mpz_class trace(const ZMatrix& a) {
  mpz_class t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

int sign_variations(const std::vector<mpz_class>& coeffs) {
  int variations = 0;
  int prev = 0;
  for (const mpz_class& c : coeffs) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

std::vector<mpz_class> characteristic_polynomial(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 30)
    throw std::invalid_argument(
        "characteristic_polynomial: n <= 30 budget exceeded (n = " +
        std::to_string(n) + ")");
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1), and
  // M_{k+1} = A (M_k + c_{n-k} I), c_{n-k-1} = -tr(M_{k+1}) / (k+1).
  std::vector<mpz_class> coeffs(n + 1, 0);
  coeffs[n] = 1;
  if (n == 0) return coeffs;

  ZMatrix a = zmatrix(n);
  for (auto [u, v] : g.edges()) {
    a[u][v] = 1;
    a[v][u] = 1;
  }
  ZMatrix m = a;
  for (int k = 1; k <= n; ++k) {
    mpz_class c = -trace(m);
    if (c % k != 0)
      throw std::logic_error(
          "characteristic_polynomial: non-exact trace division");
    c /= k;
    coeffs[n - k] = c;
    if (k == n) break;
    for (int i = 0; i < n; ++i) m[i][i] += c;
    m = multiply(a, m);
  }
  return coeffs;
}

Inertia exact_inertia(const Graph& g) {
  const auto coeffs = characteristic_polynomial(g);
  const int n = g.vertex_count();
  Inertia out;
  int zero_mult = 0;
  while (zero_mult <= n && coeffs[zero_mult] == 0) ++zero_mult;
  out.n_zero = zero_mult;

  // All roots real: Descartes' sign variations count positive roots of p(x)
  // and of p(-x) exactly (multiplicities included).
  out.n_plus = sign_variations(coeffs);
  std::vector<mpz_class> reflected(coeffs);
  for (std::size_t i = 1; i < reflected.size(); i += 2)
    reflected[i] = -reflected[i];
  out.n_minus = sign_variations(reflected);
  return out;
}

}  // namespace sqen
