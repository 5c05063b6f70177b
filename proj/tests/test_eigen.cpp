#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sqen/eigen_sym.hpp"
#include "sqen/graph.hpp"
#include "sqen/matrix.hpp"
#include "sqen/random_graphs.hpp"
#include "sqen/spectral.hpp"

using namespace sqen;

namespace {

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

void check_spectrum(const Graph& g, const std::vector<double>& expected,
                    double tol = 1e-9) {
  const Spectrum spec = eigenvalues_symmetric(g);
  REQUIRE(spec.values.size() == expected.size());
  const auto want = sorted_desc(expected);
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(spec.values[i] == doctest::Approx(want[i]).epsilon(tol));
}

}  // namespace

TEST_CASE("closed-form spectra of the classical families") {
  using std::numbers::pi;

  // K_n: n-1 once, -1 with multiplicity n-1.
  for (int n : {2, 3, 6, 11}) {
    std::vector<double> want{double(n - 1)};
    want.insert(want.end(), n - 1, -1.0);
    check_spectrum(make_complete(n), want);
  }

  // C_n: 2 cos(2 pi j / n).
  for (int n : {3, 4, 5, 8, 13}) {
    std::vector<double> want;
    for (int j = 0; j < n; ++j) want.push_back(2 * std::cos(2 * pi * j / n));
    check_spectrum(make_cycle(n), want);
  }

  // P_n: 2 cos(pi j / (n+1)), j = 1..n.
  for (int n : {1, 2, 5, 9}) {
    std::vector<double> want;
    for (int j = 1; j <= n; ++j) want.push_back(2 * std::cos(pi * j / (n + 1)));
    check_spectrum(make_path(n), want);
  }

  // K_{a,b}: +-sqrt(ab) and zeros.
  for (auto [a, b] : {std::pair{1, 4}, {2, 3}, {4, 4}}) {
    std::vector<double> want{std::sqrt(double(a) * b),
                             -std::sqrt(double(a) * b)};
    want.insert(want.end(), a + b - 2, 0.0);
    check_spectrum(make_complete_bipartite(a, b), want);
  }

  // Petersen: 3, 1^5, (-2)^4.
  std::vector<double> pet{3, 1, 1, 1, 1, 1, -2, -2, -2, -2};
  check_spectrum(make_kneser(5, 2), pet);

  // Edgeless.
  check_spectrum(Graph(4), {0, 0, 0, 0});
}

TEST_CASE("eigenvectors reconstruct the matrix and are orthonormal") {
  std::mt19937_64 rng(31);
  for (int n : {1, 2, 3, 10, 40}) {
    const Graph g = sample_gnp(n, 0.5, rng());
    const Matrix a = adjacency_matrix(g);
    const EigenSystem sys = eigen_symmetric(a);

    REQUIRE(int(sys.values.size()) == n);
    // Descending order.
    for (int i = 0; i + 1 < n; ++i) CHECK(sys.values[i] >= sys.values[i + 1]);

    // Rows of `vectors` are orthonormal eigenvectors.
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double dot = 0;
        for (int k = 0; k < n; ++k)
          dot += sys.vectors(i, k) * sys.vectors(j, k);
        CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
      }

    // A v = lambda v.
    for (int i = 0; i < n; ++i) {
      for (int r = 0; r < n; ++r) {
        double av = 0;
        for (int k = 0; k < n; ++k) av += a(r, k) * sys.vectors(i, k);
        CHECK(av == doctest::Approx(sys.values[i] * sys.vectors(i, r))
                        .epsilon(1e-9 * std::max(1.0, std::abs(sys.values[i]))));
      }
    }

    CHECK(sys.residual <= 1e-9 * std::max(1, n) *
                              std::max(1.0, 2.0 * g.edge_count()));
  }
}

TEST_CASE("residual contract on the spectrum wrapper") {
  for (int n : {5, 25, 80}) {
    const Graph g = sample_gnp(n, 0.4, 1234 + n);
    const Spectrum spec = eigenvalues_symmetric(g);
    CHECK(spec.residual <= 1e-9 * n * std::max(1.0, 2.0 * g.edge_count()));
    CHECK(spec.scale ==
          doctest::Approx(std::max({1.0, std::abs(spec.values.front()),
                                    std::abs(spec.values.back())})));

    // Zero trace and second moment = 2m, within the documented windows.
    double sum = 0, sum_sq = 0;
    for (double v : spec.values) {
      sum += v;
      sum_sq += v * v;
    }
    CHECK(std::abs(sum) <= 1e-8 * n * spec.scale);
    CHECK(std::abs(sum_sq - 2.0 * g.edge_count()) <=
          1e-7 * std::max(1.0, 2.0 * g.edge_count()));
  }
}

TEST_CASE("high-multiplicity and degenerate cases") {
  // K_{n/2,n/2} blowups have large zero eigenspaces; complete graphs have
  // large -1 eigenspaces; both must keep orthonormal bases.
  const Graph g = blowup(make_complete(3), 4);
  const Matrix a = adjacency_matrix(g);
  const EigenSystem sys = eigen_symmetric(a);
  int zeros = 0;
  for (double v : sys.values)
    if (std::abs(v) < 1e-9) ++zeros;
  CHECK(zeros == 9);  // (t-1) * n = 3 * 3 zeros

  const Spectrum one = eigenvalues_symmetric(Graph(1));
  CHECK(one.values == std::vector<double>{0.0});
}
