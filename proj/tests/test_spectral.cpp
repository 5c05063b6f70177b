#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sqen/enumerate.hpp"
#include "sqen/exact_inertia.hpp"
#include "sqen/graph.hpp"
#include "sqen/random_graphs.hpp"
#include "sqen/spectral.hpp"

using namespace sqen;

TEST_CASE("square energies of known graphs") {
  struct Row {
    Graph g;
    double s_plus, s_minus;
  };
  const std::vector<Row> rows = {
      {make_complete(4), 9, 3},       // (n-1)^2 and n-1
      {make_kneser(5, 2), 14, 16},    // 9 + 5*1 and 4*4
      {make_star(5), 4, 4},           // +-2
      {make_complete_bipartite(3, 3), 9, 9},
      {make_cycle(4), 4, 4},
  };
  for (const Row& r : rows) {
    const Spectrum spec = eigenvalues_symmetric(r.g);
    const SquareEnergies e = square_energies(spec, default_sign_tol(spec));
    CHECK(e.s_plus == doctest::Approx(r.s_plus).epsilon(1e-9));
    CHECK(e.s_minus == doctest::Approx(r.s_minus).epsilon(1e-9));
    CHECK(e.spread == doctest::Approx(r.s_plus - r.s_minus).epsilon(1e-9));
    CHECK(e.s_plus + e.s_minus ==
          doctest::Approx(2.0 * r.g.edge_count()).epsilon(1e-9));
  }

  // C_5: mu = 2, golden-ratio pairs; s+ = 4 + 2*phi^-2... checked as sums.
  const Spectrum c5 = eigenvalues_symmetric(make_cycle(5));
  const SquareEnergies e5 = square_energies(c5, default_sign_tol(c5));
  CHECK(e5.s_plus == doctest::Approx(4.76393202250021).epsilon(1e-10));
  CHECK(e5.s_minus == doctest::Approx(5.23606797749979).epsilon(1e-10));
  CHECK(e5.ratio_max == doctest::Approx(e5.s_minus / e5.s_plus));
}

TEST_CASE("ratio sentinel when one side vanishes") {
  // Edgeless graph: s+ = s- = 0 -> ratio_max is the +infinity sentinel.
  const Spectrum spec = eigenvalues_symmetric(Graph(3));
  const SquareEnergies e = square_energies(spec, default_sign_tol(spec));
  CHECK(e.s_plus == 0.0);
  CHECK(e.s_minus == 0.0);
  CHECK(std::isinf(e.ratio_max));
}

TEST_CASE("default tau reproduces exact inertia over the full n <= 7 corpus") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      const Spectrum spec = eigenvalues_symmetric(g);
      const Inertia numeric = inertia(spec, default_sign_tol(spec));
      const Inertia exact = exact_inertia(g);
      CHECK(numeric == exact);
    }
  }
}

TEST_CASE("default tau matches exact inertia on random graphs up to n = 25") {
  // Zero eigenvalues are common (isolated vertices, blowups, bipartite
  // doubling), so the sign threshold is exercised against the integer
  // oracle well beyond the enumeration sizes.
  std::uint64_t seed = 900;
  for (int n : {10, 14, 19, 25}) {
    for (double p : {0.2, 0.5, 0.8}) {
      const Graph g = sample_gnp(n, p, ++seed);
      const Spectrum spec = eigenvalues_symmetric(g);
      CHECK(inertia(spec, default_sign_tol(spec)) == exact_inertia(g));

      if (2 * n <= 30) {  // stay inside the exact-inertia budget
        const Graph doubled = blowup(g, 2);  // forces n zero eigenvalues
        const Spectrum dspec = eigenvalues_symmetric(doubled);
        CHECK(inertia(dspec, default_sign_tol(dspec)) ==
              exact_inertia(doubled));
      }
    }
  }
}

TEST_CASE("spectral resolution A = B - C") {
  for (const Graph& g : {make_complete(3), make_kneser(5, 2), make_cycle(6),
                         sample_gnp(12, 0.5, 3)}) {
    const Spectrum spec = eigenvalues_symmetric(g);
    const double tau = default_sign_tol(spec);
    const ResolutionPair res = spectral_resolution(g, tau);
    const Matrix a = adjacency_matrix(g);
    const int n = g.vertex_count();

    double s_plus = 0, s_minus = 0, tr_b = 0, tr_c = 0;
    for (int i = 0; i < n; ++i) {
      tr_b += res.b(i, i);
      tr_c += res.c(i, i);
      for (int j = 0; j < n; ++j) {
        CHECK(res.b(i, j) - res.c(i, j) ==
              doctest::Approx(a(i, j)).epsilon(1e-9));
        // Symmetry of both parts.
        CHECK(res.b(i, j) == doctest::Approx(res.b(j, i)).epsilon(1e-12));
        CHECK(res.c(i, j) == doctest::Approx(res.c(j, i)).epsilon(1e-12));
        s_plus += res.b(i, j) * res.b(i, j);
        s_minus += res.c(i, j) * res.c(i, j);
      }
    }
    // tr(B^2) = s+, tr(C^2) = s-, tr(B) = tr(C) (zero trace).
    const SquareEnergies e = square_energies(spec, tau);
    CHECK(s_plus == doctest::Approx(e.s_plus).epsilon(1e-8));
    CHECK(s_minus == doctest::Approx(e.s_minus).epsilon(1e-8));
    CHECK(tr_b == doctest::Approx(tr_c).epsilon(1e-8));
  }

  // K_3 closed form: tr(B^2) = 4, tr(C^2) = 2.
  const Graph k3 = make_complete(3);
  const Spectrum s3 = eigenvalues_symmetric(k3);
  const ResolutionPair r3 = spectral_resolution(k3, default_sign_tol(s3));
  double tb2 = 0, tc2 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      tb2 += r3.b(i, j) * r3.b(i, j);
      tc2 += r3.c(i, j) * r3.c(i, j);
    }
  CHECK(tb2 == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(tc2 == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("support irreducibility") {
  const Graph k2 = make_complete(2);
  const Spectrum s2 = eigenvalues_symmetric(k2);
  const double tau = default_sign_tol(s2);
  const ResolutionPair r2 = spectral_resolution(k2, tau);
  CHECK(support_irreducible(r2.b, tau));  // entries +-1/2
  CHECK(support_irreducible(r2.c, tau));

  // Block-diagonal support is reducible.
  Matrix blocks(4);
  blocks(0, 1) = blocks(1, 0) = 1.0;
  blocks(2, 3) = blocks(3, 2) = 1.0;
  CHECK_FALSE(support_irreducible(blocks, 1e-8));

  // Diagonal entries do not connect anything.
  Matrix diag(3);
  for (int i = 0; i < 3; ++i) diag(i, i) = 5.0;
  CHECK_FALSE(support_irreducible(diag, 1e-8));

  Matrix path(3);
  path(0, 1) = path(1, 0) = 0.3;
  path(1, 2) = path(2, 1) = -0.2;
  CHECK(support_irreducible(path, 1e-8));
  // Raising tau above the entries disconnects the support.
  CHECK_FALSE(support_irreducible(path, 0.25));
}

TEST_CASE("blowup spectral law (numeric spot checks)") {
  for (const Graph& g : {make_cycle(5), make_star(4), make_complete(4)}) {
    const Spectrum base = eigenvalues_symmetric(g);
    for (int t : {2, 3}) {
      const Spectrum big = eigenvalues_symmetric(blowup(g, t));
      // Multiset equality: t * base values plus (t-1)*n zeros.
      std::vector<double> want;
      for (double v : base.values) want.push_back(t * v);
      want.insert(want.end(), (t - 1) * g.vertex_count(), 0.0);
      std::sort(want.begin(), want.end(), std::greater<>());
      REQUIRE(want.size() == big.values.size());
      for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(big.values[i] == doctest::Approx(want[i]).epsilon(1e-8));
    }
  }
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius(make_complete(7)) == doctest::Approx(6.0));
  CHECK(spectral_radius(make_star(10)) == doctest::Approx(3.0));
}
