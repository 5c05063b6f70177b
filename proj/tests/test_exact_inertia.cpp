#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "sqen/exact_inertia.hpp"
#include "sqen/graph.hpp"
#include "sqen/spectral.hpp"

using namespace sqen;

TEST_CASE("characteristic polynomials (ascending, monic)") {
  // K_2: x^2 - 1.
  auto k2 = characteristic_polynomial(make_complete(2));
  REQUIRE(k2.size() == 3);
  CHECK(k2[0] == -1);
  CHECK(k2[1] == 0);
  CHECK(k2[2] == 1);

  // K_3: x^3 - 3x - 2.
  auto k3 = characteristic_polynomial(make_complete(3));
  REQUIRE(k3.size() == 4);
  CHECK(k3[0] == -2);
  CHECK(k3[1] == -3);
  CHECK(k3[2] == 0);
  CHECK(k3[3] == 1);

  // Edgeless: x^n.
  auto e3 = characteristic_polynomial(Graph(3));
  CHECK(e3[0] == 0);
  CHECK(e3[1] == 0);
  CHECK(e3[2] == 0);
  CHECK(e3[3] == 1);

  // P_3: x^3 - 2x.
  auto p3 = characteristic_polynomial(make_path(3));
  CHECK(p3[0] == 0);
  CHECK(p3[1] == -2);
  CHECK(p3[2] == 0);
  CHECK(p3[3] == 1);

  CHECK_THROWS(characteristic_polynomial(Graph(31)));  // budget n <= 30
}

TEST_CASE("exact inertia of known graphs") {
  CHECK(exact_inertia(make_complete(2)) == Inertia{1, 0, 1});
  CHECK(exact_inertia(make_complete(6)) == Inertia{1, 0, 5});
  CHECK(exact_inertia(make_path(3)) == Inertia{1, 1, 1});
  CHECK(exact_inertia(make_cycle(4)) == Inertia{1, 2, 1});
  CHECK(exact_inertia(make_star(5)) == Inertia{1, 3, 1});
  CHECK(exact_inertia(make_kneser(5, 2)) == Inertia{6, 0, 4});
  CHECK(exact_inertia(make_kneser(6, 2)) == Inertia{10, 0, 5});
  CHECK(exact_inertia(Graph(4)) == Inertia{0, 4, 0});
  // C_6: eigenvalues 2, 1, 1, -1, -1, -2.
  CHECK(exact_inertia(make_cycle(6)) == Inertia{3, 0, 3});
  // Disjoint union adds componentwise.
  CHECK(exact_inertia(disjoint_copies(make_complete(4), 2)) ==
        Inertia{2, 0, 6});
}
