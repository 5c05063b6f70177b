#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "sqen/checks.hpp"
#include "sqen/enumerate.hpp"
#include "sqen/graph.hpp"
#include "sqen/random_graphs.hpp"
#include "sqen/spectral.hpp"

using namespace sqen;

namespace {

Spectrum spec_of(const Graph& g) { return eigenvalues_symmetric(g); }

bool proper(const Graph& g, const std::vector<int>& coloring, int chi) {
  std::set<int> used(coloring.begin(), coloring.end());
  if (int(used.size()) != chi) return false;
  for (auto [u, v] : g.edges())
    if (coloring[u] == coloring[v]) return false;
  return true;
}

}  // namespace

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(Graph(0)).chi == 0);
  CHECK(chromatic_number(Graph(5)).chi == 1);
  CHECK(chromatic_number(make_complete(7)).chi == 7);
  CHECK(chromatic_number(make_cycle(6)).chi == 2);
  CHECK(chromatic_number(make_cycle(5)).chi == 3);
  CHECK(chromatic_number(make_kneser(5, 2)).chi == 3);
  CHECK(chromatic_number(make_complete_bipartite(4, 4)).chi == 2);
  // Wheel = C_5 + hub.
  Graph wheel = make_cycle(5);
  {
    Graph w(6);
    for (auto [u, v] : wheel.edges()) w.add_edge(u, v);
    for (int v = 0; v < 5; ++v) w.add_edge(v, 5);
    wheel = w;
  }
  CHECK(chromatic_number(wheel).chi == 4);

  for (const Graph& g : {make_kneser(5, 2), wheel, make_cycle(7)}) {
    const ChromaticResult r = chromatic_number(g);
    CHECK(proper(g, r.coloring, r.chi));
  }

  CHECK_THROWS_AS(chromatic_number(make_complete(17)), std::invalid_argument);
}

TEST_CASE("chromatic certificates over the n <= 6 corpus") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      const ChromaticResult r = chromatic_number(g);
      CHECK(proper(g, r.coloring, r.chi));
      if (is_bipartite(g) && g.edge_count() >= 1) CHECK(r.chi == 2);
      if (g.edge_count() == n * (n - 1) / 2 && n >= 1) CHECK(r.chi == n);
    }
}

TEST_CASE("identity checks") {
  const Graph pet = make_kneser(5, 2);
  const Spectrum s = spec_of(pet);
  CHECK(check_trace_identity(pet, s).holds);
  CHECK(check_moment_identity(pet, s).holds);
  CHECK(check_trace_identity(pet, s).proven);

  const Verdict t = check_trace_identity(pet, s);
  CHECK(t.check == "trace_identity");
  CHECK(t.graph_id == "I?LRCecq?");
}

TEST_CASE("hong bound with equality case") {
  // Stars give mu1 = sqrt(n-1) = sqrt(2m - n + 1): equality.
  const Graph s5 = make_star(5);
  const Verdict v = check_hong(s5, spec_of(s5));
  CHECK(v.applicable);
  CHECK(v.holds);
  CHECK(v.lhs == doctest::Approx(2.0));
  CHECK(v.rhs == doctest::Approx(2.0));
  CHECK(std::abs(v.margin) < 1e-9);

  // Disconnected -> not applicable.
  const Graph two = disjoint_copies(make_complete(3), 2);
  CHECK_FALSE(check_hong(two, spec_of(two)).applicable);
}

TEST_CASE("ando-lin bound with equality case") {
  // K_n: 1 + max-ratio = 1 + (n-1) = n = chi.
  const Graph k5 = make_complete(5);
  const Verdict v = check_ando_lin(k5, spec_of(k5));
  CHECK(v.applicable);
  CHECK(v.holds);
  CHECK(v.lhs == doctest::Approx(5.0));
  CHECK(v.rhs == doctest::Approx(5.0));

  // Edgeless -> not applicable (needs m >= 1).
  CHECK_FALSE(check_ando_lin(Graph(4), spec_of(Graph(4))).applicable);
}

TEST_CASE("theorem 'two-part minimum upper bound' on s-") {
  // K_{1,3}: s- = 3 <= 2m - 4m^2/n^2 = 3.75 <= n^2/4 = 4.
  const Graph s4 = make_star(4);
  const auto vs = check_mubsm(s4, spec_of(s4));
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].check == "mubsm_part1");
  CHECK(vs[0].holds);
  CHECK(vs[0].lhs == doctest::Approx(3.0));
  CHECK(vs[0].rhs == doctest::Approx(3.75));
  CHECK(vs[1].check == "mubsm_part2");
  CHECK(vs[1].holds);
  CHECK(vs[1].rhs == doctest::Approx(4.0));
}

TEST_CASE("sqrt_n lower bound") {
  const Graph c9 = make_cycle(9);
  const Verdict v = check_sqrt_n(c9, spec_of(c9));
  CHECK(v.applicable);
  CHECK(v.holds);
  CHECK(v.rhs == doctest::Approx(3.0));
  // n < 3 -> not applicable.
  const Graph k2 = make_complete(2);
  CHECK_FALSE(check_sqrt_n(k2, spec_of(k2)).applicable);
}

TEST_CASE("conjecture1 report") {
  const Graph c5 = make_cycle(5);
  const Verdict v = check_conjecture1(c5, spec_of(c5));
  CHECK(v.applicable);
  CHECK(v.holds);
  CHECK_FALSE(v.proven);
  CHECK(v.lhs == doctest::Approx(4.76393202250021));
  CHECK(v.rhs == doctest::Approx(4.0));

  const Graph two = disjoint_copies(make_complete(2), 2);
  CHECK_FALSE(check_conjecture1(two, spec_of(two)).applicable);
}

TEST_CASE("bipartite symmetry") {
  for (const Graph& g : {make_path(6), make_complete_bipartite(3, 4),
                         make_cycle(8), make_star(7)}) {
    const Verdict v = check_bipartite_symmetry(g, spec_of(g));
    CHECK(v.applicable);
    CHECK(v.holds);
  }
  const Graph c5 = make_cycle(5);
  CHECK_FALSE(check_bipartite_symmetry(c5, spec_of(c5)).applicable);
}

TEST_CASE("regular disconnected lower bound") {
  // 2C_6: 2-regular, disconnected, no complete component (d+1 = 3 vertices).
  const Graph two_c6 = disjoint_copies(make_cycle(6), 2);
  const Verdict v = check_regular_disconnected(two_c6, spec_of(two_c6));
  CHECK(v.applicable);
  CHECK(v.holds);
  CHECK(v.lhs == doctest::Approx(12.0));  // each C_6 has s+ = s- = 6
  CHECK(v.rhs == doctest::Approx(11.0));

  // C_4 + C_5 is 2-regular and disconnected with no K_3 component.
  const Graph mix = disjoint_union(make_cycle(4), make_cycle(5));
  const Verdict vm = check_regular_disconnected(mix, spec_of(mix));
  CHECK(vm.applicable);
  CHECK(vm.holds);

  // 2K_4 contains complete components K_{d+1} -> excluded by the theorem.
  const Graph two_k4 = disjoint_copies(make_complete(4), 2);
  CHECK_FALSE(check_regular_disconnected(two_k4, spec_of(two_k4)).applicable);

  // Connected or irregular graphs are out of scope.
  const Graph pet = make_kneser(5, 2);
  CHECK_FALSE(check_regular_disconnected(pet, spec_of(pet)).applicable);
  const Graph mixed = disjoint_union(make_path(3), make_cycle(4));
  CHECK_FALSE(check_regular_disconnected(mixed, spec_of(mixed)).applicable);
}

TEST_CASE("inertia-count conjecture report") {
  // 2K_4: s+ = 2(n-1)^2... min side equality: min(s+,s-) = 6 = max(n+,n-).
  const Graph two_k4 = disjoint_copies(make_complete(4), 2);
  const Verdict v = check_inertia_conjecture(two_k4, spec_of(two_k4));
  CHECK(v.applicable);
  CHECK(v.holds);
  CHECK(v.lhs == doctest::Approx(6.0));
  CHECK(v.rhs == doctest::Approx(6.0));
  CHECK_FALSE(v.proven);
}

TEST_CASE("spread bounds") {
  const Graph pet = make_kneser(5, 2);
  const auto vs = check_spread_bounds(pet, spec_of(pet));
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].check == "spread_upper");
  CHECK(vs[0].proven);
  CHECK(vs[0].holds);
  CHECK(vs[0].rhs == doctest::Approx(30.0));  // 2m
  CHECK(vs[1].check == "spread_conditional");
  CHECK_FALSE(vs[1].proven);
  CHECK(vs[1].rhs == doctest::Approx(72.0));  // (n-1)(n-2)
}

TEST_CASE("maximal planar bundle") {
  const Graph tri = generate_maximal_planar(12, 4, 36);
  const auto vs = check_maximal_planar(tri, spec_of(tri));
  REQUIRE(vs.size() == 8);
  for (const Verdict& v : vs) {
    CHECK(v.applicable);
    if (v.proven) CHECK(v.holds);
  }
  CHECK(vs[0].check == "planar_s_minus_lower");
  CHECK(vs[4].check == "planar_ratio_plus");
  CHECK_FALSE(vs[6].proven);  // question reports
  CHECK_FALSE(vs[7].proven);

  // Precondition m = 3(n-2).
  const Graph c5 = make_cycle(5);
  CHECK_THROWS_AS(check_maximal_planar(c5, spec_of(c5)),
                  std::invalid_argument);
}

TEST_CASE("irreducibility question report") {
  const Graph k2 = make_complete(2);
  const IrreducibilityReport r = check_irreducibility_question(k2, 1e-8);
  CHECK(r.applicable);
  CHECK(r.b_irreducible);
  CHECK(r.c_irreducible);

  CHECK_FALSE(check_irreducibility_question(Graph(3), 1e-8).applicable);
}

TEST_CASE("suite composition and proven-failure detection") {
  const Graph pet = make_kneser(5, 2);
  const auto proven = run_suite(pet, Suite::proven);
  const auto conj = run_suite(pet, Suite::conjectures);
  const auto all = run_suite(pet, Suite::all);
  CHECK(all.size() == proven.size() + conj.size());
  for (const Verdict& v : proven) CHECK(v.proven);
  for (const Verdict& v : conj) CHECK_FALSE(v.proven);
  for (const Verdict& v : all) CHECK(v.graph_id == "I?LRCecq?");
  CHECK_FALSE(any_proven_failure(all));

  // A fabricated failing proven verdict is detected.
  std::vector<Verdict> bad = proven;
  bad[0].holds = false;
  CHECK(any_proven_failure(bad));
  // Non-applicable or unproven failures are not.
  std::vector<Verdict> report = conj;
  for (Verdict& v : report) v.holds = false;
  CHECK_FALSE(any_proven_failure(report));

  // Budget overruns surface as not-applicable, not exceptions: n = 17 makes
  // the chromatic bound (ando_lin) inapplicable.
  const Graph big = make_cycle(17);
  const auto big_suite = run_suite(big, Suite::all);
  bool found_ando = false;
  for (const Verdict& v : big_suite)
    if (v.check == "ando_lin") {
      found_ando = true;
      CHECK_FALSE(v.applicable);
    }
  CHECK(found_ando);
}
