#pragma once

// Named inequality checkers producing structured verdicts.
//
// Verdict.margin is the signed slack of the inequality being tested, so
// holds <=> margin >= -tol with tol = 1e-7 * max(1, |lhs|, |rhs|) unless a
// check documents its own tolerance.  Checks marked proven correspond to
// theorems: a failing proven verdict is an implementation bug.  Conjecture
// and question checks are report-only.

#include <string>
#include <vector>

#include "sqen/graph.hpp"
#include "sqen/spectral.hpp"

namespace sqen {

struct Verdict {
  std::string check;
  bool applicable = false;
  bool holds = true;    // meaningful only when applicable
  bool proven = false;  // theorem (true) vs conjecture/question report
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // inequality slack; holds <=> margin >= -tol
  std::string graph_id; // graph6 of the graph checked
};

struct ChromaticResult {
  int chi = 0;
  std::vector<int> coloring;  // proper coloring with chi colors
};

// Exact chromatic number via branch and bound (clique lower bound, greedy
// upper bound, k-colorability backtracking).  Budget n <= 16.
ChromaticResult chromatic_number(const Graph& g);

// Individual checks.  Each takes the graph and its precomputed spectrum so a
// suite shares one eigendecomposition per graph.
Verdict check_trace_identity(const Graph& g, const Spectrum& spec);
Verdict check_moment_identity(const Graph& g, const Spectrum& spec);
Verdict check_conjecture1(const Graph& g, const Spectrum& spec);
Verdict check_ando_lin(const Graph& g, const Spectrum& spec);
Verdict check_hong(const Graph& g, const Spectrum& spec);
Verdict check_sqrt_n(const Graph& g, const Spectrum& spec);
// Theorem "s- <= 2m - 4m^2/n^2 <= n^2/4", two verdicts (part1, part2).
std::vector<Verdict> check_mubsm(const Graph& g, const Spectrum& spec);
// Unconditional assertion spread <= 2m plus the conditional report
// spread <= (n-1)(n-2).
std::vector<Verdict> check_spread_bounds(const Graph& g, const Spectrum& spec);
Verdict check_bipartite_symmetry(const Graph& g, const Spectrum& spec);
Verdict check_inertia_conjecture(const Graph& g, const Spectrum& spec);
Verdict check_regular_disconnected(const Graph& g, const Spectrum& spec);
// Maximal planar bundle; precondition m = 3(n-2) (throws otherwise).
// Asserts 1.5(n-2) <= s-, s+ <= 4.5(n-2), the mirrored pair, s+ <= 3s- and
// s- <= 3s+; reports the open question (s+ >= 3(n-2), s- <= 3(n-2)).
std::vector<Verdict> check_maximal_planar(const Graph& g, const Spectrum& spec);

struct IrreducibilityReport {
  bool applicable = false;  // connected with at least one edge
  bool b_irreducible = true;
  bool c_irreducible = true;
};
IrreducibilityReport check_irreducibility_question(const Graph& g, double tau);

enum class Suite { proven, conjectures, all };

// Runs the selected checks in a fixed registry order, sharing one spectrum.
// Per-check errors (budget exhaustion) surface as applicable = false; the
// suite itself never throws for those.
std::vector<Verdict> run_suite(const Graph& g, Suite suite);

// True when some applicable proven verdict fails: an implementation bug.
bool any_proven_failure(const std::vector<Verdict>& verdicts);

}  // namespace sqen
