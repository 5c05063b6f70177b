#include "sqen/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "sqen/exact_inertia.hpp"
#include "sqen/graph6.hpp"

namespace sqen {

namespace {

double check_tol(double lhs, double rhs) {
  return 1e-7 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

// Inequality verdict with the default tolerance: margin is the signed slack.
Verdict verdict(const Graph& g, const std::string& name, bool proven,
                double lhs, double rhs, double margin) {
  Verdict v;
  v.check = name;
  v.applicable = true;
  v.proven = proven;
  v.lhs = lhs;
  v.rhs = rhs;
  v.margin = margin;
  v.holds = margin >= -check_tol(lhs, rhs);
  v.graph_id = encode_graph6(g);
  return v;
}

Verdict not_applicable(const Graph& g, const std::string& name, bool proven) {
  Verdict v;
  v.check = name;
  v.applicable = false;
  v.proven = proven;
  v.graph_id = encode_graph6(g);
  return v;
}

SquareEnergies energies_of(const Spectrum& spec) {
  return square_energies(spec, default_sign_tol(spec));
}

double sum_values(const Spectrum& spec) {
  return std::accumulate(spec.values.begin(), spec.values.end(), 0.0);
}

double sum_squares(const Spectrum& spec) {
  double s = 0.0;
  for (double mu : spec.values) s += mu * mu;
  return s;
}

// ---- exact chromatic number ----

int max_clique_size(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int best = 0;
  std::vector<int> clique;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& cands) {
    if (static_cast<int>(clique.size()) > best)
      best = static_cast<int>(clique.size());
    if (static_cast<int>(clique.size() + cands.size()) <= best) return;
    while (!cands.empty()) {
      if (static_cast<int>(clique.size() + cands.size()) <= best) return;
      const int v = cands.back();
      cands.pop_back();
      std::vector<int> next;
      for (int u : cands)
        if (g.has_edge(u, v)) next.push_back(u);
      clique.push_back(v);
      grow(next);
      clique.pop_back();
    }
  };
  grow(order);
  return best;
}

bool try_k_coloring(const Graph& g, int k, const std::vector<int>& order,
                    std::vector<int>& coloring) {
  const int n = g.vertex_count();
  std::vector<int> assigned(n, -1);
  std::function<bool(int, int)> place = [&](int pos, int used) -> bool {
    if (pos == n) return true;
    const int v = order[pos];
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int u : order)
        if (assigned[u] == c && g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      assigned[v] = c;
      if (place(pos + 1, std::max(used, c + 1))) return true;
      assigned[v] = -1;
    }
    return false;
  };
  if (!place(0, 0)) return false;
  coloring = assigned;
  return true;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16)
    throw std::invalid_argument(
        "chromatic_number: n <= 16 budget exceeded (n = " + std::to_string(n) +
        ")");
  ChromaticResult out;
  out.coloring.assign(n, 0);
  if (n == 0) {
    out.chi = 0;
    return out;
  }
  if (g.edge_count() == 0) {
    out.chi = 1;
    return out;
  }
  std::vector<int> side;
  if (is_bipartite(g, &side)) {
    out.chi = 2;
    out.coloring = side;
    return out;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });

  // Greedy upper bound along the degree ordering.
  std::vector<int> greedy(n, -1);
  int ub = 0;
  for (int v : order) {
    int c = 0;
    while (true) {
      bool clash = false;
      for (int u = 0; u < n; ++u)
        if (greedy[u] == c && g.has_edge(u, v)) {
          clash = true;
          break;
        }
      if (!clash) break;
      ++c;
    }
    greedy[v] = c;
    ub = std::max(ub, c + 1);
  }

  const int lb = max_clique_size(g);
  for (int k = lb; k < ub; ++k) {
    std::vector<int> coloring;
    if (try_k_coloring(g, k, order, coloring)) {
      out.chi = k;
      out.coloring = coloring;
      return out;
    }
  }
  out.chi = ub;
  out.coloring = greedy;
  return out;
}

// ---- individual checks ----

Verdict check_trace_identity(const Graph& g, const Spectrum& spec) {
  const double lhs = std::fabs(sum_values(spec));
  const double rhs = 1e-8 * g.vertex_count() * spec.scale;
  Verdict v = verdict(g, "trace_identity", true, lhs, rhs, rhs - lhs);
  v.holds = lhs <= rhs;  // rhs is itself the tolerance
  return v;
}

Verdict check_moment_identity(const Graph& g, const Spectrum& spec) {
  const double lhs = std::fabs(sum_squares(spec) - 2.0 * g.edge_count());
  const double rhs = 1e-7 * std::max(1.0, 2.0 * g.edge_count());
  Verdict v = verdict(g, "moment_identity", true, lhs, rhs, rhs - lhs);
  v.holds = lhs <= rhs;
  return v;
}

Verdict check_conjecture1(const Graph& g, const Spectrum& spec) {
  if (!is_connected(g) || g.vertex_count() == 0)
    return not_applicable(g, "conjecture1", false);
  const SquareEnergies e = energies_of(spec);
  const double lhs = std::min(e.s_plus, e.s_minus);
  const double rhs = g.vertex_count() - 1.0;
  Verdict v = verdict(g, "conjecture1", false, lhs, rhs, lhs - rhs);
  v.holds = lhs >= rhs - 1e-7 * g.vertex_count();
  return v;
}

Verdict check_ando_lin(const Graph& g, const Spectrum& spec) {
  if (g.edge_count() < 1 || g.vertex_count() > 16)
    return not_applicable(g, "ando_lin", true);
  const SquareEnergies e = energies_of(spec);
  const double lhs = 1.0 + e.ratio_max;
  const double rhs = chromatic_number(g).chi;
  return verdict(g, "ando_lin", true, lhs, rhs, rhs - lhs);
}

Verdict check_hong(const Graph& g, const Spectrum& spec) {
  if (!is_connected(g) || g.vertex_count() == 0)
    return not_applicable(g, "hong", true);
  const double lhs = spec.values.front();
  const double rhs = std::sqrt(2.0 * g.edge_count() - g.vertex_count() + 1.0);
  return verdict(g, "hong", true, lhs, rhs, rhs - lhs);
}

Verdict check_sqrt_n(const Graph& g, const Spectrum& spec) {
  if (!is_connected(g) || g.vertex_count() < 3)
    return not_applicable(g, "sqrt_n", true);
  const SquareEnergies e = energies_of(spec);
  const double lhs = std::min(e.s_plus, e.s_minus);
  const double rhs = std::sqrt(static_cast<double>(g.vertex_count()));
  return verdict(g, "sqrt_n", true, lhs, rhs, lhs - rhs);
}

std::vector<Verdict> check_mubsm(const Graph& g, const Spectrum& spec) {
  if (g.vertex_count() < 1)
    return {not_applicable(g, "mubsm_part1", true),
            not_applicable(g, "mubsm_part2", true)};
  const double n = g.vertex_count();
  const double m = g.edge_count();
  const double mid = 2.0 * m - 4.0 * m * m / (n * n);
  const SquareEnergies e = energies_of(spec);
  return {verdict(g, "mubsm_part1", true, e.s_minus, mid, mid - e.s_minus),
          verdict(g, "mubsm_part2", true, mid, n * n / 4.0, n * n / 4.0 - mid)};
}

std::vector<Verdict> check_spread_bounds(const Graph& g,
                                         const Spectrum& spec) {
  const SquareEnergies e = energies_of(spec);
  const double n = g.vertex_count();
  const double two_m = 2.0 * g.edge_count();
  const double cond = (n - 1.0) * (n - 2.0);
  return {
      verdict(g, "spread_upper", true, e.spread, two_m, two_m - e.spread),
      verdict(g, "spread_conditional", false, e.spread, cond, cond - e.spread)};
}

Verdict check_bipartite_symmetry(const Graph& g, const Spectrum& spec) {
  if (!is_bipartite(g)) return not_applicable(g, "bipartite_symmetry", true);
  const SquareEnergies e = energies_of(spec);
  const double lhs = std::fabs(e.s_plus - e.s_minus);
  const double rhs = 1e-7 * std::max(1.0, 2.0 * g.edge_count());
  Verdict v = verdict(g, "bipartite_symmetry", true, lhs, rhs, rhs - lhs);
  v.holds = lhs <= rhs;
  return v;
}

Verdict check_inertia_conjecture(const Graph& g, const Spectrum& spec) {
  if (g.vertex_count() == 0)
    return not_applicable(g, "inertia_conjecture", false);
  const SquareEnergies e = energies_of(spec);
  Inertia in = g.vertex_count() <= 30
                   ? exact_inertia(g)
                   : inertia(spec, default_sign_tol(spec));
  const double lhs = std::min(e.s_plus, e.s_minus);
  const double rhs = static_cast<double>(std::max(in.n_plus, in.n_minus));
  return verdict(g, "inertia_conjecture", false, lhs, rhs, lhs - rhs);
}

Verdict check_regular_disconnected(const Graph& g, const Spectrum& spec) {
  const auto degree = is_regular(g);
  bool applicable = degree.has_value() && !is_connected(g) &&
                    g.vertex_count() > 0;
  if (applicable) {
    // A connected d-regular component is complete iff it has d+1 vertices.
    for (const auto& comp : connected_components(g))
      if (static_cast<int>(comp.size()) == *degree + 1) {
        applicable = false;
        break;
      }
  }
  if (!applicable) return not_applicable(g, "regular_disconnected", true);
  const SquareEnergies e = energies_of(spec);
  const double lhs = std::min(e.s_plus, e.s_minus);
  const double rhs = g.vertex_count() - 1.0;
  return verdict(g, "regular_disconnected", true, lhs, rhs, lhs - rhs);
}

std::vector<Verdict> check_maximal_planar(const Graph& g,
                                          const Spectrum& spec) {
  const double n = g.vertex_count();
  if (g.vertex_count() < 3 || g.edge_count() != 3 * (g.vertex_count() - 2))
    throw std::invalid_argument(
        "check_maximal_planar: precondition m = 3(n-2) violated");
  const SquareEnergies e = energies_of(spec);
  const double base = n - 2.0;
  return {
      verdict(g, "planar_s_minus_lower", true, e.s_minus, 1.5 * base,
              e.s_minus - 1.5 * base),
      verdict(g, "planar_s_plus_upper", true, e.s_plus, 4.5 * base,
              4.5 * base - e.s_plus),
      verdict(g, "planar_s_plus_lower", true, e.s_plus, 1.5 * base,
              e.s_plus - 1.5 * base),
      verdict(g, "planar_s_minus_upper", true, e.s_minus, 4.5 * base,
              4.5 * base - e.s_minus),
      verdict(g, "planar_ratio_plus", true, e.s_plus, 3.0 * e.s_minus,
              3.0 * e.s_minus - e.s_plus),
      verdict(g, "planar_ratio_minus", true, e.s_minus, 3.0 * e.s_plus,
              3.0 * e.s_plus - e.s_minus),
      verdict(g, "planar_q51_s_plus", false, e.s_plus, 3.0 * base,
              e.s_plus - 3.0 * base),
      verdict(g, "planar_q51_s_minus", false, e.s_minus, 3.0 * base,
              3.0 * base - e.s_minus)};
}

IrreducibilityReport check_irreducibility_question(const Graph& g,
                                                   double tau) {
  IrreducibilityReport rep;
  if (!is_connected(g) || g.edge_count() < 1) return rep;
  rep.applicable = true;
  const ResolutionPair res = spectral_resolution(g, tau);
  rep.b_irreducible = support_irreducible(res.b, tau);
  rep.c_irreducible = support_irreducible(res.c, tau);
  return rep;
}

std::vector<Verdict> run_suite(const Graph& g, Suite suite) {
  const Spectrum spec = eigenvalues_symmetric(g);
  const std::string id = encode_graph6(g);
  std::vector<Verdict> out;
  auto push = [&](Verdict v) {
    v.graph_id = id;
    out.push_back(std::move(v));
  };
  auto guarded = [&](const std::string& name, bool proven, auto&& fn) {
    try {
      push(fn());
    } catch (const std::exception&) {
      push(not_applicable(g, name, proven));
    }
  };

  const bool proven = suite == Suite::proven || suite == Suite::all;
  const bool reports = suite == Suite::conjectures || suite == Suite::all;

  if (proven) {
    guarded("trace_identity", true, [&] { return check_trace_identity(g, spec); });
    guarded("moment_identity", true,
            [&] { return check_moment_identity(g, spec); });
    guarded("hong", true, [&] { return check_hong(g, spec); });
    guarded("sqrt_n", true, [&] { return check_sqrt_n(g, spec); });
    for (auto& v : check_mubsm(g, spec)) push(std::move(v));
    guarded("ando_lin", true, [&] { return check_ando_lin(g, spec); });
    guarded("bipartite_symmetry", true,
            [&] { return check_bipartite_symmetry(g, spec); });
    guarded("regular_disconnected", true,
            [&] { return check_regular_disconnected(g, spec); });
    push(check_spread_bounds(g, spec)[0]);
  }
  if (reports) {
    guarded("conjecture1", false, [&] { return check_conjecture1(g, spec); });
    guarded("inertia_conjecture", false,
            [&] { return check_inertia_conjecture(g, spec); });
    push(check_spread_bounds(g, spec)[1]);
    const double tau = default_sign_tol(spec);
    try {
      const IrreducibilityReport rep = check_irreducibility_question(g, tau);
      Verdict b = not_applicable(g, "irreducibility_B", false);
      Verdict c = not_applicable(g, "irreducibility_C", false);
      if (rep.applicable) {
        b.applicable = c.applicable = true;
        b.holds = rep.b_irreducible;
        c.holds = rep.c_irreducible;
        b.lhs = rep.b_irreducible ? 1.0 : 0.0;
        c.lhs = rep.c_irreducible ? 1.0 : 0.0;
        b.rhs = c.rhs = 1.0;
        b.margin = b.lhs - b.rhs;
        c.margin = c.lhs - c.rhs;
      }
      push(std::move(b));
      push(std::move(c));
    } catch (const std::exception&) {
      push(not_applicable(g, "irreducibility_B", false));
      push(not_applicable(g, "irreducibility_C", false));
    }
  }
  return out;
}

bool any_proven_failure(const std::vector<Verdict>& verdicts) {
  for (const Verdict& v : verdicts)
    if (v.applicable && v.proven && !v.holds) return true;
  return false;
}

}  // namespace sqen
