#pragma once

// Numerical experiments: random-graph sweeps over p, almost-all constants at
// p = 1/2, exact per-edge-count averages of square energies over
// non-isomorphic graphs, growth-rate tables for the structured families, and
// CSV/SVG rendering.
//
// Determinism: per-sample seeds come from derive_sample_seed(seed, index, p)
// and aggregation runs in sample-index order, so identical inputs produce
// byte-identical CSV regardless of worker count.  Standard deviations use
// the sample convention (n-1 denominator; 0 when a single sample).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sqen/checks.hpp"
#include "sqen/graph.hpp"

namespace sqen {

struct SweepRow {
  int n = 0;
  double p = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  double mean_s_plus = 0.0, sd_s_plus = 0.0;
  double mean_s_minus = 0.0, sd_s_minus = 0.0;
  double mean_mu1_sq = 0.0, sd_mu1_sq = 0.0;
  double mean_m = 0.0, sd_m = 0.0;
};

std::vector<SweepRow> random_sweep(int n, const std::vector<double>& p_grid,
                                   int samples, std::uint64_t seed,
                                   int threads);

struct AlmostAllStats {
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  // Means over samples of s+/n^2, s-/n^2, mu_1^2/n^2 at p = 1/2; the
  // almost-all asymptotes are 3/8, 1/8, 1/4.
  double s_plus_n2 = 0.0;
  double s_minus_n2 = 0.0;
  double mu1_sq_n2 = 0.0;
};

AlmostAllStats almost_all_check(int n, int samples, std::uint64_t seed,
                                int threads);

struct AverageRow {
  int m = 0;
  long long count = 0;
  double avg_s_plus = 0.0;
  double avg_s_minus = 0.0;
};

struct AverageTable {
  int n = 0;
  long long total = 0;
  int argmax_m_avg_s_minus = 0;
  std::vector<AverageRow> rows;  // ascending m, present edge counts only
};

// Built-in enumeration path, 1 <= n <= 7.
AverageTable average_square_energies(int n, int threads);
// graph6 corpus path (one graph per line; blank lines and a leading
// ">>graph6<<" header are tolerated).  All graphs must share one vertex
// count; parse errors carry 1-based line numbers.
AverageTable average_square_energies(std::istream& graph6_stream, int threads);

struct GrowthRow {
  std::string family;     // "gq", "gq2", "taylor"
  std::string parameter;  // e.g. "q=3" or "q=3,a=1,t=3"
  std::string n;          // exact decimal
  std::string s_plus, s_minus, spread;  // exact decimals
  double ratio = 0.0;       // s-/s+
  double normalized = 0.0;  // family statistic, positive
};

// GQ(q,q^2): normalized = (s-/s+)/n^(1/4).
std::vector<GrowthRow> gq_ratio_study(const std::vector<long>& qs);
// GQ(q^2,q^3): normalized = mu_1^2/s+ (trends to zero).
std::vector<GrowthRow> gq_square_ratio_study(const std::vector<long>& qs);
// Taylor T_q blown up by t = q^a for a = 0..max_a:
// normalized = |spread| / n^(2 - 2/(3+a)).
std::vector<GrowthRow> taylor_spread_study(const std::vector<long>& qs,
                                           int max_a);

// ---- rendering ----

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void write_average_csv(const AverageTable& table, std::ostream& out);
void write_growth_csv(const std::vector<GrowthRow>& rows, std::ostream& out);
void write_verdicts_csv(const std::vector<Verdict>& rows, std::ostream& out);

// File-writing wrappers; throw std::invalid_argument on empty rows and
// std::runtime_error on I/O failure.
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);
void emit_csv(const AverageTable& table, const std::string& path);
void emit_csv(const std::vector<GrowthRow>& rows, const std::string& path);
void emit_csv(const std::vector<Verdict>& rows, const std::string& path);

struct PlotSeries {
  std::string label;
  std::string color;  // SVG color
  std::vector<std::pair<double, double>> points;
};

void emit_svg_plot(const std::vector<PlotSeries>& series,
                   const std::string& title, const std::string& x_label,
                   const std::string& y_label, const std::string& path);

// Average square energies vs p (two series, s+ and s-).
std::vector<PlotSeries> energy_series(const std::vector<SweepRow>& rows);
// Sampled mean s- vs mean m against the three upper bounds 2m-n+1, n^2/4,
// 2m-4m^2/n^2.
std::vector<PlotSeries> bound_series(const std::vector<SweepRow>& rows);

// "%.10g" rendering used by all CSV output.
std::string format_double(double value);

}  // namespace sqen
