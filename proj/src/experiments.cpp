#include "sqen/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "sqen/enumerate.hpp"
#include "sqen/exact_forms.hpp"
#include "sqen/graph6.hpp"
#include "sqen/parallel.hpp"
#include "sqen/random_graphs.hpp"
#include "sqen/spectral.hpp"

namespace sqen {

namespace {

struct SampleStats {
  double s_plus = 0.0, s_minus = 0.0, mu1_sq = 0.0, m = 0.0;
};

SampleStats measure(const Graph& g) {
  const Spectrum spec = eigenvalues_symmetric(g);
  const SquareEnergies e = square_energies(spec, default_sign_tol(spec));
  SampleStats s;
  s.s_plus = e.s_plus;
  s.s_minus = e.s_minus;
  const double mu1 = spec.values.empty() ? 0.0 : spec.values.front();
  s.mu1_sq = mu1 * mu1;
  s.m = g.edge_count();
  return s;
}

struct MeanSd {
  double mean = 0.0, sd = 0.0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
  MeanSd out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double acc = 0.0;
    for (double x : xs) acc += (x - out.mean) * (x - out.mean);
    out.sd = std::sqrt(acc / static_cast<double>(xs.size() - 1));
  }
  return out;
}

std::vector<SampleStats> sample_many(int n, double p, int samples,
                                     std::uint64_t seed, int threads) {
  std::vector<SampleStats> stats(samples);
  parallel_for(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
    const std::uint64_t s = derive_sample_seed(seed, i, p);
    stats[i] = measure(sample_gnp(n, p, s));
  });
  return stats;
}

AverageTable table_from_graphs(int n, const std::vector<Graph>& graphs,
                               int threads) {
  std::vector<SampleStats> stats(graphs.size());
  parallel_for(graphs.size(), threads,
               [&](std::size_t i) { stats[i] = measure(graphs[i]); });
  std::map<int, AverageRow> rows;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    AverageRow& row = rows[graphs[i].edge_count()];
    row.m = graphs[i].edge_count();
    row.count += 1;
    row.avg_s_plus += stats[i].s_plus;
    row.avg_s_minus += stats[i].s_minus;
  }
  AverageTable table;
  table.n = n;
  for (auto& [m, row] : rows) {
    row.avg_s_plus /= static_cast<double>(row.count);
    row.avg_s_minus /= static_cast<double>(row.count);
    table.total += row.count;
    table.rows.push_back(row);
  }
  double best = -1.0;
  for (const AverageRow& row : table.rows)
    if (row.avg_s_minus > best) {
      best = row.avg_s_minus;
      table.argmax_m_avg_s_minus = row.m;
    }
  return table;
}

}  // namespace

std::vector<SweepRow> random_sweep(int n, const std::vector<double>& p_grid,
                                   int samples, std::uint64_t seed,
                                   int threads) {
  if (samples < 1)
    throw std::invalid_argument("random_sweep: samples >= 1 required");
  std::vector<SweepRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    const auto stats = sample_many(n, p, samples, seed, threads);
    std::vector<double> sp, sm, mu, m;
    for (const SampleStats& s : stats) {
      sp.push_back(s.s_plus);
      sm.push_back(s.s_minus);
      mu.push_back(s.mu1_sq);
      m.push_back(s.m);
    }
    SweepRow row;
    row.n = n;
    row.p = p;
    row.samples = samples;
    row.seed = seed;
    const MeanSd a = mean_sd(sp), b = mean_sd(sm), c = mean_sd(mu),
                 d = mean_sd(m);
    row.mean_s_plus = a.mean;
    row.sd_s_plus = a.sd;
    row.mean_s_minus = b.mean;
    row.sd_s_minus = b.sd;
    row.mean_mu1_sq = c.mean;
    row.sd_mu1_sq = c.sd;
    row.mean_m = d.mean;
    row.sd_m = d.sd;
    rows.push_back(row);
  }
  return rows;
}

AlmostAllStats almost_all_check(int n, int samples, std::uint64_t seed,
                                int threads) {
  if (n < 50) throw std::invalid_argument("almost_all_check: n >= 50");
  if (samples < 1) throw std::invalid_argument("almost_all_check: samples >= 1");
  const auto stats = sample_many(n, 0.5, samples, seed, threads);
  AlmostAllStats out;
  out.n = n;
  out.samples = samples;
  out.seed = seed;
  const double n2 = static_cast<double>(n) * n;
  for (const SampleStats& s : stats) {
    out.s_plus_n2 += s.s_plus / n2;
    out.s_minus_n2 += s.s_minus / n2;
    out.mu1_sq_n2 += s.mu1_sq / n2;
  }
  out.s_plus_n2 /= samples;
  out.s_minus_n2 /= samples;
  out.mu1_sq_n2 /= samples;
  return out;
}

AverageTable average_square_energies(int n, int threads) {
  return table_from_graphs(n, enumerate_nonisomorphic(n), threads);
}

AverageTable average_square_energies(std::istream& graph6_stream,
                                     int threads) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  int n = -1;
  while (std::getline(graph6_stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind(">>graph6<<", 0) == 0) {
      line.erase(0, 10);
      if (line.empty()) continue;
    }
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Graph6Error& err) {
      throw Graph6Error("line " + std::to_string(line_no) + ": " + err.what());
    }
    if (n == -1) {
      n = g.vertex_count();
    } else if (g.vertex_count() != n) {
      throw std::invalid_argument(
          "line " + std::to_string(line_no) + ": vertex count " +
          std::to_string(g.vertex_count()) + " differs from " +
          std::to_string(n));
    }
    graphs.push_back(std::move(g));
  }
  if (graphs.empty())
    throw std::invalid_argument("average_square_energies: empty corpus");
  return table_from_graphs(n, graphs, threads);
}

namespace {

GrowthRow growth_row_from(const std::string& family,
                          const std::string& parameter,
                          const RationalSpectrum& spec) {
  const ExactEnergies e = exact_square_energies(spec);
  GrowthRow row;
  row.family = family;
  row.parameter = parameter;
  row.n = spec.total().get_str();
  row.s_plus = e.s_plus.get_str();
  row.s_minus = e.s_minus.get_str();
  row.spread = e.spread.get_str();
  mpq_class ratio(e.s_minus, e.s_plus);
  ratio.canonicalize();
  row.ratio = ratio.get_d();
  return row;
}

}  // namespace

std::vector<GrowthRow> gq_ratio_study(const std::vector<long>& qs) {
  std::vector<GrowthRow> rows;
  for (long q : qs) {
    const SrgSpectrumParams params = gq_spectrum(q, q * q);
    GrowthRow row = growth_row_from("gq", "q=" + std::to_string(q),
                                    params.spectrum());
    row.normalized =
        row.ratio / std::pow(params.n.get_d(), 0.25);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<GrowthRow> gq_square_ratio_study(const std::vector<long>& qs) {
  std::vector<GrowthRow> rows;
  for (long q : qs) {
    const SrgSpectrumParams params = gq_spectrum(q * q, q * q * q);
    GrowthRow row = growth_row_from("gq2", "q=" + std::to_string(q),
                                    params.spectrum());
    const ExactEnergies e = exact_square_energies(params.spectrum());
    mpq_class mu1_sq_over_s_plus(params.k * params.k, e.s_plus);
    mu1_sq_over_s_plus.canonicalize();
    row.normalized = mu1_sq_over_s_plus.get_d();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<GrowthRow> taylor_spread_study(const std::vector<long>& qs,
                                           int max_a) {
  if (max_a < 0) throw std::invalid_argument("taylor_spread_study: max_a >= 0");
  std::vector<GrowthRow> rows;
  for (long q : qs) {
    const RationalSpectrum base = taylor_spectrum(q).spectrum();
    long t = 1;
    for (int a = 0; a <= max_a; ++a) {
      const RationalSpectrum spec = blowup_spectrum(base, t);
      GrowthRow row = growth_row_from(
          "taylor",
          "q=" + std::to_string(q) + ",a=" + std::to_string(a) +
              ",t=" + std::to_string(t),
          spec);
      const double exponent = 2.0 - 2.0 / (3.0 + a);
      const ExactEnergies e = exact_square_energies(spec);
      row.normalized = std::fabs(e.spread.get_d()) /
                       std::pow(spec.total().get_d(), exponent);
      rows.push_back(std::move(row));
      t *= q;
    }
  }
  return rows;
}

// ---- rendering ----

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "n,p,samples,seed,mean_s_plus,sd_s_plus,mean_s_minus,sd_s_minus,"
         "mean_mu1_sq,sd_mu1_sq,mean_m,sd_m,bound_2m_minus_n_plus_1,"
         "bound_n2_over_4,bound_mubsm\n";
  for (const SweepRow& r : rows) {
    const double n = r.n;
    const double hong = 2.0 * r.mean_m - n + 1.0;
    const double quarter = n * n / 4.0;
    const double mubsm = 2.0 * r.mean_m - 4.0 * r.mean_m * r.mean_m / (n * n);
    out << r.n << ',' << format_double(r.p) << ',' << r.samples << ','
        << r.seed << ',' << format_double(r.mean_s_plus) << ','
        << format_double(r.sd_s_plus) << ',' << format_double(r.mean_s_minus)
        << ',' << format_double(r.sd_s_minus) << ','
        << format_double(r.mean_mu1_sq) << ',' << format_double(r.sd_mu1_sq)
        << ',' << format_double(r.mean_m) << ',' << format_double(r.sd_m)
        << ',' << format_double(hong) << ',' << format_double(quarter) << ','
        << format_double(mubsm) << '\n';
  }
}

void write_average_csv(const AverageTable& table, std::ostream& out) {
  out << "n,m,count,avg_s_plus,avg_s_minus\n";
  for (const AverageRow& r : table.rows)
    out << table.n << ',' << r.m << ',' << r.count << ','
        << format_double(r.avg_s_plus) << ',' << format_double(r.avg_s_minus)
        << '\n';
}

void write_growth_csv(const std::vector<GrowthRow>& rows, std::ostream& out) {
  out << "family,parameter,n,s_plus,s_minus,spread,ratio,normalized\n";
  for (const GrowthRow& r : rows)
    out << r.family << ',' << r.parameter << ',' << r.n << ',' << r.s_plus
        << ',' << r.s_minus << ',' << r.spread << ','
        << format_double(r.ratio) << ',' << format_double(r.normalized)
        << '\n';
}

void write_verdicts_csv(const std::vector<Verdict>& rows, std::ostream& out) {
  out << "graphId,checkName,applicable,holds,lhs,rhs,margin\n";
  for (const Verdict& v : rows) {
    out << v.graph_id << ',' << v.check << ',' << (v.applicable ? 1 : 0)
        << ',';
    if (v.applicable)
      out << (v.holds ? 1 : 0) << ',' << format_double(v.lhs) << ','
          << format_double(v.rhs) << ',' << format_double(v.margin);
    else
      out << ",,,";
    out << '\n';
  }
}

namespace {

template <class Rows>
void emit_csv_impl(const Rows& rows, const std::string& path,
                   void (*writer)(const Rows&, std::ostream&)) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("emit_csv: cannot open " + path);
  writer(rows, out);
  out.flush();
  if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: empty rows");
  emit_csv_impl(rows, path, write_sweep_csv);
}

void emit_csv(const AverageTable& table, const std::string& path) {
  if (table.rows.empty()) throw std::invalid_argument("emit_csv: empty rows");
  emit_csv_impl(table, path, write_average_csv);
}

void emit_csv(const std::vector<GrowthRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: empty rows");
  emit_csv_impl(rows, path, write_growth_csv);
}

void emit_csv(const std::vector<Verdict>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: empty rows");
  emit_csv_impl(rows, path, write_verdicts_csv);
}

std::vector<PlotSeries> energy_series(const std::vector<SweepRow>& rows) {
  PlotSeries plus{"mean s+", "#1f77b4", {}};
  PlotSeries minus{"mean s-", "#d62728", {}};
  for (const SweepRow& r : rows) {
    plus.points.emplace_back(r.p, r.mean_s_plus);
    minus.points.emplace_back(r.p, r.mean_s_minus);
  }
  return {plus, minus};
}

std::vector<PlotSeries> bound_series(const std::vector<SweepRow>& rows) {
  PlotSeries sampled{"sampled mean s-", "#d62728", {}};
  PlotSeries hong{"2m-n+1", "#1f77b4", {}};
  PlotSeries quarter{"n^2/4", "#2ca02c", {}};
  PlotSeries mubsm{"2m-4m^2/n^2", "#9467bd", {}};
  for (const SweepRow& r : rows) {
    const double n = r.n;
    const double m = r.mean_m;
    sampled.points.emplace_back(m, r.mean_s_minus);
    hong.points.emplace_back(m, 2.0 * m - n + 1.0);
    quarter.points.emplace_back(m, n * n / 4.0);
    mubsm.points.emplace_back(m, 2.0 * m - 4.0 * m * m / (n * n));
  }
  return {sampled, hong, quarter, mubsm};
}

namespace {

double nice_tick(double span) {
  if (span <= 0) return 1.0;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step = 10.0;
  if (norm <= 1.0)
    step = 1.0;
  else if (norm <= 2.0)
    step = 2.0;
  else if (norm <= 5.0)
    step = 5.0;
  return step * mag;
}

}  // namespace

void emit_svg_plot(const std::vector<PlotSeries>& series,
                   const std::string& title, const std::string& x_label,
                   const std::string& y_label, const std::string& path) {
  if (series.empty()) throw std::invalid_argument("emit_svg_plot: empty series");
  bool any_points = false;
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  for (const PlotSeries& s : series)
    for (auto [x, y] : s.points) {
      if (!any_points) {
        x_min = x_max = x;
        y_min = y_max = y;
        any_points = true;
      }
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  if (!any_points) throw std::invalid_argument("emit_svg_plot: empty rows");
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;

  const double width = 900, height = 560;
  const double left = 80, right = 880, top = 50, bottom = 510;
  auto sx = [&](double x) {
    return left + (x - x_min) / (x_max - x_min) * (right - left);
  };
  auto sy = [&](double y) {
    return bottom - (y - y_min) / (y_max - y_min) * (bottom - top);
  };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_svg_plot: cannot open " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";

  // Axes with ticks and labels.
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  const double xt = nice_tick(x_max - x_min);
  for (double x = std::ceil(x_min / xt) * xt; x <= x_max + 1e-9 * xt; x += xt) {
    out << "<line x1=\"" << sx(x) << "\" y1=\"" << bottom << "\" x2=\""
        << sx(x) << "\" y2=\"" << bottom + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << sx(x) << "\" y=\"" << bottom + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << format_double(x) << "</text>\n";
  }
  const double yt = nice_tick(y_max - y_min);
  for (double y = std::ceil(y_min / yt) * yt; y <= y_max + 1e-9 * yt; y += yt) {
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << sy(y) << "\" x2=\""
        << left << "\" y2=\"" << sy(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << sy(y) + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << format_double(y) << "</text>\n";
  }
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << height - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << x_label << "</text>\n";
  out << "<text x=\"20\" y=\"" << (top + bottom) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 20 "
      << (top + bottom) / 2 << ")\">" << y_label << "</text>\n";

  // Series polylines plus a legend block.
  double legend_y = top + 10;
  for (const PlotSeries& s : series) {
    if (!s.points.empty()) {
      out << "<polyline fill=\"none\" stroke=\"" << s.color
          << "\" stroke-width=\"2\" points=\"";
      for (auto [x, y] : s.points) out << sx(x) << ',' << sy(y) << ' ';
      out << "\"/>\n";
      for (auto [x, y] : s.points)
        out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y)
            << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
    }
    out << "<line x1=\"" << right - 170 << "\" y1=\"" << legend_y
        << "\" x2=\"" << right - 140 << "\" y2=\"" << legend_y
        << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << right - 134 << "\" y=\"" << legend_y + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
        << "</text>\n";
    legend_y += 18;
  }
  out << "</svg>\n";
  out.flush();
  if (!out)
    throw std::runtime_error("emit_svg_plot: write failed for " + path);
}

}  // namespace sqen
