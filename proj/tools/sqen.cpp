// sqen: spectral square-energy workbench.
//
// Subcommands: construct, energy, check, kneser, families, sweep, average,
// corpus, resolve.  Exit codes: 0 success (including conjecture findings),
// 1 usage or input error, 2 when a proven-theorem verdict fails (an
// implementation bug, never expected).
//
// Determinism: identical invocations produce byte-identical output files.
// --format json carries the same data as the CSV tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sqen/checks.hpp"
#include "sqen/enumerate.hpp"
#include "sqen/exact_forms.hpp"
#include "sqen/experiments.hpp"
#include "sqen/graph.hpp"
#include "sqen/graph6.hpp"
#include "sqen/parallel.hpp"
#include "sqen/random_graphs.hpp"
#include "sqen/spectral.hpp"

using nlohmann::json;
using namespace sqen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitProvenFailure = 2;

struct GlobalOpts {
  std::uint64_t seed = 1;
  std::optional<double> tol;  // absolute sign tolerance tau
  int threads = 0;            // 0 = hardware concurrency
  std::string out;            // empty = stdout
  std::string format = "csv";
};

int effective_threads(const GlobalOpts& g) {
  if (g.threads > 0) return g.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Sign tolerance: --tol flag beats the SQEN_TOL environment variable beats
// the default 1e-8 * spectrum scale.
double sign_tol(const GlobalOpts& g, const Spectrum& spec) {
  if (g.tol) return *g.tol;
  if (const char* env = std::getenv("SQEN_TOL")) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(env, &pos);
      if (pos == std::string(env).size() && v >= 0.0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("SQEN_TOL is not a valid "
                                            "nonnegative number: ") +
                                env);
  }
  return default_sign_tol(spec);
}

// Writes content to --out (or stdout when empty) in one shot so identical
// invocations yield byte-identical files.
void write_output(const GlobalOpts& g, const std::string& content) {
  if (g.out.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(g.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + g.out);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + g.out);
}

std::string json_dump(const json& j) { return j.dump(2) + "\n"; }

// Reads a graph6 corpus: one graph per line, blank lines skipped, an
// optional ">>graph6<<" header tolerated.  Errors carry 1-based line
// numbers.
std::vector<Graph> read_corpus(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind(">>graph6<<", 0) == 0) {
      line.erase(0, 10);
      if (line.empty()) continue;
    }
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& err) {
      throw Graph6Error("line " + std::to_string(line_no) + ": " +
                        err.what());
    }
  }
  return graphs;
}

std::vector<Graph> read_corpus_path(const std::string& path) {
  if (path == "-") return read_corpus(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return read_corpus(in);
}

Suite parse_suite(const std::string& name) {
  if (name == "proven") return Suite::proven;
  if (name == "conjectures") return Suite::conjectures;
  if (name == "all") return Suite::all;
  throw CLI::ValidationError("--suite", "expected all|proven|conjectures");
}

// "start:end:step" -> inclusive grid.
std::vector<double> parse_p_grid(const std::string& text) {
  double start = 0, end = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> start >> c1 >> end >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof())
    throw CLI::ValidationError("--p-grid", "expected start:end:step");
  if (step <= 0 || end < start)
    throw CLI::ValidationError("--p-grid", "need step > 0 and end >= start");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double p = start + i * step;
    if (p > end + step * 1e-9) break;
    grid.push_back(std::min(p, end));
  }
  return grid;
}

json verdicts_json(const std::vector<Verdict>& verdicts) {
  json rows = json::array();
  for (const Verdict& v : verdicts) {
    json row;
    row["graphId"] = v.graph_id;
    row["checkName"] = v.check;
    row["applicable"] = v.applicable;
    if (v.applicable) {
      row["holds"] = v.holds;
      row["lhs"] = v.lhs;
      row["rhs"] = v.rhs;
      row["margin"] = v.margin;
    } else {
      row["holds"] = nullptr;
      row["lhs"] = nullptr;
      row["rhs"] = nullptr;
      row["margin"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Runs suites over a corpus with worker parallelism; verdict order is by
// input index, independent of thread count.
std::vector<Verdict> run_corpus_suites(const std::vector<Graph>& graphs,
                                       Suite suite, int threads) {
  std::vector<std::vector<Verdict>> per_graph(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    per_graph[i] = run_suite(graphs[i], suite);
  });
  std::vector<Verdict> all;
  for (auto& vs : per_graph)
    for (auto& v : vs) all.push_back(std::move(v));
  return all;
}

// ---- construct ----

struct ConstructOpts {
  std::string family;
  int n = 0, k = 0, a = 0, b = 0, t = 1, copies = 2, flips = 0;
  double p = 0.5;
  std::string graph6;  // base graph for blowup/disjoint/complement
};

Graph build_graph(const ConstructOpts& c, std::uint64_t seed) {
  auto base = [&]() -> Graph {
    if (c.graph6.empty())
      throw std::invalid_argument("--graph6 base graph required for family " +
                                  c.family);
    return parse_graph6(c.graph6);
  };
  if (c.family == "complete") return make_complete(c.n);
  if (c.family == "complete-bipartite")
    return make_complete_bipartite(c.a, c.b);
  if (c.family == "cycle") return make_cycle(c.n);
  if (c.family == "path") return make_path(c.n);
  if (c.family == "star") return make_star(c.n);
  if (c.family == "kneser") return make_kneser(c.n, c.k);
  if (c.family == "gnp") return sample_gnp(c.n, c.p, seed);
  if (c.family == "planar")
    return generate_maximal_planar(c.n, seed,
                                   c.flips > 0 ? c.flips : 3 * c.n);
  if (c.family == "blowup") return blowup(base(), c.t);
  if (c.family == "disjoint") return disjoint_copies(base(), c.copies);
  if (c.family == "complement") return complement(base());
  throw std::invalid_argument("unknown --family: " + c.family);
}

int cmd_construct(const GlobalOpts& g, const ConstructOpts& c) {
  const Graph graph = build_graph(c, g.seed);
  const std::string line = encode_graph6(graph);
  if (g.format == "json") {
    json j;
    j["family"] = c.family;
    j["n"] = graph.vertex_count();
    j["m"] = graph.edge_count();
    j["graph6"] = line;
    write_output(g, json_dump(j));
  } else {
    write_output(g, line + "\n");
  }
  return kExitOk;
}

// ---- energy ----

int cmd_energy(const GlobalOpts& g, const std::string& graph6_line) {
  const Graph graph = parse_graph6(graph6_line);
  const Spectrum spec = eigenvalues_symmetric(graph);
  const double tau = sign_tol(g, spec);
  const SquareEnergies e = square_energies(spec, tau);
  const Inertia in = inertia(spec, tau);
  const double mu1 = spec.values.empty() ? 0.0 : spec.values.front();
  if (g.format == "json") {
    json j;
    j["n"] = graph.vertex_count();
    j["m"] = graph.edge_count();
    j["mu1"] = mu1;
    j["nPlus"] = in.n_plus;
    j["nZero"] = in.n_zero;
    j["nMinus"] = in.n_minus;
    j["sPlus"] = e.s_plus;
    j["sMinus"] = e.s_minus;
    j["ratioMax"] = e.ratio_max;
    j["spread"] = e.spread;
    write_output(g, json_dump(j));
    return kExitOk;
  }
  std::ostringstream out;
  out << "n,m,mu1,nPlus,nZero,nMinus,sPlus,sMinus,ratioMax,spread\n"
      << graph.vertex_count() << ',' << graph.edge_count() << ','
      << format_double(mu1) << ',' << in.n_plus << ',' << in.n_zero << ','
      << in.n_minus << ',' << format_double(e.s_plus) << ','
      << format_double(e.s_minus) << ',' << format_double(e.ratio_max) << ','
      << format_double(e.spread) << '\n';
  write_output(g, out.str());
  return kExitOk;
}

// ---- check / corpus ----

int cmd_check(const GlobalOpts& g, const std::string& input,
              const std::string& suite_name, bool print_summary) {
  const Suite suite = parse_suite(suite_name);
  const std::vector<Graph> graphs = read_corpus_path(input);
  const std::vector<Verdict> verdicts =
      run_corpus_suites(graphs, suite, effective_threads(g));
  if (g.format == "json") {
    write_output(g, json_dump(verdicts_json(verdicts)));
  } else {
    std::ostringstream out;
    write_verdicts_csv(verdicts, out);
    write_output(g, out.str());
  }
  long long applicable = 0, failures = 0, proven_failures = 0;
  for (const Verdict& v : verdicts) {
    if (!v.applicable) continue;
    ++applicable;
    if (!v.holds) {
      ++failures;
      if (v.proven) ++proven_failures;
    }
  }
  if (print_summary)
    std::cerr << "graphs=" << graphs.size() << " verdicts=" << verdicts.size()
              << " applicable=" << applicable << " failures=" << failures
              << " provenFailures=" << proven_failures << "\n";
  return proven_failures > 0 ? kExitProvenFailure : kExitOk;
}

// ---- kneser / families ----

void append_spectrum_rows(std::ostringstream& out,
                          const RationalSpectrum& spec) {
  for (const auto& [value, mult] : spec.pairs)
    out << "eigenvalue," << value.get_str() << ',' << mult.get_str() << '\n';
}

json spectrum_json(const RationalSpectrum& spec) {
  json rows = json::array();
  for (const auto& [value, mult] : spec.pairs)
    rows.push_back({{"eigenvalue", value.get_str()},
                    {"multiplicity", mult.get_str()}});
  return rows;
}

void append_energy_rows(std::ostringstream& out, const ExactEnergies& e) {
  out << "sPlus," << e.s_plus.get_str() << ",\n"
      << "sMinus," << e.s_minus.get_str() << ",\n"
      << "spread," << e.spread.get_str() << ",\n"
      << "twoM," << e.two_m.get_str() << ",\n";
}

void energies_json(json& j, const ExactEnergies& e) {
  j["sPlus"] = e.s_plus.get_str();
  j["sMinus"] = e.s_minus.get_str();
  j["spread"] = e.spread.get_str();
  j["twoM"] = e.two_m.get_str();
}

int cmd_kneser(const GlobalOpts& g, long n, long k) {
  const RationalSpectrum spec = kneser_spectrum(n, k);
  const ExactEnergies e = exact_square_energies(spec);
  // Inertia from the exact spectrum's sign counts (the published closed
  // form swaps n+ and n- when k is odd, so it is not used here).
  ExactInertia in;
  for (const auto& [value, mult] : spec.pairs) {
    if (value > 0) in.n_plus += mult;
    else if (value < 0) in.n_minus += mult;
    else in.n_zero += mult;
  }
  if (g.format == "json") {
    json j;
    j["n"] = n;
    j["k"] = k;
    j["vertices"] = spec.total().get_str();
    j["spectrum"] = spectrum_json(spec);
    energies_json(j, e);
    j["nPlus"] = in.n_plus.get_str();
    j["nZero"] = in.n_zero.get_str();
    j["nMinus"] = in.n_minus.get_str();
    write_output(g, json_dump(j));
    return kExitOk;
  }
  std::ostringstream out;
  out << "quantity,value,multiplicity\n";
  out << "vertices," << spec.total().get_str() << ",\n";
  append_spectrum_rows(out, spec);
  append_energy_rows(out, e);
  out << "nPlus," << in.n_plus.get_str() << ",\n"
      << "nZero," << in.n_zero.get_str() << ",\n"
      << "nMinus," << in.n_minus.get_str() << ",\n";
  write_output(g, out.str());
  return kExitOk;
}

struct FamiliesOpts {
  std::string family;  // gq | taylor
  long param = 0;
  long blowup_t = 1;
  std::string study;  // gq-ratio | gq-square | taylor-spread
  std::string qs;     // comma-separated override for study grids
  int max_a = 2;
};

std::vector<long> parse_qs(const std::string& text,
                           const std::vector<long>& fallback) {
  if (text.empty()) return fallback;
  std::vector<long> qs;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t pos = 0;
      const long q = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      qs.push_back(q);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--qs", "expected comma-separated integers");
    }
  }
  if (qs.empty())
    throw CLI::ValidationError("--qs", "expected comma-separated integers");
  return qs;
}

int cmd_families(const GlobalOpts& g, const FamiliesOpts& f) {
  if (!f.study.empty()) {
    std::vector<GrowthRow> rows;
    if (f.study == "gq-ratio")
      rows = gq_ratio_study(parse_qs(f.qs, {2, 3, 4, 5, 7, 8, 9, 11, 13}));
    else if (f.study == "gq-square")
      rows = gq_square_ratio_study(parse_qs(f.qs, {2, 3, 4, 5, 7, 8, 9, 11, 13}));
    else if (f.study == "taylor-spread")
      rows = taylor_spread_study(parse_qs(f.qs, {3, 5, 7, 9, 11}), f.max_a);
    else
      throw CLI::ValidationError("--study",
                                 "expected gq-ratio|gq-square|taylor-spread");
    if (g.format == "json") {
      json out = json::array();
      for (const GrowthRow& r : rows)
        out.push_back({{"family", r.family},
                       {"parameter", r.parameter},
                       {"n", r.n},
                       {"sPlus", r.s_plus},
                       {"sMinus", r.s_minus},
                       {"spread", r.spread},
                       {"ratio", r.ratio},
                       {"normalized", r.normalized}});
      write_output(g, json_dump(out));
    } else {
      std::ostringstream out;
      write_growth_csv(rows, out);
      write_output(g, out.str());
    }
    return kExitOk;
  }

  if (f.family.empty())
    throw CLI::ValidationError("families", "need --family or --study");
  SrgSpectrumParams params;
  if (f.family == "gq")
    params = gq_spectrum(f.param, f.param * f.param);
  else if (f.family == "taylor")
    params = taylor_spectrum(f.param);
  else
    throw CLI::ValidationError("--family", "expected gq|taylor");
  RationalSpectrum spec = params.spectrum();
  if (f.blowup_t > 1) spec = blowup_spectrum(spec, f.blowup_t);
  const ExactEnergies e = exact_square_energies(spec);
  if (g.format == "json") {
    json j;
    j["family"] = f.family;
    j["param"] = f.param;
    j["blowup"] = f.blowup_t;
    j["vertices"] = spec.total().get_str();
    j["spectrum"] = spectrum_json(spec);
    energies_json(j, e);
    write_output(g, json_dump(j));
    return kExitOk;
  }
  std::ostringstream out;
  out << "quantity,value,multiplicity\n";
  out << "vertices," << spec.total().get_str() << ",\n";
  append_spectrum_rows(out, spec);
  append_energy_rows(out, e);
  write_output(g, out.str());
  return kExitOk;
}

// ---- sweep / average ----

int cmd_sweep(const GlobalOpts& g, int n, const std::string& p_grid_text,
              int samples, const std::string& svg_path) {
  const std::vector<double> grid = parse_p_grid(p_grid_text);
  const std::vector<SweepRow> rows =
      random_sweep(n, grid, samples, g.seed, effective_threads(g));
  if (g.format == "json") {
    json out = json::array();
    for (const SweepRow& r : rows)
      out.push_back({{"n", r.n},
                     {"p", r.p},
                     {"samples", r.samples},
                     {"seed", r.seed},
                     {"meanSPlus", r.mean_s_plus},
                     {"sdSPlus", r.sd_s_plus},
                     {"meanSMinus", r.mean_s_minus},
                     {"sdSMinus", r.sd_s_minus},
                     {"meanMu1Sq", r.mean_mu1_sq},
                     {"sdMu1Sq", r.sd_mu1_sq},
                     {"meanM", r.mean_m},
                     {"sdM", r.sd_m}});
    write_output(g, json_dump(out));
  } else {
    std::ostringstream out;
    write_sweep_csv(rows, out);
    write_output(g, out.str());
  }
  if (!svg_path.empty())
    emit_svg_plot(energy_series(rows),
                  "Mean square energies, G(" + std::to_string(n) + ", p)",
                  "p", "mean square energy", svg_path);
  return kExitOk;
}

int cmd_average(const GlobalOpts& g, int n, const std::string& corpus_path) {
  AverageTable table;
  if (!corpus_path.empty()) {
    std::ifstream in(corpus_path);
    if (!in)
      throw std::runtime_error("cannot open input file: " + corpus_path);
    table = average_square_energies(in, effective_threads(g));
  } else {
    table = average_square_energies(n, effective_threads(g));
  }
  if (g.format == "json") {
    json j;
    j["n"] = table.n;
    j["total"] = table.total;
    j["argmaxMAvgSMinus"] = table.argmax_m_avg_s_minus;
    json rows = json::array();
    for (const AverageRow& r : table.rows)
      rows.push_back({{"m", r.m},
                      {"count", r.count},
                      {"avgSPlus", r.avg_s_plus},
                      {"avgSMinus", r.avg_s_minus}});
    j["rows"] = std::move(rows);
    write_output(g, json_dump(j));
  } else {
    std::ostringstream out;
    write_average_csv(table, out);
    write_output(g, out.str());
  }
  std::cerr << "graphs=" << table.total
            << " argmax_m_avg_s_minus=" << table.argmax_m_avg_s_minus << "\n";
  return kExitOk;
}

// ---- resolve ----

int cmd_resolve(const GlobalOpts& g, const std::string& graph6_line) {
  const Graph graph = parse_graph6(graph6_line);
  const Spectrum spec = eigenvalues_symmetric(graph);
  const double tau = sign_tol(g, spec);
  const ResolutionPair res = spectral_resolution(graph, tau);
  const int n = graph.vertex_count();
  const bool b_irr = support_irreducible(res.b, tau);
  const bool c_irr = support_irreducible(res.c, tau);
  if (g.format == "json") {
    json j;
    j["n"] = n;
    j["graph6"] = encode_graph6(graph);
    json bm = json::array(), cm = json::array();
    for (int i = 0; i < n; ++i) {
      json br = json::array(), cr = json::array();
      for (int k = 0; k < n; ++k) {
        br.push_back(res.b(i, k));
        cr.push_back(res.c(i, k));
      }
      bm.push_back(std::move(br));
      cm.push_back(std::move(cr));
    }
    j["b"] = std::move(bm);
    j["c"] = std::move(cm);
    j["bIrreducible"] = b_irr;
    j["cIrreducible"] = c_irr;
    write_output(g, json_dump(j));
    return kExitOk;
  }
  std::ostringstream out;
  out << "record,row,col,value\n";
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      out << "B," << i << ',' << k << ',' << format_double(res.b(i, k))
          << '\n';
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      out << "C," << i << ',' << k << ',' << format_double(res.c(i, k))
          << '\n';
  out << "irreducible,B,," << (b_irr ? 1 : 0) << '\n';
  out << "irreducible,C,," << (c_irr ? 1 : 0) << '\n';
  write_output(g, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sqen: square energies s+ and s- of graph adjacency spectra"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "PRNG seed for randomized subcommands")
      ->capture_default_str();
  double tol_value = 0.0;
  auto* tol_opt = app.add_option(
      "--tol", tol_value,
      "absolute eigenvalue sign tolerance tau (default 1e-8 * spectrum "
      "scale; SQEN_TOL env var overrides the default)");
  app.add_option("--threads", g.threads,
                 "worker thread cap (0 = all hardware threads)")
      ->capture_default_str();
  app.add_option("--out", g.out, "output file (default: stdout)");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // construct
  auto* construct = app.add_subcommand(
      "construct", "build a graph and print its graph6 encoding");
  ConstructOpts con;
  construct
      ->add_option("--family", con.family,
                   "complete|complete-bipartite|cycle|path|star|kneser|gnp|"
                   "planar|blowup|disjoint|complement")
      ->required();
  construct->add_option("--n", con.n, "vertex count / Kneser ground-set size");
  construct->add_option("--k", con.k, "Kneser subset size");
  construct->add_option("--a", con.a, "bipartite side a");
  construct->add_option("--b", con.b, "bipartite side b");
  construct->add_option("--p", con.p, "G(n,p) edge probability");
  construct->add_option("--t", con.t, "blowup factor");
  construct->add_option("--copies", con.copies, "disjoint copy count");
  construct->add_option("--flips", con.flips,
                        "diagonal flips for planar (default 3n)");
  construct->add_option("--graph6", con.graph6,
                        "base graph for blowup/disjoint/complement");

  // energy
  auto* energy = app.add_subcommand(
      "energy", "n, m, mu1, inertia, s+, s-, ratio, spread of one graph");
  std::string energy_g6;
  energy->add_option("graph6", energy_g6, "graph6 line")->required();

  // check
  auto* check = app.add_subcommand(
      "check", "run verdict suite over a graph6 stream (file or '-')");
  std::string check_input = "-";
  std::string check_suite = "all";
  check->add_option("--input", check_input, "graph6 file or '-' for stdin")
      ->capture_default_str();
  check->add_option("--suite", check_suite, "all|proven|conjectures")
      ->capture_default_str();

  // kneser
  auto* kneser = app.add_subcommand(
      "kneser", "exact Kneser spectrum, energies, and inertia");
  long kn_n = 0, kn_k = 0;
  kneser->add_option("--n", kn_n, "ground-set size")->required();
  kneser->add_option("--k", kn_k, "subset size")->required();

  // families
  auto* families = app.add_subcommand(
      "families", "exact structured-family spectra and growth studies");
  FamiliesOpts fam;
  families->add_option("--family", fam.family, "gq|taylor");
  families->add_option("--param", fam.param,
                       "family parameter q (gq uses order (q, q^2))");
  families->add_option("--blowup", fam.blowup_t, "blowup factor t >= 1")
      ->capture_default_str();
  families->add_option("--study", fam.study,
                       "gq-ratio|gq-square|taylor-spread");
  families->add_option("--qs", fam.qs,
                       "comma-separated q grid override for --study");
  families->add_option("--max-a", fam.max_a,
                       "taylor-spread blowup exponent bound (t = q^a)")
      ->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "random-graph sweep of mean square energies over p");
  int sw_n = 100, sw_samples = 20;
  std::string sw_grid = "0:1:0.1", sw_svg;
  sweep->add_option("--n", sw_n, "vertex count")->capture_default_str();
  sweep->add_option("--p-grid", sw_grid, "start:end:step inclusive grid")
      ->capture_default_str();
  sweep->add_option("--samples", sw_samples, "samples per grid point")
      ->capture_default_str();
  sweep->add_option("--svg", sw_svg, "also write an SVG plot to this path");

  // average
  auto* average = app.add_subcommand(
      "average", "average square energies per edge count");
  int av_n = 0;
  std::string av_corpus;
  auto* av_n_opt =
      average->add_option("--n", av_n, "built-in enumeration, 1 <= n <= 7");
  auto* av_c_opt =
      average->add_option("--graph6", av_corpus, "graph6 corpus file");
  av_n_opt->excludes(av_c_opt);

  // corpus
  auto* corpus = app.add_subcommand(
      "corpus", "batch verdict suite over a graph6 corpus file");
  std::string corpus_input, corpus_suite = "proven";
  corpus->add_option("--input", corpus_input, "graph6 corpus file")
      ->required();
  corpus->add_option("--suite", corpus_suite, "all|proven|conjectures")
      ->capture_default_str();

  // resolve
  auto* resolve = app.add_subcommand(
      "resolve", "spectral resolution A = B - C and irreducibility report");
  std::string resolve_g6;
  resolve->add_option("graph6", resolve_g6, "graph6 line")->required();

  // Allow the global options (--seed, --out, ...) after a subcommand name.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message to stderr
    return kExitUsage;
  }
  if (tol_opt->count() > 0) {
    if (tol_value < 0.0) {
      std::cerr << "error: --tol must be nonnegative\n";
      return kExitUsage;
    }
    g.tol = tol_value;
  }

  try {
    if (*construct) return cmd_construct(g, con);
    if (*energy) return cmd_energy(g, energy_g6);
    if (*check) return cmd_check(g, check_input, check_suite, false);
    if (*kneser) return cmd_kneser(g, kn_n, kn_k);
    if (*families) return cmd_families(g, fam);
    if (*sweep) return cmd_sweep(g, sw_n, sw_grid, sw_samples, sw_svg);
    if (*average) {
      if (av_n_opt->count() == 0 && av_c_opt->count() == 0)
        throw CLI::ValidationError("average", "need --n or --graph6");
      return cmd_average(g, av_n, av_corpus);
    }
    if (*corpus) return cmd_check(g, corpus_input, corpus_suite, true);
    if (*resolve) return cmd_resolve(g, resolve_g6);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
