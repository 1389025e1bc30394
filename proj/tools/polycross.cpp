#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "polycross/bootstrap.hpp"
#include "polycross/dataset.hpp"
#include "polycross/error.hpp"
#include "polycross/instances.hpp"
#include "polycross/oracle.hpp"
#include "polycross/polyline.hpp"
#include "polycross/report.hpp"
#include "polycross/solver.hpp"
#include "polycross/svg.hpp"

namespace {

using namespace polycross;

Dataset load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_csv(text, "stdin");
  }
  return read_csv(path);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_text_file(path, content);
  }
}

std::vector<Point> points_of(const Polyline& poly, const Simplification& q) {
  std::vector<Point> out;
  for (std::size_t k : q.indices) out.push_back(poly[k]);
  return out;
}

std::string summary_text(const RunReport& r) {
  std::ostringstream os;
  os << "points: " << r.points << " (" << to_string(r.kind) << (r.reversed ? ", reversed" : "")
     << ")\n"
     << "chi: " << r.result.chi << "\n"
     << "size: " << r.result.size() << "\n"
     << "end label: " << static_cast<int>(r.result.end_label) << "\n"
     << "indices:";
  for (std::size_t k : r.source_indices) os << ' ' << k;
  os << "\n";
  return os.str();
}

struct SimplifyArgs {
  std::string input;
  std::string mode = "auto";
  std::size_t max_span = 0;
  bool json = false;
  bool csv = false;
  std::string svg;
};

int run_simplify(const SimplifyArgs& a) {
  const Dataset data = load(a.input);
  const Polyline poly = prepare_polyline(data.rows);
  SolverConfig cfg;
  cfg.mode = a.mode == "monotone" ? SolverMode::Monotone
             : a.mode == "simple" ? SolverMode::Simple
                                  : SolverMode::Auto;
  if (a.max_span != 0) cfg.max_span = a.max_span;

  const auto t0 = std::chrono::steady_clock::now();
  const Simplification q = simplify(poly, cfg);
  const auto t1 = std::chrono::steady_clock::now();

  RunReport r = make_report(poly, q, cfg, data.provenance, data.rows.size());
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (a.json) {
    std::cout << write_report(r, ReportFormat::Json);
  } else if (a.csv) {
    std::cout << write_report(r, ReportFormat::Csv);
  } else {
    std::cout << summary_text(r);
  }
  if (!a.svg.empty()) write_text_file(a.svg, render_svg(poly.points(), points_of(poly, q)));
  return 0;
}

struct BootstrapArgs {
  std::string input;
  std::size_t iterations = 90;
  std::uint64_t seed = 0;
  std::vector<double> percentiles{5.0, 95.0};
  std::size_t threads = 1;
  bool json = false;
  std::string output;
  std::string svg;
};

int run_bootstrap(const BootstrapArgs& a) {
  const Dataset data = load(a.input);
  BootstrapConfig cfg;
  cfg.iterations = a.iterations;
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  cfg.lower_percentile = a.percentiles.at(0);
  cfg.upper_percentile = a.percentiles.at(1);
  const BootstrapSummary s = bootstrap_ensemble(data.rows, cfg);
  emit(a.output, write_bootstrap(s, a.json ? ReportFormat::Json : ReportFormat::Csv));
  if (!a.svg.empty()) {
    const Polyline poly = prepare_polyline(data.rows);
    const Envelope env{s.x, s.median_curve, s.lower_curve, s.upper_curve};
    write_text_file(a.svg, render_svg(data.rows, points_of(poly, s.base), env));
  }
  return 0;
}

struct GenArgs {
  std::string signal = "parabola-sine";
  std::size_t n = 101;
  std::string noise = "none";
  std::uint64_t seed = 0;
  std::string output;
};

int run_gen(const GenArgs& a) {
  const NoiseModel model = a.noise == "normal" ? NoiseModel::Normal
                           : a.noise == "heavy" ? NoiseModel::HeavyTailed
                                                : NoiseModel::None;
  const Dataset d = add_noise(gen_signal(a.n), model, a.seed);
  emit(a.output, "# " + d.provenance + "\n" + format_csv(d));
  return 0;
}

struct OracleArgs {
  std::string input;
  std::size_t cap = oracle::kDefaultBruteForceCap;
  bool json = false;
};

int run_oracle(const OracleArgs& a) {
  const Dataset data = load(a.input);
  const Polyline poly = prepare_polyline(data.rows);
  const Simplification q = oracle::bruteforce_optimal(poly, a.cap);
  const RunReport r = make_report(poly, q, SolverConfig{}, data.provenance, data.rows.size());
  std::cout << (a.json ? write_report(r, ReportFormat::Json) : summary_text(r));
  return 0;
}

struct BenchArgs {
  std::string mode = "monotone";
  std::size_t start = 250;
  std::size_t steps = 4;
  std::uint64_t seed = 1;
  std::size_t repeats = 1;
};

int run_bench(const BenchArgs& a) {
  const bool monotone = a.mode == "monotone";
  std::printf("%8s %12s %8s\n", "n", "seconds", "ratio");
  double previous = 0.0;
  std::size_t n = a.start;
  for (std::size_t step = 0; step < a.steps; ++step, n *= 2) {
    RandomStream rng(a.seed, n);
    const auto raw = monotone ? instances::noisy_signal(n, rng) : instances::spiral(n, rng);
    const Polyline poly = prepare_polyline(raw);
    SolverConfig cfg;
    cfg.mode = monotone ? SolverMode::Monotone : SolverMode::Simple;
    double best = 0.0;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(1, a.repeats); ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      (void)simplify(poly, cfg);
      const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (rep == 0 || sec < best) best = sec;
    }
    if (previous > 0.0) {
      std::printf("%8zu %12.4f %8.2f\n", n, best, best / previous);
    } else {
      std::printf("%8zu %12.4f %8s\n", n, best, "-");
    }
    previous = best;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossing-maximal polyline simplification and smooth bootstrap"};
  app.require_subcommand(1);

  SimplifyArgs sa;
  auto* simplify_cmd = app.add_subcommand("simplify", "Simplify a polyline read from CSV");
  simplify_cmd->add_option("--input,-i", sa.input, "CSV file of x,y rows, or - for stdin")->required();
  simplify_cmd->add_option("--mode", sa.mode, "Batch engine")
      ->check(CLI::IsMember({"auto", "monotone", "simple"}));
  simplify_cmd->add_option("--max-span", sa.max_span, "Largest index gap plus one (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  simplify_cmd->add_flag("--json", sa.json, "Print a JSON report");
  simplify_cmd->add_flag("--csv", sa.csv, "Print the simplified points as CSV");
  simplify_cmd->add_option("--svg", sa.svg, "Write an SVG plot");

  BootstrapArgs ba;
  auto* bootstrap_cmd = app.add_subcommand("bootstrap", "Median and percentile envelopes");
  bootstrap_cmd->add_option("--input,-i", ba.input, "CSV file of x,y rows, or - for stdin")->required();
  bootstrap_cmd->add_option("--iterations", ba.iterations, "Ensemble size")->check(CLI::PositiveNumber);
  bootstrap_cmd->add_option("--seed", ba.seed, "Random seed");
  bootstrap_cmd->add_option("--percentiles", ba.percentiles, "Lower and upper percentile")
      ->delimiter(',')
      ->expected(2)
      ->check(CLI::Range(0.0, 100.0));
  bootstrap_cmd->add_option("--threads", ba.threads, "Worker threads")->check(CLI::PositiveNumber);
  bootstrap_cmd->add_flag("--json", ba.json, "Print JSON instead of CSV");
  bootstrap_cmd->add_option("--output,-o", ba.output, "Output file (default stdout)");
  bootstrap_cmd->add_option("--svg", ba.svg, "Write an SVG plot");

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Generate the synthetic test signal");
  gen_cmd->add_option("--signal", ga.signal, "Signal family")->check(CLI::IsMember({"parabola-sine"}));
  gen_cmd->add_option("--n", ga.n, "Number of points")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  gen_cmd->add_option("--noise", ga.noise, "Noise model")->check(CLI::IsMember({"none", "normal", "heavy"}));
  gen_cmd->add_option("--seed", ga.seed, "Random seed");
  gen_cmd->add_option("--output,-o", ga.output, "Output file (default stdout)");

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search for small inputs");
  oracle_cmd->add_option("--input,-i", oa.input, "CSV file of x,y rows, or - for stdin")->required();
  oracle_cmd->add_option("--cap", oa.cap, "Largest accepted point count");
  oracle_cmd->add_flag("--json", oa.json, "Print a JSON report");

  BenchArgs be;
  auto* bench_cmd = app.add_subcommand("bench", "Timing table over doubling sizes");
  bench_cmd->add_option("--mode", be.mode, "Input family")->check(CLI::IsMember({"monotone", "simple"}));
  bench_cmd->add_option("--start", be.start, "First size")->check(CLI::Range(std::size_t{4}, std::size_t{1000000}));
  bench_cmd->add_option("--steps", be.steps, "Number of doublings plus one");
  bench_cmd->add_option("--seed", be.seed, "Random seed");
  bench_cmd->add_option("--repeats", be.repeats, "Best-of repetitions per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*simplify_cmd) return run_simplify(sa);
    if (*bootstrap_cmd) return run_bootstrap(ba);
    if (*gen_cmd) return run_gen(ga);
    if (*oracle_cmd) return run_oracle(oa);
    if (*bench_cmd) return run_bench(be);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_rejection(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
