#include "polycross/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "polycross/error.hpp"
#include "polycross/random.hpp"

namespace polycross {
namespace {

// Index t of the simplification segment [q_t, q_{t+1}] whose x-range holds x.
std::size_t segment_for(const Polyline& poly, const Simplification& q, double x) {
  const auto& idx = q.indices;
  auto it = std::upper_bound(idx.begin() + 1, idx.end() - 1, x,
                             [&](double v, std::size_t k) { return v < poly[k].x; });
  return static_cast<std::size_t>(it - idx.begin()) - 1;
}

double interpolate(const Point& a, const Point& b, double x) {
  if (x <= a.x) return a.y;
  if (x >= b.x) return b.y;
  return a.y + (b.y - a.y) * ((x - a.x) / (b.x - a.x));
}

Polyline monotone_polyline(std::span<const Point> raw) {
  Polyline poly = prepare_polyline(raw);
  if (poly.kind() != PolylineKind::Monotone) {
    throw Error(Errc::NotMonotone, "the bootstrap needs x-monotone data");
  }
  return poly;
}

}  // namespace

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return lower + (upper - lower) / 2.0;
}

std::vector<double> evaluate_simplification(const Polyline& poly, const Simplification& q,
                                            std::span<const double> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    const std::size_t t = segment_for(poly, q, x);
    out.push_back(interpolate(poly[q.indices[t]], poly[q.indices[t + 1]], x));
  }
  return out;
}

ResidualSet residuals_of(const Polyline& poly, const Simplification& q,
                         std::span<const Point> raw) {
  if (poly.kind() != PolylineKind::Monotone) {
    throw Error(Errc::NotMonotone, "residuals need an x-monotone polyline");
  }
  validate_subset(poly.size(), q.indices);
  ResidualSet r;
  r.values.reserve(raw.size());
  for (const Point& p : raw) {
    const std::size_t t = segment_for(poly, q, p.x);
    const Point& a = poly[q.indices[t]];
    const Point& b = poly[q.indices[t + 1]];
    const bool on_segment = orientation(a, b, p) == Orientation::Collinear;
    r.values.push_back(on_segment ? 0.0 : p.y - interpolate(a, b, p.x));
  }
  r.median = median_of(r.values);
  r.centered.reserve(r.values.size());
  for (double v : r.values) r.centered.push_back(v - r.median);
  return r;
}

double nearest_rank(std::span<const double> sorted, double percent) {
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(percent / 100.0 * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

std::vector<Point> perturb_sample(std::span<const Point> raw, const ResidualSet& residuals,
                                  std::uint64_t seed, std::size_t t) {
  RandomStream rng(seed, t);
  std::vector<Point> out(raw.begin(), raw.end());
  const std::size_t n = residuals.centered.size();
  for (Point& p : out) p.y -= residuals.centered[rng.below(n)];
  return out;
}

BootstrapSummary bootstrap_ensemble(std::span<const Point> raw, const BootstrapConfig& cfg) {
  if (cfg.iterations == 0) throw Error(Errc::ZeroIterations, "iterations must be positive");
  const Polyline poly = monotone_polyline(raw);
  const std::size_t n = raw.size();

  BootstrapSummary s;
  s.iterations = cfg.iterations;
  s.seed = cfg.seed;
  s.lower_percentile = cfg.lower_percentile;
  s.upper_percentile = cfg.upper_percentile;
  s.base = simplify(poly, cfg.solver);
  s.residuals = residuals_of(poly, s.base, raw);
  s.x.reserve(n);
  for (const Point& p : raw) s.x.push_back(p.x);

  std::vector<std::vector<double>> curves(cfg.iterations);
  s.per_iteration.resize(cfg.iterations);
  auto run = [&](std::size_t t) {
    const Polyline pp = monotone_polyline(perturb_sample(raw, s.residuals, cfg.seed, t));
    const Simplification q = simplify(pp, cfg.solver);
    curves[t] = evaluate_simplification(pp, q, s.x);
    s.per_iteration[t] = {q.chi, q.size()};
  };

  const std::size_t workers = std::clamp<std::size_t>(cfg.threads, 1, cfg.iterations);
  if (workers == 1) {
    for (std::size_t t = 0; t < cfg.iterations; ++t) run(t);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < cfg.iterations; t += workers) run(t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  s.median_curve.resize(n);
  s.lower_curve.resize(n);
  s.upper_curve.resize(n);
  std::vector<double> column(cfg.iterations);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t t = 0; t < cfg.iterations; ++t) column[t] = curves[t][k];
    std::sort(column.begin(), column.end());
    s.median_curve[k] = median_of(column);
    s.lower_curve[k] = nearest_rank(column, cfg.lower_percentile);
    s.upper_curve[k] = nearest_rank(column, cfg.upper_percentile);
  }
  return s;
}

}  // namespace polycross
