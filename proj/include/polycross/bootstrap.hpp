#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polycross/polyline.hpp"
#include "polycross/simplification.hpp"
#include "polycross/solver.hpp"

namespace polycross {

struct ResidualSet {
  std::vector<double> values;    // y minus the simplification, per raw point
  double median = 0.0;
  std::vector<double> centered;  // values minus median

  friend bool operator==(const ResidualSet&, const ResidualSet&) = default;
};

// Average of the two middle values for even counts. Empty input gives 0.
double median_of(std::vector<double> v);

// The simplification, linearly interpolated at each x (within its x-range).
std::vector<double> evaluate_simplification(const Polyline& poly, const Simplification& q,
                                            std::span<const double> xs);

// Residuals of the raw points behind poly. Points exactly on a simplification
// segment get an exact zero.
ResidualSet residuals_of(const Polyline& poly, const Simplification& q,
                         std::span<const Point> raw);

struct BootstrapConfig {
  std::size_t iterations = 90;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  double lower_percentile = 5.0;
  double upper_percentile = 95.0;
  SolverConfig solver;
};

struct IterationInfo {
  long chi = 0;
  std::size_t size = 0;

  friend bool operator==(const IterationInfo&, const IterationInfo&) = default;
};

struct BootstrapSummary {
  std::vector<double> x;
  std::vector<double> median_curve;
  std::vector<double> lower_curve;
  std::vector<double> upper_curve;
  double lower_percentile = 5.0;
  double upper_percentile = 95.0;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  Simplification base;  // the fit to the unperturbed data
  ResidualSet residuals;
  std::vector<IterationInfo> per_iteration;

  friend bool operator==(const BootstrapSummary&, const BootstrapSummary&) = default;
};

// Value at nearest rank ceil(p/100 * N) of an ascending sample.
double nearest_rank(std::span<const double> sorted, double percent);

// Iteration t of the ensemble: every y gets one centered residual, drawn with
// replacement by stream t of the seed, subtracted from it.
std::vector<Point> perturb_sample(std::span<const Point> raw, const ResidualSet& residuals,
                                  std::uint64_t seed, std::size_t t);

// raw must be x-monotone (either direction). Throws NotMonotone and
// ZeroIterations.
BootstrapSummary bootstrap_ensemble(std::span<const Point> raw, const BootstrapConfig& cfg);

}  // namespace polycross
