#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycross/bootstrap.hpp"
#include "polycross/polyline.hpp"
#include "polycross/simplification.hpp"
#include "polycross/solver.hpp"

namespace polycross {

struct RunReport {
  std::string source;  // file path or generator description
  std::size_t raw_points = 0;
  std::size_t points = 0;  // after collinear merging
  PolylineKind kind = PolylineKind::Simple;
  bool reversed = false;
  Simplification result;
  std::vector<std::size_t> source_indices;  // result indices in the caller's numbering
  std::vector<Point> result_points;
  SolverMode mode = SolverMode::Auto;
  std::optional<std::size_t> max_span;
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0.0;
};

RunReport make_report(const Polyline& poly, const Simplification& q, const SolverConfig& cfg,
                      std::string source, std::size_t raw_points);

enum class ReportFormat { Json, Csv };

std::string write_report(const RunReport& r, ReportFormat format);

// Columns x, median, lower, upper.
std::string write_bootstrap(const BootstrapSummary& s, ReportFormat format);

const char* to_string(PolylineKind k) noexcept;
const char* to_string(SolverMode m) noexcept;

}  // namespace polycross
