#include "polycross/report.hpp"

#include <json.hpp>

#include "polycross/dataset.hpp"

namespace polycross {

const char* to_string(PolylineKind k) noexcept {
  return k == PolylineKind::Monotone ? "monotone" : "simple";
}

const char* to_string(SolverMode m) noexcept {
  switch (m) {
    case SolverMode::Monotone: return "monotone";
    case SolverMode::Simple: return "simple";
    default: return "auto";
  }
}

RunReport make_report(const Polyline& poly, const Simplification& q, const SolverConfig& cfg,
                      std::string source, std::size_t raw_points) {
  RunReport r;
  r.source = std::move(source);
  r.raw_points = raw_points;
  r.points = poly.size();
  r.kind = poly.kind();
  r.reversed = poly.reversed();
  r.result = q;
  for (std::size_t k : q.indices) {
    r.source_indices.push_back(poly.source_index(k));
    r.result_points.push_back(poly[k]);
  }
  r.mode = cfg.mode;
  r.max_span = cfg.max_span;
  return r;
}

std::string write_report(const RunReport& r, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = "index,source_index,x,y\n";
    for (std::size_t k = 0; k < r.result.indices.size(); ++k) {
      out += std::to_string(r.result.indices[k]) + ',' + std::to_string(r.source_indices[k]) + ',' +
             format_double(r.result_points[k].x) + ',' + format_double(r.result_points[k].y) + '\n';
    }
    return out;
  }
  nlohmann::ordered_json j;
  j["input"] = {{"source", r.source},
                {"raw_points", r.raw_points},
                {"points", r.points},
                {"kind", to_string(r.kind)},
                {"reversed", r.reversed}};
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const Point& p : r.result_points) pts.push_back({p.x, p.y});
  j["result"] = {{"indices", r.result.indices},
                 {"source_indices", r.source_indices},
                 {"points", pts},
                 {"chi", r.result.chi},
                 {"size", r.result.size()},
                 {"end_label", static_cast<int>(r.result.end_label)}};
  j["config"] = {{"mode", to_string(r.mode)},
                 {"max_span", r.max_span ? nlohmann::ordered_json(*r.max_span) : nullptr},
                 {"seed", r.seed ? nlohmann::ordered_json(*r.seed) : nullptr}};
  j["timing"] = {{"elapsed_ms", r.elapsed_ms}};
  return j.dump(2) + "\n";
}

std::string write_bootstrap(const BootstrapSummary& s, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = "x,median,lower,upper\n";
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      out += format_double(s.x[k]) + ',' + format_double(s.median_curve[k]) + ',' +
             format_double(s.lower_curve[k]) + ',' + format_double(s.upper_curve[k]) + '\n';
    }
    return out;
  }
  nlohmann::ordered_json j;
  j["iterations"] = s.iterations;
  j["seed"] = s.seed;
  j["percentiles"] = {s.lower_percentile, s.upper_percentile};
  j["base"] = {{"indices", s.base.indices}, {"chi", s.base.chi}, {"size", s.base.size()}};
  j["residual_median"] = s.residuals.median;
  j["x"] = s.x;
  j["median"] = s.median_curve;
  j["lower"] = s.lower_curve;
  j["upper"] = s.upper_curve;
  nlohmann::ordered_json iters = nlohmann::ordered_json::array();
  for (const auto& it : s.per_iteration) iters.push_back({{"chi", it.chi}, {"size", it.size}});
  j["per_iteration"] = iters;
  return j.dump(2) + "\n";
}

}  // namespace polycross
