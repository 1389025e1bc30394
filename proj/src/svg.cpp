#include "polycross/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace polycross {
namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kMargin = 20.0;

struct Frame {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;

  void include(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }

  std::string coord(double x, double y) const {
    const double sx = kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin);
    const double sy = kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", sx, sy);
    return buf;
  }
};

std::string path(const Frame& f, std::span<const double> xs, std::span<const double> ys,
                 const char* cls) {
  std::string d;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    d += k == 0 ? "M" : " L";
    d += f.coord(xs[k], ys[k]);
  }
  return std::string("  <path class=\"") + cls + "\" d=\"" + d + "\"/>\n";
}

std::string path(const Frame& f, std::span<const Point> pts, const char* cls) {
  std::vector<double> xs, ys;
  for (const Point& p : pts) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  return path(f, xs, ys, cls);
}

}  // namespace

std::string render_svg(std::span<const Point> input, std::span<const Point> simplified,
                       const std::optional<Envelope>& envelope) {
  Frame f;
  constexpr double inf = std::numeric_limits<double>::infinity();
  f.x0 = f.y0 = inf;
  f.x1 = f.y1 = -inf;
  for (const Point& p : input) f.include(p.x, p.y);
  for (const Point& p : simplified) f.include(p.x, p.y);
  if (envelope) {
    for (std::size_t k = 0; k < envelope->x.size(); ++k) {
      f.include(envelope->x[k], envelope->lower[k]);
      f.include(envelope->x[k], envelope->upper[k]);
    }
  }
  if (!(f.x0 < f.x1)) { f.x0 -= 1.0; f.x1 += 1.0; }
  if (!(f.y0 < f.y1)) { f.y0 -= 1.0; f.y1 += 1.0; }

  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n"
      "  <style>\n"
      "    path { fill: none; stroke-linejoin: round; }\n"
      "    .input { stroke: #9a9a9a; stroke-width: 1; }\n"
      "    .simplified { stroke: #c0392b; stroke-width: 2; }\n"
      "    .median { stroke: #1f4e9c; stroke-width: 1.5; }\n"
      "    .lower, .upper { stroke: #1f4e9c; stroke-width: 1; stroke-dasharray: 4 3; }\n"
      "  </style>\n"
      "  <rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  out += path(f, input, "input");
  if (envelope) {
    out += path(f, envelope->x, envelope->lower, "lower");
    out += path(f, envelope->x, envelope->upper, "upper");
    out += path(f, envelope->x, envelope->median, "median");
  }
  out += path(f, simplified, "simplified");
  out += "</svg>\n";
  return out;
}

}  // namespace polycross
