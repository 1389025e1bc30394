#include "polycross/instances.hpp"

#include <algorithm>
#include <cmath>

#include "polycross/dataset.hpp"
#include "polycross/polyline.hpp"

namespace polycross::instances {
namespace {

int uniform_int(RandomStream& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool can_extend(const std::vector<Point>& walk, const Point& q) {
  if (std::find(walk.begin(), walk.end(), q) != walk.end()) return false;
  const std::size_t m = walk.size();
  if (m == 0) return true;
  const Point& last = walk[m - 1];
  if (m >= 2) {
    const Point& before = walk[m - 2];
    if (orientation(before, last, q) == Orientation::Collinear && !strictly_between(before, q, last)) {
      return false;
    }
  }
  for (std::size_t k = 0; k + 2 < m; ++k) {
    if (classify_segments(walk[k], walk[k + 1], last, q) != SegmentContact::None) return false;
  }
  return true;
}

}  // namespace

std::vector<Point> random_monotone(std::size_t n, RandomStream& rng, int y_range) {
  std::vector<Point> pts;
  pts.reserve(n);
  double x = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    x += uniform_int(rng, 1, 3);
    pts.push_back({x, static_cast<double>(uniform_int(rng, -y_range, y_range))});
  }
  return pts;
}

std::vector<Point> random_simple(std::size_t n, RandomStream& rng) {
  const int grid = std::max(5, static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(n)))) + 2);
  const int step = 3;
  for (;;) {
    std::vector<Point> walk;
    walk.push_back({static_cast<double>(uniform_int(rng, 0, grid)),
                    static_cast<double>(uniform_int(rng, 0, grid))});
    bool stuck = false;
    while (walk.size() < n && !stuck) {
      stuck = true;
      for (int attempt = 0; attempt < 200; ++attempt) {
        const Point& last = walk.back();
        const Point q{last.x + uniform_int(rng, -step, step), last.y + uniform_int(rng, -step, step)};
        if (q.x < 0 || q.y < 0 || q.x > grid || q.y > grid) continue;
        if (!can_extend(walk, q)) continue;
        walk.push_back(q);
        stuck = false;
        break;
      }
    }
    if (stuck) continue;
    if (strictly_increasing_x(walk) || strictly_decreasing_x(walk)) continue;
    return walk;
  }
}

std::vector<Point> spiral(std::size_t n, RandomStream& rng) {
  std::vector<Point> pts;
  pts.reserve(n);
  double theta = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double base = 2.0 + theta / (2.0 * 3.141592653589793);
    const double r = base + 0.5 * (rng.uniform01() - 0.5);
    pts.push_back({r * std::cos(theta), r * std::sin(theta)});
    theta += (0.3 + 0.4 * rng.uniform01()) / base;
  }
  return pts;
}

std::vector<Point> noisy_signal(std::size_t n, RandomStream& rng) {
  Dataset d = gen_signal(n);
  for (Point& p : d.rows) p.y += rng.normal();
  return d.rows;
}

}  // namespace polycross::instances
