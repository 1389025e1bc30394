#include "polycross/polyline.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "polycross/error.hpp"

namespace polycross {
namespace {

void validate_points(std::span<const Point> raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!is_finite(raw[i])) {
      throw Error(Errc::NonFiniteValue, "point " + std::to_string(i) + " is not finite");
    }
  }
  if (raw.size() < 2) throw Error(Errc::TooFewPoints, "a polyline needs at least 2 points");

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto less = [&](std::size_t a, std::size_t b) {
    return raw[a].x < raw[b].x || (raw[a].x == raw[b].x && raw[a].y < raw[b].y);
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (raw[order[k - 1]] == raw[order[k]]) {
      const auto a = std::min(order[k - 1], order[k]);
      const auto b = std::max(order[k - 1], order[k]);
      throw Error(Errc::DuplicatePoint,
                  "points " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
    }
  }
}

bool folds_back(const Point& a, const Point& b, const Point& c) {
  return orientation(a, b, c) == Orientation::Collinear && !strictly_between(a, c, b);
}

}  // namespace

bool strictly_increasing_x(std::span<const Point> points) noexcept {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x)) return false;
  }
  return true;
}

bool strictly_decreasing_x(std::span<const Point> points) noexcept {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x > points[i].x)) return false;
  }
  return true;
}

bool is_simple_chain(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) return true;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (folds_back(points[i], points[i + 1], points[i + 2])) return false;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = i + 2; k + 1 < n; ++k) {
      if (classify_segments(points[i], points[i + 1], points[k], points[k + 1]) !=
          SegmentContact::None) {
        return false;
      }
    }
  }
  return true;
}

InputClass classify_input(std::span<const Point> points) {
  if (strictly_increasing_x(points) || strictly_decreasing_x(points)) return InputClass::Monotone;
  return is_simple_chain(points) ? InputClass::Simple : InputClass::NotSimple;
}

Polyline merge_collinear(std::span<const Point> raw) {
  validate_points(raw);

  std::vector<std::size_t> kept;
  kept.reserve(raw.size());
  for (std::size_t r = 0; r < raw.size(); ++r) {
    while (kept.size() >= 2) {
      const Point& a = raw[kept[kept.size() - 2]];
      const Point& b = raw[kept.back()];
      if (orientation(a, b, raw[r]) != Orientation::Collinear || !strictly_between(a, raw[r], b)) {
        break;
      }
      kept.pop_back();
    }
    kept.push_back(r);
  }

  Polyline out;
  out.points_.reserve(kept.size());
  for (std::size_t k : kept) out.points_.push_back(raw[k]);
  out.source_index_ = kept;

  out.collinear_map_.resize(raw.size());
  std::size_t m = 0;
  for (std::size_t r = 0; r < raw.size(); ++r) {
    if (m < kept.size() && kept[m] == r) {
      out.collinear_map_[r] = {m, true};
      ++m;
    } else {
      out.collinear_map_[r] = {m - 1, false};
    }
  }

  if (strictly_increasing_x(out.points_)) {
    out.kind_ = PolylineKind::Monotone;
  } else if (is_simple_chain(out.points_)) {
    out.kind_ = PolylineKind::Simple;
  } else {
    throw Error(Errc::NotSimple, "polyline intersects itself");
  }
  return out;
}

Polyline prepare_polyline(std::span<const Point> raw) {
  validate_points(raw);
  if (raw.size() >= 2 && strictly_decreasing_x(raw)) {
    std::vector<Point> rev(raw.rbegin(), raw.rend());
    Polyline out = merge_collinear(rev);
    const std::size_t last = raw.size() - 1;
    for (auto& s : out.source_index_) s = last - s;
    std::reverse(out.collinear_map_.begin(), out.collinear_map_.end());
    out.reversed_ = true;
    return out;
  }
  return merge_collinear(raw);
}

}  // namespace polycross
