#pragma once

#include <cmath>

namespace polycross {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline bool is_finite(const Point& p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

enum class Orientation : int { Right = -1, Collinear = 0, Left = 1 };

inline Orientation operator-(Orientation o) noexcept {
  return static_cast<Orientation>(-static_cast<int>(o));
}

inline int sign_of(Orientation o) noexcept { return static_cast<int>(o); }

// Sign of the signed area of triangle (a, b, c), exact for any finite
// double inputs (no overflow/underflow assumed in the filter stage).
Orientation orientation(const Point& a, const Point& b, const Point& c);

// For a, b, m known to be collinear: m lies strictly inside segment (a, b).
bool strictly_between(const Point& a, const Point& b, const Point& m) noexcept;

// For collinear o, a, q with a != o and q != o: q lies on the ray from o
// through a (same side of o as a).
bool same_ray(const Point& o, const Point& a, const Point& q) noexcept;

enum class SegmentContact {
  None,      // closed segments are disjoint
  Proper,    // single crossing point interior to both
  Touch,     // single shared point that is an endpoint of at least one
  Overlap,   // collinear with a shared sub-segment of positive length
};

SegmentContact classify_segments(const Point& a, const Point& b, const Point& c,
                                 const Point& d);

}  // namespace polycross
