#include "polycross/geometry.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>

namespace polycross {
namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon() / 2.0;
// Shewchuk's first-stage error bound for orient2d.
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEpsilon) * kEpsilon;

Orientation from_sign(int s) noexcept {
  return s > 0 ? Orientation::Left : (s < 0 ? Orientation::Right : Orientation::Collinear);
}

Orientation orientation_exact(const Point& a, const Point& b, const Point& c) {
  const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const mpq_class det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
  return from_sign(sgn(det));
}

}  // namespace

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  double detsum = 0.0;
  if (detleft > 0.0) {
    if (detright <= 0.0) return from_sign(det > 0.0 ? 1 : (det < 0.0 ? -1 : 0));
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return from_sign(det > 0.0 ? 1 : (det < 0.0 ? -1 : 0));
    detsum = -detleft - detright;
  } else {
    // A zero product may come from underflow; settle it exactly.
    return orientation_exact(a, b, c);
  }
  const double errbound = kCcwErrBoundA * detsum;
  if (det > errbound) return Orientation::Left;
  if (-det > errbound) return Orientation::Right;
  return orientation_exact(a, b, c);
}

bool strictly_between(const Point& a, const Point& b, const Point& m) noexcept {
  if (a.x != b.x) {
    return (a.x < m.x && m.x < b.x) || (b.x < m.x && m.x < a.x);
  }
  return (a.y < m.y && m.y < b.y) || (b.y < m.y && m.y < a.y);
}

bool same_ray(const Point& o, const Point& a, const Point& q) noexcept {
  if (a.x != o.x) return (a.x > o.x) == (q.x > o.x) && q.x != o.x;
  return (a.y > o.y) == (q.y > o.y) && q.y != o.y;
}

SegmentContact classify_segments(const Point& a, const Point& b, const Point& c,
                                 const Point& d) {
  const Orientation abc = orientation(a, b, c);
  const Orientation abd = orientation(a, b, d);
  const Orientation cda = orientation(c, d, a);
  const Orientation cdb = orientation(c, d, b);

  if (abc == Orientation::Collinear && abd == Orientation::Collinear) {
    // Collinear: compare projections on the dominant axis.
    const bool use_x = a.x != b.x || c.x != d.x;
    auto key = [use_x](const Point& p) { return use_x ? p.x : p.y; };
    const double lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    const double lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    const double lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return SegmentContact::None;
    if (lo == hi) return SegmentContact::Touch;
    return SegmentContact::Overlap;
  }

  if (abc != abd && cda != cdb) {
    if (abc == Orientation::Collinear || abd == Orientation::Collinear ||
        cda == Orientation::Collinear || cdb == Orientation::Collinear) {
      return SegmentContact::Touch;
    }
    return SegmentContact::Proper;
  }
  // One endpoint collinear with the other segment's line but outside it,
  // or both strictly on one side.
  if (abc == Orientation::Collinear && strictly_between(a, b, c)) return SegmentContact::Touch;
  if (abd == Orientation::Collinear && strictly_between(a, b, d)) return SegmentContact::Touch;
  if (cda == Orientation::Collinear && strictly_between(c, d, a)) return SegmentContact::Touch;
  if (cdb == Orientation::Collinear && strictly_between(c, d, b)) return SegmentContact::Touch;
  if (a == c || a == d || b == c || b == d) return SegmentContact::Touch;
  return SegmentContact::None;
}

}  // namespace polycross
