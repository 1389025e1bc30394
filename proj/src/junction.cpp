#include "polycross/junction.hpp"

#include "polycross/error.hpp"

namespace polycross {

TurnNeighbors compute_turn_neighbors(std::span<const Point> raw) {
  const std::size_t n = raw.size();
  TurnNeighbors t;
  t.prev.assign(n, TurnNeighbors::kNone);
  t.next.assign(n, TurnNeighbors::kNone);
  // Whenever p_{i+2} stays on the line through p_i, p_{i+1}, that line is also
  // the line through p_{i+1}, p_{i+2}, so the answer carries over.
  for (std::size_t i = n; i-- > 0;) {
    if (i + 2 >= n) continue;
    t.next[i] = orientation(raw[i], raw[i + 1], raw[i + 2]) != Orientation::Collinear
                    ? i + 2
                    : t.next[i + 1];
  }
  for (std::size_t i = 2; i < n; ++i) {
    t.prev[i] = orientation(raw[i - 2], raw[i - 1], raw[i]) != Orientation::Collinear
                    ? i - 2
                    : t.prev[i - 1];
  }
  return t;
}

Region classify_region(const Point& p_prev, const Point& p_at, const Point& p_next,
                       const Point& q) {
  const Orientation turn = orientation(p_prev, p_at, p_next);
  if (turn == Orientation::Collinear) {
    throw Error(Errc::DegenerateWedge, "wedge points are collinear");
  }
  const Orientation o1 = orientation(p_prev, p_at, q);
  const Orientation o2 = orientation(p_at, p_next, q);
  if (o1 == Orientation::Collinear && same_ray(p_at, p_prev, q)) return Region::III;
  if (o2 == Orientation::Collinear && same_ray(p_at, p_next, q)) return Region::IV;
  const bool left1 = o1 == Orientation::Left;
  const bool left2 = o2 == Orientation::Left;
  if (turn == Orientation::Left) return left1 && left2 ? Region::I : Region::II;
  return left1 || left2 ? Region::I : Region::II;
}

namespace {

SideLabel from_turn_point(const Point& a, const Point& b, const Point& c, const Point& t) {
  switch (classify_region(a, b, c, t)) {
    case Region::I: return SideLabel::Right;
    case Region::II: return SideLabel::Left;
    default: return SideLabel::Collinear;
  }
}

SideLabel from_half_plane(const Point& a, const Point& b, const Point& q) {
  switch (orientation(a, b, q)) {
    case Orientation::Left: return SideLabel::Left;
    case Orientation::Right: return SideLabel::Right;
    default: return SideLabel::Collinear;
  }
}

}  // namespace

SideLabel label_junction(const Polyline& poly, const TurnNeighbors& turn, std::size_t i,
                         const Point& q_other, JunctionEnd which) {
  const std::size_t n = poly.size();
  const bool incoming = which == JunctionEnd::EndOfIncoming;
  if (incoming && i > 0 && q_other == poly[i - 1]) return SideLabel::Collinear;
  if (!incoming && i + 1 < n && q_other == poly[i + 1]) return SideLabel::Collinear;

  // Polyline endpoints have a single segment; label by its half-plane.
  if (i == 0) return from_half_plane(poly[0], poly[1], q_other);
  if (i + 1 == n) return from_half_plane(poly[n - 2], poly[n - 1], q_other);

  const Point& a = poly[i - 1];
  const Point& b = poly[i];
  const Point& c = poly[i + 1];
  switch (classify_region(a, b, c, q_other)) {
    case Region::I: return SideLabel::Left;
    case Region::II: return SideLabel::Right;
    case Region::III: {
      const std::size_t t = turn.prev[i];
      return t == TurnNeighbors::kNone ? SideLabel::Collinear : from_turn_point(a, b, c, poly[t]);
    }
    case Region::IV: {
      const std::size_t t = turn.next[i];
      return t == TurnNeighbors::kNone ? SideLabel::Collinear : from_turn_point(a, b, c, poly[t]);
    }
  }
  return SideLabel::Collinear;
}

}  // namespace polycross
