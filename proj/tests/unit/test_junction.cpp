#include <gtest/gtest.h>

#include "polycross/error.hpp"
#include "polycross/junction.hpp"
#include "test_support.hpp"

namespace polycross {
namespace {

using testing::pts;
constexpr std::size_t kNone = TurnNeighbors::kNone;

TEST(ClassifyRegion, WedgeExamples) {
  const Point a{-1, 0}, b{0, 0}, c{1, 1};
  EXPECT_EQ(classify_region(a, b, c, {-0.5, 5}), Region::I);
  EXPECT_EQ(classify_region(a, b, c, {0, -5}), Region::II);
  EXPECT_EQ(classify_region(a, b, c, {2, 2}), Region::IV);
  EXPECT_EQ(classify_region(a, b, c, {-3, 0}), Region::III);
  // The extensions past p_at belong to the cones.
  EXPECT_EQ(classify_region(a, b, c, {3, 0}), Region::II);
  EXPECT_EQ(classify_region(a, b, c, {-2, -2}), Region::II);
}

TEST(ClassifyRegion, RightTurnWedge) {
  // Mirror image of the wedge above: the left cone is now the reflex side.
  const Point a{-1, 0}, b{0, 0}, c{1, -1};
  EXPECT_EQ(classify_region(a, b, c, {0, 5}), Region::I);
  EXPECT_EQ(classify_region(a, b, c, {3, 0}), Region::I);
  EXPECT_EQ(classify_region(a, b, c, {0.5, -5}), Region::II);
  EXPECT_EQ(classify_region(a, b, c, {2, -2}), Region::IV);
}

TEST(ClassifyRegion, DegenerateWedge) {
  try {
    classify_region({0, 0}, {1, 0}, {2, 0}, {5, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateWedge);
  }
}

TEST(LabelJunction, TableExamples) {
  // p0 lies in the left cone of the wedge at p2.
  const Polyline p = prepare_polyline(pts({{-2, 5}, {-1, 0}, {0, 0}, {1, 1}, {3, 1}}));
  const TurnNeighbors t = compute_turn_neighbors(p.points());
  EXPECT_EQ(label_junction(p, t, 2, {-0.5, 5}, JunctionEnd::EndOfIncoming), SideLabel::Left);
  EXPECT_EQ(label_junction(p, t, 2, {0, -5}, JunctionEnd::EndOfIncoming), SideLabel::Right);
  // Region III: decided by p0, which is in region I.
  EXPECT_EQ(label_junction(p, t, 2, {-3, 0}, JunctionEnd::EndOfIncoming), SideLabel::Right);
  // Region IV: decided by p4 = (3,1), which is in region II.
  EXPECT_EQ(label_junction(p, t, 2, {2, 2}, JunctionEnd::StartOfOutgoing), SideLabel::Left);
  // The adjacent simplification point is the polyline neighbour.
  EXPECT_EQ(label_junction(p, t, 2, p[3], JunctionEnd::StartOfOutgoing), SideLabel::Collinear);
  EXPECT_EQ(label_junction(p, t, 2, p[1], JunctionEnd::EndOfIncoming), SideLabel::Collinear);
}

TEST(LabelJunction, LookupOffThePolylineIsCollinear) {
  const Polyline p = prepare_polyline(pts({{-1, 0}, {0, 0}, {1, 1}, {3, 1}}));
  const TurnNeighbors t = compute_turn_neighbors(p.points());
  // Region III at index 1 would need index -1.
  EXPECT_EQ(label_junction(p, t, 1, {-3, 0}, JunctionEnd::EndOfIncoming), SideLabel::Collinear);
  // Region IV at index 2 would need index 4.
  EXPECT_EQ(label_junction(p, t, 2, {5, 1}, JunctionEnd::StartOfOutgoing), SideLabel::Collinear);
}

TEST(LabelJunction, InvariantUnderOrientationPreservingMaps) {
  RandomStream rng(9, 0);
  for (int rep = 0; rep < 300; ++rep) {
    const Polyline p = testing::simple_instance(rng, 10, 5);
    // Integer matrix with positive determinant, integer shift: exact on the grid.
    long m[4];
    do {
      for (long& v : m) v = static_cast<long>(rng.below(7)) - 3;
    } while (m[0] * m[3] - m[1] * m[2] <= 0);
    const double sx = static_cast<double>(rng.below(100)), sy = static_cast<double>(rng.below(100));
    std::vector<Point> mapped;
    for (const Point& q : p.points()) {
      mapped.push_back({m[0] * q.x + m[1] * q.y + sx, m[2] * q.x + m[3] * q.y + sy});
    }
    const Polyline pm = prepare_polyline(mapped);
    ASSERT_EQ(pm.size(), p.size());
    const TurnNeighbors t = compute_turn_neighbors(p.points());
    const TurnNeighbors tm = compute_turn_neighbors(pm.points());
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == i) continue;
        const JunctionEnd which = j < i ? JunctionEnd::EndOfIncoming : JunctionEnd::StartOfOutgoing;
        EXPECT_EQ(label_junction(p, t, i, p[j], which), label_junction(pm, tm, i, pm[j], which));
      }
    }
  }
}

TEST(EtaPsi, Tables) {
  const SideLabel C = SideLabel::Collinear, L = SideLabel::Left, R = SideLabel::Right;
  EXPECT_EQ(eta(L, R), 1);
  EXPECT_EQ(eta(R, L), 1);
  EXPECT_EQ(eta(C, R), 0);
  EXPECT_EQ(eta(L, L), 0);
  EXPECT_EQ(psi(R, C), R);
  EXPECT_EQ(psi(C, L), L);
  EXPECT_EQ(psi(C, C), C);
  for (SideLabel a : {C, L, R}) {
    EXPECT_EQ(eta(C, a), 0);
    for (SideLabel b : {C, L, R}) {
      EXPECT_EQ(eta(a, b), eta(b, a));
      EXPECT_EQ(psi(a, b), b == C ? a : b);
    }
  }
}

TEST(TurnNeighbors, Examples) {
  const TurnNeighbors plain = compute_turn_neighbors(pts({{0, 0}, {1, 1}, {2, 0}, {3, 1}}));
  EXPECT_EQ(plain.next, (std::vector<std::size_t>{2, 3, kNone, kNone}));
  EXPECT_EQ(plain.prev, (std::vector<std::size_t>{kNone, kNone, 0, 1}));

  const TurnNeighbors run = compute_turn_neighbors(pts({{0, 0}, {1, 0}, {2, 0}, {3, 1}}));
  EXPECT_EQ(run.next[0], 3u);
  EXPECT_EQ(run.next[1], 3u);
  EXPECT_EQ(run.prev[3], 1u);

  const TurnNeighbors flat = compute_turn_neighbors(pts({{0, 0}, {1, 1}, {2, 2}, {4, 4}}));
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(flat.next[k], kNone);
    EXPECT_EQ(flat.prev[k], kNone);
  }
}

TEST(TurnNeighbors, MatchesQuadraticRescan) {
  RandomStream rng(10, 0);
  for (int rep = 0; rep < 300; ++rep) {
    const auto raw = instances::random_monotone(12, rng, 1);
    const TurnNeighbors t = compute_turn_neighbors(raw);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      std::size_t next = kNone, prev = kNone;
      if (i + 1 < raw.size()) {
        for (std::size_t k = i + 2; k < raw.size() && next == kNone; ++k) {
          if (orientation(raw[i], raw[i + 1], raw[k]) != Orientation::Collinear) next = k;
        }
      }
      if (i >= 1) {
        for (std::size_t k = i - 1; k-- > 0 && prev == kNone;) {
          if (orientation(raw[i - 1], raw[i], raw[k]) != Orientation::Collinear) prev = k;
        }
      }
      EXPECT_EQ(t.next[i], next);
      EXPECT_EQ(t.prev[i], prev);
    }
  }
}

}  // namespace
}  // namespace polycross
