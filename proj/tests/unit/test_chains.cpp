#include <gtest/gtest.h>

#include "polycross/batch.hpp"
#include "polycross/chains.hpp"
#include "polycross/oracle.hpp"
#include "test_support.hpp"

namespace polycross {
namespace {

using testing::pts;

ChainDecomposition decompose(const Polyline& p, std::size_t i) {
  return decompose_chains(p, angular_ranks(p, i));
}

TEST(AngularRanks, ClockwiseFromVertical) {
  const Polyline p = prepare_polyline(pts({{0, 0}, {1, 1}, {1, -1}}));
  const AngularRanks r = angular_ranks(p, 0);
  EXPECT_EQ(r.rank[1], 1);
  EXPECT_EQ(r.rank[2], 2);
  EXPECT_TRUE(r.artificial.empty());
}

TEST(AngularRanks, FullTurnOrder) {
  // Up, right, down, left: clockwise from the upward vertical.
  const Polyline p = prepare_polyline(pts({{0, 0}, {-3, 1}, {-1, -4}, {0, -5}, {2, -2}, {4, 0}, {0, 7}}));
  const AngularRanks r = angular_ranks(p, 0);
  EXPECT_EQ(r.rank[6], 1);  // straight up
  EXPECT_EQ(r.rank[5], 2);  // right
  EXPECT_EQ(r.rank[4], 3);
  EXPECT_EQ(r.rank[3], 4);  // straight down
  EXPECT_EQ(r.rank[2], 5);
  EXPECT_EQ(r.rank[1], 6);
}

TEST(AngularRanks, SplitsSegmentsCrossingTheRay) {
  const Polyline p = prepare_polyline(pts({{0, 0}, {-1, 2}, {1, 2}}));
  const AngularRanks r = angular_ranks(p, 0);
  ASSERT_EQ(r.artificial.size(), 2u);
  EXPECT_EQ(r.artificial[0].kind, CpKind::ArtHigh);
  EXPECT_EQ(r.artificial[1].kind, CpKind::ArtLow);
  EXPECT_EQ(r.artificial[0].key, static_cast<long>(p.size()) + 1);
  EXPECT_EQ(r.artificial[1].key, kLowKey);
  EXPECT_DOUBLE_EQ(r.artificial[0].pseudo_index(), 1.5);
  EXPECT_DOUBLE_EQ(r.artificial[1].pseudo_index(), 1.5);
}

TEST(AngularRanks, SegmentPassingBelowIsNotSplit) {
  const Polyline p = prepare_polyline(pts({{0, 0}, {2, 1}, {-1, -2}, {1, -3}}));
  EXPECT_TRUE(angular_ranks(p, 0).artificial.empty());
}

TEST(AngularRanks, EqualDirectionsShareRank) {
  // p1, p3 and p5 lie on the same ray from p0.
  const Polyline p = prepare_polyline(pts({{0, 0}, {1, 2}, {3, 1}, {2, 4}, {5, 1}, {3, 6}}));
  const AngularRanks r = angular_ranks(p, 0);
  EXPECT_EQ(r.rank[1], r.rank[3]);
  EXPECT_EQ(r.rank[1], r.rank[5]);
  EXPECT_NE(r.rank[1], r.rank[2]);
}

TEST(DecomposeChains, SingleClockwiseRun) {
  const Polyline p = prepare_polyline(pts({{0, 0}, {4, -1}, {2, -3}, {0, -4}, {-2, -3}, {-4, -1}}));
  const ChainDecomposition d = decompose(p, 0);
  ASSERT_EQ(d.chains.size(), 1u);
  EXPECT_TRUE(d.chains[0].ascending);
  EXPECT_EQ(d.chains[0].lo, 1);
  EXPECT_EQ(d.chains[0].hi, 5);
  EXPECT_EQ(d.chains[0].max_index, 5u);
}

TEST(DecomposeChains, SplitsWhereDirectionTurns) {
  // Ranks along P after p0 are 1, 3, 5, 4, 2.
  const Polyline p = prepare_polyline(pts({{0, 0}, {3, 1}, {1, -3}, {-3, -1}, {-2, -6}, {6, -2}}));
  const ChainDecomposition d = decompose(p, 0);
  std::vector<long> ranks;
  for (const ChainPoint& c : d.points) ranks.push_back(c.key);
  ASSERT_EQ(ranks, (std::vector<long>{1, 3, 5, 4, 2}));
  ASSERT_EQ(d.chains.size(), 2u);
  EXPECT_EQ(d.chains[0].first, 0u);
  EXPECT_EQ(d.chains[0].last, 2u);
  EXPECT_EQ(d.chains[1].first, 2u);
  EXPECT_EQ(d.chains[1].last, 4u);
  EXPECT_FALSE(d.chains[1].ascending);
  EXPECT_EQ(d.chains[1].lo, 2);
  EXPECT_EQ(d.chains[1].hi, 5);
}

TEST(DecomposeChains, RayCrossingSplitsAtTheArtificialPair) {
  // One counter-clockwise run that passes over p0: the pieces either side of
  // the crossing become separate chains.
  const Polyline p = prepare_polyline(pts({{0, 0}, {2, 1}, {1, 3}, {-1, 3}, {-2, 1}}));
  const ChainDecomposition d = decompose(p, 0);
  ASSERT_EQ(d.points.size(), 6u);
  ASSERT_EQ(d.chains.size(), 2u);
  EXPECT_EQ(d.chains[0].lo, kLowKey);
  EXPECT_EQ(d.chains[1].hi, static_cast<long>(p.size()) + 1);
  EXPECT_EQ(d.chains[0].max_index, 2u);
  EXPECT_EQ(d.chains[1].max_index, 4u);
}

TEST(DecomposeChains, PartitionAndMonotoneRanks) {
  RandomStream rng(1, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const Polyline p = testing::simple_instance(rng, 4 + rng.below(30));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const ChainDecomposition d = decompose(p, i);
      // Consecutive chains share exactly one point, except across an
      // artificial pair; together they cover every piece.
      ASSERT_EQ(d.chains.front().first, 0u);
      ASSERT_EQ(d.chains.back().last, d.points.size() - 1);
      for (std::size_t c = 1; c < d.chains.size(); ++c) {
        const std::size_t prev_last = d.chains[c - 1].last;
        const std::size_t first = d.chains[c].first;
        if (d.points[prev_last].kind != CpKind::Real) {
          EXPECT_EQ(first, prev_last + 1);
          EXPECT_NE(d.points[first].kind, CpKind::Real);
        } else {
          EXPECT_EQ(first, prev_last);
        }
      }
      for (const Chain& c : d.chains) {
        for (std::size_t k = c.first; k < c.last; ++k) {
          if (c.ascending) {
            EXPECT_LE(d.points[k].key, d.points[k + 1].key);
          } else {
            EXPECT_GE(d.points[k].key, d.points[k + 1].key);
          }
        }
      }
    }
  }
}

// Proper crossings of the open segment p_i p_j with one chain, counted on the
// chain's real-to-real pieces.
long naive_chain_hits(const Polyline& p, const ChainDecomposition& d, const Chain& c,
                      std::size_t i, std::size_t j) {
  long hits = 0;
  for (std::size_t k = c.first; k < c.last; ++k) {
    const ChainPoint& a = d.points[k];
    const ChainPoint& b = d.points[k + 1];
    if (a.kind != CpKind::Real || b.kind != CpKind::Real) continue;
    if (classify_segments(p[i], p[j], p[a.index], p[b.index]) == SegmentContact::Proper) ++hits;
  }
  return hits;
}

TEST(ChainSegmentCrossing, AtMostOneHitPerChain) {
  RandomStream rng(2, 0);
  for (int rep = 0; rep < 80; ++rep) {
    const Polyline p = testing::simple_instance(rng, 4 + rng.below(30));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const ChainDecomposition d = decompose(p, i);
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        for (const Chain& c : d.chains) {
          if (c.max_index < j) {
            EXPECT_LE(naive_chain_hits(p, d, c, i, j), 1);
          }
        }
      }
    }
  }
}

TEST(ChainSegmentCrossing, SumEqualsWalk) {
  RandomStream rng(3, 0);
  for (int rep = 0; rep < 80; ++rep) {
    const bool mono = rep % 2 == 0;
    const Polyline p = mono ? testing::monotone_instance(rng, 4 + rng.below(30))
                            : testing::simple_instance(rng, 4 + rng.below(30));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      ChainDecomposition d = decompose(p, i);
      assign_topo(d, topo_order_chains(p, d));
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        long sum = 0;
        for (const Chain& c : d.chains) sum += chain_segment_crossing(d, c, j, mono);
        ASSERT_EQ(sum, oracle::segment_crossings(p, i, j)) << "i=" << i << " j=" << j;
      }
    }
  }
}

TEST(ChainSegmentCrossing, Cases) {
  // P passes under p0 from right to left, then turns back further down.
  const Polyline p = prepare_polyline(pts({{0, 0}, {2, -1}, {-2, -1}, {-3, -4}, {1, -5}}));
  ChainDecomposition d = decompose(p, 0);
  assign_topo(d, topo_order_chains(p, d));
  ASSERT_EQ(d.chains.size(), 2u);
  EXPECT_EQ(d.chains[0].lo, 1);
  EXPECT_EQ(d.chains[0].hi, 4);
  // Directions of p3 and p4 lie strictly inside the first chain's interval
  // and that chain is nearer: one crossing each.
  EXPECT_EQ(chain_segment_crossing(d, d.chains[0], 3, true), 1);
  EXPECT_EQ(chain_segment_crossing(d, d.chains[0], 4, true), 1);
  EXPECT_EQ(oracle::segment_crossings(p, 0, 4), 1);
  // A direction on the interval's end or outside it: no crossing.
  Chain narrow = d.chains[0];
  narrow.hi = 2;
  EXPECT_EQ(chain_segment_crossing(d, narrow, 4, true), 0);
  narrow.hi = 3;
  EXPECT_EQ(chain_segment_crossing(d, narrow, 3, true), 0);
}

TEST(TopoOrder, SingleChainAndNestedArcs) {
  const Polyline one = prepare_polyline(pts({{0, 0}, {4, -1}, {2, -3}, {0, -4}}));
  const ChainDecomposition d1 = decompose(one, 0);
  EXPECT_EQ(topo_order_chains(one, d1).order, (std::vector<std::size_t>{0}));

  // An inner arc below p0 from right to left, then an outer arc back.
  const Polyline arcs = prepare_polyline(
      pts({{0, 0}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-6, -2}, {-3, -6}, {3, -6}, {6, -2}}));
  const ChainDecomposition d2 = decompose(arcs, 0);
  ASSERT_EQ(d2.chains.size(), 2u);
  const ChainOrder order = topo_order_chains(arcs, d2);
  EXPECT_EQ(order.order, (std::vector<std::size_t>{0, 1}));
  ASSERT_FALSE(order.edges.empty());
}

// Exact comparison of distances from o along direction towards a point.
bool nearer_along(const Point& o, const Point& s0, const Point& s1, const Point& t0,
                  const Point& t1) {
  // Segments s and t both cross the ray o -> probe; s is nearer when s0 and o
  // lie on the same side of t's line within that direction.
  const Orientation ot = orientation(t0, t1, o);
  const Orientation a = orientation(t0, t1, s0);
  const Orientation b = orientation(t0, t1, s1);
  return (a == ot || a == Orientation::Collinear) && (b == ot || b == Orientation::Collinear);
}

TEST(TopoOrder, StabbedChainsAppearNearestFirst) {
  RandomStream rng(4, 0);
  for (int rep = 0; rep < 60; ++rep) {
    const Polyline p = testing::simple_instance(rng, 10 + rng.below(25));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      ChainDecomposition d = decompose(p, i);
      assign_topo(d, topo_order_chains(p, d));
      // Probe at every real direction strictly inside two chains; each chain
      // contributes its real piece crossing that direction, if any.
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        const long key = d.ranks.rank[j];
        std::vector<std::pair<long, std::pair<Point, Point>>> stabbed;
        for (const Chain& c : d.chains) {
          if (c.degenerate() || !(c.lo < key && key < c.hi)) continue;
          for (std::size_t k = c.first; k < c.last; ++k) {
            const ChainPoint& a = d.points[k];
            const ChainPoint& b = d.points[k + 1];
            if (a.kind != CpKind::Real || b.kind != CpKind::Real) continue;
            if (std::min(a.key, b.key) < key && key < std::max(a.key, b.key)) {
              stabbed.push_back({c.topo, {p[a.index], p[b.index]}});
            }
          }
        }
        for (const auto& [ta, sa] : stabbed) {
          for (const auto& [tb, sb] : stabbed) {
            if (ta < tb) {
              // The lower topo piece must not be strictly farther.
              EXPECT_FALSE(nearer_along(p[i], sb.first, sb.second, sa.first, sa.second) &&
                           !nearer_along(p[i], sa.first, sa.second, sb.first, sb.second));
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace polycross
