#include "polycross/chains.hpp"

#include <algorithm>
#include <cmath>

#include "polycross/error.hpp"

namespace polycross {
namespace {

// 0 for directions in [0, 180) clockwise from up, 1 for [180, 360).
int half(const Point& o, const Point& p) noexcept {
  return (p.x > o.x || (p.x == o.x && p.y > o.y)) ? 0 : 1;
}

// Does segment a -> b cross the (tilted) upward ray at o? Returns +1 when it
// moves from the first half to the second, -1 for the reverse, 0 otherwise.
int ray_crossing(const Point& o, const Point& a, const Point& b) {
  const int ha = half(o, a);
  const int hb = half(o, b);
  if (ha == hb) return 0;
  const Orientation side = orientation(a, b, o);
  if (ha == 0) return side == Orientation::Left ? 1 : 0;
  return side == Orientation::Right ? -1 : 0;
}

// Clockwise angle from up, squashed monotonically into [0, 4). The sign of a
// floating-point difference is exact, so the half always matches half();
// within a half the key is off by a few ulps at most.
double pseudo_angle(const Point& o, const Point& p) noexcept {
  const double dx = p.x - o.x;
  const double dy = p.y - o.y;
  const double ax = std::abs(dx);
  const double q = ax / (ax + std::abs(dy));
  if (dx > 0.0 || (dx == 0.0 && dy > 0.0)) return dy >= 0.0 ? q : 2.0 - q;
  return 2.0 + (dy <= 0.0 ? q : 2.0 - q);
}

// Keys further apart than this are ordered correctly whatever the rounding.
constexpr double kPseudoAngleSlack = 1e-12;

struct KeyedPoint {
  double key;
  std::size_t index;
};

}  // namespace

bool angle_less(const Point& o, const Point& a, const Point& b) {
  const int ha = half(o, a);
  const int hb = half(o, b);
  if (ha != hb) return ha < hb;
  return orientation(o, a, b) == Orientation::Right;
}

void angular_ranks(const Polyline& poly, std::size_t i, std::size_t limit, AngularRanks& r) {
  const std::size_t n = poly.size();
  if (i + 1 >= n) throw Error(Errc::InvalidSubset, "source index has no successor");
  if (limit == kNoIndex || limit >= n) limit = n - 1;

  r.source = i;
  r.limit = limit;
  r.rank.assign(n, 0);
  r.high_key = static_cast<long>(n) + 1;
  r.artificial.clear();

  const Point& o = poly[i];
  thread_local std::vector<KeyedPoint> order;
  order.clear();
  for (std::size_t u = i + 1; u <= limit; ++u) order.push_back({pseudo_angle(o, poly[u]), u});
  // Sort on the float keys, then settle runs of near-equal keys exactly. Keys
  // either side of a gap wider than the slack are already in exact order.
  std::sort(order.begin(), order.end(),
            [](const KeyedPoint& a, const KeyedPoint& b) { return a.key < b.key; });
  auto exact_less = [&](const KeyedPoint& a, const KeyedPoint& b) {
    return angle_less(o, poly[a.index], poly[b.index]);
  };
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo + 1;
    while (hi < order.size() && order[hi].key - order[hi - 1].key <= kPseudoAngleSlack) ++hi;
    if (hi - lo > 1) {
      std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo),
                order.begin() + static_cast<std::ptrdiff_t>(hi), exact_less);
    }
    lo = hi;
  }
  long rank = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const bool tied = k > 0 && order[k].key - order[k - 1].key <= kPseudoAngleSlack &&
                      !exact_less(order[k - 1], order[k]);
    if (!tied) ++rank;
    r.rank[order[k].index] = rank;
  }

  for (std::size_t u = i + 1; u < limit; ++u) {
    const int c = ray_crossing(o, poly[u], poly[u + 1]);
    if (c > 0) {
      r.artificial.push_back({CpKind::ArtLow, u, kLowKey});
      r.artificial.push_back({CpKind::ArtHigh, u, r.high_key});
    } else if (c < 0) {
      r.artificial.push_back({CpKind::ArtHigh, u, r.high_key});
      r.artificial.push_back({CpKind::ArtLow, u, kLowKey});
    }
  }
}

AngularRanks angular_ranks(const Polyline& poly, std::size_t i, std::size_t limit) {
  AngularRanks r;
  angular_ranks(poly, i, limit, r);
  return r;
}

void decompose_chains(const Polyline& poly, ChainDecomposition& d, bool index_points) {
  const AngularRanks& ranks = d.ranks;
  const std::size_t i = ranks.source;
  const std::size_t limit = ranks.limit;

  d.points.clear();
  d.chains.clear();
  d.points.reserve(limit - i + ranks.artificial.size());
  std::size_t a = 0;
  for (std::size_t u = i + 1; u <= limit; ++u) {
    d.points.push_back({CpKind::Real, u, ranks.rank[u]});
    while (a < ranks.artificial.size() && ranks.artificial[a].index == u) {
      d.points.push_back(ranks.artificial[a++]);
    }
  }

  auto close = [&](std::size_t first, std::size_t last, int dir) {
    Chain c;
    c.first = first;
    c.last = last;
    c.ascending = dir >= 0;
    c.lo = c.hi = d.points[first].key;
    c.max_index = 0;
    for (std::size_t k = first; k <= last; ++k) {
      c.lo = std::min(c.lo, d.points[k].key);
      c.hi = std::max(c.hi, d.points[k].key);
      if (d.points[k].kind == CpKind::Real) c.max_index = std::max(c.max_index, d.points[k].index);
    }
    d.chains.push_back(c);
  };

  std::size_t start = 0;
  int dir = 0;
  for (std::size_t k = 1; k < d.points.size(); ++k) {
    const ChainPoint& prev = d.points[k - 1];
    const ChainPoint& cur = d.points[k];
    if (prev.kind != CpKind::Real && cur.kind != CpKind::Real) {
      close(start, k - 1, dir);
      start = k;
      dir = 0;
      continue;
    }
    const int step = (cur.key > prev.key) - (cur.key < prev.key);
    if (step == 0) continue;
    if (dir != 0 && step != dir) {
      close(start, k - 1, dir);
      start = k - 1;
    }
    dir = step;
  }
  close(start, d.points.size() - 1, dir);

  d.chains_of.clear();
  if (!index_points) return;
  d.chains_of.assign(poly.size(), {kNoIndex, kNoIndex});
  for (std::size_t c = 0; c < d.chains.size(); ++c) {
    for (std::size_t k = d.chains[c].first; k <= d.chains[c].last; ++k) {
      if (d.points[k].kind != CpKind::Real) continue;
      auto& slot = d.chains_of[d.points[k].index];
      (slot[0] == kNoIndex ? slot[0] : slot[1]) = c;
    }
  }
}

ChainDecomposition decompose_chains(const Polyline& poly, AngularRanks ranks) {
  ChainDecomposition d;
  d.ranks = std::move(ranks);
  decompose_chains(poly, d);
  return d;
}

long point_topo(const ChainDecomposition& d, std::size_t j) {
  long best = 0;
  for (std::size_t c : d.chains_of[j]) {
    if (c == kNoIndex || d.chains[c].degenerate()) continue;
    const long t = d.chains[c].topo;
    if (best == 0 || t < best) best = t;
  }
  return best;
}

int chain_segment_crossing(const ChainDecomposition& d, const Chain& c, std::size_t j,
                           bool monotone) {
  const long key = d.ranks.rank[j];
  if (c.degenerate() || !(c.lo < key && key < c.hi) || c.max_index >= j) return 0;
  if (monotone) return 1;
  return c.topo < point_topo(d, j) ? 1 : 0;
}

}  // namespace polycross
