#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <vector>

#include "polycross/polyline.hpp"

namespace polycross {

// Angles are measured clockwise from the upward vertical at p_i. The ray is
// tilted an infinitesimal amount counter-clockwise, so a point straight above
// p_i comes first and a segment ending there may still cross the ray.
//
// Keys: artificial low points use 0, real points their dense rank 1..R, and
// artificial high points n+1.
inline constexpr long kLowKey = 0;

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

enum class CpKind : unsigned char { Real, ArtLow, ArtHigh };

struct ChainPoint {
  CpKind kind = CpKind::Real;
  // Real: the P index. Artificial: u for the crossing segment [p_u, p_{u+1}],
  // i.e. the pseudo-index u + 1/2.
  std::size_t index = 0;
  long key = 0;

  double pseudo_index() const noexcept {
    return kind == CpKind::Real ? static_cast<double>(index) : static_cast<double>(index) + 0.5;
  }
};

struct AngularRanks {
  std::size_t source = 0;
  std::size_t limit = 0;       // last P index considered
  std::vector<long> rank;      // per P index; 0 at or before the source
  long high_key = 0;           // n + 1
  std::vector<ChainPoint> artificial;
};

struct Chain {
  std::size_t first = 0;  // position of the first chain point in ChainDecomposition::points
  std::size_t last = 0;   // position of the last chain point (inclusive)
  long lo = 0;
  long hi = 0;
  std::size_t max_index = 0;  // largest real P index in the chain
  bool ascending = true;      // keys non-decreasing along P's direction
  long topo = 0;              // set by the simple batch engine; 0 until then

  bool degenerate() const noexcept { return lo == hi; }
};

struct ChainDecomposition {
  AngularRanks ranks;
  std::vector<ChainPoint> points;  // P_{i+1..limit} with artificial splits, in P order
  std::vector<Chain> chains;
  // For each P index, the (at most two) chains containing it. Left empty
  // when decompose_chains is asked not to build it.
  std::vector<std::array<std::size_t, 2>> chains_of;
};

// Exact clockwise comparison of directions a - o and b - o.
bool angle_less(const Point& o, const Point& a, const Point& b);

// limit defaults to the last point.
AngularRanks angular_ranks(const Polyline& poly, std::size_t i, std::size_t limit = kNoIndex);

ChainDecomposition decompose_chains(const Polyline& poly, AngularRanks ranks);

// In-place forms that reuse the buffers already held by out, for callers that
// run one source index after another. decompose_chains reads d.ranks.
void angular_ranks(const Polyline& poly, std::size_t i, std::size_t limit, AngularRanks& out);
void decompose_chains(const Polyline& poly, ChainDecomposition& d, bool index_points = true);

// 1 iff the chain properly crosses the open segment p_i p_j, decided from rank
// intervals and, for simple input, the chain's topological position relative
// to p_j's chains. Monotone input needs no topological order.
int chain_segment_crossing(const ChainDecomposition& d, const Chain& c, std::size_t j,
                           bool monotone);

// Smallest topo value among the non-degenerate chains containing p_j, or 0.
long point_topo(const ChainDecomposition& d, std::size_t j);

}  // namespace polycross
