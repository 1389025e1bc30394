#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polycross/geometry.hpp"

namespace polycross {

enum class PolylineKind { Monotone, Simple };
enum class InputClass { Monotone, Simple, NotSimple };

// Where a raw input point ended up after collinear merging.
struct CollinearSlot {
  std::size_t merged = 0;  // merged vertex index, or start of the merged segment
  bool is_vertex = true;   // false: strictly inside segment [merged, merged + 1]

  friend bool operator==(const CollinearSlot&, const CollinearSlot&) = default;
};

// An immutable polyline of pairwise distinct points with no three consecutive
// points collinear. Indices are 0-based.
class Polyline {
 public:
  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
  PolylineKind kind() const noexcept { return kind_; }

  // True when the raw input had strictly decreasing x and was reversed.
  bool reversed() const noexcept { return reversed_; }

  // Index into the caller's raw sequence for merged vertex i.
  std::size_t source_index(std::size_t i) const noexcept { return source_index_[i]; }

  // One entry per raw input point (in the caller's order).
  std::span<const CollinearSlot> collinear_map() const noexcept { return collinear_map_; }

 private:
  friend Polyline merge_collinear(std::span<const Point> raw);
  friend Polyline prepare_polyline(std::span<const Point> raw);

  std::vector<Point> points_;
  std::vector<std::size_t> source_index_;
  std::vector<CollinearSlot> collinear_map_;
  PolylineKind kind_ = PolylineKind::Simple;
  bool reversed_ = false;
};

// Monotone when x is strictly increasing, or strictly decreasing (callers
// reverse it); Simple when no two segments meet improperly; else NotSimple.
InputClass classify_input(std::span<const Point> points);

bool strictly_increasing_x(std::span<const Point> points) noexcept;
bool strictly_decreasing_x(std::span<const Point> points) noexcept;

// O(n^2) exact check that the chain has no improper self-contact.
bool is_simple_chain(std::span<const Point> points);

// Removes interior points of maximal collinear runs, keeps endpoints.
// Throws DuplicatePoint, NonFiniteValue, TooFewPoints; NotSimple when the
// merged chain self-intersects.
Polyline merge_collinear(std::span<const Point> raw);

// Full input pipeline: validation, reversal of strictly decreasing input,
// collinear merging and classification.
Polyline prepare_polyline(std::span<const Point> raw);

}  // namespace polycross
