#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polycross/geometry.hpp"
#include "polycross/polyline.hpp"

namespace polycross {

// I: left cone, II: right cone, III: on the ray back along the incoming
// segment, IV: on the ray along the outgoing segment.
enum class Region { I, II, III, IV };

enum class SideLabel : int { Collinear = 1, Left = 2, Right = 3 };

enum class JunctionEnd { EndOfIncoming, StartOfOutgoing };

struct TurnNeighbors {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // prev[i]: largest k < i with p_k off the line through p_{i-1}, p_i.
  // next[i]: smallest k > i with p_k off the line through p_i, p_{i+1}.
  std::vector<std::size_t> prev;
  std::vector<std::size_t> next;
};

TurnNeighbors compute_turn_neighbors(std::span<const Point> raw);

// Throws DegenerateWedge when p_prev, p_at, p_next are collinear.
Region classify_region(const Point& p_prev, const Point& p_at, const Point& p_next,
                       const Point& q);

// Side label of a simplification segment at the polyline vertex i, where
// q_other is the other endpoint of that segment.
SideLabel label_junction(const Polyline& poly, const TurnNeighbors& turn, std::size_t i,
                         const Point& q_other, JunctionEnd which);

constexpr int eta(SideLabel end_label, SideLabel start_label) noexcept {
  return (end_label == SideLabel::Left && start_label == SideLabel::Right) ||
                 (end_label == SideLabel::Right && start_label == SideLabel::Left)
             ? 1
             : 0;
}

constexpr SideLabel psi(SideLabel prev_end, SideLabel new_end) noexcept {
  return new_end == SideLabel::Collinear ? prev_end : new_end;
}

}  // namespace polycross
