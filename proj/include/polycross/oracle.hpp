#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polycross/polyline.hpp"
#include "polycross/simplification.hpp"

// Slow reference implementations. Everything here is quadratic or worse on
// purpose and is meant for tests, debugging and the `oracle` subcommand.
namespace polycross::oracle {

// Entries are -1, 0, +1.
long sign_changes(std::span<const int> signs);

// Residual sign at every point of a monotone P against the piecewise linear Q.
std::vector<int> residual_signs(const Polyline& poly, const std::vector<std::size_t>& indices);

long crossing_measure_monotone(const Polyline& poly, const std::vector<std::size_t>& indices);

// Proper side changes of P_{i..j} against the open segment p_i p_j.
long segment_crossings(const Polyline& poly, std::size_t i, std::size_t j);

// Per-segment walks plus the junction crossings, labels propagated along Q.
Simplification evaluate(const Polyline& poly, const TurnNeighbors& turn,
                        const std::vector<std::size_t>& indices);

long crossing_measure_general(const Polyline& poly, const std::vector<std::size_t>& indices);

inline constexpr std::size_t kDefaultBruteForceCap = 14;

// Exhaustive search: maximum chi, then minimum size, first witness in
// enumeration order. Throws TooLarge above the cap.
Simplification bruteforce_optimal(const Polyline& poly,
                                  std::size_t cap = kDefaultBruteForceCap);

}  // namespace polycross::oracle
