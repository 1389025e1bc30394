#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polycross/geometry.hpp"
#include "polycross/random.hpp"

// Random instance families used by tests, the acceptance runner and `bench`.
namespace polycross::instances {

// x = running sum of gaps in [1, 3], y uniform integer in [-y_range, y_range].
// Small integer values make collinear triples and ties common.
std::vector<Point> random_monotone(std::size_t n, RandomStream& rng, int y_range = 5);

// Self-avoiding random walk on a small integer grid whose x is not monotone.
// The chain is simple before merging; collinear runs are allowed.
std::vector<Point> random_simple(std::size_t n, RandomStream& rng);

// Jittered outward spiral around the origin: simple, far from monotone, and
// every source sees many chains.
std::vector<Point> spiral(std::size_t n, RandomStream& rng);

// The parabola-sine signal plus standard normal noise.
std::vector<Point> noisy_signal(std::size_t n, RandomStream& rng);

}  // namespace polycross::instances
