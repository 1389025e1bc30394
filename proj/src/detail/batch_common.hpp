#pragma once

#include <cstddef>

#include "polycross/batch.hpp"

namespace polycross::detail {

// Labels filled and zero crossings for j in (i, limit].
void make_batch(const Polyline& poly, const TurnNeighbors& turn, std::size_t i, std::size_t limit,
                BatchResult& out);

std::size_t clamp_limit(const Polyline& poly, std::size_t i, std::size_t limit);

}  // namespace polycross::detail
