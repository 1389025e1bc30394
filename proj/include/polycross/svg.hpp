#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polycross/geometry.hpp"

namespace polycross {

struct Envelope {
  std::vector<double> x;
  std::vector<double> median;
  std::vector<double> lower;
  std::vector<double> upper;
};

// Input polyline, its simplification and, optionally, bootstrap envelopes,
// each as its own <path>. Output bytes depend only on the arguments.
std::string render_svg(std::span<const Point> input, std::span<const Point> simplified,
                       const std::optional<Envelope>& envelope = std::nullopt);

}  // namespace polycross
