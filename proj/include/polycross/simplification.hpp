#pragma once

#include <cstddef>
#include <vector>

#include "polycross/junction.hpp"

namespace polycross {

struct Simplification {
  std::vector<std::size_t> indices;  // strictly increasing, first 0 and last n-1
  long chi = 0;
  SideLabel end_label = SideLabel::Collinear;

  std::size_t size() const noexcept { return indices.size(); }

  friend bool operator==(const Simplification&, const Simplification&) = default;
};

// Throws InvalidSubset unless indices are strictly increasing and start at 0
// and end at n-1.
void validate_subset(std::size_t n, const std::vector<std::size_t>& indices);

}  // namespace polycross
