#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "polycross/polyline.hpp"
#include "polycross/simplification.hpp"

namespace polycross {

enum class SolverMode { Auto, Monotone, Simple };

struct SolverConfig {
  // Longest allowed segment: j - i <= max_span - 1. Must be at least 2.
  std::optional<std::size_t> max_span;
  SolverMode mode = SolverMode::Auto;
};

struct DPState {
  static constexpr long kUnreached = std::numeric_limits<long>::min();

  long chi = kUnreached;
  std::size_t size = 0;
  std::size_t beta = 0;  // predecessor index
  SideLabel tau = SideLabel::Collinear;  // predecessor label

  bool reached() const noexcept { return chi != kUnreached; }
};

class DPStateTable {
 public:
  explicit DPStateTable(std::size_t n) : n_(n), states_(3 * n) {}

  std::size_t size() const noexcept { return n_; }
  DPState& at(SideLabel s, std::size_t i) { return states_[slot(s, i)]; }
  const DPState& at(SideLabel s, std::size_t i) const { return states_[slot(s, i)]; }

 private:
  // The three labels of one index sit next to each other.
  static std::size_t slot(SideLabel s, std::size_t i) noexcept {
    return 3 * i + static_cast<std::size_t>(s) - 1;
  }

  std::size_t n_;
  std::vector<DPState> states_;
};

inline constexpr std::array<SideLabel, 3> kAllLabels = {SideLabel::Collinear, SideLabel::Left,
                                                        SideLabel::Right};

// Fills the state table. Throws NotMonotone when the monotone engine is forced
// on other input, InvalidSubset for max_span < 2.
DPStateTable run_dp(const Polyline& poly, const SolverConfig& cfg = {});

// Best final label: most crossings, then fewest points, then label order.
SideLabel select_final_label(const DPStateTable& table);

// Follows predecessor links back to index 0. Throws UnreachableState.
Simplification reconstruct(const DPStateTable& table, SideLabel sigma_max);

Simplification simplify(const Polyline& poly, const SolverConfig& cfg = {});

}  // namespace polycross
