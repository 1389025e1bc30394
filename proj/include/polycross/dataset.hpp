#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polycross/geometry.hpp"

namespace polycross {

struct Dataset {
  std::vector<Point> rows;
  std::string provenance;
};

enum class NoiseModel { None, Normal, HeavyTailed };

// n points of y = x^2 + 10 sin(x) at equally spaced x in [-10, 10], both
// ends included.
Dataset gen_signal(std::size_t n);

// Indices that receive 10x noise under HeavyTailed: ceil(n / 10) of them,
// chosen by the seed, ascending.
std::vector<std::size_t> heavy_tail_indices(std::size_t n, std::uint64_t seed);

Dataset add_noise(const Dataset& d, NoiseModel model, std::uint64_t seed);

// Shortest decimal that reads back to the same double.
std::string format_double(double v);

Dataset parse_csv(std::string_view text, std::string provenance = "");
Dataset read_csv(const std::string& path);
std::string format_csv(const Dataset& d);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace polycross
