#include "polycross/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "polycross/error.hpp"
#include "polycross/random.hpp"

namespace polycross {

Dataset gen_signal(std::size_t n) {
  if (n < 2) throw Error(Errc::TooFewPoints, "the signal needs at least 2 points");
  Dataset d;
  d.rows.reserve(n);
  const double last = static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = (20.0 * static_cast<double>(k) - 10.0 * last) / last;
    d.rows.push_back({x, x * x + 10.0 * std::sin(x)});
  }
  d.provenance = "parabola-sine n=" + std::to_string(n);
  return d;
}

std::vector<std::size_t> heavy_tail_indices(std::size_t n, std::uint64_t seed) {
  const std::size_t count = (n + 9) / 10;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  RandomStream rng(seed, 1);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(rng.below(n - k));
    std::swap(idx[k], idx[pick]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

Dataset add_noise(const Dataset& d, NoiseModel model, std::uint64_t seed) {
  Dataset out = d;
  if (model == NoiseModel::None) return out;
  const std::size_t n = out.rows.size();
  std::vector<double> scale(n, 1.0);
  if (model == NoiseModel::HeavyTailed) {
    for (std::size_t k : heavy_tail_indices(n, seed)) scale[k] = 10.0;
  }
  RandomStream rng(seed, 0);
  for (std::size_t k = 0; k < n; ++k) out.rows[k].y += scale[k] * rng.normal();
  out.provenance += std::string(model == NoiseModel::Normal ? " +normal" : " +heavy") +
                    " seed=" + std::to_string(seed);
  return out;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view field, double& out) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), out);
  return res.ec == std::errc() && res.ptr == field.data() + field.size();
}

}  // namespace

Dataset parse_csv(std::string_view text, std::string provenance) {
  Dataset d;
  d.provenance = std::move(provenance);
  std::size_t line_no = 0;
  bool seen_data = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    const std::string_view fx = comma == std::string_view::npos ? line : line.substr(0, comma);
    const std::string_view fy = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
    double x = 0.0, y = 0.0;
    const bool okx = parse_number(fx, x);
    const bool oky = comma != std::string_view::npos && fy.find(',') == std::string_view::npos &&
                     parse_number(fy, y);
    if (!okx && !oky && !seen_data && d.rows.empty() && comma != std::string_view::npos) {
      seen_data = true;  // header row
      continue;
    }
    if (!okx || !oky) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected x,y", line_no);
    }
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(Errc::NonFiniteValue, "line " + std::to_string(line_no) + ": value is not finite",
                  line_no);
    }
    seen_data = true;
    d.rows.push_back({x, y});
  }
  if (d.rows.size() < 2) throw Error(Errc::TooFewPoints, "input has fewer than 2 rows");
  return d;
}

Dataset read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileNotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str(), path);
}

std::string format_csv(const Dataset& d) {
  std::string out = "x,y\n";
  for (const Point& p : d.rows) {
    out += format_double(p.x);
    out += ',';
    out += format_double(p.y);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::FileNotFound, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace polycross
