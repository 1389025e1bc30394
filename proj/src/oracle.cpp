#include "polycross/oracle.hpp"

#include <string>

#include "polycross/error.hpp"

namespace polycross {

void validate_subset(std::size_t n, const std::vector<std::size_t>& indices) {
  if (indices.size() < 2 || indices.front() != 0 || indices.back() + 1 != n) {
    throw Error(Errc::InvalidSubset, "subset must contain the first and last point");
  }
  for (std::size_t k = 1; k < indices.size(); ++k) {
    if (indices[k - 1] >= indices[k]) {
      throw Error(Errc::InvalidSubset, "subset indices must be strictly increasing");
    }
  }
}

namespace oracle {

long sign_changes(std::span<const int> signs) {
  long changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<int> residual_signs(const Polyline& poly, const std::vector<std::size_t>& indices) {
  if (poly.kind() != PolylineKind::Monotone) {
    throw Error(Errc::NotMonotone, "residual signs need an x-monotone polyline");
  }
  validate_subset(poly.size(), indices);
  std::vector<int> signs(poly.size(), 0);
  for (std::size_t t = 0; t + 1 < indices.size(); ++t) {
    const Point& a = poly[indices[t]];
    const Point& b = poly[indices[t + 1]];
    for (std::size_t k = indices[t] + 1; k < indices[t + 1]; ++k) {
      signs[k] = sign_of(orientation(a, b, poly[k]));
    }
  }
  return signs;
}

long crossing_measure_monotone(const Polyline& poly, const std::vector<std::size_t>& indices) {
  const auto signs = residual_signs(poly, indices);
  return sign_changes(signs);
}

long segment_crossings(const Polyline& poly, std::size_t i, std::size_t j) {
  const Point& a = poly[i];
  const Point& b = poly[j];
  long count = 0;
  std::size_t last = 0;
  int last_sign = 0;
  for (std::size_t k = i + 1; k < j; ++k) {
    const int s = sign_of(orientation(a, b, poly[k]));
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      bool inside = false;
      if (k == last + 1) {
        // The step crosses the supporting line; check where.
        const Orientation oa = orientation(poly[last], poly[k], a);
        const Orientation ob = orientation(poly[last], poly[k], b);
        inside = oa != Orientation::Collinear && ob == -oa;
      } else {
        // P ran along the line in between; all of that run is on the same
        // side of the segment's endpoints, so one point decides.
        inside = strictly_between(a, b, poly[last + 1]);
      }
      if (inside) ++count;
    }
    last = k;
    last_sign = s;
  }
  return count;
}

Simplification evaluate(const Polyline& poly, const TurnNeighbors& turn,
                        const std::vector<std::size_t>& indices) {
  validate_subset(poly.size(), indices);
  Simplification out;
  out.indices = indices;
  SideLabel sigma = SideLabel::Collinear;
  for (std::size_t t = 0; t + 1 < indices.size(); ++t) {
    const std::size_t i = indices[t];
    const std::size_t j = indices[t + 1];
    const SideLabel start = label_junction(poly, turn, i, poly[j], JunctionEnd::StartOfOutgoing);
    const SideLabel end = label_junction(poly, turn, j, poly[i], JunctionEnd::EndOfIncoming);
    out.chi += segment_crossings(poly, i, j) + eta(sigma, start);
    sigma = psi(sigma, end);
  }
  out.end_label = sigma;
  return out;
}

long crossing_measure_general(const Polyline& poly, const std::vector<std::size_t>& indices) {
  return evaluate(poly, compute_turn_neighbors(poly.points()), indices).chi;
}

Simplification bruteforce_optimal(const Polyline& poly, std::size_t cap) {
  const std::size_t n = poly.size();
  if (n > cap) {
    throw Error(Errc::TooLarge, "brute force is capped at " + std::to_string(cap) + " points");
  }
  const TurnNeighbors turn = compute_turn_neighbors(poly.points());
  const std::size_t interior = n - 2;
  Simplification best;
  bool have = false;
  std::vector<std::size_t> subset;
  for (unsigned long mask = 0; mask < (1UL << interior); ++mask) {
    subset.clear();
    subset.push_back(0);
    for (std::size_t b = 0; b < interior; ++b) {
      if (mask & (1UL << b)) subset.push_back(b + 1);
    }
    subset.push_back(n - 1);
    Simplification s = evaluate(poly, turn, subset);
    if (!have || s.chi > best.chi || (s.chi == best.chi && s.size() < best.size())) {
      best = std::move(s);
      have = true;
    }
  }
  return best;
}

}  // namespace oracle
}  // namespace polycross
