#include "polycross/solver.hpp"

#include <algorithm>
#include <string>

#include "polycross/batch.hpp"
#include "polycross/error.hpp"

namespace polycross {

DPStateTable run_dp(const Polyline& poly, const SolverConfig& cfg) {
  const std::size_t n = poly.size();
  if (n < 2) throw Error(Errc::TooFewPoints, "a polyline needs at least 2 points");
  if (cfg.max_span && *cfg.max_span < 2) {
    throw Error(Errc::InvalidSubset, "max span must be at least 2");
  }
  bool monotone = poly.kind() == PolylineKind::Monotone;
  if (cfg.mode == SolverMode::Monotone && !monotone) {
    throw Error(Errc::NotMonotone, "monotone mode needs x strictly increasing");
  }
  if (cfg.mode == SolverMode::Simple) monotone = false;

  const TurnNeighbors turn = compute_turn_neighbors(poly.points());
  DPStateTable table(n);
  table.at(SideLabel::Collinear, 0) = {0, 1, 0, SideLabel::Collinear};

  BatchResult batch;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t limit = cfg.max_span ? std::min(n - 1, i + *cfg.max_span - 1) : n - 1;
    if (monotone) {
      batch_crossings_monotone(poly, turn, i, limit, batch);
    } else {
      batch_crossings_simple(poly, turn, i, limit, batch);
    }
    // j outside sigma keeps the table accesses local. Proposals into one
    // state still arrive in (i, sigma) order, so ties resolve as before.
    std::array<DPState, 3> from;
    for (SideLabel sigma : kAllLabels) from[static_cast<std::size_t>(sigma) - 1] = table.at(sigma, i);
    for (std::size_t j = i + 1; j <= limit; ++j) {
      for (SideLabel sigma : kAllLabels) {
        const DPState& f = from[static_cast<std::size_t>(sigma) - 1];
        if (!f.reached()) continue;
        const long chi = f.chi + batch.crossings[j] + eta(sigma, batch.start_label[j]);
        const std::size_t size = f.size + 1;
        DPState& to = table.at(psi(sigma, batch.end_label[j]), j);
        if (chi > to.chi || (chi == to.chi && size < to.size)) to = {chi, size, i, sigma};
      }
    }
  }
  return table;
}

SideLabel select_final_label(const DPStateTable& table) {
  const std::size_t last = table.size() - 1;
  SideLabel best = SideLabel::Collinear;
  bool have = false;
  for (SideLabel s : kAllLabels) {
    const DPState& st = table.at(s, last);
    if (!st.reached()) continue;
    const DPState& cur = table.at(best, last);
    if (!have || st.chi > cur.chi || (st.chi == cur.chi && st.size < cur.size)) {
      best = s;
      have = true;
    }
  }
  if (!have) throw Error(Errc::UnreachableState, "no state reaches the last point");
  return best;
}

Simplification reconstruct(const DPStateTable& table, SideLabel sigma_max) {
  std::size_t i = table.size() - 1;
  SideLabel s = sigma_max;
  const DPState& final_state = table.at(s, i);
  if (!final_state.reached()) throw Error(Errc::UnreachableState, "final state was never reached");

  Simplification out;
  out.chi = final_state.chi;
  out.end_label = sigma_max;
  out.indices.push_back(i);
  while (i != 0) {
    const DPState& st = table.at(s, i);
    if (!st.reached() || st.beta >= i) {
      throw Error(Errc::UnreachableState, "broken predecessor link at index " + std::to_string(i));
    }
    i = st.beta;
    s = st.tau;
    out.indices.push_back(i);
  }
  std::reverse(out.indices.begin(), out.indices.end());
  if (out.indices.size() != final_state.size) {
    throw Error(Errc::UnreachableState, "predecessor chain disagrees with the stored size");
  }
  return out;
}

Simplification simplify(const Polyline& poly, const SolverConfig& cfg) {
  const DPStateTable table = run_dp(poly, cfg);
  return reconstruct(table, select_final_label(table));
}

}  // namespace polycross
