#include "detail/batch_common.hpp"
#include "detail/fenwick.hpp"
#include "polycross/batch.hpp"
#include "polycross/error.hpp"

namespace polycross {

void batch_crossings_simple(const Polyline& poly, const TurnNeighbors& turn, std::size_t i,
                            std::size_t limit, BatchResult& out) {
  limit = detail::clamp_limit(poly, i, limit);
  detail::make_batch(poly, turn, i, limit, out);
  thread_local ChainDecomposition d;
  angular_ranks(poly, i, limit, d.ranks);
  decompose_chains(poly, d);
  assign_topo(d, topo_order_chains(poly, d));

  const auto keys = static_cast<std::size_t>(d.ranks.high_key) + 1;
  std::vector<std::vector<std::size_t>> starts(keys), ends(keys), queries(keys);
  std::vector<std::pair<std::size_t, std::size_t>> pts;
  for (std::size_t c = 0; c < d.chains.size(); ++c) {
    const Chain& ch = d.chains[c];
    if (ch.degenerate()) continue;
    starts[static_cast<std::size_t>(ch.lo)].push_back(c);
    ends[static_cast<std::size_t>(ch.hi)].push_back(c);
    pts.emplace_back(static_cast<std::size_t>(ch.topo), ch.max_index);
  }
  for (std::size_t j = i + 1; j <= limit; ++j) {
    queries[static_cast<std::size_t>(d.ranks.rank[j])].push_back(j);
  }

  detail::DominanceCounter active(pts.size(), pts);
  for (std::size_t key = 0; key < keys; ++key) {
    for (std::size_t c : ends[key]) {
      active.add(static_cast<std::size_t>(d.chains[c].topo), d.chains[c].max_index, -1);
    }
    for (std::size_t j : queries[key]) {
      const long t = point_topo(d, j);
      if (t == 0) {
        if (j != i + 1) throw Error(Errc::Internal, "point outside every chain");
        continue;
      }
      out.crossings[j] = active.count_less(static_cast<std::size_t>(t), j);
    }
    for (std::size_t c : starts[key]) {
      active.add(static_cast<std::size_t>(d.chains[c].topo), d.chains[c].max_index, 1);
    }
  }
}

BatchResult batch_crossings_simple(const Polyline& poly, const TurnNeighbors& turn,
                                   std::size_t i, std::size_t limit) {
  BatchResult out;
  batch_crossings_simple(poly, turn, i, limit, out);
  return out;
}

}  // namespace polycross
