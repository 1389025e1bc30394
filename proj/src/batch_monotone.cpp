#include "detail/batch_common.hpp"
#include "detail/fenwick.hpp"
#include "polycross/batch.hpp"
#include "polycross/error.hpp"

namespace polycross {
namespace detail {

void make_batch(const Polyline& poly, const TurnNeighbors& turn, std::size_t i, std::size_t limit,
                BatchResult& out) {
  out.source = i;
  out.last = limit;
  out.crossings.assign(limit + 1, 0);
  out.start_label.assign(limit + 1, SideLabel::Collinear);
  out.end_label.assign(limit + 1, SideLabel::Collinear);
  for (std::size_t j = i + 1; j <= limit; ++j) {
    out.start_label[j] = label_junction(poly, turn, i, poly[j], JunctionEnd::StartOfOutgoing);
    out.end_label[j] = label_junction(poly, turn, j, poly[i], JunctionEnd::EndOfIncoming);
  }
}

std::size_t clamp_limit(const Polyline& poly, std::size_t i, std::size_t limit) {
  if (i + 1 >= poly.size()) throw Error(Errc::InvalidSubset, "source index has no successor");
  return (limit == kNoIndex || limit >= poly.size()) ? poly.size() - 1 : limit;
}

}  // namespace detail

void batch_crossings_monotone(const Polyline& poly, const TurnNeighbors& turn, std::size_t i,
                              std::size_t limit, BatchResult& out) {
  if (poly.kind() != PolylineKind::Monotone) {
    throw Error(Errc::NotMonotone, "monotone batch needs an x-monotone polyline");
  }
  limit = detail::clamp_limit(poly, i, limit);
  detail::make_batch(poly, turn, i, limit, out);
  thread_local ChainDecomposition d;
  angular_ranks(poly, i, limit, d.ranks);
  decompose_chains(poly, d, false);

  // With x increasing along P, chains close in index order.
  thread_local std::vector<std::size_t> closing;
  closing.assign(limit + 1, kNoIndex);
  for (std::size_t c = 0; c < d.chains.size(); ++c) {
    if (!d.chains[c].degenerate()) closing[d.chains[c].max_index] = c;
  }

  thread_local detail::StabbingCounter stab;
  stab.reset(static_cast<std::size_t>(d.ranks.high_key) + 1);
  for (std::size_t j = i + 1; j <= limit; ++j) {
    out.crossings[j] = stab.stab(static_cast<std::size_t>(d.ranks.rank[j]));
    if (closing[j] != kNoIndex) {
      const Chain& c = d.chains[closing[j]];
      stab.insert(static_cast<std::size_t>(c.lo + 1), static_cast<std::size_t>(c.hi - 1));
    }
  }
}

BatchResult batch_crossings_monotone(const Polyline& poly, const TurnNeighbors& turn,
                                     std::size_t i, std::size_t limit) {
  BatchResult out;
  batch_crossings_monotone(poly, turn, i, limit, out);
  return out;
}

}  // namespace polycross
