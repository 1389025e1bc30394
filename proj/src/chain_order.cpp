#include <gmpxx.h>

#include <deque>
#include <set>

#include "polycross/batch.hpp"
#include "polycross/error.hpp"

namespace polycross {
namespace {

struct Covering {
  std::size_t start;  // position in d.points of the lower-key end
  Point l0, l1;       // supporting line, directed towards increasing key
};

class Occlusion {
 public:
  Occlusion(const Polyline& poly, const ChainDecomposition& d) : poly_(poly), d_(d) {}

  // The chain piece spanning the directions just clockwise of key r.
  Covering covering(const Chain& c, long r) const {
    const std::size_t len = c.last - c.first + 1;
    auto at = [&](std::size_t q) { return c.ascending ? c.first + q : c.last - q; };
    std::size_t lo = 1, hi = len - 1;  // first oriented position with key > r
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (d_.points[at(mid)].key > r) hi = mid; else lo = mid + 1;
    }
    const std::size_t a = at(lo - 1);
    const std::size_t b = at(lo);
    const std::size_t u = d_.points[std::min(a, b)].index;
    Covering cov{a, poly_[u], poly_[u + 1]};
    if (!c.ascending) std::swap(cov.l0, cov.l1);
    return cov;
  }

  // Height above p_i where segment [p_u, p_{u+1}] crosses the vertical.
  mpq_class intercept(std::size_t u) const {
    const Point& a = poly_[u];
    const Point& b = poly_[u + 1];
    const mpq_class xi(poly_[d_.ranks.source].x);
    const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y);
    return ay + (by - ay) * (xi - ax) / (bx - ax);
  }

  bool nearer(std::size_t ia, std::size_t ib) const {
    if (ia == ib) return false;
    const Chain& a = d_.chains[ia];
    const Chain& b = d_.chains[ib];
    const long r = std::max(a.lo, b.lo);
    if (r == kLowKey) {
      const int cmp = cmp_intercepts(covering(a, r).start, covering(b, r).start);
      return cmp != 0 ? cmp < 0 : a.first < b.first;
    }
    // s starts at direction r; t already spans it.
    const bool a_is_s = a.lo == r;
    const Chain& s = a_is_s ? a : b;
    const Chain& t = a_is_s ? b : a;
    const Covering cs = covering(s, r);
    const Covering ct = covering(t, r);
    Orientation o = orientation(ct.l0, ct.l1, poly_[d_.points[cs.start].index]);
    if (o == Orientation::Collinear) o = orientation(ct.l0, ct.l1, cs.l1);
    if (o == Orientation::Collinear) {
      throw Error(Errc::Internal, "overlapping chains while ordering by occlusion");
    }
    const bool s_nearer = o == Orientation::Right;
    return a_is_s ? s_nearer : !s_nearer;
  }

 private:
  int cmp_intercepts(std::size_t pa, std::size_t pb) const {
    return cmp(intercept(d_.points[pa].index), intercept(d_.points[pb].index));
  }

  const Polyline& poly_;
  const ChainDecomposition& d_;
};

}  // namespace

ChainOrder topo_order_chains(const Polyline& poly, const ChainDecomposition& d) {
  const std::size_t nc = d.chains.size();
  const auto keys = static_cast<std::size_t>(d.ranks.high_key) + 1;
  std::vector<std::vector<std::size_t>> starts(keys), ends(keys);
  std::size_t live = 0;
  for (std::size_t c = 0; c < nc; ++c) {
    const Chain& ch = d.chains[c];
    if (ch.degenerate()) continue;
    starts[static_cast<std::size_t>(ch.lo)].push_back(c);
    ends[static_cast<std::size_t>(ch.hi)].push_back(c);
    ++live;
  }

  const Occlusion occ(poly, d);
  auto less = [&occ](std::size_t a, std::size_t b) { return occ.nearer(a, b); };
  std::set<std::size_t, decltype(less)> active(less);
  std::vector<std::set<std::size_t, decltype(less)>::iterator> where(nc, active.end());

  ChainOrder out;
  for (std::size_t key = 0; key < keys; ++key) {
    for (std::size_t c : ends[key]) {
      auto it = where[c];
      if (it != active.begin() && std::next(it) != active.end()) {
        out.edges.emplace_back(*std::prev(it), *std::next(it));
      }
      active.erase(it);
    }
    for (std::size_t c : starts[key]) {
      auto [it, inserted] = active.insert(c);
      if (!inserted) throw Error(Errc::Internal, "chain compared equal to another chain");
      where[c] = it;
      if (it != active.begin()) out.edges.emplace_back(*std::prev(it), c);
      if (std::next(it) != active.end()) out.edges.emplace_back(c, *std::next(it));
    }
  }

  std::vector<std::size_t> indegree(nc, 0);
  std::vector<std::vector<std::size_t>> succ(nc);
  for (const auto& [from, to] : out.edges) {
    succ[from].push_back(to);
    ++indegree[to];
  }
  std::deque<std::size_t> ready;
  for (std::size_t c = 0; c < nc; ++c) {
    if (!d.chains[c].degenerate() && indegree[c] == 0) ready.push_back(c);
  }
  while (!ready.empty()) {
    const std::size_t c = ready.front();
    ready.pop_front();
    out.order.push_back(c);
    for (std::size_t s : succ[c]) {
      if (--indegree[s] == 0) ready.push_back(s);
    }
  }
  if (out.order.size() != live) {
    throw Error(Errc::Internal, "occlusion order between chains has a cycle");
  }
  return out;
}

void assign_topo(ChainDecomposition& d, const ChainOrder& order) {
  for (auto& c : d.chains) c.topo = 0;
  for (std::size_t k = 0; k < order.order.size(); ++k) {
    d.chains[order.order[k]].topo = static_cast<long>(k) + 1;
  }
}

}  // namespace polycross
