#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polycross/chains.hpp"
#include "polycross/junction.hpp"
#include "polycross/polyline.hpp"

namespace polycross {

struct BatchResult {
  std::size_t source = 0;
  std::size_t last = 0;  // largest j computed
  // Indexed by j; only entries source < j <= last are meaningful.
  std::vector<long> crossings;
  std::vector<SideLabel> start_label;  // label of S_{i,j} at p_i
  std::vector<SideLabel> end_label;    // label of S_{i,j} at p_j
};

struct ChainOrder {
  std::vector<std::size_t> order;  // chain ids, nearest first
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (nearer, farther)
};

// Linear extension of the "nearer to p_i" relation between chains that share
// a direction. Degenerate chains are left out. Throws Internal on a cycle.
ChainOrder topo_order_chains(const Polyline& poly, const ChainDecomposition& d);

// Writes topo = 1 + position in the order.
void assign_topo(ChainDecomposition& d, const ChainOrder& order);

// limit bounds j (defaults to n - 1).
BatchResult batch_crossings_monotone(const Polyline& poly, const TurnNeighbors& turn,
                                     std::size_t i, std::size_t limit = kNoIndex);

BatchResult batch_crossings_simple(const Polyline& poly, const TurnNeighbors& turn,
                                   std::size_t i, std::size_t limit = kNoIndex);

// Same, writing into out and reusing its storage.
void batch_crossings_monotone(const Polyline& poly, const TurnNeighbors& turn, std::size_t i,
                              std::size_t limit, BatchResult& out);
void batch_crossings_simple(const Polyline& poly, const TurnNeighbors& turn, std::size_t i,
                            std::size_t limit, BatchResult& out);

}  // namespace polycross
