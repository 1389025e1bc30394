#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <new>

#include "polycross/instances.hpp"
#include "polycross/solver.hpp"

namespace {

// Every block carries its size in a header so that deletes can be counted.
constexpr std::size_t kHeader = alignof(std::max_align_t);

std::atomic<std::size_t> g_live{0};
std::atomic<std::size_t> g_peak{0};

void* counted_alloc(std::size_t size) {
  void* raw = std::malloc(size + kHeader);
  if (!raw) throw std::bad_alloc();
  *static_cast<std::size_t*>(raw) = size;
  const std::size_t now = g_live.fetch_add(size) + size;
  std::size_t peak = g_peak.load();
  while (now > peak && !g_peak.compare_exchange_weak(peak, now)) {
  }
  return static_cast<char*>(raw) + kHeader;
}

void counted_free(void* p) noexcept {
  if (!p) return;
  void* raw = static_cast<char*>(p) - kHeader;
  g_live.fetch_sub(*static_cast<std::size_t*>(raw));
  std::free(raw);
}

}  // namespace

void* operator new(std::size_t size) { return counted_alloc(size); }
void* operator new[](std::size_t size) { return counted_alloc(size); }
void operator delete(void* p) noexcept { counted_free(p); }
void operator delete[](void* p) noexcept { counted_free(p); }
void operator delete(void* p, std::size_t) noexcept { counted_free(p); }
void operator delete[](void* p, std::size_t) noexcept { counted_free(p); }

namespace polycross {
namespace {

// Peak heap bytes used while solving, beyond what was live before.
std::size_t peak_while_solving(const Polyline& p, SolverMode mode) {
  SolverConfig cfg;
  cfg.mode = mode;
  const std::size_t base = g_live.load();
  g_peak.store(base);
  const Simplification q = simplify(p, cfg);
  EXPECT_GE(q.size(), 2u);
  return g_peak.load() - base;
}

void expect_near_linear(SolverMode mode, const std::vector<Point>& small,
                        const std::vector<Point>& large) {
  const Polyline a = prepare_polyline(small);
  const Polyline b = prepare_polyline(large);
  const double ratio_n = static_cast<double>(b.size()) / static_cast<double>(a.size());
  const double pa = static_cast<double>(peak_while_solving(a, mode));
  const double pb = static_cast<double>(peak_while_solving(b, mode));
  // Quadratic growth would give ratio_n squared; allow a log factor on top of
  // linear for the per-batch counting structure.
  EXPECT_LT(pb / pa, 1.5 * ratio_n) << pa << " -> " << pb << " bytes";
  EXPECT_LT(pb / static_cast<double>(b.size()), 4096.0);
}

TEST(Memory, MonotonePeakGrowsLinearly) {
  RandomStream rng(1, 0);
  const auto small = instances::noisy_signal(400, rng);
  const auto large = instances::noisy_signal(1600, rng);
  expect_near_linear(SolverMode::Monotone, small, large);
}

TEST(Memory, SimplePeakGrowsLinearly) {
  RandomStream rng(2, 0);
  const auto small = instances::spiral(200, rng);
  const auto large = instances::spiral(800, rng);
  expect_near_linear(SolverMode::Simple, small, large);
}

}  // namespace
}  // namespace polycross
