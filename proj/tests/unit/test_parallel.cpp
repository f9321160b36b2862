#include <doctest.h>

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qgevrey/parallel.hpp"
#include "qgevrey/qlaplace.hpp"

using namespace qgevrey;

namespace {

FormalSeries q_gevrey_geometric(const QBase& base, double s, int order) {
  FormalSeries u(order, 1);
  for (int p = 0; p < order; ++p)
    u.set(p, lc_make(s * base.log_q() * (static_cast<double>(p) * (p - 1.0) / 2.0), 0.0));
  return u;
}

}  // namespace

TEST_SUITE("parallel") {

TEST_CASE("for_each_index covers every index once") {
  std::vector<std::atomic<int>> hits(257);
  par::for_each_index(hits.size(), true, [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("exceptions propagate out of the parallel region") {
  CHECK_THROWS_AS(par::for_each_index(64, true,
                                      [&](std::size_t i) {
                                        if (i == 13) throw std::runtime_error("boom");
                                      }),
                  std::runtime_error);
}

TEST_CASE("openmp grid evaluation is bit-identical to the serial reference") {
  const QBase base(2.0);
  const FormalSeries u = q_gevrey_geometric(base, 1.0, 12);
  SectorGrid grid;
  grid.r_min = 1e-3;
  grid.r_max = 0.1;
  grid.n_r = 6;
  grid.half_opening = 0.8 * std::numbers::pi;
  grid.n_arg = 7;

  const SectorialFunction serial = q_sum(u, base, 1.0, std::numbers::pi, geometric(), grid, 1e-8, false);
  const SectorialFunction parallel = q_sum(u, base, 1.0, std::numbers::pi, geometric(), grid, 1e-8, true);

  REQUIRE(serial.samples.size() == parallel.samples.size());
  for (std::size_t i = 0; i < serial.samples.size(); ++i) {
    CHECK(serial.samples[i].value.log_mag == parallel.samples[i].value.log_mag);
    CHECK(serial.samples[i].value.phase == parallel.samples[i].value.phase);
    CHECK(serial.samples[i].quad.nodes == parallel.samples[i].quad.nodes);
  }
}

}  // TEST_SUITE
