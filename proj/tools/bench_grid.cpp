// Benchmark of the serial reference vs the OpenMP grid kernels on the two
// data-parallel workloads: the q-summation sampling grid and the theta
// batch sampling used by the verification suites.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <vector>

#include "qgevrey/continuation.hpp"
#include "qgevrey/parallel.hpp"
#include "qgevrey/qlaplace.hpp"
#include "qgevrey/theta.hpp"

using namespace qgevrey;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

FormalSeries q_gevrey_geometric_series(const QBase& base, double s, int order) {
  FormalSeries u(order, 1);
  for (int p = 0; p < order; ++p)
    u.set(p, lc_make(s * base.log_q() * (static_cast<double>(p) * (p - 1.0) / 2.0), 0.0));
  return u;
}

double bench_qsum(bool parallel) {
  const QBase base(2.0);
  const FormalSeries u = q_gevrey_geometric_series(base, 1.0, 16);
  const ContinuableFunction g = geometric();
  SectorGrid grid;
  grid.r_min = 1e-3;
  grid.r_max = 0.1;
  grid.n_r = 10;
  grid.half_opening = 0.8 * std::numbers::pi;
  grid.n_arg = 13;
  const double t0 = now_seconds();
  const SectorialFunction f = q_sum(u, base, 1.0, std::numbers::pi, g, grid, 1e-8, parallel);
  const double t1 = now_seconds();
  std::printf("  qsum grid  (%3zu points, %s): %7.3f s\n", f.samples.size(),
              parallel ? "openmp" : "serial", t1 - t0);
  return t1 - t0;
}

double bench_theta(bool parallel) {
  const ThetaParams params(2.0, 1.0, 1e-12);
  const int n = 4000;
  std::vector<LogComplex> pts(n);
  for (int i = 0; i < n; ++i)
    pts[i] = lc_make(std::log(0.1) + (i % 97) * 0.05, -3.0 + (i % 89) * 0.07);
  std::vector<double> out(n);
  const double t0 = now_seconds();
  par::for_each_index(pts.size(), parallel, [&](std::size_t i) {
    if (spiral_clearance(pts[i], params) < 0.02) {
      out[i] = 0.0;
      return;
    }
    out[i] = theta_eval(pts[i], params).value.log_mag;
  });
  const double t1 = now_seconds();
  std::printf("  theta batch (%d points, %s): %7.3f s\n", n, parallel ? "openmp" : "serial",
              t1 - t0);
  return t1 - t0;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", par::max_threads());

  std::printf("q-Laplace sampling grid:\n");
  const double qs_serial = bench_qsum(false);
  const double qs_par = bench_qsum(true);
  std::printf("  speedup: %.2fx\n", qs_serial / qs_par);

  std::printf("theta sampling batch:\n");
  const double th_serial = bench_theta(false);
  const double th_par = bench_theta(true);
  std::printf("  speedup: %.2fx\n", th_serial / th_par);
  return 0;
}
