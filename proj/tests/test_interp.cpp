#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "bandlim/examples.hpp"
#include "bandlim/grid.hpp"
#include "bandlim/interp.hpp"
#include "bandlim/rng.hpp"
#include "bandlim/specfun.hpp"

using namespace bandlim;
using interp::AugmentedSamples;
using specfun::kPi;
using Complex = std::complex<double>;

namespace {
std::vector<double> lattice(double a, double b, double dt) {
  std::vector<double> pts;
  for (double t = a; t <= b + 1e-12; t += dt) pts.push_back(t);
  return pts;
}
}  // namespace

TEST_CASE("cardinal series: single and zero data") {
  std::vector<double> delta(11, 0.0);
  delta[5] = 1.0;  // a_0 = 1 on the window [-5, 5]
  const auto pts = lattice(-3.0, 3.0, 0.37);
  auto r = interp::interpolate_uniform(delta, 1.0, pts, 1e-12);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(std::fabs(r.values[i] - specfun::sinc(pts[i])) < 1e-15);

  std::vector<double> zero(11, 0.0);
  auto rz = interp::interpolate_uniform(zero, 1.0, pts, 1e-12);
  for (double v : rz.values) CHECK(v == 0.0);
}

TEST_CASE("cardinal series reconstructs a shifted sinc slowly") {
  const long K = 2000;
  std::vector<double> a(2 * K + 1);
  for (long k = -K; k <= K; ++k)
    a[static_cast<std::size_t>(k + K)] = specfun::sinc(k - 0.5);
  const std::vector<double> pt = {0.5};
  // tol budgets the engine's own ring truncation; the l2 mass beyond the
  // data window (about 2/(pi^2 K) = 1e-4) comes on top of it
  auto r = interp::interpolate_uniform(a, 1.0, pt, 5e-4);
  CHECK(std::fabs(r.values[0] - 1.0) < 1e-3);
  CHECK(r.summary.attained());
  CHECK(r.summary.terms_used < static_cast<long>(a.size()));  // ring stop
}

TEST_CASE("lp series on the uniform grid is the cardinal series bit for bit") {
  const long K = 300;
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> a(2 * K + 1);
  for (auto& v : a) v = unif(gen) / 3.0;

  auto g = grid::uniform_grid(1.0, K);
  auto s = grid::generating_function(g);
  const auto pts = lattice(-20.0, 20.0, 0.21);
  auto r1 = interp::interpolate_uniform(a, 1.0, pts, 1e-9);
  auto r2 = interp::interpolate_lp(g, s, a, pts, 1e-9, 2.0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(r1.values[i] == r2.values[i]);
    CHECK(r1.terms_used[i] == r2.terms_used[i]);
  }
}

TEST_CASE("lp series on the bessel grid: one-sample cardinal behavior") {
  auto g = grid::bessel_grid(0.1, 12);
  auto s = grid::generating_function(g);
  std::vector<double> a(g.size(), 0.0);
  const std::size_t k0 = g.size() / 2 + 1;
  a[k0] = 1.0;

  // node reproduction of the delta data
  std::vector<double> node_pts;
  for (std::size_t i = 0; i < g.size(); ++i) node_pts.push_back(g.node(i));
  auto r = interp::interpolate_lp(g, s, a, node_pts, 1e-10);
  for (std::size_t i = 0; i < node_pts.size(); ++i)
    CHECK(std::fabs(r.values[i] - a[i]) < 1e-9);

  // continuity across the supported node (the near-node limit form kicks in
  // inside lambda/100; no jump between the branches)
  const double x0 = g.node(k0);
  const auto dense = lattice(x0 - 0.04, x0 + 0.04, 1e-3);
  auto rd = interp::interpolate_lp(g, s, a, dense, 1e-10);
  for (std::size_t i = 1; i < rd.values.size(); ++i)
    CHECK(std::fabs(rd.values[i] - rd.values[i - 1]) < 5e-2);
  double peak = 0;
  for (double v : rd.values) peak = std::max(peak, std::fabs(v));
  CHECK(peak > 0.99);
}

TEST_CASE("lp self-consistency under window growth") {
  auto data_at = [](long k) { return 1.0 / (1.0 + double(k) * double(k)); };
  const std::vector<double> pt = {0.3};
  double vals[2];
  int wi = 0;
  for (long K : {500L, 2000L}) {
    auto g = grid::uniform_grid(1.0, K);
    auto s = grid::generating_function(g);
    std::vector<double> a(2 * K + 1);
    for (long k = -K; k <= K; ++k) a[k + K] = data_at(k);
    vals[wi++] = interp::interpolate_lp(g, s, a, pt, 1e-10).values[0];
  }
  CHECK(std::fabs(vals[0] - vals[1]) < 1e-5);
}

TEST_CASE("tail bound closed form") {
  auto g = grid::uniform_grid(1.0, 5000);
  const double b100 = interp::tail_bound(g, Complex(0.0, 0.0), 100.0, 0.5);
  const double b200 = interp::tail_bound(g, Complex(0.0, 0.0), 200.0, 0.5);
  CHECK(b100 == Catch::Approx(std::fabs(std::log((99.5 * 100.0) /
                                                 (100.0 * 100.5)))));
  CHECK(b200 / b100 == Catch::Approx(0.5).margin(0.01));
  CHECK(interp::tail_bound(g, Complex(0.5, 0.0), 100.0, 0.5) == 0.0);
  CHECK(interp::tail_bound(g, Complex(0.0, 0.0), 4000.0, 0.5) < 3e-4);
  CHECK_THROWS_AS(interp::tail_bound(g, Complex(99.5, 0.0), 100.0, 0.5),
                  std::invalid_argument);
}

TEST_CASE("augmented series with only the extra sample is c sin(pi z)") {
  auto g = grid::uniform_grid(1.0, 50, 0.5);
  auto s = grid::generating_function(g);
  auto samples = AugmentedSamples::make(g, std::vector<double>(g.size(), 0.0),
                                        1.0);
  const auto pts = lattice(-5.0, 5.0, 0.13);
  auto r = interp::interpolate_bounded(g, s, samples, pts, 1e-9);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(std::fabs(r.values[i] - std::sin(kPi * pts[i])) < 1e-14);

  interp::Interpolant ip(g, s, samples, interp::SeriesKind::kAugmented);
  CHECK(ip.eval_one(0.5) == 1.0);  // f(x_tilde) = a_tilde exactly
  CHECK(std::fabs(ip.eval_one(0.25) - std::sin(kPi * 0.25)) < 1e-14);
}

TEST_CASE("augmented series reproduces random bounded data at the nodes") {
  const long K = 200;
  auto g = grid::uniform_grid(1.0, K, 0.5);
  auto s = grid::generating_function(g);
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    auto samples = examples::g2_realization(1.0, 99, K, rep);
    interp::Interpolant ip(g, s, samples, interp::SeriesKind::kAugmented);
    for (long k = -160; k <= 160; ++k) {
      const double v = ip.eval_one(static_cast<double>(k));
      worst = std::max(worst,
                       std::fabs(v - samples.values[k + K]));
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("two extra values differ by a multiple of S") {
  const long K = 150;
  auto g = grid::uniform_grid(1.0, K, 0.5);
  auto s = grid::generating_function(g);
  auto base = examples::g2_realization(0.5, 7, K);
  auto s1 = AugmentedSamples::make(g, base.values, 0.7);
  auto s2 = AugmentedSamples::make(g, base.values, -0.4);
  interp::Interpolant f1(g, s, s1, interp::SeriesKind::kAugmented);
  interp::Interpolant f2(g, s, s2, interp::SeriesKind::kAugmented);
  const double c = (0.7 - (-0.4)) / s.eval_real(0.5);
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> unif(-100.0, 100.0);
  for (int i = 0; i < 100; ++i) {
    const double t = unif(gen);
    const double want = c * s.eval_real(t);
    CHECK(std::fabs(f1.eval_one(t) - f2.eval_one(t) - want) < 1e-9);
  }
}

TEST_CASE("boche-monich interpolant grows through doublings of the window") {
  const long K = 600;
  auto g = examples::boche_monich_grid(K);
  auto s = grid::generating_function(g);
  interp::Interpolant ip(g, s, examples::boche_monich_samples(K),
                         interp::SeriesKind::kAugmented);
  double prev = 0.0;
  for (double r : {50.0, 100.0, 200.0, 400.0}) {
    double sup = 0.0;
    for (double t = -r; t <= 0.0; t += 0.1)
      sup = std::max(sup, std::fabs(ip.eval_one(t)));
    CHECK(sup > prev);
    prev = sup;
  }
}

TEST_CASE("augmented series converges to G1 as the window grows") {
  // one-sided data (-1)^k pi for k >= 0 with a_tilde pinning f at x_t = -1/2;
  // the window tail behaves like |z - x_t|/K
  const long Kp = 200000, Km = 100;
  auto g = grid::uniform_grid_window(1.0, -Km, Kp, -0.5);
  auto s = grid::generating_function(g);
  std::vector<double> a(g.size(), 0.0);
  for (long k = 0; k <= Kp; ++k)
    a[static_cast<std::size_t>(k + Km)] = (k % 2 == 0) ? kPi : -kPi;
  const double at = examples::eval_g1(-0.5);
  auto samples = AugmentedSamples::make(g, std::move(a), at);

  const auto pts = lattice(-20.0, 20.0, 0.1);
  auto r = interp::interpolate_bounded(g, s, samples, pts, 1e-9);
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    worst = std::max(worst,
                     std::fabs(r.values[i] - examples::eval_g1(pts[i])));
  CHECK(worst < 1.3e-4);
  CHECK(worst > 1e-6);  // the finite window is visible at this K
}

TEST_CASE("augmented series structural errors") {
  auto g_no_extra = grid::uniform_grid(1.0, 10);
  auto s = grid::generating_function(g_no_extra);
  auto samples = AugmentedSamples::make(
      g_no_extra, std::vector<double>(g_no_extra.size(), 0.0), std::nullopt);
  CHECK_THROWS_AS(interp::Interpolant(g_no_extra, s, samples,
                                      interp::SeriesKind::kAugmented),
                  std::invalid_argument);

  auto g = grid::uniform_grid(1.0, 10, 0.5);
  auto s2 = grid::generating_function(g);
  auto samples2 =
      AugmentedSamples::make(g, std::vector<double>(g.size(), 0.0), 1.0);
  interp::Interpolant ip(g, s2, samples2, interp::SeriesKind::kAugmented);
  CHECK_THROWS_AS(ip.eval_one(9.5), std::invalid_argument);  // beyond 0.8 K

  // requesting an unattainable tolerance flags the report instead of lying
  const std::vector<double> pt = {1.3};
  auto r = interp::interpolate_bounded(g, s2, samples2, pt, 1e-12);
  CHECK_FALSE(r.summary.attained());
  CHECK(r.summary.tail_bound > 1e-12);
}

TEST_CASE("real data give real values and agree with the complex path") {
  const long K = 80;
  auto g = grid::uniform_grid(1.0, K, 0.5);
  auto s = grid::generating_function(g);
  auto samples = examples::g2_realization(0.5, 31, K);
  interp::Interpolant ip(g, s, samples, interp::SeriesKind::kAugmented);
  for (double t : {0.3, 7.7, -12.2, 41.9}) {
    const Complex zv = ip.eval_one(Complex(t, 0.0));
    CHECK(zv.imag() == 0.0);
    CHECK(std::fabs(zv.real() - ip.eval_one(t)) < 1e-12);
  }
}

TEST_CASE("log-growth envelope stays bounded across radii") {
  const long K = 12500;
  auto g = grid::uniform_grid(1.0, K, 0.5);
  auto s = grid::generating_function(g);
  auto samples = examples::g2_realization(1.0, 404, K);
  // normalize to norm_inf exactly 1
  std::vector<double> a = samples.values;
  double m = samples.norm_inf;
  for (auto& v : a) v /= m;
  auto normed = AugmentedSamples::make(g, a, *samples.extra_value / m);
  interp::Interpolant ip(g, s, normed, interp::SeriesKind::kAugmented);

  const double c100 = interp::log_growth_envelope(ip, 100.0, 0.47);
  const double c1000 = interp::log_growth_envelope(ip, 1000.0, 0.47);
  const double c10000 = interp::log_growth_envelope(ip, 10000.0, 0.47);
  CHECK(c1000 < 1.5 * c100);
  CHECK(c10000 < 1.5 * c100);
}

TEST_CASE("extra-value calibration helpers") {
  const long K = 400;
  auto g = grid::uniform_grid(1.0, K, 0.5);
  auto s = grid::generating_function(g);

  // pin a target value at a non-node point
  std::vector<double> a(g.size(), 0.0);
  for (long k = -K; k <= K; ++k)
    a[k + K] = specfun::sinc(k - 0.25) * 0.8;
  const double at = interp::calibrate_extra_value(g, s, a, 3.3, 1.23456);
  auto samples = AugmentedSamples::make(g, a, at);
  interp::Interpolant ip(g, s, samples, interp::SeriesKind::kAugmented);
  CHECK(std::fabs(ip.eval_one(3.3) - 1.23456) < 1e-10);

  // choosing a_tilde from the lp series makes the two series coincide
  const double at2 = interp::extra_value_from_lp(g, s, a);
  auto samples2 = AugmentedSamples::make(g, a, at2);
  interp::Interpolant aug(g, s, samples2, interp::SeriesKind::kAugmented);
  const auto pts = lattice(-30.0, 30.0, 1.7);
  auto lp = interp::interpolate_lp(g, s, a, pts, 1e-12);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(std::fabs(aug.eval_one(pts[i]) - lp.values[i]) < 1e-6);
}
