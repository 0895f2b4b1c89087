#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "bandlim/specfun.hpp"

using namespace bandlim;
using specfun::kPi;
using Complex = std::complex<double>;

namespace {

// Independent Euler-Mascheroni oracle: gamma = lim (H_n - ln n), Richardson
// over n and 2n kills the 1/(2n) term; Kahan summation keeps the harmonic
// sums at roundoff.
double euler_gamma_oracle() {
  auto harmonic = [](long n) {
    double s = 0.0, c = 0.0;
    for (long k = 1; k <= n; ++k) {
      const double y = 1.0 / static_cast<double>(k) - c;
      const double t = s + y;
      c = (t - s) - y;
      s = t;
    }
    return s;
  };
  const long n = 10'000'000;
  const double e1 = harmonic(n) - std::log(static_cast<double>(n));
  const double e2 = harmonic(2 * n) - std::log(static_cast<double>(2 * n));
  return 2.0 * e2 - e1;
}

// root of the J0 power series by bisection, independent of bessel_j0's
// branch selection
double j0_series_root(double lo, double hi) {
  auto f = [](double x) {
    return static_cast<double>(specfun::detail::j0_series(x));
  };
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo > 0) == (fm > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("digamma at the classical points") {
  const double gamma = euler_gamma_oracle();
  CHECK(std::fabs(gamma - 0.5772156649015329) < 1e-12);  // oracle sanity

  CHECK(std::fabs(specfun::digamma(1.0) + gamma) < 1e-12);
  CHECK(specfun::digamma(1.0) == Catch::Approx(-0.5772156649015329).margin(1e-14));

  // duplication: psi(1/2) = psi(1) - 2 ln 2
  const double want_half = specfun::digamma(1.0) - 2.0 * std::log(2.0);
  CHECK(std::fabs(specfun::digamma(0.5) - want_half) < 1e-13);
  CHECK(specfun::digamma(0.5) ==
        Catch::Approx(-1.9635100260214235).margin(1e-13));

  // recurrence: psi(2) = psi(1) + 1
  CHECK(std::fabs(specfun::digamma(2.0) - (1.0 - gamma)) < 1e-13);
}

TEST_CASE("digamma pole handling") {
  CHECK_THROWS_AS(specfun::digamma(0.0), specfun::PoleError);
  CHECK_THROWS_AS(specfun::digamma(-3.0), specfun::PoleError);
  try {
    specfun::digamma(Complex(-7.0, 0.0));
    FAIL("expected PoleError");
  } catch (const specfun::PoleError& e) {
    CHECK(e.index() == -7);
  }
}

TEST_CASE("digamma recurrence residual over the complex rectangle") {
  std::mt19937_64 gen(123);
  std::uniform_real_distribution<double> re(1.0, 100.0), im(-10.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex z(re(gen), im(gen));
    worst = std::max(worst, std::abs(specfun::digamma(z + 1.0) -
                                     specfun::digamma(z) - 1.0 / z));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("digamma reflection residual on (0,1)") {
  // reference cot with exact x - round(x) reduction, so the residual probes
  // digamma and not the reference's own cancellation
  auto pi_cot = [](double x) {
    const double u = x - std::nearbyint(x);
    return kPi * std::cos(kPi * u) / std::sin(kPi * u);
  };
  std::mt19937_64 gen(321);
  std::uniform_real_distribution<double> unit(1e-4, 1.0 - 1e-4);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = unit(gen);
    worst = std::max(worst, std::fabs(specfun::digamma(1.0 - x) -
                                      specfun::digamma(x) - pi_cot(x)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("digamma against high-precision references") {
  CHECK(std::fabs(specfun::digamma(-4.3) - 3.8529116001270069) < 1e-12);
  CHECK(std::fabs(specfun::digamma(30.5) - 3.4012436689616611) < 1e-13);
  const Complex v = specfun::digamma(Complex(1.5, 2.5));
  CHECK(std::abs(v - Complex(0.9863405662939009, 1.1861804687361432)) <
        1e-13);
}

TEST_CASE("bessel J0 basics") {
  CHECK(specfun::bessel_j0(0.0) == 1.0);

  const double j1 = j0_series_root(2.0, 3.0);
  CHECK(std::fabs(j1 - 2.404825557695773) < 1e-12);
  CHECK(std::fabs(specfun::bessel_j0(2.404825557695773)) < 1e-12);

  // leading asymptotic term at x = 100: the deviation relative to the
  // envelope sqrt(2/(pi x)) is the O(1/z) correction, about 1/(8x)
  const double amp = std::sqrt(2.0 / (kPi * 100.0));
  const double lead = amp * std::cos(100.0 - kPi / 4);
  const double v = specfun::bessel_j0(100.0);
  CHECK(std::fabs(v - lead) / amp < 2e-3);

  // high-precision pins across the branch regimes
  CHECK(std::fabs(v - 0.019985850304223122) < 1e-14);
  CHECK(std::fabs(specfun::bessel_j0(12.0) - 0.047689310796833537) < 1e-13);
  CHECK(std::fabs(specfun::bessel_j0(15.0) + 0.014224472826780773) < 1e-13);
  CHECK(std::fabs(specfun::bessel_j1(7.7) - 0.18131271532458798) < 1e-13);

  CHECK(specfun::bessel_j0(-5.5) == specfun::bessel_j0(5.5));
  CHECK(specfun::bessel_j1(-5.5) == -specfun::bessel_j1(5.5));
}

TEST_CASE("bessel series/asymptotic overlap agreement") {
  double worst0 = 0.0, worst1 = 0.0;
  for (double x = 12.5; x <= 16.0; x += 0.01) {
    const long double lx = x;
    worst0 = std::max(
        worst0, std::fabs(static_cast<double>(specfun::detail::j0_series(lx) -
                                              specfun::detail::jnu_asymptotic(0, lx))));
    worst1 = std::max(
        worst1, std::fabs(static_cast<double>(specfun::detail::j1_series(lx) -
                                              specfun::detail::jnu_asymptotic(1, lx))));
  }
  CHECK(worst0 < 1e-11);
  CHECK(worst1 < 1e-11);
}

TEST_CASE("bessel J0 satisfies its ODE") {
  double worst = 0.0;
  const double h = 1e-3;
  for (double x = 0.5; x <= 50.0; x += 0.123) {
    const double m2 = specfun::bessel_j0(x - 2 * h),
                 m1 = specfun::bessel_j0(x - h), c0 = specfun::bessel_j0(x),
                 p1 = specfun::bessel_j0(x + h),
                 p2 = specfun::bessel_j0(x + 2 * h);
    const double d1 = (m2 - 8 * m1 + 8 * p1 - p2) / (12 * h);
    const double d2 = (-m2 + 16 * m1 - 30 * c0 + 16 * p1 - p2) / (12 * h * h);
    worst = std::max(worst, std::fabs(d2 + d1 / x + c0));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("j0 zeros approach spacing pi") {
  for (int m = 30; m <= 40; ++m) {
    const double gap = specfun::j0_zero(m + 1) - specfun::j0_zero(m);
    CHECK(std::fabs(gap - kPi) < 1e-3);
  }
  CHECK(std::fabs(specfun::j0_zero(1) - 2.404825557695773) < 1e-12);
  CHECK(std::fabs(specfun::j0_zero(40) - 124.87930891323295) < 1e-11);
}

TEST_CASE("sinc values") {
  CHECK(specfun::sinc(0.0) == 1.0);
  CHECK(specfun::sinc(3.0) == 0.0);
  CHECK(specfun::sinc(-7.0) == 0.0);
  CHECK(specfun::sinc(0.5) == Catch::Approx(2.0 / kPi).margin(1e-15));
  // series branch continuity
  CHECK(std::fabs(specfun::sinc(1e-6) - (1.0 - kPi * kPi * 1e-12 / 6.0)) <
        1e-18);
}

TEST_CASE("tent values and the |sin| domination") {
  CHECK(specfun::tent(0.5) == 1.0);
  CHECK(specfun::tent(-3.0) == 0.0);
  CHECK(specfun::tent(0.25) == 0.5);
  CHECK(specfun::tent(0.0) == 0.0);
  CHECK(specfun::tent(1.0) == 0.0);

  // sum_n T(t+n) <= |sin(pi t)| on a dense grid
  double worst = -1.0;
  for (int i = 0; i <= 20000; ++i) {
    const double t = -2.0 + 4.0 * i / 20000.0;
    double s = 0.0;
    for (int n = -3; n <= 3; ++n) s += specfun::tent(t + n);
    worst = std::max(worst, s - std::fabs(std::sin(kPi * t)));
  }
  CHECK(worst <= 1e-12);
}
