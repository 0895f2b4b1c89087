#pragma once

// Special functions needed by the interpolation and analysis code:
// digamma (complex), Bessel J0/J1 on the real line, normalized sinc,
// and the unit tent function.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bandlim::specfun {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

/// Per-evaluation accuracy record: which regime fired and the error target it
/// is believed to meet.
struct AccuracyBudget {
  double abs_tol = 1e-12;
  const char* method_tag = "";
};

/// Thrown when digamma is evaluated at one of its poles (z = 0, -1, -2, ...).
class PoleError : public std::domain_error {
 public:
  explicit PoleError(long k)
      : std::domain_error("digamma pole at nonpositive integer " +
                          std::to_string(k)),
        index_(k) {}
  long index() const { return index_; }

 private:
  long index_;
};

namespace detail {

// B_{2n}/(2n) for the asymptotic series of psi.
inline constexpr std::array<double, 8> kDigammaAsympCoef = {
    1.0 / 12.0,   -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,  -691.0 / 32760.0,   1.0 / 12.0,  -3617.0 / 8160.0};

// Asymptotic zone threshold: with 8 Bernoulli terms the first omitted term is
// below 1e-15 once Re z >= 12.
inline constexpr double kDigammaAsympEdge = 12.0;

template <class T>
T digamma_asymptotic(T z) {
  const T inv = 1.0 / z;
  const T inv2 = inv * inv;
  T sum = std::log(z) - 0.5 * inv;
  T p = inv2;
  for (double c : kDigammaAsympCoef) {
    sum -= c * p;
    p *= inv2;
  }
  return sum;
}

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::nearbyint(x);
}

// cot(pi x) with the argument reduced to x - round(x) first; the reduction is
// exact in floating point, which keeps the value accurate near integers where
// naive pi*x loses the small residual.
inline double cot_pi(double x) {
  const double u = x - std::nearbyint(x);
  return std::cos(kPi * u) / std::sin(kPi * u);
}
inline Complex cot_pi(Complex z) {
  const Complex u = z - std::nearbyint(z.real());
  return std::cos(kPi * u) / std::sin(kPi * u);
}

// Power series, evaluated in extended precision. Good to ~1e-15 for |x|<=12.
inline long double j0_series(long double x) {
  const long double q = x * x / 4.0L;
  long double term = 1.0L, sum = 1.0L;
  for (int m = 1; m <= 80; ++m) {
    term *= -q / (static_cast<long double>(m) * m);
    sum += term;
    if (std::fabs(term) < 1e-22L * (1.0L + std::fabs(sum))) break;
  }
  return sum;
}

inline long double j1_series(long double x) {
  const long double q = x * x / 4.0L;
  long double term = x / 2.0L, sum = term;
  for (int m = 1; m <= 80; ++m) {
    term *= -q / (static_cast<long double>(m) * (m + 1));
    sum += term;
    if (std::fabs(term) < 1e-22L * (1.0L + std::fabs(sum))) break;
  }
  return sum;
}

// Hankel asymptotic expansion for J_nu, nu = 0 or 1, at a FIXED order (30
// coefficients).  A fixed truncation keeps the error a smooth function of x,
// which matters for finite-difference consumers; near the handover point the
// omitted-term size is ~1e-14.
inline long double jnu_asymptotic(int nu, long double x) {
  const long double fournu2 = 4.0L * nu * nu;
  long double a = 1.0L;     // a_k
  long double xpow = 1.0L;  // x^{-k}
  long double p = 0.0L, q = 0.0L;
  for (int k = 0; k < 30; ++k) {
    const long double term = a * xpow;
    if (k % 2 == 0)
      p += ((k / 2) % 2 == 0) ? term : -term;
    else
      q += (((k - 1) / 2) % 2 == 0) ? term : -term;
    a *= (fournu2 - (2.0L * k + 1.0L) * (2.0L * k + 1.0L)) /
         (8.0L * (k + 1.0L));
    xpow /= x;
  }
  const long double omega =
      x - (nu == 0 ? 0.25L : 0.75L) * 3.141592653589793238462643383279503L;
  const long double amp =
      std::sqrt(2.0L / (3.141592653589793238462643383279503L * x));
  return amp * (std::cos(omega) * p - std::sin(omega) * q);
}

// Series/asymptotic handover: pure series below, pure expansion above, and a
// C^1 smoothstep blend across [14.5, 15.5] so the evaluation error stays
// smooth through the switch.
inline constexpr long double kBesselBlendLo = 14.5L;
inline constexpr long double kBesselBlendHi = 15.5L;

inline long double jnu_blended(int nu, long double ax) {
  if (ax <= kBesselBlendLo)
    return nu == 0 ? j0_series(ax) : j1_series(ax);
  if (ax >= kBesselBlendHi) return jnu_asymptotic(nu, ax);
  const long double u = (ax - kBesselBlendLo) / (kBesselBlendHi - kBesselBlendLo);
  const long double s = u * u * (3.0L - 2.0L * u);
  const long double lo = nu == 0 ? j0_series(ax) : j1_series(ax);
  return (1.0L - s) * lo + s * jnu_asymptotic(nu, ax);
}

}  // namespace detail

/// psi(z) = Gamma'(z)/Gamma(z).  Upward recurrence pushes the argument into
/// the asymptotic zone Re z >= 12; arguments left of the imaginary axis are
/// reflected first.  Throws PoleError at nonpositive integers.
inline Complex digamma(Complex z, AccuracyBudget* budget = nullptr) {
  if (z.imag() == 0.0 && detail::is_nonpositive_integer(z.real()))
    throw PoleError(static_cast<long>(z.real()));
  if (budget) *budget = {1e-12, "recurrence+asymptotic"};

  Complex reflect_term = 0.0;
  if (z.real() < 0.0) {
    // psi(z) = psi(1-z) - pi*cot(pi*z)
    reflect_term = -kPi * detail::cot_pi(z);
    z = 1.0 - z;
    if (budget) budget->method_tag = "reflection+recurrence+asymptotic";
  }
  Complex acc = 0.0;
  while (z.real() < detail::kDigammaAsympEdge) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  return detail::digamma_asymptotic(z) + acc + reflect_term;
}

/// Real-axis digamma (same algorithm, real arithmetic).
inline double digamma(double x, AccuracyBudget* budget = nullptr) {
  if (detail::is_nonpositive_integer(x)) throw PoleError(static_cast<long>(x));
  if (budget) *budget = {1e-12, "recurrence+asymptotic"};

  double reflect_term = 0.0;
  if (x < 0.0) {
    reflect_term = -kPi * detail::cot_pi(x);
    x = 1.0 - x;
    if (budget) budget->method_tag = "reflection+recurrence+asymptotic";
  }
  double acc = 0.0;
  while (x < detail::kDigammaAsympEdge) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  return detail::digamma_asymptotic(x) + acc + reflect_term;
}

/// J0 on the real line: extended-precision power series up to the handover
/// near 15, Hankel expansion beyond.
inline double bessel_j0(double x) {
  const long double ax = std::fabs(static_cast<long double>(x));
  return static_cast<double>(detail::jnu_blended(0, ax));
}

/// J1 on the real line (J0' = -J1).
inline double bessel_j1(double x) {
  const long double ax = std::fabs(static_cast<long double>(x));
  const double v = static_cast<double>(detail::jnu_blended(1, ax));
  return x < 0 ? -v : v;
}

/// m-th positive zero of J0 (m >= 1), bracketed by the McMahon asymptotic
/// approximation and bisected to 1e-13.
inline double j0_zero(int m) {
  if (m < 1) throw std::invalid_argument("j0_zero: m must be >= 1");
  const double beta = (m - 0.25) * kPi;
  double lo = beta - 0.3, hi = beta + 0.3;
  double flo = bessel_j0(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = bessel_j0(mid);
    if ((flo > 0) == (fm > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13) break;
  }
  return 0.5 * (lo + hi);
}

/// sin(pi t)/(pi t) with the removable singularity; exactly 0 at nonzero
/// integers and exactly 1 at 0.
inline double sinc(double t) {
  if (t == std::nearbyint(t)) return t == 0.0 ? 1.0 : 0.0;
  const double w = kPi * t;
  if (std::fabs(w) < 1e-5) return 1.0 - w * w / 6.0;
  return std::sin(w) / w;
}

inline Complex sinc(Complex t) {
  const Complex w = kPi * t;
  if (std::abs(w) < 1e-5) return 1.0 - w * w / 6.0;
  return std::sin(w) / w;
}

/// Unit tent: 2t on (0,1/2], 2-2t on (1/2,1], zero elsewhere.
inline double tent(double t) {
  if (t > 0.0 && t <= 0.5) return 2.0 * t;
  if (t > 0.5 && t <= 1.0) return 2.0 - 2.0 * t;
  return 0.0;
}

}  // namespace bandlim::specfun
