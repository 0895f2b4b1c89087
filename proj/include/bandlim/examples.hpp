#pragma once

// Closed-form reference functions: G1(z) = sin(pi z) psi(-z), the dyadic sine
// sum G3, the Boche-Moenich sample sequence, and seeded uniform-noise
// realizations G2.  These serve as oracles for the interpolation series and
// as subjects for the analysis functionals.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bandlim/grid.hpp"
#include "bandlim/interp.hpp"
#include "bandlim/rng.hpp"
#include "bandlim/specfun.hpp"

namespace bandlim::examples {

using Complex = std::complex<double>;
using specfun::kEulerGamma;
using specfun::kPi;

namespace detail {
// psi(-z) has poles at z = k >= 0; within this distance of them G1 is
// evaluated by the Laurent-times-Taylor expansion of the product.
inline constexpr double kG1NearRadius = 1e-3;

template <class V>
V eval_g1_impl(V z) {
  const double re = std::real(Complex(z));
  const double k_real = std::nearbyint(re);
  if (k_real >= 0.0 && std::abs(z - V(k_real)) < kG1NearRadius) {
    // around z = k >= 0:  psi(-z) = 1/w + (H_k - gamma) - q_k w + O(w^2),
    // sin(pi z) = (-1)^k (pi w - (pi w)^3/6 + ...),  w = z - k.
    const long k = static_cast<long>(k_real);
    double hk = 0.0, qk = kPi * kPi / 6.0;
    for (long m = 1; m <= k; ++m) {
      hk += 1.0 / static_cast<double>(m);
      qk += 1.0 / (static_cast<double>(m) * static_cast<double>(m));
    }
    const V w = z - V(k_real);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const V psi_part = (hk - kEulerGamma) * w - qk * w * w;  // w * (psi - 1/w)
    const V sin_series = V(1.0) - (kPi * w) * (kPi * w) / 6.0;
    return sign * kPi * sin_series * (V(1.0) + psi_part);
  }
  return std::sin(kPi * z) * specfun::digamma(-z);
}
}  // namespace detail

/// G1(z) = sin(pi z) psi(-z); removable singularities at z = k >= 0 give
/// (-1)^k pi, and G1 vanishes at negative integers.
inline Complex eval_g1(Complex z) { return detail::eval_g1_impl(z); }
inline double eval_g1(double t) {
  const double k = std::nearbyint(t);
  if (k >= 0.0 && std::fabs(t - k) < detail::kG1NearRadius)
    return std::real(detail::eval_g1_impl(Complex(t, 0.0)));
  if (k < 0.0 && t == k) return 0.0;
  return std::sin(kPi * t) * specfun::digamma(-t);
}

/// The C-free part of the Gauss half-integer identity:
/// (-1)^k (sum_{m=1}^{k-1} 1/m + sum_{m=k}^{2k-1} 2/m).
inline double gauss_reference(long k) {
  if (k < 1) throw std::invalid_argument("gauss_reference: k >= 1");
  double s = 0.0;
  for (long m = 1; m < k; ++m) s += 1.0 / static_cast<double>(m);
  for (long m = k; m <= 2 * k - 1; ++m) s += 2.0 / static_cast<double>(m);
  return (k % 2 == 0) ? s : -s;
}

/// G3(z) = sum_{k>=0} (-1)^k sin(pi z / (3 2^k)), truncated once the
/// remaining terms are bounded by tol (|sin w| <= |w| tail estimate).
template <class V>
V eval_g3(V z, double tol = 1e-12) {
  if (!(tol > 0)) throw std::invalid_argument("eval_g3: tol > 0");
  const double mag = std::abs(Complex(z));
  const double im = std::fabs(std::imag(Complex(z)));
  V sum = V(0);
  double scale = 1.0 / 3.0;
  double sign = 1.0;
  for (int k = 0; k < 2048; ++k) {
    sum += sign * std::sin(kPi * scale * z);
    sign = -sign;
    scale *= 0.5;
    const double tail = kPi * mag * 2.0 * scale * std::exp(kPi * im * scale);
    if (tail <= tol) break;
  }
  return sum;
}

/// Boche-Moenich data on the window [-K, K]: a_k = 0 for k < 1,
/// a_k = (-1)^k / log(k+1) for k >= 1; extra sample (1/2, 0).
inline interp::AugmentedSamples boche_monich_samples(long K) {
  if (K < 1) throw std::invalid_argument("boche_monich_samples: K >= 1");
  auto g = grid::uniform_grid(1.0, K, 0.5);
  std::vector<double> a(g.size(), 0.0);
  for (long k = 1; k <= K; ++k) {
    const double v = 1.0 / std::log(static_cast<double>(k + 1));
    a[static_cast<std::size_t>(k + K)] = (k % 2 == 0) ? v : -v;
  }
  return interp::AugmentedSamples::make(g, std::move(a), 0.0);
}

/// The grid that boche_monich_samples is aligned to.
inline grid::SamplingGrid boche_monich_grid(long K) {
  return grid::uniform_grid(1.0, K, 0.5);
}

/// One realization of i.i.d. uniform[-alpha, alpha] data on [-K, K] plus the
/// extra draw; deterministic in (seed, stream).
inline interp::AugmentedSamples g2_realization(double alpha, rng::u64 seed,
                                               long K, rng::u64 stream = 0) {
  if (!(alpha >= 0)) throw std::invalid_argument("g2_realization: alpha >= 0");
  auto g = grid::uniform_grid(1.0, K, 0.5);
  rng::SampleStream st(seed, stream);
  std::vector<double> a(g.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = st.uniform_symmetric(alpha, static_cast<rng::u64>(i));
  const double at =
      st.uniform_symmetric(alpha, static_cast<rng::u64>(a.size()));
  return interp::AugmentedSamples::make(g, std::move(a), at);
}

inline grid::SamplingGrid g2_grid(long K) {
  return grid::uniform_grid(1.0, K, 0.5);
}

}  // namespace bandlim::examples
