#pragma once

// Numerical functionals on lattice-sampled functions: running averages, a
// lower-bound BMO seminorm estimator over a sliding interval family, the
// Carleson square functional for analytic derivatives given as exponential
// sums, a principal-value Hilbert transform, the kernel K(c,t) with its
// closed-form Hilbert transform, and a central-difference derivative sup.
// Quadrature is composite trapezoid throughout.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bandlim/specfun.hpp"

namespace bandlim::analysis {

using Complex = std::complex<double>;
using specfun::kPi;

/// Complex values on a uniform evaluation lattice t0 + i*dt, i = 0..n-1.
struct SampledFunction {
  double t0 = 0;
  double dt = 0;
  std::vector<Complex> values;
  std::string provenance;

  std::size_t size() const { return values.size(); }
  double t(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
  double span() const { return dt * static_cast<double>(size() - 1); }

  void validate() const {
    if (values.size() < 2 || !(dt > 0))
      throw std::invalid_argument("SampledFunction: need n >= 2 and dt > 0");
    for (const auto& v : values)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument("SampledFunction: non-finite value");
  }

  static SampledFunction sample(const std::function<double(double)>& fn,
                                double t0, double dt, std::size_t n,
                                std::string provenance = "") {
    SampledFunction f;
    f.t0 = t0;
    f.dt = dt;
    f.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.values[i] = fn(t0 + dt * i);
    f.provenance = std::move(provenance);
    f.validate();
    return f;
  }
  static SampledFunction sample_complex(
      const std::function<Complex(double)>& fn, double t0, double dt,
      std::size_t n, std::string provenance = "") {
    SampledFunction f;
    f.t0 = t0;
    f.dt = dt;
    f.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.values[i] = fn(t0 + dt * i);
    f.provenance = std::move(provenance);
    f.validate();
    return f;
  }
};

namespace detail {
// trapezoid of |values| over stored index range [i0, i1]
inline double trapezoid_abs(const SampledFunction& f, std::size_t i0,
                            std::size_t i1) {
  double acc = 0.5 * (std::abs(f.values[i0]) + std::abs(f.values[i1]));
  for (std::size_t i = i0 + 1; i < i1; ++i) acc += std::abs(f.values[i]);
  return acc * f.dt;
}
inline Complex trapezoid(const SampledFunction& f, std::size_t i0,
                         std::size_t i1) {
  Complex acc = 0.5 * (f.values[i0] + f.values[i1]);
  for (std::size_t i = i0 + 1; i < i1; ++i) acc += f.values[i];
  return acc * f.dt;
}
}  // namespace detail

/// (1/2r) int_{-r}^{r} |f| for each radius; the lattice must be symmetric
/// about 0 and the radii must stay inside it.
inline std::vector<std::pair<double, double>> running_average(
    const SampledFunction& f, const std::vector<double>& radii) {
  f.validate();
  if (std::fabs(f.t0 + f.t(f.size() - 1)) > 1e-6 * f.dt + 1e-12)
    throw std::invalid_argument("running_average: lattice not symmetric");
  const std::size_t ic = static_cast<std::size_t>(std::llround(-f.t0 / f.dt));
  std::vector<std::pair<double, double>> out;
  out.reserve(radii.size());
  for (double r : radii) {
    const long ir = std::llround(r / f.dt);
    if (ir < 1 || ic < static_cast<std::size_t>(ir) ||
        ic + ir >= f.size())
      throw std::invalid_argument("running_average: radius exceeds lattice");
    const double v = detail::trapezoid_abs(f, ic - ir, ic + ir);
    out.emplace_back(r, v / (2.0 * r));
  }
  return out;
}

struct BmoEstimate {
  double seminorm = 0;
  double witness_a = 0;
  double witness_len = 0;
  std::vector<double> scales_tested;
  int offsets_per_scale = 0;
};

/// Lower-bound estimator of the BMO seminorm over a finite family of
/// intervals: for each scale, `offsets` sliding windows; reports the max of
/// (1/|I|) int_I |f - mean_I f| and the witness interval.
inline BmoEstimate bmo_seminorm(const SampledFunction& f,
                                const std::vector<double>& scales,
                                int offsets_per_scale = 64) {
  f.validate();
  if (offsets_per_scale < 1)
    throw std::invalid_argument("bmo_seminorm: offsets_per_scale >= 1");
  const double span = f.span();
  BmoEstimate best;
  best.offsets_per_scale = offsets_per_scale;
  for (double L : scales) {
    if (L < 4.0 * f.dt)
      throw std::invalid_argument(
          "bmo_seminorm: scale below quadrature floor 4*dt");
    if (L > span) continue;
    best.scales_tested.push_back(L);
    const std::size_t nl = static_cast<std::size_t>(std::llround(L / f.dt));
    const std::size_t last_start = f.size() - 1 - nl;
    // offsets at fractions j/offsets of the admissible range: doubling the
    // count refines the family into a superset (monotone estimates)
    for (int j = 0; j < offsets_per_scale; ++j) {
      const std::size_t i0 = static_cast<std::size_t>(
          std::llround(static_cast<double>(last_start) * j /
                       static_cast<double>(offsets_per_scale)));
      const std::size_t i1 = i0 + nl;
      const double len = f.dt * static_cast<double>(nl);
      // mean centered on the first sample: constants come out exactly
      const Complex base = f.values[i0];
      Complex dev = 0.0;  // trapezoid of (f - base), dt divided out
      dev += 0.5 * (f.values[i1] - base);
      for (std::size_t i = i0 + 1; i < i1; ++i) dev += f.values[i] - base;
      const Complex mean = base + dev / static_cast<double>(nl);
      double osc = 0.5 * (std::abs(f.values[i0] - mean) +
                          std::abs(f.values[i1] - mean));
      for (std::size_t i = i0 + 1; i < i1; ++i)
        osc += std::abs(f.values[i] - mean);
      osc = osc * f.dt / len;
      if (osc > best.seminorm) {
        best.seminorm = osc;
        best.witness_a = f.t(i0);
        best.witness_len = len;
      }
    }
  }
  if (best.scales_tested.empty())
    throw std::invalid_argument(
        "bmo_seminorm: scale family empty after clipping to the span");
  return best;
}

/// Dyadic default family {64 dt, 128 dt, ...} clipped to the span.
inline std::vector<double> default_bmo_scales(const SampledFunction& f,
                                              double base_cells = 64) {
  std::vector<double> s;
  for (double L = base_cells * f.dt; L <= f.span(); L *= 2.0) s.push_back(L);
  return s;
}

/// Analytic derivative g'(w) = sum_j coef_j exp(i freq_j w), freq_j > 0
/// (decays in the upper half plane).  This is the form the dyadic sine sums
/// produce; it keeps the square-functional quadrature separable.
struct ExponentialSumDerivative {
  std::vector<double> freq;
  std::vector<Complex> coef;
};

struct CarlesonEstimate {
  double functional = 0;
  std::string square_family;
  std::string integrand = "2 v |g'(u+iv)|^2 du dv";
  double du = 0, dv = 0;
};

/// max over squares Q_{a,r} of (1/r) iint_Q 2v |g'(u+iv)|^2 du dv, composite
/// trapezoid at steps (du, dv).  |g'|^2 is evaluated once on the bounding
/// lattice through per-frequency geometric recurrences, and each square is
/// integrated from a 2-D prefix table.
inline CarlesonEstimate carleson_functional(
    const ExponentialSumDerivative& deriv, const std::vector<double>& a_edges,
    const std::vector<double>& radii, double du, double dv) {
  if (deriv.freq.size() != deriv.coef.size() || deriv.freq.empty())
    throw std::invalid_argument("carleson_functional: empty derivative");
  if (a_edges.empty() || radii.empty() || !(du > 0) || !(dv > 0))
    throw std::invalid_argument("carleson_functional: bad family");

  const double rmax = *std::max_element(radii.begin(), radii.end());
  const double umin = *std::min_element(a_edges.begin(), a_edges.end());
  const double umax =
      *std::max_element(a_edges.begin(), a_edges.end()) + rmax;
  const std::size_t nu =
      static_cast<std::size_t>(std::llround((umax - umin) / du)) + 1;
  const std::size_t nv = static_cast<std::size_t>(std::llround(rmax / dv)) + 1;
  const std::size_t m = deriv.freq.size();

  // per-frequency factors: row phases (complex geometric), column decays
  std::vector<std::vector<Complex>> rows(m, std::vector<Complex>(nu));
  std::vector<std::vector<double>> cols(m, std::vector<double>(nv));
  for (std::size_t k = 0; k < m; ++k) {
    const Complex step = std::exp(Complex(0.0, deriv.freq[k] * du));
    Complex cur = deriv.coef[k] * std::exp(Complex(0.0, deriv.freq[k] * umin));
    for (std::size_t i = 0; i < nu; ++i, cur *= step) rows[k][i] = cur;
    const double dstep = std::exp(-deriv.freq[k] * dv);
    double dcur = 1.0;
    for (std::size_t j = 0; j < nv; ++j, dcur *= dstep) cols[k][j] = dcur;
  }

  // f_{ij} = 2 v_j |g'(u_i + i v_j)|^2, then prefix sums
  std::vector<double> pre((nu + 1) * (nv + 1), 0.0);
  auto P = [&](std::size_t i, std::size_t j) -> double& {
    return pre[i * (nv + 1) + j];
  };
  std::vector<double> frow(nv);
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      Complex g = 0.0;
      for (std::size_t k = 0; k < m; ++k) g += rows[k][i] * cols[k][j];
      frow[j] = 2.0 * (dv * static_cast<double>(j)) * std::norm(g);
    }
    for (std::size_t j = 0; j < nv; ++j)
      P(i + 1, j + 1) = P(i, j + 1) + P(i + 1, j) - P(i, j) + frow[j];
  }
  auto box = [&](std::size_t i0, std::size_t i1, std::size_t j0,
                 std::size_t j1) {  // inclusive index rectangle, plain sum
    return P(i1 + 1, j1 + 1) - P(i0, j1 + 1) - P(i1 + 1, j0) + P(i0, j0);
  };

  double best = 0.0;
  for (double r : radii) {
    const std::size_t nr_u = static_cast<std::size_t>(std::llround(r / du));
    const std::size_t nr_v = static_cast<std::size_t>(std::llround(r / dv));
    if (nr_u < 1 || nr_v < 1 || nr_v >= nv + 1)
      throw std::invalid_argument("carleson_functional: radius/step mismatch");
    for (double a : a_edges) {
      const std::size_t i0 =
          static_cast<std::size_t>(std::llround((a - umin) / du));
      const std::size_t i1 = i0 + nr_u;
      const std::size_t j1 = nr_v;
      if (i1 >= nu)
        throw std::invalid_argument("carleson_functional: square off lattice");
      // composite trapezoid: interior weight 1, edges 1/2, corners 1/4
      const double full = box(i0, i1, 0, j1);
      const double edges = box(i0, i1, 0, 0) + box(i0, i1, j1, j1) +
                           box(i0, i0, 0, j1) + box(i1, i1, 0, j1);
      const double c4 = box(i0, i0, 0, 0) + box(i0, i0, j1, j1) +
                        box(i1, i1, 0, 0) + box(i1, i1, j1, j1);
      const double integral = du * dv * (full - 0.5 * edges + 0.25 * c4);
      const double val = integral / r;
      if (!std::isfinite(val))
        throw std::runtime_error("carleson_functional: non-finite integrand");
      best = std::max(best, val);
    }
  }

  CarlesonEstimate est;
  est.functional = best;
  est.du = du;
  est.dv = dv;
  {
    std::ostringstream os;
    os << a_edges.size() << " left edges x " << radii.size() << " radii";
    est.square_family = os.str();
  }
  return est;
}

/// G3's upper-half-plane derivative as an exponential sum:
/// g'(w) = sum_k (-1)^k (pi/(6 2^k)) e^{i pi w/(3 2^k)}.
inline ExponentialSumDerivative g3_plus_derivative(double coef_floor = 1e-16) {
  ExponentialSumDerivative d;
  double c = kPi / 6.0, w = kPi / 3.0, sign = 1.0;
  while (c > coef_floor) {
    d.coef.push_back(Complex(sign * c, 0.0));
    d.freq.push_back(w);
    c *= 0.5;
    w *= 0.5;
    sign = -sign;
  }
  return d;
}

struct HilbertResult {
  SampledFunction out;
  double tail_estimate = 0;
};

/// Principal-value Hilbert transform Hg(s) = int g(t)/(pi (s-t)) dt on the
/// sample lattice (the orientation that makes (g + iHg)/2 the upper-half-
/// plane analytic projection and matches the closed-form HK below): the
/// singular cell is excluded symmetrically and restored through its leading
/// PV mass -g'(s) dt / pi; a margin of cells is trimmed at both edges.
/// `stride` thins the output lattice (each output point costs a full pass
/// over the input).  The reported tail estimate assumes quadratic decay of g
/// beyond the lattice.
inline HilbertResult hilbert_numeric(const SampledFunction& f,
                                     std::size_t margin = 8,
                                     std::size_t stride = 1) {
  f.validate();
  if (stride < 1) throw std::invalid_argument("hilbert_numeric: stride >= 1");
  const std::size_t n = f.size();
  if (n < 2 * margin + 2 * stride + 1)
    throw std::invalid_argument("hilbert_numeric: lattice too short");
  SampledFunction out;
  out.t0 = f.t(margin);
  out.dt = f.dt * static_cast<double>(stride);
  out.values.resize((n - 1 - 2 * margin) / stride + 1);
  for (std::size_t o = 0; o < out.values.size(); ++o) {
    const std::size_t i = margin + o * stride;
    Complex acc = 0.0;
    const double s = f.t(i);
    const double tj0 = f.t0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      acc += f.values[j] / (s - (tj0 + f.dt * static_cast<double>(j)));
    }
    const Complex deriv = (f.values[i + 1] - f.values[i - 1]) / (2.0 * f.dt);
    out.values[o] = (acc * f.dt - deriv * f.dt) / kPi;
  }
  out.provenance = "hilbert_numeric(" + f.provenance + ")";

  const double gf = std::abs(f.values.front());
  const double gb = std::abs(f.values.back());
  const double edge = margin > 0 ? f.dt * static_cast<double>(margin)
                                 : f.dt;
  HilbertResult res;
  res.tail_estimate = (gf + gb) * std::fabs(f.span()) /
                      (2.0 * kPi * std::max(edge, f.dt));
  res.out = std::move(out);
  return res;
}

/// K(c,t) = |c| sin(2 pi N t / c) / (pi t (t - c)), N integer > |c|;
/// removable singularities at t = 0 and t = c handled by series.
inline double kernel_K(double c, double t, long N) {
  if (c == 0.0) throw std::invalid_argument("kernel_K: c != 0");
  if (static_cast<double>(N) <= std::fabs(c))
    throw std::invalid_argument("kernel_K: need integer N > |c|");
  const double beta = 2.0 * kPi * static_cast<double>(N) / c;
  const double rho = 1e-4 * std::fabs(c);
  auto sinc_beta = [beta](double u) {  // sin(beta u)/u
    const double w = beta * u;
    if (std::fabs(w) < 1e-4) return beta * (1.0 - w * w / 6.0);
    return std::sin(w) / u;
  };
  if (std::fabs(t) < rho) return std::fabs(c) * sinc_beta(t) / (kPi * (t - c));
  if (std::fabs(t - c) < rho)
    return std::fabs(c) * sinc_beta(t - c) / (kPi * t);
  return std::fabs(c) * std::sin(beta * t) / (kPi * t * (t - c));
}

/// Closed form of the Hilbert transform of K:
/// HK(c,s) = c (cos(2 pi N s / c) - 1) / (pi s (c - s)).
inline double kernel_K_hilbert(double c, double s, long N) {
  if (c == 0.0) throw std::invalid_argument("kernel_K_hilbert: c != 0");
  const double beta = 2.0 * kPi * static_cast<double>(N) / c;
  auto cosm1_over = [beta](double u) {  // (cos(beta u) - 1)/u
    const double w = beta * u;
    if (std::fabs(w) < 1e-4) return -beta * w / 2.0 * (1.0 - w * w / 12.0);
    return (std::cos(w) - 1.0) / u;
  };
  const double rho = 1e-4 * std::fabs(c);
  if (std::fabs(s) < rho) return c * cosm1_over(s) / (kPi * (c - s));
  if (std::fabs(s - c) < rho) {
    // (cos(beta s) - 1) = (cos(beta (s-c)) - 1) since beta c = 2 pi N
    return -c * cosm1_over(s - c) / (kPi * s);
  }
  return c * (std::cos(beta * s) - 1.0) / (kPi * s * (c - s));
}

/// max over the sample lattice of the central-difference |f'|.
inline double derivative_sup_sampled(const SampledFunction& f) {
  f.validate();
  double best = 0.0;
  for (std::size_t i = 1; i + 1 < f.size(); ++i)
    best = std::max(best,
                    std::abs(f.values[i + 1] - f.values[i - 1]) / (2.0 * f.dt));
  return best;
}

/// max over a scan lattice of the central-difference |f'|.
inline double derivative_sup(const std::function<double(double)>& fn,
                             double a, double b, double h,
                             std::size_t scan_points = 4001) {
  if (!(b > a) || !(h > 0) || scan_points < 2)
    throw std::invalid_argument("derivative_sup: bad window");
  double best = 0.0;
  for (std::size_t i = 0; i < scan_points; ++i) {
    const double t =
        a + (b - a) * static_cast<double>(i) / double(scan_points - 1);
    best = std::max(best, std::fabs(fn(t + h) - fn(t - h)) / (2.0 * h));
  }
  return best;
}

}  // namespace bandlim::analysis
