#pragma once

// The three interpolation series: the classical cardinal (WSK) series for l2
// data on uniform grids, the nonuniform l^p series, and the augmented series
// for bounded data with one extra sample (x_tilde, a_tilde) pinning the c*S(z)
// ambiguity.  Evaluation uses symmetric partial sums, stable near-node limit
// forms, and reports an analytic bound for the omitted tail.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bandlim/grid.hpp"
#include "bandlim/parallel.hpp"
#include "bandlim/specfun.hpp"

namespace bandlim::interp {

using Complex = std::complex<double>;
using grid::GeneratingFunction;
using grid::SamplingGrid;
using specfun::kPi;

/// Bounded data aligned to a grid window, plus the optional extra sample.
struct AugmentedSamples {
  std::vector<double> values;
  std::optional<double> extra_value;
  double norm_inf = 0;

  static AugmentedSamples make(const SamplingGrid& g,
                               std::vector<double> values,
                               std::optional<double> extra_value) {
    if (values.size() != g.size())
      throw std::invalid_argument(
          "AugmentedSamples: length does not match grid window");
    AugmentedSamples s;
    s.values = std::move(values);
    s.extra_value = extra_value;
    double m = extra_value ? std::fabs(*extra_value) : 0.0;
    for (double v : s.values) {
      if (!std::isfinite(v))
        throw std::invalid_argument("AugmentedSamples: non-finite sample");
      m = std::max(m, std::fabs(v));
    }
    s.norm_inf = m;
    return s;
  }
};

enum class SeriesKind { kWsk, kLp, kAugmented };

struct TruncationReport {
  long terms_used = 0;
  double tail_bound = 0;
  double requested_tol = 0;
  bool attained() const { return tail_bound <= requested_tol; }
};

template <class V>
struct EvalResult {
  std::vector<V> values;
  std::vector<long> terms_used;
  std::vector<double> tail_bounds;
  TruncationReport summary;
};
using RealEvalResult = EvalResult<double>;
using ComplexEvalResult = EvalResult<Complex>;

/// Integral-comparison bound for the augmented-series tail beyond radius R:
/// (1/lambda) * int_{|t|>R} |z - xt| / (|z - t| |xt - t|) dt, with the complex
/// z handled through its real part (valid upper bound after the |z-t| >=
/// |Re z - t| relaxation).  sup|S| and the data norm enter as caller-side
/// factors.
inline double tail_bound(const SamplingGrid& g, Complex z, double R,
                         double x_tilde) {
  const double c = z.real();
  if (!(R > std::max(std::abs(z), std::fabs(x_tilde)) + g.max_gap()))
    throw std::invalid_argument(
        "tail_bound: R must exceed both |z| and |x_tilde| by a max gap");
  const double dz = std::abs(z - Complex(x_tilde, 0.0));
  if (dz == 0.0) return 0.0;
  double integral;
  if (c == x_tilde) {
    integral = dz * (1.0 / (R - c) + 1.0 / (R + c));
  } else {
    const double l =
        std::log(((R - x_tilde) * (R + c)) / ((R - c) * (R + x_tilde)));
    integral = dz * std::fabs(l) / std::fabs(c - x_tilde);
  }
  return integral / g.separation();
}

namespace detail {

struct SupEstimates {
  double sup_s = 0;       // sup |S| on the real window
  double min_deriv = 0;   // min_k |S'(x_k)|
};

inline SupEstimates estimate_sup(const SamplingGrid& g,
                                 const GeneratingFunction& s) {
  SupEstimates e;
  switch (g.kind()) {
    case grid::GridKind::kUniform:
      e.sup_s = 1.0 / s.type_constant;
      e.min_deriv = 1.0;
      return e;
    case grid::GridKind::kUnionOfUniform: {
      const double pb = kPi * g.density();
      e.sup_s = 1.0 / (pb * pb);
      e.min_deriv = std::fabs(std::sin(pb * g.union_offset())) / pb;
      return e;
    }
    default: break;
  }
  // coarse scans; non-uniform windows are desk-scale
  const double lam = g.separation();
  double sup = 0;
  for (double t = g.front(); t <= g.back(); t += lam / 3.0)
    sup = std::max(sup, std::fabs(s.eval_real(t)));
  double mind = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.size(); ++i)
    mind = std::min(mind, std::fabs(s.deriv_at_node(g.index_of(i))));
  e.sup_s = sup;
  e.min_deriv = mind;
  return e;
}

}  // namespace detail

struct EvalOptions {
  double tol = 1e-9;
  double p = 2.0;                    // l^p exponent for the lp tail bound
  double near_radius_factor = 0.01;  // rho = factor * lambda(X)
  double reliable_fraction = 0.8;
  bool enforce_reliable_zone = true;
  int threads = 1;
};

/// Lazy evaluator of the series.  Construction precomputes per-node weights;
/// evaluation is pure and thread-safe.
class Interpolant {
 public:
  using Options = EvalOptions;

  Interpolant(const SamplingGrid& g, const GeneratingFunction& s,
              AugmentedSamples samples, SeriesKind kind,
              Options opt = Options())
      : grid_(g), s_(s), samples_(std::move(samples)), kind_(kind), opt_(opt) {
    const std::size_t n = grid_.size();
    if (samples_.values.size() != n)
      throw std::invalid_argument("Interpolant: samples/grid size mismatch");
    if (kind_ == SeriesKind::kAugmented) {
      if (!grid_.extra_node() || !samples_.extra_value)
        throw std::invalid_argument(
            "Interpolant: augmented series requires the extra node and value");
    }
    uniform_ = grid_.is_implicit_uniform() &&
               s_.form == grid::GenFuncForm::kClosedForm;
    b_ = uniform_ ? grid_.density() : 0.0;

    weights_.resize(n);
    if (uniform_) {
      // w_k = a_k * (-1)^k ; S(z)/(S'(x_k)(z-x_k)) = sin(pi b z)(-1)^k/(pi(bz-k))
      const long o = grid_.index_origin();
      for (std::size_t i = 0; i < n; ++i)
        weights_[i] = ((o + static_cast<long>(i)) % 2 == 0)
                          ? samples_.values[i]
                          : -samples_.values[i];
    } else {
      nodes_ = grid_.materialize_nodes();
      derivs_.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        derivs_[i] = s_.deriv_at_node(grid_.index_of(i));
        weights_[i] = samples_.values[i] / derivs_[i];
      }
    }
    sup_ = detail::estimate_sup(grid_, s_);
    rho_ = opt_.near_radius_factor * grid_.separation();

    if (kind_ == SeriesKind::kAugmented) {
      xt_ = *grid_.extra_node();
      at_ = *samples_.extra_value;
      s_xt_ = s_.eval_real(xt_);
      if (std::fabs(s_xt_) < 1e-300)
        throw std::invalid_argument("Interpolant: S(x_tilde) vanishes");
      // c_tilde = sum_k a_k / (S'(x_k) (xt - x_k))
      double acc = 0.0;
      if (uniform_) {
        const double bxt = b_ * xt_;
        const long o = grid_.index_origin();
        for (std::size_t i = 0; i < n; ++i)
          acc += weights_[i] / (bxt - static_cast<double>(o + (long)i));
        acc *= b_;
      } else {
        for (std::size_t i = 0; i < n; ++i)
          acc += weights_[i] / (xt_ - nodes_[i]);
      }
      c_tilde_ = acc;
    }

    // lp truncation: prefix sums of |a|^p for data-tail norms
    if (kind_ != SeriesKind::kAugmented) {
      ppow_prefix_.resize(n + 1, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        ppow_prefix_[i + 1] =
            ppow_prefix_[i] + std::pow(std::fabs(samples_.values[i]), opt_.p);
    }
  }

  const SamplingGrid& sampling_grid() const { return grid_; }
  const AugmentedSamples& samples() const { return samples_; }
  SeriesKind series_kind() const { return kind_; }
  double near_node_radius() const { return rho_; }

  /// Batch evaluation at real points.
  RealEvalResult eval(std::span<const double> pts) const {
    RealEvalResult r;
    const std::size_t n = pts.size();
    r.values.resize(n);
    r.terms_used.resize(n);
    r.tail_bounds.resize(n);
    parallel_for(n, opt_.threads, [&](std::size_t i) {
      r.values[i] = eval_one(pts[i], &r.terms_used[i], &r.tail_bounds[i]);
    });
    finalize_summary(r);
    return r;
  }

  ComplexEvalResult eval(std::span<const Complex> pts) const {
    ComplexEvalResult r;
    const std::size_t n = pts.size();
    r.values.resize(n);
    r.terms_used.resize(n);
    r.tail_bounds.resize(n);
    parallel_for(n, opt_.threads, [&](std::size_t i) {
      r.values[i] = eval_one(pts[i], &r.terms_used[i], &r.tail_bounds[i]);
    });
    finalize_summary(r);
    return r;
  }

  double eval_one(double t, long* terms = nullptr,
                  double* tail = nullptr) const {
    check_reliable(t);
    if (kind_ == SeriesKind::kAugmented) return eval_augmented(t, terms, tail);
    return eval_truncated(t, terms, tail);
  }

  Complex eval_one(Complex z, long* terms = nullptr,
                   double* tail = nullptr) const {
    check_reliable(z.real());
    if (kind_ == SeriesKind::kAugmented) return eval_augmented(z, terms, tail);
    return eval_truncated(z, terms, tail);
  }

 private:
  template <class V>
  void finalize_summary(EvalResult<V>& r) const {
    r.summary.requested_tol = opt_.tol;
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      r.summary.terms_used = std::max(r.summary.terms_used, r.terms_used[i]);
      r.summary.tail_bound = std::max(r.summary.tail_bound, r.tail_bounds[i]);
    }
  }

  void check_reliable(double t) const {
    if (!opt_.enforce_reliable_zone) return;
    const double lo = grid_.front() * opt_.reliable_fraction;
    const double hi = grid_.back() * opt_.reliable_fraction;
    if (t < lo - 1e-9 || t > hi + 1e-9) {
      std::ostringstream os;
      os << "Interpolant: eval point " << t << " outside reliable zone ["
         << lo << ", " << hi << "]";
      throw std::invalid_argument(os.str());
    }
  }

  // ---- augmented series: full-window symmetric sum ----

  template <class V>
  V eval_augmented(V z, long* terms, double* tail) const {
    const std::size_t n = grid_.size();
    const std::size_t inear = grid_.nearest_index(real_part(z));
    V sv, kernel_sum, near_term;
    if (uniform_) {
      const V bz = z * b_;
      sv = std::sin(kPi * bz) / (kPi * b_);  // S(z)
      // sum_{k != knear} a_k (-1)^k sin(pi b z) / (pi (bz - k))
      kernel_sum = uniform_kernel_sum(bz, inear) * (sv * b_);
      const double k0 =
          static_cast<double>(grid_.index_origin() + (long)inear);
      near_term = samples_.values[inear] * specfun::sinc(bz - V(k0));
    } else {
      sv = s_eval(z);
      V acc = V(0);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == inear) continue;
        acc += weights_[i] / (z - V(nodes_[i]));
      }
      kernel_sum = sv * acc;
      near_term = generic_near_term(z, inear, sv);
    }
    const V f = at_ * sv / s_xt_ + kernel_sum + near_term - sv * c_tilde_;
    if (terms) *terms = static_cast<long>(n);
    if (tail) *tail = augmented_tail(z);
    return f;
  }

  // sum of w_k/(bz - k) over the window excluding stored index inear
  double uniform_kernel_sum(double bz, std::size_t inear) const {
    const long o = grid_.index_origin();
    const double* w = weights_.data();
    const std::size_t n = weights_.size();
    double acc0 = 0.0, acc1 = 0.0;
    double k = static_cast<double>(o);
    std::size_t i = 0;
    for (; i < inear; ++i, k += 1.0) acc0 += w[i] / (bz - k);
    k += 1.0;  // skip nearest
    for (i = inear + 1; i < n; ++i, k += 1.0) acc1 += w[i] / (bz - k);
    return acc0 + acc1;
  }
  Complex uniform_kernel_sum(Complex bz, std::size_t inear) const {
    const long o = grid_.index_origin();
    const double* w = weights_.data();
    const std::size_t n = weights_.size();
    Complex acc = 0.0;
    double k = static_cast<double>(o);
    for (std::size_t i = 0; i < n; ++i, k += 1.0) {
      if (i == inear) continue;
      acc += w[i] / (bz - k);
    }
    return acc;
  }

  static double real_part(double t) { return t; }
  static double real_part(Complex z) { return z.real(); }

  Complex s_eval(Complex z) const { return s_.eval(z); }
  double s_eval(double t) const { return s_.eval_real(t); }

  // k-th summand near its node: limit value plus first-order Taylor
  // correction, S'' by central finite difference.
  template <class V>
  V generic_near_term(V z, std::size_t i, V sv) const {
    const double xk = nodes_[i];
    const V d = z - V(xk);
    if (std::abs(d) >= rho_)
      return weights_[i] * sv / d;
    const double h = grid_.separation() / 20.0;
    const double s2 = (s_.eval_real(xk + h) + s_.eval_real(xk - h)) / (h * h);
    return samples_.values[i] * (V(1.0) + d * (s2 / (2.0 * derivs_[i])));
  }

  template <class V>
  double augmented_tail(V z) const {
    const double cov = std::min(-grid_.front(), grid_.back());
    const double rez = real_part(z);
    if (!(cov > std::max(std::fabs(rez), std::fabs(xt_)) + grid_.max_gap()))
      return std::numeric_limits<double>::infinity();
    const double bare = tail_bound(grid_, Complex(rez, imag_part(z)), cov, xt_);
    const double amp = sup_.sup_s / sup_.min_deriv *
                       std::exp(s_.type_constant * std::fabs(imag_part(z)));
    return samples_.norm_inf * amp * bare;
  }
  static double imag_part(double) { return 0.0; }
  static double imag_part(Complex z) { return z.imag(); }

  // ---- wsk / lp series: expanding symmetric rings with tail control ----

  template <class V>
  V eval_truncated(V z, long* terms, double* tail) const {
    const std::size_t n = grid_.size();
    const std::size_t i0 = grid_.nearest_index(real_part(z));
    const double q = opt_.p / (opt_.p - 1.0);
    const double lam = grid_.separation();
    const double amp = sup_.sup_s / sup_.min_deriv *
                       std::exp(s_.type_constant * std::fabs(imag_part(z)));
    const double total_p = ppow_prefix_.back();

    // for uniform closed-form grids sv carries sin(pi b z)/pi, otherwise S(z)
    V bz = z;
    V sv;
    if (uniform_) {
      bz = z * b_;
      sv = std::sin(kPi * bz) / kPi;
    } else {
      sv = s_eval(z);
    }

    V acc = V(0);
    long used = 0;
    double bound = std::numeric_limits<double>::infinity();
    std::size_t lo = i0, hi = i0;
    // include ring m = 0 (node i0) first, then expand
    acc += term_at(z, bz, sv, i0, true);
    ++used;
    for (std::size_t m = 1;; ++m) {
      // tail bound with rings > m-1 pending: data mass outside [lo, hi]
      const double rem_p = std::max(
          0.0, total_p - (ppow_prefix_[hi + 1] - ppow_prefix_[lo]));
      if (rem_p == 0.0) {
        bound = 0.0;
        break;
      }
      // sum_{j>=m} f((j-1/2)lam) <= f(d) + (1/lam) int_d^inf f, f = u^{-q}
      const double dmin = (static_cast<double>(m) - 0.5) * lam;
      const double kernel_pow =
          2.0 * (std::pow(dmin, -q) +
                 std::pow(dmin, 1.0 - q) / (lam * (q - 1.0)));
      bound = std::pow(rem_p, 1.0 / opt_.p) * amp *
              std::pow(kernel_pow, 1.0 / q);
      if (bound <= opt_.tol) break;
      bool grew = false;
      if (lo > 0) {
        --lo;
        acc += term_at(z, bz, sv, lo, false);
        ++used;
        grew = true;
      }
      if (hi + 1 < n) {
        ++hi;
        acc += term_at(z, bz, sv, hi, false);
        ++used;
        grew = true;
      }
      if (!grew) {  // window exhausted: nothing omitted
        bound = 0.0;
        break;
      }
    }
    if (terms) *terms = used;
    if (tail) *tail = bound;
    return acc;
  }

  template <class V>
  V term_at(V z, V bz, V sv, std::size_t i, bool nearest) const {
    if (uniform_) {
      const double k =
          static_cast<double>(grid_.index_origin() + static_cast<long>(i));
      const V d = bz - V(k);
      if (nearest) return samples_.values[i] * specfun::sinc(d);
      return weights_[i] * sv / d;  // sv = sin(pi b z)/pi ; w = a(-1)^k
    }
    if (nearest) return generic_near_term(z, i, sv);
    return weights_[i] * sv / (z - V(nodes_[i]));
  }

  SamplingGrid grid_;
  GeneratingFunction s_;
  AugmentedSamples samples_;
  SeriesKind kind_;
  Options opt_;

  bool uniform_ = false;
  double b_ = 0;
  std::vector<double> nodes_;    // empty for implicit uniform
  std::vector<double> derivs_;   // empty for implicit uniform
  std::vector<double> weights_;  // a_k/S'(x_k), or a_k*(-1)^k for uniform
  std::vector<double> ppow_prefix_;
  detail::SupEstimates sup_;
  double rho_ = 0;
  double xt_ = 0, at_ = 0, s_xt_ = 1, c_tilde_ = 0;
};

// ---- spec-level entry points ----

/// Cardinal series for square-summable data on the uniform lattice k/b,
/// window symmetric by default (index_origin = -(n-1)/2).
inline RealEvalResult interpolate_uniform(const std::vector<double>& samples,
                                          double b,
                                          std::span<const double> pts,
                                          double tol,
                                          Interpolant::Options opt = {}) {
  if (samples.empty() || samples.size() % 2 == 0)
    throw std::invalid_argument(
        "interpolate_uniform: need an odd-length symmetric window");
  const long K = static_cast<long>(samples.size() / 2);
  auto g = grid::uniform_grid(b, K);
  auto s = grid::generating_function(g);
  opt.tol = tol;
  opt.p = 2.0;
  opt.enforce_reliable_zone = false;
  Interpolant ip(g, s, AugmentedSamples::make(g, samples, std::nullopt),
                 SeriesKind::kWsk, opt);
  return ip.eval(pts);
}

/// Nonuniform series for l^p data at the zeros of S.
inline RealEvalResult interpolate_lp(const SamplingGrid& g,
                                     const GeneratingFunction& s,
                                     const std::vector<double>& samples,
                                     std::span<const double> pts, double tol,
                                     double p = 2.0,
                                     Interpolant::Options opt = {}) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("interpolate_lp: p must lie in (1, inf)");
  opt.tol = tol;
  opt.p = p;
  opt.enforce_reliable_zone = false;
  Interpolant ip(g, s, AugmentedSamples::make(g, samples, std::nullopt),
                 SeriesKind::kLp, opt);
  return ip.eval(pts);
}

/// Augmented series for bounded data (grid must carry the extra node).
inline RealEvalResult interpolate_bounded(const SamplingGrid& g,
                                          const GeneratingFunction& s,
                                          const AugmentedSamples& samples,
                                          std::span<const double> pts,
                                          double tol,
                                          Interpolant::Options opt = {}) {
  opt.tol = tol;
  Interpolant ip(g, s, samples, SeriesKind::kAugmented, opt);
  return ip.eval(pts);
}

/// a_tilde that makes the augmented series reproduce `target` at t0.
inline double calibrate_extra_value(const SamplingGrid& g,
                                    const GeneratingFunction& s,
                                    const std::vector<double>& values,
                                    double t0, double target,
                                    Interpolant::Options opt = {}) {
  if (!g.extra_node())
    throw std::invalid_argument("calibrate_extra_value: grid lacks x_tilde");
  const double xt = *g.extra_node();
  opt.enforce_reliable_zone = false;
  Interpolant zero_ip(g, s, AugmentedSamples::make(g, values, 0.0),
                      SeriesKind::kAugmented, opt);
  const double w0 = zero_ip.eval_one(t0);
  const double st0 = s.eval_real(t0);
  if (std::fabs(st0) < 1e-300)
    throw std::invalid_argument(
        "calibrate_extra_value: t0 is a node of S; pick a non-node point");
  return (target - w0) * s.eval_real(xt) / st0;
}

/// a_tilde that makes the augmented series coincide with the classical l^p
/// series (evaluates the lp series at x_tilde).
inline double extra_value_from_lp(const SamplingGrid& g,
                                  const GeneratingFunction& s,
                                  const std::vector<double>& values,
                                  double tol = 1e-12) {
  if (!g.extra_node())
    throw std::invalid_argument("extra_value_from_lp: grid lacks x_tilde");
  const double xt = *g.extra_node();
  const std::array<double, 1> pt = {xt};
  auto r = interpolate_lp(g, s, values, pt, tol);
  return r.values[0];
}

/// max over a lattice of |f(t)| / (1 + log+ |t|), the Eq-style growth
/// envelope constant.
inline double log_growth_envelope(const Interpolant& ip, double r, double dt) {
  double best = 0.0;
  for (double t = -r; t <= r; t += dt) {
    const double f = std::fabs(ip.eval_one(t));
    const double env = 1.0 + std::max(std::log(std::fabs(t)), 0.0);
    best = std::max(best, f / env);
  }
  return best;
}

}  // namespace bandlim::interp
