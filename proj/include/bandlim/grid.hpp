#pragma once

// Sampling sequences X (windows of bi-infinite separated sequences) and their
// sine-type generating functions S.  Uniform and union-of-uniform grids carry
// closed-form S; the Bessel example grid evaluates S through J0/J1; any grid
// can be given a truncated canonical-product S.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bandlim/specfun.hpp"

namespace bandlim::grid {

using Complex = std::complex<double>;
using specfun::kPi;

enum class GridKind { kUniform, kUnionOfUniform, kBessel, kExplicit };

inline const char* to_string(GridKind k) {
  switch (k) {
    case GridKind::kUniform: return "uniform";
    case GridKind::kUnionOfUniform: return "union-of-uniform";
    case GridKind::kBessel: return "bessel";
    case GridKind::kExplicit: return "explicit";
  }
  return "?";
}

/// Distance floor for the extra node, as a fraction of the separation
/// constant; guards 1/(x_tilde - x_k) against catastrophic cancellation.
inline constexpr double kExtraNodeFloorFactor = 0.1;

class SamplingGrid {
 public:
  GridKind kind() const { return kind_; }
  std::size_t size() const {
    return implicit_ ? static_cast<std::size_t>(kmax_ - kmin_ + 1)
                     : nodes_.size();
  }
  /// i-th stored node, i in [0, size).
  double node(std::size_t i) const {
    return implicit_ ? static_cast<double>(kmin_ + static_cast<long>(i)) / b_
                     : nodes_[i];
  }
  /// Conceptual index of the first stored node.
  long index_origin() const { return implicit_ ? kmin_ : index_origin_; }
  long index_of(std::size_t i) const {
    return index_origin() + static_cast<long>(i);
  }

  std::optional<double> extra_node() const { return extra_; }
  double separation() const { return lambda_; }
  double max_gap() const { return max_gap_; }
  double front() const { return node(0); }
  double back() const { return node(size() - 1); }

  bool is_implicit_uniform() const { return implicit_; }
  /// Density b for uniform kinds, base density for unions.
  double density() const { return b_; }
  double union_offset() const { return offset_; }
  double bessel_epsilon() const { return eps_; }

  std::size_t nearest_index(double t) const {
    if (implicit_) {
      long k = std::lround(t * b_);
      k = std::clamp(k, kmin_, kmax_);
      return static_cast<std::size_t>(k - kmin_);
    }
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t);
    if (it == nodes_.end()) return nodes_.size() - 1;
    if (it == nodes_.begin()) return 0;
    const auto hi = static_cast<std::size_t>(it - nodes_.begin());
    return (t - nodes_[hi - 1] <= nodes_[hi] - t) ? hi - 1 : hi;
  }

  std::vector<double> materialize_nodes() const {
    if (!implicit_) return nodes_;
    std::vector<double> v(size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = node(i);
    return v;
  }

  // -- constructors (see free functions below) --
  static SamplingGrid make_implicit_uniform(double b, long kmin, long kmax,
                                            std::optional<double> extra) {
    if (b <= 0) throw std::invalid_argument("uniform_grid: b must be > 0");
    if (kmax < kmin) throw std::invalid_argument("uniform_grid: empty window");
    SamplingGrid g;
    g.kind_ = GridKind::kUniform;
    g.implicit_ = true;
    g.b_ = b;
    g.kmin_ = kmin;
    g.kmax_ = kmax;
    g.lambda_ = 1.0 / b;
    g.max_gap_ = 1.0 / b;
    g.set_extra(extra);
    return g;
  }

  static SamplingGrid make_explicit(GridKind kind, std::vector<double> nodes,
                                    long index_origin,
                                    std::optional<double> extra, double b = 0,
                                    double offset = 0, double eps = 0) {
    if (nodes.size() < 1)
      throw std::invalid_argument("grid: at least one node required");
    SamplingGrid g;
    g.kind_ = kind;
    g.nodes_ = std::move(nodes);
    g.index_origin_ = index_origin;
    g.b_ = b;
    g.offset_ = offset;
    g.eps_ = eps;
    g.lambda_ = std::numeric_limits<double>::infinity();
    g.max_gap_ = 0.0;
    for (std::size_t i = 1; i < g.nodes_.size(); ++i) {
      const double gap = g.nodes_[i] - g.nodes_[i - 1];
      if (!(gap > 0)) {
        std::ostringstream os;
        os << "grid: nodes not strictly increasing at stored index " << i
           << " (gap " << gap << ")";
        throw std::invalid_argument(os.str());
      }
      g.lambda_ = std::min(g.lambda_, gap);
      g.max_gap_ = std::max(g.max_gap_, gap);
    }
    if (g.nodes_.size() == 1) {
      g.lambda_ = 1.0;  // single-node window: separation vacuous
      g.max_gap_ = 0.0;
    }
    g.set_extra(extra);
    return g;
  }

 private:
  void set_extra(std::optional<double> extra) {
    if (!extra) return;
    const double floor = kExtraNodeFloorFactor * lambda_;
    for (std::size_t i = 0; i < size(); ++i) {
      if (std::fabs(*extra - node(i)) < floor) {
        std::ostringstream os;
        os << "grid: extra node " << *extra << " too close to node index "
           << index_of(i) << " (x_k = " << node(i) << ", floor " << floor
           << ")";
        throw std::invalid_argument(os.str());
      }
    }
    extra_ = extra;
  }

  GridKind kind_ = GridKind::kExplicit;
  bool implicit_ = false;
  double b_ = 0, offset_ = 0, eps_ = 0;
  long kmin_ = 0, kmax_ = 0;  // implicit window
  std::vector<double> nodes_;
  long index_origin_ = 0;
  std::optional<double> extra_;
  double lambda_ = 0, max_gap_ = 0;
};

/// x_k = k/b for k in [-K, K].
inline SamplingGrid uniform_grid(double b, long window,
                                 std::optional<double> extra = std::nullopt) {
  return SamplingGrid::make_implicit_uniform(b, -window, window, extra);
}

/// Asymmetric uniform window [kmin, kmax] (same lattice x_k = k/b).
inline SamplingGrid uniform_grid_window(
    double b, long kmin, long kmax,
    std::optional<double> extra = std::nullopt) {
  return SamplingGrid::make_implicit_uniform(b, kmin, kmax, extra);
}

/// Union of two uniform sequences {k/b} and {k/b + offset}, 0 < offset < 1/b.
inline SamplingGrid union_grid(double b, double offset, long window,
                               std::optional<double> extra = std::nullopt) {
  if (b <= 0) throw std::invalid_argument("union_grid: b must be > 0");
  if (!(offset > 0 && offset < 1.0 / b))
    throw std::invalid_argument("union_grid: offset must be in (0, 1/b)");
  std::vector<double> nodes;
  nodes.reserve(2 * (2 * window + 1));
  for (long k = -window; k <= window; ++k) {
    nodes.push_back(k / b);
    nodes.push_back(k / b + offset);
  }
  std::sort(nodes.begin(), nodes.end());
  return SamplingGrid::make_explicit(GridKind::kUnionOfUniform,
                                     std::move(nodes), -2 * window, extra, b,
                                     offset);
}

/// Zero set of S(z) = z J0(pi z/2) J0(pi(z+eps)/2): {0} and the shifted and
/// unshifted scaled J0 zeros +-2 j_m/pi, +-2 j_m/pi - eps for m = 1..window.
inline SamplingGrid bessel_grid(double eps, long window,
                                std::optional<double> extra = std::nullopt,
                                double min_gap_floor = 1e-3) {
  if (!(eps > 0)) throw std::invalid_argument("bessel_grid: eps must be > 0");
  if (window < 1) throw std::invalid_argument("bessel_grid: window >= 1");
  std::vector<double> nodes;
  nodes.reserve(4 * window + 1);
  nodes.push_back(0.0);
  for (long m = 1; m <= window; ++m) {
    const double z = 2.0 * specfun::j0_zero(static_cast<int>(m)) / kPi;
    nodes.push_back(z);
    nodes.push_back(z - eps);
    nodes.push_back(-z);
    nodes.push_back(-z - eps);
  }
  std::sort(nodes.begin(), nodes.end());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double gap = nodes[i] - nodes[i - 1];
    if (gap < min_gap_floor) {
      std::ostringstream os;
      os << "bessel_grid: eps = " << eps
         << " leaves the grid unseparated (gap " << gap << " between "
         << nodes[i - 1] << " and " << nodes[i] << ")";
      throw std::invalid_argument(os.str());
    }
  }
  // index origin: node 0.0 sits at conceptual index 0; 2*window nodes precede.
  return SamplingGrid::make_explicit(GridKind::kBessel, std::move(nodes),
                                     -2 * window, extra, 0, 0, eps);
}

inline SamplingGrid explicit_grid(std::vector<double> nodes,
                                  long index_origin = 0,
                                  std::optional<double> extra = std::nullopt) {
  return SamplingGrid::make_explicit(GridKind::kExplicit, std::move(nodes),
                                     index_origin, extra);
}

enum class GenFuncForm { kClosedForm, kTruncatedProduct };

/// Evaluator bundle for a generating function S: S(z) on C (where available),
/// a real-axis fast path, S'(x_k) by conceptual node index, and the
/// exponential type pi*b.
struct GeneratingFunction {
  GenFuncForm form = GenFuncForm::kClosedForm;
  double type_constant = 0.0;  // pi * b
  double product_radius = 0.0;
  std::function<Complex(Complex)> eval;
  std::function<double(double)> eval_real;
  std::function<double(long)> deriv_at_node;
};

/// Closed-form S for uniform, union-of-uniform and Bessel grids.
inline GeneratingFunction generating_function(const SamplingGrid& g) {
  GeneratingFunction s;
  s.form = GenFuncForm::kClosedForm;
  switch (g.kind()) {
    case GridKind::kUniform: {
      const double b = g.density();
      s.type_constant = kPi * b;
      s.eval = [b](Complex z) { return std::sin(kPi * b * z) / (kPi * b); };
      s.eval_real = [b](double t) { return std::sin(kPi * b * t) / (kPi * b); };
      s.deriv_at_node = [](long k) { return (k % 2 == 0) ? 1.0 : -1.0; };
      return s;
    }
    case GridKind::kUnionOfUniform: {
      const double b = g.density(), phi = g.union_offset();
      s.type_constant = 2.0 * kPi * b;
      const double pb = kPi * b;
      s.eval = [b, phi, pb](Complex z) {
        return std::sin(pb * z) * std::sin(pb * (z - phi)) / (pb * pb);
      };
      s.eval_real = [b, phi, pb](double t) {
        return std::sin(pb * t) * std::sin(pb * (t - phi)) / (pb * pb);
      };
      // S'(z) = sin(pi b (2z - phi)) / (pi b); exact at the nodes.
      // capture node positions by value through the grid copy
      auto nodes = g.materialize_nodes();
      const long origin = g.index_origin();
      s.deriv_at_node = [nodes, origin, phi, pb](long k) {
        const double x = nodes[static_cast<std::size_t>(k - origin)];
        return std::sin(pb * (2.0 * x - phi)) / pb;
      };
      return s;
    }
    case GridKind::kBessel: {
      const double eps = g.bessel_epsilon();
      s.type_constant = kPi;
      auto real_eval = [eps](double t) {
        return t * specfun::bessel_j0(kPi * t / 2.0) *
               specfun::bessel_j0(kPi * (t + eps) / 2.0);
      };
      s.eval_real = real_eval;
      s.eval = [real_eval](Complex z) -> Complex {
        if (z.imag() != 0.0)
          throw std::domain_error(
              "bessel generating function: J0 evaluator is real-axis only; "
              "use product_generating_function for complex arguments");
        return real_eval(z.real());
      };
      auto nodes = g.materialize_nodes();
      const long origin = g.index_origin();
      s.deriv_at_node = [nodes, origin, eps](long k) {
        const double x = nodes[static_cast<std::size_t>(k - origin)];
        const double a = specfun::bessel_j0(kPi * x / 2.0);
        const double bb = specfun::bessel_j0(kPi * (x + eps) / 2.0);
        if (std::fabs(x) < 1e-12) return bb;  // S'(0) = J0(0) J0(pi eps/2)
        if (std::fabs(a) <= std::fabs(bb))
          return x * (-specfun::bessel_j1(kPi * x / 2.0) * kPi / 2.0) * bb;
        return x * a * (-specfun::bessel_j1(kPi * (x + eps) / 2.0) * kPi / 2.0);
      };
      return s;
    }
    case GridKind::kExplicit:
      throw std::invalid_argument(
          "generating_function: explicit grids have no closed form; use "
          "product_generating_function");
  }
  throw std::logic_error("unreachable");
}

/// Truncated symmetric canonical product, Eq-style
/// S_r(z) = z^{delta} prod_{0<|x_k|<r} (1 - z/x_k), with factors for nodes of
/// opposite sign paired by magnitude to mimic the symmetric limit.
inline GeneratingFunction product_generating_function(const SamplingGrid& g,
                                                      double radius) {
  if (!(radius > 0))
    throw std::invalid_argument("product_generating_function: radius > 0");
  const double front = g.front(), back = g.back();
  if (front > 0 || back < 0 || radius > std::min(-front, back) + 1e-12)
    throw std::invalid_argument(
        "product_generating_function: window does not cover |x| < radius "
        "(insufficient nodes)");

  std::vector<double> pos, neg;  // negatives stored by magnitude
  bool has_zero = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.node(i);
    if (x == 0.0) {
      has_zero = true;
    } else if (std::fabs(x) < radius) {
      (x > 0 ? pos : neg).push_back(std::fabs(x));
    }
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());

  const int delta = has_zero ? 1 : 0;
  const std::size_t npair = std::min(pos.size(), neg.size());

  auto eval_generic = [pos, neg, npair, delta](Complex z) {
    Complex prod = 1.0;
    for (std::size_t i = 0; i < npair; ++i)
      prod *= (1.0 - z / pos[i]) * (1.0 + z / neg[i]);
    for (std::size_t i = npair; i < pos.size(); ++i) prod *= 1.0 - z / pos[i];
    for (std::size_t i = npair; i < neg.size(); ++i) prod *= 1.0 + z / neg[i];
    return delta ? z * prod : prod;
  };
  auto eval_real = [pos, neg, npair, delta](double t) {
    double prod = 1.0;
    for (std::size_t i = 0; i < npair; ++i)
      prod *= (1.0 - t / pos[i]) * (1.0 + t / neg[i]);
    for (std::size_t i = npair; i < pos.size(); ++i) prod *= 1.0 - t / pos[i];
    for (std::size_t i = npair; i < neg.size(); ++i) prod *= 1.0 + t / neg[i];
    return delta ? t * prod : prod;
  };

  // nominal type by grid kind
  double type_c = 0.0;
  switch (g.kind()) {
    case GridKind::kUniform: type_c = kPi * g.density(); break;
    case GridKind::kUnionOfUniform: type_c = 2.0 * kPi * g.density(); break;
    case GridKind::kBessel: type_c = kPi; break;
    case GridKind::kExplicit: {
      const double span = g.back() - g.front();
      type_c = span > 0 ? kPi * (g.size() - 1) / span : 0.0;
      break;
    }
  }

  GeneratingFunction s;
  s.form = GenFuncForm::kTruncatedProduct;
  s.type_constant = type_c;
  s.product_radius = radius;
  s.eval = eval_generic;
  s.eval_real = eval_real;

  // S'(x_k): drop the k-th factor, multiply by its derivative (-1/x_k), or
  // the z^{delta} rule at the origin.
  auto nodes = g.materialize_nodes();
  const long origin = g.index_origin();
  s.deriv_at_node = [nodes, origin, pos, neg, npair, delta,
                     radius](long k) -> double {
    const double xk = nodes.at(static_cast<std::size_t>(k - origin));
    if (std::fabs(xk) >= radius && xk != 0.0)
      throw std::invalid_argument(
          "product S': node outside truncation radius");
    if (xk == 0.0) {
      // d/dz [z * prod] at 0 = prod(0) = 1
      return 1.0;
    }
    double prod = 1.0;
    for (std::size_t i = 0; i < npair; ++i) {
      const double fp = (pos[i] == xk) ? 1.0 : 1.0 - xk / pos[i];
      const double fn = (-neg[i] == xk) ? 1.0 : 1.0 + xk / neg[i];
      prod *= fp * fn;
    }
    for (std::size_t i = npair; i < pos.size(); ++i)
      if (pos[i] != xk) prod *= 1.0 - xk / pos[i];
    for (std::size_t i = npair; i < neg.size(); ++i)
      if (-neg[i] != xk) prod *= 1.0 + xk / neg[i];
    if (delta) prod *= xk;
    return prod * (-1.0 / xk);
  };
  return s;
}

/// Enforces the defining invariants S(x_k) = 0, S'(x_k) != 0 over the window
/// (subsampled on very large windows).  Throws on violation.
inline void check_generating_function(const SamplingGrid& g,
                                      const GeneratingFunction& s,
                                      double zero_tol = 1e-8) {
  const std::size_t n = g.size();
  const std::size_t stride = n > 20000 ? n / 10000 : 1;
  for (std::size_t i = 0; i < n; i += stride) {
    const double x = g.node(i);
    const double v = s.eval_real(x);
    if (!(std::fabs(v) <= zero_tol)) {
      std::ostringstream os;
      os << "generating function does not vanish at node index "
         << g.index_of(i) << ": S(" << x << ") = " << v;
      throw std::invalid_argument(os.str());
    }
    const double d = s.deriv_at_node(g.index_of(i));
    if (!(std::fabs(d) > 1e-12)) {
      std::ostringstream os;
      os << "generating function has vanishing derivative at node index "
         << g.index_of(i);
      throw std::invalid_argument(os.str());
    }
  }
}

/// Empirical sine-type check over a rectangle: samples
/// e^{-pi b |Im z|} |S(z)| on a lattice restricted to dist(z, X) > eps.
struct SineTypeReport {
  double epsilon = 0;
  double c1 = 0;  // empirical lower bound
  double c2 = 0;  // empirical upper bound
  std::string grid_of_test_points;
  std::size_t points_tested = 0;
  bool passed = false;
};

inline SineTypeReport verify_sine_type(const GeneratingFunction& s,
                                       const SamplingGrid& g, double eps,
                                       double x0, double x1, double y0,
                                       double y1, std::size_t nx = 201,
                                       std::size_t ny = 101,
                                       double pass_floor = 1e-6) {
  if (!(eps > 0)) throw std::invalid_argument("verify_sine_type: eps > 0");
  if (!(x1 >= x0 && y1 >= y0) || nx < 1 || ny < 1)
    throw std::invalid_argument("verify_sine_type: bad rectangle");
  const double b_exp = s.type_constant;
  double c1 = std::numeric_limits<double>::infinity(), c2 = 0.0;
  std::size_t tested = 0;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double y = ny == 1 ? y0 : y0 + (y1 - y0) * iy / double(ny - 1);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double x = nx == 1 ? x0 : x0 + (x1 - x0) * ix / double(nx - 1);
      const double dx = x - g.node(g.nearest_index(x));
      const double dist = std::hypot(dx, y);
      if (dist <= eps) continue;
      const double m = std::exp(-b_exp * std::fabs(y)) * std::abs(s.eval({x, y}));
      c1 = std::min(c1, m);
      c2 = std::max(c2, m);
      ++tested;
    }
  }
  if (tested == 0)
    throw std::invalid_argument(
        "verify_sine_type: no lattice point satisfies dist(z, X) > eps");
  SineTypeReport rep;
  rep.epsilon = eps;
  rep.c1 = c1;
  rep.c2 = c2;
  rep.points_tested = tested;
  {
    std::ostringstream os;
    os << nx << "x" << ny << " lattice on [" << x0 << "," << x1 << "]x[" << y0
       << "," << y1 << "]";
    rep.grid_of_test_points = os.str();
  }
  rep.passed = c1 > pass_floor && std::isfinite(c2);
  return rep;
}

/// inf over window-contained intervals [a, a+r) of N(X, [a,a+r))/r.  The
/// infimum over a is attained as a crosses nodes, so both closed-left and
/// just-after-node candidates are swept.
inline double lower_uniform_density(const SamplingGrid& g, double r) {
  if (!(r > 0)) throw std::invalid_argument("lower_uniform_density: r > 0");
  const auto nodes = g.materialize_nodes();
  const double front = nodes.front(), back = nodes.back();
  if (r > back - front + 1e-12)
    throw std::invalid_argument("lower_uniform_density: r exceeds window span");

  auto count_in = [&](double lo, bool open_left, double hi, bool closed_right) {
    auto l = open_left ? std::upper_bound(nodes.begin(), nodes.end(), lo)
                       : std::lower_bound(nodes.begin(), nodes.end(), lo);
    auto h = closed_right ? std::upper_bound(nodes.begin(), nodes.end(), hi)
                          : std::lower_bound(nodes.begin(), nodes.end(), hi);
    return static_cast<double>(h - l);
  };

  double best = std::numeric_limits<double>::infinity();
  for (double a : nodes) {
    if (a + r > back + 1e-12) break;
    best = std::min(best, count_in(a, false, a + r, false));  // [a, a+r)
    best = std::min(best, count_in(a, true, a + r, true));    // (a, a+r]
  }
  if (front + r <= back + 1e-12)
    best = std::min(best, count_in(front, false, front + r, false));
  return best / r;
}

}  // namespace bandlim::grid
