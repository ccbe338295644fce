#pragma once

// Adaptive Gauss-Kronrod quadrature and lobe-wise integration of |sin|^alpha
// and |cos|^alpha kernels.

#include <asine/error.hpp>
#include <asine/specfun.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <queue>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace asine {

struct QuadSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_subdivisions = 1000;
  double tail_cut = 30.0;

  void validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("QuadSpec: abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw DomainError("QuadSpec: rel_tol must be > 0");
    if (max_subdivisions < 8) throw DomainError("QuadSpec: max_subdivisions must be >= 8");
    if (!(tail_cut > 0.0) || !std::isfinite(tail_cut)) throw DomainError("QuadSpec: tail_cut must be > 0");
  }
};

template <typename T>
struct QuadResult {
  T value{};
  double error = 0.0;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kronrod_nodes{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kronrod_weights{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208704108523, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for kronrod_nodes[1], [3], ..., [9].
inline constexpr std::array<double, 5> gauss_weights{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <typename T, typename F>
QuadResult<T> gauss_kronrod21(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T kronrod = static_cast<T>(f(center)) * kronrod_weights[10];
  T gauss{};
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * kronrod_nodes[i];
    const T pair = static_cast<T>(f(center - dx)) + static_cast<T>(f(center + dx));
    kronrod += kronrod_weights[i] * pair;
    if (i % 2 == 1) gauss += gauss_weights[i / 2] * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <typename T>
struct Segment {
  double a;
  double b;
  QuadResult<T> r;
  bool operator<(const Segment& o) const { return r.error < o.r.error; }
};

}  // namespace detail

/// Globally adaptive G10/K21 integration of f over [a, b], returning the value
/// and the summed error estimate. Throws NonConvergence when the subdivision
/// budget runs out before max(abs_tol, rel_tol*|value|) is met.
template <typename F>
auto integrate_with_error(F&& f, double a, double b, const QuadSpec& spec) {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  spec.validate();
  if (!(a < b)) throw DomainError("integrate: requires a < b");

  std::priority_queue<detail::Segment<T>> heap;
  auto first = detail::gauss_kronrod21<T>(f, a, b);
  T total = first.value;
  double error = first.error;
  heap.push({a, b, first});
  std::size_t subdivisions = 0;
  while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (subdivisions >= spec.max_subdivisions) {
      throw NonConvergence("integrate: subdivision budget exhausted on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "], error estimate " + std::to_string(error));
    }
    const detail::Segment<T> worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NonConvergence("integrate: interval collapsed to machine precision near " + std::to_string(mid));
    }
    heap.pop();
    auto left = detail::gauss_kronrod21<T>(f, worst.a, mid);
    auto right = detail::gauss_kronrod21<T>(f, mid, worst.b);
    total += left.value + right.value - worst.r.value;
    error += left.error + right.error - worst.r.error;
    heap.push({worst.a, mid, left});
    heap.push({mid, worst.b, right});
    ++subdivisions;
    if (subdivisions % 64 == 0) {
      // Re-sum to stop drift from the running updates.
      T fresh{};
      double fresh_error = 0.0;
      auto copy = heap;
      while (!copy.empty()) {
        fresh += copy.top().r.value;
        fresh_error += copy.top().r.error;
        copy.pop();
      }
      total = fresh;
      error = fresh_error;
    }
  }
  return QuadResult<T>{total, error};
}

template <typename F>
auto integrate(F&& f, double a, double b, const QuadSpec& spec) {
  return integrate_with_error(std::forward<F>(f), a, b, spec).value;
}

namespace detail {

// Integral over [0, w] of h, taken on the pieces [w 2^-(m+1), w 2^-m] down to
// width min_width; the uncovered [0, delta] is supplied by remainder(delta).
template <typename H, typename Rem>
auto graded_integral(H&& h, double w, double min_width, Rem&& remainder, double abs_tol, const QuadSpec& spec) {
  using T = std::decay_t<std::invoke_result_t<H&, double>>;
  std::size_t levels = 1;
  for (double d = w / 2.0; d > min_width; d /= 2.0) ++levels;
  QuadSpec piece = spec;
  piece.abs_tol = abs_tol / static_cast<double>(levels + 1);
  T sum{};
  double hi = w;
  for (std::size_t m = 0; m < levels; ++m) {
    const double lo = hi / 2.0;
    sum += integrate(h, lo, hi, piece);
    hi = lo;
  }
  return static_cast<T>(sum + static_cast<T>(remainder(hi)));
}

// Integral over theta in [ta, tb] (a subset of [0, pi]) of sin(theta)^alpha * phi(theta).
// Endpoints that sit on a kernel zero are approached with a graded mesh unless
// alpha is an even integer, in which case the integrand is smooth.
template <typename Phi>
auto lobe_integral(Phi& phi, const Alpha& alpha, double ta, double tb, double abs_tol, const QuadSpec& spec) {
  using T = std::decay_t<std::invoke_result_t<Phi&, double>>;
  const double a = alpha.value();
  auto kernel = [a](double s) { return std::pow(std::abs(std::sin(s)), a); };
  if (alpha.is_even_integer()) {
    QuadSpec lobe = spec;
    lobe.abs_tol = abs_tol;
    return integrate([&](double t) { return kernel(t) * static_cast<T>(phi(t)); }, ta, tb, lobe);
  }

  constexpr double half_pi = std::numbers::pi / 2.0;
  const double min_width = std::max(1e-12, std::pow(1e-17, 1.0 / (a + 1.0)));
  const double span = tb - ta;
  T total{};

  auto plain = [&](double lo, double hi) {
    QuadSpec part = spec;
    part.abs_tol = abs_tol * (hi - lo) / span;
    return integrate([&](double t) { return kernel(t) * static_cast<T>(phi(t)); }, lo, hi, part);
  };

  const double left_end = std::min(tb, half_pi);
  if (ta < left_end) {
    if (ta == 0.0) {
      auto h = [&](double u) { return kernel(u) * static_cast<T>(phi(u)); };
      auto rem = [&](double d) { return static_cast<T>(phi(0.0)) * (std::pow(d, a + 1.0) / (a + 1.0)); };
      total += graded_integral(h, left_end, min_width, rem, abs_tol * (left_end - ta) / span, spec);
    } else {
      total += plain(ta, left_end);
    }
  }
  const double right_begin = std::max(ta, half_pi);
  if (right_begin < tb) {
    if (tb == std::numbers::pi) {
      auto h = [&](double u) { return kernel(u) * static_cast<T>(phi(std::numbers::pi - u)); };
      auto rem = [&](double d) {
        return static_cast<T>(phi(std::numbers::pi)) * (std::pow(d, a + 1.0) / (a + 1.0));
      };
      total += graded_integral(h, tb - right_begin, min_width, rem, abs_tol * (tb - right_begin) / span, spec);
    } else {
      total += plain(right_begin, tb);
    }
  }
  return total;
}

}  // namespace detail

/// Integral over x in [x_begin, x_end] of |sin(x*y + phase)|^alpha * f(x), split into
/// lobes between consecutive kernel zeros. Inside lobe k the substitution
/// x = (k*pi + theta - phase)/y turns the kernel into sin(theta)^alpha.
template <typename F>
auto integrate_lobes(F&& f, const Alpha& alpha, double y, double phase, double x_begin, double x_end,
                     const QuadSpec& spec) {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  spec.validate();
  if (!(y > 0.0)) throw DomainError("integrate_lobes: y must be > 0");
  if (!(x_end > x_begin)) throw DomainError("integrate_lobes: empty integration range");
  constexpr double pi = std::numbers::pi;
  const double span = x_end - x_begin;
  const auto first = static_cast<long long>(std::floor((x_begin * y + phase) / pi));
  const auto last = static_cast<long long>(std::ceil((x_end * y + phase) / pi));
  T total{};
  for (long long k = first; k < last; ++k) {
    const double base = static_cast<double>(k) * pi - phase;
    double ta = std::max(0.0, x_begin * y - base);
    double tb = std::min(pi, x_end * y - base);
    if (ta <= 1e-15) ta = 0.0;
    if (tb >= pi - 1e-15) tb = pi;
    if (!(tb > ta)) continue;
    auto phi = [&](double theta) { return static_cast<T>(f((base + theta) / y)) / y; };
    const double lobe_tol = spec.abs_tol * std::max((tb - ta) / y / span, 1e-3);
    total += detail::lobe_integral(phi, alpha, ta, tb, lobe_tol, spec);
  }
  return total;
}

/// Integral over [0, tail_cut] of |sin(x*y)|^alpha f(x) (or |cos(x*y)|^alpha f(x)),
/// split at the kernel zeros.
template <typename F>
auto integrate_kernel_split(F&& f, const Alpha& alpha, double y, const QuadSpec& spec, Kernel kind = Kernel::sine) {
  const double phase = kind == Kernel::sine ? 0.0 : std::numbers::pi / 2.0;
  return integrate_lobes(std::forward<F>(f), alpha, y, phase, 0.0, spec.tail_cut, spec);
}

}  // namespace asine
