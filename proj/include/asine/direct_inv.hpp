#pragma once

// Inversion of T_alpha for alpha > 1 by deconvolution on the multiplicative
// group. With Hg(x) = integral of y^((c-3)/2 - i log x) g(1/y) dy the transform
// factorises as Hg(e^t) = mu(e^t) * F(t), where F is the Mellin-type transform
// of f recovered by H2. Dividing by mu where |mu| > epsilon regularises.

#include <asine/diagnostics.hpp>
#include <asine/error.hpp>
#include <asine/grid.hpp>
#include <asine/quad.hpp>
#include <asine/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace asine {

using cplx = std::complex<double>;

/// Weight exponent c: 2 alpha - 1 for 1 < alpha < 2, else 3.
inline double choose_weight_exponent(const Alpha& alpha) {
  const double a = alpha.value();
  if (!(a > 1.0)) throw DomainError("choose_weight_exponent: direct inversion needs alpha > 1");
  return a < 2.0 ? 2.0 * a - 1.0 : 3.0;
}

struct DirectConfig {
  Alpha alpha;
  double weight_exponent;
  double epsilon = 0.025;
  /// Abscissae t = log x at which mu and Hg are tabulated.
  UniformGrid mu_grid{-8.0, 16.0 / 2047.0, 2048};
  /// The mu integral is taken lobe by lobe up to t_cut (rounded up to a multiple
  /// of pi); beyond it |sin|^alpha is replaced by its mean C_alpha/pi and the
  /// remaining power integral is done in closed form.
  double t_cut = 400.0 * std::numbers::pi;
  QuadSpec quad{1e-10, 1e-10, 2000, 30.0};
  /// Step of the u = -log y grid used for Hg.
  double u_step = 2e-3;

  explicit DirectConfig(Alpha a) : alpha(a), weight_exponent(choose_weight_exponent(a)) {}
  DirectConfig(Alpha a, double c, double eps) : alpha(a), weight_exponent(c), epsilon(eps) { validate(); }

  void validate() const {
    const double a = alpha.value();
    if (!(a > 1.0)) throw DomainError("DirectConfig: alpha must be > 1");
    if (!(weight_exponent > 1.0 && weight_exponent <= 2.0 * a - 1.0 + 1e-12)) {
      throw DomainError("DirectConfig: weight exponent c must lie in (1, 2 alpha - 1]");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("DirectConfig: epsilon must lie in (0, 1)");
    if (!(t_cut >= std::numbers::pi)) throw DomainError("DirectConfig: t_cut must be at least pi");
    if (!(u_step > 0.0 && u_step < 0.1)) throw DomainError("DirectConfig: u_step must lie in (0, 0.1)");
    quad.validate();
  }

  /// (c + 1)/2, the power of the weight inside mu.
  [[nodiscard]] double p() const { return (weight_exponent + 1.0) / 2.0; }
};

namespace detail {

inline cplx mu_at_log(double s, const DirectConfig& cfg) {
  const Alpha& alpha = cfg.alpha;
  const double a = alpha.value();
  const cplx expo(-cfg.p(), s);
  auto power = [&](double v) { return std::exp(expo * std::log(v)); };
  constexpr double pi = std::numbers::pi;

  // First lobe near 0: |sin v|^alpha v^(-p + is) ~ v^(alpha - p + is), alpha - p >= 0.
  auto near_zero = [&](double v) { return std::pow(std::sin(v), a) * power(v); };
  auto rem = [&](double d) {
    const cplx e = cplx(a + 1.0, 0.0) + expo;
    return std::exp(e * std::log(d)) / e;
  };
  const std::size_t lobes = static_cast<std::size_t>(std::ceil(cfg.t_cut / pi - 1e-9));
  const double lobe_tol = cfg.quad.abs_tol / static_cast<double>(lobes + 1);
  cplx total = graded_integral(near_zero, pi / 2.0, 1e-12, rem, lobe_tol, cfg.quad);
  total += lobe_integral(power, alpha, pi / 2.0, pi, lobe_tol, cfg.quad);

  const double big_t = static_cast<double>(lobes) * pi;
  if (lobes > 1) total += integrate_lobes(power, alpha, 1.0, 0.0, pi, big_t, cfg.quad);
  const cplx tail_expo = cplx(1.0, 0.0) + expo;
  total += sin_power_integral(alpha) / pi * std::exp(tail_expo * std::log(big_t)) / -tail_expo;
  return total;
}

inline bool symmetric_grid(const UniformGrid& g) {
  return std::abs(g.start() + g.back()) <= 1e-12 * std::max(1.0, std::abs(g.start()));
}

// phi(u) = e^{u(c-1)/2} g(e^{-u}) on an odd number of equidistant nodes in [u_min, u_max].
// Beyond u_max, phi is continued as phi(u_max) e^{-decay (u - u_max)}, which follows
// from g(y) ~ y^alpha near 0.
struct LogSamples {
  double u_min;
  double h;
  std::vector<double> phi;
  double decay = 0.0;
};

template <typename G>
LogSamples log_samples(G&& g, double u_min, double u_max, const DirectConfig& cfg) {
  const double half_c = (cfg.weight_exponent - 1.0) / 2.0;
  auto intervals = static_cast<std::size_t>(std::ceil((u_max - u_min) / cfg.u_step));
  if (intervals % 2 == 1) ++intervals;
  intervals = std::max<std::size_t>(intervals, 2);
  const double h = (u_max - u_min) / static_cast<double>(intervals);
  LogSamples s{u_min, h, std::vector<double>(intervals + 1), cfg.alpha.value() - half_c};
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double u = u_min + static_cast<double>(i) * h;
    s.phi[i] = std::exp(u * half_c) * g(std::exp(-u));
  }
  return s;
}

// Simpson's rule for the integral of phi(u) e^{-iut}.
inline cplx log_fourier(const LogSamples& s, double t) {
  const std::size_t n = s.phi.size();
  const cplx step = std::polar(1.0, -t * s.h);
  cplx rot = std::polar(1.0, -t * s.u_min);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 256 == 0) rot = std::polar(1.0, -t * (s.u_min + static_cast<double>(i) * s.h));
    const double w = (i == 0 || i + 1 == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += w * s.phi[i] * rot;
    rot *= step;
  }
  sum *= s.h / 3.0;
  if (s.decay > 0.0) {
    const double u_max = s.u_min + static_cast<double>(n - 1) * s.h;
    sum += s.phi.back() * std::polar(1.0, -t * u_max) / cplx(s.decay, t);
  }
  return sum;
}

inline double default_u_min(const DirectConfig& cfg) {
  // e^{u(c-1)/2} falls below 1e-12.
  return 2.0 * std::log(1e-12) / (cfg.weight_exponent - 1.0);
}

inline LogSamples log_samples(const SampledFunction<>& g, const DirectConfig& cfg) {
  const UniformGrid& grid = g.grid();
  double first_positive = grid.start() > 0.0 ? grid.start() : grid.start() + grid.step();
  if (!(first_positive > 0.0)) {
    const auto k = static_cast<std::size_t>(std::floor(-grid.start() / grid.step())) + 1;
    first_positive = grid.abscissa(std::min(k, grid.count() - 1));
  }
  if (!(first_positive > 0.0)) throw DomainError("invert_direct: g has no samples at positive abscissae");
  const double u_max = std::log(1.0 / first_positive);
  const double u_min = std::min(default_u_min(cfg), u_max - 1.0);
  return log_samples([&](double y) { return eval_linear(g, y); }, u_min, u_max, cfg);
}

}  // namespace detail

/// mu(x) = integral over (0, inf) of |sin v|^alpha v^(-(c+1)/2) e^{i log v log x} dv.
inline cplx mu(double x, const DirectConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("mu: x must be > 0");
  cfg.validate();
  return detail::mu_at_log(std::log(x), cfg);
}

/// mu tabulated at x = e^t for t on cfg.mu_grid; uses mu(1/x) = conj(mu(x)) on symmetric grids.
inline SampledFunction<cplx> mu_table(const DirectConfig& cfg) {
  cfg.validate();
  const UniformGrid& g = cfg.mu_grid;
  std::vector<cplx> v(g.count());
  const bool symmetric = detail::symmetric_grid(g);
  for (std::size_t i = 0; i < g.count(); ++i) {
    const std::size_t mirror = g.count() - 1 - i;
    if (symmetric && mirror < i) {
      v[i] = std::conj(v[mirror]);
    } else {
      v[i] = detail::mu_at_log(g.abscissa(i), cfg);
    }
  }
  return {g, std::move(v)};
}

/// Hg(x) = integral over (0, inf) of y^((c-3)/2 - i log x) g(1/y) dy, computed as
/// integral over u of e^{u(c-1)/2} g(e^{-u}) e^{-iu log x} on the span of the samples.
inline cplx h_forward(const SampledFunction<>& g, double x, const DirectConfig& cfg) {
  if (!(x > 0.0)) throw DomainError("h_forward: x must be > 0");
  cfg.validate();
  return detail::log_fourier(detail::log_samples(g, cfg), std::log(x));
}

/// H2 w(z) = (z^(-(c+1)/2) / 2pi) integral over (0, inf) of w(x) x^(i log z - 1) dx, for w
/// tabulated on the log-grid cfg.mu_grid (trapezoid rule in t = log x).
struct H2Value {
  double real;
  double imag;
};

inline H2Value h2_inverse_detailed(const SampledFunction<cplx>& w, double z, const DirectConfig& cfg) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("h2_inverse: z must be > 0");
  const UniformGrid& g = w.grid();
  const double lz = std::log(z);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == cplx(0.0, 0.0)) continue;
    const double weight = (i == 0 || i + 1 == w.size()) ? 0.5 : 1.0;
    sum += weight * w[i] * std::polar(1.0, g.abscissa(i) * lz);
  }
  const cplx value = sum * g.step() * std::pow(z, -cfg.p()) / (2.0 * std::numbers::pi);
  return {value.real(), value.imag()};
}

inline double h2_inverse(const SampledFunction<cplx>& w, double z, const DirectConfig& cfg) {
  return h2_inverse_detailed(w, z, cfg).real;
}

/// Reusable inverter: mu is tabulated once per configuration.
class DirectInverter {
public:
  explicit DirectInverter(DirectConfig cfg) : cfg_(std::move(cfg)), mu_(mu_table(cfg_)) {}

  [[nodiscard]] const DirectConfig& config() const noexcept { return cfg_; }
  [[nodiscard]] const SampledFunction<cplx>& mu_values() const noexcept { return mu_; }

  /// Cut-off may be changed without re-tabulating mu.
  void set_epsilon(double eps) {
    cfg_.epsilon = eps;
    cfg_.validate();
  }

  [[nodiscard]] SampledFunction<> invert(const SampledFunction<>& g, const UniformGrid& out,
                                         Diagnostics* diag = nullptr) const {
    return from_log_samples(detail::log_samples(g, cfg_), out, diag);
  }

  /// g given as a callable on (0, inf), e.g. a closed form.
  template <typename G>
  [[nodiscard]] SampledFunction<> invert_callable(G&& g, const UniformGrid& out, Diagnostics* diag = nullptr) const {
    const double decay = cfg_.alpha.value() - (cfg_.weight_exponent - 1.0) / 2.0;
    const double u_max = -std::log(1e-12) / std::max(decay, 0.25);
    return from_log_samples(detail::log_samples(g, detail::default_u_min(cfg_), u_max, cfg_), out, diag);
  }

private:
  [[nodiscard]] SampledFunction<> from_log_samples(const detail::LogSamples& s, const UniformGrid& out,
                                                   Diagnostics* diag) const {
    if (!(out.start() > 0.0)) throw DomainError("invert_direct: output abscissae must be > 0");
    const UniformGrid& g = cfg_.mu_grid;
    std::vector<cplx> w(g.count(), cplx(0.0, 0.0));
    std::size_t kept = 0;
    for (std::size_t i = 0; i < g.count(); ++i) {
      if (std::abs(mu_[i]) > cfg_.epsilon) {
        w[i] = detail::log_fourier(s, g.abscissa(i)) / mu_[i];
        ++kept;
      }
    }
    const SampledFunction<cplx> weights(g, std::move(w));
    double worst_ratio = 0.0;
    std::vector<double> v(out.count());
    for (std::size_t k = 0; k < out.count(); ++k) {
      const H2Value h = h2_inverse_detailed(weights, out.abscissa(k), cfg_);
      v[k] = h.real;
      if (h.real != 0.0) worst_ratio = std::max(worst_ratio, std::abs(h.imag) / std::abs(h.real));
    }
    if (diag) {
      diag->set("mu_points_kept", static_cast<double>(kept));
      diag->set("max_imag_ratio", worst_ratio);
      if (kept == 0) diag->warn("no tabulated |mu| exceeds epsilon; the estimate is identically zero");
      if (worst_ratio > 1e-2) diag->warn("H2 produced a sizeable imaginary part (ratio " + std::to_string(worst_ratio) + ")");
    }
    return {out, std::move(v)};
  }

  DirectConfig cfg_;
  SampledFunction<cplx> mu_;
};

/// f~ = H2( 1{|mu| > epsilon} Hg / mu ) on out_grid.
inline SampledFunction<> invert_direct(const SampledFunction<>& g, const DirectConfig& cfg, const UniformGrid& out_grid,
                                       Diagnostics* diag = nullptr) {
  return DirectInverter(cfg).invert(g, out_grid, diag);
}

}  // namespace asine
