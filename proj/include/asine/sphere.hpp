#pragma once

// The spherical alpha-cosine transform on the unit circle, Fourier coefficients
// of periodic samples, and inversion of the transform for pi-periodic densities.

#include <asine/diagnostics.hpp>
#include <asine/error.hpp>
#include <asine/grid.hpp>
#include <asine/quad.hpp>
#include <asine/specfun.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace asine {

namespace detail {

inline void require_circle_grid(const UniformGrid& g, const char* who) {
  const double period = g.step() * static_cast<double>(g.count());
  if (std::abs(period - 2.0 * std::numbers::pi) > 1e-9) {
    throw DomainError(std::string(who) + ": grid must cover one period of length 2 pi");
  }
}

}  // namespace detail

/// A probability density on [-pi, pi) sampled on M equidistant points.
class PeriodicDensity {
public:
  static constexpr double tolerance = 1e-8;

  PeriodicDensity(SampledFunction<> values, bool certified_pi_periodic)
      : values_(std::move(values)), certified_(certified_pi_periodic) {
    detail::require_circle_grid(values_.grid(), "PeriodicDensity");
    detail::CompensatedSum mass;
    for (double v : values_.values()) {
      if (v < 0.0) throw DomainError("PeriodicDensity: negative density value");
      mass.add(v);
    }
    const double total = mass.value() * values_.grid().step();
    if (std::abs(total - 1.0) > tolerance) {
      throw DomainError("PeriodicDensity: total mass " + std::to_string(total) + " differs from 1");
    }
    if (certified_) {
      const std::size_t m = values_.size();
      if (m % 2 != 0) throw DomainError("PeriodicDensity: pi-periodicity needs an even number of points");
      for (std::size_t i = 0; i < m / 2; ++i) {
        if (std::abs(values_[i] - values_[i + m / 2]) > tolerance) {
          throw DomainError("PeriodicDensity: samples are not pi-periodic");
        }
      }
    }
  }

  [[nodiscard]] const SampledFunction<>& values() const noexcept { return values_; }
  [[nodiscard]] const UniformGrid& grid() const noexcept { return values_.grid(); }
  [[nodiscard]] bool certified_pi_periodic() const noexcept { return certified_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

private:
  SampledFunction<> values_;
  bool certified_;
};

/// Complex Fourier coefficients u^(n) = (1/2pi) integral of e^{-inx} u(x), n = -N..N.
class CircleCoeffs {
public:
  CircleCoeffs(std::size_t maxn, std::vector<std::complex<double>> coeffs) : maxn_(maxn), c_(std::move(coeffs)) {
    if (c_.size() != 2 * maxn_ + 1) throw DomainError("CircleCoeffs: expected 2N+1 coefficients");
  }
  [[nodiscard]] std::size_t maxn() const noexcept { return maxn_; }
  [[nodiscard]] std::complex<double> at(long long n) const {
    const auto big = static_cast<long long>(maxn_);
    if (n < -big || n > big) throw DomainError("CircleCoeffs::at: index out of range");
    return c_[static_cast<std::size_t>(n + big)];
  }

private:
  std::size_t maxn_;
  std::vector<std::complex<double>> c_;
};

/// Periodic trapezoid rule for the coefficients of samples covering one period.
inline CircleCoeffs circle_fourier_coeffs(const SampledFunction<>& u, std::size_t maxn) {
  detail::require_circle_grid(u.grid(), "circle_fourier_coeffs");
  const std::size_t m = u.size();
  if (m < 4 * maxn + 4) {
    throw DomainError("circle_fourier_coeffs: need at least 4N+4 grid points for N = " + std::to_string(maxn));
  }
  const auto big = static_cast<long long>(maxn);
  std::vector<std::complex<double>> out(2 * maxn + 1);
  for (long long n = 0; n <= big; ++n) {
    detail::CompensatedSum re;
    detail::CompensatedSum im;
    for (std::size_t k = 0; k < m; ++k) {
      const double phase = -static_cast<double>(n) * u.abscissa(k);
      re.add(u[k] * std::cos(phase));
      im.add(u[k] * std::sin(phase));
    }
    const std::complex<double> c(re.value() / static_cast<double>(m), im.value() / static_cast<double>(m));
    out[static_cast<std::size_t>(big + n)] = c;
    out[static_cast<std::size_t>(big - n)] = std::conj(c);
  }
  return {maxn, std::move(out)};
}

namespace detail {

// Trigonometric interpolant of M equidistant periodic samples.
class TrigInterpolant {
public:
  explicit TrigInterpolant(const SampledFunction<>& u) : start_(u.grid().start()) {
    const std::size_t m = u.size();
    const std::size_t top = m / 2;
    a_.assign(top + 1, 0.0);
    b_.assign(top + 1, 0.0);
    for (std::size_t j = 0; j <= top; ++j) {
      CompensatedSum ca;
      CompensatedSum sb;
      for (std::size_t k = 0; k < m; ++k) {
        // Reduce j*k mod m so the angle stays small and exact.
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % m) / static_cast<double>(m);
        ca.add(u[k] * std::cos(angle));
        sb.add(u[k] * std::sin(angle));
      }
      double scale = 2.0 / static_cast<double>(m);
      if (j == 0 || (m % 2 == 0 && j == top)) scale /= 2.0;
      a_[j] = ca.value() * scale;
      b_[j] = sb.value() * scale;
    }
    if (m % 2 == 0) b_[top] = 0.0;
  }

  [[nodiscard]] double operator()(double x) const {
    const double t = x - start_;
    const std::complex<double> step(std::cos(t), std::sin(t));
    std::complex<double> rot(1.0, 0.0);
    double sum = a_[0];
    for (std::size_t j = 1; j < a_.size(); ++j) {
      rot *= step;
      if (j % 64 == 0) rot = std::polar(1.0, static_cast<double>(j) * t);
      sum += a_[j] * rot.real() + b_[j] * rot.imag();
    }
    return sum;
  }

private:
  double start_;
  std::vector<double> a_;
  std::vector<double> b_;
};

}  // namespace detail

inline QuadSpec default_sphere_quad() {
  QuadSpec q;
  q.abs_tol = 1e-12;
  q.rel_tol = 1e-12;
  q.max_subdivisions = 2000;
  return q;
}

/// K f(y) = integral over [-pi, pi] of |cos(y - x)|^alpha f(x).
///
/// The density samples are replaced by their trigonometric interpolant and the
/// two kernel lobes between the zeros y +- pi/2 are integrated adaptively, with a
/// graded mesh toward the zeros unless alpha is an even integer.
inline double k_sphere(const PeriodicDensity& f, const Alpha& alpha, double y,
                       const QuadSpec& spec = default_sphere_quad()) {
  const detail::TrigInterpolant interp(f.values());
  auto phi = [&](double theta) {
    return interp(y - std::numbers::pi / 2.0 + theta) + interp(y + std::numbers::pi / 2.0 + theta);
  };
  return detail::lobe_integral(phi, alpha, 0.0, std::numbers::pi, spec.abs_tol, spec);
}

/// K f sampled on the density's own grid. For certified pi-periodic densities only
/// the first half of the grid is integrated and the rest copied.
inline SampledFunction<> k_sphere_sampled(const PeriodicDensity& f, const Alpha& alpha,
                                          const QuadSpec& spec = default_sphere_quad()) {
  const detail::TrigInterpolant interp(f.values());
  const UniformGrid& grid = f.grid();
  const std::size_t m = grid.count();
  const std::size_t computed = f.certified_pi_periodic() ? m / 2 : m;
  std::vector<double> v(m);
  for (std::size_t i = 0; i < computed; ++i) {
    const double y = grid.abscissa(i);
    auto phi = [&](double theta) {
      return interp(y - std::numbers::pi / 2.0 + theta) + interp(y + std::numbers::pi / 2.0 + theta);
    };
    v[i] = detail::lobe_integral(phi, alpha, 0.0, std::numbers::pi, spec.abs_tol, spec);
  }
  for (std::size_t i = computed; i < m; ++i) v[i] = v[i - computed];
  return {grid, std::move(v)};
}

/// Density from samples of its spherical alpha-cosine transform:
/// f^(2n) = (K f)^(2n) / (2 pi c~_|n|) for 1 <= |n| <= N, f^(0) = 1/(2pi), odd
/// coefficients zero. Negative values of the truncated series are clipped and
/// the result renormalised; the clipped mass goes to diag as "clipped_mass".
inline PeriodicDensity invert_sphere(const SampledFunction<>& kf, const Alpha& alpha, std::size_t maxn,
                                     Diagnostics* diag = nullptr) {
  if (alpha.is_even_integer()) {
    throw EvenIntegerAlpha("invert_sphere: alpha in {0, 2, 4, ...} loses Fourier coefficients; inversion impossible");
  }
  if (maxn == 0) throw DomainError("invert_sphere: N must be positive");
  const CoefficientTable ct = cosine_coeffs(alpha, maxn);
  for (std::size_t n = 1; n <= maxn; ++n) {
    if (std::abs(ct[n]) < 1e-13) {
      throw CoefficientUnderflow("invert_sphere: |c~_" + std::to_string(n) + "| is below 1e-13; lower N");
    }
  }
  const CircleCoeffs kc = circle_fourier_coeffs(kf, 2 * maxn);
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<std::complex<double>> fc(maxn + 1);
  for (std::size_t n = 1; n <= maxn; ++n) fc[n] = kc.at(2 * static_cast<long long>(n)) / (two_pi * ct[n]);

  const UniformGrid& grid = kf.grid();
  std::vector<double> v(grid.count());
  detail::CompensatedSum negative;
  detail::CompensatedSum mass;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = grid.abscissa(i);
    double s = 1.0 / two_pi;
    for (std::size_t n = 1; n <= maxn; ++n) {
      s += 2.0 * (fc[n] * std::polar(1.0, 2.0 * static_cast<double>(n) * x)).real();
    }
    if (s < 0.0) {
      negative.add(-s);
      s = 0.0;
    }
    v[i] = s;
    mass.add(s);
  }
  const double total = mass.value() * grid.step();
  if (!(total > 0.0)) throw NonConvergence("invert_sphere: reconstruction has no positive mass");
  for (double& x : v) x /= total;
  if (diag) {
    diag->set("clipped_mass", negative.value() * grid.step());
    if (negative.value() > 0.0) diag->warn("negative values of the truncated series were clipped to 0");
  }
  return {SampledFunction<>(grid, std::move(v)), grid.count() % 2 == 0};
}

/// Example circle densities.
namespace circle {

inline UniformGrid default_grid(std::size_t m = 512) {
  return UniformGrid::periodic(-std::numbers::pi, 2.0 * std::numbers::pi, m);
}

inline double shifted_sine_pdf(double x, double h) { return std::abs(std::sin(x - h)) / 4.0; }

inline double vonmises4_pdf(double x, double h) {
  return std::exp(std::cos(4.0 * (x - h))) / (2.0 * std::numbers::pi * std::cyl_bessel_i(0.0, 1.0));
}

/// Watson density normalised on [-pi, pi): e^{kappa cos^2(x - mu)} / (2 pi M(1/2, 1, kappa)).
inline double watson_pdf(double x, double mu, double kappa) {
  const double c = std::cos(x - mu);
  return std::exp(kappa * c * c) / (2.0 * std::numbers::pi * kummer_m(0.5, 1.0, kappa));
}

namespace detail {

inline PeriodicDensity renormalised(const UniformGrid& grid, std::vector<double> v) {
  asine::detail::CompensatedSum s;
  for (double x : v) s.add(x);
  const double total = s.value() * grid.step();
  for (double& x : v) x /= total;
  return {SampledFunction<>(grid, std::move(v)), grid.count() % 2 == 0};
}

}  // namespace detail

/// |sin(x - h)|/4. The grid samples are scaled so their trapezoid mass is exactly 1;
/// the kinks make the unscaled sum differ from 1 by O(1/M^2).
inline PeriodicDensity shifted_sine(double h, const UniformGrid& grid = default_grid()) {
  std::vector<double> v(grid.count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = shifted_sine_pdf(grid.abscissa(i), h);
  return detail::renormalised(grid, std::move(v));
}

/// e^{cos(4(x - h))} / I, with I from the trapezoid sum.
inline PeriodicDensity vonmises4(double h, const UniformGrid& grid = default_grid()) {
  std::vector<double> v(grid.count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::exp(std::cos(4.0 * (grid.abscissa(i) - h)));
  return detail::renormalised(grid, std::move(v));
}

inline PeriodicDensity watson(double mu, double kappa, const UniformGrid& grid = default_grid()) {
  if (!(kappa >= 0.0)) throw DomainError("watson: kappa must be >= 0");
  std::vector<double> v(grid.count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = watson_pdf(grid.abscissa(i), mu, kappa);
  return {SampledFunction<>(grid, std::move(v)), grid.count() % 2 == 0};
}

}  // namespace circle

}  // namespace asine
