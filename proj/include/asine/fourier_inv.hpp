#pragma once

// Inversion of T_alpha (and K_alpha) through the Fourier series of the kernel:
// samples g(nR/2N) determine F f(nR/N) via an upper-triangular system, and f
// is recovered by inverse Fourier transform of an interpolant of those values.

#include <asine/diagnostics.hpp>
#include <asine/error.hpp>
#include <asine/grid.hpp>
#include <asine/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace asine {

/// The matrix C with C(i, k*i) = c_k, stored as the coefficient table only.
class TriangularSystem {
public:
  TriangularSystem(CoefficientTable coeffs, std::size_t n, double r) : coeffs_(std::move(coeffs)), n_(n), r_(r) {
    if (n == 0) throw DomainError("TriangularSystem: N must be positive");
    if (!(r > 0.0)) throw DomainError("TriangularSystem: R must be > 0");
    if (coeffs_.max_index() < n) throw DomainError("TriangularSystem: coefficient table shorter than N");
  }
  TriangularSystem(const Alpha& alpha, std::size_t n, double r, Kernel kind = Kernel::sine)
      : TriangularSystem(coefficient_table(alpha, std::max<std::size_t>(n, 1), kind), n, r) {}

  [[nodiscard]] const CoefficientTable& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] double r() const noexcept { return r_; }

  /// Entry (i, j), 1-based.
  [[nodiscard]] double entry(std::size_t i, std::size_t j) const {
    if (i == 0 || j == 0 || i > n_ || j > n_) throw DomainError("TriangularSystem::entry out of range");
    return j % i == 0 ? coeffs_[j / i] : 0.0;
  }

  /// C * xi, with xi[0] holding xi_1.
  [[nodiscard]] std::vector<double> multiply(const std::vector<double>& xi) const {
    if (xi.size() != n_) throw DomainError("TriangularSystem::multiply: length mismatch");
    std::vector<double> eta(n_, 0.0);
    for (std::size_t i = 1; i <= n_; ++i) {
      detail::CompensatedSum s;
      for (std::size_t k = 1; k * i <= n_; ++k) s.add(coeffs_[k] * xi[k * i - 1]);
      eta[i - 1] = s.value();
    }
    return eta;
  }

private:
  CoefficientTable coeffs_;
  std::size_t n_;
  double r_;
};

/// F f at the nodes nR/N, n = 1..N (xi) and at 0 (f0); the even extension is implied.
struct FourierSamples {
  std::vector<double> xi;
  double f0 = 0.0;
  double r = 1.0;
  std::size_t n = 0;

  /// F f(mR/N) for |m| <= N.
  [[nodiscard]] double at(long long m) const {
    const auto k = static_cast<std::size_t>(m < 0 ? -m : m);
    return k == 0 ? f0 : xi[k - 1];
  }
  [[nodiscard]] double spacing() const { return r / static_cast<double>(n); }
};

enum class MollifierTag { triangle, gaussian };

/// Reconstruction kernel psi together with its dilation gamma: psi_gamma(y) = psi(gamma*y).
struct MollifierKind {
  MollifierTag tag = MollifierTag::triangle;
  double gamma = 0.5;

  MollifierKind() = default;
  MollifierKind(MollifierTag t, double g) : tag(t), gamma(g) {
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("mollifier gamma must be > 0");
  }
};

enum class Interpolation { sinc, linear };

struct FourierInversionOptions {
  std::optional<double> f0_override;
  Interpolation interpolation = Interpolation::sinc;
  std::optional<MollifierKind> mollifier;
  Kernel kernel = Kernel::sine;
};

/// F f(0) from the plateau of g beyond R: the mean of 2 g(y)/c_0 over the samples y > R.
inline double estimate_f0(const SampledFunction<>& g, const Alpha& alpha, double r, Kernel kind = Kernel::sine) {
  const double c0 = coefficient_table(alpha, 1, kind)[0];
  detail::CompensatedSum s;
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.abscissa(i) > r) {
      s.add(2.0 * g[i] / c0);
      ++count;
    }
  }
  if (count == 0) throw NoTailSamples("estimate_f0: no samples of g beyond R = " + std::to_string(r));
  return s.value() / static_cast<double>(count);
}

/// eta_n = g(nR/2N) - (c_0/2) f0 for n = 1..N.
template <typename G>
std::vector<double> build_rhs(G&& g, const Alpha& alpha, std::size_t n, double r, double f0,
                              Kernel kind = Kernel::sine) {
  if (n == 0) throw DomainError("build_rhs: N must be positive");
  if (!(r > 0.0)) throw DomainError("build_rhs: R must be > 0");
  const double c0 = coefficient_table(alpha, 1, kind)[0];
  std::vector<double> eta(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double y = static_cast<double>(k) * r / (2.0 * static_cast<double>(n));
    eta[k - 1] = g(y) - c0 / 2.0 * f0;
  }
  return eta;
}

inline std::vector<double> build_rhs(const SampledFunction<>& g, const Alpha& alpha, std::size_t n, double r,
                                     double f0, Kernel kind = Kernel::sine) {
  return build_rhs([&](double y) { return eval_linear(g, y); }, alpha, n, r, f0, kind);
}

/// Back substitution from n = N down to 1 using only the divisor pattern of C.
inline std::vector<double> solve_xi(const TriangularSystem& sys, const std::vector<double>& eta) {
  const std::size_t n = sys.n();
  if (eta.size() != n) throw DomainError("solve_xi: eta has the wrong length");
  const double c1 = sys.coeffs()[1];
  if (std::abs(c1) < 1e-14) {
    throw SingularDiagonal("solve_xi: diagonal coefficient c_1 vanishes (alpha = 0 carries no information)");
  }
  std::vector<double> xi(n, 0.0);
  for (std::size_t i = n; i >= 1; --i) {
    detail::CompensatedSum s;
    s.add(eta[i - 1]);
    for (std::size_t k = 2; k * i <= n; ++k) s.add(-sys.coeffs()[k] * xi[k * i - 1]);
    xi[i - 1] = s.value() / c1;
  }
  return xi;
}

namespace detail {

inline double sinc_pi(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

// rect(t) with rect(+-1/2) = 1/2.
inline double rect(double t) {
  const double a = std::abs(t);
  if (a < 0.5) return 1.0;
  if (a == 0.5) return 0.5;
  return 0.0;
}

}  // namespace detail

/// Cardinal series sum_{n=-N}^{N} F f(nR/N) sinc(Ny/R - n).
inline double bandlimited_eval(const FourierSamples& fs, double y) {
  const double u = y / fs.spacing();
  const auto nearest = std::llround(u);
  if (std::abs(u - static_cast<double>(nearest)) < 1e-13 && std::llabs(nearest) <= static_cast<long long>(fs.n)) {
    return fs.at(nearest);
  }
  detail::CompensatedSum s;
  const auto big_n = static_cast<long long>(fs.n);
  for (long long m = -big_n; m <= big_n; ++m) s.add(fs.at(m) * detail::sinc_pi(u - static_cast<double>(m)));
  return s.value();
}

/// psi_gamma(y) = psi(gamma*y) with psi = 2(1 - cos y)/y^2 (triangle) or e^{-y^2/(4 pi)} (gaussian).
inline double mollifier_kernel(const MollifierKind& kind, double y) {
  const double z = kind.gamma * y;
  if (kind.tag == MollifierTag::gaussian) return std::exp(-z * z / (4.0 * std::numbers::pi));
  const double s = detail::sinc_pi(z / (2.0 * std::numbers::pi));
  return s * s;
}

namespace detail {

template <typename Weight>
double cardinal_inverse(const FourierSamples& fs, double x, Weight&& weight) {
  const double h = fs.spacing();
  const double window = rect(x * h / (2.0 * std::numbers::pi));
  if (window == 0.0) return 0.0;
  CompensatedSum s;
  s.add(fs.f0 * weight(0.0));
  for (std::size_t m = 1; m <= fs.n; ++m) {
    const double t = static_cast<double>(m) * h;
    s.add(2.0 * fs.xi[m - 1] * weight(t) * std::cos(x * t));
  }
  return h / (2.0 * std::numbers::pi) * window * s.value();
}

// (sin z - z cos z)/z^2, accurate near 0.
inline double first_moment_kernel(double z) {
  if (std::abs(z) < 1e-3) {
    const double z2 = z * z;
    return z * (1.0 / 3.0 - z2 / 30.0);
  }
  return (std::sin(z) - z * std::cos(z)) / (z * z);
}

// Integral of the piecewise-linear interpolant of values v at nodes m*h,
// m = 0..N, against cos(x t) over [0, N h].
inline double linear_cosine_integral(const std::vector<double>& v, double h, double x) {
  CompensatedSum s;
  const double half = h / 2.0;
  for (std::size_t m = 0; m + 1 < v.size(); ++m) {
    const double mid = (static_cast<double>(m) + 0.5) * h;
    const double z = x * half;
    const double sinc = z == 0.0 ? 1.0 : std::sin(z) / z;
    const double mean_part = 0.5 * (v[m] + v[m + 1]) * h * std::cos(x * mid) * sinc;
    const double slope = (v[m + 1] - v[m]) / h;
    const double slope_part = -slope * std::sin(x * mid) * 2.0 * half * half * first_moment_kernel(z);
    s.add(mean_part + slope_part);
  }
  return s.value();
}

}  // namespace detail

/// f_R^(N)(x): inverse Fourier transform of the cardinal-series interpolant.
inline double reconstruct(const FourierSamples& fs, double x) {
  return detail::cardinal_inverse(fs, x, [](double) { return 1.0; });
}

/// Same sum as reconstruct with each term damped by psi_gamma(nR/N).
inline double reconstruct_smoothed(const FourierSamples& fs, const MollifierKind& kind, double x) {
  return detail::cardinal_inverse(fs, x, [&](double t) { return mollifier_kernel(kind, t); });
}

/// Inverse Fourier transform of the piecewise-linear interpolant of F f on [0, R]
/// (zero beyond R), evaluated exactly segment by segment. With a mollifier the
/// node values are multiplied by psi_gamma first.
inline double reconstruct_linear(const FourierSamples& fs, double x,
                                 const std::optional<MollifierKind>& mollifier = std::nullopt) {
  std::vector<double> v(fs.n + 1);
  for (std::size_t m = 0; m <= fs.n; ++m) {
    const double t = static_cast<double>(m) * fs.spacing();
    v[m] = fs.at(static_cast<long long>(m)) * (mollifier ? mollifier_kernel(*mollifier, t) : 1.0);
  }
  return detail::linear_cosine_integral(v, fs.spacing(), x) / std::numbers::pi;
}

/// Ratio of the standard deviation to the mean of g beyond R; small when g has levelled off.
inline double tail_flatness(const SampledFunction<>& g, double r) {
  detail::CompensatedSum s;
  detail::CompensatedSum s2;
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.abscissa(i) > r) {
      s.add(g[i]);
      s2.add(g[i] * g[i]);
      ++count;
    }
  }
  if (count < 2) return std::nan("");
  const double mean = s.value() / static_cast<double>(count);
  const double var = std::max(0.0, s2.value() / static_cast<double>(count) - mean * mean);
  return std::sqrt(var) / std::abs(mean);
}

/// F f samples from samples of g = T_alpha f (or K_alpha f).
inline FourierSamples fourier_samples(const SampledFunction<>& g, const Alpha& alpha, std::size_t n, double r,
                                      const FourierInversionOptions& options = {}, Diagnostics* diag = nullptr) {
  const double f0 = options.f0_override ? *options.f0_override : estimate_f0(g, alpha, r, options.kernel);
  const TriangularSystem sys(alpha, n, r, options.kernel);
  std::vector<double> eta = build_rhs(g, alpha, n, r, f0, options.kernel);
  std::vector<double> xi = solve_xi(sys, eta);
  if (diag) {
    diag->set("f0", f0);
    const double flat = tail_flatness(g, r);
    if (std::isfinite(flat)) diag->set("tail_flatness", flat);
    if (g.grid().back() < r / 2.0 * (1.0 - 1e-12)) {
      diag->warn("input samples end before R/2; g(nR/2N) relies on constant extrapolation");
    }
  }
  return {std::move(xi), f0, r, n};
}

/// Full pipeline: f0 estimate, right-hand side, triangular solve, inverse transform
/// by the chosen interpolation, optional smoothing, sampled on out_grid.
inline SampledFunction<> invert_fourier(const SampledFunction<>& g, const Alpha& alpha, std::size_t n, double r,
                                        const FourierInversionOptions& options, const UniformGrid& out_grid,
                                        Diagnostics* diag = nullptr) {
  const FourierSamples fs = fourier_samples(g, alpha, n, r, options, diag);
  return SampledFunction<>::tabulate(out_grid, [&](double x) {
    if (options.interpolation == Interpolation::linear) return reconstruct_linear(fs, x, options.mollifier);
    if (options.mollifier) return reconstruct_smoothed(fs, *options.mollifier, x);
    return reconstruct(fs, x);
  });
}

}  // namespace asine
