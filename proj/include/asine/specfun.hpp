#pragma once

// Gamma-based special functions, the Fourier coefficients of |sin|^alpha and
// |cos|^alpha, and the closed-form constants built from them.

#include <asine/error.hpp>

#include <boost/math/special_functions/gamma.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace asine {

/// Exponent of the kernel |sin(xy)|^alpha. Always strictly greater than -1.
class Alpha {
public:
  static constexpr double even_tolerance = 1e-12;

  explicit Alpha(double value) : value_(value) {
    if (!(value > -1.0) || !std::isfinite(value)) {
      throw DomainError("alpha must be a finite real > -1, got " + std::to_string(value));
    }
  }

  [[nodiscard]] double value() const noexcept { return value_; }

  /// True when alpha is within 1e-12 of one of 0, 2, 4, ...
  [[nodiscard]] bool is_even_integer() const noexcept {
    if (value_ < -even_tolerance) return false;
    const double half = std::round(value_ / 2.0);
    return std::abs(value_ - 2.0 * half) <= even_tolerance;
  }

  /// k such that alpha = 2k; only meaningful when is_even_integer().
  [[nodiscard]] int even_half() const noexcept { return static_cast<int>(std::round(value_ / 2.0)); }

  friend bool operator==(const Alpha&, const Alpha&) = default;

private:
  double value_;
};

enum class Kernel { sine, cosine };

/// Fourier coefficients c_0..c_J of (1/2)|sin(x/2)|^alpha (sine kind) or
/// (1/2)|cos(x/2)|^alpha (cosine kind), i.e. c~_j = (-1)^j c_j.
struct CoefficientTable {
  Alpha alpha;
  Kernel kind;
  std::vector<double> coeffs;

  [[nodiscard]] double operator[](std::size_t j) const { return coeffs[j]; }
  [[nodiscard]] std::size_t size() const noexcept { return coeffs.size(); }
  /// Highest index J held by the table.
  [[nodiscard]] std::size_t max_index() const noexcept { return coeffs.size() - 1; }
};

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma requires x > 0, got " + std::to_string(x));
  }
  return boost::math::lgamma(x);
}

namespace detail {

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::round(x);
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  [[nodiscard]] double value() const { return sum + carry; }
};

}  // namespace detail

/// Generalized hypergeometric series pFq[a; b; 1] summed directly.
///
/// Summation stops once the running term drops below 1e-15 of the accumulated
/// sum for three consecutive terms. Series at z = 1 whose terms decay only
/// algebraically (like k^-(1 + sum b - sum a)) are not going to satisfy that
/// rule in any reasonable number of terms; after 64000 terms the partial sums at
/// 1000 * 2^i are Richardson-extrapolated with the exponent ladder
/// (sum b - sum a) + m, m = 0, 1, ..., which is the asymptotic form of the tail.
inline double hypergeometric_pfq_unit(std::span<const double> a, std::span<const double> b) {
  double excess = 0.0;
  bool terminating = false;
  for (double bi : b) {
    if (detail::is_nonpositive_integer(bi)) {
      throw DomainError("hypergeometric series: lower parameter is a non-positive integer");
    }
    excess += bi;
  }
  for (double ai : a) {
    excess -= ai;
    terminating = terminating || detail::is_nonpositive_integer(ai);
  }
  if (!terminating && a.size() == b.size() + 1 && !(excess > 0.0)) {
    throw DomainError("hypergeometric series at z=1 diverges: sum(b) - sum(a) must be > 0");
  }
  if (!terminating && a.size() > b.size() + 1) {
    throw DomainError("hypergeometric series with p > q+1 diverges at z=1");
  }

  constexpr std::size_t base_terms = 1000;
  constexpr std::size_t levels = 7;
  constexpr std::size_t direct_cap = base_terms << (levels - 1);

  detail::CompensatedSum sum;
  std::array<double, levels> checkpoints{};
  std::size_t next_level = 0;
  double term = 1.0;
  int quiet = 0;
  for (std::size_t k = 0; k < direct_cap; ++k) {
    sum.add(term);
    if (next_level < levels && k + 1 == (base_terms << next_level)) {
      checkpoints[next_level++] = sum.value();
    }
    if (std::abs(term) < 1e-15 * std::abs(sum.value())) {
      if (++quiet >= 3) return sum.value();
    } else {
      quiet = 0;
    }
    double ratio = 1.0 / static_cast<double>(k + 1);
    for (double ai : a) ratio *= ai + static_cast<double>(k);
    for (double bi : b) ratio /= bi + static_cast<double>(k);
    term *= ratio;
    if (term == 0.0) return sum.value();
  }
  if (a.size() != b.size() + 1) {
    throw NonConvergence("hypergeometric series did not converge within the term budget");
  }
  std::array<double, levels> row = checkpoints;
  for (std::size_t m = 0; m + 1 < levels; ++m) {
    const double factor = std::exp2(excess + static_cast<double>(m));
    for (std::size_t i = 0; i + 1 < levels - m; ++i) {
      row[i] = (factor * row[i + 1] - row[i]) / (factor - 1.0);
    }
  }
  return row[0];
}

/// Fourier coefficients c_0..c_count of (1/2)|sin(x/2)|^alpha.
///
/// c_0 comes from the Gamma quotient; the rest follow the ratio recurrence
/// c_{j+1} = c_j (j - alpha/2) / (j + 1 + alpha/2), which avoids Gamma at
/// negative arguments. Even integer alpha = 2k uses the finite binomial form.
inline CoefficientTable sine_coeffs(Alpha alpha, std::size_t count) {
  if (count < 1) throw DomainError("sine_coeffs: count must be >= 1");
  const double a = alpha.value();
  std::vector<double> c(count + 1, 0.0);

  if (alpha.is_even_integer()) {
    const int k = alpha.even_half();
    const double log4k = static_cast<double>(k) * std::log(4.0);
    for (int j = 0; j <= k && static_cast<std::size_t>(j) <= count; ++j) {
      const double magnitude = std::exp(boost::math::lgamma(2.0 * k + 1.0) -
                                        boost::math::lgamma(static_cast<double>(k - j) + 1.0) -
                                        boost::math::lgamma(static_cast<double>(k + j) + 1.0) - log4k);
      c[j] = (j % 2 == 0) ? magnitude : -magnitude;
    }
    return {alpha, Kernel::sine, std::move(c)};
  }

  c[0] = std::exp(log_gamma(1.0 + a) - a * std::numbers::ln2 - 2.0 * log_gamma(a / 2.0 + 1.0));
  c[1] = -c[0] * a / (a + 2.0);
  for (std::size_t j = 1; j < count; ++j) {
    const double jd = static_cast<double>(j);
    c[j + 1] = c[j] * (jd - a / 2.0) / (jd + 1.0 + a / 2.0);
  }
  return {alpha, Kernel::sine, std::move(c)};
}

/// Coefficients c~_j = (-1)^j c_j of (1/2)|cos(x/2)|^alpha.
inline CoefficientTable cosine_coeffs(Alpha alpha, std::size_t count) {
  CoefficientTable table = sine_coeffs(alpha, count);
  for (std::size_t j = 1; j < table.coeffs.size(); j += 2) table.coeffs[j] = -table.coeffs[j];
  table.kind = Kernel::cosine;
  return table;
}

inline CoefficientTable coefficient_table(Alpha alpha, std::size_t count, Kernel kind) {
  return kind == Kernel::sine ? sine_coeffs(alpha, count) : cosine_coeffs(alpha, count);
}

/// C_alpha = integral over [0, pi] of |sin u|^alpha.
inline double sin_power_integral(Alpha alpha) {
  const double a = alpha.value();
  return std::exp(0.5 * std::log(std::numbers::pi) + log_gamma((1.0 + a) / 2.0) - log_gamma(1.0 + a / 2.0));
}

/// lambda_alpha = (1/2pi) * integral over one period of |cos x|^alpha = C_alpha / pi.
inline double lambda_alpha(Alpha alpha) { return sin_power_integral(alpha) / std::numbers::pi; }

/// Gauss hypergeometric function at unit argument, 2F1[a, b; c; 1].
inline double hyp2f1_unit(double a, double b, double c) {
  if (detail::is_nonpositive_integer(c)) {
    throw DomainError("hyp2f1_unit: c must not be a non-positive integer");
  }
  const bool terminating = detail::is_nonpositive_integer(a) || detail::is_nonpositive_integer(b);
  if (!terminating && !(c - a - b > 0.0)) {
    throw DomainError("hyp2f1_unit: requires c - a - b > 0");
  }
  if (c - a - b > 0.0 && c > 0.0 && c - a > 0.0 && c - b > 0.0) {
    return std::exp(log_gamma(c) + log_gamma(c - a - b) - log_gamma(c - a) - log_gamma(c - b));
  }
  const std::array<double, 2> upper{a, b};
  const std::array<double, 1> lower{c};
  return hypergeometric_pfq_unit(upper, lower);
}

/// Upper bound on the norm of T_alpha for -1 < alpha < 0 between the
/// Sobolev-type domain norm and the L1([0,1]) + sup(y > 1) target norm.
inline double operator_norm_bound(Alpha alpha) {
  const double a = alpha.value();
  if (!(a < 0.0)) {
    throw DomainError("operator_norm_bound is defined only for -1 < alpha < 0");
  }
  const double c0 = sine_coeffs(alpha, 1)[0];
  const std::array<double, 3> upper{1.0 - a / 2.0, 1.0, 1.0};
  const std::array<double, 2> lower{a / 2.0 + 2.0, 2.0};
  const double f32 = hypergeometric_pfq_unit(upper, lower);
  return sin_power_integral(alpha) * (1.0 / std::numbers::pi + 1.0) + c0 * (1.0 - a / (a + 2.0) * f32);
}

/// Confluent hypergeometric function M(a, b, z) by its power series.
/// Negative z goes through Kummer's transformation M(a,b,z) = e^z M(b-a,b,-z)
/// so the summed series never alternates.
inline double kummer_m(double a, double b, double z) {
  if (detail::is_nonpositive_integer(b)) {
    throw DomainError("kummer_m: b must not be a non-positive integer");
  }
  if (z < 0.0) return std::exp(z) * kummer_m(b - a, b, -z);
  constexpr std::size_t cap = 10'000'000;
  double term = 1.0;
  detail::CompensatedSum sum;
  int quiet = 0;
  for (std::size_t k = 0; k < cap; ++k) {
    sum.add(term);
    if (term == 0.0) return sum.value();
    if (std::abs(term) < 1e-16 * std::abs(sum.value()) && static_cast<double>(k) > z) {
      if (++quiet >= 3) return sum.value();
    } else {
      quiet = 0;
    }
    const double kd = static_cast<double>(k);
    term *= (a + kd) / (b + kd) * z / (kd + 1.0);
  }
  throw NonConvergence("kummer_m: series did not converge");
}

}  // namespace asine
