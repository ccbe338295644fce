#pragma once

// Test functions on the half-line with their Fourier transforms (of the even
// extension, F f(t) = integral over R of f(x) e^{itx}) and closed-form T_2 images.

#include <asine/error.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

namespace asine::examples {

inline double f1(double x) { return std::exp(-x * x); }
inline double f1_hat(double t) { return std::sqrt(std::numbers::pi) * std::exp(-t * t / 4.0); }
inline double f1_t2(double y) { return std::sqrt(std::numbers::pi) / 4.0 * (1.0 - std::exp(-y * y)); }

inline double f2(double x) { return x * x * std::exp(-x); }
inline double f2_hat(double t) {
  const double d = 1.0 + t * t;
  return 4.0 * (1.0 - 3.0 * t * t) / (d * d * d);
}
inline double f2_t2(double y) {
  const double y2 = y * y;
  const double d = 1.0 + 4.0 * y2;
  return 8.0 * y2 * (3.0 + 6.0 * y2 + 8.0 * y2 * y2) / (d * d * d);
}

inline double f3(double x) {
  const double d = 1.0 + x * x;
  return 1.0 / (d * d);
}
inline double f3_hat(double t) {
  const double a = std::abs(t);
  return std::numbers::pi / 2.0 * (1.0 + a) * std::exp(-a);
}
inline double f3_t2(double y) {
  const double a = std::abs(y);
  return std::numbers::pi / 8.0 * (1.0 - std::exp(-2.0 * a) * (1.0 + 2.0 * a));
}

/// One of the three half-line examples, looked up by name ("f1", "f2", "f3").
struct HalfLineExample {
  std::string_view name;
  double (*f)(double);
  double (*fhat)(double);
  double (*t2)(double);
  /// Truncation point beyond which the integral of |f| is below 1e-8.
  double tail_cut;
};

inline constexpr HalfLineExample half_line_examples[] = {
    {"f1", f1, f1_hat, f1_t2, 30.0},
    {"f2", f2, f2_hat, f2_t2, 40.0},
    {"f3", f3, f3_hat, f3_t2, 400.0},
};

inline const HalfLineExample& half_line_example(std::string_view name) {
  for (const auto& e : half_line_examples) {
    if (e.name == name) return e;
  }
  throw DomainError("unknown example function '" + std::string(name) + "' (expected f1, f2 or f3)");
}

}  // namespace asine::examples
