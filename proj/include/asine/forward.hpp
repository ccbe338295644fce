#pragma once

#include <asine/error.hpp>
#include <asine/quad.hpp>
#include <asine/specfun.hpp>

#include <cmath>
#include <cstddef>
#include <utility>

namespace asine {

/// T_alpha f(y) = integral over [0, inf) of |sin(xy)|^alpha f(x), truncated at spec.tail_cut.
template <typename F>
double t_sine(F&& f, const Alpha& alpha, double y, const QuadSpec& spec) {
  if (!(y >= 0.0) || !std::isfinite(y)) throw DomainError("t_sine: y must be finite and >= 0");
  if (y == 0.0) {
    if (alpha.value() > 0.0) return 0.0;
    throw DomainError("t_sine: y = 0 is only defined for alpha > 0");
  }
  return integrate_kernel_split(std::forward<F>(f), alpha, y, spec, Kernel::sine);
}

/// K_alpha f(y) = integral over [0, inf) of |cos(xy)|^alpha f(x), truncated at spec.tail_cut.
template <typename F>
double k_cosine(F&& f, const Alpha& alpha, double y, const QuadSpec& spec) {
  if (!(y >= 0.0) || !std::isfinite(y)) throw DomainError("k_cosine: y must be finite and >= 0");
  if (y == 0.0) return integrate(std::forward<F>(f), 0.0, spec.tail_cut, spec);
  return integrate_kernel_split(std::forward<F>(f), alpha, y, spec, Kernel::cosine);
}

/// Series form (c_0/2) fhat(0) + sum_{j=1}^{terms} c_j fhat(2jy), where fhat is the
/// Fourier transform of the even extension of f.
///
/// For -1 < alpha < 0 the coefficient sum diverges, so the caller has to
/// certify that fhat decays at least like 1/t (fhat_decays = true).
template <typename FHat>
double t_sine_series(FHat&& fhat, const Alpha& alpha, double y, std::size_t terms, bool fhat_decays = false,
                     Kernel kind = Kernel::sine) {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("t_sine_series: y must be > 0");
  if (terms < 1) throw DomainError("t_sine_series: terms must be >= 1");
  if (alpha.value() < 0.0 && !fhat_decays) {
    throw DomainError("t_sine_series: for alpha < 0 the series needs fhat with certified O(1/t) decay");
  }
  const CoefficientTable c = coefficient_table(alpha, terms, kind);
  detail::CompensatedSum sum;
  sum.add(c[0] / 2.0 * fhat(0.0));
  const std::size_t last = alpha.is_even_integer() ? std::min<std::size_t>(terms, alpha.even_half()) : terms;
  for (std::size_t j = 1; j <= last; ++j) sum.add(c[j] * fhat(2.0 * static_cast<double>(j) * y));
  return sum.value();
}

}  // namespace asine
