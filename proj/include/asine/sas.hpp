#pragma once

// Codifference of a stationary real harmonizable symmetric alpha-stable process
// and its relation to the alpha-sine transform of the spectral density.

#include <asine/error.hpp>
#include <asine/forward.hpp>
#include <asine/quad.hpp>
#include <asine/specfun.hpp>

#include <cmath>
#include <string>
#include <utility>

namespace asine {

/// Scale sigma and stability index alpha of a symmetric alpha-stable law, 0 < alpha < 2.
class SasParams {
public:
  SasParams(double sigma, double alpha) : sigma_(sigma), alpha_(alpha) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("SasParams: sigma must be > 0");
    if (!(alpha > 0.0 && alpha < 2.0)) {
      throw DomainError("SasParams: stability index must lie in (0, 2), got " + std::to_string(alpha));
    }
  }

  [[nodiscard]] double sigma() const noexcept { return sigma_; }
  [[nodiscard]] const Alpha& alpha() const noexcept { return alpha_; }
  [[nodiscard]] double sigma_pow_alpha() const { return std::pow(sigma_, alpha_.value()); }

private:
  double sigma_;
  Alpha alpha_;
};

/// g(t) = (2 sigma^alpha - tau(2t)) / (2^(alpha+1) lambda_alpha); equals T_alpha f(t).
template <typename Tau>
double g_from_codifference(Tau&& tau, const SasParams& p, double t) {
  if (!(t > 0.0)) throw DomainError("g_from_codifference: t must be > 0");
  const double a = p.alpha().value();
  return (2.0 * p.sigma_pow_alpha() - tau(2.0 * t)) / (std::pow(2.0, a + 1.0) * lambda_alpha(p.alpha()));
}

/// F f(0) = sigma^alpha / lambda_alpha.
inline double f0_from_scale(const SasParams& p) { return p.sigma_pow_alpha() / lambda_alpha(p.alpha()); }

/// sigma^alpha = lambda_alpha * integral over R of the (even) spectral density f.
template <typename F>
double sigma_pow_alpha_from_density(F&& f, const Alpha& alpha, const QuadSpec& spec) {
  return lambda_alpha(alpha) * 2.0 * integrate(std::forward<F>(f), 0.0, spec.tail_cut, spec);
}

/// tau(t) = 2 sigma^alpha - 2^alpha lambda_alpha * integral over R of |sin(tx/2)|^alpha f(x),
/// with sigma^alpha recomputed from f. Accepts alpha = 2 so the Gaussian limit can be checked.
template <typename F>
double codifference_forward(F&& f, const Alpha& alpha, double t, const QuadSpec& spec) {
  const double sa = sigma_pow_alpha_from_density(f, alpha, spec);
  if (t == 0.0) return 2.0 * sa;
  const double integral = 2.0 * t_sine(f, alpha, std::abs(t) / 2.0, spec);
  return 2.0 * sa - std::pow(2.0, alpha.value()) * lambda_alpha(alpha) * integral;
}

/// As above; only the stability index of p is used, the scale follows from f.
template <typename F>
double codifference_forward(F&& f, const SasParams& p, double t, const QuadSpec& spec) {
  return codifference_forward(std::forward<F>(f), p.alpha(), t, spec);
}

}  // namespace asine
