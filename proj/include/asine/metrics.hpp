#pragma once

#include <asine/error.hpp>
#include <asine/grid.hpp>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>

namespace asine {

/// ||approx - truth||_2 / ||truth||_2 on [a, b], trapezoid rule on `points` nodes.
template <typename Approx, typename Truth>
  requires std::invocable<Approx&, double>
double relative_l2_error(Approx&& approx, Truth&& truth, double a, double b, std::size_t points = 4001) {
  if (!(b > a) || points < 2) throw DomainError("relative_l2_error: needs a < b and at least 2 points");
  const double h = (b - a) / static_cast<double>(points - 1);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = a + static_cast<double>(i) * h;
    const double w = (i == 0 || i + 1 == points) ? 0.5 : 1.0;
    const double t = truth(x);
    const double d = approx(x) - t;
    num += w * d * d;
    den += w * t * t;
  }
  if (!(den > 0.0)) throw DomainError("relative_l2_error: truth vanishes on the interval");
  return std::sqrt(num / den);
}

template <typename Truth>
double relative_l2_error(const SampledFunction<>& approx, Truth&& truth, double a, double b,
                         std::size_t points = 4001) {
  return relative_l2_error([&](double x) { return eval_linear(approx, x); }, truth, a, b, points);
}

/// max over the samples of |approx - truth|.
template <typename Truth>
double linf_error(const SampledFunction<>& approx, Truth&& truth) {
  double worst = 0.0;
  for (std::size_t i = 0; i < approx.size(); ++i) {
    worst = std::max(worst, std::abs(approx[i] - truth(approx.abscissa(i))));
  }
  return worst;
}

}  // namespace asine
