#pragma once

#include <asine/error.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace asine {

/// Equidistant abscissae start + i*step, 0 <= i < count.
class UniformGrid {
public:
  UniformGrid(double start, double step, std::size_t count) : start_(start), step_(step), count_(count) {
    if (!std::isfinite(start)) throw DomainError("UniformGrid: start must be finite");
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("UniformGrid: step must be > 0");
    if (count == 0) throw DomainError("UniformGrid: count must be positive");
  }

  /// count points from a to b inclusive.
  static UniformGrid linspace(double a, double b, std::size_t count) {
    if (count < 2) throw DomainError("UniformGrid::linspace needs at least 2 points");
    if (!(b > a)) throw DomainError("UniformGrid::linspace needs a < b");
    return {a, (b - a) / static_cast<double>(count - 1), count};
  }

  /// count points on the half-open periodic cell [a, a + period).
  static UniformGrid periodic(double a, double period, std::size_t count) {
    return {a, period / static_cast<double>(count), count};
  }

  [[nodiscard]] double start() const noexcept { return start_; }
  [[nodiscard]] double step() const noexcept { return step_; }
  [[nodiscard]] std::size_t count() const noexcept { return count_; }
  [[nodiscard]] double abscissa(std::size_t i) const noexcept { return start_ + static_cast<double>(i) * step_; }
  [[nodiscard]] double back() const noexcept { return abscissa(count_ - 1); }

  [[nodiscard]] std::vector<double> points() const {
    std::vector<double> out(count_);
    for (std::size_t i = 0; i < count_; ++i) out[i] = abscissa(i);
    return out;
  }

private:
  double start_;
  double step_;
  std::size_t count_;
};

namespace detail {

inline bool all_finite(double v) { return std::isfinite(v); }
inline bool all_finite(const std::complex<double>& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace detail

/// Values on a UniformGrid. Real for f, g and reconstructions; complex for
/// Fourier-side data.
template <typename T = double>
class SampledFunction {
public:
  SampledFunction(UniformGrid grid, std::vector<T> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.count()) {
      throw DomainError("SampledFunction: " + std::to_string(values_.size()) + " values for a grid of " +
                        std::to_string(grid_.count()) + " points");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!detail::all_finite(values_[i])) {
        throw DomainError("SampledFunction: non-finite value at index " + std::to_string(i));
      }
    }
  }

  template <typename F>
  static SampledFunction tabulate(UniformGrid grid, F&& f) {
    std::vector<T> v(grid.count());
    for (std::size_t i = 0; i < grid.count(); ++i) v[i] = static_cast<T>(f(grid.abscissa(i)));
    return {grid, std::move(v)};
  }

  [[nodiscard]] const UniformGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] const std::vector<T>& values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const T& operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] double abscissa(std::size_t i) const noexcept { return grid_.abscissa(i); }

private:
  UniformGrid grid_;
  std::vector<T> values_;
};

/// Piecewise-linear interpolation inside the span, constant extrapolation outside.
template <typename T>
T eval_linear(const SampledFunction<T>& s, double x) {
  const UniformGrid& g = s.grid();
  const auto& v = s.values();
  if (v.size() == 1 || x <= g.start()) return v.front();
  if (x >= g.back()) return v.back();
  const double pos = (x - g.start()) / g.step();
  auto i = static_cast<std::size_t>(pos);
  if (i >= v.size() - 1) i = v.size() - 2;
  const double w = pos - static_cast<double>(i);
  return v[i] + w * (v[i + 1] - v[i]);
}

/// Value of the even extension f(-x) = f(x) of samples on the half-line.
template <typename T>
T even_extension_eval(const SampledFunction<T>& s, double x) {
  return eval_linear(s, std::abs(x));
}

}  // namespace asine
