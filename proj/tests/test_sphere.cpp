#include <asine/metrics.hpp>
#include <asine/sphere.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace asine;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double pi = std::numbers::pi;

SampledFunction<> on_circle(double (*f)(double), std::size_t m = 512) {
  return SampledFunction<>::tabulate(circle::default_grid(m), f);
}

}  // namespace

TEST_CASE("periodic densities are validated", "[sphere]") {
  const UniformGrid grid = circle::default_grid(64);
  std::vector<double> uniform(64, 1.0 / (2.0 * pi));
  CHECK_NOTHROW(PeriodicDensity(SampledFunction<>(grid, uniform), true));
  std::vector<double> heavy(64, 1.0);
  CHECK_THROWS_AS(PeriodicDensity(SampledFunction<>(grid, heavy), false), DomainError);
  std::vector<double> neg = uniform;
  neg[3] = -1e-3;
  neg[4] += 1e-3;
  CHECK_THROWS_AS(PeriodicDensity(SampledFunction<>(grid, neg), false), DomainError);
  std::vector<double> skew = uniform;
  skew[3] += 1e-3;
  skew[4] -= 1e-3;
  CHECK_NOTHROW(PeriodicDensity(SampledFunction<>(grid, skew), false));
  CHECK_THROWS_AS(PeriodicDensity(SampledFunction<>(grid, skew), true), DomainError);
  CHECK_THROWS_AS(PeriodicDensity(SampledFunction<>(UniformGrid::linspace(0.0, 1.0, 64), uniform), false),
                  DomainError);
}

TEST_CASE("example densities have unit mass", "[sphere]") {
  for (const PeriodicDensity& d : {circle::shifted_sine(1.0), circle::vonmises4(1.0), circle::watson(-2.5, 1.0)}) {
    double s = 0.0;
    for (double v : d.values().values()) s += v;
    CHECK_THAT(s * d.grid().step(), WithinAbs(1.0, 1e-12));
    CHECK(d.certified_pi_periodic());
  }
  CHECK_THAT(circle::watson_pdf(0.4, 0.0, 0.0), WithinAbs(1.0 / (2.0 * pi), 1e-15));
}

TEST_CASE("circle Fourier coefficients of a trigonometric polynomial", "[sphere]") {
  const auto u = on_circle([](double x) { return 1.0 + std::cos(2.0 * x) - 3.0 * std::sin(4.0 * x); }, 64);
  const CircleCoeffs c = circle_fourier_coeffs(u, 6);
  CHECK_THAT(c.at(0).real(), WithinAbs(1.0, 1e-14));
  CHECK_THAT(c.at(2).real(), WithinAbs(0.5, 1e-14));
  CHECK_THAT(c.at(-2).real(), WithinAbs(0.5, 1e-14));
  CHECK_THAT(c.at(4).imag(), WithinAbs(1.5, 1e-14));
  CHECK_THAT(c.at(-4).imag(), WithinAbs(-1.5, 1e-14));
  CHECK_THAT(std::abs(c.at(3)), WithinAbs(0.0, 1e-14));
  CHECK_THROWS_AS(c.at(7), DomainError);
  CHECK_THROWS_AS(circle_fourier_coeffs(u, 16), DomainError);
}

TEST_CASE("spherical transform against frozen high-precision values", "[sphere]") {
  const PeriodicDensity w = circle::watson(-2.5, 1.0);
  const PeriodicDensity v = circle::vonmises4(1.0);
  CHECK_THAT(k_sphere(w, Alpha(1.5), 0.3), WithinAbs(0.64583647912640702, 1e-10));
  CHECK_THAT(k_sphere(w, Alpha(-0.5), -1.0), WithinAbs(1.9608637474925122, 1e-9));
  CHECK_THAT(k_sphere(v, Alpha(0.5), 0.0), WithinAbs(0.79272775525449631, 1e-10));
  CHECK_THAT(k_sphere(v, Alpha(5.0), 2.0), WithinAbs(0.29237188606507202, 1e-10));
}

TEST_CASE("spherical transform of simple densities", "[sphere]") {
  const UniformGrid grid = circle::default_grid(64);
  const PeriodicDensity uniform(SampledFunction<>(grid, std::vector<double>(64, 1.0 / (2.0 * pi))), true);
  CHECK_THAT(k_sphere(uniform, Alpha(0.0), 0.4), WithinAbs(1.0, 1e-12));
  CHECK_THAT(k_sphere(uniform, Alpha(2.0), 0.4), WithinAbs(0.5, 1e-12));
  CHECK_THAT(k_sphere(uniform, Alpha(1.5), 1.1), WithinAbs(lambda_alpha(Alpha(1.5)), 1e-11));
}

TEST_CASE("convolution theorem", "[sphere][property]") {
  const PeriodicDensity f = circle::watson(-2.5, 1.0, circle::default_grid(128));
  for (double a : {-0.5, 0.5, 1.5}) {
    const SampledFunction<> kf = k_sphere_sampled(f, Alpha(a));
    const CircleCoeffs kc = circle_fourier_coeffs(kf, 12);
    const CircleCoeffs fc = circle_fourier_coeffs(f.values(), 12);
    const CoefficientTable ct = cosine_coeffs(Alpha(a), 6);
    for (long long n = 0; n <= 6; ++n) {
      INFO("alpha = " << a << " n = " << n);
      const auto expected = 2.0 * pi * ct[static_cast<std::size_t>(n)] * fc.at(2 * n);
      CHECK(std::abs(kc.at(2 * n) - expected) < 1e-6);
      if (n < 6) CHECK(std::abs(kc.at(2 * n + 1)) < 1e-6);
    }
  }
}

TEST_CASE("inversion round trip", "[sphere]") {
  const PeriodicDensity f = circle::watson(-2.5, 1.0, circle::default_grid(128));
  const SampledFunction<> kf = k_sphere_sampled(f, Alpha(1.5));
  Diagnostics diag;
  const PeriodicDensity back = invert_sphere(kf, Alpha(1.5), 10, &diag);
  CHECK(linf_error(back.values(), [](double x) { return circle::watson_pdf(x, -2.5, 1.0); }) < 1e-6);
  CHECK(diag.values.at("clipped_mass") == 0.0);
}

TEST_CASE("inversion clips negative values", "[sphere]") {
  const PeriodicDensity f = circle::shifted_sine(1.0, circle::default_grid(128));
  const SampledFunction<> kf = k_sphere_sampled(f, Alpha(0.5));
  Diagnostics diag;
  const PeriodicDensity back = invert_sphere(kf, Alpha(0.5), 3, &diag);
  for (double v : back.values().values()) CHECK(v >= 0.0);
  CHECK(diag.values.count("clipped_mass") == 1);
}

TEST_CASE("inversion preconditions", "[sphere]") {
  const PeriodicDensity f = circle::watson(-2.5, 1.0, circle::default_grid(64));
  for (double a : {0.0, 2.0, 4.0}) CHECK_THROWS_AS(invert_sphere(f.values(), Alpha(a), 4), EvenIntegerAlpha);
  CHECK_THROWS_AS(invert_sphere(f.values(), Alpha(5.0), 400), CoefficientUnderflow);
  CHECK_THROWS_AS(invert_sphere(f.values(), Alpha(1.5), 0), DomainError);
  CHECK_THROWS_AS(invert_sphere(f.values(), Alpha(1.5), 10), DomainError);
}
