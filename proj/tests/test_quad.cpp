#include <asine/quad.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

using namespace asine;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("QuadSpec validation", "[quad]") {
  QuadSpec s;
  CHECK_NOTHROW(s.validate());
  s.max_subdivisions = 7;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = QuadSpec{};
  s.abs_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = QuadSpec{};
  s.tail_cut = -1.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 1.0, QuadSpec{}), DomainError);
}

TEST_CASE("adaptive integration", "[quad]") {
  QuadSpec spec;
  CHECK_THAT(integrate([](double x) { return std::sin(x); }, 0.0, pi, spec), WithinAbs(2.0, 1e-10));
  CHECK_THAT(integrate([](double u) { return 1.0 / std::sqrt(u); }, 0.0, 1.0, spec), WithinAbs(2.0, 1e-8));
  // Symmetric halves keep the singular point at an exactly representable zero of sin.
  const double c = 2.0 * integrate([](double u) { return std::pow(std::sin(u), -0.5); }, 0.0, pi / 2.0, spec);
  CHECK_THAT(c, WithinAbs(std::sqrt(pi) * std::tgamma(0.25) / std::tgamma(0.75), 1e-8));

  SECTION("complex integrands") {
    auto z = integrate([](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0, pi / 2.0, spec);
    CHECK_THAT(z.real(), WithinAbs(1.0, 1e-12));
    CHECK_THAT(z.imag(), WithinAbs(1.0, 1e-12));
  }
  SECTION("error estimate is honest") {
    auto r = integrate_with_error([](double x) { return std::exp(-x * x); }, -3.0, 4.0, spec);
    const double exact = std::sqrt(pi) / 2.0 * (std::erf(4.0) + std::erf(3.0));
    CHECK(std::abs(r.value - exact) <= std::max(r.error, 1e-15));
  }
  SECTION("budget exhaustion throws NonConvergence") {
    QuadSpec tight;
    tight.max_subdivisions = 8;
    tight.abs_tol = 1e-14;
    tight.rel_tol = 1e-14;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, tight), NonConvergence);
  }
  SECTION("linearity") {
    auto f = [](double x) { return std::cos(3.0 * x) * std::exp(-x); };
    auto g = [](double x) { return std::sqrt(x) / (1.0 + x * x); };
    const double a = 2.5;
    const double b = -1.25;
    const double lhs = integrate([&](double x) { return a * f(x) + b * g(x); }, 0.0, 5.0, spec);
    const double rhs = a * integrate(f, 0.0, 5.0, spec) + b * integrate(g, 0.0, 5.0, spec);
    CHECK_THAT(lhs, WithinAbs(rhs, 2e-9));
  }
}

TEST_CASE("kernel lobe splitting", "[quad]") {
  QuadSpec spec;
  SECTION("one lobe of sin^2") {
    for (double y : {0.5, 1.0, 3.0}) {
      QuadSpec one = spec;
      one.tail_cut = pi / y;
      const double v = integrate_kernel_split([](double) { return 1.0; }, Alpha(2.0), y, one);
      CHECK_THAT(v, WithinAbs(pi / (2.0 * y), 1e-12));
    }
  }
  SECTION("one lobe of |sin|^-0.5") {
    for (double y : {0.7, 1.0, 4.0}) {
      QuadSpec one = spec;
      one.tail_cut = pi / y;
      const double v = integrate_kernel_split([](double) { return 1.0; }, Alpha(-0.5), y, one);
      CHECK_THAT(v, WithinAbs(sin_power_integral(Alpha(-0.5)) / y, 1e-6));
    }
  }
  SECTION("many lobes of |sin|^-0.9 and |cos|^1.3") {
    for (double a : {-0.9, 1.3, 0.5}) {
      QuadSpec k = spec;
      k.tail_cut = 7.0 * pi / 2.0;
      const double v = integrate_kernel_split([](double) { return 1.0; }, Alpha(a), 2.0, k);
      CHECK_THAT(v, WithinRel(7.0 * sin_power_integral(Alpha(a)) / 2.0, 1e-9));
      const double w = integrate_kernel_split([](double) { return 1.0; }, Alpha(a), 2.0, k, Kernel::cosine);
      CHECK_THAT(w, WithinRel(7.0 * sin_power_integral(Alpha(a)) / 2.0, 1e-9));
    }
  }
  SECTION("Gaussian against the closed form") {
    const double v = integrate_kernel_split([](double x) { return std::exp(-x * x); }, Alpha(2.0), 1.0, spec);
    CHECK_THAT(v, WithinAbs(std::sqrt(pi) / 4.0 * (1.0 - std::exp(-1.0)), 1e-6));
  }
  SECTION("lobe splitting equals single-domain integration for smooth integrands") {
    auto f = [](double x) { return x * x * std::exp(-x); };
    for (double a : {0.0, 2.0, 4.0, 1.0, 2.5}) {
      for (double y : {0.3, 1.0, 2.7}) {
        QuadSpec s = spec;
        s.max_subdivisions = 20000;
        const double split = integrate_kernel_split(f, Alpha(a), y, s);
        const double plain = integrate(
            [&](double x) { return std::pow(std::abs(std::sin(x * y)), a) * f(x); }, 0.0, s.tail_cut, s);
        CHECK_THAT(split, WithinAbs(plain, 1e-8));
      }
    }
  }
}
