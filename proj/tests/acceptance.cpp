// Acceptance suite. Usage: asine_acceptance <criterion 1..10 | all>
// Prints one line per criterion and exits non-zero if any selected criterion fails.

#include <asine/asine.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace asine;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

QuadSpec spec_for(const examples::HalfLineExample& e) {
  QuadSpec s;
  s.tail_cut = e.tail_cut;
  return s;
}

SampledFunction<> forward_samples(const examples::HalfLineExample& e, const Alpha& alpha, const UniformGrid& grid) {
  const QuadSpec s = spec_for(e);
  return SampledFunction<>::tabulate(grid, [&](double y) { return t_sine(e.f, alpha, y, s); });
}

double fourier_error(const FourierSamples& fs, double (*truth)(double)) {
  return relative_l2_error([&](double x) { return reconstruct(fs, x); }, truth, 0.0, 3.0);
}

void criterion1(Outcome& o) {
  double worst = 0.0;
  for (const auto& e : examples::half_line_examples) {
    const QuadSpec s = spec_for(e);
    for (double y : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      worst = std::max(worst, std::abs(t_sine(e.f, Alpha(2.0), y, s) - e.t2(y)));
    }
  }
  o.detail << "max abs error " << worst << " (tol 1e-6)";
  o.require(worst <= 1e-6, "closed-form agreement");
}

void criterion2(Outcome& o) {
  const std::size_t terms = 1000000;
  for (double a : {0.5, 1.0, 1.5}) {
    const CoefficientTable c = sine_coeffs(Alpha(a), terms);
    detail::CompensatedSum s;
    for (std::size_t j = 1; j <= terms; ++j) s.add(c[j]);
    const double dev = std::abs(s.value() + c[0] / 2.0);
    o.detail << "alpha " << a << ": |sum + c0/2| = " << dev << "; ";
    o.require(dev <= 1e-4, "sum identity at alpha " + std::to_string(a));
  }
  for (double a : {0.5, 1.0, 1.5, 2.0}) {
    const CoefficientTable c = sine_coeffs(Alpha(a), terms);
    detail::CompensatedSum s;
    for (std::size_t j = 1; j <= terms; ++j) s.add(std::abs(c[j]));
    const double dev = std::abs(s.value() - c[0] / 2.0);
    o.detail << "alpha " << a << ": |abs sum - c0/2| = " << dev << "; ";
    o.require(dev <= 1e-4, "absolute sum at alpha " + std::to_string(a));
  }
  const CoefficientTable c = sine_coeffs(Alpha(-0.5), 100000);
  detail::CompensatedSum s;
  double at_thousand = 0.0;
  for (std::size_t j = 1; j <= 100000; ++j) {
    s.add(c[j]);
    if (j == 1000) at_thousand = s.value();
  }
  const double ratio = s.value() / at_thousand;
  o.detail << "alpha -0.5: S(1e5)/S(1e3) = " << ratio;
  o.require(ratio >= 2.0, "divergence at alpha -0.5");
}

void criterion3(Outcome& o) {
  const CoefficientTable c = sine_coeffs(Alpha(2.0), 6);
  const bool exact = c[0] == 0.5 && c[1] == -0.25 && c[2] == 0.0 && c[3] == 0.0 && c[6] == 0.0;
  o.require(exact, "exact coefficients");

  const TriangularSystem sys(Alpha(2.0), 50, 10.0);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> eta(50);
  for (double& v : eta) v = u(rng);
  const std::vector<double> xi = solve_xi(sys, eta);
  bool reduced = true;
  for (std::size_t i = 0; i < eta.size(); ++i) reduced = reduced && xi[i] == -4.0 * eta[i];
  o.require(reduced, "xi = -4 eta");

  const auto g = SampledFunction<>::tabulate(UniformGrid(0.0, 0.005, 4001), examples::f1_t2);
  const FourierSamples fs = fourier_samples(g, Alpha(2.0), 100, 10.0);
  const double err = fourier_error(fs, examples::f1);
  o.detail << "coefficients exact " << exact << ", reduction exact " << reduced << ", rel L2 " << err << " (tol 1e-4)";
  o.require(err <= 1e-4, "end-to-end error");
}

void criterion4(Outcome& o) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (double a : {-0.5, 0.5, 1.5, 3.0}) {
    for (std::size_t n : {8u, 64u, 256u}) {
      const TriangularSystem sys(Alpha(a), n, 10.0);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> xi(n);
        for (double& v : xi) v = u(rng);
        const std::vector<double> back = solve_xi(sys, sys.multiply(xi));
        double diff = 0.0;
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          diff = std::max(diff, std::abs(back[i] - xi[i]));
          scale = std::max(scale, std::abs(xi[i]));
        }
        worst = std::max(worst, diff / scale);
      }
    }
  }
  o.detail << "max relative sup error " << worst << " (tol 1e-9)";
  o.require(worst <= 1e-9, "triangular solve");
}

void criterion5(Outcome& o) {
  const Alpha alpha(1.5);
  const UniformGrid grid(0.05, 0.05, 300);
  for (const auto& e : examples::half_line_examples) {
    const SampledFunction<> g = forward_samples(e, alpha, grid);
    const double err = fourier_error(fourier_samples(g, alpha, 100, 10.0), e.f);
    o.detail << e.name << " " << err << "; ";
    o.require(err <= 0.05, std::string(e.name));
  }
  o.detail << "(tol 0.05)";
}

void criterion6(Outcome& o) {
  const UniformGrid grid(0.05, 0.05, 300);
  for (const auto& e : examples::half_line_examples) {
    const SampledFunction<> g = forward_samples(e, Alpha(-0.5), grid);
    const double err = fourier_error(fourier_samples(g, Alpha(-0.5), 100, 10.0), e.f);
    o.detail << "alpha -0.5 " << e.name << " " << err << "; ";
    o.require(err <= 0.1, "alpha -0.5 " + std::string(e.name));
  }
  const auto& f2 = examples::half_line_example("f2");
  const SampledFunction<> g = forward_samples(f2, Alpha(-0.9), grid);
  const double err = fourier_error(fourier_samples(g, Alpha(-0.9), 100, 10.0), f2.f);
  o.detail << "alpha -0.9 f2 " << err << " (tol 0.1 / 0.3)";
  o.require(err <= 0.3, "alpha -0.9 f2");
}

void criterion7(Outcome& o) {
  const Alpha alpha(1.5);
  const UniformGrid grid = UniformGrid::linspace(0.0, 20.0, 400);
  const MollifierKind kernel(MollifierTag::triangle, 0.5);
  int wins = 0;
  int total = 0;
  for (const auto& e : examples::half_line_examples) {
    const SampledFunction<> clean = forward_samples(e, alpha, grid);
    double worst_ratio = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const SampledFunction<> noisy = add_gaussian_noise(clean, 0.1, seed);
      FourierInversionOptions opt;
      opt.f0_override = estimate_f0(noisy, alpha, 10.0);
      const FourierSamples fs = fourier_samples(noisy, alpha, 400, 20.0, opt);
      const double plain = fourier_error(fs, e.f);
      const double smooth =
          relative_l2_error([&](double x) { return reconstruct_smoothed(fs, kernel, x); }, e.f, 0.0, 3.0);
      worst_ratio = std::max(worst_ratio, smooth / plain);
      ++total;
      if (smooth < plain) ++wins;
    }
    o.detail << e.name << " worst smoothed/plain " << worst_ratio << "; ";
  }
  o.detail << wins << "/" << total << " smoothed runs better";
  o.require(wins == total, "smoothing improves every run");
}

void criterion8(Outcome& o) {
  DirectConfig cfg(Alpha(2.0), 3.0, 0.025);
  const cplx m1 = mu(1.0, cfg);
  const double mu_err = std::abs(m1 - cplx(pi / 2.0, 0.0));
  o.require(mu_err <= 1e-6, "mu(1) = pi/2");

  DirectInverter inv(cfg);
  const auto g = SampledFunction<>::tabulate(UniformGrid(0.0, 1e-3, 60001), examples::f1_t2);
  const UniformGrid out = UniformGrid::linspace(0.2, 3.0, 281);
  auto error_of = [&](double eps) {
    inv.set_epsilon(eps);
    return relative_l2_error(inv.invert(g, out), examples::f1, 0.2, 3.0);
  };
  const double fine = error_of(0.025);
  const double coarse = error_of(0.1);
  o.detail << "|mu(1) - pi/2| " << mu_err << ", rel L2 eps 0.025: " << fine << " (tol 0.1), eps 0.1: " << coarse;
  o.require(fine <= 0.1, "error at eps 0.025");
  o.require(coarse > fine, "eps 0.1 worse than eps 0.025");
}

void criterion9(Outcome& o) {
  const std::size_t n = 10;
  struct Named {
    const char* name;
    PeriodicDensity density;
    std::function<double(double)> pdf;
  };
  const std::vector<Named> densities = {
      {"shifted sine", circle::shifted_sine(1.0), [](double x) { return circle::shifted_sine_pdf(x, 1.0); }},
      {"von Mises", circle::vonmises4(1.0), [](double x) { return circle::vonmises4_pdf(x, 1.0); }},
      {"Watson", circle::watson(-2.5, 1.0), [](double x) { return circle::watson_pdf(x, -2.5, 1.0); }},
  };
  double worst_linf = 0.0;
  double worst_conv = 0.0;
  for (double a : {-0.5, 0.5, 1.5, 5.0}) {
    const Alpha alpha(a);
    const CoefficientTable ct = cosine_coeffs(alpha, n);
    for (const Named& d : densities) {
      const SampledFunction<> kf = k_sphere_sampled(d.density, alpha);
      const PeriodicDensity back = invert_sphere(kf, alpha, n);
      const double linf = linf_error(back.values(), d.pdf);
      worst_linf = std::max(worst_linf, linf);
      o.require(linf <= 0.02, std::string(d.name) + " at alpha " + std::to_string(a));

      const CircleCoeffs kc = circle_fourier_coeffs(kf, 2 * n);
      const CircleCoeffs fc = circle_fourier_coeffs(d.density.values(), 2 * n);
      for (long long k = 0; k <= static_cast<long long>(n); ++k) {
        const cplx expected = 2.0 * pi * ct[static_cast<std::size_t>(k)] * fc.at(2 * k);
        worst_conv = std::max(worst_conv, std::abs(kc.at(2 * k) - expected));
      }
    }
  }
  bool even_rejected = true;
  for (double a : {0.0, 2.0, 4.0}) {
    try {
      (void)invert_sphere(densities[2].density.values(), Alpha(a), n);
      even_rejected = false;
    } catch (const EvenIntegerAlpha&) {
    }
  }
  o.detail << "max Linf " << worst_linf << " (tol 0.02), convolution residual " << worst_conv
           << " (tol 1e-6), even alpha rejected " << even_rejected;
  o.require(worst_conv <= 1e-6, "convolution theorem");
  o.require(even_rejected, "EvenIntegerAlpha");
}

void criterion10(Outcome& o) {
  const double f0_err = std::abs(f0_from_scale(SasParams(1.0, 1.0)) - pi / 2.0);
  o.require(f0_err <= 1e-10, "f0_from_scale");

  const Alpha alpha(1.5);
  const QuadSpec s = spec_for(examples::half_line_example("f1"));
  const double sigma = std::pow(sigma_pow_alpha_from_density(examples::f1, alpha, s), 1.0 / 1.5);
  const SasParams p(sigma, 1.5);
  auto tau = [&](double t) { return codifference_forward(examples::f1, p, t, s); };
  const auto g = SampledFunction<>::tabulate(UniformGrid(0.05, 0.05, 100),
                                             [&](double t) { return g_from_codifference(tau, p, t); });
  FourierInversionOptions opt;
  opt.f0_override = f0_from_scale(p);
  const double err = fourier_error(fourier_samples(g, alpha, 100, 10.0, opt), examples::f1);
  o.detail << "|f0 - pi/2| " << f0_err << ", round-trip rel L2 " << err << " (tol 0.05)";
  o.require(err <= 0.05, "round trip");
}

struct Criterion {
  int id;
  double budget_s;
  void (*run)(Outcome&);
};

constexpr Criterion criteria[] = {
    {1, 10, criterion1},  {2, 5, criterion2},   {3, 5, criterion3},   {4, 2, criterion4},
    {5, 60, criterion5},  {6, 120, criterion6}, {7, 120, criterion7}, {8, 1800, criterion8},
    {9, 30, criterion9},  {10, 60, criterion10},
};

bool run_one(const Criterion& c) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.run(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "[exception: " << e.what() << "]";
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (elapsed > c.budget_s) o.require(false, "runtime budget " + std::to_string(c.budget_s) + " s");
  std::printf("criterion %d: %s (%.2f s) %s\n", c.id, o.pass ? "PASS" : "FAIL", elapsed, o.detail.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <criterion 1..10 | all>\n", argv[0]);
    return 2;
  }
  const std::string which = argv[1];
  bool ok = true;
  bool matched = false;
  for (const Criterion& c : criteria) {
    if (which == "all" || which == std::to_string(c.id)) {
      matched = true;
      ok = run_one(c) && ok;
    }
  }
  if (!matched) {
    std::fprintf(stderr, "unknown criterion '%s'\n", which.c_str());
    return 2;
  }
  return ok ? 0 : 1;
}
