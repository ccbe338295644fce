#include "csv.hpp"

#include <asine/asine.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

using namespace asine;
using asine::cli::Table;

namespace {

constexpr int exit_validation = 2;
constexpr int exit_nonconvergence = 3;

struct Options {
  double alpha = 0.0;
  std::size_t n = 100;
  double r = 10.0;
  double epsilon = 0.025;
  std::optional<double> weight_exponent;
  double gamma = 0.5;
  std::optional<std::string> mollifier;
  std::string interp = "sinc";
  std::uint64_t seed = 0;
  double sigma = 0.1;
  std::string in = "-";
  std::string out = "-";
  std::string kernel = "sine";
  std::string example;
  std::string method;
  std::optional<std::string> truth;
  std::optional<double> f0;
  double y_min = 0.0;
  double y_max = 20.0;
  std::optional<double> x_min;
  double x_max = 3.0;
  std::size_t points = 0;
  std::size_t terms = 2000;
  double tail_cut = 0.0;
  double shift = 1.0;
  double mu = -2.5;
  double kappa = 1.0;
};

std::string fmt(double v) { return cli::format_number(v); }

Kernel parse_kernel(const std::string& k) { return k == "cosine" ? Kernel::cosine : Kernel::sine; }

void record(Table& t, const std::string& command, const std::vector<std::pair<std::string, std::string>>& params) {
  t.comments.push_back("asine " + command);
  for (const auto& [k, v] : params) t.comments.push_back(k + " = " + v);
}

bool is_circle_example(const std::string& name) {
  return name == "shifted_sine" || name == "vonmises4" || name == "watson";
}

std::function<double(double)> circle_pdf(const Options& o, const std::string& name) {
  if (name == "shifted_sine") return [h = o.shift](double x) { return circle::shifted_sine_pdf(x, h); };
  if (name == "vonmises4") return [h = o.shift](double x) { return circle::vonmises4_pdf(x, h); };
  if (name == "watson") return [m = o.mu, k = o.kappa](double x) { return circle::watson_pdf(x, m, k); };
  throw DomainError("unknown circle density '" + name + "' (expected shifted_sine, vonmises4 or watson)");
}

PeriodicDensity circle_density(const Options& o, const std::string& name, const UniformGrid& grid) {
  if (name == "shifted_sine") return circle::shifted_sine(o.shift, grid);
  if (name == "vonmises4") return circle::vonmises4(o.shift, grid);
  return circle::watson(o.mu, o.kappa, grid);
}

void cmd_coeffs(const Options& o) {
  if (o.n < 1) throw DomainError("--n must be at least 1");
  const CoefficientTable c = coefficient_table(Alpha(o.alpha), o.n, parse_kernel(o.kernel));
  Table t;
  record(t, "coeffs", {{"alpha", fmt(o.alpha)}, {"n", std::to_string(o.n)}, {"kernel", o.kernel}});
  t.columns = {"x", "value"};
  for (std::size_t j = 0; j < c.size(); ++j) t.rows.push_back({static_cast<double>(j), c[j]});
  cli::write_csv(t, o.out);
}

void cmd_forward(const Options& o) {
  const Alpha alpha(o.alpha);
  Table t;
  if (is_circle_example(o.example)) {
    const std::size_t m = o.points ? o.points : 512;
    const PeriodicDensity f = circle_density(o, o.example, circle::default_grid(m));
    const SampledFunction<> kf = k_sphere_sampled(f, alpha);
    record(t, "forward", {{"alpha", fmt(o.alpha)}, {"example", o.example}, {"points", std::to_string(m)},
                          {"shift", fmt(o.shift)}, {"mu", fmt(o.mu)}, {"kappa", fmt(o.kappa)},
                          {"transform", "spherical cosine"}});
    t.columns = {"x", "value", "truth"};
    for (std::size_t i = 0; i < kf.size(); ++i) t.rows.push_back({kf.abscissa(i), kf[i], f[i]});
    t.comments.push_back("truth column holds the density itself");
    cli::write_csv(t, o.out);
    return;
  }

  const std::string method = o.method.empty() ? "quad" : o.method;
  if (method != "quad" && method != "series") throw DomainError("--method must be quad or series for forward");
  const Kernel kind = parse_kernel(o.kernel);
  const std::size_t points = o.points ? o.points : 401;
  const UniformGrid grid = UniformGrid::linspace(o.y_min, o.y_max, points);

  std::function<double(double)> f;
  double (*fhat)(double) = nullptr;
  double (*t2)(double) = nullptr;
  QuadSpec spec;
  std::string source;
  if (!o.example.empty()) {
    const auto& e = examples::half_line_example(o.example);
    f = e.f;
    fhat = e.fhat;
    t2 = e.t2;
    spec.tail_cut = o.tail_cut > 0.0 ? o.tail_cut : e.tail_cut;
    source = o.example;
  } else {
    const Table in = cli::read_csv(o.in);
    const SampledFunction<> s = cli::to_sampled(in);
    if (s.grid().start() > 0.0) throw DomainError("sampled f must start at x = 0");
    f = [s](double x) { return eval_linear(s, x); };
    spec.tail_cut = o.tail_cut > 0.0 ? o.tail_cut : s.grid().back();
    source = "csv:" + o.in;
  }
  if (method == "series" && !fhat) throw DomainError("--method series needs a builtin example with a known transform");

  const bool with_truth = t2 && kind == Kernel::sine && alpha.value() == 2.0;
  record(t, "forward", {{"alpha", fmt(o.alpha)}, {"f", source}, {"method", method}, {"kernel", o.kernel},
                        {"y_min", fmt(o.y_min)}, {"y_max", fmt(o.y_max)}, {"points", std::to_string(points)},
                        {"tail_cut", fmt(spec.tail_cut)}, {"terms", std::to_string(o.terms)}});
  t.columns = with_truth ? std::vector<std::string>{"x", "value", "truth"} : std::vector<std::string>{"x", "value"};
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const double y = grid.abscissa(i);
    double v = 0.0;
    if (method == "series" && y > 0.0) {
      v = t_sine_series(fhat, alpha, y, o.terms, alpha.value() < 0.0, kind);
    } else if (kind == Kernel::sine) {
      v = t_sine(f, alpha, y, spec);
    } else {
      v = k_cosine(f, alpha, y, spec);
    }
    if (with_truth) {
      t.rows.push_back({y, v, t2(y)});
    } else {
      t.rows.push_back({y, v});
    }
  }
  cli::write_csv(t, o.out);
}

std::optional<MollifierKind> mollifier_of(const Options& o) {
  if (!o.mollifier) return std::nullopt;
  if (*o.mollifier == "triangle") return MollifierKind(MollifierTag::triangle, o.gamma);
  return MollifierKind(MollifierTag::gaussian, o.gamma);
}

void add_error_metrics(Table& t, const SampledFunction<>& result, const std::function<double(double)>& truth,
                       double a, double b) {
  t.comments.push_back("rel_l2_error = " + fmt(relative_l2_error(result, truth, a, b, result.size())));
  t.comments.push_back("linf_error = " + fmt(linf_error(result, truth)));
}

void emit_diagnostics(Table& t, const Diagnostics& d) {
  for (const auto& [k, v] : d.values) t.comments.push_back(k + " = " + fmt(v));
  for (const auto& w : d.warnings) {
    t.comments.push_back("warning: " + w);
    std::cerr << "warning: " << w << '\n';
  }
}

void cmd_invert(const Options& o) {
  const Alpha alpha(o.alpha);
  const Table in = cli::read_csv(o.in);
  const SampledFunction<> g = cli::to_sampled(in);
  const std::string method = o.method.empty() ? "fourier" : o.method;
  Diagnostics diag;
  Table t;

  if (method == "sphere") {
    const PeriodicDensity f = invert_sphere(g, alpha, o.n, &diag);
    record(t, "invert", {{"method", method}, {"alpha", fmt(o.alpha)}, {"n", std::to_string(o.n)}, {"in", o.in}});
    std::optional<std::function<double(double)>> truth;
    if (o.truth) {
      truth = circle_pdf(o, *o.truth);
      t.comments.push_back("truth = " + *o.truth);
      add_error_metrics(t, f.values(), *truth, f.grid().start(), f.grid().back());
    }
    emit_diagnostics(t, diag);
    t.columns = truth ? std::vector<std::string>{"x", "value", "truth"} : std::vector<std::string>{"x", "value"};
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double x = f.grid().abscissa(i);
      if (truth) {
        t.rows.push_back({x, f[i], (*truth)(x)});
      } else {
        t.rows.push_back({x, f[i]});
      }
    }
    cli::write_csv(t, o.out);
    return;
  }

  const std::size_t points = o.points ? o.points : 301;
  SampledFunction<> result(UniformGrid(0.0, 1.0, 1), {0.0});
  double x_min = 0.0;
  std::vector<std::pair<std::string, std::string>> params{{"method", method}, {"alpha", fmt(o.alpha)}, {"in", o.in}};
  if (method == "fourier") {
    FourierInversionOptions opt;
    if (o.f0) {
      opt.f0_override = *o.f0;
    } else if (const auto c = in.comment_value("f0")) {
      opt.f0_override = std::stod(*c);
    }
    if (o.interp != "sinc" && o.interp != "linear") throw DomainError("--interp must be sinc or linear");
    opt.interpolation = o.interp == "linear" ? Interpolation::linear : Interpolation::sinc;
    opt.mollifier = mollifier_of(o);
    opt.kernel = parse_kernel(o.kernel);
    x_min = o.x_min.value_or(0.0);
    const UniformGrid out = UniformGrid::linspace(x_min, o.x_max, points);
    result = invert_fourier(g, alpha, o.n, o.r, opt, out, &diag);
    params.insert(params.end(), {{"n", std::to_string(o.n)}, {"r", fmt(o.r)}, {"interp", o.interp},
                                 {"kernel", o.kernel}, {"mollifier", o.mollifier.value_or("none")},
                                 {"gamma", fmt(o.gamma)}});
    if (opt.f0_override) params.emplace_back("f0", fmt(*opt.f0_override));
  } else if (method == "direct") {
    DirectConfig cfg(alpha);
    if (o.weight_exponent) cfg.weight_exponent = *o.weight_exponent;
    cfg.epsilon = o.epsilon;
    cfg.validate();
    x_min = o.x_min.value_or(0.2);
    const UniformGrid out = UniformGrid::linspace(x_min, o.x_max, points);
    result = invert_direct(g, cfg, out, &diag);
    params.insert(params.end(), {{"epsilon", fmt(cfg.epsilon)}, {"c", fmt(cfg.weight_exponent)}});
  } else {
    throw DomainError("--method must be fourier, direct or sphere");
  }
  params.insert(params.end(), {{"x_min", fmt(x_min)}, {"x_max", fmt(o.x_max)}, {"points", std::to_string(points)}});
  record(t, "invert", params);

  std::optional<std::function<double(double)>> truth;
  if (o.truth) {
    truth = examples::half_line_example(*o.truth).f;
    t.comments.push_back("truth = " + *o.truth);
    add_error_metrics(t, result, *truth, x_min, o.x_max);
  }
  emit_diagnostics(t, diag);
  t.columns = truth ? std::vector<std::string>{"x", "value", "truth"} : std::vector<std::string>{"x", "value"};
  for (std::size_t i = 0; i < result.size(); ++i) {
    const double x = result.abscissa(i);
    if (truth) {
      t.rows.push_back({x, result[i], (*truth)(x)});
    } else {
      t.rows.push_back({x, result[i]});
    }
  }
  cli::write_csv(t, o.out);
}

void cmd_noise(const Options& o) {
  const Table in = cli::read_csv(o.in);
  const SampledFunction<> s = cli::to_sampled(in);
  const SampledFunction<> noisy = add_gaussian_noise(s, o.sigma, o.seed);
  Table t;
  t.comments = in.comments;
  record(t, "noise", {{"sigma", fmt(o.sigma)}, {"seed", std::to_string(o.seed)}, {"in", o.in}});
  const bool keep_truth = in.has_column("truth");
  t.columns = keep_truth ? std::vector<std::string>{"x", "value", "truth"} : std::vector<std::string>{"x", "value"};
  const std::vector<double> truth = keep_truth ? in.column("truth") : std::vector<double>{};
  for (std::size_t i = 0; i < noisy.size(); ++i) {
    if (keep_truth) {
      t.rows.push_back({noisy.abscissa(i), noisy[i], truth[i]});
    } else {
      t.rows.push_back({noisy.abscissa(i), noisy[i]});
    }
  }
  cli::write_csv(t, o.out);
}

void cmd_sas(const Options& o) {
  const SasParams p(o.sigma, o.alpha);
  const Table in = cli::read_csv(o.in);
  const SampledFunction<> tau = cli::to_sampled(in);
  auto tau_at = [&](double t) { return eval_linear(tau, t); };
  const double step = tau.grid().step();
  const double first = std::max(step, tau.grid().start());
  const auto count = static_cast<std::size_t>(std::floor((tau.grid().back() / 2.0 - first) / step + 1e-9)) + 1;
  if (!(tau.grid().back() / 2.0 >= first)) throw DomainError("codifference samples do not reach 2t for any t > 0");
  Table t;
  record(t, "sas", {{"alpha", fmt(o.alpha)}, {"sigma", fmt(o.sigma)}, {"in", o.in}});
  t.comments.push_back("f0 = " + fmt(f0_from_scale(p)));
  t.columns = {"x", "value"};
  for (std::size_t i = 0; i < count; ++i) {
    const double x = first + static_cast<double>(i) * step;
    t.rows.push_back({x, g_from_codifference(tau_at, p, x)});
  }
  cli::write_csv(t, o.out);
}

// Reads `key = value` lines and appends `--key value` for every key not given on the command line.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ValidationError("--config", "needs a file name");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;
  std::ifstream in(*path);
  if (!in) throw CLI::ValidationError("--config", "cannot open '" + *path + "'");
  std::set<std::string> given;
  for (const auto& a : rest) {
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') - 2));
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string{};
      return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--config", "line " + std::to_string(line_no) + " is not of the form key = value");
    }
    std::string key = trim(line.substr(0, eq));
    for (char& ch : key) {
      if (ch == '_') ch = '-';
    }
    const std::string value = trim(line.substr(eq + 1));
    if (given.count(key)) continue;
    rest.push_back("--" + key);
    rest.push_back(value);
  }
  return rest;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--alpha", o.alpha, "Kernel exponent alpha")->required();
  sub->add_option("--out", o.out, "Output CSV file ('-' for standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Forward and inverse alpha-sine / alpha-cosine transforms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "asine 1.0");

  const std::vector<std::string> kernels{"sine", "cosine"};
  const std::vector<std::string> all_examples{"f1", "f2", "f3", "shifted_sine", "vonmises4", "watson"};

  auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients c_j (sine) or c~_j (cosine)");
  add_common(coeffs, o);
  coeffs->add_option("--n", o.n, "Largest index j");
  coeffs->add_option("--kernel", o.kernel)->check(CLI::IsMember(kernels));

  auto* forward = app.add_subcommand("forward", "Sample T_alpha f, K_alpha f or the spherical transform");
  add_common(forward, o);
  auto* ex = forward->add_option("--example", o.example, "Builtin f")->check(CLI::IsMember(all_examples));
  forward->add_option("--in", o.in, "CSV samples of f (columns x,value) instead of a builtin")->excludes(ex);
  forward->add_option("--method", o.method, "quad or series")->check(CLI::IsMember({"quad", "series"}));
  forward->add_option("--kernel", o.kernel)->check(CLI::IsMember(kernels));
  forward->add_option("--y-min", o.y_min);
  forward->add_option("--y-max", o.y_max);
  forward->add_option("--points", o.points);
  forward->add_option("--terms", o.terms, "Series terms");
  forward->add_option("--tail-cut", o.tail_cut, "Upper integration limit");
  forward->add_option("--shift", o.shift, "Location h of shifted_sine / vonmises4");
  forward->add_option("--mu", o.mu, "Watson location");
  forward->add_option("--kappa", o.kappa, "Watson concentration");

  auto* invert = app.add_subcommand("invert", "Recover f from samples of its transform");
  add_common(invert, o);
  invert->add_option("--method", o.method)->check(CLI::IsMember({"fourier", "direct", "sphere"}));
  invert->add_option("--in", o.in, "CSV samples of the transform (columns x,value)");
  invert->add_option("--n", o.n, "Number of Fourier nodes N");
  invert->add_option("--r", o.r, "Fourier cut-off R");
  invert->add_option("--epsilon", o.epsilon, "Cut-off for |mu| (direct method)");
  invert->add_option("--c", o.weight_exponent, "Weight exponent (direct method)");
  invert->add_option("--gamma", o.gamma, "Mollifier dilation");
  invert->add_option("--mollifier", o.mollifier)->check(CLI::IsMember({"triangle", "gaussian"}));
  invert->add_option("--interp", o.interp)->check(CLI::IsMember({"sinc", "linear"}));
  invert->add_option("--kernel", o.kernel)->check(CLI::IsMember(kernels));
  invert->add_option("--f0", o.f0, "Value of F f(0); overrides the input's f0 comment and the plateau estimate");
  invert->add_option("--truth", o.truth, "Builtin f to compare against")->check(CLI::IsMember(all_examples));
  invert->add_option("--x-min", o.x_min);
  invert->add_option("--x-max", o.x_max);
  invert->add_option("--points", o.points);
  invert->add_option("--shift", o.shift);
  invert->add_option("--mu", o.mu);
  invert->add_option("--kappa", o.kappa);

  auto* noise = app.add_subcommand("noise", "Add reproducible Gaussian noise to the value column");
  noise->add_option("--in", o.in);
  noise->add_option("--out", o.out);
  noise->add_option("--sigma", o.sigma, "Standard deviation");
  noise->add_option("--seed", o.seed);

  auto* sas = app.add_subcommand("sas", "Codifference samples to T_alpha f of the spectral density");
  add_common(sas, o);
  sas->add_option("--in", o.in, "CSV samples of tau (columns x,value)");
  sas->add_option("--sigma", o.sigma, "Scale parameter")->required();

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = apply_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_validation;
  }

  try {
    if (*coeffs) cmd_coeffs(o);
    if (*forward) cmd_forward(o);
    if (*invert) cmd_invert(o);
    if (*noise) cmd_noise(o);
    if (*sas) cmd_sas(o);
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_nonconvergence;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_validation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_validation;
  }
  return 0;
}
