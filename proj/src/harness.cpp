#include "eigres/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "eigres/errors.hpp"
#include "eigres/sharpness.hpp"

namespace eigres {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Check make_check(std::string name, bool passed, std::string detail) {
  return Check{std::move(name), passed, std::move(detail)};
}

void require_curve(const ExperimentConfig& config, Surface surface, const char* what) {
  if (config.curve.surface() != surface) {
    throw DomainError(to_string(config.id) + " needs a curve on the " + what);
  }
}

// floor(c l) moved down to an even integer if needed.
int even_order(int degree, double c) {
  const int m = static_cast<int>(std::floor(c * degree));
  return m - (m % 2);
}

// Shared by E1 and E2: closed form, quadrature cross-check, fit.
ExperimentResult run_equator_family(const ExperimentConfig& config, bool diagonal) {
  if (!std::holds_alternative<Equator>(config.curve.variant())) {
    throw DomainError(to_string(config.id) + " is defined on the equator");
  }
  ExperimentResult result;
  result.id = config.id;
  result.table.columns = {"l",      "m",      "exact", "quad_re",   "quad_im",
                          "quad_abs", "rel_diff", "nodes", "provenance"};
  std::vector<std::pair<double, double>> points;
  double worst = 0.0;
  for (int l : degree_grid(config)) {
    const int m = diagonal ? l : even_order(l, config.c);
    const double exact = equator_mixed_inner_product_exact(l, m);
    QuadResult q;
    try {
      q = generalized_inner_product(
          {Eigenfunction::sphere(l, m), Eigenfunction::sphere(m, m), config.curve, 0.0,
           std::nullopt, config.tol});
    } catch (const ConvergenceError& e) {
      throw ExperimentError(e.what(), result);
    }
    const double rel = std::abs(std::abs(q.value) - exact) / exact;
    worst = std::max(worst, rel);
    result.table.rows.push_back({static_cast<long>(l), static_cast<long>(m), exact, q.value.real(),
                                 q.value.imag(), std::abs(q.value), rel, q.nodes_used,
                                 std::string("closed-form+quadrature")});
    points.emplace_back(diagonal ? l : m, exact);
  }
  result.fit = fit_power_law(points);
  const double expected = diagonal ? 0.5 : 0.25;
  result.checks.push_back(make_check(
      "exponent", std::abs(result.fit->exponent - expected) <= 0.05,
      "fit " + fmt(result.fit->exponent) + " vs " + fmt(expected) + " +- 0.05"));
  if (!diagonal) {
    result.checks.push_back(make_check("r_squared", result.fit->r_squared >= 0.99,
                                       "r^2 " + fmt(result.fit->r_squared) + " >= 0.99"));
  }
  result.checks.push_back(make_check("cross_validation", worst <= 1e-8,
                                     "max rel diff " + fmt(worst) + " <= 1e-8"));
  return result;
}

ExperimentResult run_period_envelope(const ExperimentConfig& config, double lo, double hi) {
  require_curve(config, Surface::Sphere, "sphere");
  if (!config.window) throw DomainError(to_string(config.id) + " needs a window");
  if (!(config.nu_step > 0.0)) throw DomainError("nu_step must be positive");
  ExperimentResult result;
  result.id = config.id;
  result.table.columns = {"l",        "m",        "lambda",    "nu_lo",    "nu_hi",
                          "nu_count", "nu_at_max", "envelope", "max_error", "max_nodes",
                          "provenance"};
  std::vector<std::pair<double, double>> points;
  std::vector<double> envelopes;
  std::vector<int> degrees = degree_grid(config);
  for (int l : degrees) {
    const int m = static_cast<int>(std::floor(config.c * l));
    const Eigenfunction f = Eigenfunction::sphere(l, m);
    const double lambda = f.eigenfrequency();
    const long count = static_cast<long>(std::floor((hi - lo) * lambda / config.nu_step)) + 1;
    std::vector<double> nus(static_cast<std::size_t>(count));
    for (long j = 0; j < count; ++j) nus[j] = lo * lambda + j * config.nu_step;
    std::vector<SpectrumEntry> spectrum;
    try {
      spectrum = fourier_spectrum(f, config.curve, nus, config.window, config.tol);
    } catch (const ConvergenceError& e) {
      throw ExperimentError(e.what(), result);
    }
    double envelope = 0.0;
    double nu_at_max = nus.front();
    double max_err = 0.0;
    long max_nodes = 0;
    for (const auto& entry : spectrum) {
      const double a = std::abs(entry.result.value);
      if (a > envelope) {
        envelope = a;
        nu_at_max = entry.nu;
      }
      max_err = std::max(max_err, entry.result.error_estimate);
      max_nodes = std::max(max_nodes, entry.result.nodes_used);
    }
    result.table.rows.push_back({static_cast<long>(l), static_cast<long>(m), lambda, nus.front(),
                                 nus.back(), count, nu_at_max, envelope, max_err, max_nodes,
                                 std::string("quadrature")});
    points.emplace_back(l, envelope);
    envelopes.push_back(envelope);
  }
  result.fit = fit_power_law(points);
  if (config.id == ExperimentId::E3) {
    result.checks.push_back(make_check("envelope_exponent",
                                       std::abs(result.fit->exponent) <= 0.1,
                                       "|fit " + fmt(result.fit->exponent) + "| <= 0.1"));
  } else {
    bool tiny = true;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (degrees[i] >= 256 && envelopes[i] >= 1e-8) tiny = false;
    }
    const bool steep = result.fit->exponent <= -4.0;
    result.checks.push_back(make_check(
        "rapid_decay", steep || tiny,
        "fit " + fmt(result.fit->exponent) + " <= -4 or all envelopes(l>=256) < 1e-8: " +
            (tiny ? "yes" : "no")));
  }
  return result;
}

ExperimentResult run_kernel(const ExperimentConfig& config) {
  require_curve(config, Surface::Sphere, "sphere");
  const Window window = config.window.value_or(Window{0.0, 0.25});
  const ProbeTarget target = draw_probe_target(config);
  ExperimentResult result;
  result.id = config.id;
  result.notes = {{"target_theta", fmt(target.point.theta)},
                  {"target_phi", fmt(target.point.phi)},
                  {"target_s0", fmt(target.stationary_s)},
                  {"target_distance", fmt(target.distance)}};
  result.table.columns = {"lambda", "nu",    "ratio", "re",           "im",        "abs",
                          "error",  "nodes", "series", "s_stationary", "provenance"};
  std::vector<std::pair<double, double>> points;
  bool fast_ok = true;
  double worst_fast = 0.0;
  for (int lam : degree_grid(config)) {
    const double lambda = lam;
    for (const double ratio : {config.c, 2.0}) {
      const double nu = ratio * lambda;
      QuadResult k;
      try {
        k = kernel_probe(lambda, nu, config.curve, target.point, window, config.tol);
      } catch (const ConvergenceError& e) {
        throw ExperimentError(e.what(), result);
      }
      const auto s0 = kernel_stationary_point(lambda, nu, config.curve, target.point, window);
      const bool stationary = ratio < 1.0;
      result.table.rows.push_back({lambda, nu, ratio, k.value.real(), k.value.imag(),
                                   std::abs(k.value), k.error_estimate, k.nodes_used,
                                   std::string(stationary ? "stationary" : "nonstationary"),
                                   s0 ? Cell{*s0} : Cell{std::string()},
                                   std::string("quadrature")});
      if (stationary) {
        points.emplace_back(lambda, std::abs(k.value));
      } else if (lam >= 256) {
        worst_fast = std::max(worst_fast, std::abs(k.value));
        if (std::abs(k.value) >= 1e-6) fast_ok = false;
      }
    }
  }
  result.fit = fit_power_law(points);
  result.checks.push_back(make_check("kernel_exponent",
                                     std::abs(result.fit->exponent + 0.5) <= 0.1,
                                     "fit " + fmt(result.fit->exponent) + " vs -0.5 +- 0.1"));
  result.checks.push_back(make_check("nonstationary_decay", fast_ok,
                                     "max |K|(nu = 2 lambda, lambda >= 256) " + fmt(worst_fast) +
                                         " < 1e-6"));
  return result;
}

ExperimentResult run_torus(const ExperimentConfig& config) {
  require_curve(config, Surface::Torus, "torus");
  const auto& geo = std::get<TorusGeodesic>(config.curve.variant());
  const Eigenfunction f{TorusWave(config.torus_modes)};
  const double rho = config.curve.length() / (2.0 * std::numbers::pi);
  const long reach = static_cast<long>(std::ceil(f.eigenfrequency() * rho)) + 5;

  ExperimentResult result;
  result.id = config.id;
  result.table.columns = {"k",           "nu",       "re",   "im",        "abs",
                          "closed_form", "abs_diff", "kind", "provenance"};
  bool matched_ok = true;
  bool mismatched_ok = true;
  double worst_matched = 0.0;
  double worst_mismatched = 0.0;
  for (long k = -reach; k <= reach; ++k) {
    // Restriction of e^{i(m x + n y)} along the geodesic is e^{i m offset} e^{i (m p + n q) s / rho}.
    std::complex<double> closed{0.0, 0.0};
    bool matched = false;
    for (const auto& mode : config.torus_modes) {
      if (static_cast<long>(mode.m) * geo.p + static_cast<long>(mode.n) * geo.q == k) {
        closed += mode.coefficient * std::polar(1.0, mode.m * geo.offset);
        matched = true;
      }
    }
    closed *= rho;
    const double nu = static_cast<double>(k) / rho;
    QuadResult q;
    try {
      q = generalized_inner_product({f, std::nullopt, config.curve, nu, std::nullopt, config.tol});
    } catch (const ConvergenceError& e) {
      throw ExperimentError(e.what(), result);
    }
    const double diff = std::abs(q.value - closed);
    if (matched) {
      worst_matched = std::max(worst_matched, diff);
      if (diff > 1e-10 * std::max(1.0, std::abs(closed))) matched_ok = false;
    } else {
      worst_mismatched = std::max(worst_mismatched, std::abs(q.value));
      if (std::abs(q.value) >= 1e-12) mismatched_ok = false;
    }
    result.table.rows.push_back({k, nu, q.value.real(), q.value.imag(), std::abs(q.value),
                                 std::abs(closed), diff,
                                 std::string(matched ? "matched" : "mismatched"),
                                 std::string("closed-form+quadrature")});
  }
  result.checks.push_back(make_check("matched_exact", matched_ok,
                                     "max |quad - closed| " + fmt(worst_matched) + " <= 1e-10"));
  result.checks.push_back(make_check("mismatched_zero", mismatched_ok,
                                     "max |quad| " + fmt(worst_mismatched) + " < 1e-12"));
  return result;
}

}  // namespace

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw DomainError("fit_power_law: need at least 3 points");
  std::vector<double> lx;
  std::vector<double> ly;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("fit_power_law: nonpositive value");
    if (y < 1e-300) throw DomainError("fit_power_law: value below 1e-300");
    lx.push_back(std::log(x));
    ly.push_back(std::log(y));
  }
  const double n = static_cast<double>(points.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw DomainError("fit_power_law: all x coincide");
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.log_intercept = my - fit.exponent * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.log_intercept + fit.exponent * lx[i]);
    fit.residuals.push_back(r);
    ss_res += r * r;
  }
  if (syy == 0.0) {
    fit.r_squared = 1.0;
  } else {
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

std::string to_string(ExperimentId id) { return "E" + std::to_string(static_cast<int>(id) + 1); }

ExperimentId parse_experiment_id(const std::string& text) {
  if (text.size() == 2 && std::toupper(static_cast<unsigned char>(text[0])) == 'E' &&
      text[1] >= '1' && text[1] <= '6') {
    return static_cast<ExperimentId>(text[1] - '1');
  }
  throw DomainError("unknown experiment '" + text + "' (expected E1..E6)");
}

ExperimentConfig default_config(ExperimentId id) {
  ExperimentConfig c;
  c.id = id;
  switch (id) {
    case ExperimentId::E1:
      c.grid_min = 64;
      c.grid_max = 2048;
      c.c = 0.5;
      break;
    case ExperimentId::E2:
      c.grid_min = 64;
      c.grid_max = 1024;
      c.c = 1.0;
      break;
    case ExperimentId::E3:
    case ExperimentId::E4:
      // Window over the stretch of the tilted circle where the restriction's
      // local frequency sweeps through 0.4..0.5 lambda; support length 1.
      c.grid_min = 64;
      c.grid_max = 1024;
      c.c = 0.3;
      c.curve = CurveSpec::tilted(std::numbers::pi / 6.0);
      c.window = Window{1.35, 0.5};
      break;
    case ExperimentId::E5:
      c.grid_min = 128;
      c.grid_max = 4096;
      c.c = 0.5;
      c.curve = CurveSpec::tilted(std::numbers::pi / 6.0);
      c.window = Window{0.0, 0.5};
      break;
    case ExperimentId::E6:
      c.grid_min = 1;
      c.grid_max = 1;
      c.curve = CurveSpec::geodesic(3, 4);
      c.torus_modes = {TorusMode{3, 4, {1.0, 0.0}}};
      break;
  }
  return c;
}

std::vector<int> degree_grid(const ExperimentConfig& config) {
  const int lo = config.grid_min;
  if (lo <= 0 || (lo & (lo - 1)) != 0) {
    throw DomainError("degree grid must start at a power of two");
  }
  if (!(lo < config.grid_max)) throw DomainError("degree grid must be strictly increasing");
  std::vector<int> grid;
  for (long v = lo; v <= config.grid_max; v *= 2) grid.push_back(static_cast<int>(v));
  return grid;
}

bool ExperimentResult::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

ProbeTarget draw_probe_target(const ExperimentConfig& config) {
  const Window w = config.window.value_or(Window{0.0, 0.25});
  const ProbeAnnulus annulus;
  const double ratio = config.c;
  if (!(ratio > 0.0 && ratio < 1.0)) throw DomainError("probe ratio c must lie in (0, 1)");
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> where(w.center - 0.25 * w.halfwidth,
                                               w.center + 0.25 * w.halfwidth);
  std::uniform_real_distribution<double> how_far(0.96 * annulus.scale, 1.04 * annulus.scale);
  const Vec3 center = curve_ambient(config.curve, w.center);
  for (;;) {
    const double s0 = where(rng);
    const double d = how_far(rng);
    const double side = (rng() & 1U) ? 1.0 : -1.0;
    const Vec3 p = curve_ambient(config.curve, s0);
    const Vec3 t = curve_velocity(config.curve, s0);
    const Vec3 n{p[1] * t[2] - p[2] * t[1], p[2] * t[0] - p[0] * t[2], p[0] * t[1] - p[1] * t[0]};
    const double sn = side * std::sqrt(1.0 - ratio * ratio);
    Vec3 x{};
    for (int i = 0; i < 3; ++i) {
      const double away = ratio * t[i] + sn * n[i];
      x[i] = std::cos(d) * p[i] - std::sin(d) * away;
    }
    const double d_center = sphere_distance(center, x);
    if (d_center >= annulus.inner * annulus.scale && d_center <= annulus.outer * annulus.scale) {
      return ProbeTarget{SpherePoint::from_ambient(x), s0, d};
    }
  }
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  switch (config.id) {
    case ExperimentId::E1:
      return run_equator_family(config, false);
    case ExperimentId::E2:
      return run_equator_family(config, true);
    case ExperimentId::E3:
      return run_period_envelope(config, 0.4, 0.5);
    case ExperimentId::E4:
      return run_period_envelope(config, 1.9, 2.1);
    case ExperimentId::E5:
      return run_kernel(config);
    case ExperimentId::E6:
      return run_torus(config);
  }
  throw DomainError("unknown experiment");
}

}  // namespace eigres
