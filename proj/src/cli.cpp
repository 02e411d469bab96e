#include "eigres/cli.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "eigres/errors.hpp"
#include "eigres/harness.hpp"
#include "eigres/report.hpp"
#include "eigres/sharpness.hpp"

namespace eigres::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_real(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad number '" + s + "' in " + what);
  }
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + s + "' in " + what);
  }
}

std::string real_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Options {
  std::string surface = "sphere";
  std::string curve;
  std::string f;
  std::string g;
  std::string modes;
  std::string g_modes;
  double nu = 0.0;
  std::string nus;
  std::string window;
  double tol = kDefaultTol;
  std::string out_path;
  std::string format = "csv";
  std::uint64_t seed = 20240601;
  double lambda = 0.0;
  std::string target;
  double c = 0.5;
  std::string experiment;
  int lmin = 0;
  int lmax = 0;
  double nu_step = 0.5;
};

Surface surface_from(const Options& o) {
  if (o.surface == "sphere") return Surface::Sphere;
  if (o.surface == "torus") return Surface::Torus;
  throw UsageError("--surface must be sphere or torus");
}

CurveSpec curve_for(const Options& o, Surface surface) {
  if (o.curve.empty()) {
    if (surface == Surface::Torus) throw UsageError("--curve geodesic:<p>,<q> is required on the torus");
    return CurveSpec::equator();
  }
  CurveSpec curve = parse_curve(o.curve);
  if (curve.surface() != surface) {
    throw UsageError("--curve " + o.curve + " does not lie on the " + surface_name(surface));
  }
  return curve;
}

Eigenfunction f_for(const Options& o, Surface surface) {
  if (surface == Surface::Sphere) {
    if (o.f.empty()) throw UsageError("--f l,m is required on the sphere");
    return Eigenfunction(SphereHarmonic{parse_index(o.f)});
  }
  if (o.modes.empty()) throw UsageError("--modes m,n[;m,n...] is required on the torus");
  return Eigenfunction(parse_modes(o.modes));
}

std::optional<Eigenfunction> g_for(const Options& o, Surface surface, bool required) {
  if (o.g.empty() && o.g_modes.empty()) {
    if (required) throw UsageError("--g l,m|one is required");
    return std::nullopt;
  }
  if (o.g == "one") return std::nullopt;
  if (surface == Surface::Sphere) return Eigenfunction(SphereHarmonic{parse_index(o.g)});
  if (o.g_modes.empty()) throw UsageError("on the torus use --g one or --g-modes");
  return Eigenfunction(parse_modes(o.g_modes));
}

std::optional<Window> window_for(const Options& o) {
  if (o.window.empty()) return std::nullopt;
  return parse_window(o.window);
}

Cell opt_real(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{std::string()};
}

OutputRecord functional_record(const Options& o, bool inner) {
  const Surface surface = surface_from(o);
  const CurveSpec curve = curve_for(o, surface);
  const Eigenfunction f = f_for(o, surface);
  const auto g = g_for(o, surface, inner);
  const auto window = window_for(o);
  const QuadResult q = generalized_inner_product({f, g, curve, o.nu, window, o.tol});
  OutputRecord r;
  r.rows.columns = {"surface", "curve", "f",  "g",   "nu",    "window_center", "window_halfwidth",
                    "re",      "im",    "abs", "error_estimate", "nodes"};
  const std::string f_text = surface == Surface::Sphere ? o.f : o.modes;
  const std::string g_text = g ? (surface == Surface::Sphere ? o.g : o.g_modes) : "one";
  r.rows.rows.push_back({o.surface, o.curve.empty() ? std::string("equator") : o.curve, f_text,
                         g_text, o.nu, opt_real(window ? std::optional(window->center) : std::nullopt),
                         opt_real(window ? std::optional(window->halfwidth) : std::nullopt),
                         q.value.real(), q.value.imag(), std::abs(q.value), q.error_estimate,
                         q.nodes_used});
  return r;
}

OutputRecord spectrum_record(const Options& o) {
  const Surface surface = surface_from(o);
  const CurveSpec curve = curve_for(o, surface);
  const Eigenfunction f = f_for(o, surface);
  if (o.nus.empty()) throw UsageError("--nus a,b,... is required");
  std::vector<double> nus;
  for (const auto& part : split(o.nus, ',')) nus.push_back(to_real(part, "--nus"));
  const auto spectrum = fourier_spectrum(f, curve, nus, window_for(o), o.tol);
  OutputRecord r;
  r.rows.columns = {"nu", "re", "im", "abs", "error_estimate", "nodes"};
  for (const auto& e : spectrum) {
    r.rows.rows.push_back({e.nu, e.result.value.real(), e.result.value.imag(),
                           std::abs(e.result.value), e.result.error_estimate,
                           e.result.nodes_used});
  }
  return r;
}

OutputRecord kernel_record(const Options& o) {
  const CurveSpec curve = curve_for(o, Surface::Sphere);
  const Window window = window_for(o).value_or(Window{0.0, 0.25});
  SpherePoint target;
  OutputRecord r;
  if (!o.target.empty()) {
    const auto parts = split(o.target, ',');
    if (parts.size() != 2) throw UsageError("--target expects theta,phi");
    target = SpherePoint(to_real(parts[0], "--target"), to_real(parts[1], "--target"));
  } else {
    ExperimentConfig cfg = default_config(ExperimentId::E5);
    cfg.curve = curve;
    cfg.window = window;
    cfg.c = o.c;
    cfg.seed = o.seed;
    target = draw_probe_target(cfg).point;
    r.notes.emplace_back("target", "seeded");
  }
  const QuadResult k = kernel_probe(o.lambda, o.nu, curve, target, window, o.tol);
  const auto s0 = kernel_stationary_point(o.lambda, o.nu, curve, target, window);
  r.rows.columns = {"lambda", "nu", "target_theta", "target_phi", "re", "im",
                    "abs",    "error_estimate", "nodes", "s_stationary"};
  r.rows.rows.push_back({o.lambda, o.nu, target.theta, target.phi, k.value.real(), k.value.imag(),
                         std::abs(k.value), k.error_estimate, k.nodes_used, opt_real(s0)});
  return r;
}

OutputRecord sharpness_record_output(const Options& o, bool with_c) {
  if (o.f.empty()) throw UsageError("--f l,m is required");
  const HarmonicIndex idx = parse_index(o.f);
  const SharpnessRecord s = sharpness_record(idx.degree, idx.order);
  OutputRecord r;
  r.rows.columns = {"l",           "m",     "exact_value", "surrogate_value",
                    "telescoping", "telescoping_factorial", "ratio_bound",
                    "c",           "upper", "cap",          "holds"};
  std::vector<Cell> row{static_cast<long>(s.degree), static_cast<long>(s.order), s.exact_value,
                        s.surrogate_value, s.telescoping,
                        telescoping_product_factorial(s.degree, s.order), s.ratio_bound};
  if (with_c) {
    const TelescopingBound b = telescoping_bound_check(s.degree, s.order, o.c);
    row.insert(row.end(), {o.c, b.upper, b.cap, std::string(b.holds ? "true" : "false")});
  } else {
    row.insert(row.end(), {std::string(), std::string(), std::string(), std::string()});
  }
  r.rows.rows.push_back(std::move(row));
  return r;
}

void emit(const OutputRecord& r, const Options& o, std::ostream& out) {
  const std::string text = o.format == "json" ? to_json(r) : to_csv(r);
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_atomically(o.out_path, text);
  }
}

void summarize(const OutputRecord& r, std::ostream& os) {
  if (r.fit) {
    os << "fit exponent " << real_text(r.fit->exponent) << ", r^2 "
       << real_text(r.fit->r_squared) << "\n";
  }
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  for (const auto& [k, v] : r.notes) os << k << " = " << v << "\n";
}

OutputRecord from_result(const ExperimentResult& res) {
  OutputRecord r;
  r.rows = res.table;
  r.fit = res.fit;
  r.checks = res.checks;
  r.notes = res.notes;
  return r;
}

}  // namespace

CurveSpec parse_curve(const std::string& text) {
  if (text == "equator") return CurveSpec::equator();
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("unknown curve '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const auto parts = split(text.substr(colon + 1), ',');
  try {
    if (kind == "tilted" && parts.size() == 1) {
      return CurveSpec::tilted(to_real(parts[0], "--curve"));
    }
    if (kind == "geodesic" && (parts.size() == 2 || parts.size() == 3)) {
      const double offset = parts.size() == 3 ? to_real(parts[2], "--curve") : 0.0;
      return CurveSpec::geodesic(to_int(parts[0], "--curve"), to_int(parts[1], "--curve"), offset);
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown curve '" + text + "'");
}

HarmonicIndex parse_index(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("expected l,m but got '" + text + "'");
  try {
    return HarmonicIndex(to_int(parts[0], text), to_int(parts[1], text));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

TorusWave parse_modes(const std::string& text) {
  std::vector<TorusMode> modes;
  for (const auto& item : split(text, ';')) {
    const auto parts = split(item, ',');
    if (parts.size() != 2) throw UsageError("expected m,n in --modes but got '" + item + "'");
    modes.push_back({to_int(parts[0], "--modes"), to_int(parts[1], "--modes"), {1.0, 0.0}});
  }
  try {
    return TorusWave::normalized(std::move(modes));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Window parse_window(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("expected center,halfwidth but got '" + text + "'");
  const Window w{to_real(parts[0], "--window"), to_real(parts[1], "--window")};
  if (!(w.halfwidth > 0.0)) throw UsageError("window halfwidth must be positive");
  return w;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Restrictions of Laplace eigenfunctions to closed curves on S^2 and T^2", "eigres"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out_path, "write output to this file instead of stdout");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", o.seed, "seed for randomized probe points");
  };
  auto add_functional = [&](CLI::App* sub) {
    sub->add_option("--surface", o.surface, "sphere or torus")
        ->check(CLI::IsMember({"sphere", "torus"}));
    sub->add_option("--curve", o.curve, "equator | tilted:<alpha> | geodesic:<p>,<q>[,<offset>]");
    sub->add_option("--f", o.f, "spherical harmonic l,m");
    sub->add_option("--modes", o.modes, "torus modes m,n[;m,n...]");
    sub->add_option("--window", o.window, "cutoff center,halfwidth");
    add_io(sub);
  };

  auto* inner = app.add_subcommand("inner-product", "integral of f conj(g) over the curve");
  add_functional(inner);
  inner->add_option("--g", o.g, "second harmonic l,m or 'one'");
  inner->add_option("--g-modes", o.g_modes, "second torus eigenfunction m,n[;m,n...]");
  inner->add_option("--nu", o.nu, "extra frequency e^{-i nu s}");

  auto* period = app.add_subcommand("period", "generalized period: integral of f e^{-i nu s}");
  add_functional(period);
  period->add_option("--nu", o.nu, "frequency nu");

  auto* spectrum = app.add_subcommand("spectrum", "generalized periods for a list of frequencies");
  add_functional(spectrum);
  spectrum->add_option("--nus", o.nus, "comma separated frequencies")->required();

  auto* kernel = app.add_subcommand("kernel-probe", "windowed stationary-phase kernel on S^2");
  kernel->add_option("--curve", o.curve, "sphere curve");
  kernel->add_option("--lambda", o.lambda, "eigenfrequency")->required();
  kernel->add_option("--nu", o.nu, "frequency nu")->required();
  kernel->add_option("--window", o.window, "cutoff center,halfwidth (default 0,0.25)");
  kernel->add_option("--target", o.target, "probe point theta,phi (default: seeded draw)");
  kernel->add_option("--c", o.c, "cos theta at the seeded stationary point");
  add_io(kernel);

  auto* sharp = app.add_subcommand("sharpness", "equator closed forms for even l, m");
  sharp->add_option("--f", o.f, "l,m")->required();
  auto* c_opt = sharp->add_option("--c", o.c, "ratio for the telescoping bound check");
  add_io(sharp);

  auto* experiment = app.add_subcommand("experiment", "run one of the experiments E1..E6");
  experiment->add_option("id", o.experiment, "E1..E6")->required();
  auto* lmin = experiment->add_option("--lmin", o.lmin, "first grid value (power of two)");
  auto* lmax = experiment->add_option("--lmax", o.lmax, "last grid value");
  auto* exp_c = experiment->add_option("--c", o.c, "ratio c in (0,1)");
  auto* exp_curve = experiment->add_option("--curve", o.curve, "curve override");
  auto* exp_window = experiment->add_option("--window", o.window, "window override");
  auto* exp_step = experiment->add_option("--nu-step", o.nu_step, "nu scan spacing (E3/E4)");
  auto* exp_modes = experiment->add_option("--modes", o.modes, "torus modes for E6");
  add_io(experiment);

  std::vector<std::string> argv_store{"eigres"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string echo;
  for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };

  try {
    OutputRecord record;
    int status = kOk;
    if (inner->parsed()) {
      record = functional_record(o, true);
    } else if (period->parsed()) {
      record = functional_record(o, false);
    } else if (spectrum->parsed()) {
      record = spectrum_record(o);
    } else if (kernel->parsed()) {
      record = kernel_record(o);
    } else if (sharp->parsed()) {
      record = sharpness_record_output(o, c_opt->count() > 0);
    } else {
      ExperimentConfig cfg = default_config(parse_experiment_id(o.experiment));
      if (lmin->count() > 0) cfg.grid_min = o.lmin;
      if (lmax->count() > 0) cfg.grid_max = o.lmax;
      if (exp_c->count() > 0) cfg.c = o.c;
      if (exp_curve->count() > 0) cfg.curve = parse_curve(o.curve);
      if (exp_window->count() > 0) cfg.window = parse_window(o.window);
      if (exp_step->count() > 0) cfg.nu_step = o.nu_step;
      if (exp_modes->count() > 0) cfg.torus_modes = parse_modes(o.modes).modes();
      cfg.tol = o.tol;
      cfg.seed = o.seed;
      try {
        record = from_result(run_experiment(cfg));
      } catch (const ExperimentError& e) {
        OutputRecord partial = from_result(e.partial());
        partial.command = echo;
        partial.notes.emplace_back("aborted", e.what());
        partial.timing_ms = elapsed_ms();
        emit(partial, o, out);
        err << "error: " << e.what() << " (partial results written)\n";
        return kNumeric;
      }
      status = std::all_of(record.checks.begin(), record.checks.end(),
                           [](const Check& c) { return c.passed; }) &&
                       !record.checks.empty()
                   ? kOk
                   : kChecksFailed;
      summarize(record, err);
    }
    record.command = echo;
    record.timing_ms = elapsed_ms();
    emit(record, o, out);
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  }
}

}  // namespace eigres::cli
