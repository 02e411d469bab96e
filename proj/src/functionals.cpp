#include "eigres/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eigres/errors.hpp"

namespace eigres {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_window(const std::optional<Window>& window, const CurveSpec& curve) {
  if (!window) return;
  if (!(window->halfwidth > 0.0) || window->halfwidth > 0.5 * curve.length()) {
    throw DomainError("window halfwidth must lie in (0, L/2]");
  }
}

void check_surface(const Eigenfunction& f, const CurveSpec& curve, const char* which) {
  if (f.surface() != curve.surface()) {
    throw DomainError(std::string(which) + " lives on the " + surface_name(f.surface()) +
                      " but the curve is on the " + surface_name(curve.surface()));
  }
}

Integrand restriction(const Eigenfunction& f, const std::optional<Eigenfunction>& g,
                      const CurveSpec& curve, const std::optional<Window>& window) {
  return [f, g, curve, window](double s) -> std::complex<double> {
    double chi = 1.0;
    if (window) {
      chi = bump_window(s, window->center, window->halfwidth);
      if (chi == 0.0) return {0.0, 0.0};
    }
    const SurfacePoint p = curve_point(curve, s);
    std::complex<double> v = eval_eigenfunction(f, p);
    if (g) v *= std::conj(eval_eigenfunction(*g, p));
    return v * chi;
  };
}

Integrand plane_wave(double nu) {
  return [nu](double s) { return std::polar(1.0, -nu * s); };
}

struct Span {
  double origin;
  double length;
};

Span integration_span(const CurveSpec& curve, const std::optional<Window>& window) {
  if (window) return {window->center - window->halfwidth, 2.0 * window->halfwidth};
  return {0.0, curve.length()};
}

void check_closed_frequency(double nu, const CurveSpec& curve,
                            const std::optional<Window>& window) {
  if (!window && !is_dual_lattice_frequency(nu, curve)) {
    throw DomainError("closed-curve functional needs nu in (2 pi / L) Z; got nu = " +
                      std::to_string(nu) + " (use a window for arbitrary nu)");
  }
}

}  // namespace

bool is_dual_lattice_frequency(double nu, const CurveSpec& curve) {
  const double k = nu * curve.length() / kTwoPi;
  return std::abs(k - std::round(k)) <= 1e-9 * std::max(1.0, std::abs(k));
}

QuadResult generalized_inner_product(const FunctionalRequest& req) {
  check_surface(req.f, req.curve, "f");
  if (req.g) check_surface(*req.g, req.curve, "g");
  check_window(req.window, req.curve);
  check_closed_frequency(req.nu, req.curve, req.window);

  const double lambda_g = req.g ? req.g->eigenfrequency() : 0.0;
  const Span span = integration_span(req.curve, req.window);
  const double hint =
      (req.f.eigenfrequency() + lambda_g + std::abs(req.nu)) * span.length / kTwoPi;
  const Integrand wave = plane_wave(req.nu);
  return adaptive_periodic_shared(restriction(req.f, req.g, req.curve, req.window),
                                  std::span<const Integrand>(&wave, 1), span.length, hint,
                                  req.tol, span.origin)
      .front();
}

std::vector<SpectrumEntry> fourier_spectrum(const Eigenfunction& f, const CurveSpec& curve,
                                            std::span<const double> nus,
                                            std::optional<Window> window, double tol) {
  check_surface(f, curve, "f");
  check_window(window, curve);
  std::vector<SpectrumEntry> out;
  if (nus.empty()) return out;
  for (double nu : nus) check_closed_frequency(nu, curve, window);

  // Members converge independently, so grouping by starting level keeps each
  // entry equal to the single-frequency call.
  const Span span = integration_span(curve, window);
  const Integrand base = restriction(f, std::nullopt, curve, window);
  out.resize(nus.size());
  std::vector<std::pair<long, std::size_t>> order;
  for (std::size_t k = 0; k < nus.size(); ++k) {
    const double hint = (f.eigenfrequency() + std::abs(nus[k])) * span.length / kTwoPi;
    order.emplace_back(initial_nodes(hint), k);
  }
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::vector<Integrand> waves;
    while (j < order.size() && order[j].first == order[i].first) {
      waves.push_back(plane_wave(nus[order[j].second]));
      ++j;
    }
    const double hint = (f.eigenfrequency() + std::abs(nus[order[i].second])) * span.length / kTwoPi;
    const auto results =
        adaptive_periodic_shared(base, waves, span.length, hint, tol, span.origin);
    for (std::size_t k = i; k < j; ++k) {
      out[order[k].second] = {nus[order[k].second], results[k - i]};
    }
    i = j;
  }
  return out;
}

double distance_rate(const CurveSpec& curve, const SpherePoint& target, double s) {
  const Vec3 p = curve_ambient(curve, s);
  const Vec3 v = curve_velocity(curve, s);
  const Vec3 x = target.ambient();
  const double d = sphere_distance(p, x);
  return -(v[0] * x[0] + v[1] * x[1] + v[2] * x[2]) / std::sin(d);
}

QuadResult kernel_probe(double lambda, double nu, const CurveSpec& curve, const SpherePoint& target,
                        Window window, double tol, const ProbeAnnulus& annulus) {
  if (curve.surface() != Surface::Sphere) {
    throw DomainError("kernel_probe: only sphere curves carry an explicit distance");
  }
  check_window(window, curve);
  const Vec3 x = target.ambient();
  const double d0 = sphere_distance(curve_ambient(curve, window.center), x);
  if (d0 < annulus.inner * annulus.scale || d0 > annulus.outer * annulus.scale) {
    throw PreconditionError("kernel_probe: target at distance " + std::to_string(d0) +
                            " outside [" + std::to_string(annulus.inner * annulus.scale) + ", " +
                            std::to_string(annulus.outer * annulus.scale) + "]");
  }
  const Integrand amplitude = [curve, x, lambda, window](double s) -> std::complex<double> {
    const double chi = bump_window(s, window.center, window.halfwidth);
    if (chi == 0.0) return {0.0, 0.0};
    return std::polar(chi, lambda * sphere_distance(curve_ambient(curve, s), x));
  };
  const Integrand wave = plane_wave(nu);
  const double length = 2.0 * window.halfwidth;
  const double hint = (std::abs(lambda) + std::abs(nu)) * length / kTwoPi;
  return adaptive_periodic_shared(amplitude, std::span<const Integrand>(&wave, 1), length, hint,
                                  tol, window.center - window.halfwidth)
      .front();
}

std::optional<double> kernel_stationary_point(double lambda, double nu, const CurveSpec& curve,
                                              const SpherePoint& target, Window window) {
  auto phase_rate = [&](double s) { return lambda * distance_rate(curve, target, s) - nu; };
  constexpr int kCells = 64;
  const double a = window.center - window.halfwidth;
  const double step = 2.0 * window.halfwidth / kCells;
  for (int i = 0; i < kCells; ++i) {
    double lo = a + i * step;
    double hi = lo + step;
    double f_lo = phase_rate(lo);
    const double f_hi = phase_rate(hi);
    if (f_lo == 0.0) return lo;
    if ((f_lo < 0.0) == (f_hi < 0.0)) continue;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = phase_rate(mid);
      if ((f_mid < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
  return std::nullopt;
}

}  // namespace eigres
