#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eigres/geometry.hpp"
#include "eigres/quadrature.hpp"

namespace eigres {

/// Smooth cutoff chi(s) = bump_window(s, center, halfwidth).
struct Window {
  double center = 0.0;
  double halfwidth = 0.5;
};

/// Integral of f(gamma(s)) conj(g(gamma(s))) e^{-i nu s} [chi(s)] ds.
struct FunctionalRequest {
  Eigenfunction f;
  /// std::nullopt stands for the constant function 1 (generalized periods).
  std::optional<Eigenfunction> g;
  CurveSpec curve;
  double nu = 0.0;
  std::optional<Window> window;
  double tol = kDefaultTol;
};

/// True when e^{-i nu s} is periodic on the curve, i.e. nu L / (2 pi) is an integer.
bool is_dual_lattice_frequency(double nu, const CurveSpec& curve);

/// Over [0, L] for closed curves (nu must be dual-lattice) or over the window
/// support otherwise. Frequency hint (lambda_f + lambda_g + |nu|) * length / (2 pi).
QuadResult generalized_inner_product(const FunctionalRequest& req);

struct SpectrumEntry {
  double nu = 0.0;
  QuadResult result;
};

/// Generalized periods for every nu, in input order. The restriction of f is
/// sampled once and shared across frequencies; each entry is identical to the
/// corresponding generalized_inner_product call with g = 1.
std::vector<SpectrumEntry> fourier_spectrum(const Eigenfunction& f, const CurveSpec& curve,
                                            std::span<const double> nus,
                                            std::optional<Window> window = std::nullopt,
                                            double tol = kDefaultTol);

/// Admissible distances [inner * scale, outer * scale] between the window
/// center on the curve and the probe target.
struct ProbeAnnulus {
  double scale = 0.5;
  double inner = 0.9;
  double outer = 1.1;
};

/// K = int e^{i (lambda d(gamma(s), x) - nu s)} chi(s) ds with the exact
/// great-circle distance d. Sphere curves only.
/// Throws PreconditionError when d(gamma(center), x) leaves the annulus.
QuadResult kernel_probe(double lambda, double nu, const CurveSpec& curve, const SpherePoint& target,
                        Window window = {0.0, 0.25}, double tol = kDefaultTol,
                        const ProbeAnnulus& annulus = {});

/// d/ds d(gamma(s), x) = cos theta_x(s), where theta_x is the angle between
/// gamma'(s) and the direction pointing away from x along the connecting geodesic.
double distance_rate(const CurveSpec& curve, const SpherePoint& target, double s);

/// Zero of lambda cos theta_x(s) - nu inside the window, by bisection;
/// std::nullopt when the phase has no stationary point there.
std::optional<double> kernel_stationary_point(double lambda, double nu, const CurveSpec& curve,
                                              const SpherePoint& target, Window window);

}  // namespace eigres
