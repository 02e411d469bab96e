#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace eigres {

using Integrand = std::function<std::complex<double>(double)>;

struct QuadResult {
  std::complex<double> value{0.0, 0.0};
  /// |value_N - value_{N/2}| at the final doubling.
  double error_estimate = 0.0;
  long nodes_used = 0;
};

constexpr double kDefaultTol = 1e-10;
constexpr long kMaxNodes = 1L << 24;

/// (L/N) sum_{j<N} f(origin + j L / N). Exact for trigonometric polynomials
/// of degree < N/2 in the variable 2 pi s / L.
std::complex<double> periodic_trapezoid(const Integrand& f, double period, long nodes,
                                        double origin = 0.0);

/// Starting node count for a frequency hint: max(64, next power of two >= 8 hint).
long initial_nodes(double frequency_hint);

/// Doubles the trapezoid rule from initial_nodes(frequency_hint) until
/// |T_N - T_{N/2}| <= tol max(1, |T_N|). Throws ConvergenceError past kMaxNodes.
QuadResult adaptive_periodic(const Integrand& f, double period, double frequency_hint,
                             double tol = kDefaultTol, double origin = 0.0);

/// Same refinement for the family base(s) * modulation_k(s). `base` is sampled
/// once per node and shared; each member stops at its own convergence level,
/// so every entry is bit-identical to adaptive_periodic on that product.
std::vector<QuadResult> adaptive_periodic_shared(const Integrand& base,
                                                 std::span<const Integrand> modulations,
                                                 double period, double frequency_hint,
                                                 double tol = kDefaultTol, double origin = 0.0);

/// C_0^infinity bump exp(1 - 1/(1 - t^2)), t = (s - center) / halfwidth; zero for |t| >= 1.
double bump_window(double s, double center, double halfwidth);

}  // namespace eigres
