#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eigres/functionals.hpp"
#include "eigres/geometry.hpp"

namespace eigres {

using Cell = std::variant<long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Ordinary least squares of ln y on ln x.
struct PowerLawFit {
  double exponent = 0.0;
  double log_intercept = 0.0;
  double r_squared = 0.0;
  std::vector<double> residuals;
};

/// Needs >= 3 points with x > 0 and y >= 1e-300; throws DomainError otherwise.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

enum class ExperimentId { E1, E2, E3, E4, E5, E6 };

std::string to_string(ExperimentId id);
/// Accepts "E1".."E6" (case-insensitive); throws DomainError otherwise.
ExperimentId parse_experiment_id(const std::string& text);

struct ExperimentConfig {
  ExperimentId id = ExperimentId::E1;
  int grid_min = 64;  ///< first power of two of the degree (or lambda) grid
  int grid_max = 2048;
  double c = 0.5;
  CurveSpec curve = CurveSpec::equator();
  std::optional<Window> window;
  double tol = kDefaultTol;
  std::uint64_t seed = 20240601;
  double nu_step = 0.5;                ///< spacing of the nu scan (E3, E4)
  std::vector<TorusMode> torus_modes;  ///< E6 eigenfunction
};

/// Defaults per experiment (grids, c, curve, window) as used by the CLI.
ExperimentConfig default_config(ExperimentId id);

/// grid_min, 2 grid_min, ..., <= grid_max. Throws DomainError unless
/// grid_min is a power of two and grid_min < grid_max.
std::vector<int> degree_grid(const ExperimentConfig& config);

/// One named pass/fail gate of an experiment, with its pinned tolerance in `detail`.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentResult {
  ExperimentId id = ExperimentId::E1;
  Table table;
  std::optional<PowerLawFit> fit;
  std::vector<Check> checks;
  /// Extra recorded parameters (e.g. the seeded probe target of E5).
  std::vector<std::pair<std::string, std::string>> notes;

  bool passed() const;
};

/// Raised when a quadrature fails mid-sweep; carries the rows computed so far.
class ExperimentError : public std::runtime_error {
 public:
  ExperimentError(const std::string& what, ExperimentResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const ExperimentResult& partial() const { return partial_; }

 private:
  ExperimentResult partial_;
};

/// E1 mixed inner product exponent, E2 diagonal saturation, E3 bounded
/// windowed periods, E4 rapid decay, E5 stationary-phase kernel, E6 torus periods.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct ProbeTarget {
  SpherePoint point;
  double stationary_s = 0.0;  ///< where cos theta_x = c by construction
  double distance = 0.0;      ///< from gamma(stationary_s)
};

/// Seeded probe point with cos theta_x(s0) = c at some s0 near the window
/// center and d(gamma(center), x) inside the default annulus.
ProbeTarget draw_probe_target(const ExperimentConfig& config);

}  // namespace eigres
