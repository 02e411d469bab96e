#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "eigres/special.hpp"

namespace eigres {

enum class Surface { Sphere, Torus };

const char* surface_name(Surface s);

using Vec3 = std::array<double, 3>;

/// Point on the unit sphere: colatitude theta in [0, pi], longitude phi in [0, 2 pi).
struct SpherePoint {
  double theta = 0.0;
  double phi = 0.0;

  SpherePoint() = default;
  /// Normalizes phi modulo 2 pi; theta must lie in [0, pi].
  SpherePoint(double theta, double phi);

  static SpherePoint from_ambient(const Vec3& v);
  Vec3 ambient() const;
};

/// Point on the flat torus R^2 / (2 pi Z)^2.
struct TorusPoint {
  double x = 0.0;
  double y = 0.0;

  TorusPoint() = default;
  TorusPoint(double x, double y);
};

using SurfacePoint = std::variant<SpherePoint, TorusPoint>;

Surface surface_of(const SurfacePoint& p);

struct SphereHarmonic {
  HarmonicIndex index;
};

struct TorusMode {
  int m = 0;
  int n = 0;
  std::complex<double> coefficient{1.0, 0.0};
};

/// Torus eigenfunction sum_k c_k e^{i(m_k x + n_k y)} / (2 pi) with all
/// (m_k, n_k) on one lattice circle and sum |c_k|^2 = 1, which makes the
/// function unit-norm in L2 of the torus with area (2 pi)^2.
class TorusWave {
 public:
  /// Validates the common lattice circle and the unit coefficient norm (1e-12).
  explicit TorusWave(std::vector<TorusMode> modes);

  /// Rescales the coefficients to unit norm before validating.
  static TorusWave normalized(std::vector<TorusMode> modes);

  const std::vector<TorusMode>& modes() const { return modes_; }
  long radius_squared() const { return radius_squared_; }

 private:
  std::vector<TorusMode> modes_;
  long radius_squared_ = 0;
};

/// Laplace eigenfunction on one of the model surfaces. -Delta e = lambda^2 e.
class Eigenfunction {
 public:
  using Variant = std::variant<SphereHarmonic, TorusWave>;

  explicit Eigenfunction(SphereHarmonic h) : v_(h) {}
  explicit Eigenfunction(TorusWave w) : v_(std::move(w)) {}

  static Eigenfunction sphere(int degree, int order) {
    return Eigenfunction(SphereHarmonic{HarmonicIndex(degree, order)});
  }

  Surface surface() const;
  /// sqrt(l(l+1)) on the sphere, sqrt(m^2+n^2) on the torus.
  double eigenfrequency() const;
  const Variant& variant() const { return v_; }

 private:
  Variant v_;
};

/// Throws DomainError when the point lives on the other surface.
std::complex<double> eval_eigenfunction(const Eigenfunction& f, const SurfacePoint& p);

// Curves ---------------------------------------------------------------------

struct Equator {};

/// The equator rotated by `tilt` about the x-axis.
struct TiltedGreatCircle {
  double tilt = 0.0;
};

/// Closed geodesic of the torus in primitive direction (p, q), started at (offset, 0).
struct TorusGeodesic {
  int p = 1;
  int q = 0;
  double offset = 0.0;
};

/// Arc-length parametrized closed curve on a model surface.
class CurveSpec {
 public:
  using Variant = std::variant<Equator, TiltedGreatCircle, TorusGeodesic>;

  static CurveSpec equator() { return CurveSpec(Equator{}); }
  /// tilt must lie in [0, pi/2].
  static CurveSpec tilted(double tilt);
  /// Throws DomainError unless gcd(|p|, |q|) = 1.
  static CurveSpec geodesic(int p, int q, double offset = 0.0);

  Surface surface() const;
  double length() const;
  const Variant& variant() const { return v_; }

 private:
  explicit CurveSpec(Variant v) : v_(v) {}
  Variant v_;
};

/// gamma(s), s reduced modulo the curve length.
SurfacePoint curve_point(const CurveSpec& curve, double s);

/// Position and unit velocity of a sphere curve in R^3.
/// Throws DomainError for torus curves.
Vec3 curve_ambient(const CurveSpec& curve, double s);
Vec3 curve_velocity(const CurveSpec& curve, double s);

/// Great-circle distance on the unit sphere.
double sphere_distance(const Vec3& a, const Vec3& b);

// Lattice points -------------------------------------------------------------

/// All (m, n) with m^2 + n^2 = N in lexicographic order, built from the
/// Gaussian-prime factorization of N (Miller-Rabin + Pollard rho).
std::vector<std::pair<std::int64_t, std::int64_t>> sum_two_squares(std::uint64_t N);

}  // namespace eigres
