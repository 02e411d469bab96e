#include "eigres/geometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "eigres/errors.hpp"

namespace eigres {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double v, double period) {
  double r = std::fmod(v, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double tilt_of(const CurveSpec& curve) {
  if (std::holds_alternative<TiltedGreatCircle>(curve.variant())) {
    return std::get<TiltedGreatCircle>(curve.variant()).tilt;
  }
  if (std::holds_alternative<Equator>(curve.variant())) return 0.0;
  throw DomainError("curve is not on the sphere");
}

}  // namespace

const char* surface_name(Surface s) { return s == Surface::Sphere ? "sphere" : "torus"; }

SpherePoint::SpherePoint(double theta_, double phi_) : theta(theta_), phi(wrap(phi_, kTwoPi)) {
  if (!(theta_ >= 0.0 && theta_ <= std::numbers::pi)) {
    throw DomainError("SpherePoint: colatitude outside [0, pi]");
  }
}

SpherePoint SpherePoint::from_ambient(const Vec3& v) {
  const double rho = std::hypot(v[0], v[1]);
  return SpherePoint(std::atan2(rho, v[2]), std::atan2(v[1], v[0]));
}

Vec3 SpherePoint::ambient() const {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

TorusPoint::TorusPoint(double x_, double y_) : x(wrap(x_, kTwoPi)), y(wrap(y_, kTwoPi)) {}

Surface surface_of(const SurfacePoint& p) {
  return std::holds_alternative<SpherePoint>(p) ? Surface::Sphere : Surface::Torus;
}

TorusWave::TorusWave(std::vector<TorusMode> modes) : modes_(std::move(modes)) {
  if (modes_.empty()) throw DomainError("TorusWave: no modes");
  radius_squared_ = static_cast<long>(modes_.front().m) * modes_.front().m +
                    static_cast<long>(modes_.front().n) * modes_.front().n;
  double norm2 = 0.0;
  for (const auto& mode : modes_) {
    const long r2 = static_cast<long>(mode.m) * mode.m + static_cast<long>(mode.n) * mode.n;
    if (r2 != radius_squared_) {
      throw DomainError("TorusWave: modes lie on different lattice circles (" +
                        std::to_string(radius_squared_) + " vs " + std::to_string(r2) + ")");
    }
    norm2 += std::norm(mode.coefficient);
  }
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw DomainError("TorusWave: coefficients must satisfy sum |c|^2 = 1");
  }
}

TorusWave TorusWave::normalized(std::vector<TorusMode> modes) {
  double norm2 = 0.0;
  for (const auto& mode : modes) norm2 += std::norm(mode.coefficient);
  if (!(norm2 > 0.0)) throw DomainError("TorusWave: all coefficients vanish");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& mode : modes) mode.coefficient *= scale;
  return TorusWave(std::move(modes));
}

Surface Eigenfunction::surface() const {
  return std::holds_alternative<SphereHarmonic>(v_) ? Surface::Sphere : Surface::Torus;
}

double Eigenfunction::eigenfrequency() const {
  return std::visit(Overloaded{[](const SphereHarmonic& h) {
                                 const double l = h.index.degree;
                                 return std::sqrt(l * (l + 1.0));
                               },
                               [](const TorusWave& w) {
                                 return std::sqrt(static_cast<double>(w.radius_squared()));
                               }},
                    v_);
}

std::complex<double> eval_eigenfunction(const Eigenfunction& f, const SurfacePoint& p) {
  if (f.surface() != surface_of(p)) {
    throw DomainError(std::string("eval_eigenfunction: eigenfunction lives on the ") +
                      surface_name(f.surface()) + ", point on the " +
                      surface_name(surface_of(p)));
  }
  return std::visit(
      Overloaded{[&](const SphereHarmonic& h) {
                   const auto& pt = std::get<SpherePoint>(p);
                   const double leg = normalized_assoc_legendre(h.index, std::cos(pt.theta));
                   return std::polar(leg, h.index.order * pt.phi);
                 },
                 [&](const TorusWave& w) {
                   const auto& pt = std::get<TorusPoint>(p);
                   std::complex<double> sum{0.0, 0.0};
                   for (const auto& mode : w.modes()) {
                     sum += mode.coefficient * std::polar(1.0, mode.m * pt.x + mode.n * pt.y);
                   }
                   return sum / kTwoPi;
                 }},
      f.variant());
}

CurveSpec CurveSpec::tilted(double tilt) {
  if (!(tilt >= 0.0 && tilt <= 0.5 * std::numbers::pi)) {
    throw DomainError("TiltedGreatCircle: tilt outside [0, pi/2]");
  }
  return CurveSpec(TiltedGreatCircle{tilt});
}

CurveSpec CurveSpec::geodesic(int p, int q, double offset) {
  if (std::gcd(p, q) != 1) {
    throw DomainError("TorusGeodesic: direction (" + std::to_string(p) + "," + std::to_string(q) +
                      ") is not primitive");
  }
  return CurveSpec(TorusGeodesic{p, q, offset});
}

Surface CurveSpec::surface() const {
  return std::holds_alternative<TorusGeodesic>(v_) ? Surface::Torus : Surface::Sphere;
}

double CurveSpec::length() const {
  if (const auto* g = std::get_if<TorusGeodesic>(&v_)) {
    return kTwoPi * std::hypot(static_cast<double>(g->p), static_cast<double>(g->q));
  }
  return kTwoPi;
}

SurfacePoint curve_point(const CurveSpec& curve, double s) {
  const double t = wrap(s, curve.length());
  return std::visit(
      Overloaded{[&](const Equator&) -> SurfacePoint {
                   return SpherePoint(0.5 * std::numbers::pi, t);
                 },
                 [&](const TiltedGreatCircle&) -> SurfacePoint {
                   return SpherePoint::from_ambient(curve_ambient(curve, t));
                 },
                 [&](const TorusGeodesic& g) -> SurfacePoint {
                   const double rho = std::hypot(static_cast<double>(g.p), static_cast<double>(g.q));
                   return TorusPoint(g.offset + t * g.p / rho, t * g.q / rho);
                 }},
      curve.variant());
}

Vec3 curve_ambient(const CurveSpec& curve, double s) {
  const double a = tilt_of(curve);
  const double ss = std::sin(s);
  return {std::cos(s), std::cos(a) * ss, std::sin(a) * ss};
}

Vec3 curve_velocity(const CurveSpec& curve, double s) {
  const double a = tilt_of(curve);
  const double cs = std::cos(s);
  return {-std::sin(s), std::cos(a) * cs, std::sin(a) * cs};
}

double sphere_distance(const Vec3& a, const Vec3& b) {
  // atan2 form stays accurate for nearly coincident and nearly antipodal points.
  const Vec3 cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                   a[0] * b[1] - a[1] * b[0]};
  const double sin_d = std::sqrt(cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]);
  const double cos_d = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  return std::atan2(sin_d, cos_d);
}

}  // namespace eigres
