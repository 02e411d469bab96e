#include "eigres/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eigres/errors.hpp"

namespace eigres {

std::complex<double> periodic_trapezoid(const Integrand& f, double period, long nodes,
                                        double origin) {
  if (nodes < 2) throw DomainError("periodic_trapezoid: need at least 2 nodes");
  std::complex<double> sum{0.0, 0.0};
  for (long j = 0; j < nodes; ++j) sum += f(origin + period * static_cast<double>(j) / nodes);
  return sum * (period / static_cast<double>(nodes));
}

long initial_nodes(double frequency_hint) {
  if (!(frequency_hint >= 0.0)) throw DomainError("frequency hint must be nonnegative");
  const double target = std::ceil(8.0 * frequency_hint);
  long n = 64;
  while (static_cast<double>(n) < target && n <= kMaxNodes) n *= 2;
  return n;
}

std::vector<QuadResult> adaptive_periodic_shared(const Integrand& base,
                                                 std::span<const Integrand> modulations,
                                                 double period, double frequency_hint,
                                                 double tol, double origin) {
  if (!(tol > 0.0)) throw DomainError("adaptive_periodic: tol must be positive");
  const std::size_t count = modulations.size();
  std::vector<QuadResult> out(count);
  if (count == 0) return out;

  long n = initial_nodes(frequency_hint);
  if (n > kMaxNodes) {
    throw ConvergenceError("adaptive_periodic: frequency hint needs more than 2^24 nodes", {}, {},
                           n);
  }

  // Level-0 sums over all n nodes.
  std::vector<std::complex<double>> value(count, {0.0, 0.0});
  for (long j = 0; j < n; ++j) {
    const double s = origin + period * static_cast<double>(j) / n;
    const std::complex<double> b = base(s);
    for (std::size_t k = 0; k < count; ++k) value[k] += b * modulations[k](s);
  }
  for (auto& v : value) v *= period / static_cast<double>(n);

  std::vector<bool> done(count, false);
  std::vector<std::complex<double>> odd(count);
  std::vector<std::complex<double>> previous = value;
  std::size_t remaining = count;
  while (remaining > 0) {
    const long n2 = 2 * n;
    if (n2 > kMaxNodes) {
      for (std::size_t k = 0; k < count; ++k) {
        if (!done[k]) {
          throw ConvergenceError("adaptive_periodic: no convergence within 2^24 nodes", value[k],
                                 previous[k], n);
        }
      }
    }
    std::fill(odd.begin(), odd.end(), std::complex<double>{0.0, 0.0});
    for (long j = 1; j < n2; j += 2) {
      const double s = origin + period * static_cast<double>(j) / n2;
      const std::complex<double> b = base(s);
      for (std::size_t k = 0; k < count; ++k) {
        if (!done[k]) odd[k] += b * modulations[k](s);
      }
    }
    for (std::size_t k = 0; k < count; ++k) {
      if (done[k]) continue;
      const std::complex<double> refined = 0.5 * value[k] + odd[k] * (period / n2);
      const double err = std::abs(refined - value[k]);
      if (err <= tol * std::max(1.0, std::abs(refined))) {
        out[k] = {refined, err, n2};
        done[k] = true;
        --remaining;
      }
      previous[k] = value[k];
      value[k] = refined;
    }
    n = n2;
  }
  return out;
}

QuadResult adaptive_periodic(const Integrand& f, double period, double frequency_hint, double tol,
                             double origin) {
  const Integrand one = [](double) { return std::complex<double>{1.0, 0.0}; };
  return adaptive_periodic_shared(f, std::span<const Integrand>(&one, 1), period, frequency_hint,
                                  tol, origin)
      .front();
}

double bump_window(double s, double center, double halfwidth) {
  if (!(halfwidth > 0.0)) throw DomainError("bump_window: halfwidth must be positive");
  const double t = (s - center) / halfwidth;
  if (std::abs(t) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / ((1.0 - t) * (1.0 + t)));
}

}  // namespace eigres
