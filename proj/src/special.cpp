#include "eigres/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "eigres/errors.hpp"

namespace eigres {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLnPi = 1.1447298858494002;  // ln(pi)

// ln(n!!) with the convention (-1)!! = 1.
double ldf(long n) { return n == -1 ? 0.0 : log_double_factorial(n); }

void require_order_range(int degree, int order, const char* op) {
  if (order < 0 || order > degree) {
    throw DomainError(std::string(op) + ": need 0 <= m <= l, got l=" + std::to_string(degree) +
                      ", m=" + std::to_string(order));
  }
}

}  // namespace

HarmonicIndex::HarmonicIndex(int degree_, int order_) : degree(degree_), order(order_) {
  if (degree_ < 0 || std::abs(order_) > degree_) {
    throw DomainError("HarmonicIndex: need |m| <= l, got l=" + std::to_string(degree_) +
                      ", m=" + std::to_string(order_));
  }
}

double log_double_factorial(long n) {
  if (n < 0) throw DomainError("log_double_factorial: negative argument " + std::to_string(n));
  if (n <= 20) {
    double prod = 1.0;  // 20!! = 3715891200, exact in double
    for (long k = n; k > 1; k -= 2) prod *= static_cast<double>(k);
    return std::log(prod);
  }
  if (n % 2 == 0) {
    // (2k)!! = 2^k k!
    const double k = static_cast<double>(n / 2);
    return k * kLn2 + std::lgamma(k + 1.0);
  }
  // (2k-1)!! = 2^k Gamma(k + 1/2) / sqrt(pi)
  const double k = static_cast<double>((n + 1) / 2);
  return k * kLn2 + std::lgamma(k + 0.5) - 0.5 * kLnPi;
}

double log_legendre_norm(int degree, int order) {
  require_order_range(degree, order, "log_legendre_norm");
  const double l = degree;
  const double m = order;
  return 0.5 * (std::log((2.0 * l + 1.0) / (4.0 * std::numbers::pi)) + std::lgamma(l - m + 1.0) -
                std::lgamma(l + m + 1.0));
}

double normalized_assoc_legendre(HarmonicIndex idx, double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError("normalized_assoc_legendre: x outside [-1, 1]");
  }
  const int l = idx.degree;
  const int m = std::abs(idx.order);
  // Pbar_l^{-m} = (-1)^m Pbar_l^m combined with the Condon-Shortley (-1)^m.
  const double cs_sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double order_sign = (idx.order < 0) ? cs_sign : 1.0;

  const double one_minus_x2 = (1.0 - x) * (1.0 + x);
  if (m > 0 && one_minus_x2 == 0.0) return 0.0;

  // |Pbar_m^m(x)| = sqrt((2m+1)/(4 pi) (2m-1)!!/(2m)!!) (1-x^2)^{m/2}
  double log_scale = 0.5 * std::log((2.0 * m + 1.0) / (4.0 * std::numbers::pi));
  if (m > 0) {
    log_scale += 0.5 * (ldf(2L * m - 1) - ldf(2L * m)) + 0.5 * m * std::log(one_minus_x2);
  }

  double p_prev = 0.0;
  double p = cs_sign * order_sign;
  if (l > m) {
    p_prev = p;
    p = x * std::sqrt(2.0 * m + 3.0) * p_prev;
    constexpr double kBig = 1e250;
    const double log_big = std::log(kBig);
    const double mm = static_cast<double>(m) * m;
    for (int k = m + 2; k <= l; ++k) {
      const double kk = static_cast<double>(k) * k;
      const double km1 = static_cast<double>(k - 1);
      const double a = std::sqrt((4.0 * kk - 1.0) / (kk - mm));
      const double b = std::sqrt((km1 * km1 - mm) / (4.0 * km1 * km1 - 1.0));
      const double next = a * (x * p - b * p_prev);
      p_prev = p;
      p = next;
      if (std::abs(p) > kBig) {
        p /= kBig;
        p_prev /= kBig;
        log_scale += log_big;
      }
    }
  }
  if (p == 0.0) return 0.0;
  return std::copysign(std::exp(std::log(std::abs(p)) + log_scale), p);
}

double log_pmn_zero_abs(int degree, int order) {
  require_order_range(degree, order, "pmn_zero_abs");
  if ((degree + order) % 2 != 0) return -std::numeric_limits<double>::infinity();
  return ldf(static_cast<long>(degree) + order - 1) - ldf(static_cast<long>(degree) - order);
}

double pmn_zero_abs(int degree, int order) {
  if ((degree + order) % 2 != 0) {
    require_order_range(degree, order, "pmn_zero_abs");
    return 0.0;
  }
  return std::exp(log_pmn_zero_abs(degree, order));
}

double log_pmn_zero_surrogate(int degree, int order) {
  require_order_range(degree, order, "pmn_zero_surrogate");
  if (degree % 2 != 0 || order % 2 != 0) {
    throw DomainError("pmn_zero_surrogate: l and m must both be even");
  }
  const long l = degree;
  const long m = order;
  // Grouped so that m = 0 reproduces log_pmn_zero_abs bit for bit.
  return (ldf(l - 1) - ldf(l)) + (ldf(l + m) - ldf(l - m));
}

double pmn_zero_surrogate(int degree, int order) {
  return std::exp(log_pmn_zero_surrogate(degree, order));
}

}  // namespace eigres
