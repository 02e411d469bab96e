#include "eigres/sharpness.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "eigres/errors.hpp"
#include "eigres/special.hpp"

namespace eigres {

namespace {

void require_even_pair(int degree, int order, const char* op) {
  if (order < 0 || order > degree) {
    throw DomainError(std::string(op) + ": need 0 <= m <= l");
  }
  if (degree % 2 != 0 || order % 2 != 0) {
    throw DomainError(std::string(op) + ": l and m must both be even, got l=" +
                      std::to_string(degree) + ", m=" + std::to_string(order));
  }
}

long double log_factorial_ld(long n) { return std::lgamma(static_cast<long double>(n) + 1.0L); }

long double log_double_factorial_ld(long n) {
  if (n <= 0) return 0.0L;
  if (n % 2 == 0) {
    const long double k = n / 2;
    return k * std::numbers::ln2_v<long double> + log_factorial_ld(n / 2);
  }
  const long double k = (n + 1) / 2;
  return k * std::numbers::ln2_v<long double> + std::lgamma(k + 0.5L) -
         0.5L * std::log(std::numbers::pi_v<long double>);
}

double log_equator_value(int degree, int order) {
  return log_legendre_norm(degree, order) + log_pmn_zero_abs(degree, order);
}

}  // namespace

double log_equator_mixed_inner_product_exact(int degree, int order) {
  require_even_pair(degree, order, "equator_mixed_inner_product_exact");
  return std::log(2.0 * std::numbers::pi) + log_equator_value(degree, order) +
         log_equator_value(order, order);
}

double equator_mixed_inner_product_exact(int degree, int order) {
  return std::exp(log_equator_mixed_inner_product_exact(degree, order));
}

double equator_mixed_inner_product_surrogate(int degree, int order) {
  require_even_pair(degree, order, "equator_mixed_inner_product_surrogate");
  return std::exp(std::log(2.0 * std::numbers::pi) + log_legendre_norm(degree, order) +
                  log_pmn_zero_surrogate(degree, order) + log_equator_value(order, order));
}

double telescoping_product(int degree, int order) {
  require_even_pair(degree, order, "telescoping_product");
  double prod = 1.0;
  for (int k = 1; k <= order; ++k) {
    const double top = degree - order + 2 * k;
    prod *= top / (top - 1.0);
  }
  return prod;
}

double telescoping_product_factorial(int degree, int order) {
  require_even_pair(degree, order, "telescoping_product_factorial");
  const long lo = degree - order;
  const long hi = degree + order;
  const long double log_value = log_factorial_ld(lo) - log_factorial_ld(hi) +
                                2.0L * (log_double_factorial_ld(hi) - log_double_factorial_ld(lo));
  return static_cast<double>(std::exp(log_value));
}

TelescopingBound telescoping_bound_check(int degree, int order, double c) {
  require_even_pair(degree, order, "telescoping_bound_check");
  if (!(c > 0.0 && c < 1.0)) throw DomainError("telescoping_bound_check: c outside (0, 1)");
  if (!(order < c * degree)) {
    throw PreconditionError("telescoping_bound_check: need m < c l");
  }
  TelescopingBound b;
  b.value = telescoping_product(degree, order);
  b.upper = static_cast<double>(degree + order) / (degree - order + 1);
  b.cap = 2.0 / (1.0 - c);
  if (order == 0) {
    b.holds = b.value == 1.0 && b.value < b.cap;
  } else {
    b.holds = 1.0 < b.value && b.value < b.upper && b.upper < b.cap;
  }
  return b;
}

SharpnessRecord sharpness_record(int degree, int order) {
  SharpnessRecord r;
  r.degree = degree;
  r.order = order;
  r.exact_value = equator_mixed_inner_product_exact(degree, order);
  r.surrogate_value = equator_mixed_inner_product_surrogate(degree, order);
  r.telescoping = telescoping_product(degree, order);
  r.ratio_bound = order == degree ? std::numeric_limits<double>::infinity()
                                  : 2.0 / (1.0 - static_cast<double>(order) / degree);
  return r;
}

}  // namespace eigres
