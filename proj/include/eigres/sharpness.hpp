#pragma once

// Closed forms for harmonics restricted to the equator of S^2.
//
// On the equator Y_l^m = Pbar_l^m(0) e^{i m phi}, so for even l and m
//   |<Y_l^m, Y_m^m>_equator| = 2 pi |Pbar_l^m(0)| |Pbar_m^m(0)|,
// which grows like m^{1/4} along m = c l. The telescoping product
//   prod_{k=1}^{m} (l-m+2k)/(l-m+2k-1) = (l-m)!/(l+m)! [(l+m)!!/(l-m)!!]^2
// is the factor separating that value from the m^{1/4} of Y_m^m alone.

namespace eigres {

/// ln |<Y_l^m, Y_m^m>| over the equator; l, m even with 0 <= m <= l.
double log_equator_mixed_inner_product_exact(int degree, int order);

/// exp of the log form. Finite up to l ~ 10^4.
double equator_mixed_inner_product_exact(int degree, int order);

/// Same expression with pmn_zero_surrogate in place of |P_l^m(0)|.
double equator_mixed_inner_product_surrogate(int degree, int order);

/// Direct product prod_{k=1}^{m} (l-m+2k)/(l-m+2k-1); l, m even.
double telescoping_product(int degree, int order);

/// (l-m)!/(l+m)! [(l+m)!!/(l-m)!!]^2 evaluated with extended-precision log-gamma.
double telescoping_product_factorial(int degree, int order);

struct TelescopingBound {
  double value = 1.0;
  double upper = 0.0;  ///< (l+m)/(l-m+1)
  double cap = 0.0;    ///< 2/(1-c)
  bool holds = false;
};

/// Checks 1 < value < upper < cap for m >= 2. For m = 0 the product is empty
/// and only value == 1 < cap is checked. Throws PreconditionError unless m < c l.
TelescopingBound telescoping_bound_check(int degree, int order, double c);

struct SharpnessRecord {
  int degree = 0;
  int order = 0;
  double exact_value = 0.0;
  double surrogate_value = 0.0;
  double telescoping = 1.0;
  double ratio_bound = 0.0;  ///< 2/(1 - m/l); +inf when m = l
};

SharpnessRecord sharpness_record(int degree, int order);

}  // namespace eigres
