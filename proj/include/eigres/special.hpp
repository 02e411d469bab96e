#pragma once

// Overflow-free special functions for spherical harmonics at high degree.
//
// Everything here works in the log domain where magnitudes can leave the
// double range: (2l-1)!! alone overflows past l ~ 150.

namespace eigres {

/// Degree/order pair (l, m) of a spherical harmonic, |m| <= l.
struct HarmonicIndex {
  int degree = 0;
  int order = 0;

  HarmonicIndex() = default;
  /// Throws DomainError unless |order| <= degree.
  HarmonicIndex(int degree, int order);

  friend bool operator==(const HarmonicIndex&, const HarmonicIndex&) = default;
};

/// ln(n!!) for n >= 0. Exact products below n = 21, log-gamma above.
double log_double_factorial(long n);

/// Log of the orthonormalization factor sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!), m >= 0.
double log_legendre_norm(int degree, int order);

/// Fully normalized associated Legendre function with Condon-Shortley phase,
///   Pbar_l^m(x) = (-1)^m sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) P_l^m(x),
/// so that Pbar_l^m(cos theta) e^{i m phi} is L2(S^2)-orthonormal.
/// Negative orders use Pbar_l^{-m} = (-1)^m Pbar_l^m.
///
/// The diagonal seed Pbar_m^m is built in the log domain and the upward
/// three-term recurrence in l carries a separate exponent, so nothing
/// overflows or underflows spuriously up to l ~ 10^4.
double normalized_assoc_legendre(HarmonicIndex idx, double x);

/// ln|P_l^m(0)| = ln((l+m-1)!!/(l-m)!!) for l+m even; -inf for l+m odd.
double log_pmn_zero_abs(int degree, int order);

/// |P_l^m(0)|; exactly 0 when l+m is odd. Overflows to +inf for very large l.
double pmn_zero_abs(int degree, int order);

/// ln of the surrogate origin value (l-1)!!/l!! * (l+m)!!/(l-m)!! for even
/// l and m. It overestimates |P_l^m(0)| by prod_{k=1}^{m/2} (l+2k)/(l+2k-1),
/// a factor in [1, sqrt(2)). Kept apart from the exact value on purpose.
double log_pmn_zero_surrogate(int degree, int order);

/// exp of log_pmn_zero_surrogate.
double pmn_zero_surrogate(int degree, int order);

}  // namespace eigres
