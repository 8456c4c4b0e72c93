#pragma once

namespace fracvisco::special {

/// Gamma function on the real line via a Lanczos approximation (g = 7,
/// n = 9) with the reflection formula below 1/2. Relative accuracy is
/// better than 1e-13 on [-170, 170] away from the poles.
///
/// Throws Error{GammaOutOfRange} at the poles (non-positive integers) and
/// Error{Overflow} when the result exceeds the double range.
double gamma_function(double x);

/// log|Gamma(x)|; `sign` (if non-null) receives the sign of Gamma(x).
/// Defined for every x that is not a non-positive integer.
double log_abs_gamma(double x, int* sign = nullptr);

/// 1/Gamma(x). Entire: returns exactly 0 at the poles of Gamma and
/// underflows gracefully for large positive x.
double reciprocal_gamma(double x);

/// True when x is a non-positive integer (a pole of Gamma).
bool is_gamma_pole(double x);

}  // namespace fracvisco::special
