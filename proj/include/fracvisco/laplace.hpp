#pragma once

/**
 * @file laplace.hpp
 * @brief Numerical Laplace transforms used to cross-check transform pairs.
 *
 * Forward: f~(s) = int_0^inf e^{-st} f(t) dt for a SampledSignal, assembled
 * from an analytic origin piece, piecewise product quadrature over the grid,
 * an analytic or semi-analytic tail, and the impulse coefficient.
 *
 * Inverse: fixed Talbot contour (Abate-Valko) in complex double arithmetic,
 * with Gaver-Stehfest (16 terms, long double) as an independent check.
 */

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "fracvisco/errors.hpp"
#include "fracvisco/signal.hpp"

namespace fracvisco::laplace {

using cplx = std::complex<double>;

/// An image f~(s), analytic for Re s > abscissa.
struct SDomainFunction {
  std::function<cplx(cplx)> eval;
  double abscissa = 0.0;
};

enum class TailKind {
  power_fit,    ///< algebraic decay fitted on the last decade of samples
  exponential,  ///< f(t) ~ f(T) e^{-rate (t - T)}
  power,        ///< f(t) ~ f(T) (t / T)^{-exponent}
  none,         ///< signal is zero beyond the grid
};

struct TailModel {
  TailKind kind = TailKind::power_fit;
  double rate = 0.0;      ///< for exponential
  double exponent = 0.0;  ///< for power
};

struct ForwardOptions {
  TailModel tail;
  /// GridTooCoarse when the quadrature error estimate exceeds
  /// tolerance * max(1, |f~(s)|).
  double tolerance = 1e-6;
};

struct ForwardResult {
  cplx value;
  double est_abs_error = 0.0;
};

/// f~(s) for Re s > 0. Throws InsufficientTailCoverage, GridTooCoarse,
/// OriginTooSingular (origin exponent <= -1) or InvalidSignal.
ForwardResult laplace_forward_detailed(const SampledSignal& f, cplx s,
                                       const ForwardOptions& opt = {});

inline cplx laplace_forward(const SampledSignal& f, cplx s, const ForwardOptions& opt = {}) {
  return laplace_forward_detailed(f, s, opt).value;
}

enum class InversionMethod { talbot, gaver_stehfest, both };

struct InversionResult {
  SampledSignal signal;
  /// Filled for method = both: largest relative difference between the two
  /// methods, and DisagreementWarning if it exceeds 1e-6.
  double max_rel_disagreement = 0.0;
  std::vector<ErrorKind> warnings;
};

/// f(t) on the given positive grid. Throws ContourEvaluationFailure when the
/// image returns a non-finite value on the contour.
InversionResult laplace_invert(const SDomainFunction& F, const std::vector<double>& times,
                               InversionMethod method = InversionMethod::talbot);

double invert_talbot(const SDomainFunction& F, double t, int nodes = 32);
double invert_gaver_stehfest(const SDomainFunction& F, double t, int terms = 16);

/// P(s)/Q(s) with P(s) = sum_k p_k s^{e_k}, Q(s) = sum_k q_k s^{f_k}. Without
/// explicit exponents, coefficient k multiplies s^k. Throws PoleHit when Q
/// vanishes at s (relative to the size of its terms).
cplx rational_image(const std::vector<double>& p, const std::vector<double>& q, cplx s);
cplx rational_image(const std::vector<double>& p, const std::vector<double>& p_exponents,
                    const std::vector<double>& q, const std::vector<double>& q_exponents, cplx s);

}  // namespace fracvisco::laplace
