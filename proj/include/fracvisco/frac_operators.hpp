#pragma once

/**
 * @file frac_operators.hpp
 * @brief Riemann-Liouville integral and the R-L, Caputo and Hilfer
 *        derivatives acting on sampled signals.
 *
 * Signals are treated as t^p g(t) with g piecewise linear between the grid
 * points (extended linearly down to t = 0). The fractional integral is then
 * evaluated exactly by product integration against the kernel
 * (t - tau)^{alpha - 1}, so results are exact for such signals and second
 * order accurate in the grid spacing otherwise. Integer-order derivatives use
 * three-point differences on the non-uniform grid (one-sided at the ends)
 * combined with the product rule for the t^p factor.
 */

#include <optional>
#include <vector>

#include "fracvisco/laplace.hpp"
#include "fracvisco/signal.hpp"

namespace fracvisco::ops {

struct FractionalOrder {
  double mu = 1.0;
  int m = 1;  ///< m - 1 < mu <= m
  std::optional<double> hilfer_type;

  /// Throws NonPositiveOrder for mu <= 0.
  static FractionalOrder of(double mu);
  /// For 0 < mu < 1 and nu in [0, 1]; OrderOutOfRange otherwise.
  static FractionalOrder hilfer(double mu, double nu);

  bool is_integer() const;
};

/// f^{(k)}(0+) for k = 0 .. m-1.
struct InitialData {
  std::vector<double> derivs_at_zero;
};

/// J^alpha f on the grid of f. alpha = 0 returns f unchanged.
/// NonNegativeOrderViolation for alpha < 0, OriginTooSingular when the
/// origin exponent is <= -1.
SampledSignal frac_integral(const SampledSignal& f, double alpha);

/// Ordinary first derivative by finite differences.
SampledSignal derivative(const SampledSignal& f);

SampledSignal rl_derivative(const SampledSignal& f, const FractionalOrder& order);

/// J^{m-mu} D^m f. The initial data are checked (MissingInitialData unless
/// exactly m finite values are given) but the derivative itself needs only f.
SampledSignal caputo_derivative(const SampledSignal& f, const FractionalOrder& order,
                                const InitialData& init);

/// sum_k f^{(k)}(0+) t^{k-mu} / Gamma(k - mu + 1), the amount by which the
/// R-L derivative exceeds the Caputo one. IntegerOrder for integer mu.
double rl_caputo_gap(const InitialData& init, const FractionalOrder& order, double t);

/// J^{nu(1-mu)} D J^{(1-nu)(1-mu)} f for 0 < mu < 1, 0 <= nu <= 1.
SampledSignal hilfer_derivative(const SampledSignal& f, double mu, double nu);

enum class PowerRuleKind { integral, derivative };

/// Image of t^gamma under J^order or D^order, evaluated at t.
double power_law_rule(double gamma, double order, double t, PowerRuleKind kind);

struct LaplaceRuleCheck {
  double caputo_lhs = 0.0;
  double caputo_rhs = 0.0;
  double rl_lhs = 0.0;
  double rl_rhs = 0.0;
};

/// Both sides of the Laplace rules for the Caputo derivative (with initial
/// data) and the R-L derivative (simplified form) at real s > 0. Every
/// transform is computed numerically from the samples.
LaplaceRuleCheck laplace_rule_check(const SampledSignal& f, const FractionalOrder& order,
                                    const InitialData& init, double s,
                                    const laplace::ForwardOptions& opt = {});

}  // namespace fracvisco::ops
