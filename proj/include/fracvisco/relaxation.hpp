#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "fracvisco/laplace.hpp"
#include "fracvisco/signal.hpp"

namespace fracvisco::relax {

/// Which fractional generalisation of du/dt = -u is being solved.
enum class RelaxationKind {
  caputo,   ///< Caputo derivative, u(0+) = 1
  rl,       ///< Riemann-Liouville derivative, J^{1-mu} u -> 1 at the origin
  renewal,  ///< du/dt = -D^{1-mu} u, u(0+) = 1
  hilfer,   ///< Hilfer derivative of type nu
};

struct RelaxationProblem {
  RelaxationKind kind = RelaxationKind::caputo;
  double mu = 1.0;
  std::optional<double> nu;  ///< Hilfer type, required for kind == hilfer
  double rate = 1.0;         ///< lambda in D u = -lambda u

  /// Throws OrderOutOfRange unless 0 < mu <= 1, nu in [0, 1] is set exactly
  /// for Hilfer problems, and rate > 0.
  void validate() const;
};

/// Closed-form solution on the given positive grid. The R-L and Hilfer
/// solutions are singular at the origin; their power-law exponent is recorded
/// in origin_exponent.
SampledSignal solve(const RelaxationProblem& problem, const std::vector<double>& times);

/// Single-point evaluation of the solution.
double solution_at(const RelaxationProblem& problem, double t);

/// Power of t governing the solution near the origin.
double origin_exponent(const RelaxationProblem& problem);

std::complex<double> laplace_image(const RelaxationProblem& problem, std::complex<double> s);

/// The image as an inversion handle (abscissa 0).
laplace::SDomainFunction image_function(const RelaxationProblem& problem);

}  // namespace fracvisco::relax
