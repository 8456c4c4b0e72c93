#pragma once

/**
 * @file mittag_leffler.hpp
 * @brief One- and two-parameter Mittag-Leffler functions on the real axis.
 *
 * E_{mu,nu}(z) = sum_k z^k / Gamma(mu k + nu). The evaluator picks one of
 * several regimes per call and reports which one it used, together with an
 * estimate of the absolute error:
 *
 *  - exact_reduction: closed forms (z = 0, mu = 1 with nu in {1, 2},
 *    mu = 2 with nu in {1, 2});
 *  - series: the defining power series in extended precision with
 *    compensated summation, used while cancellation stays harmless;
 *  - asymptotic: the algebraic expansion for large negative z, truncated at
 *    its smallest term (plus the exponential pole terms when mu > 1);
 *  - contour_integral: inverse Laplace transform of s^{mu-nu}/(s^mu - z)
 *    along an optimised Talbot contour (0 < mu <= 1, the intermediate range);
 *  - spectral_integral: real spectral representation plus pole residues
 *    (mu > 1 in the intermediate range; also used by ml_via_spectrum).
 *
 * The spectral-density quadrature behind ml_via_spectrum is deliberately not
 * on the ml1/ml2 path for 0 < mu < 1, so the two can check each other.
 */

#include <string_view>

namespace fracvisco::special {

enum class MLRegime { series, spectral_integral, asymptotic, exact_reduction, contour_integral };

constexpr std::string_view to_string(MLRegime r) {
  switch (r) {
    case MLRegime::series: return "series";
    case MLRegime::spectral_integral: return "spectral_integral";
    case MLRegime::asymptotic: return "asymptotic";
    case MLRegime::exact_reduction: return "exact_reduction";
    case MLRegime::contour_integral: return "contour_integral";
  }
  return "unknown";
}

struct MLResult {
  double value = 0.0;
  double est_abs_error = 0.0;
  MLRegime regime = MLRegime::series;
};

/// E_mu(z). Throws NonPositiveOrder for mu <= 0, Overflow when the value is
/// not representable.
MLResult ml1(double mu, double z);

/// E_{mu,nu}(z).
MLResult ml2(double mu, double nu, double z);

/// Spectral density K(r) of E_mu(-lambda t^mu) = int_0^inf e^{-rt} K(r) dr,
/// for 0 < mu < 1.
double ml_spectral_density(double mu, double lambda, double r);

/// E_mu(-lambda t^mu) by adaptive quadrature of the spectral representation
/// only. Independent of ml1; intended as its oracle. 0 < mu < 1.
MLResult ml_via_spectrum(double mu, double lambda, double t);

/// t^{mu-1} E_{mu,mu}(-lambda t^mu) = -(1/lambda) d/dt E_mu(-lambda t^mu),
/// for 0 < mu <= 1 and t > 0.
double phi_kernel(double mu, double lambda, double t);

}  // namespace fracvisco::special
