#include "fracvisco/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "fracvisco/errors.hpp"
#include "fracvisco/gamma.hpp"
#include "fracvisco/quadrature.hpp"

namespace fracvisco::special {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Relative accuracy of one series term (dominated by the Gamma evaluation).
constexpr double kTermRelError = 2.0e-15;
constexpr int kMaxSeriesTerms = 10000;
constexpr int kMaxAsymptoticTerms = 400;
// Absolute error we aim for in every regime.
constexpr double kTarget = 1.0e-12;

struct Attempt {
  MLResult result;
  bool ok = false;
};

void check_order(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorKind::NonPositiveOrder, "Mittag-Leffler order must be positive, got mu = " +
                                                 std::to_string(mu));
  }
}

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::Overflow, std::string("Mittag-Leffler: non-finite ") + what);
  }
}

bool is_integer(double x) { return x == std::nearbyint(x); }

// z^k / Gamma(mu k + nu) for k >= 0, robust for large Gamma arguments.
long double series_term(double mu, double nu, double z, int k, long double zpow) {
  const double arg = mu * k + nu;
  if (arg < 170.0) return zpow * reciprocal_gamma(arg);
  if (z == 0.0) return 0.0L;
  const long double log_mag = k * std::log(std::fabs(static_cast<long double>(z))) -
                              static_cast<long double>(log_abs_gamma(arg));
  if (log_mag < -11000.0L) return 0.0L;
  const long double mag = std::exp(log_mag);
  return (z < 0.0 && (k % 2 == 1)) ? -mag : mag;
}

// Kahan-compensated power series in extended precision.
Attempt power_series(double mu, double nu, double z) {
  long double sum = 0.0L;
  long double comp = 0.0L;
  long double abs_sum = 0.0L;
  long double zpow = 1.0L;
  bool converged = false;
  long double last = 0.0L;
  int quiet = 0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const long double term = series_term(mu, nu, z, k, zpow);
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    abs_sum += std::fabs(term);
    last = std::fabs(term);
    if (!std::isfinite(static_cast<double>(sum)) || !std::isfinite(static_cast<double>(abs_sum))) {
      return {};
    }
    // Terms vanish at Gamma poles (mu k + nu a non-positive integer); only
    // stop after a run of small terms once the arguments are positive.
    if (mu * k + nu > 1.0 && last <= 1e-16L * std::fabs(sum)) {
      if (++quiet >= 2) {
        converged = true;
        break;
      }
    } else {
      quiet = 0;
    }
    zpow *= z;
  }
  if (!converged) return {};
  Attempt a;
  a.result.value = static_cast<double>(sum);
  a.result.est_abs_error =
      static_cast<double>(kTermRelError * abs_sum + 2.0L * last) +
      std::numeric_limits<double>::epsilon() * std::fabs(a.result.value);
  a.result.regime = MLRegime::series;
  a.ok = true;
  return a;
}

// Exponential contributions (1/mu) sum_j s_j^{1-nu} e^{s_j} from the poles of
// s^{mu-nu} / (s^mu - z) on the principal sheet.
double pole_terms(double mu, double nu, double z, bool& on_cut) {
  on_cut = false;
  const double argz = (z < 0.0) ? kPi : 0.0;
  const double rad = std::pow(std::fabs(z), 1.0 / mu);
  double total = 0.0;
  const int jmax = static_cast<int>(std::ceil(mu)) + 1;
  for (int j = -jmax; j <= jmax; ++j) {
    const double theta = (argz + 2.0 * kPi * j) / mu;
    if (std::fabs(theta) > kPi + 1e-14) continue;
    if (std::fabs(std::fabs(theta) - kPi) <= 1e-14) {
      on_cut = true;
      continue;
    }
    const cplx s = std::polar(rad, theta);
    if (s.real() > 709.0) {
      throw Error(ErrorKind::Overflow, "Mittag-Leffler value overflows double range");
    }
    const cplx contrib = std::pow(s, 1.0 - nu) * std::exp(s) / mu;
    total += contrib.real();
  }
  return total;
}

// |z|^{-k} / Gamma(arg) with its sign.
double z_pow_inverse_gamma(int k, double logx, double arg) {
  int sign = 1;
  const double lg = log_abs_gamma(arg, &sign);
  const double log_mag = -k * logx - lg;
  return log_mag < -745.0 ? 0.0 : sign * std::exp(log_mag);
}

// Large |z| expansion: pole terms minus sum_k z^{-k} / Gamma(nu - mu k),
// truncated at its smallest term. Truncation decisions use the envelope
// |1/Gamma(x)| <= Gamma(1 - x) / pi (x < 1), so a term that happens to sit
// next to a pole of Gamma cannot end the sum early.
Attempt asymptotic(double mu, double nu, double z) {
  bool on_cut = false;
  const double poles = pole_terms(mu, nu, z, on_cut);
  if (on_cut) return {};
  const double logx = std::log(std::fabs(z));
  const double log_pi = std::log(kPi);
  long double sum = 0.0L;
  double smallest = std::numeric_limits<double>::infinity();
  double err = std::numeric_limits<double>::infinity();
  long double pending = 0.0L;
  int rising = 0;
  int quiet = 0;
  for (int k = 1; k <= kMaxAsymptoticTerms; ++k) {
    const double arg = nu - mu * k;
    const double log_env =
        -k * logx + (arg < 1.0 ? log_abs_gamma(1.0 - arg) - log_pi : -log_abs_gamma(arg));
    const double env = (log_env < -745.0) ? 0.0 : std::exp(log_env);
    long double term = 0.0L;
    if (!is_gamma_pole(arg)) {
      // term = -z^{-k} / Gamma(nu - mu k)
      const int zsign = (z < 0.0 && (k % 2 == 1)) ? -1 : 1;
      term = -static_cast<long double>(zsign) * z_pow_inverse_gamma(k, logx, arg);
    }
    if (env >= smallest) {
      // Either a local bump of the envelope or the diverging tail. Hold the
      // terms back until the envelope decides; the smallest term bounds the
      // error once it keeps growing.
      pending += term;
      if (++rising >= 3) {
        err = smallest;
        break;
      }
      continue;
    }
    sum += pending + term;
    pending = 0.0L;
    rising = 0;
    smallest = env;
    if (k > 1 && env <= 1e-17 * std::fabs(static_cast<double>(sum))) {
      if (++quiet >= 2) {
        err = env;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  if (!std::isfinite(err)) err = smallest;
  Attempt a;
  a.result.value = static_cast<double>(sum) + poles;
  a.result.est_abs_error =
      err + 4.0 * std::numeric_limits<double>::epsilon() * (std::fabs(a.result.value) + std::fabs(poles));
  a.result.regime = MLRegime::asymptotic;
  a.ok = std::isfinite(a.result.value);
  return a;
}

// Inverse Laplace transform of s^{mu-nu}/(s^mu - z) at t = 1 on Weideman's
// optimised cotangent contour, N-point midpoint rule. Valid for 0 < mu <= 1.
double talbot_ml(double mu, double nu, double z, int n) {
  constexpr double kSigma = -0.6122;
  constexpr double kScale = 0.5017;
  constexpr double kAlpha = 0.6407;
  constexpr double kNu = 0.2645;
  const double h = 2.0 * kPi / n;
  double acc = 0.0;
  for (int k = n / 2; k < n; ++k) {
    const double theta = -kPi + (k + 0.5) * h;
    const double at = kAlpha * theta;
    const double cot = std::cos(at) / std::sin(at);
    const double sin2 = std::sin(at) * std::sin(at);
    const cplx s = static_cast<double>(n) * cplx(kSigma + kScale * theta * cot, kNu * theta);
    const cplx ds =
        static_cast<double>(n) * cplx(kScale * (cot - at / sin2), kNu);
    const cplx sm = std::pow(s, mu);
    const cplx f = std::pow(s, mu - nu) / (sm - z);
    acc += (std::exp(s) * f * ds).imag();
  }
  return 2.0 * acc / n;
}

Attempt contour(double mu, double nu, double z) {
  const double fine = talbot_ml(mu, nu, z, 40);
  const double coarse = talbot_ml(mu, nu, z, 32);
  Attempt a;
  if (!std::isfinite(fine) || !std::isfinite(coarse)) return a;
  a.result.value = fine;
  // e^{0.17 N} bounds the roundoff amplification of this contour.
  a.result.est_abs_error = std::fabs(fine - coarse) +
                           std::exp(0.171 * 40) * 1e-16 * std::max(1.0, std::fabs(fine));
  a.result.regime = MLRegime::contour_integral;
  a.ok = true;
  return a;
}

// int_0^inf e^{-r t} K(r) dr with the density from the Titchmarsh inversion of
// s^{mu-nu}/(s^mu + lambda). Requires nu < mu + 1 for convergence at r = 0.
quad::QuadResult spectral_laplace_integral(double mu, double nu, double lambda, double t,
                                           double abs_tol) {
  const double smu = std::sin(mu * kPi);
  const double cmu = std::cos(mu * kPi);
  const double snu = std::sin(nu * kPi);
  const double snm = std::sin((nu - mu) * kPi);
  const double r0 = std::pow(lambda, 1.0 / mu);
  (void)smu;

  // In u = log(r / r0) the integrand is r K(r) e^{-rt}.
  auto integrand = [&](double u) {
    const double r = r0 * std::exp(u);
    if (r == 0.0 || !std::isfinite(r)) return 0.0;
    const double rt = r * t;
    if (rt > 745.0) return 0.0;
    const double rm = std::pow(r, mu);
    const double denom = rm * rm + 2.0 * lambda * rm * cmu + lambda * lambda;
    const double dens = std::pow(r, mu - nu) * (rm * snu + lambda * snm) / (kPi * denom);
    return r * dens * std::exp(-rt);
  };

  // Near r = 0 the integrand in u behaves like exp((1 + mu - nu) u); find the
  // cut-off where the neglected mass falls under the tolerance.
  const double low_rate = 1.0 + mu - nu;
  double u_lo = -1.0;
  const double scale_lo = std::fabs(integrand(0.0)) + 1.0;
  while (u_lo > -2000.0) {
    const double bound = std::fabs(integrand(u_lo)) / low_rate;
    if (bound < 1e-3 * abs_tol && scale_lo * std::exp(low_rate * u_lo) < 1e-3 * abs_tol) break;
    u_lo *= 1.5;
  }
  // Upper cut-off: e^{-rt} kills everything beyond r t ~ 40 (plus the
  // algebraic decay of the density).
  double u_hi = 1.0;
  while (u_hi < 2000.0) {
    const double r = r0 * std::exp(u_hi);
    if (r * t > 50.0 && std::fabs(integrand(u_hi)) < 1e-3 * abs_tol) break;
    if (!std::isfinite(r)) break;
    u_hi *= 1.5;
  }
  auto left = quad::integrate(integrand, u_lo, 0.0, 0.5 * abs_tol, 0.0, 4000);
  auto right = quad::integrate(integrand, 0.0, u_hi, 0.5 * abs_tol, 0.0, 4000);
  quad::QuadResult out;
  out.value = left.value + right.value;
  out.abs_error = left.abs_error + right.abs_error;
  out.intervals = left.intervals + right.intervals;
  out.converged = left.converged && right.converged;
  return out;
}

// Spectral integral plus pole residues; mu > 1 that is not an odd integer.
Attempt spectral_with_poles(double mu, double nu, double z) {
  if (z >= 0.0) return {};
  if (is_integer(mu) && static_cast<long long>(mu) % 2 == 1) return {};
  // Lower nu below mu + 1 with E_{mu,nu}(z) = (E_{mu,nu-mu}(z) - 1/Gamma(nu-mu)) / z.
  if (nu >= mu + 1.0) {
    Attempt inner = spectral_with_poles(mu, nu - mu, z);
    if (!inner.ok) return inner;
    inner.result.value = (inner.result.value - reciprocal_gamma(nu - mu)) / z;
    inner.result.est_abs_error /= std::fabs(z);
    return inner;
  }
  const double x = -z;
  const double tau = std::pow(x, 1.0 / mu);
  auto q = spectral_laplace_integral(mu, nu, 1.0, tau, 1e-13);
  bool on_cut = false;
  // Poles of s^{mu-nu}/(s^mu + 1) are the scaled ones of s^{mu-nu}/(s^mu - z).
  const double poles = pole_terms(mu, nu, z, on_cut);
  if (on_cut) return {};
  const double scale = std::pow(tau, 1.0 - nu);
  Attempt a;
  // pole_terms already carries the tau^{1-nu} factor via |z|^{1/mu}.
  a.result.value = scale * q.value + poles;
  a.result.est_abs_error = scale * q.abs_error + 1e-15 * std::fabs(poles);
  a.result.regime = MLRegime::spectral_integral;
  a.ok = q.converged && std::isfinite(a.result.value);
  return a;
}

double series_radius(double mu) { return std::min(5.0, std::pow(9.0, mu)); }

Attempt exact(double mu, double nu, double z) {
  Attempt a;
  a.result.regime = MLRegime::exact_reduction;
  if (z == 0.0) {
    a.result.value = reciprocal_gamma(nu);
    a.ok = true;
  } else if (mu == 1.0 && nu == 1.0) {
    if (z > 709.0) throw Error(ErrorKind::Overflow, "E_1(z) overflows for z > 709");
    a.result.value = std::exp(z);
    a.ok = true;
  } else if (mu == 1.0 && nu == 2.0) {
    if (z > 709.0) throw Error(ErrorKind::Overflow, "E_{1,2}(z) overflows for z > 709");
    a.result.value = std::expm1(z) / z;
    a.ok = true;
  } else if (mu == 2.0 && nu == 1.0) {
    if (z > 709.0 * 709.0) throw Error(ErrorKind::Overflow, "E_2(z) overflows");
    a.result.value = (z < 0.0) ? std::cos(std::sqrt(-z)) : std::cosh(std::sqrt(z));
    a.ok = true;
  } else if (mu == 2.0 && nu == 2.0) {
    if (z > 709.0 * 709.0) throw Error(ErrorKind::Overflow, "E_{2,2}(z) overflows");
    const double r = std::sqrt(std::fabs(z));
    a.result.value = (z < 0.0) ? std::sin(r) / r : std::sinh(r) / r;
    a.ok = true;
  }
  if (a.ok) a.result.est_abs_error = 4.0 * std::numeric_limits<double>::epsilon() *
                                     std::max(1.0, std::fabs(a.result.value));
  return a;
}

// E_{1,n}(z) for integer n >= 3 by recursion from the exponential.
Attempt integer_exponential(double nu, double z) {
  Attempt a;
  if (!(nu >= 3.0 && is_integer(nu) && nu <= 60.0)) return a;
  if (z > 709.0) throw Error(ErrorKind::Overflow, "E_{1,n}(z) overflows for z > 709");
  long double value = std::expm1(static_cast<long double>(z)) / z;  // E_{1,2}
  long double err = 4e-19L;
  for (int n = 3; n <= static_cast<int>(nu); ++n) {
    value = (value - reciprocal_gamma(n - 1)) / z;
    err = (err + 4e-19L) / std::fabs(static_cast<long double>(z));
  }
  a.result.value = static_cast<double>(value);
  a.result.est_abs_error = static_cast<double>(err) +
                           std::numeric_limits<double>::epsilon() * std::fabs(a.result.value);
  a.result.regime = MLRegime::exact_reduction;
  a.ok = true;
  return a;
}

Attempt better(const Attempt& a, const Attempt& b) {
  if (!a.ok) return b;
  if (!b.ok) return a;
  return (a.result.est_abs_error <= b.result.est_abs_error) ? a : b;
}

}  // namespace

MLResult ml2(double mu, double nu, double z) {
  check_order(mu);
  if (!std::isfinite(nu)) {
    throw Error(ErrorKind::OrderOutOfRange, "Mittag-Leffler second parameter must be finite");
  }
  check_finite(z, "argument");

  if (auto e = exact(mu, nu, z); e.ok) return e.result;

  const double ax = std::fabs(z);
  Attempt best;

  if (mu == 1.0 && ax > series_radius(mu)) {
    if (auto r = integer_exponential(nu, z); r.ok) return r.result;
  }

  if (ax <= series_radius(mu) || z > 0.0) {
    best = power_series(mu, nu, z);
    if (best.ok && best.result.est_abs_error <= kTarget * std::max(1.0, std::fabs(best.result.value))) {
      return best.result;
    }
  }

  if (ax > 1.0 || z > 0.0) {
    Attempt asym = asymptotic(mu, nu, z);
    if (asym.ok && asym.result.est_abs_error <= kTarget) return asym.result;
    best = better(best, asym);
  }

  if (z < 0.0) {
    Attempt mid = (mu <= 1.0) ? contour(mu, nu, z) : spectral_with_poles(mu, nu, z);
    best = better(best, mid);
  } else if (!best.ok || best.result.est_abs_error > kTarget * std::fabs(best.result.value)) {
    // Positive arguments away from the series range: the exponential term
    // dominates, so judge accuracy relative to the value.
    Attempt asym = asymptotic(mu, nu, z);
    best = better(best, asym);
  }

  if (!best.ok) {
    // Odd integer mu puts a pole on the cut; the series still works, with
    // cancellation of order exp(|z|^{1/mu}) reflected in its error estimate.
    best = power_series(mu, nu, z);
  }
  if (!best.ok) {
    throw Error(ErrorKind::Overflow, "Mittag-Leffler evaluation failed for mu = " +
                                         std::to_string(mu) + ", nu = " + std::to_string(nu) +
                                         ", z = " + std::to_string(z));
  }
  check_finite(best.result.value, "value");
  return best.result;
}

MLResult ml1(double mu, double z) { return ml2(mu, 1.0, z); }

double ml_spectral_density(double mu, double lambda, double r) {
  if (!(mu > 0.0 && mu < 1.0)) {
    throw Error(ErrorKind::OrderOutOfRange, "spectral density requires 0 < mu < 1");
  }
  if (!(lambda > 0.0) || !(r > 0.0)) {
    throw Error(ErrorKind::OrderOutOfRange, "spectral density requires lambda > 0 and r > 0");
  }
  const double rm = std::pow(r, mu);
  return lambda * std::pow(r, mu - 1.0) * std::sin(mu * kPi) /
         (kPi * (lambda * lambda + 2.0 * lambda * rm * std::cos(mu * kPi) + rm * rm));
}

MLResult ml_via_spectrum(double mu, double lambda, double t) {
  if (!(mu > 0.0 && mu < 1.0)) {
    throw Error(ErrorKind::OrderOutOfRange, "ml_via_spectrum requires 0 < mu < 1");
  }
  if (!(lambda > 0.0) || !(t > 0.0)) {
    throw Error(ErrorKind::OrderOutOfRange, "ml_via_spectrum requires lambda > 0 and t > 0");
  }
  auto q = spectral_laplace_integral(mu, 1.0, lambda, t, 1e-12);
  if (!q.converged && q.abs_error > 1e-9) {
    throw Error(ErrorKind::QuadratureNonConvergence,
                "spectral quadrature did not converge (error estimate " +
                    std::to_string(q.abs_error) + ")");
  }
  return {q.value, q.abs_error, MLRegime::spectral_integral};
}

double phi_kernel(double mu, double lambda, double t) {
  if (!(mu > 0.0 && mu <= 1.0)) {
    throw Error(ErrorKind::OrderOutOfRange, "phi_kernel requires 0 < mu <= 1");
  }
  if (!(t > 0.0)) throw Error(ErrorKind::OrderOutOfRange, "phi_kernel requires t > 0");
  if (mu == 1.0) return std::exp(-lambda * t);
  return std::pow(t, mu - 1.0) * ml2(mu, mu, -lambda * std::pow(t, mu)).value;
}

}  // namespace fracvisco::special
