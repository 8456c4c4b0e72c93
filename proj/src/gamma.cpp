#include "fracvisco/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fracvisco/errors.hpp"

namespace fracvisco::special {

namespace {

constexpr long double kLanczosG = 7.0L;
constexpr std::array<long double, 9> kLanczosCoeffs = {
    0.99999999999980993227684700473478L,  676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L, 771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,     12.507343278686904814458936853L,
    -0.13857109526572011689554707L,       9.984369578019570859563e-6L,
    1.50563273514931155834e-7L};

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kHalfLog2Pi = 0.91893853320467274178032973640562L;

// sin(pi x) with exact zeros at the integers.
long double sin_pi(long double x) {
  const long double n = std::nearbyint(x);
  const long double r = x - n;
  const long double s = std::sin(kPi * r);
  return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

long double lanczos_series(long double xm1) {
  long double a = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    a += kLanczosCoeffs[i] / (xm1 + static_cast<long double>(i));
  }
  return a;
}

// log Gamma(x) for x >= 0.5.
long double log_gamma_positive(long double x) {
  const long double xm1 = x - 1.0L;
  const long double t = xm1 + kLanczosG + 0.5L;
  return kHalfLog2Pi + (xm1 + 0.5L) * std::log(t) - t + std::log(lanczos_series(xm1));
}

// Gamma(x) for x >= 0.5, split to avoid intermediate overflow near 171.
long double gamma_positive(long double x) {
  if (x < 1.5L) {
    // Small arguments: use Gamma(x) = Gamma(x + 1) / x for accuracy near 1.
    if (x < 1.0L) return gamma_positive(x + 1.0L) / x;
  }
  const long double xm1 = x - 1.0L;
  const long double t = xm1 + kLanczosG + 0.5L;
  const long double half = std::pow(t, (xm1 + 0.5L) / 2.0L);
  return std::sqrt(2.0L * kPi) * half * (std::exp(-t) * half) * lanczos_series(xm1);
}

}  // namespace

bool is_gamma_pole(double x) {
  return x <= 0.0 && x == std::nearbyint(x);
}

double gamma_function(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::GammaOutOfRange, "gamma: non-finite argument");
  }
  if (is_gamma_pole(x)) {
    throw Error(ErrorKind::GammaOutOfRange,
                "gamma: pole at non-positive integer " + std::to_string(x));
  }
  const long double lx = x;
  long double value;
  if (lx >= 0.5L) {
    if (lx > 171.62L) {
      throw Error(ErrorKind::Overflow, "gamma: result overflows for x = " + std::to_string(x));
    }
    value = gamma_positive(lx);
  } else {
    value = kPi / (sin_pi(lx) * gamma_positive(1.0L - lx));
  }
  return static_cast<double>(value);
}

double log_abs_gamma(double x, int* sign) {
  if (!std::isfinite(x) || is_gamma_pole(x)) {
    throw Error(ErrorKind::GammaOutOfRange, "log_abs_gamma: pole or non-finite argument");
  }
  const long double lx = x;
  if (lx >= 0.5L) {
    if (sign) *sign = 1;
    return static_cast<double>(log_gamma_positive(lx));
  }
  const long double s = sin_pi(lx);
  if (sign) *sign = (s > 0.0L) ? 1 : -1;
  return static_cast<double>(std::log(kPi) - std::log(std::fabs(s)) -
                             log_gamma_positive(1.0L - lx));
}

double reciprocal_gamma(double x) {
  if (is_gamma_pole(x)) return 0.0;
  if (x > 171.0) {
    return std::exp(-log_abs_gamma(x));
  }
  if (x < -170.0) {
    int sign = 1;
    const double lg = log_abs_gamma(x, &sign);
    return sign * std::exp(-lg);
  }
  const long double lx = x;
  if (lx >= 0.5L) return static_cast<double>(1.0L / gamma_positive(lx));
  return static_cast<double>(sin_pi(lx) * gamma_positive(1.0L - lx) / kPi);
}

}  // namespace fracvisco::special
