#include "fracvisco/frac_operators.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "fracvisco/errors.hpp"
#include "fracvisco/gamma.hpp"

namespace fracvisco::ops {

namespace {

constexpr std::array<double, 4> kGLNodes = {0.1834346424956498, 0.5255324099163290,
                                            0.7966664774136267, 0.9602898564975363};
constexpr std::array<double, 4> kGLWeights = {0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};

// Segments this many widths away from both singular points are smooth enough
// for 8-point Gauss-Legendre to be exact to rounding.
constexpr double kFarWidths = 4.0;

// (A^q - B^q) / q without cancellation when B is close to A.
double power_difference(double A, double B, double q) {
  if (B <= 0.0) return std::pow(A, q) / q;
  return -std::pow(A, q) * std::expm1(q * std::log(B / A)) / q;
}

// int_a^b (t - tau)^{alpha-1} tau^p (ga + slope (tau - a)) dtau.
double segment_weight(double t, double a, double b, double ga, double slope, double alpha, double p) {
  const double h = b - a;
  const double A = t - a;
  const double B = t - b;
  const bool far_from_t = B >= kFarWidths * h;
  const bool far_from_origin = p == 0.0 || a >= kFarWidths * h;
  if (far_from_t && far_from_origin) {
    const double c = 0.5 * (a + b);
    const double r = 0.5 * h;
    double acc = 0.0;
    for (std::size_t k = 0; k < kGLNodes.size(); ++k) {
      for (double sign : {-1.0, 1.0}) {
        const double tau = c + sign * r * kGLNodes[k];
        double v = std::pow(t - tau, alpha - 1.0) * (ga + slope * (tau - a));
        if (p != 0.0) v *= std::pow(tau, p);
        acc += kGLWeights[k] * v;
      }
    }
    return r * acc;
  }
  if (p == 0.0) {
    const double d0 = power_difference(A, B, alpha);
    const double d1 = power_difference(A, B, alpha + 1.0);
    return ga * d0 + slope * (A * d0 - d1);
  }
  // Scaled to x = tau / t: incomplete beta integrals of (1-x)^{alpha-1} x^{p+j},
  // taken from whichever end of [0, 1] is closer.
  const double xa = a / t;
  const double xb = b / t;
  auto piece = [&](double c) {
    using boost::math::beta;
    if (xb <= 0.5) return beta(c, alpha, xb) - beta(c, alpha, xa);
    if (xa >= 0.5) return beta(alpha, c, 1.0 - xa) - beta(alpha, c, 1.0 - xb);
    return (beta(c, alpha, 0.5) - beta(c, alpha, xa)) + (beta(alpha, c, 0.5) - beta(alpha, c, 1.0 - xb));
  };
  const double b0 = piece(p + 1.0);
  const double b1 = piece(p + 2.0);
  return std::pow(t, alpha + p) * (ga * b0 + slope * t * (b1 - xa * b0));
}

void require_grid(const SampledSignal& f, std::size_t n, const char* what) {
  if (f.size() < n) {
    throw Error(ErrorKind::GridTooCoarse,
                std::string(what) + " needs at least " + std::to_string(n) + " samples");
  }
}

SampledSignal nth_derivative(SampledSignal f, int m) {
  for (int k = 0; k < m; ++k) f = derivative(f);
  return f;
}

}  // namespace

FractionalOrder FractionalOrder::of(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorKind::NonPositiveOrder, "fractional order must be positive, got " + std::to_string(mu));
  }
  FractionalOrder o;
  o.mu = mu;
  const double r = std::round(mu);
  o.m = (std::fabs(mu - r) < 1e-12) ? static_cast<int>(r) : static_cast<int>(std::ceil(mu));
  return o;
}

FractionalOrder FractionalOrder::hilfer(double mu, double nu) {
  if (!(mu > 0.0 && mu < 1.0) || !(nu >= 0.0 && nu <= 1.0)) {
    throw Error(ErrorKind::OrderOutOfRange, "Hilfer derivative needs 0 < mu < 1 and 0 <= nu <= 1");
  }
  auto o = of(mu);
  o.hilfer_type = nu;
  return o;
}

bool FractionalOrder::is_integer() const { return std::fabs(mu - std::round(mu)) < 1e-12; }

SampledSignal frac_integral(const SampledSignal& f, double alpha) {
  f.validate();
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::NonNegativeOrderViolation,
                "integral order must be non-negative, got " + std::to_string(alpha));
  }
  if (alpha == 0.0) return f;
  const double p = f.origin_exponent;
  if (!(p > -1.0)) {
    throw Error(ErrorKind::OriginTooSingular,
                "origin exponent " + std::to_string(p) + " is not integrable");
  }
  require_grid(f, 2, "fractional integral");

  const std::size_t n = f.size();
  // Node 0 is the origin, with g extended linearly from the first two samples.
  std::vector<double> tau(n + 1), g(n + 1);
  tau[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    tau[i + 1] = f.grid[i];
    g[i + 1] = f.regular_part(i);
  }
  g[0] = g[1] - (g[2] - g[1]) / (tau[2] - tau[1]) * tau[1];

  const double scale = special::reciprocal_gamma(alpha);
  SampledSignal out;
  out.grid = f.grid;
  out.values.resize(n);
  out.origin_exponent = p + alpha;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = f.grid[i];
    double acc = 0.0;
    for (std::size_t k = 0; k <= i; ++k) {
      const double slope = (g[k + 1] - g[k]) / (tau[k + 1] - tau[k]);
      acc += segment_weight(t, tau[k], tau[k + 1], g[k], slope, alpha, p);
    }
    out.values[i] = scale * acc;
  }
  return out;
}

SampledSignal derivative(const SampledSignal& f) {
  f.validate();
  require_grid(f, 3, "finite differences");
  const std::size_t n = f.size();
  const auto& x = f.grid;
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = f.regular_part(i);

  // Written in differences so constants differentiate to exactly zero.
  std::vector<double> dg(n);
  {
    const double h1 = x[1] - x[0];
    const double h2 = x[2] - x[1];
    dg[0] = (h1 + h2) / (h1 * h2) * (g[1] - g[0]) - h1 / (h2 * (h1 + h2)) * (g[2] - g[0]);
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h1 = x[i] - x[i - 1];
    const double h2 = x[i + 1] - x[i];
    dg[i] = h2 / (h1 * (h1 + h2)) * (g[i] - g[i - 1]) + h1 / (h2 * (h1 + h2)) * (g[i + 1] - g[i]);
  }
  {
    const double h1 = x[n - 2] - x[n - 3];
    const double h2 = x[n - 1] - x[n - 2];
    dg[n - 1] = (h1 + h2) / (h1 * h2) * (g[n - 1] - g[n - 2]) -
                h2 / (h1 * (h1 + h2)) * (g[n - 1] - g[n - 3]);
  }

  SampledSignal out;
  out.grid = f.grid;
  out.values.resize(n);
  const double q = f.origin_exponent;
  if (q == 0.0) {
    out.values = std::move(dg);
    return out;
  }
  // d/dt [t^q g] = t^{q-1} (q g + t g').
  out.origin_exponent = q - 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = std::pow(x[i], q - 1.0) * (q * g[i] + x[i] * dg[i]);
  }
  return out;
}

SampledSignal rl_derivative(const SampledSignal& f, const FractionalOrder& order) {
  if (order.is_integer()) return nth_derivative(f, order.m);
  return nth_derivative(frac_integral(f, order.m - order.mu), order.m);
}

SampledSignal caputo_derivative(const SampledSignal& f, const FractionalOrder& order,
                                const InitialData& init) {
  if (init.derivs_at_zero.size() != static_cast<std::size_t>(order.m)) {
    throw Error(ErrorKind::MissingInitialData,
                "Caputo derivative of order " + std::to_string(order.mu) + " needs " +
                    std::to_string(order.m) + " initial values, got " +
                    std::to_string(init.derivs_at_zero.size()));
  }
  for (double v : init.derivs_at_zero) {
    if (!std::isfinite(v)) throw Error(ErrorKind::MissingInitialData, "initial values must be finite");
  }
  if (order.is_integer()) return nth_derivative(f, order.m);
  return frac_integral(nth_derivative(f, order.m), order.m - order.mu);
}

double rl_caputo_gap(const InitialData& init, const FractionalOrder& order, double t) {
  if (order.is_integer()) {
    throw Error(ErrorKind::IntegerOrder, "R-L and Caputo derivatives coincide at integer order");
  }
  if (init.derivs_at_zero.size() != static_cast<std::size_t>(order.m)) {
    throw Error(ErrorKind::MissingInitialData, "need one initial value per derivative below m");
  }
  double gap = 0.0;
  for (int k = 0; k < order.m; ++k) {
    gap += init.derivs_at_zero[k] * std::pow(t, k - order.mu) * special::reciprocal_gamma(k - order.mu + 1.0);
  }
  return gap;
}

SampledSignal hilfer_derivative(const SampledSignal& f, double mu, double nu) {
  const auto order = FractionalOrder::hilfer(mu, nu);
  const double inner = (1.0 - nu) * (1.0 - order.mu);
  const double outer = nu * (1.0 - order.mu);
  return frac_integral(derivative(frac_integral(f, inner)), outer);
}

double power_law_rule(double gamma, double order, double t, PowerRuleKind kind) {
  if (!(gamma > -1.0)) {
    throw Error(ErrorKind::GammaOutOfRange, "power rule needs gamma > -1, got " + std::to_string(gamma));
  }
  if (!(order >= 0.0)) {
    throw Error(ErrorKind::NonNegativeOrderViolation, "power rule needs a non-negative order");
  }
  if (!(t > 0.0)) throw Error(ErrorKind::InvalidSignal, "power rule needs t > 0");
  const double shift = (kind == PowerRuleKind::integral) ? order : -order;
  const double coeff = special::gamma_function(gamma + 1.0) * special::reciprocal_gamma(gamma + 1.0 + shift);
  if (coeff == 0.0) return 0.0;
  return coeff * std::pow(t, gamma + shift);
}

LaplaceRuleCheck laplace_rule_check(const SampledSignal& f, const FractionalOrder& order,
                                    const InitialData& init, double s,
                                    const laplace::ForwardOptions& opt) {
  if (order.is_integer()) {
    throw Error(ErrorKind::IntegerOrder, "Laplace rule check is for non-integer orders");
  }
  const double ft = laplace::laplace_forward(f, s, opt).real();
  const double smu = std::pow(s, order.mu);
  LaplaceRuleCheck out;
  out.caputo_lhs = laplace::laplace_forward(caputo_derivative(f, order, init), s, opt).real();
  out.caputo_rhs = smu * ft;
  for (int k = 0; k < order.m; ++k) {
    out.caputo_rhs -= std::pow(s, order.mu - 1.0 - k) * init.derivs_at_zero[k];
  }
  out.rl_lhs = laplace::laplace_forward(rl_derivative(f, order), s, opt).real();
  out.rl_rhs = smu * ft;
  return out;
}

}  // namespace fracvisco::ops
