#include "fracvisco/relaxation.hpp"

#include <cmath>
#include <string>

#include "fracvisco/errors.hpp"
#include "fracvisco/mittag_leffler.hpp"

namespace fracvisco::relax {

namespace {

// Hilfer problems of type 0 and 1 are the R-L and Caputo problems.
RelaxationProblem canonical(const RelaxationProblem& p) {
  p.validate();
  RelaxationProblem q = p;
  if (p.kind == RelaxationKind::renewal) q.kind = RelaxationKind::caputo;
  if (p.kind == RelaxationKind::hilfer) {
    if (*p.nu == 1.0) q.kind = RelaxationKind::caputo;
    if (*p.nu == 0.0) q.kind = RelaxationKind::rl;
  }
  return q;
}

std::complex<double> image_value(const RelaxationProblem& p, std::complex<double> s) {
  const auto smu = std::pow(s, p.mu);
  const auto den = smu + p.rate;
  switch (p.kind) {
    case RelaxationKind::rl: return 1.0 / den;
    case RelaxationKind::hilfer: return std::pow(s, *p.nu * (p.mu - 1.0)) / den;
    default: return smu / s / den;
  }
}

}  // namespace

void RelaxationProblem::validate() const {
  if (!(mu > 0.0 && mu <= 1.0)) {
    throw Error(ErrorKind::OrderOutOfRange,
                "relaxation order must lie in (0, 1], got " + std::to_string(mu));
  }
  if (kind == RelaxationKind::hilfer) {
    if (!nu || !(*nu >= 0.0 && *nu <= 1.0)) {
      throw Error(ErrorKind::OrderOutOfRange, "Hilfer relaxation needs a type in [0, 1]");
    }
  } else if (nu) {
    throw Error(ErrorKind::OrderOutOfRange, "only Hilfer relaxation takes a type parameter");
  }
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw Error(ErrorKind::OrderOutOfRange, "relaxation rate must be positive");
  }
}

double origin_exponent(const RelaxationProblem& problem) {
  const auto p = canonical(problem);
  switch (p.kind) {
    case RelaxationKind::rl: return p.mu - 1.0;
    case RelaxationKind::hilfer: return (1.0 - *p.nu) * (p.mu - 1.0);
    default: return 0.0;
  }
}

double solution_at(const RelaxationProblem& problem, double t) {
  const auto p = canonical(problem);
  if (!(t > 0.0)) throw Error(ErrorKind::InvalidSignal, "solution is evaluated at t > 0 only");
  if (p.mu == 1.0) return std::exp(-p.rate * t);
  const double z = -p.rate * std::pow(t, p.mu);
  switch (p.kind) {
    case RelaxationKind::rl:
      return special::phi_kernel(p.mu, p.rate, t);
    case RelaxationKind::hilfer: {
      const double beta = p.mu + *p.nu * (1.0 - p.mu);
      return std::pow(t, beta - 1.0) * special::ml2(p.mu, beta, z).value;
    }
    default:
      return special::ml1(p.mu, z).value;
  }
}

SampledSignal solve(const RelaxationProblem& problem, const std::vector<double>& times) {
  SampledSignal out;
  out.origin_exponent = origin_exponent(problem);
  out.grid = times;
  out.values.reserve(times.size());
  for (double t : times) out.values.push_back(solution_at(problem, t));
  return out;
}

std::complex<double> laplace_image(const RelaxationProblem& problem, std::complex<double> s) {
  const auto p = canonical(problem);
  if (!(s.real() > 0.0)) throw Error(ErrorKind::InvalidSignal, "relaxation image needs Re s > 0");
  return image_value(p, s);
}

laplace::SDomainFunction image_function(const RelaxationProblem& problem) {
  problem.validate();
  const auto p = canonical(problem);
  laplace::SDomainFunction f;
  // Same formulas, without the Re s > 0 guard: the inversion contour
  // passes through the left half-plane.
  f.eval = [p](std::complex<double> s) { return image_value(p, s); };
  return f;
}

}  // namespace fracvisco::relax
