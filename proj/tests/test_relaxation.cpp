#include <cmath>

#include <gtest/gtest.h>

#include "fracvisco/errors.hpp"
#include "fracvisco/frac_operators.hpp"
#include "fracvisco/gamma.hpp"
#include "fracvisco/laplace.hpp"
#include "fracvisco/mittag_leffler.hpp"
#include "fracvisco/relaxation.hpp"

using namespace fracvisco;
using namespace fracvisco::relax;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no fracvisco::Error thrown";
  return ErrorKind::DisagreementWarning;
}

RelaxationProblem problem(RelaxationKind kind, double mu, std::optional<double> nu = {}) {
  RelaxationProblem p;
  p.kind = kind;
  p.mu = mu;
  p.nu = nu;
  return p;
}

std::vector<RelaxationProblem> all_kinds(double mu) {
  return {problem(RelaxationKind::caputo, mu), problem(RelaxationKind::rl, mu),
          problem(RelaxationKind::renewal, mu), problem(RelaxationKind::hilfer, mu, 0.4)};
}

}  // namespace

TEST(Relaxation, Validation) {
  EXPECT_EQ(kind_of([] { problem(RelaxationKind::caputo, 0.0).validate(); }), ErrorKind::OrderOutOfRange);
  EXPECT_EQ(kind_of([] { problem(RelaxationKind::caputo, 1.2).validate(); }), ErrorKind::OrderOutOfRange);
  EXPECT_EQ(kind_of([] { problem(RelaxationKind::hilfer, 0.5).validate(); }), ErrorKind::OrderOutOfRange);
  EXPECT_EQ(kind_of([] { problem(RelaxationKind::hilfer, 0.5, 1.5).validate(); }),
            ErrorKind::OrderOutOfRange);
  EXPECT_EQ(kind_of([] { problem(RelaxationKind::rl, 0.5, 0.5).validate(); }), ErrorKind::OrderOutOfRange);
  auto p = problem(RelaxationKind::caputo, 0.5);
  p.rate = 0.0;
  EXPECT_EQ(kind_of([&] { p.validate(); }), ErrorKind::OrderOutOfRange);
}

TEST(Relaxation, Examples) {
  EXPECT_NEAR(solution_at(problem(RelaxationKind::caputo, 1.0), 1.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(solution_at(problem(RelaxationKind::caputo, 0.4), 1e-12), 1.0, 1e-4);
  // E_{1/2,1/2}(-1) = 1/sqrt(pi) - e erfc(1)
  EXPECT_NEAR(solution_at(problem(RelaxationKind::rl, 0.5), 1.0), 0.136606007391949, 1e-13);
  for (double t : {0.01, 0.3, 2.0, 40.0}) {
    EXPECT_EQ(solution_at(problem(RelaxationKind::hilfer, 0.5, 1.0), t),
              solution_at(problem(RelaxationKind::caputo, 0.5), t));
    EXPECT_EQ(solution_at(problem(RelaxationKind::hilfer, 0.5, 0.0), t),
              solution_at(problem(RelaxationKind::rl, 0.5), t));
    EXPECT_EQ(solution_at(problem(RelaxationKind::renewal, 0.5), t),
              solution_at(problem(RelaxationKind::caputo, 0.5), t));
  }
}

TEST(Relaxation, RLSolutionIsNegativeDerivativeOfPsi) {
  const double mu = 0.5, t = 1.0, h = 1e-5;
  auto psi = [&](double x) { return special::ml1(mu, -std::pow(x, mu)).value; };
  const double dpsi = (psi(t + h) - psi(t - h)) / (2.0 * h);
  EXPECT_NEAR(solution_at(problem(RelaxationKind::rl, mu), t), -dpsi, 1e-8);
}

TEST(Relaxation, OriginExponents) {
  EXPECT_EQ(origin_exponent(problem(RelaxationKind::caputo, 0.3)), 0.0);
  EXPECT_NEAR(origin_exponent(problem(RelaxationKind::rl, 0.3)), -0.7, 1e-15);
  EXPECT_NEAR(origin_exponent(problem(RelaxationKind::hilfer, 0.3, 0.5)), -0.35, 1e-15);
  const auto s = solve(problem(RelaxationKind::rl, 0.3), {0.5, 1.0});
  EXPECT_NEAR(s.origin_exponent, -0.7, 1e-15);
}

TEST(Relaxation, SmallTimeSingularity) {
  // The correction is -Gamma(mu)/Gamma(2 mu) t^mu, so t is taken where t^mu = 1e-4.
  for (double mu : {0.25, 0.5, 0.75}) {
    const double t = std::pow(1e-4, 1.0 / mu);
    const double scaled = solution_at(problem(RelaxationKind::rl, mu), t) * std::pow(t, 1.0 - mu);
    EXPECT_NEAR(scaled * special::gamma_function(mu), 1.0, 1e-3) << mu;
  }
}

TEST(Relaxation, LaplaceImages) {
  EXPECT_NEAR(laplace_image(problem(RelaxationKind::caputo, 0.5), 1.0).real(), 0.5, 1e-15);
  EXPECT_NEAR(laplace_image(problem(RelaxationKind::rl, 0.5), 1.0).real(), 0.5, 1e-15);
  // Type 0 is the R-L image 1/(s^{1/2} + 1); type 1 carries the extra s^{-1/2}.
  EXPECT_NEAR(laplace_image(problem(RelaxationKind::hilfer, 0.5, 0.0), 4.0).real(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(laplace_image(problem(RelaxationKind::hilfer, 0.5, 1.0), 4.0).real(), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(laplace_image(problem(RelaxationKind::hilfer, 0.5, 0.5), 4.0).real(),
              std::pow(4.0, -0.25) / 3.0, 1e-15);
}

TEST(Relaxation, RLImageIdentity) {
  for (double mu : {0.2, 0.5, 0.9}) {
    for (std::complex<double> s : {std::complex<double>(0.5, 0.0), {1.0, 2.0}, {3.0, -1.0}}) {
      const auto lhs = laplace_image(problem(RelaxationKind::rl, mu), s);
      const auto rhs = 1.0 - s * laplace_image(problem(RelaxationKind::caputo, mu), s);
      EXPECT_LT(std::abs(lhs - rhs), 1e-14);
    }
  }
}

TEST(Relaxation, ForwardTransformMatchesImage) {
  const auto grid = logspace(-8.0, 5.0, 3000);
  for (double mu : {0.25, 0.5, 0.75}) {
    for (const auto& p : all_kinds(mu)) {
      const auto u = solve(p, grid);
      for (double s : {0.5, 1.0, 2.0}) {
        EXPECT_NEAR(laplace::laplace_forward(u, s).real(), laplace_image(p, s).real(), 1e-4)
            << mu << " kind " << static_cast<int>(p.kind) << " s " << s;
      }
    }
  }
}

TEST(Relaxation, InversionMatchesSolution) {
  const auto times = logspace(-1.0, 1.0, 25);
  for (double mu : {0.25, 0.5, 0.75, 1.0}) {
    for (const auto& p : all_kinds(mu)) {
      const auto inv = laplace::laplace_invert(image_function(p), times);
      for (std::size_t i = 0; i < times.size(); ++i) {
        const double exact = solution_at(p, times[i]);
        EXPECT_LT(std::fabs(inv.signal.values[i] / exact - 1.0), 1e-5) << mu << " t " << times[i];
      }
    }
  }
}

TEST(Relaxation, PsiIsPositiveDecreasingAndBounded) {
  for (double mu : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    const auto u = solve(problem(RelaxationKind::caputo, mu), logspace(-3.0, 2.0, 400));
    double prev = 1.0;
    for (double v : u.values) {
      EXPECT_GT(v, 0.0);
      EXPECT_LE(v, 1.0);
      EXPECT_LT(v, prev);
      prev = v;
    }
  }
}

TEST(Relaxation, RenewalFormSatisfiedNumerically) {
  // du/dt = -D^{1-mu} u with u = Psi.
  const double mu = 0.6;
  const auto grid = linspace(0.005, 4.0, 800);
  const auto u = solve(problem(RelaxationKind::renewal, mu), grid);
  const auto du = ops::derivative(u);
  const auto rhs = ops::rl_derivative(u, ops::FractionalOrder::of(1.0 - mu));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.2) continue;
    EXPECT_NEAR(du.values[i], -rhs.values[i], 2e-3 * std::fabs(du.values[i])) << grid[i];
  }
}
