#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fracvisco/errors.hpp"
#include "fracvisco/frac_operators.hpp"
#include "fracvisco/gamma.hpp"

using namespace fracvisco;
using namespace fracvisco::ops;

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

const double two_over_sqrt_pi = 2.0 / std::sqrt(std::numbers::pi);

double value_at(const SampledSignal& s, double t) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::fabs(s.grid[i] - t) <= 1e-12 * t) return s.values[i];
  }
  ADD_FAILURE() << "t = " << t << " is not a grid point";
  return NAN;
}

// Largest |a - b| / max(|b|, floor) over grid points with t >= t_min.
double max_rel_diff(const SampledSignal& a, const SampledSignal& b, double t_min = 0.0,
                    double floor = 1e-12) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.grid[i] < t_min) continue;
    m = std::max(m, std::fabs(a.values[i] - b.values[i]) / std::max(std::fabs(b.values[i]), floor));
  }
  return m;
}

const auto grid = linspace(0.01, 5.0, 500);
const auto one = sample([](double) { return 1.0; }, grid);
const auto ramp = sample([](double t) { return t; }, grid);
const auto decay = sample([](double t) { return std::exp(-t); }, grid);

}  // namespace

TEST(FractionalOrder, CeilingAndHilferType) {
  EXPECT_EQ(FractionalOrder::of(0.5).m, 1);
  EXPECT_EQ(FractionalOrder::of(1.0).m, 1);
  EXPECT_EQ(FractionalOrder::of(2.3).m, 3);
  EXPECT_TRUE(FractionalOrder::of(2.0).is_integer());
  EXPECT_FALSE(FractionalOrder::of(0.4).is_integer());
  EXPECT_EQ(*FractionalOrder::hilfer(0.5, 0.25).hilfer_type, 0.25);
  EXPECT_EQ(kind_of([] { FractionalOrder::of(0.0); }), ErrorKind::NonPositiveOrder);
  EXPECT_EQ(kind_of([] { FractionalOrder::hilfer(1.5, 0.5); }), ErrorKind::OrderOutOfRange);
  EXPECT_EQ(kind_of([] { FractionalOrder::hilfer(0.5, 1.5); }), ErrorKind::OrderOutOfRange);
}

TEST(FracIntegral, Examples) {
  EXPECT_NEAR(value_at(frac_integral(one, 0.5), 1.0), two_over_sqrt_pi, 1e-13);
  const auto same = frac_integral(decay, 0.0);
  EXPECT_EQ(same.values, decay.values);
  EXPECT_NEAR(value_at(frac_integral(frac_integral(ramp, 0.3), 0.7), 1.0), 0.5, 1e-12);
}

TEST(FracIntegral, Semigroup) {
  const double orders[] = {0.3, 0.7};
  for (const auto* f : {&one, &ramp, &decay}) {
    for (double a : orders) {
      for (double b : orders) {
        const auto lhs = frac_integral(frac_integral(*f, a), b);
        const auto rhs = frac_integral(*f, a + b);
        EXPECT_LT(max_rel_diff(lhs, rhs, 0.1), 1e-4) << a << " " << b;
      }
    }
  }
}

TEST(FracIntegral, PowerLawRule) {
  for (double gamma : {-0.5, 0.0, 0.5, 2.0}) {
    const auto f = sample([&](double t) { return std::pow(t, gamma); }, grid, gamma);
    for (double alpha : {0.25, 0.5, 1.5}) {
      const auto J = frac_integral(f, alpha);
      for (double t : {0.5, 1.0, 2.0}) {
        const double exact = power_law_rule(gamma, alpha, t, PowerRuleKind::integral);
        EXPECT_NEAR(value_at(J, t) / exact, 1.0, 1e-6) << gamma << " " << alpha << " " << t;
      }
    }
  }
}

TEST(FracIntegral, Errors) {
  EXPECT_EQ(kind_of([] { frac_integral(one, -0.1); }), ErrorKind::NonNegativeOrderViolation);
  auto singular = sample([](double t) { return 1.0 / t; }, grid, -1.0);
  EXPECT_EQ(kind_of([&] { frac_integral(singular, 0.5); }), ErrorKind::OriginTooSingular);
  auto worse = sample([](double t) { return std::pow(t, -1.2); }, grid, -1.2);
  EXPECT_EQ(kind_of([&] { frac_integral(worse, 1.5); }), ErrorKind::OriginTooSingular);
  // Any integrable singularity is accepted, whatever the order.
  auto mild = sample([](double t) { return std::pow(t, -0.6); }, grid, -0.6);
  EXPECT_NEAR(value_at(frac_integral(mild, 0.5), 1.0),
              power_law_rule(-0.6, 0.5, 1.0, PowerRuleKind::integral), 1e-10);
}

TEST(RLDerivative, Examples) {
  EXPECT_NEAR(value_at(rl_derivative(one, FractionalOrder::of(0.5)), 1.0),
              1.0 / std::sqrt(std::numbers::pi), 1e-12);
  for (double v : rl_derivative(ramp, FractionalOrder::of(1.0)).values) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(RLDerivative, LeftInverseOfIntegral) {
  for (double mu : {0.3, 0.5, 0.8}) {
    const auto back = rl_derivative(frac_integral(decay, mu), FractionalOrder::of(mu));
    EXPECT_LT(max_rel_diff(back, decay), 1e-3) << mu;
  }
}

TEST(RLDerivative, PowerLawRule) {
  for (double gamma : {0.5, 1.0, 2.0}) {
    const auto f = sample([&](double t) { return std::pow(t, gamma); }, grid, gamma);
    for (double mu : {0.3, 0.5}) {
      const auto D = rl_derivative(f, FractionalOrder::of(mu));
      for (double t : {0.5, 1.0, 2.0}) {
        const double exact = power_law_rule(gamma, mu, t, PowerRuleKind::derivative);
        EXPECT_NEAR(value_at(D, t) / exact, 1.0, 1e-6) << gamma << " " << mu << " " << t;
      }
    }
  }
}

TEST(RLDerivative, KernelTermsAreAnnihilated) {
  // t^{mu-1} lies in the kernel of D^mu for 0 < mu < 1, so adding it to a
  // signal leaves the derivative unchanged.
  for (double mu : {0.3, 0.5, 0.8}) {
    const auto k = sample([&](double t) { return 2.0 * std::pow(t, mu - 1.0); }, grid, mu - 1.0);
    for (double v : rl_derivative(k, FractionalOrder::of(mu)).values) EXPECT_LT(std::fabs(v), 1e-9);
  }
}

TEST(RLDerivative, MuTowardOneGivesFirstDerivative) {
  const auto d = rl_derivative(decay, FractionalOrder::of(1.0 - 1e-3));
  auto minus_decay = decay;
  for (auto& v : minus_decay.values) v = -v;
  EXPECT_LT(max_rel_diff(d, minus_decay, 0.5), 5e-2);
}

TEST(CaputoDerivative, Examples) {
  auto constant = sample([](double) { return 3.5; }, grid);
  for (double v : caputo_derivative(constant, FractionalOrder::of(0.5), {{3.5}}).values) {
    EXPECT_LT(std::fabs(v), 1e-12);
  }
  EXPECT_NEAR(value_at(caputo_derivative(ramp, FractionalOrder::of(0.5), {{0.0}}), 1.0),
              two_over_sqrt_pi, 1e-12);
  const auto d = caputo_derivative(decay, FractionalOrder::of(1.0), {{1.0}});
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(d.values[i], -decay.values[i], 1e-4);
}

TEST(CaputoDerivative, AnnihilatesLowDegreePolynomials) {
  const auto line = sample([](double t) { return 2.0 - 3.0 * t; }, grid);
  for (double v : caputo_derivative(line, FractionalOrder::of(1.5), {{2.0, -3.0}}).values) {
    EXPECT_LT(std::fabs(v), 1e-10);
  }
}

TEST(CaputoDerivative, MuTowardZeroSubtractsInitialValue) {
  const auto d = caputo_derivative(decay, FractionalOrder::of(1e-3), {{1.0}});
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double expected = decay.values[i] - 1.0;
    EXPECT_LT(std::fabs(d.values[i] / expected - 1.0), 5e-2) << grid[i];
  }
}

TEST(CaputoDerivative, InitialDataChecks) {
  EXPECT_EQ(kind_of([] { caputo_derivative(one, FractionalOrder::of(0.5), {}); }),
            ErrorKind::MissingInitialData);
  EXPECT_EQ(kind_of([] { caputo_derivative(one, FractionalOrder::of(1.5), {{1.0}}); }),
            ErrorKind::MissingInitialData);
  EXPECT_EQ(kind_of([] { caputo_derivative(one, FractionalOrder::of(0.5), {{INFINITY}}); }),
            ErrorKind::MissingInitialData);
}

TEST(RLCaputoGap, Examples) {
  EXPECT_NEAR(rl_caputo_gap({{1.0}}, FractionalOrder::of(0.5), 1.0), 1.0 / std::sqrt(std::numbers::pi),
              1e-15);
  for (double t : {0.1, 1.0, 7.0}) {
    EXPECT_EQ(rl_caputo_gap({{0.0, 0.0}}, FractionalOrder::of(1.5), t), 0.0);
  }
  EXPECT_EQ(kind_of([] { rl_caputo_gap({{1.0}}, FractionalOrder::of(1.0), 1.0); }),
            ErrorKind::IntegerOrder);
}

TEST(RLCaputoGap, MatchesDifferenceOfDerivatives) {
  const auto q = sample([](double t) { return 1.0 + t + 0.5 * t * t; }, grid);
  for (double mu : {0.3, 0.5, 0.8}) {
    const auto order = FractionalOrder::of(mu);
    const auto rl = rl_derivative(q, order);
    const auto cp = caputo_derivative(q, order, {{1.0}});
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double gap = rl_caputo_gap({{1.0}}, order, grid[i]);
      EXPECT_LT(std::fabs((rl.values[i] - cp.values[i]) / gap - 1.0), 1e-3) << mu << " " << grid[i];
    }
  }
  const auto lin = sample([](double t) { return 1.0 + t; }, linspace(0.01, 4.0, 400));
  const auto order = FractionalOrder::of(0.5);
  const double diff = value_at(rl_derivative(lin, order), 4.0) -
                      value_at(caputo_derivative(lin, order, {{1.0}}), 4.0);
  EXPECT_NEAR(diff / rl_caputo_gap({{1.0}}, order, 4.0), 1.0, 1e-3);
}

TEST(Composition, OrderOfOperatorsMatters) {
  // D^0.3 applied after the Caputo derivative of a constant gives 0, while
  // D^0.3 D^0.3 1 = D^0.6 1 = t^{-0.6} / Gamma(0.4) does not vanish.
  const auto order = FractionalOrder::of(0.3);
  const auto via_caputo = rl_derivative(caputo_derivative(one, order, {{1.0}}), order);
  const auto via_rl = rl_derivative(one, FractionalOrder::of(0.6));
  const double t = 1.0;
  EXPECT_LT(std::fabs(value_at(via_caputo, t)), 1e-12);
  EXPECT_GT(std::fabs(value_at(via_rl, t) - value_at(via_caputo, t)), 10 * 1e-3);
  EXPECT_NEAR(value_at(via_rl, t), special::reciprocal_gamma(0.4), 1e-10);
}

TEST(HilferDerivative, EndpointsAndMidpoint) {
  for (double mu : {0.3, 0.5, 0.8}) {
    const auto h0 = hilfer_derivative(decay, mu, 0.0);
    const auto h1 = hilfer_derivative(decay, mu, 1.0);
    const auto rl = rl_derivative(decay, FractionalOrder::of(mu));
    const auto cp = caputo_derivative(decay, FractionalOrder::of(mu), {{1.0}});
    for (std::size_t i = 0; i < decay.size(); ++i) {
      EXPECT_NEAR(h0.values[i], rl.values[i], 1e-12);
      EXPECT_NEAR(h1.values[i], cp.values[i], 1e-12);
    }
  }
  EXPECT_NEAR(value_at(hilfer_derivative(ramp, 0.5, 0.5), 1.0), two_over_sqrt_pi, 1e-12);
  EXPECT_EQ(kind_of([] { hilfer_derivative(one, 1.0, 0.5); }), ErrorKind::OrderOutOfRange);
  EXPECT_EQ(kind_of([] { hilfer_derivative(one, 0.5, -0.1); }), ErrorKind::OrderOutOfRange);
}

TEST(HilferDerivative, ContinuousInType) {
  const auto f = sample([](double t) { return 1.0 + std::sin(t); }, grid);
  for (double nu : {0.0, 0.3, 0.6, 0.999 - 1e-3}) {
    const auto a = hilfer_derivative(f, 0.5, nu);
    const auto b = hilfer_derivative(f, 0.5, nu + 1e-3);
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (grid[i] >= 0.1) m = std::max(m, std::fabs(a.values[i] - b.values[i]));
    }
    EXPECT_LT(m, 1e-2) << nu;
  }
}

TEST(PowerLawRule, Examples) {
  EXPECT_NEAR(power_law_rule(0.0, 0.5, 1.0, PowerRuleKind::integral), two_over_sqrt_pi, 1e-15);
  EXPECT_NEAR(power_law_rule(1.0, 1.0, 3.0, PowerRuleKind::derivative), 1.0, 1e-15);
  EXPECT_NEAR(power_law_rule(0.5, 0.5, 1.0, PowerRuleKind::derivative), 0.886226925452758, 1e-15);
  // D^2 t = 0: Gamma(0) is a pole.
  EXPECT_EQ(power_law_rule(1.0, 2.0, 1.5, PowerRuleKind::derivative), 0.0);
  EXPECT_EQ(kind_of([] { power_law_rule(-1.0, 0.5, 1.0, PowerRuleKind::integral); }),
            ErrorKind::GammaOutOfRange);
}

TEST(LaplaceRule, CaputoAndRL) {
  const auto f = sample([](double t) { return std::exp(-t); }, logspace(-4.0, std::log10(60.0), 800));
  const auto r = laplace_rule_check(f, FractionalOrder::of(0.5), {{1.0}}, 1.0);
  EXPECT_NEAR(r.caputo_rhs, -0.5, 1e-6);
  EXPECT_NEAR(r.caputo_lhs, r.caputo_rhs, 1e-4);
  EXPECT_NEAR(r.rl_rhs, 0.5, 1e-6);
  EXPECT_NEAR(r.rl_lhs, r.rl_rhs, 1e-4);

  const auto c = sample([](double) { return 1.0; }, logspace(-4.0, 2.0, 800));
  const auto k = laplace_rule_check(c, FractionalOrder::of(0.5), {{1.0}}, 2.0);
  EXPECT_NEAR(k.caputo_lhs, 0.0, 1e-12);
  EXPECT_NEAR(k.caputo_rhs, 0.0, 1e-8);
  EXPECT_NEAR(k.rl_lhs, std::sqrt(0.5), 1e-6);
  EXPECT_NEAR(k.rl_rhs, std::sqrt(0.5), 1e-6);
}
