#include "fracvisco/viscoelastic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>
#include <unsupported/Eigen/Polynomials>

#include "fracvisco/errors.hpp"
#include "fracvisco/frac_operators.hpp"
#include "fracvisco/gamma.hpp"
#include "fracvisco/mittag_leffler.hpp"
#include "fracvisco/quadrature.hpp"

namespace fracvisco::visco {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

constexpr std::array<std::pair<ModelFamily, std::string_view>, 12> kFamilyNames = {{
    {ModelFamily::hooke, "hooke"},
    {ModelFamily::newton, "newton"},
    {ModelFamily::voigt, "voigt"},
    {ModelFamily::maxwell, "maxwell"},
    {ModelFamily::zener, "zener"},
    {ModelFamily::anti_zener, "anti_zener"},
    {ModelFamily::scott_blair, "scott_blair"},
    {ModelFamily::frac_voigt, "frac_voigt"},
    {ModelFamily::frac_maxwell, "frac_maxwell"},
    {ModelFamily::frac_zener, "frac_zener"},
    {ModelFamily::frac_anti_zener, "frac_anti_zener"},
    {ModelFamily::general_operator, "general_operator"},
}};

[[noreturn]] void bad_model(const std::string& msg) {
  throw Error(ErrorKind::InvalidModelCoefficients, msg);
}

bool is_fractional(ModelFamily f) {
  switch (f) {
    case ModelFamily::scott_blair:
    case ModelFamily::frac_voigt:
    case ModelFamily::frac_maxwell:
    case ModelFamily::frac_zener:
    case ModelFamily::frac_anti_zener:
    case ModelFamily::general_operator: return true;
    default: return false;
  }
}

// The classical family a fractional one is mapped from.
ModelFamily classical_of(ModelFamily f) {
  switch (f) {
    case ModelFamily::scott_blair: return ModelFamily::newton;
    case ModelFamily::frac_voigt: return ModelFamily::voigt;
    case ModelFamily::frac_maxwell: return ModelFamily::maxwell;
    case ModelFamily::frac_zener: return ModelFamily::zener;
    case ModelFamily::frac_anti_zener: return ModelFamily::anti_zener;
    default: return f;
  }
}

void expect_sizes(const ModelSpec& s, std::size_t p, std::size_t q, bool m_positive) {
  const std::string name(to_string(s.family));
  if (s.a.size() != p || s.b.size() != q) {
    bad_model(name + " needs " + std::to_string(p) + " a-coefficient(s) and " + std::to_string(q) +
              " b-coefficient(s)");
  }
  if (m_positive && !(s.m > 0.0)) bad_model(name + " needs m > 0");
  if (!m_positive && s.m != 0.0) bad_model(name + " needs m = 0");
  for (double v : s.a) {
    if (!(v > 0.0)) bad_model(name + " needs positive a-coefficients");
  }
  for (double v : s.b) {
    if (!(v > 0.0)) bad_model(name + " needs positive b-coefficients");
  }
}

// Polynomial with coefficients in increasing powers.
struct Poly {
  std::vector<double> c;

  double operator()(double x) const {
    long double v = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return static_cast<double>(v);
  }
  double deriv(double x) const {
    long double v = 0.0L;
    for (std::size_t k = c.size(); k-- > 1;) v = v * x + static_cast<long double>(k) * c[k];
    return static_cast<double>(v);
  }
};

// Real negative simple zeros, polished by Newton steps. Empty for degree 0.
std::vector<double> negative_real_roots(const Poly& poly, const char* name) {
  const std::size_t deg = poly.c.size() - 1;
  std::vector<double> roots;
  if (deg == 0) return roots;
  Eigen::VectorXd coeffs(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) coeffs[static_cast<Eigen::Index>(k)] = poly.c[k];
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
  for (const auto& r : solver.roots()) {
    const double scale = std::max(1.0, std::abs(r));
    if (std::abs(r.imag()) > 1e-8 * scale) {
      bad_model(std::string(name) + "(s) has a non-real zero");
    }
    double x = r.real();
    for (int it = 0; it < 4; ++it) {
      const double d = poly.deriv(x);
      if (d == 0.0) break;
      x -= poly(x) / d;
    }
    if (!(x < 0.0)) bad_model(std::string(name) + "(s) has a zero that is not negative");
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end(), [](double l, double r) { return std::abs(l) < std::abs(r); });
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i] - roots[i - 1]) <= 1e-9 * std::abs(roots[i])) {
      bad_model(std::string(name) + "(s) has a repeated zero");
    }
  }
  return roots;
}

// Material functions of P(D) sigma = Q(D) eps from the partial fractions of
// s J~ = P/Q and s G~ = Q/P, after checking that the zeros alternate.
MaterialFunctions from_operator(const ModelSpec& s) {
  const int p = s.p();
  const int q = s.q();
  if (!(q == p || q == p + 1)) bad_model("general_operator needs q = p or q = p + 1");
  if (q == 0 && !(s.m > 0.0)) bad_model("general_operator with q = 0 needs m > 0");
  if (p > 0 && !(s.a.back() > 0.0)) bad_model("leading a-coefficient must be positive");
  if (q > 0 && !(s.b.back() > 0.0)) bad_model("leading b-coefficient must be positive");
  if (s.m == 0.0 && !(s.b.front() > 0.0)) bad_model("m = 0 needs b1 > 0 (simple zero of Q at 0)");

  Poly P{{1.0}};
  P.c.insert(P.c.end(), s.a.begin(), s.a.end());
  Poly Q{{s.m}};
  Q.c.insert(Q.c.end(), s.b.begin(), s.b.end());

  const auto pz = negative_real_roots(P, "P");
  std::vector<double> qz;
  if (s.m == 0.0) {
    qz = negative_real_roots(Poly{std::vector<double>(s.b.begin(), s.b.end())}, "Q");
  } else {
    qz = negative_real_roots(Q, "Q");
  }

  // Interlacing, starting from the zero of Q closest to the origin.
  std::vector<std::pair<double, char>> all;
  if (s.m == 0.0) all.emplace_back(0.0, 'Q');
  for (double z : qz) all.emplace_back(std::abs(z), 'Q');
  for (double z : pz) all.emplace_back(std::abs(z), 'P');
  std::stable_sort(all.begin(), all.end(), [](auto& l, auto& r) { return l.first < r.first; });
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].second != (i % 2 == 0 ? 'Q' : 'P')) {
      bad_model("zeros of P and Q do not alternate with the smallest one belonging to Q");
    }
  }

  MaterialFunctions mf;
  const double a_lead = p > 0 ? s.a.back() : 1.0;
  if (q == p) mf.Jg = (q == 0 ? 1.0 / s.m : a_lead / s.b.back());
  if (s.m == 0.0) mf.J_plus = 1.0 / s.b.front();
  for (double z : qz) {
    const double tau = -1.0 / z;
    const double amp = tau * P(z) / Q.deriv(z);
    if (!(amp > 0.0)) bad_model("non-positive retardation amplitude");
    mf.J_modes.push_back({amp, tau});
  }
  mf.Ge = s.m;
  if (q == p + 1) mf.G_minus = s.b.back() / a_lead;
  for (double z : pz) {
    const double tau = -1.0 / z;
    const double amp = Q(z) / (z * P.deriv(z));
    if (!(amp > 0.0)) bad_model("non-positive relaxation amplitude");
    mf.G_modes.push_back({amp, tau});
  }
  return mf;
}

MaterialFunctions classical(const ModelSpec& s, ModelFamily family) {
  MaterialFunctions mf;
  const double m = s.m;
  switch (family) {
    case ModelFamily::hooke:
      mf.Jg = 1.0 / m;
      mf.Ge = m;
      break;
    case ModelFamily::newton:
      mf.J_plus = 1.0 / s.b[0];
      mf.G_minus = s.b[0];
      break;
    case ModelFamily::voigt:
      mf.J_modes.push_back({1.0 / m, s.b[0] / m});
      mf.Ge = m;
      mf.G_minus = s.b[0];
      break;
    case ModelFamily::maxwell: {
      const double a1 = s.a[0], b1 = s.b[0];
      mf.Jg = a1 / b1;
      mf.J_plus = 1.0 / b1;
      mf.G_modes.push_back({b1 / a1, a1});
      break;
    }
    case ModelFamily::zener: {
      const double a1 = s.a[0], b1 = s.b[0];
      mf.Jg = a1 / b1;
      mf.J_modes.push_back({1.0 / m - a1 / b1, b1 / m});
      mf.Ge = m;
      mf.G_modes.push_back({b1 / a1 - m, a1});
      break;
    }
    case ModelFamily::anti_zener: {
      const double a1 = s.a[0], b1 = s.b[0], b2 = s.b[1];
      mf.J_plus = 1.0 / b1;
      mf.J_modes.push_back({a1 / b1 - b2 / (b1 * b1), b2 / b1});
      mf.G_minus = b2 / a1;
      mf.G_modes.push_back({b1 / a1 - b2 / (a1 * a1), a1});
      break;
    }
    default: return from_operator(s);
  }
  return mf;
}

// e_nu(x): exp(-x) or E_nu(-x^nu).
double relax_mode(double x, double nu) {
  if (nu == 1.0) return std::exp(-x);
  return special::ml1(nu, -std::pow(x, nu)).value;
}

// 1 - e_nu(x) without cancellation: E_nu(z) = 1 + z E_{nu,nu+1}(z).
double creep_mode(double x, double nu) {
  if (nu == 1.0) return -std::expm1(-x);
  const double y = std::pow(x, nu);
  return y * special::ml2(nu, nu + 1.0, -y).value;
}

// int_0^u e_nu(v / tau) dv = u E_{nu,2}(-(u/tau)^nu).
double relax_mode_primitive(double u, double tau, double nu) {
  const double x = u / tau;
  if (nu == 1.0) return -tau * std::expm1(-x);
  return u * special::ml2(nu, 2.0, -std::pow(x, nu)).value;
}

// int_0^u [1 - e_nu(v / tau)] dv = u y E_{nu,nu+2}(-y), y = (u/tau)^nu.
double creep_mode_primitive(double u, double tau, double nu) {
  const double x = u / tau;
  if (nu == 1.0 && x > 1.0) return tau * (x + std::expm1(-x));
  const double y = std::pow(x, nu);
  return u * y * special::ml2(nu, nu + 2.0, -y).value;
}

// (s tau)^nu with the exact product for nu = 1.
cplx scaled_power(cplx s, double tau, double nu) {
  return nu == 1.0 ? s * tau : std::pow(s * tau, nu);
}

}  // namespace

std::string_view to_string(ModelFamily f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

std::optional<ModelFamily> family_from_string(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

std::string_view to_string(ViscoType t) {
  switch (t) {
    case ViscoType::I: return "I";
    case ViscoType::II: return "II";
    case ViscoType::III: return "III";
    case ViscoType::IV: return "IV";
  }
  return "?";
}

std::string_view to_string(SpectrumShape s) {
  return s == SpectrumShape::monotonic_decreasing ? "monotonic_decreasing" : "min_then_max";
}

void ModelSpec::validate() const {
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw Error(ErrorKind::OrderOutOfRange, "nu must lie in (0, 1], got " + std::to_string(nu));
  }
  if (!is_fractional(family) && nu != 1.0) {
    throw Error(ErrorKind::OrderOutOfRange,
                std::string(to_string(family)) + " is classical and needs nu = 1");
  }
  if (!(std::isfinite(m) && m >= 0.0)) bad_model("m must be finite and non-negative");
  for (const auto* list : {&a, &b}) {
    for (double v : *list) {
      if (!(std::isfinite(v) && v >= 0.0)) bad_model("coefficients must be finite and non-negative");
    }
  }
  switch (classical_of(family)) {
    case ModelFamily::hooke: expect_sizes(*this, 0, 0, true); break;
    case ModelFamily::newton: expect_sizes(*this, 0, 1, false); break;
    case ModelFamily::voigt: expect_sizes(*this, 0, 1, true); break;
    case ModelFamily::maxwell: expect_sizes(*this, 1, 1, false); break;
    case ModelFamily::zener:
      expect_sizes(*this, 1, 1, true);
      if (!(m < b[0] / a[0])) {
        bad_model("zener needs 0 < m < b1/a1 (m = " + std::to_string(m) +
                  ", b1/a1 = " + std::to_string(b[0] / a[0]) + ")");
      }
      break;
    case ModelFamily::anti_zener:
      expect_sizes(*this, 1, 2, false);
      if (!(b[1] / b[0] < a[0])) {
        bad_model("anti_zener needs 0 < b2/b1 < a1 (b2/b1 = " + std::to_string(b[1] / b[0]) +
                  ", a1 = " + std::to_string(a[0]) + ")");
      }
      break;
    default: from_operator(*this); break;
  }
}

ModelSpec parse_model_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedModel, std::string("model JSON does not parse: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::MalformedModel, "model JSON must be an object");

  auto number = [](const json& v, const std::string& key) {
    if (!v.is_number()) throw Error(ErrorKind::MalformedModel, "field '" + key + "' must be a number");
    return v.get<double>();
  };
  auto numbers = [&](const json& v, const std::string& key) {
    if (!v.is_array()) throw Error(ErrorKind::MalformedModel, "field '" + key + "' must be an array");
    std::vector<double> out;
    for (const auto& x : v) out.push_back(number(x, key));
    return out;
  };

  ModelSpec spec;
  std::optional<long long> p, q;
  bool have_family = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "family") {
      if (!value.is_string()) throw Error(ErrorKind::MalformedModel, "field 'family' must be a string");
      const auto fam = family_from_string(value.get<std::string>());
      if (!fam) {
        throw Error(ErrorKind::MalformedModel, "unknown family '" + value.get<std::string>() + "'");
      }
      spec.family = *fam;
      have_family = true;
    } else if (key == "m") {
      spec.m = number(value, key);
    } else if (key == "a") {
      spec.a = numbers(value, key);
    } else if (key == "b") {
      spec.b = numbers(value, key);
    } else if (key == "nu") {
      spec.nu = number(value, key);
    } else if (key == "p" || key == "q") {
      if (!value.is_number_integer()) {
        throw Error(ErrorKind::MalformedModel, "field '" + key + "' must be an integer");
      }
      (key == "p" ? p : q) = value.get<long long>();
    } else {
      throw Error(ErrorKind::MalformedModel, "unknown field '" + key + "'");
    }
  }
  if (!have_family) throw Error(ErrorKind::MalformedModel, "missing field 'family'");
  if (p && *p != spec.p()) bad_model("p does not match the number of a-coefficients");
  if (q && *q != spec.q()) bad_model("q does not match the number of b-coefficients");
  spec.validate();
  return spec;
}

ModelSpec load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot open model file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

Extended Extended::reciprocal() const {
  if (infinite) return finite(0.0);
  if (value == 0.0) return unbounded();
  return finite(1.0 / value);
}

std::string Extended::str() const {
  if (infinite) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Extended MaterialFunctions::Je() const {
  if (J_plus > 0.0) return Extended::unbounded();
  double v = Jg;
  for (const auto& mode : J_modes) v += mode.amplitude;
  return Extended::finite(v);
}

Extended MaterialFunctions::Gg() const {
  if (G_minus > 0.0) return Extended::unbounded();
  double v = Ge;
  for (const auto& mode : G_modes) v += mode.amplitude;
  return Extended::finite(v);
}

double MaterialFunctions::creep(double t) const {
  double v = Jg;
  for (const auto& mode : J_modes) v += mode.amplitude * creep_mode(t / mode.tau, nu);
  if (J_plus != 0.0) v += J_plus * std::pow(t, nu) * special::reciprocal_gamma(1.0 + nu);
  return v;
}

double MaterialFunctions::relaxation(double t) const {
  double v = Ge;
  for (const auto& mode : G_modes) v += mode.amplitude * relax_mode(t / mode.tau, nu);
  if (G_minus != 0.0 && nu < 1.0) v += G_minus * std::pow(t, -nu) * special::reciprocal_gamma(1.0 - nu);
  return v;
}

std::complex<double> MaterialFunctions::s_creep_image(std::complex<double> s) const {
  cplx v = Jg;
  for (const auto& mode : J_modes) v += mode.amplitude / (1.0 + scaled_power(s, mode.tau, nu));
  if (J_plus != 0.0) v += J_plus / (nu == 1.0 ? s : std::pow(s, nu));
  return v;
}

std::complex<double> MaterialFunctions::s_relaxation_image(std::complex<double> s) const {
  cplx v = Ge;
  for (const auto& mode : G_modes) {
    const cplx w = scaled_power(s, mode.tau, nu);
    v += mode.amplitude * w / (1.0 + w);
  }
  if (G_minus != 0.0) v += G_minus * (nu == 1.0 ? s : std::pow(s, nu));
  return v;
}

MaterialFunctions material_functions(const ModelSpec& model) {
  model.validate();
  MaterialFunctions mf = classical(model, classical_of(model.family));
  if (model.nu != 1.0) mf = correspondence_map(mf, model.nu);
  return mf;
}

ViscoType classify(const MaterialFunctions& mf) {
  if (mf.Jg > 0.0) return mf.J_plus == 0.0 ? ViscoType::I : ViscoType::II;
  return mf.J_plus == 0.0 ? ViscoType::III : ViscoType::IV;
}

double reciprocity_residual(const MaterialFunctions& mf, std::complex<double> s) {
  if (!(s.real() > 0.0)) {
    throw Error(ErrorKind::InvalidSignal, "reciprocity is checked for Re s > 0 only");
  }
  const cplx sj = mf.s_creep_image(s);
  const cplx sg = mf.s_relaxation_image(s);
  if (!std::isfinite(std::abs(sj)) || !std::isfinite(std::abs(sg)) || sj == 0.0 || sg == 0.0) {
    throw Error(ErrorKind::PoleHit, "material image is singular at the requested s");
  }
  return std::abs(sj * sg - 1.0);
}

double reciprocity_residual(const ModelSpec& model, std::complex<double> s) {
  return reciprocity_residual(material_functions(model), s);
}

SampledSignal respond(const MaterialFunctions& mf, const SampledSignal& input, ResponseMode mode,
                      double value_at_zero) {
  if (input.origin_exponent != 0.0 || input.impulse_coeff != 0.0) {
    throw Error(ErrorKind::NonCausalInput, "response input must be a bounded history");
  }
  if (!input.grid.empty() && !(input.grid.front() > 0.0)) {
    throw Error(ErrorKind::NonCausalInput, "response input grid must start after t = 0");
  }
  input.validate();
  const bool strain_in = mode == ResponseMode::strain_to_stress;
  const bool impulse = strain_in && mf.nu == 1.0 && mf.G_minus != 0.0;
  if (input.size() < (impulse ? 3u : 2u)) {
    throw Error(ErrorKind::GridTooCoarse, "response input needs more samples");
  }
  if (!std::isfinite(value_at_zero)) throw Error(ErrorKind::InvalidSignal, "value at 0+ is not finite");

  // The constant part c of the kernel contributes c x(t) exactly; the rest
  // vanishes at the origin or is integrable there.
  const double nu = mf.nu;
  const double c = strain_in ? mf.Ge : mf.Jg;
  auto kernel = [&](double u) { return (strain_in ? mf.relaxation(u) : mf.creep(u)) - c; };
  auto primitive = [&](double u) {
    if (u <= 0.0) return 0.0;
    double v = 0.0;
    if (strain_in) {
      for (const auto& md : mf.G_modes) v += md.amplitude * relax_mode_primitive(u, md.tau, nu);
      if (mf.G_minus != 0.0 && nu < 1.0) {
        v += mf.G_minus * std::pow(u, 1.0 - nu) * special::reciprocal_gamma(2.0 - nu);
      }
    } else {
      for (const auto& md : mf.J_modes) v += md.amplitude * creep_mode_primitive(u, md.tau, nu);
      if (mf.J_plus != 0.0) v += mf.J_plus * std::pow(u, 1.0 + nu) * special::reciprocal_gamma(2.0 + nu);
    }
    return v;
  };

  const std::size_t n = input.size();
  std::vector<double> nodes(n + 1), xs(n + 1);
  nodes[0] = 0.0;
  xs[0] = value_at_zero;
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i + 1] = input.grid[i];
    xs[i + 1] = input.values[i];
  }

  SampledSignal out;
  out.grid = input.grid;
  out.values.assign(n, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = nodes[i];
    double y = c * xs[i];
    if (value_at_zero != 0.0) y += value_at_zero * kernel(t);
    for (std::size_t k = 1; k <= i; ++k) {
      const double slope = (xs[k] - xs[k - 1]) / (nodes[k] - nodes[k - 1]);
      if (slope == 0.0) continue;
      y += slope * (primitive(t - nodes[k - 1]) - primitive(t - nodes[k]));
    }
    out.values[i - 1] = y;
  }
  if (impulse) {
    const auto rate = ops::derivative(input);
    for (std::size_t i = 0; i < n; ++i) out.values[i] += mf.G_minus * rate.values[i];
  }
  return out;
}

SampledSignal respond(const MaterialFunctions& mf, const SampledSignal& input, ResponseMode mode) {
  if (input.values.empty()) throw Error(ErrorKind::GridTooCoarse, "response input is empty");
  return respond(mf, input, mode, input.values.front());
}

MaterialFunctions correspondence_map(const MaterialFunctions& mf, double nu) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw Error(ErrorKind::OrderOutOfRange, "correspondence order must lie in (0, 1]");
  }
  if (mf.nu != 1.0) {
    throw Error(ErrorKind::OrderOutOfRange, "correspondence map starts from a classical model");
  }
  MaterialFunctions out = mf;
  out.nu = nu;
  if (nu == 1.0) return out;
  for (auto* modes : {&out.J_modes, &out.G_modes}) {
    for (auto& md : *modes) md.tau = std::pow(md.tau, 1.0 / nu);
  }
  return out;
}

namespace {

void check_gross_order(double nu) {
  if (!(nu > 0.0 && nu < 1.0)) {
    throw Error(ErrorKind::OrderOutOfRange, "Gross spectrum needs 0 < nu < 1, got " + std::to_string(nu));
  }
}

// tau R(tau) as a density in u = log(tau / tau_star). Uses
// 2 cosh(nu u) + 2 cos(nu pi) = 4 sinh^2(nu u / 2) + 4 cos^2(nu pi / 2).
double gross_log_density(double nu, double u) {
  const double sh = std::sinh(0.5 * nu * u);
  const double c = std::cos(0.5 * nu * kPi);
  return std::sin(nu * kPi) / (4.0 * kPi * (sh * sh + c * c));
}

// Half-width of the u-range; the density decays like exp(-nu |u|).
double gross_range(double nu) { return 40.0 / nu; }

template <class F>
double integrate_or_throw(F&& f, std::vector<double> cuts, const char* what) {
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (cuts[i] <= cuts[i - 1]) continue;
    const auto r = quad::integrate(f, cuts[i - 1], cuts[i], 1e-14, 1e-12, 4000);
    if (!r.converged) {
      throw Error(ErrorKind::QuadratureNonConvergence, std::string(what) + " quadrature did not converge");
    }
    total += r.value;
  }
  return total;
}

}  // namespace

double gross_spectrum(double nu, double tau_star, double tau) {
  check_gross_order(nu);
  if (!(tau_star > 0.0 && tau > 0.0)) {
    throw Error(ErrorKind::OrderOutOfRange, "Gross spectrum needs positive times");
  }
  return gross_log_density(nu, std::log(tau / tau_star)) / tau;
}

double gross_normalization(double nu) {
  check_gross_order(nu);
  const double U = gross_range(nu);
  return integrate_or_throw([nu](double u) { return gross_log_density(nu, u); },
                            {-U, -1.0, 0.0, 1.0, U}, "normalization");
}

double gross_shape_threshold() {
  double lo = 0.5, hi = 0.99;
  auto g = [](double v) { return std::sin(v * kPi) - v; };
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SpectrumShape spectrum_shape(double nu) {
  check_gross_order(nu);
  return nu < gross_shape_threshold() ? SpectrumShape::monotonic_decreasing : SpectrumShape::min_then_max;
}

Spectrum Spectrum::discrete(std::vector<Mode> weights) {
  Spectrum s;
  s.kind = Kind::discrete;
  s.alpha_or_beta = 0.0;
  for (const auto& w : weights) {
    if (!(w.amplitude > 0.0 && w.tau > 0.0)) bad_model("spectral weights and times must be positive");
    s.alpha_or_beta += w.amplitude;
  }
  s.weights = std::move(weights);
  return s;
}

Spectrum Spectrum::gross(double nu, double tau_star, double total) {
  check_gross_order(nu);
  if (!(tau_star > 0.0 && total > 0.0)) bad_model("Gross spectrum needs tau* > 0 and a positive total");
  Spectrum s;
  s.kind = Kind::gross;
  s.nu = nu;
  s.tau_star = tau_star;
  s.alpha_or_beta = total;
  return s;
}

double spectrum_to_material(const Spectrum& spec, double t, MaterialKind which) {
  if (!(t > 0.0)) throw Error(ErrorKind::InvalidSignal, "spectral material functions need t > 0");
  const bool creep = which == MaterialKind::creep;
  if (spec.kind == Spectrum::Kind::discrete) {
    double v = 0.0;
    for (const auto& w : spec.weights) {
      v += w.amplitude * (creep ? -std::expm1(-t / w.tau) : std::exp(-t / w.tau));
    }
    return v;
  }
  const double nu = spec.nu;
  const double x = t / spec.tau_star;
  const double U = gross_range(nu);
  const double L = std::clamp(std::log(x), -U, U);
  auto f = [&](double u) {
    const double r = x * std::exp(-u);
    return gross_log_density(nu, u) * (creep ? -std::expm1(-r) : std::exp(-r));
  };
  return spec.alpha_or_beta * integrate_or_throw(f, {-U, std::min(0.0, L), std::max(0.0, L), U},
                                                 creep ? "creep" : "relaxation");
}

}  // namespace fracvisco::visco
