#pragma once

/**
 * @file viscoelastic.hpp
 * @brief Linear viscoelastic models: material functions, the four types,
 * Laplace-domain reciprocity, hereditary responses and time spectra.
 *
 * Creep compliance and relaxation modulus share one representation,
 *
 *   J(t) = Jg + sum_n J_n [1 - e_nu(t / tau_n)] + J_plus t^nu / Gamma(1 + nu)
 *   G(t) = Ge + sum_n G_n e_nu(t / tau_n) + G_minus (impulse)
 *
 * with e_1(x) = exp(-x) and e_nu(x) = E_nu(-x^nu) for nu < 1. For nu = 1 the
 * impulse is delta(t) and is kept symbolic; for nu < 1 it is the integrable
 * t^{-nu} / Gamma(1 - nu) and is part of G(t).
 */

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracvisco/signal.hpp"

namespace fracvisco::visco {

enum class ModelFamily {
  hooke,
  newton,
  voigt,
  maxwell,
  zener,
  anti_zener,
  scott_blair,
  frac_voigt,
  frac_maxwell,
  frac_zener,
  frac_anti_zener,
  general_operator,
};

std::string_view to_string(ModelFamily f);
std::optional<ModelFamily> family_from_string(std::string_view name);

/// Coefficients of P(D) sigma = Q(D) epsilon with P = 1 + sum a_k D^k and
/// Q = m + sum b_k D^k. The orders p and q are the list lengths.
struct ModelSpec {
  ModelFamily family = ModelFamily::hooke;
  double m = 0.0;
  std::vector<double> a;
  std::vector<double> b;
  double nu = 1.0;

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }

  /// Throws InvalidModelCoefficients when the family's shape or positivity
  /// conditions fail, OrderOutOfRange for nu outside (0, 1].
  void validate() const;
};

/// Parses {"family": ..., "m": ..., "a": [...], "b": [...], "nu": ...}.
/// "p" and "q" may be given and must then match the list lengths. Unknown
/// fields and type errors raise MalformedModel.
ModelSpec parse_model_json(std::string_view text);
ModelSpec load_model(const std::string& path);

/// A non-negative value that may be +infinity. Never used in arithmetic.
struct Extended {
  bool infinite = false;
  double value = 0.0;

  static Extended finite(double v) { return {false, v}; }
  static Extended unbounded() { return {true, 0.0}; }

  /// 1/x with 0 and +infinity reciprocal.
  Extended reciprocal() const;
  std::string str() const;
};

struct Mode {
  double amplitude = 0.0;
  double tau = 0.0;
};

enum class ViscoType { I, II, III, IV };
std::string_view to_string(ViscoType t);

struct MaterialFunctions {
  double Jg = 0.0;
  std::vector<Mode> J_modes;
  double J_plus = 0.0;
  double Ge = 0.0;
  std::vector<Mode> G_modes;
  double G_minus = 0.0;
  double nu = 1.0;

  /// Equilibrium compliance (unbounded when J_plus > 0).
  Extended Je() const;
  /// Glass modulus (unbounded when G_minus > 0).
  Extended Gg() const;

  double creep(double t) const;
  /// G(t) without the delta impulse of classical models.
  double relaxation(double t) const;

  /// s J~(s) and s G~(s) as term sums; modes map to 1/(1 + (s tau)^nu).
  std::complex<double> s_creep_image(std::complex<double> s) const;
  std::complex<double> s_relaxation_image(std::complex<double> s) const;
};

MaterialFunctions material_functions(const ModelSpec& model);

ViscoType classify(const MaterialFunctions& mf);

/// |s J~(s) s G~(s) - 1| for Re s > 0. PoleHit when either image is not
/// finite there.
double reciprocity_residual(const ModelSpec& model, std::complex<double> s);
double reciprocity_residual(const MaterialFunctions& mf, std::complex<double> s);

enum class ResponseMode { stress_to_strain, strain_to_stress };

/// Hereditary response y(t) = x(0+) K(t) + int_0^t K(t - tau) x'(tau) dtau
/// with K = J or G. The input is taken piecewise linear between its samples
/// and between (0, value_at_zero) and its first sample; the kernel is
/// integrated exactly against each linear piece. A classical impulse adds
/// G_minus x'(t) using finite differences. NonCausalInput for histories
/// with a singular origin, GridTooCoarse when there are too few samples.
SampledSignal respond(const MaterialFunctions& mf, const SampledSignal& input, ResponseMode mode,
                      double value_at_zero);

/// Respond with x(0+) taken as the first sample.
SampledSignal respond(const MaterialFunctions& mf, const SampledSignal& input, ResponseMode mode);

/// Replace exponentials by Mittag-Leffler modes, t by t^nu / Gamma(1 + nu)
/// and delta by t^{-nu} / Gamma(1 - nu). Coefficients are kept; mode times
/// become tau^{1/nu} so that each mode keeps the image s^{nu-1}/(s^nu + 1/tau).
MaterialFunctions correspondence_map(const MaterialFunctions& mf, double nu);

/// Gross (Cole-Cole type) time spectrum of the Mittag-Leffler modes.
double gross_spectrum(double nu, double tau_star, double tau);

/// int_0^inf R(tau) dtau by quadrature in u = log(tau / tau_star).
double gross_normalization(double nu);

enum class SpectrumShape { monotonic_decreasing, min_then_max };
std::string_view to_string(SpectrumShape s);

/// Root of nu = sin(nu pi) in (0.5, 0.99), by bisection.
double gross_shape_threshold();
SpectrumShape spectrum_shape(double nu);

struct Spectrum {
  enum class Kind { discrete, gross };
  Kind kind = Kind::discrete;
  std::vector<Mode> weights;
  double nu = 0.5;
  double tau_star = 1.0;
  double alpha_or_beta = 1.0;

  static Spectrum discrete(std::vector<Mode> weights);
  static Spectrum gross(double nu, double tau_star, double total = 1.0);
};

enum class MaterialKind { creep, relaxation };

/// Psi(t) = alpha int R (1 - e^{-t/tau}) dtau or Phi(t) = beta int R e^{-t/tau} dtau.
double spectrum_to_material(const Spectrum& spec, double t, MaterialKind which);

}  // namespace fracvisco::visco
