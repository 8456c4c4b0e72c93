#include "fracvisco/laplace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fracvisco/quadrature.hpp"

namespace fracvisco::laplace {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<double, 4> kGLNodes = {0.1834346424956498, 0.5255324099163290,
                                            0.7966664774136267, 0.9602898564975363};
constexpr std::array<double, 4> kGLWeights = {0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};

// Beyond this value of Re(s) * T the tail is below double resolution for any
// bounded signal.
constexpr double kTailNegligible = 30.0;

// int_a^b t^p (ga + (gb - ga)(t - a)/(b - a)) e^{-st} dt by Gauss-Legendre,
// split so that neither the exponential nor the power varies too fast on a
// piece.
cplx segment(double a, double b, double ga, double gb, double p, cplx s) {
  const double h = b - a;
  int pieces = static_cast<int>(std::ceil(std::abs(s) * h / 2.0));
  if (p != 0.0) pieces = std::max(pieces, static_cast<int>(std::ceil(std::log(b / a) / std::log(1.5))));
  pieces = std::max(pieces, 1);
  const double slope = (gb - ga) / h;
  cplx total = 0.0;
  for (int j = 0; j < pieces; ++j) {
    const double lo = a + h * j / pieces;
    const double hi = (j + 1 == pieces) ? b : a + h * (j + 1) / pieces;
    const double c = 0.5 * (lo + hi);
    const double r = 0.5 * (hi - lo);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < kGLNodes.size(); ++k) {
      for (double sign : {-1.0, 1.0}) {
        const double t = c + sign * r * kGLNodes[k];
        double v = ga + slope * (t - a);
        if (p != 0.0) v *= std::pow(t, p);
        acc += kGLWeights[k] * v * std::exp(-s * t);
      }
    }
    total += r * acc;
  }
  return total;
}

// Product quadrature over the grid restricted to the given node indices.
cplx grid_integral(const SampledSignal& f, const std::vector<double>& g,
                   const std::vector<std::size_t>& nodes, cplx s) {
  cplx total = 0.0;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const std::size_t i = nodes[k];
    const std::size_t j = nodes[k + 1];
    total += segment(f.grid[i], f.grid[j], g[i], g[j], f.origin_exponent, s);
  }
  return total;
}

// int_0^eps t^q e^{-st} dt, q > -1.
cplx origin_power_integral(double q, double eps, cplx s) {
  const cplx x = s * eps;
  if (std::abs(x) <= 8.0) {
    // sum_k (-x)^k / (k! (q + k + 1)), in extended precision.
    std::complex<long double> term = 1.0L;
    std::complex<long double> sum = 0.0L;
    const std::complex<long double> mx(-x.real(), -x.imag());
    for (int k = 0; k < 200; ++k) {
      const auto add = term / static_cast<long double>(q + k + 1.0);
      sum += add;
      if (std::abs(add) < 1e-21L * std::abs(sum) && k > 4) break;
      term *= mx / static_cast<long double>(k + 1);
    }
    return std::pow(eps, q + 1.0) * cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
  }
  // t = eps u^{1/(q+1)} removes the singularity.
  const double inv = 1.0 / (q + 1.0);
  cplx acc = 0.0;
  constexpr int kPieces = 64;
  for (int j = 0; j < kPieces; ++j) {
    const double c = (j + 0.5) / kPieces;
    const double r = 0.5 / kPieces;
    for (std::size_t k = 0; k < kGLNodes.size(); ++k) {
      for (double sign : {-1.0, 1.0}) {
        const double u = c + sign * r * kGLNodes[k];
        acc += r * kGLWeights[k] * std::exp(-x * std::pow(u, inv));
      }
    }
  }
  return std::pow(eps, q + 1.0) * inv * acc;
}

// int_T^inf (t/T)^{-q} e^{-st} dt, along the ray where e^{-s u} decays
// monotonically.
cplx power_tail(double q, double T, cplx s) {
  const double mod = std::abs(s);
  const cplx dir = std::conj(s) / mod;  // e^{-i arg s}
  const cplx c = dir / (mod * T);
  auto part = [&](bool imag) {
    return quad::integrate(
        [&](double w) {
          const cplx v = std::pow(1.0 + w * c, -q) * std::exp(-w);
          return imag ? v.imag() : v.real();
        },
        0.0, 50.0, 1e-14, 1e-13);
  };
  const auto re = part(false);
  const auto im = part(true);
  return std::exp(-s * T) * dir / mod * cplx(re.value, im.value);
}

cplx tail_integral(const SampledSignal& f, const TailModel& model, cplx s) {
  const double T = f.grid.back();
  const double fT = f.values.back();
  if (model.kind == TailKind::none || s.real() * T >= kTailNegligible) return 0.0;
  switch (model.kind) {
    case TailKind::exponential:
      if (!(s.real() + model.rate > 0.0)) {
        throw Error(ErrorKind::InsufficientTailCoverage,
                    "exponential tail rate does not make the transform converge");
      }
      return fT * std::exp(-s * T) / (s + model.rate);
    case TailKind::power:
      return fT * power_tail(model.exponent, T, s);
    case TailKind::power_fit: {
      const double start = T / 10.0;
      if (f.grid.front() > start) {
        throw Error(ErrorKind::InsufficientTailCoverage,
                    "grid does not span a decade for the tail fit and Re(s) * t_max = " +
                        std::to_string(s.real() * T) + " < 30; declare a tail model");
      }
      std::vector<double> lx, ly;
      bool all_zero = true;
      bool mixed = false;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.grid[i] < start) continue;
        const double v = f.values[i];
        if (v != 0.0) all_zero = false;
        if (v == 0.0 || (v > 0.0) != (fT > 0.0)) {
          mixed = true;
          continue;
        }
        lx.push_back(std::log(f.grid[i]));
        ly.push_back(std::log(std::fabs(v)));
      }
      if (all_zero) return 0.0;
      if (mixed || lx.size() < 4) {
        throw Error(ErrorKind::InsufficientTailCoverage,
                    "last decade of samples does not look like power-law decay; declare a tail model");
      }
      const double n = static_cast<double>(lx.size());
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
      }
      const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      return fT * power_tail(-slope, T, s);
    }
    case TailKind::none:
      break;
  }
  return 0.0;
}

void check_finite(cplx v, cplx s) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorKind::ContourEvaluationFailure,
                "image is not finite at s = (" + std::to_string(s.real()) + ", " +
                    std::to_string(s.imag()) + ")");
  }
}

}  // namespace

ForwardResult laplace_forward_detailed(const SampledSignal& f, cplx s, const ForwardOptions& opt) {
  f.validate();
  if (!(s.real() > 0.0)) {
    throw Error(ErrorKind::InvalidSignal, "forward transform needs Re(s) > 0");
  }
  const double p = f.origin_exponent;
  if (!(p > -1.0)) {
    throw Error(ErrorKind::OriginTooSingular,
                "origin exponent " + std::to_string(p) + " is not integrable");
  }
  if (f.size() < 5) {
    throw Error(ErrorKind::GridTooCoarse, "forward transform needs at least 5 samples");
  }

  std::vector<double> g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = f.regular_part(i);

  // [0, t_0]: g extended linearly from the first two samples.
  const double t0 = f.grid[0];
  const double b = (g[1] - g[0]) / (f.grid[1] - t0);
  const double c0 = g[0] - b * t0;
  const cplx origin = c0 * origin_power_integral(p, t0, s) + b * origin_power_integral(p + 1.0, t0, s);

  auto every = [&](std::size_t stride) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < f.size(); i += stride) nodes.push_back(i);
    if (nodes.back() != f.size() - 1) nodes.push_back(f.size() - 1);
    return nodes;
  };
  const cplx i1 = grid_integral(f, g, every(1), s);
  const cplx i2 = grid_integral(f, g, every(2), s);
  const cplx i4 = grid_integral(f, g, every(4), s);
  // Linear interpolation error is O(h^2): one Richardson step, with the same
  // step on the coarser pair to estimate what is left.
  const cplx body = i1 + (i1 - i2) / 3.0;
  const cplx body_coarse = i2 + (i2 - i4) / 3.0;
  const double err = std::abs(body - body_coarse);

  ForwardResult out;
  out.value = origin + body + tail_integral(f, opt.tail, s) + f.impulse_coeff;
  out.est_abs_error = err;
  if (err > opt.tolerance * std::max(1.0, std::abs(out.value))) {
    throw Error(ErrorKind::GridTooCoarse,
                "estimated quadrature error " + std::to_string(err) + " exceeds tolerance");
  }
  return out;
}

double invert_talbot(const SDomainFunction& F, double t, int nodes) {
  if (!(t > 0.0)) throw Error(ErrorKind::InvalidSignal, "inversion time must be positive");
  const double shift = F.abscissa;
  auto image = [&](cplx s) {
    const cplx v = F.eval(s + shift);
    check_finite(v, s + shift);
    return v;
  };
  const int M = nodes;
  const double r = 2.0 * M / (5.0 * t);
  double acc = 0.5 * (image(cplx(r, 0.0)) * std::exp(r * t)).real();
  for (int k = 1; k < M; ++k) {
    const double theta = k * kPi / M;
    const double cot = std::cos(theta) / std::sin(theta);
    const cplx s = r * theta * cplx(cot, 1.0);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    acc += (std::exp(t * s) * image(s) * cplx(1.0, sigma)).real();
  }
  return std::exp(shift * t) * r / M * acc;
}

double invert_gaver_stehfest(const SDomainFunction& F, double t, int terms) {
  if (!(t > 0.0)) throw Error(ErrorKind::InvalidSignal, "inversion time must be positive");
  if (terms % 2 != 0 || terms < 2 || terms > 16) {
    throw Error(ErrorKind::InvalidSignal, "Gaver-Stehfest needs an even term count <= 16");
  }
  const double shift = F.abscissa;
  const int half = terms / 2;
  auto fact = [](int n) {
    long double v = 1.0L;
    for (int i = 2; i <= n; ++i) v *= i;
    return v;
  };
  const long double ln2 = std::numbers::ln2_v<long double>;
  long double acc = 0.0L;
  for (int k = 1; k <= terms; ++k) {
    long double vk = 0.0L;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      vk += std::pow(static_cast<long double>(j), half) * fact(2 * j) /
            (fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k));
    }
    if ((k + half) % 2 != 0) vk = -vk;
    const double s = static_cast<double>(k * ln2 / t) + shift;
    const cplx v = F.eval(cplx(s, 0.0));
    check_finite(v, s);
    acc += vk * static_cast<long double>(v.real());
  }
  return std::exp(shift * t) * static_cast<double>(acc * ln2 / t);
}

InversionResult laplace_invert(const SDomainFunction& F, const std::vector<double>& times,
                               InversionMethod method) {
  InversionResult out;
  out.signal.grid = times;
  out.signal.values.reserve(times.size());
  for (double t : times) {
    if (!(t > 0.0)) throw Error(ErrorKind::InvalidSignal, "inversion times must be positive");
    if (method == InversionMethod::gaver_stehfest) {
      out.signal.values.push_back(invert_gaver_stehfest(F, t));
      continue;
    }
    const double a = invert_talbot(F, t);
    out.signal.values.push_back(a);
    if (method == InversionMethod::both) {
      const double b = invert_gaver_stehfest(F, t);
      const double scale = std::max(std::fabs(a), std::fabs(b));
      const double rel = scale > 0.0 ? std::fabs(a - b) / scale : 0.0;
      out.max_rel_disagreement = std::max(out.max_rel_disagreement, rel);
    }
  }
  if (method == InversionMethod::both && out.max_rel_disagreement > 1e-6) {
    out.warnings.push_back(ErrorKind::DisagreementWarning);
  }
  return out;
}

cplx rational_image(const std::vector<double>& p, const std::vector<double>& q, cplx s) {
  std::vector<double> pe(p.size()), qe(q.size());
  for (std::size_t i = 0; i < pe.size(); ++i) pe[i] = static_cast<double>(i);
  for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = static_cast<double>(i);
  return rational_image(p, pe, q, qe, s);
}

cplx rational_image(const std::vector<double>& p, const std::vector<double>& p_exponents,
                    const std::vector<double>& q, const std::vector<double>& q_exponents, cplx s) {
  if (p.size() != p_exponents.size() || q.size() != q_exponents.size() || p.empty() || q.empty()) {
    throw Error(ErrorKind::InvalidModelCoefficients, "coefficient and exponent lists differ in length");
  }
  auto poly = [&](const std::vector<double>& c, const std::vector<double>& e, double& scale) {
    cplx v = 0.0;
    scale = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0.0) continue;
      const cplx term = c[i] * (e[i] == 0.0 ? cplx(1.0) : std::pow(s, e[i]));
      v += term;
      scale += std::abs(term);
    }
    return v;
  };
  double ps = 0.0, qs = 0.0;
  const cplx num = poly(p, p_exponents, ps);
  const cplx den = poly(q, q_exponents, qs);
  if (std::abs(den) <= 8.0 * std::numeric_limits<double>::epsilon() * qs) {
    throw Error(ErrorKind::PoleHit, "denominator vanishes at s = (" + std::to_string(s.real()) +
                                        ", " + std::to_string(s.imag()) + ")");
  }
  return num / den;
}

}  // namespace fracvisco::laplace
