#include "fracvisco/signal.hpp"

#include <cmath>
#include <string>

#include "fracvisco/errors.hpp"

namespace fracvisco {

void SampledSignal::validate() const {
  if (grid.size() != values.size()) {
    throw Error(ErrorKind::InvalidSignal, "grid and values differ in length (" +
                                              std::to_string(grid.size()) + " vs " +
                                              std::to_string(values.size()) + ")");
  }
  if (grid.empty()) throw Error(ErrorKind::InvalidSignal, "empty signal");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || !(grid[i] > 0.0)) {
      throw Error(ErrorKind::InvalidSignal, "grid point " + std::to_string(i) + " is not positive");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw Error(ErrorKind::InvalidSignal,
                  "grid is not strictly increasing at index " + std::to_string(i));
    }
    if (!std::isfinite(values[i])) {
      throw Error(ErrorKind::InvalidSignal, "non-finite value at index " + std::to_string(i));
    }
  }
  if (!std::isfinite(origin_exponent) || !std::isfinite(impulse_coeff) || impulse_coeff < 0.0) {
    throw Error(ErrorKind::InvalidSignal, "origin exponent must be finite and impulse >= 0");
  }
}

double SampledSignal::regular_part(std::size_t i) const {
  if (origin_exponent == 0.0) return values[i];
  return values[i] / std::pow(grid[i], origin_exponent);
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = a;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = b;
  return out;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
  auto e = linspace(lo, hi, n);
  for (auto& x : e) x = std::pow(10.0, x);
  return e;
}

}  // namespace fracvisco
