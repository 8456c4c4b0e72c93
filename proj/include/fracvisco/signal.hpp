#pragma once

#include <cstddef>
#include <vector>

namespace fracvisco {

/// A causal signal f(t), t > 0, known on a grid.
///
/// Near the origin the signal is modelled as t^origin_exponent * g(t) with g
/// smooth, so a weak singularity (or a zero of fractional order) is carried
/// symbolically instead of being sampled. An impulse impulse_coeff * delta(t)
/// is kept separately; it never appears in `values`.
struct SampledSignal {
  std::vector<double> grid;
  std::vector<double> values;
  double origin_exponent = 0.0;
  double impulse_coeff = 0.0;

  std::size_t size() const { return grid.size(); }

  /// Throws Error{InvalidSignal} unless the grid is strictly increasing and
  /// positive, the values are finite, and the sizes match.
  void validate() const;

  /// The smooth factor g = f / t^p at grid point i.
  double regular_part(std::size_t i) const;
};

/// n points from a to b inclusive.
std::vector<double> linspace(double a, double b, std::size_t n);

/// n points from 10^lo to 10^hi inclusive, geometrically spaced.
std::vector<double> logspace(double lo, double hi, std::size_t n);

/// Sample f on the grid.
template <class F>
SampledSignal sample(F&& f, std::vector<double> grid, double origin_exponent = 0.0) {
  SampledSignal s;
  s.values.reserve(grid.size());
  for (double t : grid) s.values.push_back(f(t));
  s.grid = std::move(grid);
  s.origin_exponent = origin_exponent;
  return s;
}

}  // namespace fracvisco
