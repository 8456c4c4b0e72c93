#pragma once

/**
 * @file quadrature.hpp
 * @brief Globally adaptive Gauss-Kronrod (7/15) quadrature on finite intervals.
 *
 * The interval with the largest error estimate is bisected until the summed
 * estimate meets max(abs_tol, rel_tol * |I|) or the subdivision budget runs
 * out. The caller decides what to do with an unconverged result.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace fracvisco::quad {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<double, 15> fv;
  fv[7] = f(c);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kKronrodNodes[j];
    fv[j] = f(c - dx);
    fv[14 - j] = f(c + dx);
  }
  double kronrod = fv[7] * kKronrodWeights[7];
  double gauss = fv[7] * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    kronrod += kKronrodWeights[j] * (fv[j] + fv[14 - j]);
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (fv[j] + fv[14 - j]);
  }
  const double mean = 0.5 * kronrod;
  double resasc = kKronrodWeights[7] * std::fabs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kKronrodWeights[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
  }
  resasc *= std::fabs(h);
  const double value = kronrod * h;
  double err = std::fabs((kronrod - gauss) * h);
  // QUADPACK-style sharpening of the raw Gauss/Kronrod difference.
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  err = std::max(err, 50.0 * 2.2e-16 * std::fabs(value));
  return {a, b, value, err};
}

}  // namespace detail

template <class F>
QuadResult integrate(F&& f, double a, double b, double abs_tol, double rel_tol = 0.0,
                     int max_intervals = 2000) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<detail::Segment> heap;
  auto first = detail::gk15(f, a, b);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  int count = 1;
  while (total_err > std::max(abs_tol, rel_tol * std::fabs(total)) && count < max_intervals) {
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      heap.push(worst);
      break;
    }
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++count;
    // Re-sum from scratch every so often to limit cancellation drift.
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    if (count % 64 == 0) {
      auto copy = heap;
      total = 0.0;
      total_err = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_err += copy.top().error;
        copy.pop();
      }
    }
  }
  // Final sum in a stable order.
  std::vector<detail::Segment> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
  out.value = 0.0;
  out.abs_error = 0.0;
  for (const auto& s : segs) {
    out.value += s.value;
    out.abs_error += s.error;
  }
  out.intervals = count;
  out.converged = out.abs_error <= std::max(abs_tol, rel_tol * std::fabs(out.value));
  return out;
}

}  // namespace fracvisco::quad
