#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nolag/series.hpp"

namespace nolag {

// Weight vector of a weighted moving average: p >= 1 strictly positive
// entries summing to 1. Construction accepts |sum - 1| <= 1e-12 and then
// rescales so the stored weights sum to 1 as closely as doubles allow.
class Weights {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit Weights(std::vector<double> w);

  std::span<const double> values() const noexcept { return w_; }
  std::size_t periods() const noexcept { return w_.size(); }
  double operator[](std::size_t j) const { return w_[j]; }

 private:
  std::vector<double> w_;
};

// w_j = 1/p.
Weights classical_weights(std::size_t p);
// w_j = 2(j+1) / (p(p+1)); the most recent sample carries the largest weight.
Weights simple_weighted_weights(std::size_t p);

// Smoothing factor of an exponential moving average, 0 < alpha < 1.
class EmaParam {
 public:
  explicit EmaParam(double alpha);
  // alpha = 2/(p+1). p = 1 gives alpha = 1 and is rejected.
  static EmaParam from_periods(std::size_t p);

  double alpha() const noexcept { return alpha_; }
  std::optional<std::size_t> periods() const noexcept { return periods_; }

 private:
  EmaParam(double alpha, std::size_t periods);

  double alpha_;
  std::optional<std::size_t> periods_;
};

// y_n = sum_j w_j x_{n-p+1+j} once a full window is available. During the
// first p-1 samples only the available terms are used and the result is
// divided by the sum of their weights.
Series weighted_ma(const Weights& w, const Series& x);

// y_0 = x_0, y_n = alpha x_n + (1 - alpha) y_{n-1}.
Series ema(const EmaParam& param, const Series& x);

// Same values as ema() through the explicit sum
//   y_n = (1-alpha)^n x_0 + alpha sum_{j=1..n} (1-alpha)^{n-j} x_j.
// Quadratic cost; meant as a cross-check of the recursion.
Series ema_closed_form(const EmaParam& param, const Series& x);

}  // namespace nolag
