#include "nolag/smoothing.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "nolag/error.hpp"

namespace nolag {

Weights::Weights(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) {
    throw InvalidArgument("weights: at least one period required");
  }
  for (double v : w_) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw InvalidArgument("weights: every weight must be strictly positive and finite");
    }
  }
  const double sum = std::accumulate(w_.begin(), w_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw InvalidArgument("weights: sum is " + std::to_string(sum) + ", expected 1");
  }
  for (double& v : w_) {
    v /= sum;
  }
}

Weights classical_weights(std::size_t p) {
  if (p == 0) {
    throw InvalidArgument("classical_weights: p must be >= 1");
  }
  return Weights(std::vector<double>(p, 1.0 / static_cast<double>(p)));
}

Weights simple_weighted_weights(std::size_t p) {
  if (p == 0) {
    throw InvalidArgument("simple_weighted_weights: p must be >= 1");
  }
  const double denom = static_cast<double>(p) * static_cast<double>(p + 1);
  std::vector<double> w(p);
  for (std::size_t j = 0; j < p; ++j) {
    w[j] = 2.0 * static_cast<double>(j + 1) / denom;
  }
  return Weights(std::move(w));
}

EmaParam::EmaParam(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("ema: alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

EmaParam::EmaParam(double alpha, std::size_t periods) : EmaParam(alpha) { periods_ = periods; }

EmaParam EmaParam::from_periods(std::size_t p) {
  if (p < 2) {
    throw InvalidArgument("ema: number of periods must be >= 2");
  }
  return EmaParam(2.0 / (static_cast<double>(p) + 1.0), p);
}

// Sums are taken relative to the newest sample so that a constant input comes
// back bit-for-bit; otherwise rounding noise would register as movement.
Series weighted_ma(const Weights& w, const Series& x) {
  const std::size_t p = w.periods();
  const std::size_t n = x.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 >= p) {
      // x_{i-p+1+j} for j = 0..p-1
      const std::size_t base = i + 1 - p;
      double acc = 0.0;
      for (std::size_t j = 0; j < p; ++j) {
        acc += w[j] * (x[base + j] - x[i]);
      }
      y[i] = x[i] + acc;
    } else {
      // Only j >= p-1-i have a sample: x_{i-p+1+j} = x_{j-(p-1-i)}.
      const std::size_t first = p - 1 - i;
      double acc = 0.0;
      double mass = 0.0;
      for (std::size_t j = first; j < p; ++j) {
        acc += w[j] * (x[j - first] - x[i]);
        mass += w[j];
      }
      y[i] = x[i] + acc / mass;
    }
  }
  return x.with_values(std::move(y));
}

Series ema(const EmaParam& param, const Series& x) {
  const double a = param.alpha();
  std::vector<double> y(x.size());
  y[0] = x[0];
  for (std::size_t i = 1; i < y.size(); ++i) {
    y[i] = y[i - 1] + a * (x[i] - y[i - 1]);
  }
  return x.with_values(std::move(y));
}

Series ema_closed_form(const EmaParam& param, const Series& x) {
  const double a = param.alpha();
  const double keep = 1.0 - a;
  std::vector<double> y(x.size());
  for (std::size_t n = 0; n < y.size(); ++n) {
    // Walk j downward so the factor (1-a)^{n-j} grows by one multiplication per step.
    double acc = 0.0;
    double factor = 1.0;
    for (std::size_t j = n; j >= 1; --j) {
      acc += factor * x[j];
      factor *= keep;
    }
    y[n] = factor * x[0] + a * acc;
  }
  return x.with_values(std::move(y));
}

}  // namespace nolag
