#include "nolag/lag.hpp"

#include <cmath>
#include <string>

#include "nolag/error.hpp"

namespace nolag {

LagValue lag_of_weights(std::span<const double> w, double tau) {
  if (w.empty()) {
    throw InvalidArgument("lag_of_weights: empty weight vector");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw InvalidArgument("lag_of_weights: tau must be positive and finite");
  }
  const std::size_t p = w.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    acc += w[j] * static_cast<double>(p - 1 - j);
  }
  return LagValue{tau * acc};
}

LagValue lag_of(const Weights& w, double tau) { return lag_of_weights(w.values(), tau); }

double poly_derivative_at_one(std::span<const double> coeffs) {
  double d = 0.0;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    d += static_cast<double>(k) * coeffs[k];
  }
  return d;
}

LagValue lag_of_poly(std::span<const double> coeffs, LagValue base_lag) {
  if (!std::isfinite(base_lag.value)) {
    throw InvalidArgument("lag_of_poly: base lag must be finite");
  }
  return LagValue{base_lag.value * poly_derivative_at_one(coeffs)};
}

OperatorExpr no_lag_quadratic(OperatorExpr base) {
  return OperatorExpr::poly({0.0, 2.0, -1.0}, std::move(base));
}

OperatorExpr no_lag_cubic(OperatorExpr base) {
  return OperatorExpr::poly({0.0, 3.0, -3.0, 1.0}, std::move(base));
}

NyquistParams::NyquistParams(std::size_t p1, std::size_t p2) : p1_(p1), p2_(p2) {
  if (p2 < 2) {
    throw InvalidArgument("nyquist: p2 must be >= 2 (alpha = (p1-1)/(p2-1))");
  }
  if (p1 < 2 * p2) {
    throw InvalidArgument("nyquist: stability requires p1/p2 >= 2, got p1=" + std::to_string(p1) +
                          " p2=" + std::to_string(p2));
  }
  alpha_ = static_cast<double>(p1 - 1) / static_cast<double>(p2 - 1);
}

OperatorExpr nyquist_ma(const NyquistParams& params) {
  const double a = params.alpha();
  auto m1 = OperatorExpr::weighted_ma(simple_weighted_weights(params.p1()));
  auto m2 = OperatorExpr::weighted_ma(simple_weighted_weights(params.p2()));
  return OperatorExpr::lin_comb({
      {1.0 + a, m1},
      {-a, OperatorExpr::compose(m2, m1)},
  });
}

double ramp_offset(const OperatorExpr& op, std::size_t length, double tau) {
  if (length == 0) {
    throw InvalidArgument("ramp_offset: length must be positive");
  }
  const Series x = Series::ramp(length, tau);
  const Series y = op(x);
  return x.back() - y.back();
}

}  // namespace nolag
