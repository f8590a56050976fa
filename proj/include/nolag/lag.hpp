#pragma once

#include <cstddef>
#include <span>

#include "nolag/operator_expr.hpp"

namespace nolag {

// Delay, in time units, that a finite-window linear filter imposes on a
// linear trend.
struct LagValue {
  double value = 0.0;

  friend bool operator==(const LagValue&, const LagValue&) = default;
};

// tau * sum_j w_j (p - 1 - j). Any real weights are accepted; the result
// is only the ramp offset when the weights sum to 1.
LagValue lag_of_weights(std::span<const double> w, double tau);
LagValue lag_of(const Weights& w, double tau);

// lag(P(M)) = lag(M) * P'(1) = lag(M) * sum_k k a_k, for M with convex weights.
LagValue lag_of_poly(std::span<const double> coeffs, LagValue base_lag);

// P'(1) for P = sum_k a_k X^k.
double poly_derivative_at_one(std::span<const double> coeffs);

// 2M - M^2. Unit gain and zero lag for any convex-weight M.
OperatorExpr no_lag_quadratic(OperatorExpr base);
// 3M - 3M^2 + M^3.
OperatorExpr no_lag_cubic(OperatorExpr base);

// Periods of a Nyquist moving average. Requires p2 >= 2 and p1 >= 2 p2.
class NyquistParams {
 public:
  NyquistParams(std::size_t p1, std::size_t p2);

  std::size_t p1() const noexcept { return p1_; }
  std::size_t p2() const noexcept { return p2_; }
  // (p1 - 1) / (p2 - 1)
  double alpha() const noexcept { return alpha_; }

 private:
  std::size_t p1_;
  std::size_t p2_;
  double alpha_;
};

// (1 + alpha) M1 - alpha M2 o M1 where M1, M2 are simple weighted moving
// averages with p1 and p2 periods.
OperatorExpr nyquist_ma(const NyquistParams& params);

// Offset n*tau - y_n at the last sample of a ramp of `length` samples pushed
// through `op`. For finite-window operators with unit gain this is the lag
// once length exceeds op.warmup().
double ramp_offset(const OperatorExpr& op, std::size_t length, double tau = 1.0);

}  // namespace nolag
