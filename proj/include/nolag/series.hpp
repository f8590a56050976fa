#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nolag {

// Finite prefix of a bounded real sequence sampled every `tau` time units.
// Non-empty, every value finite, tau > 0. Immutable once built.
class Series {
 public:
  explicit Series(std::vector<double> values, double tau = 1.0);

  // n copies of `value`.
  static Series constant(std::size_t n, double value, double tau = 1.0);
  // x_n = n * tau: a unit-slope trend in time units.
  static Series ramp(std::size_t n, double tau = 1.0);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double tau() const noexcept { return tau_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double front() const { return values_.front(); }
  double back() const { return values_.back(); }

  // Same tau, different values. Throws if `values` has a different length.
  Series with_values(std::vector<double> values) const;

 private:
  std::vector<double> values_;
  double tau_;
};

// max |x_n| over the prefix.
double sup_norm(const Series& x);

// Elementwise arithmetic. Operands must share length and tau.
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(double c, const Series& x);
// a*x + b*y
Series axpby(double a, const Series& x, double b, const Series& y);

}  // namespace nolag
