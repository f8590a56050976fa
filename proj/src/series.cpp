#include "nolag/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nolag/error.hpp"

namespace nolag {

namespace {

void require_compatible(const Series& a, const Series& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("series length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
  if (a.tau() != b.tau()) {
    throw InvalidArgument("series tau mismatch");
  }
}

}  // namespace

Series::Series(std::vector<double> values, double tau) : values_(std::move(values)), tau_(tau) {
  if (values_.empty()) {
    throw InvalidArgument("series must not be empty");
  }
  if (!(tau_ > 0.0) || !std::isfinite(tau_)) {
    throw InvalidArgument("series tau must be positive and finite");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidArgument("series value at index " + std::to_string(i) + " is not finite");
    }
  }
}

Series Series::constant(std::size_t n, double value, double tau) {
  return Series(std::vector<double>(n, value), tau);
}

Series Series::ramp(std::size_t n, double tau) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<double>(i) * tau;
  }
  return Series(std::move(v), tau);
}

Series Series::with_values(std::vector<double> values) const {
  if (values.size() != values_.size()) {
    throw InvalidArgument("with_values: length mismatch");
  }
  return Series(std::move(values), tau_);
}

double sup_norm(const Series& x) {
  double m = 0.0;
  for (double v : x.values()) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

Series axpby(double a, const Series& x, double b, const Series& y) {
  require_compatible(x, y);
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a * x[i] + b * y[i];
  }
  return x.with_values(std::move(out));
}

Series operator+(const Series& a, const Series& b) { return axpby(1.0, a, 1.0, b); }

Series operator-(const Series& a, const Series& b) { return axpby(1.0, a, -1.0, b); }

Series operator*(double c, const Series& x) {
  std::vector<double> out(x.values().begin(), x.values().end());
  for (double& v : out) {
    v *= c;
  }
  return x.with_values(std::move(out));
}

}  // namespace nolag
