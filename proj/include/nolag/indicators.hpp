#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "nolag/lag.hpp"
#include "nolag/operator_expr.hpp"
#include "nolag/series.hpp"

namespace nolag {

// Impulse colors. The character values are what the CLI and C API emit.
enum class SignalColor : char { R = 'R', G = 'G', B = 'B' };

enum class Variant { classic, no_lag, nyquist };

std::string_view to_string(Variant v);
// "classic", "no_lag" or "nyquist"; throws InvalidArgument otherwise.
Variant parse_variant(std::string_view name);

struct MacdTriple {
  Series macd;
  Series signal;
  Series histogram;  // macd - signal
};

// Per-bar impulse colors. The first bar is always B.
class SignalSeries {
 public:
  explicit SignalSeries(std::vector<SignalColor> colors);

  std::span<const SignalColor> colors() const noexcept { return colors_; }
  std::size_t size() const noexcept { return colors_.size(); }
  SignalColor operator[](std::size_t i) const { return colors_[i]; }

 private:
  std::vector<SignalColor> colors_;
};

// The three operators defining a MACD: line = fast - slow, signal = smoother(line).
struct MacdLegs {
  OperatorExpr fast;
  OperatorExpr slow;
  OperatorExpr signal;
};

// EMA with p periods and its lag-free version 2E - E^2.
OperatorExpr ema_periods(std::size_t p);
OperatorExpr ema_no_lag(std::size_t p);

MacdLegs classic_legs(std::size_t fast = 12, std::size_t slow = 26, std::size_t signal = 9);
MacdLegs no_lag_legs(std::size_t fast = 12, std::size_t slow = 26, std::size_t signal = 9);
MacdLegs nyquist_legs(NyquistParams fast = {12, 3}, NyquistParams slow = {26, 6},
                      NyquistParams signal = {9, 3});
MacdLegs legs_for(Variant v);

MacdTriple macd(const MacdLegs& legs, const Series& x);

MacdTriple macd_classic(const Series& x);
MacdTriple macd_no_lag(const Series& x);
MacdTriple macd_nyquist(const Series& x);
MacdTriple macd_for(Variant v, const Series& x);

// G when both fast_line and histogram strictly rise, R when both strictly
// fall, B otherwise (ties included). Inputs must have the same length.
SignalSeries impulse_colors(const Series& fast_line, const Series& histogram);

// Impulse system with the variant's fast line (ME_12, 2ME_12 - ME_12^2 or
// N_{12,3}) and histogram.
SignalSeries impulse(const Series& x, Variant v);
SignalSeries impulse(const Series& x, const MacdLegs& legs);

}  // namespace nolag
