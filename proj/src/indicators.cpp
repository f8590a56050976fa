#include "nolag/indicators.hpp"

#include <string>

#include "nolag/error.hpp"

namespace nolag {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::classic:
      return "classic";
    case Variant::no_lag:
      return "no_lag";
    case Variant::nyquist:
      return "nyquist";
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  if (name == "classic") return Variant::classic;
  if (name == "no_lag") return Variant::no_lag;
  if (name == "nyquist") return Variant::nyquist;
  throw InvalidArgument("unknown variant '" + std::string(name) + "'");
}

SignalSeries::SignalSeries(std::vector<SignalColor> colors) : colors_(std::move(colors)) {
  if (colors_.empty()) {
    throw InvalidArgument("signal series must not be empty");
  }
  if (colors_.front() != SignalColor::B) {
    throw InvalidArgument("signal series must start with B");
  }
}

OperatorExpr ema_periods(std::size_t p) { return OperatorExpr::ema(EmaParam::from_periods(p)); }

OperatorExpr ema_no_lag(std::size_t p) { return no_lag_quadratic(ema_periods(p)); }

MacdLegs classic_legs(std::size_t fast, std::size_t slow, std::size_t signal) {
  return {ema_periods(fast), ema_periods(slow), ema_periods(signal)};
}

MacdLegs no_lag_legs(std::size_t fast, std::size_t slow, std::size_t signal) {
  return {ema_no_lag(fast), ema_no_lag(slow), ema_no_lag(signal)};
}

MacdLegs nyquist_legs(NyquistParams fast, NyquistParams slow, NyquistParams signal) {
  return {nyquist_ma(fast), nyquist_ma(slow), nyquist_ma(signal)};
}

MacdLegs legs_for(Variant v) {
  switch (v) {
    case Variant::classic:
      return classic_legs();
    case Variant::no_lag:
      return no_lag_legs();
    case Variant::nyquist:
      return nyquist_legs();
  }
  throw InvalidArgument("unknown variant");
}

MacdTriple macd(const MacdLegs& legs, const Series& x) {
  Series line = legs.fast(x) - legs.slow(x);
  Series signal = legs.signal(line);
  Series histogram = line - signal;
  return {std::move(line), std::move(signal), std::move(histogram)};
}

MacdTriple macd_classic(const Series& x) { return macd(classic_legs(), x); }

MacdTriple macd_no_lag(const Series& x) { return macd(no_lag_legs(), x); }

MacdTriple macd_nyquist(const Series& x) { return macd(nyquist_legs(), x); }

MacdTriple macd_for(Variant v, const Series& x) { return macd(legs_for(v), x); }

SignalSeries impulse_colors(const Series& fast_line, const Series& histogram) {
  if (fast_line.size() != histogram.size()) {
    throw InvalidArgument("impulse: fast line and histogram lengths differ");
  }
  std::vector<SignalColor> colors(fast_line.size(), SignalColor::B);
  for (std::size_t n = 1; n < colors.size(); ++n) {
    const bool line_up = fast_line[n] > fast_line[n - 1];
    const bool line_down = fast_line[n] < fast_line[n - 1];
    const bool hist_up = histogram[n] > histogram[n - 1];
    const bool hist_down = histogram[n] < histogram[n - 1];
    if (line_up && hist_up) {
      colors[n] = SignalColor::G;
    } else if (line_down && hist_down) {
      colors[n] = SignalColor::R;
    }
  }
  return SignalSeries(std::move(colors));
}

SignalSeries impulse(const Series& x, const MacdLegs& legs) {
  const MacdTriple m = macd(legs, x);
  return impulse_colors(legs.fast(x), m.histogram);
}

SignalSeries impulse(const Series& x, Variant v) { return impulse(x, legs_for(v)); }

}  // namespace nolag
