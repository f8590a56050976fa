#include "nolag/nolag.h"

#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "nolag/backtest.hpp"
#include "nolag/error.hpp"
#include "nolag/indicators.hpp"
#include "nolag/lag.hpp"
#include "nolag/operator_expr.hpp"
#include "nolag/prices.hpp"
#include "nolag/series.hpp"

struct nolag_series {
  nolag::Series value;
};

struct nolag_operator {
  nolag::OperatorExpr value;
};

struct nolag_prices {
  std::vector<nolag::PriceRecord> records;
  std::vector<std::string> dates;
};

struct nolag_ledger {
  nolag::TradeLedger value;
};

namespace {

thread_local std::string g_last_error;

nolag_status fail(nolag_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
nolag_status guard(F&& body) {
  try {
    body();
    return NOLAG_OK;
  } catch (const nolag::InvalidArgument& e) {
    return fail(NOLAG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const nolag::ParseError& e) {
    return fail(NOLAG_ERR_PARSE, e.what());
  } catch (const nolag::IoError& e) {
    return fail(NOLAG_ERR_IO, e.what());
  } catch (const std::out_of_range& e) {
    return fail(NOLAG_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NOLAG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NOLAG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NOLAG_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw nolag::InvalidArgument(what);
}

nolag::Variant to_variant(nolag_variant v) {
  switch (v) {
    case NOLAG_VARIANT_CLASSIC:
      return nolag::Variant::classic;
    case NOLAG_VARIANT_NO_LAG:
      return nolag::Variant::no_lag;
    case NOLAG_VARIANT_NYQUIST:
      return nolag::Variant::nyquist;
  }
  throw nolag::InvalidArgument("unknown variant");
}

nolag::SignalColor to_color(char c) {
  switch (c) {
    case 'R':
      return nolag::SignalColor::R;
    case 'G':
      return nolag::SignalColor::G;
    case 'B':
      return nolag::SignalColor::B;
    default:
      throw nolag::InvalidArgument(std::string("invalid color '") + c + "', expected R, G or B");
  }
}

nolag_status emit_operator(nolag_operator** out, nolag::OperatorExpr op) {
  *out = new nolag_operator{std::move(op)};
  return NOLAG_OK;
}

}  // namespace

extern "C" {

unsigned nolag_abi_version(void) { return NOLAG_ABI_VERSION; }

const char* nolag_last_error(void) { return g_last_error.c_str(); }

const char* nolag_status_name(nolag_status status) {
  switch (status) {
    case NOLAG_OK:
      return "ok";
    case NOLAG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case NOLAG_ERR_IO:
      return "i/o error";
    case NOLAG_ERR_PARSE:
      return "parse error";
    case NOLAG_ERR_OUT_OF_RANGE:
      return "out of range";
    case NOLAG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

nolag_status nolag_series_create(const double* values, size_t n, double tau, nolag_series** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    require(values != nullptr || n == 0, "values must not be null");
    *out = new nolag_series{nolag::Series(std::vector<double>(values, values + n), tau)};
  });
}

void nolag_series_destroy(nolag_series* s) { delete s; }

size_t nolag_series_size(const nolag_series* s) { return s ? s->value.size() : 0; }

double nolag_series_tau(const nolag_series* s) { return s ? s->value.tau() : 0.0; }

const double* nolag_series_data(const nolag_series* s) { return s ? s->value.values().data() : nullptr; }

nolag_status nolag_series_sup_norm(const nolag_series* s, double* out) {
  return guard([&] {
    require(s != nullptr && out != nullptr, "null argument");
    *out = nolag::sup_norm(s->value);
  });
}

nolag_status nolag_op_identity(nolag_operator** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    emit_operator(out, nolag::OperatorExpr::identity());
  });
}

nolag_status nolag_op_weighted_ma(const double* weights, size_t p, nolag_operator** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    require(weights != nullptr || p == 0, "weights must not be null");
    emit_operator(out, nolag::OperatorExpr::weighted_ma(nolag::Weights(std::vector<double>(weights, weights + p))));
  });
}

nolag_status nolag_op_classical_ma(size_t p, nolag_operator** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    emit_operator(out, nolag::OperatorExpr::weighted_ma(nolag::classical_weights(p)));
  });
}

nolag_status nolag_op_simple_weighted_ma(size_t p, nolag_operator** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    emit_operator(out, nolag::OperatorExpr::weighted_ma(nolag::simple_weighted_weights(p)));
  });
}

nolag_status nolag_op_ema(double alpha, nolag_operator** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    emit_operator(out, nolag::OperatorExpr::ema(nolag::EmaParam(alpha)));
  });
}

nolag_status nolag_op_ema_periods(size_t p, nolag_operator** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    emit_operator(out, nolag::ema_periods(p));
  });
}

nolag_status nolag_op_compose(const nolag_operator* outer, const nolag_operator* inner, nolag_operator** out) {
  return guard([&] {
    require(outer != nullptr && inner != nullptr && out != nullptr, "null argument");
    emit_operator(out, nolag::OperatorExpr::compose(outer->value, inner->value));
  });
}

nolag_status nolag_op_lin_comb(const double* coefficients, const nolag_operator* const* operands, size_t n,
                               nolag_operator** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    require(n == 0 || (coefficients != nullptr && operands != nullptr), "null argument");
    std::vector<nolag::OperatorExpr::Term> terms;
    terms.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      require(operands[i] != nullptr, "null operand");
      terms.push_back({coefficients[i], operands[i]->value});
    }
    emit_operator(out, nolag::OperatorExpr::lin_comb(std::move(terms)));
  });
}

nolag_status nolag_op_poly(const double* coeffs, size_t n_coeffs, const nolag_operator* operand,
                           nolag_operator** out) {
  return guard([&] {
    require(out != nullptr && operand != nullptr, "null argument");
    require(coeffs != nullptr || n_coeffs == 0, "coeffs must not be null");
    emit_operator(out, nolag::OperatorExpr::poly(std::vector<double>(coeffs, coeffs + n_coeffs), operand->value));
  });
}

nolag_status nolag_op_no_lag_quadratic(const nolag_operator* base, nolag_operator** out) {
  return guard([&] {
    require(base != nullptr && out != nullptr, "null argument");
    emit_operator(out, nolag::no_lag_quadratic(base->value));
  });
}

nolag_status nolag_op_no_lag_cubic(const nolag_operator* base, nolag_operator** out) {
  return guard([&] {
    require(base != nullptr && out != nullptr, "null argument");
    emit_operator(out, nolag::no_lag_cubic(base->value));
  });
}

nolag_status nolag_op_nyquist(size_t p1, size_t p2, nolag_operator** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    emit_operator(out, nolag::nyquist_ma(nolag::NyquistParams(p1, p2)));
  });
}

void nolag_op_destroy(nolag_operator* op) { delete op; }

nolag_status nolag_op_eval(const nolag_operator* op, const nolag_series* x, nolag_series** out) {
  return guard([&] {
    require(op != nullptr && x != nullptr && out != nullptr, "null argument");
    *out = new nolag_series{op->value(x->value)};
  });
}

nolag_status nolag_lag_of_weights(const double* weights, size_t p, double tau, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    require(weights != nullptr || p == 0, "weights must not be null");
    *out = nolag::lag_of_weights({weights, p}, tau).value;
  });
}

nolag_status nolag_lag_of_poly(const double* coeffs, size_t n_coeffs, double base_lag, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    require(coeffs != nullptr || n_coeffs == 0, "coeffs must not be null");
    *out = nolag::lag_of_poly({coeffs, n_coeffs}, nolag::LagValue{base_lag}).value;
  });
}

nolag_status nolag_macd(const nolag_series* x, nolag_variant variant, nolag_series** macd, nolag_series** signal,
                        nolag_series** histogram) {
  return guard([&] {
    require(x != nullptr, "null series");
    nolag::MacdTriple m = nolag::macd_for(to_variant(variant), x->value);
    // Allocate all before publishing any so a failure leaks nothing.
    auto a = macd ? std::make_unique<nolag_series>(std::move(m.macd)) : nullptr;
    auto b = signal ? std::make_unique<nolag_series>(std::move(m.signal)) : nullptr;
    auto c = histogram ? std::make_unique<nolag_series>(std::move(m.histogram)) : nullptr;
    if (macd) *macd = a.release();
    if (signal) *signal = b.release();
    if (histogram) *histogram = c.release();
  });
}

nolag_status nolag_fast_line(const nolag_series* x, nolag_variant variant, nolag_series** out) {
  return guard([&] {
    require(x != nullptr && out != nullptr, "null argument");
    *out = new nolag_series{nolag::legs_for(to_variant(variant)).fast(x->value)};
  });
}

nolag_status nolag_impulse(const nolag_series* x, nolag_variant variant, char* colors_out, size_t capacity) {
  return guard([&] {
    require(x != nullptr && colors_out != nullptr, "null argument");
    if (capacity < x->value.size()) {
      throw std::out_of_range("color buffer too small");
    }
    const nolag::SignalSeries s = nolag::impulse(x->value, to_variant(variant));
    for (size_t i = 0; i < s.size(); ++i) {
      colors_out[i] = static_cast<char>(s[i]);
    }
  });
}

nolag_status nolag_prices_load_csv(const char* path, nolag_prices** out) {
  return guard([&] {
    require(path != nullptr && out != nullptr, "null argument");
    auto p = std::make_unique<nolag_prices>();
    p->records = nolag::load_csv(path);
    p->dates.reserve(p->records.size());
    for (const auto& r : p->records) {
      p->dates.push_back(nolag::format_iso_date(r.date));
    }
    *out = p.release();
  });
}

void nolag_prices_destroy(nolag_prices* p) { delete p; }

size_t nolag_prices_size(const nolag_prices* p) { return p ? p->records.size() : 0; }

const char* nolag_prices_date(const nolag_prices* p, size_t i) {
  if (!p || i >= p->dates.size()) return nullptr;
  return p->dates[i].c_str();
}

double nolag_prices_close(const nolag_prices* p, size_t i) {
  if (!p || i >= p->records.size()) return 0.0;
  return p->records[i].close;
}

nolag_status nolag_prices_series(const nolag_prices* p, nolag_series** out) {
  return guard([&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = new nolag_series{nolag::closes(p->records)};
  });
}

nolag_backtest_config nolag_backtest_config_default(void) {
  const nolag::BacktestConfig d;
  return {d.cost_per_side, d.contract_multiplier, d.close_before_end ? 1 : 0};
}

nolag_status nolag_backtest_run(const nolag_series* x, const char* colors, size_t n_colors,
                                const nolag_backtest_config* config, nolag_ledger** out) {
  return guard([&] {
    require(x != nullptr && out != nullptr, "null argument");
    require(colors != nullptr || n_colors == 0, "colors must not be null");
    std::vector<nolag::SignalColor> signal;
    signal.reserve(n_colors);
    for (size_t i = 0; i < n_colors; ++i) {
      signal.push_back(to_color(colors[i]));
    }
    nolag::BacktestConfig cfg;
    if (config) {
      cfg.cost_per_side = config->cost_per_side;
      cfg.contract_multiplier = config->contract_multiplier;
      cfg.close_before_end = config->close_before_end != 0;
    }
    *out = new nolag_ledger{nolag::run_backtest(x->value, signal, cfg)};
  });
}

void nolag_ledger_destroy(nolag_ledger* ledger) { delete ledger; }

size_t nolag_ledger_size(const nolag_ledger* ledger) { return ledger ? ledger->value.trades.size() : 0; }

nolag_status nolag_ledger_trade(const nolag_ledger* ledger, size_t i, nolag_trade* out) {
  if (!ledger || !out) return fail(NOLAG_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= ledger->value.trades.size()) return fail(NOLAG_ERR_OUT_OF_RANGE, "trade index out of range");
  const nolag::Trade& t = ledger->value.trades[i];
  *out = {nolag::sign(t.direction), t.entry_index, t.exit_index, t.entry_price,
          t.exit_price,             t.gross_pnl,   t.net_pnl};
  return NOLAG_OK;
}

nolag_status nolag_report_compute(const nolag_ledger* ledger, const nolag_series* x, nolag_report* out) {
  return guard([&] {
    require(ledger != nullptr && x != nullptr && out != nullptr, "null argument");
    const nolag::BacktestReport r = nolag::compute_report(ledger->value, x->value);
    *out = nolag_report{r.n_trades,
                        r.n_winning,
                        r.n_losing,
                        r.total_net_profit,
                        r.pct_winning,
                        r.avg_net_per_trade,
                        r.total_profit_winning,
                        r.avg_profit_winning,
                        r.total_loss_losing,
                        r.avg_loss_losing,
                        r.greatest_loss_between_wins,
                        r.n_long,
                        r.total_net_long,
                        r.avg_net_long,
                        r.n_short,
                        r.total_net_short,
                        r.avg_net_short,
                        r.profit_factor,
                        r.ratio_ap_al,
                        r.tpi,
                        r.ratio_tp_tpi,
                        r.profit_factor_defined ? 1 : 0,
                        r.ratio_ap_al_defined ? 1 : 0,
                        r.ratio_tp_tpi_defined ? 1 : 0,
                        r.averages_defined ? 1 : 0};
  });
}

}  // extern "C"
