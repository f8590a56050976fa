/*
 * C interface to the nolag indicator library.
 *
 * Every fallible call returns a nolag_status. On failure a message is
 * available from nolag_last_error() until the next failing call on the same
 * thread. Objects are opaque handles owned by the caller and released with
 * the matching *_destroy function; destroy functions accept NULL.
 *
 * Color sequences are arrays of 'R', 'G' and 'B' characters (not
 * NUL-terminated; the length is passed separately).
 */
#ifndef NOLAG_NOLAG_H
#define NOLAG_NOLAG_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(NOLAG_BUILDING_LIBRARY)
#    define NOLAG_API __declspec(dllexport)
#  else
#    define NOLAG_API __declspec(dllimport)
#  endif
#else
#  define NOLAG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define NOLAG_ABI_VERSION 1u

typedef enum nolag_status {
  NOLAG_OK = 0,
  NOLAG_ERR_INVALID_ARGUMENT = 1,
  NOLAG_ERR_IO = 2,
  NOLAG_ERR_PARSE = 3,
  NOLAG_ERR_OUT_OF_RANGE = 4,
  NOLAG_ERR_INTERNAL = 5
} nolag_status;

typedef enum nolag_variant {
  NOLAG_VARIANT_CLASSIC = 0,
  NOLAG_VARIANT_NO_LAG = 1,
  NOLAG_VARIANT_NYQUIST = 2
} nolag_variant;

typedef struct nolag_series nolag_series;
typedef struct nolag_operator nolag_operator;
typedef struct nolag_prices nolag_prices;
typedef struct nolag_ledger nolag_ledger;

NOLAG_API unsigned nolag_abi_version(void);
NOLAG_API const char* nolag_last_error(void);
NOLAG_API const char* nolag_status_name(nolag_status status);

/* Series */

NOLAG_API nolag_status nolag_series_create(const double* values, size_t n, double tau, nolag_series** out);
NOLAG_API void nolag_series_destroy(nolag_series* s);
NOLAG_API size_t nolag_series_size(const nolag_series* s);
NOLAG_API double nolag_series_tau(const nolag_series* s);
/* Pointer to size() contiguous values, valid while the handle lives. */
NOLAG_API const double* nolag_series_data(const nolag_series* s);
NOLAG_API nolag_status nolag_series_sup_norm(const nolag_series* s, double* out);

/* Operators */

NOLAG_API nolag_status nolag_op_identity(nolag_operator** out);
NOLAG_API nolag_status nolag_op_weighted_ma(const double* weights, size_t p, nolag_operator** out);
NOLAG_API nolag_status nolag_op_classical_ma(size_t p, nolag_operator** out);
NOLAG_API nolag_status nolag_op_simple_weighted_ma(size_t p, nolag_operator** out);
NOLAG_API nolag_status nolag_op_ema(double alpha, nolag_operator** out);
NOLAG_API nolag_status nolag_op_ema_periods(size_t p, nolag_operator** out);
NOLAG_API nolag_status nolag_op_compose(const nolag_operator* outer, const nolag_operator* inner,
                                        nolag_operator** out);
NOLAG_API nolag_status nolag_op_lin_comb(const double* coefficients, const nolag_operator* const* operands,
                                         size_t n, nolag_operator** out);
NOLAG_API nolag_status nolag_op_poly(const double* coeffs, size_t n_coeffs, const nolag_operator* operand,
                                     nolag_operator** out);
NOLAG_API nolag_status nolag_op_no_lag_quadratic(const nolag_operator* base, nolag_operator** out);
NOLAG_API nolag_status nolag_op_no_lag_cubic(const nolag_operator* base, nolag_operator** out);
NOLAG_API nolag_status nolag_op_nyquist(size_t p1, size_t p2, nolag_operator** out);
NOLAG_API void nolag_op_destroy(nolag_operator* op);
NOLAG_API nolag_status nolag_op_eval(const nolag_operator* op, const nolag_series* x, nolag_series** out);

/* Lag */

NOLAG_API nolag_status nolag_lag_of_weights(const double* weights, size_t p, double tau, double* out);
NOLAG_API nolag_status nolag_lag_of_poly(const double* coeffs, size_t n_coeffs, double base_lag, double* out);

/* Indicators. Any of the three outputs may be NULL when not needed. */

NOLAG_API nolag_status nolag_macd(const nolag_series* x, nolag_variant variant, nolag_series** macd,
                                  nolag_series** signal, nolag_series** histogram);
/* ME_12, 2ME_12 - ME_12^2 or N_{12,3} depending on the variant. */
NOLAG_API nolag_status nolag_fast_line(const nolag_series* x, nolag_variant variant, nolag_series** out);
/* Writes size(x) colors into colors_out; capacity must be at least size(x). */
NOLAG_API nolag_status nolag_impulse(const nolag_series* x, nolag_variant variant, char* colors_out,
                                     size_t capacity);

/* Price files */

NOLAG_API nolag_status nolag_prices_load_csv(const char* path, nolag_prices** out);
NOLAG_API void nolag_prices_destroy(nolag_prices* p);
NOLAG_API size_t nolag_prices_size(const nolag_prices* p);
/* ISO-8601 date string, valid while the handle lives; NULL when out of range. */
NOLAG_API const char* nolag_prices_date(const nolag_prices* p, size_t i);
NOLAG_API double nolag_prices_close(const nolag_prices* p, size_t i);
/* Closing prices as a series with tau = 1 bar. */
NOLAG_API nolag_status nolag_prices_series(const nolag_prices* p, nolag_series** out);

/* Backtest */

typedef struct nolag_backtest_config {
  double cost_per_side;
  double contract_multiplier;
  int close_before_end;
} nolag_backtest_config;

typedef struct nolag_trade {
  int direction; /* +1 long, -1 short */
  size_t entry_index;
  size_t exit_index;
  double entry_price;
  double exit_price;
  double gross_pnl;
  double net_pnl;
} nolag_trade;

typedef struct nolag_report {
  size_t n_trades;
  size_t n_winning;
  size_t n_losing;
  double total_net_profit;
  double pct_winning;
  double avg_net_per_trade;
  double total_profit_winning;
  double avg_profit_winning;
  double total_loss_losing;
  double avg_loss_losing;
  double greatest_loss_between_wins;
  size_t n_long;
  double total_net_long;
  double avg_net_long;
  size_t n_short;
  double total_net_short;
  double avg_net_short;
  double profit_factor;
  double ratio_ap_al;
  double tpi;
  double ratio_tp_tpi;
  int profit_factor_defined;
  int ratio_ap_al_defined;
  int ratio_tp_tpi_defined;
  int averages_defined;
} nolag_report;

/* $3 per side, 50 USD per point, force close one bar before the end. */
NOLAG_API nolag_backtest_config nolag_backtest_config_default(void);
NOLAG_API nolag_status nolag_backtest_run(const nolag_series* x, const char* colors, size_t n_colors,
                                          const nolag_backtest_config* config, nolag_ledger** out);
NOLAG_API void nolag_ledger_destroy(nolag_ledger* ledger);
NOLAG_API size_t nolag_ledger_size(const nolag_ledger* ledger);
NOLAG_API nolag_status nolag_ledger_trade(const nolag_ledger* ledger, size_t i, nolag_trade* out);
NOLAG_API nolag_status nolag_report_compute(const nolag_ledger* ledger, const nolag_series* x,
                                            nolag_report* out);

#ifdef __cplusplus
}
#endif

#endif /* NOLAG_NOLAG_H */
