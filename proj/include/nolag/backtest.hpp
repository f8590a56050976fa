#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nolag/indicators.hpp"
#include "nolag/series.hpp"

namespace nolag {

struct BacktestConfig {
  double cost_per_side = 3.0;         // USD per entry or exit
  double contract_multiplier = 50.0;  // USD per index point
  // Flatten one bar before the end; no position opens from that bar on.
  bool close_before_end = true;

  void validate() const;
};

enum class Direction { long_, short_ };

constexpr int sign(Direction d) noexcept { return d == Direction::long_ ? 1 : -1; }

struct Trade {
  Direction direction;
  std::size_t entry_index;
  std::size_t exit_index;
  double entry_price;
  double exit_price;
  double gross_pnl;
  double net_pnl;

  friend bool operator==(const Trade&, const Trade&) = default;
};

struct TradeLedger {
  std::vector<Trade> trades;
  BacktestConfig config;
};

// Stop-and-reverse system with a capacity of one contract, filled at the
// close of the signal bar. G closes a short and opens a long, R closes a
// long and opens a short, B holds.
//
// Accepts any color sequence (the first bar need not be B). Without
// close_before_end a position still open after the last bar is closed at
// the last bar, and the last bar opens nothing.
TradeLedger run_backtest(const Series& x, std::span<const SignalColor> signal,
                         const BacktestConfig& config = {});
TradeLedger run_backtest(const Series& x, const SignalSeries& signal,
                         const BacktestConfig& config = {});

struct BacktestReport {
  std::size_t n_trades = 0;
  std::size_t n_winning = 0;  // net_pnl > 0
  std::size_t n_losing = 0;   // net_pnl <= 0
  double total_net_profit = 0.0;
  double pct_winning = 0.0;  // percent, 0..100
  double avg_net_per_trade = 0.0;

  double total_profit_winning = 0.0;  // TP
  double avg_profit_winning = 0.0;    // AP
  double total_loss_losing = 0.0;     // TL, <= 0
  double avg_loss_losing = 0.0;       // AL, <= 0
  double greatest_loss_between_wins = 0.0;

  std::size_t n_long = 0;
  double total_net_long = 0.0;
  double avg_net_long = 0.0;
  std::size_t n_short = 0;
  double total_net_short = 0.0;
  double avg_net_short = 0.0;

  double profit_factor = 0.0;  // TP / |TL|
  double ratio_ap_al = 0.0;    // AP / |AL|
  double tpi = 0.0;            // buy-and-hold profit of one contract
  double ratio_tp_tpi = 0.0;   // TP / TPI

  // False when the matching ratio or average had an empty denominator and
  // was reported as 0.
  bool profit_factor_defined = false;
  bool ratio_ap_al_defined = false;
  bool ratio_tp_tpi_defined = false;
  bool averages_defined = false;  // n_trades > 0
};

// (x_last - x_first) * multiplier.
double buy_and_hold_profit(const Series& x, double contract_multiplier);

BacktestReport compute_report(const TradeLedger& ledger, const Series& x);

}  // namespace nolag
