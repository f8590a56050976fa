#include "nolag/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nolag/error.hpp"

namespace nolag {

void BacktestConfig::validate() const {
  if (!(cost_per_side >= 0.0) || !std::isfinite(cost_per_side)) {
    throw InvalidArgument("backtest: cost_per_side must be finite and >= 0");
  }
  if (!(contract_multiplier > 0.0) || !std::isfinite(contract_multiplier)) {
    throw InvalidArgument("backtest: contract_multiplier must be finite and > 0");
  }
}

namespace {

Trade close_trade(Direction dir, std::size_t entry_index, double entry_price, std::size_t exit_index,
                  double exit_price, const BacktestConfig& config) {
  const double gross = sign(dir) * (exit_price - entry_price) * config.contract_multiplier;
  return Trade{dir, entry_index, exit_index, entry_price, exit_price, gross, gross - 2.0 * config.cost_per_side};
}

}  // namespace

TradeLedger run_backtest(const Series& x, std::span<const SignalColor> signal, const BacktestConfig& config) {
  config.validate();
  if (x.size() != signal.size()) {
    throw InvalidArgument("backtest: price series has " + std::to_string(x.size()) + " bars but signal has " +
                          std::to_string(signal.size()));
  }
  if (x.size() < 2) {
    throw InvalidArgument("backtest: at least two bars required");
  }

  const std::size_t last = x.size() - 1;
  // Bar at which any open position is flattened; nothing opens from here on.
  const std::size_t stop = config.close_before_end ? last - 1 : last;

  TradeLedger ledger{{}, config};
  int position = 0;
  std::size_t entry_index = 0;
  double entry_price = 0.0;

  auto exit_position = [&](std::size_t i) {
    const Direction dir = position > 0 ? Direction::long_ : Direction::short_;
    ledger.trades.push_back(close_trade(dir, entry_index, entry_price, i, x[i], config));
    position = 0;
  };
  auto enter = [&](int dir, std::size_t i) {
    position = dir;
    entry_index = i;
    entry_price = x[i];
  };

  for (std::size_t i = 0; i < stop; ++i) {
    switch (signal[i]) {
      case SignalColor::G:
        if (position < 0) exit_position(i);
        if (position == 0) enter(+1, i);
        break;
      case SignalColor::R:
        if (position > 0) exit_position(i);
        if (position == 0) enter(-1, i);
        break;
      case SignalColor::B:
        break;
    }
  }
  if (position != 0) {
    exit_position(stop);
  }
  return ledger;
}

TradeLedger run_backtest(const Series& x, const SignalSeries& signal, const BacktestConfig& config) {
  return run_backtest(x, signal.colors(), config);
}

double buy_and_hold_profit(const Series& x, double contract_multiplier) {
  return (x.back() - x.front()) * contract_multiplier;
}

BacktestReport compute_report(const TradeLedger& ledger, const Series& x) {
  ledger.config.validate();
  BacktestReport r;
  r.n_trades = ledger.trades.size();

  double run = 0.0;
  bool in_run = false;
  for (const Trade& t : ledger.trades) {
    if (t.exit_index >= x.size() || t.entry_index >= t.exit_index) {
      throw InvalidArgument("report: ledger does not match the price series");
    }
    r.total_net_profit += t.net_pnl;
    if (t.net_pnl > 0.0) {
      ++r.n_winning;
      r.total_profit_winning += t.net_pnl;
      if (in_run) {
        r.greatest_loss_between_wins = std::min(r.greatest_loss_between_wins, run);
        in_run = false;
      }
    } else {
      ++r.n_losing;
      r.total_loss_losing += t.net_pnl;
      run = in_run ? run + t.net_pnl : t.net_pnl;
      in_run = true;
    }
    if (t.direction == Direction::long_) {
      ++r.n_long;
      r.total_net_long += t.net_pnl;
    } else {
      ++r.n_short;
      r.total_net_short += t.net_pnl;
    }
  }
  if (in_run) {
    r.greatest_loss_between_wins = std::min(r.greatest_loss_between_wins, run);
  }

  auto mean = [](double total, std::size_t n) { return n > 0 ? total / static_cast<double>(n) : 0.0; };
  r.averages_defined = r.n_trades > 0;
  r.avg_net_per_trade = mean(r.total_net_profit, r.n_trades);
  r.pct_winning = r.n_trades > 0 ? 100.0 * static_cast<double>(r.n_winning) / static_cast<double>(r.n_trades) : 0.0;
  r.avg_profit_winning = mean(r.total_profit_winning, r.n_winning);
  r.avg_loss_losing = mean(r.total_loss_losing, r.n_losing);
  r.avg_net_long = mean(r.total_net_long, r.n_long);
  r.avg_net_short = mean(r.total_net_short, r.n_short);

  r.profit_factor_defined = r.total_loss_losing != 0.0;
  r.profit_factor = r.profit_factor_defined ? r.total_profit_winning / std::abs(r.total_loss_losing) : 0.0;

  r.ratio_ap_al_defined = r.n_winning > 0 && r.avg_loss_losing != 0.0;
  r.ratio_ap_al = r.ratio_ap_al_defined ? r.avg_profit_winning / std::abs(r.avg_loss_losing) : 0.0;

  r.tpi = buy_and_hold_profit(x, ledger.config.contract_multiplier);
  r.ratio_tp_tpi_defined = r.tpi != 0.0;
  r.ratio_tp_tpi = r.ratio_tp_tpi_defined ? r.total_profit_winning / r.tpi : 0.0;
  return r;
}

}  // namespace nolag
