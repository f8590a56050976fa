// Command-line driver: runs the impulse-system backtest on a `date,close`
// CSV and prints reports, trade ledgers or indicator series.
//
// Uses the library exclusively through its C interface.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nolag/nolag.h"

namespace {

struct SeriesDeleter {
  void operator()(nolag_series* s) const { nolag_series_destroy(s); }
};
struct PricesDeleter {
  void operator()(nolag_prices* p) const { nolag_prices_destroy(p); }
};
struct LedgerDeleter {
  void operator()(nolag_ledger* l) const { nolag_ledger_destroy(l); }
};
struct OperatorDeleter {
  void operator()(nolag_operator* o) const { nolag_op_destroy(o); }
};

using SeriesPtr = std::unique_ptr<nolag_series, SeriesDeleter>;
using PricesPtr = std::unique_ptr<nolag_prices, PricesDeleter>;
using LedgerPtr = std::unique_ptr<nolag_ledger, LedgerDeleter>;
using OperatorPtr = std::unique_ptr<nolag_operator, OperatorDeleter>;

void check(nolag_status status) {
  if (status != NOLAG_OK) {
    throw std::runtime_error(nolag_last_error());
  }
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string money(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid "-0.00".
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

double round_cents(double v) { return std::round(v * 100.0) / 100.0; }
double round_sig12(double v) { return std::stod(num(v)); }

struct VariantInfo {
  nolag_variant id;
  const char* name;
};

constexpr VariantInfo kVariants[] = {
    {NOLAG_VARIANT_CLASSIC, "classic"},
    {NOLAG_VARIANT_NO_LAG, "no_lag"},
    {NOLAG_VARIANT_NYQUIST, "nyquist"},
};

std::vector<VariantInfo> select_variants(const std::string& name) {
  if (name == "all") return {std::begin(kVariants), std::end(kVariants)};
  for (const auto& v : kVariants) {
    if (name == v.name) return {v};
  }
  throw std::runtime_error("unknown variant '" + name + "'");
}

struct Run {
  VariantInfo variant;
  std::string colors;
  LedgerPtr ledger;
  nolag_report report{};
};

Run run_variant(const VariantInfo& v, const nolag_series* x, const nolag_backtest_config& config) {
  Run r{v, std::string(nolag_series_size(x), 'B'), nullptr, {}};
  check(nolag_impulse(x, v.id, r.colors.data(), r.colors.size()));
  nolag_ledger* ledger = nullptr;
  check(nolag_backtest_run(x, r.colors.data(), r.colors.size(), &config, &ledger));
  r.ledger.reset(ledger);
  check(nolag_report_compute(r.ledger.get(), x, &r.report));
  return r;
}

nlohmann::ordered_json report_json(const nolag_report& r) {
  nlohmann::ordered_json j;
  j["n_trades"] = r.n_trades;
  j["n_winning"] = r.n_winning;
  j["n_losing"] = r.n_losing;
  j["total_net_profit"] = round_cents(r.total_net_profit);
  j["pct_winning"] = round_sig12(r.pct_winning);
  j["avg_net_per_trade"] = round_cents(r.avg_net_per_trade);
  j["TP"] = round_cents(r.total_profit_winning);
  j["AP"] = round_cents(r.avg_profit_winning);
  j["TL"] = round_cents(r.total_loss_losing);
  j["AL"] = round_cents(r.avg_loss_losing);
  j["greatest_loss_between_wins"] = round_cents(r.greatest_loss_between_wins);
  j["n_long"] = r.n_long;
  j["total_net_long"] = round_cents(r.total_net_long);
  j["avg_net_long"] = round_cents(r.avg_net_long);
  j["n_short"] = r.n_short;
  j["total_net_short"] = round_cents(r.total_net_short);
  j["avg_net_short"] = round_cents(r.avg_net_short);
  j["profit_factor"] = round_sig12(r.profit_factor);
  j["ratio_AP_AL"] = round_sig12(r.ratio_ap_al);
  j["TPI"] = round_cents(r.tpi);
  j["ratio_TP_TPI"] = round_sig12(r.ratio_tp_tpi);
  j["profit_factor_defined"] = r.profit_factor_defined != 0;
  j["ratio_AP_AL_defined"] = r.ratio_ap_al_defined != 0;
  j["ratio_TP_TPI_defined"] = r.ratio_tp_tpi_defined != 0;
  j["averages_defined"] = r.averages_defined != 0;
  return j;
}

void print_report_json(const std::vector<Run>& runs) {
  nlohmann::ordered_json out;
  if (runs.size() == 1) {
    out["variant"] = runs.front().variant.name;
    out.update(report_json(runs.front().report));
  } else {
    for (const auto& r : runs) {
      out[r.variant.name] = report_json(r.report);
    }
  }
  std::cout << out.dump(2) << '\n';
}

void print_report_text(const std::vector<Run>& runs, const nolag_prices* prices,
                       const nolag_backtest_config& config) {
  const std::size_t n = nolag_prices_size(prices);
  std::printf("bars: %zu (%s .. %s)\n", n, nolag_prices_date(prices, 0), nolag_prices_date(prices, n - 1));
  std::printf("cost per side: %s USD, multiplier: %s USD/point, close one bar before end: %s\n\n",
              money(config.cost_per_side).c_str(), num(config.contract_multiplier).c_str(),
              config.close_before_end ? "yes" : "no");

  auto row = [&](const char* label, auto cell) {
    std::printf("%-44s", label);
    for (const auto& r : runs) {
      std::printf("%16s", cell(r.report).c_str());
    }
    std::printf("\n");
  };
  auto ratio = [](double v, int defined) {
    if (!defined) return std::string("n/a");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::printf("%-44s", "");
  for (const auto& r : runs) {
    std::printf("%16s", r.variant.name);
  }
  std::printf("\n");
  row("Number of trades", [](const nolag_report& r) { return std::to_string(r.n_trades); });
  row("Total net profit", [](const nolag_report& r) { return money(r.total_net_profit); });
  row("Percentage of winning trades", [](const nolag_report& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", r.pct_winning);
    return std::string(buf);
  });
  row("Average net profit per trade", [](const nolag_report& r) { return money(r.avg_net_per_trade); });
  row("Total net profit of winning trades (TP)", [](const nolag_report& r) { return money(r.total_profit_winning); });
  row("Average net profit per winning trade (AP)", [](const nolag_report& r) { return money(r.avg_profit_winning); });
  row("Total net loss of losing trades (TL)", [](const nolag_report& r) { return money(r.total_loss_losing); });
  row("Average net loss per losing trade (AL)", [](const nolag_report& r) { return money(r.avg_loss_losing); });
  row("Greatest loss between two winning trades",
      [](const nolag_report& r) { return money(r.greatest_loss_between_wins); });
  row("Total net profit of long trades", [](const nolag_report& r) { return money(r.total_net_long); });
  row("Average net profit per long trade", [](const nolag_report& r) { return money(r.avg_net_long); });
  row("Total net profit of short trades", [](const nolag_report& r) { return money(r.total_net_short); });
  row("Average net profit per short trade", [](const nolag_report& r) { return money(r.avg_net_short); });
  row("Profit factor TP/|TL|", [&](const nolag_report& r) { return ratio(r.profit_factor, r.profit_factor_defined); });
  row("Ratio AP/|AL|", [&](const nolag_report& r) { return ratio(r.ratio_ap_al, r.ratio_ap_al_defined); });
  row("Ratio TP/TPI", [&](const nolag_report& r) { return ratio(r.ratio_tp_tpi, r.ratio_tp_tpi_defined); });
  row("Buy-and-hold profit (TPI)", [](const nolag_report& r) { return money(r.tpi); });
  std::printf("\nTrades are round trips, each charged two sides of cost. Zero-profit trades count as losing.\n");
}

void print_ledger(const std::vector<Run>& runs, const nolag_prices* prices) {
  std::printf("variant,trade,direction,entry_index,entry_date,exit_index,exit_date,entry_price,exit_price,"
              "gross_pnl,net_pnl\n");
  for (const auto& r : runs) {
    const std::size_t n = nolag_ledger_size(r.ledger.get());
    for (std::size_t i = 0; i < n; ++i) {
      nolag_trade t{};
      check(nolag_ledger_trade(r.ledger.get(), i, &t));
      std::printf("%s,%zu,%s,%zu,%s,%zu,%s,%s,%s,%s,%s\n", r.variant.name, i + 1,
                  t.direction > 0 ? "long" : "short", t.entry_index, nolag_prices_date(prices, t.entry_index),
                  t.exit_index, nolag_prices_date(prices, t.exit_index), num(t.entry_price).c_str(),
                  num(t.exit_price).c_str(), money(t.gross_pnl).c_str(), money(t.net_pnl).c_str());
    }
  }
}

SeriesPtr eval_nyquist(std::size_t p1, std::size_t p2, const nolag_series* x) {
  nolag_operator* op = nullptr;
  check(nolag_op_nyquist(p1, p2, &op));
  OperatorPtr holder(op);
  nolag_series* y = nullptr;
  check(nolag_op_eval(op, x, &y));
  return SeriesPtr(y);
}

void print_series(const std::vector<Run>& runs, const nolag_prices* prices, const nolag_series* x) {
  const SeriesPtr n12_3 = eval_nyquist(12, 3, x);
  const SeriesPtr n26_3 = eval_nyquist(26, 3, x);
  const SeriesPtr n26_6 = eval_nyquist(26, 6, x);

  struct Columns {
    SeriesPtr macd, signal, hist;
  };
  std::vector<Columns> cols;
  for (const auto& r : runs) {
    nolag_series* m = nullptr;
    nolag_series* s = nullptr;
    nolag_series* h = nullptr;
    check(nolag_macd(x, r.variant.id, &m, &s, &h));
    cols.push_back({SeriesPtr(m), SeriesPtr(s), SeriesPtr(h)});
  }

  const bool single = runs.size() == 1;
  std::string header = "index,date,close,n_12_3,n_26_3,n_26_6";
  for (const auto& r : runs) {
    const std::string suffix = single ? "" : std::string("_") + r.variant.name;
    header += ",macd" + suffix + ",macds" + suffix + ",macdh" + suffix + ",color" + suffix;
  }
  std::printf("%s\n", header.c_str());

  const std::size_t n = nolag_series_size(x);
  for (std::size_t i = 0; i < n; ++i) {
    std::string line = std::to_string(i) + "," + nolag_prices_date(prices, i) + "," +
                       num(nolag_series_data(x)[i]) + "," + num(nolag_series_data(n12_3.get())[i]) + "," +
                       num(nolag_series_data(n26_3.get())[i]) + "," + num(nolag_series_data(n26_6.get())[i]);
    for (std::size_t v = 0; v < runs.size(); ++v) {
      line += "," + num(nolag_series_data(cols[v].macd.get())[i]);
      line += "," + num(nolag_series_data(cols[v].signal.get())[i]);
      line += "," + num(nolag_series_data(cols[v].hist.get())[i]);
      line += ",";
      line += runs[v].colors[i];
    }
    std::printf("%s\n", line.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Impulse-system backtests with lag-free indicators"};

  std::string input;
  std::string variant = "all";
  std::string mode = "report";
  nolag_backtest_config config = nolag_backtest_config_default();
  bool no_force_close = false;
  bool json = false;

  app.add_option("--input", input, "CSV file with a `date,close` header")->required();
  app.add_option("--variant", variant, "Impulse system variant")
      ->check(CLI::IsMember({"classic", "no_lag", "nyquist", "all"}))
      ->capture_default_str();
  app.add_option("--mode", mode, "Output: performance report, trade ledger CSV or indicator series CSV")
      ->check(CLI::IsMember({"report", "ledger", "series"}))
      ->capture_default_str();
  app.add_option("--cost", config.cost_per_side, "Transaction cost per entry or exit, USD")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--multiplier", config.contract_multiplier, "Contract value per index point, USD")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--no-force-close", no_force_close, "Keep positions open until the last bar");
  app.add_flag("--json", json, "Machine-readable report (report mode only)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (json && mode != "report") {
      throw std::runtime_error("--json applies to --mode report only");
    }
    config.close_before_end = no_force_close ? 0 : 1;

    nolag_prices* raw_prices = nullptr;
    check(nolag_prices_load_csv(input.c_str(), &raw_prices));
    const PricesPtr prices(raw_prices);

    nolag_series* raw_x = nullptr;
    check(nolag_prices_series(prices.get(), &raw_x));
    const SeriesPtr x(raw_x);

    std::vector<Run> runs;
    for (const auto& v : select_variants(variant)) {
      runs.push_back(run_variant(v, x.get(), config));
    }

    if (mode == "report") {
      if (json) {
        print_report_json(runs);
      } else {
        print_report_text(runs, prices.get(), config);
      }
    } else if (mode == "ledger") {
      print_ledger(runs, prices.get());
    } else {
      print_series(runs, prices.get(), x.get());
    }
    std::fflush(stdout);
  } catch (const std::exception& e) {
    std::fflush(stdout);
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
