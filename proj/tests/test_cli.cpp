#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "nolag/indicators.hpp"
#include "nolag/lag.hpp"
#include "nolag/prices.hpp"
#include "test_util.hpp"

namespace {

using namespace nolag::testing;

struct Result {
  int status;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into out when asked.
Result run_cli(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string("'") + NOLAG_CLI_PATH + "' " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

std::string fixture() { return data_path("synthetic_250.csv"); }

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

TEST(Cli, ConstantPricesGiveNoTrades) {
  std::string csv = "date,close\n";
  for (int d = 1; d <= 28; ++d) csv += "2018-02-" + std::string(d < 10 ? "0" : "") + std::to_string(d) + ",100\n";
  const std::string path = write_temp("constant.csv", csv);

  const Result r = run_cli("--input '" + path + "' --variant all --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* v : {"classic", "no_lag", "nyquist"}) {
    ASSERT_TRUE(j.contains(v)) << v;
    EXPECT_EQ(j[v]["n_trades"], 0);
    EXPECT_EQ(j[v]["total_net_profit"], 0.0);
    EXPECT_EQ(j[v]["TPI"], 0.0);
    EXPECT_FALSE(j[v]["ratio_TP_TPI_defined"]);
  }

  const Result text = run_cli("--input '" + path + "'");
  ASSERT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("Number of trades"), std::string::npos);
}

TEST(Cli, MissingInputFails) {
  const Result r = run_cli("--input /no/such/file.csv", true);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("/no/such/file.csv"), std::string::npos) << r.out;
}

TEST(Cli, MalformedInputFails) {
  const std::string path = write_temp("dup.csv", "date,close\n2018-01-02,1\n2018-01-02,2\n");
  const Result r = run_cli("--input '" + path + "'", true);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
}

TEST(Cli, RejectsBadFlags) {
  EXPECT_NE(run_cli("--input '" + fixture() + "' --variant fancy").status, 0);
  EXPECT_NE(run_cli("--input '" + fixture() + "' --mode chart").status, 0);
  EXPECT_NE(run_cli("--input '" + fixture() + "' --mode ledger --json").status, 0);
  EXPECT_NE(run_cli("--input '" + fixture() + "' --multiplier 0").status, 0);
  EXPECT_NE(run_cli("--input '" + fixture() + "' --cost -1").status, 0);
  EXPECT_NE(run_cli("").status, 0);
}

// Series mode on 60 bars: row count, header, and every number equal to the
// in-memory value printed at 12 significant digits.
TEST(Cli, NyquistSeriesRoundTrip) {
  const auto records = nolag::load_csv(fixture());
  std::string csv = "date,close\n";
  for (std::size_t i = 0; i < 60; ++i) {
    csv += nolag::format_iso_date(records[i].date) + "," + g12(records[i].close) + "\n";
  }
  const std::string path = write_temp("sixty.csv", csv);

  const Result r = run_cli("--input '" + path + "' --variant nyquist --mode series");
  ASSERT_EQ(r.status, 0);
  const std::string out_path = write_temp("sixty_series.csv", r.out);
  const CsvTable t(out_path);
  ASSERT_EQ(t.rows(), 60u);
  EXPECT_EQ(t.header(), (std::vector<std::string>{"index", "date", "close", "n_12_3", "n_26_3", "n_26_6", "macd",
                                                  "macds", "macdh", "color"}));

  std::vector<double> closes;
  for (std::size_t i = 0; i < 60; ++i) closes.push_back(records[i].close);
  const nolag::Series x(closes);
  const nolag::MacdTriple m = nolag::macd_nyquist(x);
  const nolag::Series n12 = nolag::nyquist_ma({12, 3})(x);
  const nolag::Series n263 = nolag::nyquist_ma({26, 3})(x);
  const nolag::Series n266 = nolag::nyquist_ma({26, 6})(x);
  const nolag::SignalSeries colors = nolag::impulse(x, nolag::Variant::nyquist);

  auto check = [&](const std::string& col, const nolag::Series& expected) {
    const auto parsed = t.numbers(col);
    for (std::size_t i = 0; i < 60; ++i) {
      ASSERT_EQ(parsed[i], std::stod(g12(expected[i]))) << col << " row " << i;
    }
  };
  check("close", x);
  check("n_12_3", n12);
  check("n_26_3", n263);
  check("n_26_6", n266);
  check("macd", m.macd);
  check("macds", m.signal);
  check("macdh", m.histogram);
  const auto col = t.column("color");
  for (std::size_t i = 0; i < 60; ++i) EXPECT_EQ(col[i][0], static_cast<char>(colors[i]));
  EXPECT_EQ(t.column("date")[59], nolag::format_iso_date(records[59].date));
}

TEST(Cli, SeriesAllVariantsHasSuffixedColumns) {
  const Result r = run_cli("--input '" + fixture() + "' --mode series");
  ASSERT_EQ(r.status, 0);
  const CsvTable t(write_temp("all_series.csv", r.out));
  EXPECT_EQ(t.rows(), 250u);
  EXPECT_EQ(t.header().size(), 6u + 3u * 4u);
  EXPECT_EQ(t.header().back(), "color_nyquist");
}

TEST(Cli, LedgerMatchesGoldenFiles) {
  std::string all;
  for (const char* v : {"classic", "no_lag", "nyquist"}) {
    const std::string golden = read_file(data_path(std::string("golden/synthetic_250_") + v + "_ledger.csv"));
    const Result r = run_cli("--input '" + fixture() + "' --mode ledger --variant " + v);
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden) << v;

    const std::string golden_nf =
        read_file(data_path(std::string("golden/synthetic_250_") + v + "_noforce_ledger.csv"));
    const Result nf = run_cli("--input '" + fixture() + "' --mode ledger --no-force-close --variant " + v);
    ASSERT_EQ(nf.status, 0);
    EXPECT_EQ(nf.out, golden_nf) << v;

    all += all.empty() ? golden : golden.substr(golden.find('\n') + 1);
  }
  EXPECT_EQ(run_cli("--input '" + fixture() + "' --mode ledger").out, all);
}

TEST(Cli, JsonReportMatchesGoldenAndConserves) {
  for (const char* v : {"classic", "no_lag", "nyquist"}) {
    const Result r = run_cli("--input '" + fixture() + "' --json --variant " + v);
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto golden = nlohmann::json::parse(read_file(data_path(std::string("golden/synthetic_250_") + v + "_report.json")));
    EXPECT_EQ(j["variant"], v);
    for (const auto& [key, value] : golden.items()) {
      ASSERT_TRUE(j.contains(key)) << key;
      EXPECT_NEAR(j[key].get<double>(), value.get<double>(), 0.006) << v << " " << key;
    }
    EXPECT_NEAR(j["total_net_profit"].get<double>(), j["TP"].get<double>() + j["TL"].get<double>(), 0.011);
  }
}

TEST(Cli, CostAndMultiplierOverrides) {
  const Result base = run_cli("--input '" + fixture() + "' --json --variant classic");
  const Result free = run_cli("--input '" + fixture() + "' --json --variant classic --cost 0 --multiplier 1");
  ASSERT_EQ(base.status, 0);
  ASSERT_EQ(free.status, 0);
  const auto a = nlohmann::json::parse(base.out);
  const auto b = nlohmann::json::parse(free.out);
  EXPECT_EQ(a["n_trades"], b["n_trades"]);
  const double n = a["n_trades"].get<double>();
  // net(cost 3, x50) = 50 * gross(x1) - 6 per trade
  EXPECT_NEAR(a["total_net_profit"].get<double>(), 50.0 * b["total_net_profit"].get<double>() - 6.0 * n, 0.5);
}

}  // namespace
