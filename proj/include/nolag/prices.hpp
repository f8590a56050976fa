#pragma once

#include <chrono>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "nolag/series.hpp"

namespace nolag {

struct PriceRecord {
  std::chrono::year_month_day date;
  double close;
};

// Reads a `date,close` CSV: header row required, ISO-8601 dates strictly
// increasing, closes finite and positive. Blank lines are skipped.
// Errors are ParseError carrying the 1-based line number, or IoError.
std::vector<PriceRecord> load_csv(const std::filesystem::path& path);
std::vector<PriceRecord> parse_csv(std::istream& in);

std::chrono::year_month_day parse_iso_date(std::string_view text);
std::string format_iso_date(std::chrono::year_month_day date);

// Closing prices with tau = 1 bar, ignoring calendar gaps.
Series closes(const std::vector<PriceRecord>& records);

}  // namespace nolag
