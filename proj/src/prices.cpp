#include "nolag/prices.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "nolag/error.hpp"

namespace nolag {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool parse_digits(std::string_view s, int& out) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

std::chrono::year_month_day parse_iso_date(std::string_view text) {
  int y = 0;
  int m = 0;
  int d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' || !parse_digits(text.substr(0, 4), y) ||
      !parse_digits(text.substr(5, 2), m) || !parse_digits(text.substr(8, 2), d)) {
    throw InvalidArgument("invalid ISO-8601 date '" + std::string(text) + "', expected YYYY-MM-DD");
  }
  const std::chrono::year_month_day date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                         std::chrono::day{static_cast<unsigned>(d)}};
  if (!date.ok()) {
    throw InvalidArgument("invalid calendar date '" + std::string(text) + "'");
  }
  return date;
}

std::string format_iso_date(std::chrono::year_month_day date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

std::vector<PriceRecord> parse_csv(std::istream& in) {
  std::vector<PriceRecord> records;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(at_line(line_no) + "expected exactly two comma-separated fields", line_no);
    }
    const std::string_view first = trim(line.substr(0, comma));
    const std::string_view second = trim(line.substr(comma + 1));

    if (!header_seen) {
      if (lower(first) != "date" || lower(second) != "close") {
        throw ParseError(at_line(line_no) + "expected header 'date,close'", line_no);
      }
      header_seen = true;
      continue;
    }

    PriceRecord rec{};
    try {
      rec.date = parse_iso_date(first);
    } catch (const InvalidArgument& e) {
      throw ParseError(at_line(line_no) + e.what(), line_no);
    }

    auto [ptr, ec] = std::from_chars(second.data(), second.data() + second.size(), rec.close);
    if (second.empty() || ec != std::errc{} || ptr != second.data() + second.size()) {
      throw ParseError(at_line(line_no) + "malformed close value '" + std::string(second) + "'", line_no);
    }
    if (!std::isfinite(rec.close) || !(rec.close > 0.0)) {
      throw ParseError(at_line(line_no) + "close must be finite and positive", line_no);
    }
    if (!records.empty() && !(records.back().date < rec.date)) {
      throw ParseError(at_line(line_no) + "date " + format_iso_date(rec.date) + " is not after " +
                           format_iso_date(records.back().date),
                       line_no);
    }
    records.push_back(rec);
  }
  if (in.bad()) {
    throw IoError("read error");
  }
  if (records.empty()) {
    throw ParseError("no records", 0);
  }
  return records;
}

std::vector<PriceRecord> load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  try {
    return parse_csv(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

Series closes(const std::vector<PriceRecord>& records) {
  std::vector<double> v;
  v.reserve(records.size());
  for (const auto& r : records) {
    v.push_back(r.close);
  }
  return Series(std::move(v), 1.0);
}

}  // namespace nolag
