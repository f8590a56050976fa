#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nolag/series.hpp"
#include "nolag/smoothing.hpp"

namespace nolag::testing {

inline std::string data_path(const std::string& name) { return std::string(NOLAG_TEST_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Column-oriented view of a CSV file with a header row. Cells stay strings.
class CsvTable {
 public:
  explicit CsvTable(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    std::getline(in, line);
    header_ = split(line);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      rows_.push_back(split(line));
    }
  }

  std::size_t rows() const { return rows_.size(); }
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::string>& row(std::size_t i) const { return rows_[i]; }

  std::vector<std::string> column(const std::string& name) const {
    std::size_t c = index(name);
    std::vector<std::string> out;
    for (const auto& r : rows_) out.push_back(r.at(c));
    return out;
  }

  std::vector<double> numbers(const std::string& name) const {
    std::vector<double> out;
    for (const auto& s : column(name)) out.push_back(std::stod(s));
    return out;
  }

 private:
  static std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
  }

  std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < header_.size(); ++i) {
      if (header_[i] == name) return i;
    }
    throw std::runtime_error("no column " + name);
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t n, double lo = -10.0, double hi = 10.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

inline Series random_series(std::mt19937_64& rng, std::size_t n, double lo = -10.0, double hi = 10.0) {
  return Series(random_values(rng, n, lo, hi));
}

// Strictly positive weights summing to 1.
inline Weights random_weights(std::mt19937_64& rng, std::size_t p) {
  std::uniform_real_distribution<double> dist(0.01, 1.0);
  std::vector<double> w(p);
  double sum = 0.0;
  for (double& x : w) sum += (x = dist(rng));
  for (double& x : w) x /= sum;
  return Weights(std::move(w));
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace nolag::testing
