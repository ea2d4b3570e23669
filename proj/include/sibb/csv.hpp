#pragma once

#include <Eigen/Dense>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>
#include <vector>

#include "sibb/errors.hpp"

namespace sibb {

// Shortest round-trip decimal form; identical bytes for identical doubles,
// so file output is reproducible and load(save(x)) == x bitwise.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view tok, const std::string& context) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw DataError("non-numeric cell '" + std::string(tok) + "' in " + context);
  return v;
}

inline void write_csv(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open for writing: " + path.string());
  std::string line;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    line.clear();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) line += ',';
      line += format_double(m(i, j));
    }
    line += '\n';
    out << line;
  }
  if (!out) throw DataError("write failed: " + path.string());
}

// Plain decimal CSV, '.' decimal separator, ',' field separator, LF or CRLF.
inline Eigen::MatrixXd read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("missing file: " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t ncols = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    const std::string ctx = path.string() + " row " + std::to_string(rows.size());
    while (true) {
      const auto comma = line.find(',', start);
      const auto tok = std::string_view(line).substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      row.push_back(parse_double(tok, ctx));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (ncols == 0) ncols = row.size();
    if (row.size() != ncols)
      throw DataError("ragged row in " + path.string() + ": row " +
                      std::to_string(rows.size()) + " has " +
                      std::to_string(row.size()) + " cells, expected " +
                      std::to_string(ncols));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError("empty CSV: " + path.string());
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(ncols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace sibb
