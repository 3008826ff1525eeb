#ifndef SIMPLEXGRAD_IO_HPP
#define SIMPLEXGRAD_IO_HPP

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "simplexgrad/errors.hpp"
#include "simplexgrad/matrix.hpp"

namespace simplexgrad {

// Formats x with `precision` digits after the decimal point.  Values with
// 0.1 <= |x| < 1e16 (and exact zero) use fixed notation, everything else
// scientific; at precision 17 either form round-trips to the same double.
inline std::string format_number(double x, int precision) {
  if (precision < 1 || precision > 30) {
    throw std::invalid_argument("precision must be between 1 and 30");
  }
  char buf[64];
  const double ax = std::fabs(x);
  const bool fixed = x == 0.0 || (ax >= 0.1 && ax < 1e16);
  std::snprintf(buf, sizeof buf, fixed ? "%.*f" : "%.*e", precision, x);
  return buf;
}

// Writes a matrix as whitespace-separated rows, one row per line.
template <class T>
void write_matrix(std::ostream& os, const Matrix<T>& m, int precision = 15) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      if constexpr (std::is_floating_point_v<T>) {
        os << format_number(m(i, j), precision);
      } else {
        os << m(i, j);
      }
    }
    os << '\n';
  }
}

inline void write_vector(std::ostream& os, std::span<const double> v,
                         int precision = 15) {
  for (double x : v) os << format_number(x, precision) << '\n';
}

// Reads a whitespace-separated numeric matrix.  Blank lines are skipped and
// `#` starts a comment that runs to the end of the line.
inline Matrix<double> read_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        row.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse number: '" + token + "'");
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument(
          "ragged matrix: rows have different field counts");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("no numeric data found");

  Matrix<double> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Reads a vector given as either a single row or a single column.
inline std::vector<double> read_vector(std::istream& in) {
  const Matrix<double> m = read_matrix(in);
  if (m.rows() == 1) {
    return std::vector<double>(m.row(0).begin(), m.row(0).end());
  }
  if (m.cols() == 1) return m.col(0);
  throw std::invalid_argument("expected a single row or column of numbers");
}

inline std::ifstream open_input_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path.string());
  }
  return in;
}

inline Matrix<double> read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in = open_input_file(path);
  return read_matrix(in);
}

inline std::vector<double> read_vector_file(const std::filesystem::path& path) {
  std::ifstream in = open_input_file(path);
  return read_vector(in);
}

// Parses a comma- or whitespace-separated list of numbers, e.g. a --x0 or
// --h-list command-line argument.
inline std::vector<double> parse_number_list(std::string_view text) {
  std::string normalized(text);
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream fields(normalized);
  std::vector<double> out;
  std::string token;
  while (fields >> token) {
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse number: '" + token + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

}  // namespace simplexgrad

#endif  // SIMPLEXGRAD_IO_HPP
