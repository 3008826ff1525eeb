#ifndef SIMPLEXGRAD_INTEGER_SIMPLEX_HPP
#define SIMPLEXGRAD_INTEGER_SIMPLEX_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "simplexgrad/errors.hpp"
#include "simplexgrad/matrix.hpp"
#include "simplexgrad/simplex.hpp"

namespace simplexgrad {

namespace detail {

inline bool is_perfect_square(long long v) {
  if (v < 0) return false;
  const auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  for (long long s = std::max(0LL, r - 1); s <= r + 1; ++s) {
    if (s * s == v) return true;
  }
  return false;
}

inline bool is_sum_of_two_squares(long long v) {
  for (long long a = 0; a * a <= v; ++a) {
    if (is_perfect_square(v - a * a)) return true;
  }
  return false;
}

}  // namespace detail

// Schoenberg's classification of the dimensions admitting a regular simplex
// with all-integer vertex coordinates:
//   (i)   n even and n+1 a perfect square,
//   (ii)  n = 3 (mod 4),
//   (iii) n = 1 (mod 4) and n+1 a sum of two squares.
inline bool schoenberg_feasible(int n) {
  if (n < 1) throw DimensionError("simplex dimension must be at least 1");
  const long long np1 = static_cast<long long>(n) + 1;
  if (n % 2 == 0 && detail::is_perfect_square(np1)) return true;
  if (n % 4 == 3) return true;
  if (n % 4 == 1 && detail::is_sum_of_two_squares(np1)) return true;
  return false;
}

// A regular simplex with exact integer vertex columns, centred at the
// origin.  The aligned unit-arm matrix factors as alpha * R with R rational
// whenever n+1 = s^2; `vertices` is scale * R, so each column has squared
// norm scale^2 * n / (n+1) exactly.
struct IntegerSimplex {
  Matrix<long long> vertices;  // n x (n+1), exact
  long long scale = 1;
};

// Exact integer coordinates for the aligned regular simplex, available
// whenever n+1 is a perfect square s^2.  The rational factor
// R = (I - gamma e e^T | -+ e/s) has denominator n*s; clearing it makes the
// first n columns n*s - (s -+ 1) on the diagonal and -(s -+ 1) off it, and
// the last column -+ n.  The common gcd is divided out.
inline IntegerSimplex integer_simplex(int n, Orientation orientation) {
  if (n < 1) throw DimensionError("simplex dimension must be at least 1");
  const long long np1 = static_cast<long long>(n) + 1;
  const auto s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(np1))));
  if (s * s != np1) {
    std::string msg = "no integer simplex from this construction for n = " +
                      std::to_string(n) + ": n+1 must be a perfect square";
    msg += schoenberg_feasible(n)
               ? " (an integer regular simplex exists for this n, but not on"
                 " the aligned pattern; see schoenberg_feasible)"
               : " (schoenberg_feasible(n) is false: no integer regular"
                 " simplex exists in this dimension)";
    throw InfeasibleConstructionError(msg);
  }

  // t = n * s * gamma, which is exactly s -+ 1 for the two orientations.
  const long long t = orientation == Orientation::Minus ? s - 1 : s + 1;
  const long long diag = static_cast<long long>(n) * s - t;
  const long long off = -t;
  const long long last =
      orientation == Orientation::Minus ? -static_cast<long long>(n)
                                        : static_cast<long long>(n);

  long long g = std::gcd(std::gcd(diag, t), static_cast<long long>(n));
  if (g == 0) g = 1;

  const auto un = static_cast<std::size_t>(n);
  Matrix<long long> m(un, un + 1, off / g);
  for (std::size_t j = 0; j < un; ++j) m(j, j) = diag / g;
  for (std::size_t i = 0; i < un; ++i) m(i, un) = last / g;

  return IntegerSimplex{std::move(m), static_cast<long long>(n) * s / g};
}

}  // namespace simplexgrad

#endif  // SIMPLEXGRAD_INTEGER_SIMPLEX_HPP
