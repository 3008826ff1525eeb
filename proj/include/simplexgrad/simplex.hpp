#ifndef SIMPLEXGRAD_SIMPLEX_HPP
#define SIMPLEXGRAD_SIMPLEX_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simplexgrad/errors.hpp"
#include "simplexgrad/matrix.hpp"

namespace simplexgrad {

// Which root of the regular-simplex quadratic the construction uses.  The
// two choices give mirror-image simplexes: Minus points the odd vertex at
// -e/sqrt(n), Plus at +e/sqrt(n).
enum class Orientation { Minus, Plus };

inline const char* to_string(Orientation orientation) {
  return orientation == Orientation::Minus ? "minus" : "plus";
}

// Scalars that define a regular simplex with unit arms around the origin:
// the first n arms are alpha * (e_j - gamma * e), the last is the unit
// vector along -+ e / sqrt(n).  They satisfy n*gamma^2 - 2*gamma + beta = 0
// and alpha^2 * beta * n = 1.
struct SimplexConstants {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

inline SimplexConstants constants(int n, Orientation orientation) {
  if (n < 1) throw DimensionError("simplex dimension must be at least 1");
  const double nd = static_cast<double>(n);
  const double root = 1.0 / std::sqrt(nd + 1.0);
  const double gamma =
      (orientation == Orientation::Minus ? 1.0 - root : 1.0 + root) / nd;
  return SimplexConstants{n, std::sqrt((nd + 1.0) / nd), 1.0 / (nd + 1.0),
                          gamma};
}

namespace detail {

// The three distinct component values occurring in unit arms.  vertex() and
// arm() both derive coordinates from these same scalars so that
// x0 + h * arm(j) reproduces vertex(j) bit for bit.
struct ArmScalars {
  double diag;  // component j of arm j (j <= n): alpha * (1 - gamma)
  double off;   // every other component of arm j (j <= n): -alpha * gamma
  double last;  // every component of arm n+1: -+ 1 / sqrt(n)
};

inline ArmScalars arm_scalars(const SimplexConstants& c,
                              Orientation orientation) {
  const double diag = c.alpha * (1.0 - c.gamma);
  const double off = -(c.alpha * c.gamma);
  const double sign = orientation == Orientation::Minus ? -1.0 : 1.0;
  const double last = sign / std::sqrt(static_cast<double>(c.n));
  return ArmScalars{diag, off, last};
}

inline void check_vertex_index(int n, int j) {
  if (j < 1 || j > n + 1) {
    throw std::out_of_range("vertex index " + std::to_string(j) +
                            " outside 1.." + std::to_string(n + 1));
  }
}

}  // namespace detail

// Unit arm j (1-based, j = 1..n+1) of the aligned regular simplex.
inline std::vector<double> arm(int n, Orientation orientation, int j) {
  const SimplexConstants c = constants(n, orientation);
  detail::check_vertex_index(n, j);
  const detail::ArmScalars s = detail::arm_scalars(c, orientation);
  if (j == n + 1) return std::vector<double>(static_cast<std::size_t>(n), s.last);
  std::vector<double> v(static_cast<std::size_t>(n), s.off);
  v[static_cast<std::size_t>(j - 1)] = s.diag;
  return v;
}

// All n+1 unit arms as the columns of an n x (n+1) matrix.
inline Matrix<double> basis_matrix(int n, Orientation orientation) {
  const SimplexConstants c = constants(n, orientation);
  const detail::ArmScalars s = detail::arm_scalars(c, orientation);
  const auto un = static_cast<std::size_t>(n);
  Matrix<double> m(un, un + 1, s.off);
  for (std::size_t j = 0; j < un; ++j) m(j, j) = s.diag;
  for (std::size_t i = 0; i < un; ++i) m(i, un) = s.last;
  return m;
}

// A regular simplex described implicitly by centroid, radius and
// orientation.  Vertices are generated on demand; nothing quadratic in n is
// ever stored.  A negative radius h mirrors every arm through the centroid
// (the 180-degree rotated simplex used by extrapolation schemes).
struct AlignedRegularSimplex {
  std::vector<double> centroid;
  double h = 1.0;
  Orientation orientation = Orientation::Minus;

  int dimension() const noexcept { return static_cast<int>(centroid.size()); }
};

// Vertex j (1-based) of an aligned simplex: centroid + h * arm(j),
// assembled componentwise from the same scalars arm() uses.
inline std::vector<double> vertex(const AlignedRegularSimplex& simplex, int j) {
  const int n = simplex.dimension();
  const SimplexConstants c = constants(n, simplex.orientation);
  detail::check_vertex_index(n, j);
  const detail::ArmScalars s = detail::arm_scalars(c, simplex.orientation);
  const auto un = static_cast<std::size_t>(n);
  std::vector<double> x(un);
  if (j == n + 1) {
    for (std::size_t i = 0; i < un; ++i)
      x[i] = simplex.centroid[i] + simplex.h * s.last;
  } else {
    for (std::size_t i = 0; i < un; ++i)
      x[i] = simplex.centroid[i] + simplex.h * s.off;
    x[static_cast<std::size_t>(j - 1)] =
        simplex.centroid[static_cast<std::size_t>(j - 1)] + simplex.h * s.diag;
  }
  return x;
}

// A simplex in general position, given by its vertices as columns.  The
// centroid and radius may be supplied when known; absent values are derived
// from the vertex matrix.
struct GeneralRegularSimplex {
  Matrix<double> vertices;  // n x (n+1)
  std::optional<std::vector<double>> centroid;
  std::optional<double> h;
};

struct RegularityReport {
  bool is_regular = false;
  std::vector<double> centroid;
  double h = 0.0;                     // mean centroid-to-vertex distance
  double max_distance_spread = 0.0;   // worst relative spread observed
};

// Checks whether the columns of `vertices` form a regular simplex: all
// centroid distances equal and all pairwise distances equal, up to the
// relative tolerance.  Cost is O(n^3) in the pairwise pass.
inline RegularityReport validate_regular(const Matrix<double>& vertices,
                                         double rel_tol) {
  const std::size_t n = vertices.rows();
  if (n < 1 || vertices.cols() != n + 1) {
    throw DimensionError("vertex matrix must be n x (n+1) with n >= 1");
  }
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("regularity tolerance must be positive");
  }

  RegularityReport report;
  report.centroid.assign(n, 0.0);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i < n; ++i) report.centroid[i] += vertices(i, j);
  const double inv_count = 1.0 / static_cast<double>(n + 1);
  for (std::size_t i = 0; i < n; ++i) report.centroid[i] *= inv_count;

  double min_c = std::numeric_limits<double>::infinity();
  double max_c = 0.0;
  double sum_c = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = vertices(i, j) - report.centroid[i];
      sq += d * d;
    }
    const double dist = std::sqrt(sq);
    min_c = std::min(min_c, dist);
    max_c = std::max(max_c, dist);
    sum_c += dist;
  }
  report.h = sum_c * inv_count;

  double min_p = std::numeric_limits<double>::infinity();
  double max_p = 0.0;
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      double sq = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = vertices(i, a) - vertices(i, b);
        sq += d * d;
      }
      const double dist = std::sqrt(sq);
      min_p = std::min(min_p, dist);
      max_p = std::max(max_p, dist);
    }
  }

  if (!(max_p > 0.0) || !(max_c > 0.0)) {
    // All vertices coincide: not a simplex at all.
    report.is_regular = false;
    report.h = 0.0;
    report.max_distance_spread = std::numeric_limits<double>::infinity();
    return report;
  }

  report.max_distance_spread =
      std::max((max_p - min_p) / max_p, (max_c - min_c) / max_c);
  report.is_regular = report.max_distance_spread <= rel_tol;
  return report;
}

// Edge length of a regular simplex with arm length h in dimension n, and
// its inverse.  Every edge has length h * sqrt(2 + 2/n).
inline double edge_length(double h, int n) {
  if (n < 1) throw DimensionError("simplex dimension must be at least 1");
  if (!(h > 0.0)) throw std::invalid_argument("arm length must be positive");
  return h * std::sqrt(2.0 + 2.0 / static_cast<double>(n));
}

inline double arm_from_edge(double edge, int n) {
  if (n < 1) throw DimensionError("simplex dimension must be at least 1");
  if (!(edge > 0.0)) throw std::invalid_argument("edge length must be positive");
  return edge / std::sqrt(2.0 + 2.0 / static_cast<double>(n));
}

}  // namespace simplexgrad

#endif  // SIMPLEXGRAD_SIMPLEX_HPP
