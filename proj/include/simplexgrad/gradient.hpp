#ifndef SIMPLEXGRAD_GRADIENT_HPP
#define SIMPLEXGRAD_GRADIENT_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simplexgrad/errors.hpp"
#include "simplexgrad/matrix.hpp"
#include "simplexgrad/simplex.hpp"

namespace simplexgrad {

// Default relative tolerance of the regularity gate in front of the
// structure-exploiting gradient formulas.
inline constexpr double default_regularity_tol = 1e-8;

// Callable usable as an objective: maps a point (span of coordinates) to a
// double.
template <class F>
concept PointEvaluator =
    std::invocable<F&, std::span<const double>> &&
    std::convertible_to<std::invoke_result_t<F&, std::span<const double>>,
                        double>;

// Function values at the n+1 vertices, in vertex order.  The value at the
// centroid is optional; simplex gradients never need it (the estimate is
// provably independent of it) but callers may carry it along.
struct SampleSet {
  std::vector<double> values;
  std::optional<double> centroid_value;
};

enum class GradientOrder { FirstOrder, SecondOrder };

struct GradientEstimate {
  std::vector<double> gradient;
  GradientOrder order = GradientOrder::FirstOrder;
  std::vector<double> h_used;  // radii the estimate consumed
};

// Evaluates f at the n+1 vertices of an aligned simplex in vertex order,
// reusing one work vector so the cost is O(n) space and one evaluation per
// vertex.  Each visited point is bitwise identical to vertex(simplex, j).
template <PointEvaluator F>
SampleSet sample_at_vertices(F&& f, const AlignedRegularSimplex& simplex) {
  const int n = simplex.dimension();
  const SimplexConstants c = constants(n, simplex.orientation);
  const detail::ArmScalars s = detail::arm_scalars(c, simplex.orientation);
  const auto un = static_cast<std::size_t>(n);

  SampleSet samples;
  samples.values.resize(un + 1);

  std::vector<double> w(un);
  for (std::size_t i = 0; i < un; ++i)
    w[i] = simplex.centroid[i] + simplex.h * s.off;

  auto evaluate = [&](int j) -> double {
    double value;
    try {
      value = static_cast<double>(f(std::span<const double>(w)));
    } catch (const std::exception& e) {
      throw EvaluationError(
          "objective threw at vertex " + std::to_string(j) + ": " + e.what(),
          j);
    }
    if (!std::isfinite(value)) {
      throw EvaluationError(
          "objective returned a non-finite value at vertex " +
              std::to_string(j),
          j);
    }
    return value;
  };

  for (std::size_t j = 0; j < un; ++j) {
    const double base = w[j];
    w[j] = simplex.centroid[j] + simplex.h * s.diag;
    samples.values[j] = evaluate(static_cast<int>(j) + 1);
    w[j] = base;
  }
  for (std::size_t i = 0; i < un; ++i)
    w[i] = simplex.centroid[i] + simplex.h * s.last;
  samples.values[un] = evaluate(n + 1);
  return samples;
}

// First-order simplex gradient on an aligned regular simplex in O(n) flops
// and O(n) space: with d_j = f_j - f_{n+1},
//   g = (d - gamma * (e^T d) * e) / (alpha * h).
// Working with the differences d keeps the subtractions exact when vertex
// values are close, which matters because the 1/h factor amplifies any
// rounding committed beforehand.
inline GradientEstimate aligned_gradient(const AlignedRegularSimplex& simplex,
                                         const SampleSet& samples) {
  const int n = simplex.dimension();
  const SimplexConstants c = constants(n, simplex.orientation);
  const auto un = static_cast<std::size_t>(n);
  if (samples.values.size() != un + 1) {
    throw DimensionError("need n+1 vertex values, got " +
                         std::to_string(samples.values.size()));
  }
  if (simplex.h == 0.0 || !std::isfinite(simplex.h)) {
    throw DegenerateSimplexError("simplex radius must be nonzero and finite");
  }

  const double f_last = samples.values[un];
  GradientEstimate estimate;
  estimate.gradient.resize(un);
  double dsum = 0.0;
  for (std::size_t i = 0; i < un; ++i) {
    const double d = samples.values[i] - f_last;
    estimate.gradient[i] = d;
    dsum += d;
  }
  const double scale = 1.0 / (simplex.h * c.alpha);
  const double shift = c.gamma * dsum;
  for (std::size_t i = 0; i < un; ++i) {
    estimate.gradient[i] = scale * (estimate.gradient[i] - shift);
  }
  estimate.order = GradientOrder::FirstOrder;
  estimate.h_used = {simplex.h};
  return estimate;
}

// First-order simplex gradient for a regular simplex in general position,
// in O(n^2) flops.  With Z the first n vertex columns, z0 the centroid and
//   u = (f_{1..n} - f_{n+1} e) / (alpha^2 h^2),
// the estimate is g = (Z - z0 e^T) u, evaluated column difference first so
// the small vertex-to-centroid offsets are formed before any scaling.
inline GradientEstimate general_gradient(
    const GeneralRegularSimplex& simplex, const SampleSet& samples,
    double rel_tol = default_regularity_tol) {
  const std::size_t n = simplex.vertices.rows();
  if (n < 1 || simplex.vertices.cols() != n + 1) {
    throw DimensionError("vertex matrix must be n x (n+1) with n >= 1");
  }
  if (samples.values.size() != n + 1) {
    throw DimensionError("need n+1 vertex values, got " +
                         std::to_string(samples.values.size()));
  }

  const RegularityReport report = validate_regular(simplex.vertices, rel_tol);
  if (!report.is_regular) {
    throw RegularityError(
        "vertex set is not a regular simplex: relative distance spread " +
            std::to_string(report.max_distance_spread) + " exceeds " +
            std::to_string(rel_tol),
        report.max_distance_spread);
  }

  // Trust supplied centroid/radius but insist they describe this simplex.
  const std::vector<double>* z0 = &report.centroid;
  if (simplex.centroid) {
    if (simplex.centroid->size() != n) {
      throw DimensionError("supplied centroid has wrong dimension");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = (*simplex.centroid)[i] - report.centroid[i];
      sq += d * d;
    }
    if (std::sqrt(sq) > 1e-6 * report.h) {
      throw std::invalid_argument(
          "supplied centroid is inconsistent with the vertex columns");
    }
    z0 = &*simplex.centroid;
  }

  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = simplex.vertices(i, 0) - (*z0)[i];
    sq += d * d;
  }
  const double derived_h = std::sqrt(sq);
  double h = derived_h;
  if (simplex.h) {
    if (!(*simplex.h > 0.0)) {
      throw DegenerateSimplexError("supplied radius must be positive");
    }
    if (std::abs(*simplex.h - derived_h) > 1e-6 * *simplex.h) {
      throw std::invalid_argument(
          "supplied radius is inconsistent with the vertex columns");
    }
    h = *simplex.h;
  }
  if (!(h > 0.0)) {
    throw DegenerateSimplexError("simplex radius must be positive");
  }

  const double alpha_sq =
      (static_cast<double>(n) + 1.0) / static_cast<double>(n);
  const double inv = 1.0 / (alpha_sq * h * h);
  const double f_last = samples.values[n];

  GradientEstimate estimate;
  estimate.gradient.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double u_j = inv * (samples.values[j] - f_last);
    for (std::size_t i = 0; i < n; ++i) {
      estimate.gradient[i] += (simplex.vertices(i, j) - (*z0)[i]) * u_j;
    }
  }
  estimate.order = GradientOrder::FirstOrder;
  estimate.h_used = {h};
  return estimate;
}

namespace detail {

// Solves the symmetric positive definite system m * x = rhs in place by
// unpivoted Cholesky.  Throws SingularSystemError when a pivot degenerates.
inline std::vector<double> cholesky_solve(Matrix<double> m,
                                          std::vector<double> rhs) {
  const std::size_t n = m.rows();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    max_diag = std::max(max_diag, std::abs(m(i, i)));
  const double floor = max_diag * static_cast<double>(n) * 1e-15;

  for (std::size_t k = 0; k < n; ++k) {
    double pivot = m(k, k);
    for (std::size_t p = 0; p < k; ++p) pivot -= m(k, p) * m(k, p);
    if (!(pivot > floor) || !std::isfinite(pivot)) {
      throw SingularSystemError(
          "normal-equation matrix is numerically singular at pivot " +
          std::to_string(k + 1));
    }
    const double root = std::sqrt(pivot);
    m(k, k) = root;
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = m(i, k);
      for (std::size_t p = 0; p < k; ++p) v -= m(i, p) * m(k, p);
      m(i, k) = v / root;
    }
  }

  // Forward then backward substitution with the factor L (lower triangle).
  for (std::size_t i = 0; i < n; ++i) {
    double v = rhs[i];
    for (std::size_t p = 0; p < i; ++p) v -= m(i, p) * rhs[p];
    rhs[i] = v / m(i, i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double v = rhs[ii];
    for (std::size_t p = ii + 1; p < n; ++p) v -= m(p, ii) * rhs[p];
    rhs[ii] = v / m(ii, ii);
  }
  return rhs;
}

// Solves a * x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> lu_solve(Matrix<double> a, std::vector<double> b) {
  const std::size_t n = a.rows();
  double max_entry = 0.0;
  for (double v : a.data()) max_entry = std::max(max_entry, std::abs(v));
  const double floor = max_entry * static_cast<double>(n) * 1e-15;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    double pivot = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > pivot) {
        pivot = std::abs(a(i, k));
        pivot_row = i;
      }
    }
    if (!(pivot > floor) || !std::isfinite(pivot)) {
      throw SingularSystemError(
          "determined system is numerically singular at column " +
          std::to_string(k + 1));
    }
    if (pivot_row != k) {
      for (std::size_t j = k; j < n; ++j)
        std::swap(a(k, j), a(pivot_row, j));
      std::swap(b[k], b[pivot_row]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = a(i, k) / a(k, k);
      a(i, k) = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
      b[i] -= factor * b[k];
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double v = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j) v -= a(ii, j) * b[j];
    b[ii] = v / a(ii, ii);
  }
  return b;
}

}  // namespace detail

// Reference least-squares gradient: forms the normal equations
//   (V V^T) g = V (delta_f / h)
// for the n x (n+1) arm matrix V and solves them by dense Cholesky.  This
// oracle deliberately exploits no structure (for a regular simplex V V^T
// happens to be alpha^2 I, but the solver does not know that); the fast
// paths are tested against it.
inline std::vector<double> ls_oracle_gradient(const Matrix<double>& arms,
                                              std::span<const double> delta_f,
                                              double h) {
  const std::size_t n = arms.rows();
  const std::size_t m = arms.cols();
  if (n < 1 || m != n + 1) {
    throw DimensionError("arm matrix must be n x (n+1) with n >= 1");
  }
  if (delta_f.size() != m) {
    throw DimensionError("need one value difference per arm");
  }
  if (h == 0.0 || !std::isfinite(h)) {
    throw DegenerateSimplexError("radius must be nonzero and finite");
  }

  Matrix<double> gram(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      double dot = 0.0;
      for (std::size_t j = 0; j < m; ++j) dot += arms(i, j) * arms(k, j);
      gram(i, k) = dot;
      gram(k, i) = dot;
    }
  }
  std::vector<double> rhs(n, 0.0);
  const double inv_h = 1.0 / h;
  for (std::size_t i = 0; i < n; ++i) {
    double dot = 0.0;
    for (std::size_t j = 0; j < m; ++j) dot += arms(i, j) * delta_f[j];
    rhs[i] = dot * inv_h;
  }
  return detail::cholesky_solve(std::move(gram), std::move(rhs));
}

// Determined-system gradient: solves the n x n interpolation conditions
//   (z_j - z_{n+1})^T g = f_j - f_{n+1},  j = 1..n,
// by Gaussian elimination with partial pivoting.  Works for any affinely
// independent vertex set, regular or not.
inline std::vector<double> determined_gradient(const Matrix<double>& vertices,
                                               std::span<const double> values) {
  const std::size_t n = vertices.rows();
  if (n < 1 || vertices.cols() != n + 1) {
    throw DimensionError("vertex matrix must be n x (n+1) with n >= 1");
  }
  if (values.size() != n + 1) {
    throw DimensionError("need n+1 vertex values");
  }
  Matrix<double> a(n, n, 0.0);
  std::vector<double> b(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      a(j, i) = vertices(i, j) - vertices(i, n);
    }
    b[j] = values[j] - values[n];
  }
  return detail::lu_solve(std::move(a), std::move(b));
}

// Inputs for the first-order error bounds: a Lipschitz constant of the true
// gradient, the simplex radius, and the dimension.
struct ErrorBoundInput {
  double lipschitz = 0.0;
  double h = 0.0;
  int n = 0;
};

// Worst-case error of the simplex gradient against the true gradient at the
// centroid: L * h * sqrt(n) / 2.
inline double error_bound_centroid(const ErrorBoundInput& input) {
  if (input.n < 1) throw DimensionError("dimension must be at least 1");
  if (input.lipschitz < 0.0 || input.h < 0.0) {
    throw std::invalid_argument("Lipschitz constant and radius must be >= 0");
  }
  return 0.5 * input.lipschitz * input.h *
         std::sqrt(static_cast<double>(input.n));
}

// Worst-case error against the true gradient at a vertex:
// (1 + sqrt(n)/2) * L * h.
inline double error_bound_vertex(const ErrorBoundInput& input) {
  if (input.n < 1) throw DimensionError("dimension must be at least 1");
  if (input.lipschitz < 0.0 || input.h < 0.0) {
    throw std::invalid_argument("Lipschitz constant and radius must be >= 0");
  }
  return (1.0 + 0.5 * std::sqrt(static_cast<double>(input.n))) *
         input.lipschitz * input.h;
}

}  // namespace simplexgrad

#endif  // SIMPLEXGRAD_GRADIENT_HPP
