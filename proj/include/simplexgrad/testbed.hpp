#ifndef SIMPLEXGRAD_TESTBED_HPP
#define SIMPLEXGRAD_TESTBED_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplexgrad/errors.hpp"
#include "simplexgrad/extrapolation.hpp"
#include "simplexgrad/gradient.hpp"
#include "simplexgrad/matrix.hpp"
#include "simplexgrad/simplex.hpp"

namespace simplexgrad {

// A benchmark objective with its analytic gradient.  dimension == 0 means
// the function accepts any dimension.
struct TestFunction {
  std::string name;
  int dimension = 0;
  std::function<double(std::span<const double>)> value;
  std::function<std::vector<double>(std::span<const double>)> gradient;
};

namespace detail {
inline void check_dimension(const TestFunction& f, std::size_t n) {
  if (f.dimension != 0 && static_cast<std::size_t>(f.dimension) != n) {
    throw DimensionError(f.name + " expects dimension " +
                         std::to_string(f.dimension) + ", got " +
                         std::to_string(n));
  }
}
}  // namespace detail

// --- built-in objectives ---------------------------------------------------

inline double rosenbrock(std::span<const double> y) {
  if (y.size() != 2) throw DimensionError("rosenbrock expects dimension 2");
  const double a = 1.0 - y[0];
  const double b = y[1] - y[0] * y[0];
  return a * a + 100.0 * b * b;
}

inline std::vector<double> rosenbrock_gradient(std::span<const double> y) {
  if (y.size() != 2) throw DimensionError("rosenbrock expects dimension 2");
  const double b = y[1] - y[0] * y[0];
  return {-2.0 * (1.0 - y[0]) - 400.0 * y[0] * b, 200.0 * b};
}

inline double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

inline std::vector<double> sphere_gradient(std::span<const double> x) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = 2.0 * x[i];
  return g;
}

// sum_i i * x_i + 1 with 1-based i: an affine function, so every simplex
// gradient should recover its slope exactly up to rounding.
inline double affine(std::span<const double> x) {
  double s = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += static_cast<double>(i + 1) * x[i];
  return s;
}

inline std::vector<double> affine_gradient(std::span<const double> x) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    g[i] = static_cast<double>(i + 1);
  return g;
}

// sum_i exp(x_i / i) with 1-based i: smooth, non-quadratic, any dimension.
inline double exp_sum(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += std::exp(x[i] / static_cast<double>(i + 1));
  return s;
}

inline std::vector<double> exp_sum_gradient(std::span<const double> x) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double inv = 1.0 / static_cast<double>(i + 1);
    g[i] = std::exp(x[i] * inv) * inv;
  }
  return g;
}

inline const std::vector<TestFunction>& builtin_functions() {
  static const std::vector<TestFunction> functions = {
      {"rosenbrock", 2, [](std::span<const double> x) { return rosenbrock(x); },
       [](std::span<const double> x) { return rosenbrock_gradient(x); }},
      {"sphere", 0, [](std::span<const double> x) { return sphere(x); },
       [](std::span<const double> x) { return sphere_gradient(x); }},
      {"affine", 0, [](std::span<const double> x) { return affine(x); },
       [](std::span<const double> x) { return affine_gradient(x); }},
      {"expsum", 0, [](std::span<const double> x) { return exp_sum(x); },
       [](std::span<const double> x) { return exp_sum_gradient(x); }},
  };
  return functions;
}

inline const TestFunction* find_builtin(std::string_view name) {
  for (const TestFunction& f : builtin_functions()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

// --- randomly rotated regular simplexes -------------------------------------

// Applies `reflections` random Householder reflections (default: n of them)
// to the aligned unit arms, then places the result around x0 at radius h.
// Reflections are orthogonal, so regularity is preserved exactly up to
// rounding.  Reproducible across platforms: reflection vectors are drawn
// from std::mt19937_64(seed), each component being 2u - 1 with
// u = (next() >> 11) * 2^-53.
inline GeneralRegularSimplex rotated_regular_simplex(
    std::span<const double> x0, double h, Orientation orientation,
    std::uint64_t seed, int reflections = -1) {
  const int n = static_cast<int>(x0.size());
  if (n < 1) throw DimensionError("centroid must be nonempty");
  if (!(h > 0.0)) throw std::invalid_argument("radius must be positive");
  if (reflections < 0) reflections = n;

  Matrix<double> basis = basis_matrix(n, orientation);
  const auto un = static_cast<std::size_t>(n);

  std::mt19937_64 rng(seed);
  std::vector<double> w(un);
  for (int k = 0; k < reflections; ++k) {
    double norm_sq = 0.0;
    do {
      norm_sq = 0.0;
      for (std::size_t i = 0; i < un; ++i) {
        const double u =
            static_cast<double>(rng() >> 11) * 0x1.0p-53;  // in [0, 1)
        w[i] = 2.0 * u - 1.0;
        norm_sq += w[i] * w[i];
      }
    } while (norm_sq < 1e-12);
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    for (std::size_t i = 0; i < un; ++i) w[i] *= inv_norm;

    for (std::size_t j = 0; j <= un; ++j) {
      double dot = 0.0;
      for (std::size_t i = 0; i < un; ++i) dot += w[i] * basis(i, j);
      const double twice = 2.0 * dot;
      for (std::size_t i = 0; i < un; ++i) basis(i, j) -= twice * w[i];
    }
  }

  GeneralRegularSimplex simplex;
  simplex.vertices = Matrix<double>(un, un + 1);
  for (std::size_t j = 0; j <= un; ++j) {
    for (std::size_t i = 0; i < un; ++i) {
      simplex.vertices(i, j) = x0[i] + h * basis(i, j);
    }
  }
  simplex.centroid = std::vector<double>(x0.begin(), x0.end());
  simplex.h = h;
  return simplex;
}

// --- Lipschitz-constant estimation ------------------------------------------

namespace detail {

// Forward-difference Jacobian of the analytic gradient, symmetrized.  Step
// per coordinate: 1e-4 * (1 + |x_i|).
inline Matrix<double> forward_difference_hessian(const TestFunction& f,
                                                 std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> point(x.begin(), x.end());
  const std::vector<double> g0 = f.gradient(point);
  if (g0.size() != n) {
    throw DimensionError(f.name + " gradient has wrong length");
  }
  Matrix<double> hess(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double step = 1e-4 * (1.0 + std::abs(point[i]));
    const double saved = point[i];
    point[i] = saved + step;
    const std::vector<double> gi = f.gradient(point);
    point[i] = saved;
    for (std::size_t k = 0; k < n; ++k) {
      hess(i, k) = (gi[k] - g0[k]) / step;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const double mean = 0.5 * (hess(i, k) + hess(k, i));
      hess(i, k) = mean;
      hess(k, i) = mean;
    }
  }
  return hess;
}

// Largest |eigenvalue| of a symmetric matrix by cyclic Jacobi sweeps.
inline double spectral_norm_symmetric(Matrix<double> a) {
  const std::size_t n = a.rows();
  if (n == 1) return std::abs(a(0, 0));
  for (int sweep = 0; sweep < 64; ++sweep) {
    double total = 0.0;
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) total += a(p, q) * a(p, q);
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (!(off > total * 1e-28)) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double api = a(p, i);
          const double aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
      }
    }
  }
  double largest = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    largest = std::max(largest, std::abs(a(i, i)));
  return largest;
}

}  // namespace detail

// Data-driven lower estimate of the Lipschitz constant of the gradient:
// || H(x0) - H(x1) ||_2 / || x0 - x1 ||, with finite-difference Hessians.
inline double estimate_lipschitz(const TestFunction& f,
                                 std::span<const double> x0,
                                 std::span<const double> x1) {
  if (x0.size() != x1.size() || x0.empty()) {
    throw DimensionError("points must be nonempty and of equal dimension");
  }
  detail::check_dimension(f, x0.size());
  double dist_sq = 0.0;
  for (std::size_t i = 0; i < x0.size(); ++i) {
    const double d = x0[i] - x1[i];
    dist_sq += d * d;
  }
  if (!(dist_sq > 0.0)) {
    throw std::invalid_argument("points must be distinct");
  }
  const Matrix<double> h0 = detail::forward_difference_hessian(f, x0);
  const Matrix<double> h1 = detail::forward_difference_hessian(f, x1);
  Matrix<double> diff(x0.size(), x0.size());
  for (std::size_t i = 0; i < x0.size(); ++i)
    for (std::size_t k = 0; k < x0.size(); ++k)
      diff(i, k) = h0(i, k) - h1(i, k);
  return detail::spectral_norm_symmetric(std::move(diff)) /
         std::sqrt(dist_sq);
}

// --- accuracy sweeps ---------------------------------------------------------

// One row of an accuracy-versus-radius sweep.  Errors are Euclidean norms
// against the analytic gradient at the centroid; `bound` is the centroid
// error bound L * h1 * sqrt(n) / 2.
struct SweepRow {
  double h1 = 0.0;
  double err_g1 = 0.0;
  double err_g2 = 0.0;
  double err_g12 = 0.0;
  double bound = 0.0;
};

// For each radius h1 in `h_values`, estimates the gradient at radius h1 and
// at h2 = eta * h1, extrapolates, and records the three errors plus the
// first-order bound with the supplied Lipschitz constant.
inline std::vector<SweepRow> h_sweep(const TestFunction& f,
                                     std::span<const double> x0,
                                     Orientation orientation,
                                     std::span<const double> h_values,
                                     double eta, double lipschitz) {
  const std::size_t n = x0.size();
  if (n < 1) throw DimensionError("centroid must be nonempty");
  detail::check_dimension(f, n);
  if (h_values.empty()) throw std::invalid_argument("no radii supplied");
  if (eta == 0.0 || eta == 1.0 || !std::isfinite(eta)) {
    throw std::invalid_argument("eta must be finite and not 0 or 1");
  }
  if (!(lipschitz >= 0.0)) {
    throw std::invalid_argument("Lipschitz constant must be >= 0");
  }

  const std::vector<double> truth =
      f.gradient(std::vector<double>(x0.begin(), x0.end()));
  auto error_norm = [&](std::span<const double> g) {
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = g[i] - truth[i];
      sq += d * d;
    }
    return std::sqrt(sq);
  };

  AlignedRegularSimplex simplex{std::vector<double>(x0.begin(), x0.end()),
                                1.0, orientation};
  std::vector<SweepRow> rows;
  rows.reserve(h_values.size());
  for (double h1 : h_values) {
    if (!(h1 > 0.0)) throw std::invalid_argument("radii must be positive");
    const double h2 = eta * h1;

    simplex.h = h1;
    const GradientEstimate g1 =
        aligned_gradient(simplex, sample_at_vertices(f.value, simplex));
    simplex.h = h2;
    const GradientEstimate g2 =
        aligned_gradient(simplex, sample_at_vertices(f.value, simplex));
    const GradientEstimate g12 =
        richardson(g1.gradient, h1, g2.gradient, h2);

    SweepRow row;
    row.h1 = h1;
    row.err_g1 = error_norm(g1.gradient);
    row.err_g2 = error_norm(g2.gradient);
    row.err_g12 = error_norm(g12.gradient);
    row.bound = error_bound_centroid(
        ErrorBoundInput{lipschitz, h1, static_cast<int>(n)});
    rows.push_back(row);
  }
  return rows;
}

// Least-squares slope of log(y) against log(x); the observed convergence
// order of an error sweep.  All entries must be positive.
inline double log_log_slope(std::span<const double> xs,
                            std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DimensionError("need at least two matching (x, y) pairs");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw std::invalid_argument("log-log slope needs positive data");
    }
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double count = static_cast<double>(xs.size());
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) {
    throw std::invalid_argument("x values do not separate in log scale");
  }
  return (count * sxy - sx * sy) / denom;
}

}  // namespace simplexgrad

#endif  // SIMPLEXGRAD_TESTBED_HPP
