#include <simplexgrad/testbed.hpp>

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace sg = simplexgrad;

namespace {

const std::vector<double> kStudyPoint = {1.1, 1.1 * 1.1 + 1e-5};

std::vector<double> central_difference_gradient(const sg::TestFunction& f,
                                                std::span<const double> x) {
  std::vector<double> point(x.begin(), x.end());
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double step = 1e-6 * (1.0 + std::abs(point[i]));
    const double saved = point[i];
    point[i] = saved + step;
    const double fp = f.value(point);
    point[i] = saved - step;
    const double fm = f.value(point);
    point[i] = saved;
    g[i] = (fp - fm) / (2.0 * step);
  }
  return g;
}

}  // namespace

TEST(Rosenbrock, GoldenValuesAndMinimizer) {
  EXPECT_EQ(sg::rosenbrock(std::vector<double>{1.0, 1.0}), 0.0);
  const std::vector<double> g_min =
      sg::rosenbrock_gradient(std::vector<double>{1.0, 1.0});
  EXPECT_EQ(g_min[0], 0.0);
  EXPECT_EQ(g_min[1], 0.0);

  const std::vector<double> g_study = sg::rosenbrock_gradient(kStudyPoint);
  EXPECT_NEAR(g_study[0], 0.195599999999971, 1e-13);
  EXPECT_NEAR(g_study[1], 0.002000000000013, 1e-13);

  // 0.9^2 rounds one ulp above 0.81, so the gradient sits ~1e-14 off the
  // exact-real value (-0.2, 0).
  const std::vector<double> g_second =
      sg::rosenbrock_gradient(std::vector<double>{0.9, 0.81});
  EXPECT_NEAR(g_second[0], -0.2, 1e-13);
  EXPECT_NEAR(g_second[1], 0.0, 1e-13);

  EXPECT_THROW(sg::rosenbrock(std::vector<double>{1.0, 2.0, 3.0}),
               sg::DimensionError);
  EXPECT_THROW(sg::rosenbrock_gradient(std::vector<double>{1.0}),
               sg::DimensionError);
}

TEST(BuiltinFunctions, GradientsMatchCentralDifferences) {
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  for (const sg::TestFunction& f : sg::builtin_functions()) {
    const int n = f.dimension == 0 ? 5 : f.dimension;
    for (int sample = 0; sample < 10; ++sample) {
      std::vector<double> x(n);
      for (double& v : x) v = coord(rng);
      const std::vector<double> analytic = f.gradient(x);
      const std::vector<double> numeric = central_difference_gradient(f, x);
      for (int i = 0; i < n; ++i) {
        EXPECT_NEAR(analytic[i], numeric[i],
                    1e-6 * (1.0 + std::abs(analytic[i])))
            << f.name << " sample " << sample << " i=" << i;
      }
    }
  }
}

TEST(BuiltinFunctions, LookupByName) {
  ASSERT_NE(sg::find_builtin("rosenbrock"), nullptr);
  EXPECT_EQ(sg::find_builtin("rosenbrock")->dimension, 2);
  ASSERT_NE(sg::find_builtin("sphere"), nullptr);
  ASSERT_NE(sg::find_builtin("affine"), nullptr);
  ASSERT_NE(sg::find_builtin("expsum"), nullptr);
  EXPECT_EQ(sg::find_builtin("simplex"), nullptr);
}

TEST(RotatedSimplex, ZeroReflectionsReproducesTheAlignedVertices) {
  const std::vector<double> x0 = {0.25, -1.0, 2.5};
  const double h = 0.125;
  const sg::GeneralRegularSimplex rotated = sg::rotated_regular_simplex(
      x0, h, sg::Orientation::Minus, /*seed=*/5, /*reflections=*/0);
  const sg::AlignedRegularSimplex aligned{x0, h, sg::Orientation::Minus};
  for (int j = 1; j <= 4; ++j) {
    const std::vector<double> expected = sg::vertex(aligned, j);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(rotated.vertices(i, j - 1), expected[i])
          << "j=" << j << " i=" << i;
    }
  }
}

TEST(RotatedSimplex, StaysRegularAndDeterministic) {
  const std::vector<double> x0 = {0.4, -0.8, 1.6, 0.0, 2.2};
  for (std::uint64_t seed : {1ull, 7ull, 123ull}) {
    const sg::GeneralRegularSimplex a =
        sg::rotated_regular_simplex(x0, 0.3, sg::Orientation::Plus, seed);
    const sg::RegularityReport report = sg::validate_regular(a.vertices, 1e-10);
    EXPECT_TRUE(report.is_regular) << "seed " << seed;
    EXPECT_NEAR(report.h, 0.3, 0.3 * 1e-10);

    const sg::GeneralRegularSimplex b =
        sg::rotated_regular_simplex(x0, 0.3, sg::Orientation::Plus, seed);
    EXPECT_TRUE(a.vertices == b.vertices) << "seed " << seed;
  }
  const sg::GeneralRegularSimplex other =
      sg::rotated_regular_simplex(x0, 0.3, sg::Orientation::Plus, 8ull);
  EXPECT_FALSE(other.vertices ==
               sg::rotated_regular_simplex(x0, 0.3, sg::Orientation::Plus, 7ull)
                   .vertices);
}

TEST(RotatedSimplex, RejectsBadInputs) {
  const std::vector<double> x0 = {1.0, 2.0};
  EXPECT_THROW(
      sg::rotated_regular_simplex(x0, 0.0, sg::Orientation::Minus, 1),
      std::invalid_argument);
  EXPECT_THROW(sg::rotated_regular_simplex(std::vector<double>{}, 1.0,
                                           sg::Orientation::Minus, 1),
               sg::DimensionError);
}

TEST(EstimateLipschitz, ReproducesTheStudyValue) {
  // Quotient of Hessian variation between the study point and the first
  // vertex of its h = 1e-3 simplex; the study reports 1.0769e3.
  const sg::AlignedRegularSimplex simplex{kStudyPoint, 1e-3,
                                          sg::Orientation::Plus};
  const std::vector<double> x1 = sg::vertex(simplex, 1);
  const double estimate = sg::estimate_lipschitz(
      *sg::find_builtin("rosenbrock"), kStudyPoint, x1);
  EXPECT_NEAR(estimate, 1076.9, 1076.9 * 0.01);
}

TEST(EstimateLipschitz, VanishesForConstantHessians) {
  const std::vector<double> x0 = {0.2, -0.7, 1.4};
  const std::vector<double> x1 = {0.9, 0.1, -0.3};
  EXPECT_LE(sg::estimate_lipschitz(*sg::find_builtin("affine"), x0, x1), 1e-6);
  EXPECT_LE(sg::estimate_lipschitz(*sg::find_builtin("sphere"), x0, x1), 1e-6);
}

TEST(EstimateLipschitz, RejectsCoincidentPoints) {
  const std::vector<double> x = {1.0, 2.0};
  EXPECT_THROW(
      sg::estimate_lipschitz(*sg::find_builtin("sphere"), x, x),
      std::invalid_argument);
}

TEST(HSweep, RosenbrockErrorsDecreaseAndRespectTheBound) {
  const std::vector<double> radii = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  const std::vector<sg::SweepRow> rows =
      sg::h_sweep(*sg::find_builtin("rosenbrock"), kStudyPoint,
                  sg::Orientation::Plus, radii, 0.5, 2000.0);
  ASSERT_EQ(rows.size(), radii.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    EXPECT_EQ(rows[r].h1, radii[r]);
    EXPECT_GE(rows[r].err_g1, 0.0);
    EXPECT_GE(rows[r].err_g2, 0.0);
    EXPECT_GE(rows[r].err_g12, 0.0);
    EXPECT_LE(rows[r].err_g1, rows[r].bound) << "row " << r;
    if (r > 0) {
      EXPECT_LT(rows[r].err_g1, rows[r - 1].err_g1) << "row " << r;
    }
  }
}

TEST(HSweep, IsBitwiseReproducible) {
  const std::vector<double> radii = {1e-2, 1e-3, 1e-4};
  const auto first = sg::h_sweep(*sg::find_builtin("expsum"),
                                 std::vector<double>{0.1, 0.2, 0.3},
                                 sg::Orientation::Minus, radii, 0.5, 10.0);
  const auto second = sg::h_sweep(*sg::find_builtin("expsum"),
                                  std::vector<double>{0.1, 0.2, 0.3},
                                  sg::Orientation::Minus, radii, 0.5, 10.0);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t r = 0; r < first.size(); ++r) {
    EXPECT_EQ(first[r].err_g1, second[r].err_g1);
    EXPECT_EQ(first[r].err_g2, second[r].err_g2);
    EXPECT_EQ(first[r].err_g12, second[r].err_g12);
    EXPECT_EQ(first[r].bound, second[r].bound);
  }
}

TEST(HSweep, AffineFunctionsProduceNoError) {
  const std::vector<double> radii = {1e-1, 1e-2, 1e-3};
  const std::vector<sg::SweepRow> rows =
      sg::h_sweep(*sg::find_builtin("affine"),
                  std::vector<double>{0.5, -0.5, 1.0, 2.0},
                  sg::Orientation::Minus, radii, 0.5, 1.0);
  for (const sg::SweepRow& row : rows) {
    EXPECT_LE(row.err_g1, 1e-9);
    EXPECT_LE(row.err_g2, 1e-9);
    EXPECT_LE(row.err_g12, 1e-9);
  }
}

TEST(HSweep, ObservedErrorsStayWithinTheBruteForceBound) {
  // Estimate the worst curvature variation over the sampled ball by probing
  // Hessian differences, then check every sweep error against the bound
  // built from that estimate.
  const sg::TestFunction& f = *sg::find_builtin("rosenbrock");
  const double h_max = 0.1;
  std::mt19937_64 rng(2718281828ull);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double lipschitz = 0.0;
  for (int probe = 0; probe < 200; ++probe) {
    std::vector<double> a(2), b(2);
    for (int i = 0; i < 2; ++i) {
      a[i] = kStudyPoint[i] + h_max * unit(rng);
      b[i] = kStudyPoint[i] + h_max * unit(rng);
    }
    if (a == b) continue;
    lipschitz = std::max(lipschitz, sg::estimate_lipschitz(f, a, b));
  }
  ASSERT_GT(lipschitz, 0.0);

  const std::vector<double> radii = {1e-1, 1e-2, 1e-3, 1e-4};
  const std::vector<sg::SweepRow> rows = sg::h_sweep(
      f, kStudyPoint, sg::Orientation::Plus, radii, 0.5, lipschitz);
  for (const sg::SweepRow& row : rows) {
    EXPECT_LE(row.err_g1, row.bound) << "h1=" << row.h1;
  }
}

TEST(HSweep, RejectsBadArguments) {
  const sg::TestFunction& f = *sg::find_builtin("sphere");
  const std::vector<double> x0 = {1.0, 2.0};
  EXPECT_THROW(sg::h_sweep(f, x0, sg::Orientation::Minus, {}, 0.5, 1.0),
               std::invalid_argument);
  const std::vector<double> radii = {1e-2};
  EXPECT_THROW(sg::h_sweep(f, x0, sg::Orientation::Minus, radii, 1.0, 1.0),
               std::invalid_argument);
  EXPECT_THROW(sg::h_sweep(f, x0, sg::Orientation::Minus, radii, 0.0, 1.0),
               std::invalid_argument);
  const std::vector<double> bad_radii = {1e-2, -1e-3};
  EXPECT_THROW(sg::h_sweep(f, x0, sg::Orientation::Minus, bad_radii, 0.5, 1.0),
               std::invalid_argument);
}

TEST(LogLogSlope, RecoversExactPowerLaws) {
  const std::vector<double> xs = {1e-1, 1e-2, 1e-3, 1e-4};
  std::vector<double> quadratic(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) quadratic[i] = xs[i] * xs[i];
  EXPECT_NEAR(sg::log_log_slope(xs, quadratic), 2.0, 1e-12);

  std::vector<double> scaled(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) scaled[i] = 7.0 * xs[i];
  EXPECT_NEAR(sg::log_log_slope(xs, scaled), 1.0, 1e-12);

  EXPECT_THROW(sg::log_log_slope(xs, std::vector<double>{1.0, 2.0}),
               sg::DimensionError);
  EXPECT_THROW(
      sg::log_log_slope(std::vector<double>{1.0, 1.0},
                        std::vector<double>{1.0, 2.0}),
      std::invalid_argument);
}
