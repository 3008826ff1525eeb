#ifndef SIMPLEXGRAD_EXTRAPOLATION_HPP
#define SIMPLEXGRAD_EXTRAPOLATION_HPP

#include <cmath>
#include <span>
#include <vector>

#include "simplexgrad/errors.hpp"
#include "simplexgrad/gradient.hpp"
#include "simplexgrad/simplex.hpp"

namespace simplexgrad {

// A validated pair of radii for two-radius Richardson extrapolation.  The
// ratio h2/h1 may be negative; a negative second radius reuses the same
// simplex shape rotated 180 degrees about the centroid.
struct ExtrapolationPlan {
  double h1 = 0.0;
  double h2 = 0.0;
  double ratio = 0.0;  // h2 / h1

  ExtrapolationPlan(double first, double second)
      : h1(first), h2(second), ratio(second / first) {
    if (!std::isfinite(h1) || !std::isfinite(h2)) {
      throw ExtrapolationError("radii must be finite");
    }
    if (h1 == 0.0 || h2 == 0.0) {
      throw ExtrapolationError("radii must be nonzero");
    }
    if (h1 == h2) {
      throw ExtrapolationError("radii must differ for extrapolation");
    }
  }
};

// Richardson combination of two first-order estimates taken at radii h1 and
// h2: g12 = (h2 * g1 - h1 * g2) / (h2 - h1).  The first-order error terms
// cancel, leaving a second-order estimate.
inline GradientEstimate richardson(std::span<const double> g1, double h1,
                                   std::span<const double> g2, double h2) {
  if (g1.size() != g2.size()) {
    throw DimensionError("gradient estimates have different lengths");
  }
  if (!std::isfinite(h1) || !std::isfinite(h2)) {
    throw ExtrapolationError("radii must be finite");
  }
  if (h1 == h2) {
    throw ExtrapolationError("radii must differ for extrapolation");
  }
  const double denom = h2 - h1;
  GradientEstimate estimate;
  estimate.gradient.resize(g1.size());
  for (std::size_t i = 0; i < g1.size(); ++i) {
    estimate.gradient[i] = (h2 * g1[i] - h1 * g2[i]) / denom;
  }
  estimate.order = GradientOrder::SecondOrder;
  estimate.h_used = {h1, h2};
  return estimate;
}

// Second-order gradient estimate from 2(n+1) evaluations: sample an aligned
// regular simplex at radius h1 and again at radius h2 (same centroid and
// orientation), form both first-order estimates, and extrapolate.
template <PointEvaluator F>
GradientEstimate extrapolated_gradient(F&& f, std::span<const double> x0,
                                       double h1, double h2,
                                       Orientation orientation) {
  const ExtrapolationPlan plan(h1, h2);
  if (x0.empty()) throw DimensionError("centroid must be nonempty");

  AlignedRegularSimplex simplex{std::vector<double>(x0.begin(), x0.end()),
                                plan.h1, orientation};
  const SampleSet first = sample_at_vertices(f, simplex);
  const GradientEstimate g1 = aligned_gradient(simplex, first);

  simplex.h = plan.h2;
  const SampleSet second = sample_at_vertices(f, simplex);
  const GradientEstimate g2 = aligned_gradient(simplex, second);

  return richardson(g1.gradient, plan.h1, g2.gradient, plan.h2);
}

}  // namespace simplexgrad

#endif  // SIMPLEXGRAD_EXTRAPOLATION_HPP
