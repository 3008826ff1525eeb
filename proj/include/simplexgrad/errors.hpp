#ifndef SIMPLEXGRAD_ERRORS_HPP
#define SIMPLEXGRAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simplexgrad {

// Inputs whose sizes or index ranges do not line up (wrong vector length,
// vertex matrix of the wrong shape, non-positive dimension, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A simplex whose geometry is collapsed, e.g. radius zero.
class DegenerateSimplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A vertex set failed the regularity gate.  Carries the measured relative
// spread of the centroid/pairwise distances so callers can report how far
// from regular the input was.
class RegularityError : public std::runtime_error {
 public:
  RegularityError(const std::string& what, double spread)
      : std::runtime_error(what), spread_(spread) {}

  double spread() const noexcept { return spread_; }

 private:
  double spread_;
};

// A linear solve hit a (numerically) singular system.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested exact construction does not exist for the given dimension.
class InfeasibleConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid pair of radii for Richardson extrapolation (equal, zero, or
// non-finite).
class ExtrapolationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A user-supplied evaluator threw or produced a non-finite value.  Records
// which vertex (1-based) was being evaluated.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, int vertex_index)
      : std::runtime_error(what), vertex_index_(vertex_index) {}

  int vertex_index() const noexcept { return vertex_index_; }

 private:
  int vertex_index_;
};

}  // namespace simplexgrad

#endif  // SIMPLEXGRAD_ERRORS_HPP
