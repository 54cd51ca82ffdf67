#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "noncompact/rational.hpp"

namespace noncompact {

/// One constant block of a step function: signed value on an interval of the
/// given (strictly positive, exact) measure.
struct Piece {
  double value = 0.0;
  Rational measure;

  friend bool operator==(const Piece&, const Piece&) = default;
};

enum class PointwiseOp { Add, Subtract, AbsValue, SmallerMagnitude };

/// Simple function on the interval (0, total_space), stored as consecutive
/// pieces laid out from the left; whatever is not covered by a piece is an
/// implicit zero set at the right end. The layout order is part of the value
/// (pointwise algebra depends on it); rearrangement does not.
///
/// Canonical form: adjacent pieces of equal value are merged and trailing
/// zero-valued pieces fold into the implicit residual. Zero-valued pieces in
/// the interior are kept; they position the support of what follows.
class StepFunction {
public:
  StepFunction() : total_space_(1) {}

  /// Validates measures (> 0, sum <= total_space) and canonicalizes.
  static StepFunction make(std::vector<Piece> pieces, Rational total_space);

  static StepFunction zero(Rational total_space) { return make({}, std::move(total_space)); }

  /// Indicator of (offset, offset + measure) scaled by value.
  static StepFunction indicator(double value, const Rational& measure, const Rational& offset,
                                const Rational& total_space);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Rational& total_space() const { return total_space_; }

  /// Measure of {u != 0}.
  Rational support_measure() const;
  /// Measure covered by explicit pieces (zero-valued ones included).
  Rational covered_measure() const;

  bool is_zero() const;

  /// Value at t in [0, total_space); the residual set evaluates to 0.
  double value_at(const Rational& t) const;

  /// Dilation metadata: order k means the values pick up a factor kappa^k
  /// under dilate(), the way k-th order derivative data scales.
  int derivative_order() const { return derivative_order_; }
  StepFunction tagged_as_derivative(int order) const;

  StepFunction scaled(double factor) const;
  StepFunction negated() const { return scaled(-1.0); }

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
  std::vector<Piece> pieces_;
  Rational total_space_;
  int derivative_order_ = 0;
};

/// (ess inf, ess sup) over (0, total_space), implicit zero set included.
std::pair<double, double> ess_bounds(const StepFunction& u);

/// Pointwise combination on the common refinement of both partitions.
/// AbsValue is unary in u (v only fixes the space). SmallerMagnitude picks,
/// per point, the argument of strictly smaller magnitude and v on ties.
StepFunction combine_pointwise(const StepFunction& u, const StepFunction& v, PointwiseOp op);

StepFunction add(const StepFunction& u, const StepFunction& v);
StepFunction subtract(const StepFunction& u, const StepFunction& v);
StepFunction abs(const StepFunction& u);
StepFunction smaller_in_magnitude(const StepFunction& u, const StepFunction& v);

/// True if u and v agree as functions (layout-wise) on (0, total_space).
bool equal_pointwise(const StepFunction& u, const StepFunction& v);

/// Sum of functions with pairwise disjoint supports; throws on any overlap.
StepFunction sum_disjoint(std::span<const StepFunction> members);

/// Nonincreasing rearrangement u* of |u|: level levels[i] on
/// [breakpoints[i-1], breakpoints[i]) with breakpoints[-1] = 0, and 0 from
/// breakpoints.back() on. Levels are strictly decreasing and positive.
struct RearrangedProfile {
  std::vector<Rational> breakpoints;
  std::vector<double> levels;
  Rational total_space;

  bool empty() const { return levels.empty(); }
  std::size_t size() const { return levels.size(); }

  /// u*(t) for t >= 0 (right-continuous; 0 past the support).
  double value_at(const Rational& t) const;

  /// Distribution function |{u* > lambda}|, exact in rationals.
  Rational measure_above(double lambda) const;

  /// int_0^t u*(s) ds; t past the support just saturates.
  double integral_to(const Rational& t) const;
  double integral() const;
};

RearrangedProfile rearrange(const StepFunction& u);

/// One segment of u**: on (lo, hi], int_0^t u* = cumulative + level * t, so
/// u**(t) = (cumulative + level * t) / t. The first segment has cumulative 0.
struct MaximalSegment {
  Rational lo;
  Rational hi;
  double cumulative = 0.0;
  double level = 0.0;
};

/// Maximal rearrangement u**(t) = (1/t) int_0^t u*, as exact segment data on
/// (0, total_space]; values past total_space follow the same formula with the
/// saturated integral.
struct MaximalProfile {
  std::vector<MaximalSegment> segments;
  Rational total_space;

  double value_at(const Rational& t) const;
  double value_at_double(double t) const;
  /// Total integral of u*.
  double integral() const;
};

MaximalProfile maximal_profile(const RearrangedProfile& profile);
MaximalProfile maximal_profile(const StepFunction& u);

/// u**(t); throws for t <= 0. Values on (total_space, infinity) follow the
/// saturated-integral formula.
double maximal_value(const StepFunction& u, const Rational& t);

}  // namespace noncompact
