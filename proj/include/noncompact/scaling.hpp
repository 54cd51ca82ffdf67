#pragma once

#include "noncompact/rational.hpp"
#include "noncompact/step_function.hpp"

namespace noncompact {

/// Dimension data (n, k) with an integrability exponent p and a dilation
/// factor kappa >= 1.
struct SobolevParams {
  int n = 1;
  int k = 1;
  Rational p = Rational(1);
  Rational kappa = Rational(1);
};

/// np / (n - kp), exact; requires kp < n. The exponent identity
/// -n/p_star == k - n/p is re-derived in rationals on every call.
Rational p_star(const SobolevParams& prm);

/// Dilation by kappa >= 1 into the space of measure |Omega| / kappa^n: every
/// breakpoint of the rearrangement divides exactly by kappa^n. Functions
/// tagged as order-d derivative data pick up the factor kappa^d on values.
StepFunction dilate(const StepFunction& u, const SobolevParams& prm);

/// Disjoint doubling: u side by side with its negated shifted copy, so the
/// rearrangement satisfies v*(t) = u*(t/2). Requires twice the support to
/// fit into the space.
StepFunction double_disjoint(const StepFunction& u);

struct SpanAlpha {
  double span = 0.0;   // 2^{1 - k/n} * norm
  double alpha = 0.0;  // 2^{-k/n} * norm
};

/// Closed forms for the span and the measure of non-compactness of the
/// limiting embedding with declared operator norm norm_bound; alpha is
/// span / 2 and sits strictly below the norm.
SpanAlpha span_and_alpha(int n, int k, double norm_bound);

/// Slack of 2^{1 - k/n} (a^{n/k} + b^{n/k})^{k/n} - (a + b); nonnegative for
/// a, b >= 0 with equality exactly at a = b.
double elementary_inequality_slack(double a, double b, int n, int k);

}  // namespace noncompact
