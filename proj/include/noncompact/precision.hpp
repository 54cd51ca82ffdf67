#pragma once

#include <cstddef>

namespace noncompact {

/// Real-arithmetic tier, selected once per process through the
/// NONCOMPACT_PRECISION environment variable ("double" or "extended").
/// Extended evaluates powers and running sums in long double and rounds the
/// result back to double; stored values stay double in either tier.
enum class PrecisionTier { Double, Extended };

PrecisionTier precision_tier();

/// pow() honoring the active tier.
double real_pow(double base, double exponent);

/// Running sum honoring the active tier.
class Accumulator {
public:
  void add(double x) { sum_ += static_cast<long double>(x); dsum_ += x; }
  double value() const;

private:
  long double sum_ = 0.0L;
  double dsum_ = 0.0;
};

}  // namespace noncompact
