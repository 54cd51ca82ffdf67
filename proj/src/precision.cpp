#include "noncompact/precision.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace noncompact {

PrecisionTier precision_tier() {
  static const PrecisionTier tier = [] {
    const char* env = std::getenv("NONCOMPACT_PRECISION");
    if (env != nullptr && std::string(env) == "extended") return PrecisionTier::Extended;
    return PrecisionTier::Double;
  }();
  return tier;
}

double real_pow(double base, double exponent) {
  if (precision_tier() == PrecisionTier::Extended) {
    return static_cast<double>(std::pow(static_cast<long double>(base),
                                        static_cast<long double>(exponent)));
  }
  return std::pow(base, exponent);
}

double Accumulator::value() const {
  return precision_tier() == PrecisionTier::Extended ? static_cast<double>(sum_) : dsum_;
}

}  // namespace noncompact
