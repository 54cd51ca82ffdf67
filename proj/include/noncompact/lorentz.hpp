#pragma once

#include <optional>

#include "noncompact/rational.hpp"
#include "noncompact/step_function.hpp"

namespace noncompact {

/// Exponent in (0, infinity], with the convention 1/infinity = 0.
class Exponent {
public:
  Exponent(Rational value) : value_(std::move(value)) {
    if (!value_->is_positive()) throw std::invalid_argument("Exponent: must be positive");
  }
  Exponent(int value) : Exponent(Rational(value)) {}
  Exponent(long long num, long long den) : Exponent(Rational(num, den)) {}

  static Exponent infinity() { return Exponent(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const {
    if (is_infinite()) throw std::logic_error("Exponent: infinite");
    return *value_;
  }

  double as_double() const {
    return is_infinite() ? std::numeric_limits<double>::infinity() : value_->to_double();
  }
  /// 1/p as double; 0 for p = infinity.
  double inverse_as_double() const {
    return is_infinite() ? 0.0 : (Rational(1) / *value_).to_double();
  }

  std::string to_string() const { return is_infinite() ? "inf" : value_->to_string(); }

  friend bool operator==(const Exponent&, const Exponent&) = default;

private:
  Exponent() = default;
  std::optional<Rational> value_;
};

enum class NormKind { Star, DoubleStar };

/// (p, q, kind): kind Star measures t^{1/p - 1/q} u* in L^q, DoubleStar the
/// same with u** in place of u*.
struct LorentzExponents {
  Exponent p;
  Exponent q;
  NormKind kind = NormKind::Star;
};

/// ||u||_{L^{p,q}}. Closed form for q < infinity:
///   ( sum_i level_i^q (p/q) (t_i^{q/p} - t_{i-1}^{q/p}) )^{1/q},
/// and for q = infinity the maximum of t_i^{1/p} level_i over right
/// breakpoints (t^{1/p} is increasing on each level set). Returns +infinity
/// only for p = infinity, q < infinity on a nonzero function.
double lorentz_norm(const RearrangedProfile& u, const Exponent& p, const Exponent& q);
double lorentz_norm(const StepFunction& u, const LorentzExponents& e);

/// ||u||_{L^{(p,q)}}, the u** variant. For q = infinity the supremum of
/// t^{1/p} u**(t) is exact: on a segment with int_0^t u* = K + c t the
/// objective is f(t) = K t^{1/p-1} + c t^{1/p}, whose derivative is
/// t^{1/p-2} [ (1/p - 1) K + (c/p) t ]; candidates are the segment endpoints
/// plus the interior critical point t = (p-1) K / c when it lies inside.
/// For q < infinity, adaptive quadrature with relative tolerance 1e-9.
double lorentz_maximal_norm(const MaximalProfile& u, const Exponent& p, const Exponent& q);
double lorentz_maximal_norm(const StepFunction& u, const LorentzExponents& e);

/// Dispatch on e.kind.
double lorentz_functional(const StepFunction& u, const LorentzExponents& e);

/// sup t^{1/p} u*(t) together with the breakpoint attaining it.
struct WeakNormResult {
  double value = 0.0;
  double arg_t = 0.0;
};
WeakNormResult weak_norm_argmax(const RearrangedProfile& u, const Exponent& p);
WeakNormResult weak_maximal_norm_argmax(const MaximalProfile& u, const Exponent& p);

/// Weak Lebesgue norm of the selected kind at second index infinity.
double weak_lebesgue_norm(const StepFunction& u, const Exponent& r, NormKind kind);

/// ||u+v||_{r,inf} / (||u||_{r,inf} + ||v||_{r,inf}); never exceeds 2^{1/r}.
/// Throws when both norms vanish.
double quasinorm_defect(const StepFunction& u, const StepFunction& v, const Rational& r);

}  // namespace noncompact
