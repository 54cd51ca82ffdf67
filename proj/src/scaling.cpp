#include "noncompact/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "noncompact/precision.hpp"

namespace noncompact {

namespace {

void check_dims(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("SobolevParams: need 1 <= k <= n");
  }
}

}  // namespace

Rational p_star(const SobolevParams& prm) {
  check_dims(prm.n, prm.k);
  if (!prm.p.is_positive()) throw std::invalid_argument("p_star: p must be positive");
  Rational n(prm.n), k(prm.k);
  if (k * prm.p >= n) throw std::invalid_argument("p_star: requires kp < n");
  Rational ps = n * prm.p / (n - k * prm.p);
  if (-(n / ps) != k - n / prm.p) {
    throw std::logic_error("p_star: exponent identity failed");
  }
  return ps;
}

StepFunction dilate(const StepFunction& u, const SobolevParams& prm) {
  check_dims(prm.n, prm.k);
  if (prm.kappa < Rational(1)) {
    throw std::invalid_argument("dilate: kappa must be at least 1 (shrinking direction)");
  }
  Rational kappa_n = prm.kappa.pow_int(prm.n);
  double value_factor = 1.0;
  if (u.derivative_order() > 0) {
    value_factor = prm.kappa.pow_int(u.derivative_order()).to_double();
  }
  std::vector<Piece> pieces;
  pieces.reserve(u.pieces().size());
  for (const auto& p : u.pieces()) {
    pieces.push_back({p.value * value_factor, p.measure / kappa_n});
  }
  return StepFunction::make(std::move(pieces), u.total_space() / kappa_n)
      .tagged_as_derivative(u.derivative_order());
}

StepFunction double_disjoint(const StepFunction& u) {
  Rational support = u.support_measure();
  if (Rational(2) * support > u.total_space()) {
    throw std::invalid_argument("double_disjoint: twice the support does not fit");
  }
  std::vector<Piece> pieces;
  for (const auto& p : u.pieces()) {
    if (p.value != 0.0) pieces.push_back(p);
  }
  std::size_t block = pieces.size();
  for (std::size_t i = 0; i < block; ++i) {
    pieces.push_back({-pieces[i].value, pieces[i].measure});
  }
  return StepFunction::make(std::move(pieces), u.total_space());
}

SpanAlpha span_and_alpha(int n, int k, double norm_bound) {
  check_dims(n, k);
  if (!(norm_bound > 0.0)) throw std::invalid_argument("span_and_alpha: norm must be positive");
  double k_over_n = static_cast<double>(k) / static_cast<double>(n);
  SpanAlpha out;
  out.alpha = real_pow(2.0, -k_over_n) * norm_bound;
  out.span = 2.0 * out.alpha;
  if (!(out.span <= 2.0 * norm_bound)) throw std::logic_error("span_and_alpha: span bound failed");
  if (!(out.alpha < norm_bound)) throw std::logic_error("span_and_alpha: alpha must sit below the norm");
  return out;
}

double elementary_inequality_slack(double a, double b, int n, int k) {
  check_dims(n, k);
  if (a < 0.0 || b < 0.0) throw std::invalid_argument("elementary_inequality_slack: needs a, b >= 0");
  double n_over_k = static_cast<double>(n) / static_cast<double>(k);
  double k_over_n = static_cast<double>(k) / static_cast<double>(n);
  double mean = real_pow(real_pow(a, n_over_k) + real_pow(b, n_over_k), k_over_n);
  return real_pow(2.0, 1.0 - k_over_n) * mean - (a + b);
}

}  // namespace noncompact
