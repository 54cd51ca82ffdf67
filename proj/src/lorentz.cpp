#include "noncompact/lorentz.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "noncompact/precision.hpp"

namespace noncompact {

namespace {

constexpr double kQuadRelTol = 1e-9;

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = g(lm), frm = g(rm);
  double left = simpson(a, m, fa, flm, fm);
  double right = simpson(m, b, fm, frm, fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& g, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
  double whole = simpson(a, b, fa, fm, fb);
  return adaptive_simpson(g, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double lorentz_norm(const RearrangedProfile& u, const Exponent& p, const Exponent& q) {
  if (u.empty()) return 0.0;
  if (q.is_infinite()) return weak_norm_argmax(u, p).value;
  if (p.is_infinite()) {
    // s^{-1/q} u* is never q-integrable near 0 for nonzero step functions
    return std::numeric_limits<double>::infinity();
  }
  const double qd = q.value().to_double();
  const double q_over_p = (q.value() / p.value()).to_double();
  const double p_over_q = (p.value() / q.value()).to_double();
  Accumulator acc;
  double prev_pow = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double cur_pow = real_pow(u.breakpoints[i].to_double(), q_over_p);
    acc.add(real_pow(u.levels[i], qd) * p_over_q * (cur_pow - prev_pow));
    prev_pow = cur_pow;
  }
  return real_pow(acc.value(), 1.0 / qd);
}

double lorentz_norm(const StepFunction& u, const LorentzExponents& e) {
  if (e.kind != NormKind::Star) {
    throw std::invalid_argument("lorentz_norm: expects kind Star");
  }
  return lorentz_norm(rearrange(u), e.p, e.q);
}

WeakNormResult weak_norm_argmax(const RearrangedProfile& u, const Exponent& p) {
  WeakNormResult best;
  const double inv_p = p.inverse_as_double();
  for (std::size_t i = 0; i < u.size(); ++i) {
    double t = u.breakpoints[i].to_double();
    double candidate = real_pow(t, inv_p) * u.levels[i];
    if (candidate > best.value) best = {candidate, t};
  }
  return best;
}

WeakNormResult weak_maximal_norm_argmax(const MaximalProfile& u, const Exponent& p) {
  WeakNormResult best;
  if (u.segments.empty()) return best;
  if (p.is_infinite()) {
    // sup u** is the limit at 0+, i.e. the top level of u*
    const auto& first = u.segments.front();
    return {first.level, first.lo.to_double()};
  }
  const double pd = p.value().to_double();
  const double inv_p = 1.0 / pd;
  auto consider = [&](double t, const MaximalSegment& seg) {
    if (!(t > 0.0)) return;
    double candidate = seg.cumulative * real_pow(t, inv_p - 1.0) + seg.level * real_pow(t, inv_p);
    if (candidate > best.value) best = {candidate, t};
  };
  for (const auto& seg : u.segments) {
    consider(seg.hi.to_double(), seg);
    if (seg.level > 0.0 && pd > 1.0) {
      double t_star = (pd - 1.0) * seg.cumulative / seg.level;
      if (t_star > seg.lo.to_double() && t_star < seg.hi.to_double()) consider(t_star, seg);
    }
  }
  return best;
}

double lorentz_maximal_norm(const MaximalProfile& u, const Exponent& p, const Exponent& q) {
  if (u.segments.empty() || u.integral() == 0.0) return 0.0;
  if (q.is_infinite()) return weak_maximal_norm_argmax(u, p).value;
  if (p.is_infinite()) return std::numeric_limits<double>::infinity();

  const double qd = q.value().to_double();
  const double q_over_p = (q.value() / p.value()).to_double();
  const double p_over_q = (p.value() / q.value()).to_double();

  // integral of s^{q/p - 1} u**(s)^q, segment by segment
  Accumulator acc;
  for (const auto& seg : u.segments) {
    double lo = seg.lo.to_double(), hi = seg.hi.to_double();
    if (seg.cumulative == 0.0) {
      // u** is constant (= level) from 0 to the first breakpoint
      acc.add(real_pow(seg.level, qd) * p_over_q *
              (real_pow(hi, q_over_p) - real_pow(lo, q_over_p)));
      continue;
    }
    auto g = [&](double s) {
      return real_pow(s, q_over_p - 1.0 - qd) * real_pow(seg.cumulative + seg.level * s, qd);
    };
    double coarse = simpson(lo, hi, g(lo), g(0.5 * (lo + hi)), g(hi));
    acc.add(integrate(g, lo, hi, std::fabs(coarse) * kQuadRelTol + 1e-300));
  }
  return real_pow(acc.value(), 1.0 / qd);
}

double lorentz_maximal_norm(const StepFunction& u, const LorentzExponents& e) {
  if (e.kind != NormKind::DoubleStar) {
    throw std::invalid_argument("lorentz_maximal_norm: expects kind DoubleStar");
  }
  return lorentz_maximal_norm(maximal_profile(u), e.p, e.q);
}

double lorentz_functional(const StepFunction& u, const LorentzExponents& e) {
  return e.kind == NormKind::Star ? lorentz_norm(rearrange(u), e.p, e.q)
                                  : lorentz_maximal_norm(maximal_profile(u), e.p, e.q);
}

double weak_lebesgue_norm(const StepFunction& u, const Exponent& r, NormKind kind) {
  return lorentz_functional(u, {r, Exponent::infinity(), kind});
}

double quasinorm_defect(const StepFunction& u, const StepFunction& v, const Rational& r) {
  Exponent rr(r);
  double nu = weak_lebesgue_norm(u, rr, NormKind::Star);
  double nv = weak_lebesgue_norm(v, rr, NormKind::Star);
  if (nu + nv == 0.0) throw std::invalid_argument("quasinorm_defect: both norms vanish");
  double ns = weak_lebesgue_norm(add(u, v), rr, NormKind::Star);
  return ns / (nu + nv);
}

}  // namespace noncompact
