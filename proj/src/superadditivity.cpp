#include "noncompact/superadditivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "noncompact/precision.hpp"

namespace noncompact {

DisjointFamily DisjointFamily::build(const Rational& r, int m, const Rational& ratio,
                                     const Rational& total_space) {
  if (!r.is_positive()) throw std::invalid_argument("DisjointFamily::build: r must be positive");
  if (m < 1) throw std::invalid_argument("DisjointFamily::build: m must be at least 1");
  if (!ratio.is_positive() || ratio > Rational(1, 2)) {
    throw std::invalid_argument("DisjointFamily::build: ratio must lie in (0, 1/2]");
  }
  if (!total_space.is_positive()) {
    throw std::invalid_argument("DisjointFamily::build: total_space must be positive");
  }
  DisjointFamily f;
  f.total_space_ = total_space;
  const double inv_r = (Rational(1) / r).to_double();
  Rational offset(0);
  Rational s = total_space;
  for (int k = 1; k <= m; ++k) {
    s *= ratio;
    double value = real_pow(s.to_double(), -inv_r);
    f.members_.push_back(StepFunction::indicator(value, s, offset, total_space));
    f.support_measures_.push_back(s);
    offset += s;
  }
  return f;
}

DisjointFamily DisjointFamily::from_members(std::vector<StepFunction> members) {
  if (members.empty()) throw std::invalid_argument("DisjointFamily: empty family");
  sum_disjoint(members);  // throws on overlap or mismatched spaces
  DisjointFamily f;
  f.total_space_ = members.front().total_space();
  for (const auto& u : members) f.support_measures_.push_back(u.support_measure());
  f.members_ = std::move(members);
  return f;
}

std::vector<Rational> DisjointFamily::tail_sums() const {
  std::vector<Rational> a(members_.size() + 1, Rational(0));
  for (std::size_t j = members_.size(); j-- > 0;) {
    a[j] = a[j + 1] + support_measures_[j];
  }
  return a;
}

StepFunction DisjointFamily::sum() const { return sum_disjoint(members_); }

std::pair<double, double> sum_norm_bounds(const DisjointFamily& f, const Rational& r) {
  StepFunction u = f.sum();
  Exponent rr(r);
  return {weak_lebesgue_norm(u, rr, NormKind::Star),
          weak_lebesgue_norm(u, rr, NormKind::DoubleStar)};
}

double required_constant(const DisjointFamily& f, const Rational& r, double gamma, NormKind kind) {
  if (!(gamma > 0.0)) throw std::invalid_argument("required_constant: gamma must be positive");
  Exponent rr(r);
  Accumulator numerator;
  for (const auto& u : f.members()) {
    numerator.add(real_pow(weak_lebesgue_norm(u, rr, kind), gamma));
  }
  double denom = real_pow(weak_lebesgue_norm(f.sum(), rr, kind), gamma);
  return numerator.value() / denom;
}

namespace {

StepFunction restrict_to_support(const StepFunction& center, const StepFunction& u) {
  // center * X_{supp u}, on the common refinement
  const auto& cp = center.pieces();
  const auto& up = u.pieces();
  std::vector<Piece> out;
  Rational cursor(0);
  std::size_t ic = 0, iu = 0;
  Rational end_c = cp.empty() ? Rational(0) : cp[0].measure;
  Rational end_u = up.empty() ? Rational(0) : up[0].measure;
  while (cursor < u.total_space()) {
    double c = ic < cp.size() ? cp[ic].value : 0.0;
    double a = iu < up.size() ? up[iu].value : 0.0;
    Rational next = u.total_space();
    if (ic < cp.size() && end_c < next) next = end_c;
    if (iu < up.size() && end_u < next) next = end_u;
    if (next > cursor) out.push_back({a != 0.0 ? c : 0.0, next - cursor});
    cursor = next;
    if (ic < cp.size() && cursor == end_c) {
      ++ic;
      if (ic < cp.size()) end_c += cp[ic].measure;
    }
    if (iu < up.size() && cursor == end_u) {
      ++iu;
      if (iu < up.size()) end_u += up[iu].measure;
    }
  }
  return StepFunction::make(std::move(out), u.total_space());
}

}  // namespace

WitnessReport maximal_noncompactness_witness(const DisjointFamily& f,
                                             const std::vector<StepFunction>& centers,
                                             const WitnessParams& params) {
  if (!(params.rho > 0.0) || !(params.epsilon > 0.0) || !(params.norm_bound > 0.0)) {
    throw std::invalid_argument("witness: rho, epsilon and norm_bound must be positive");
  }
  if (centers.empty()) throw std::invalid_argument("witness: needs at least one center");
  const Exponent rr(params.r);
  const double inv_r = rr.inverse_as_double();

  WitnessReport rep;
  rep.ell = f.size();

  // small relative slack: member norms equal to rho + 2 eps up to rounding pass
  const double gap = (params.rho + 2.0 * params.epsilon) * (1.0 - 1e-9);
  for (const auto& u : f.members()) {
    double n = weak_lebesgue_norm(u, rr, params.kind);
    if (n < gap) {
      throw std::invalid_argument("witness: member norm does not clear rho + 2 epsilon");
    }
    rep.member_norms.push_back(n);
  }

  rep.eta = params.kind == NormKind::DoubleStar
                ? 0.0
                : real_pow(1.0 + params.epsilon / params.rho, -params.r.to_double());
  const double effective = static_cast<double>(rep.ell) * (1.0 - rep.eta);
  rep.ell_value = real_pow(effective, inv_r);
  rep.ell_requirement = real_pow(2.0, 1.0 + inv_r) * params.norm_bound / params.epsilon;
  rep.omega = f.total_space().to_double() / effective;
  if (rep.ell_value < rep.ell_requirement) {
    throw std::invalid_argument("witness: family too small for the required lower bound");
  }

  // pigeonhole: nearest center by Y-distance
  std::vector<std::size_t> nearest(f.size());
  std::vector<double> nearest_dist(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      double d = weak_lebesgue_norm(subtract(centers[i], f.members()[k]), rr, params.kind);
      if (d < best) {
        best = d;
        best_i = i;
      }
    }
    nearest[k] = best_i;
    nearest_dist[k] = best;
  }
  std::vector<std::size_t> counts(centers.size(), 0);
  for (auto i : nearest) ++counts[i];
  rep.chosen_center =
      std::max_element(counts.begin(), counts.end()) - counts.begin();
  if (counts[rep.chosen_center] * centers.size() < f.size()) {
    throw std::logic_error("witness: no center captured its pigeonhole share");
  }

  rep.cover_premise = true;
  std::vector<StepFunction> picks;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (nearest[k] != rep.chosen_center) continue;
    rep.group.push_back(k);
    rep.group_distances.push_back(nearest_dist[k]);
    if (!(nearest_dist[k] < params.rho)) rep.cover_premise = false;
    StepFunction vk = restrict_to_support(centers[rep.chosen_center], f.members()[k]);
    picks.push_back(smaller_in_magnitude(f.members()[k], vk));
  }
  StepFunction w = sum_disjoint(picks);
  rep.w_norm = weak_lebesgue_norm(w, rr, params.kind);

  const StepFunction& lead = f.members()[rep.group.front()];
  WeakNormResult arg = params.kind == NormKind::Star
                           ? weak_norm_argmax(rearrange(lead), rr)
                           : weak_maximal_norm_argmax(maximal_profile(lead), rr);
  rep.t0 = arg.arg_t;
  rep.t0_within_omega = rep.t0 < rep.omega;

  rep.upper_bound = real_pow(2.0, 1.0 + inv_r) * params.norm_bound;
  rep.lower_bound = params.kind == NormKind::DoubleStar
                        ? 2.0 * params.epsilon * real_pow(static_cast<double>(rep.ell), inv_r)
                        : params.epsilon * rep.ell_value;
  rep.contradiction = rep.lower_bound > rep.upper_bound;
  return rep;
}

}  // namespace noncompact
