#pragma once

#include <cstddef>
#include <vector>

#include "noncompact/lorentz.hpp"
#include "noncompact/step_function.hpp"

namespace noncompact {

/// Family of step functions with pairwise disjoint supports on a common
/// space, with the support measures tracked exactly.
class DisjointFamily {
public:
  /// Geometric family u_k = s_k^{-1/r} X_{E_k}, s_1 = ratio * total_space,
  /// s_{k+1} = ratio * s_k, the E_k consecutive from the left. Requires
  /// 0 < ratio <= 1/2 so that the halving condition s_{k+1} <= s_k / 2 holds
  /// and the supports fit.
  static DisjointFamily build(const Rational& r, int m, const Rational& ratio,
                              const Rational& total_space);

  /// Wraps arbitrary members after verifying pairwise disjoint supports.
  static DisjointFamily from_members(std::vector<StepFunction> members);

  std::size_t size() const { return members_.size(); }
  const std::vector<StepFunction>& members() const { return members_; }
  const std::vector<Rational>& support_measures() const { return support_measures_; }
  const Rational& total_space() const { return total_space_; }

  /// a_j = s_{j+1} + ... + s_m for j = 0..m (a_m = 0); the breakpoints of the
  /// rearranged sum for families built by build().
  std::vector<Rational> tail_sums() const;

  StepFunction sum() const;

private:
  DisjointFamily() = default;
  std::vector<StepFunction> members_;
  std::vector<Rational> support_measures_;
  Rational total_space_;
};

/// (||sum u_k||_{r,inf}, ||sum u_k||_{(r,inf)}).
std::pair<double, double> sum_norm_bounds(const DisjointFamily& f, const Rational& r);

/// Smallest constant making the superadditivity inequality with power gamma
/// hold for this family: sum_k ||u_k||^gamma / ||sum_k u_k||^gamma in the
/// selected weak norm.
double required_constant(const DisjointFamily& f, const Rational& r, double gamma, NormKind kind);

struct WitnessParams {
  double rho = 0.0;       // assumed covering radius
  double epsilon = 0.0;   // gap: member norms must reach rho + 2 epsilon
  double norm_bound = 1.0;// declared operator norm bound ||I||
  Rational r;             // target-space exponent
  NormKind kind = NormKind::Star;
};

/// Trace of the non-compactness contradiction run against a candidate cover.
struct WitnessReport {
  std::size_t ell = 0;          // family size
  double eta = 0.0;             // 0 for DoubleStar, (1 + eps/rho)^{-r} for Star
  double ell_requirement = 0.0; // smallest admissible (ell (1-eta))^{1/r}
  double ell_value = 0.0;       // actual (ell (1-eta))^{1/r}
  double omega = 0.0;           // |Omega| / (ell (1-eta))

  std::size_t chosen_center = 0;
  std::vector<std::size_t> group;        // member indices captured by it
  std::vector<double> group_distances;   // Y-distance of each grouped member
  bool cover_premise = false;            // all grouped distances < rho

  std::vector<double> member_norms;      // Y-norms of all members
  double t0 = 0.0;                       // argmax t of the first grouped member
  bool t0_within_omega = false;

  double w_norm = 0.0;        // Y-norm of the assembled w
  double upper_bound = 0.0;   // 2^{1 + 1/r} * norm_bound
  double lower_bound = 0.0;   // eps (ell (1-eta))^{1/r}, or 2 eps ell^{1/r} for DoubleStar
  bool contradiction = false; // lower_bound > upper_bound
};

/// Runs the pigeonhole construction: groups members by nearest center, cuts
/// the chosen center to each captured support, selects the pointwise smaller
/// magnitude, sums the picks into w, and reports the two bounds whose clash
/// refutes the candidate cover.
WitnessReport maximal_noncompactness_witness(const DisjointFamily& f,
                                             const std::vector<StepFunction>& centers,
                                             const WitnessParams& params);

}  // namespace noncompact
