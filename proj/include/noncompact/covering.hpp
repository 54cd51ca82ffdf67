#pragma once

#include <cstdint>
#include <vector>

#include "noncompact/lorentz.hpp"

namespace noncompact {

/// Finitely supported sequence, implicitly zero past entries.size().
struct FiniteSeq {
  std::vector<double> entries;

  double at(std::size_t idx) const { return idx < entries.size() ? entries[idx] : 0.0; }

  static FiniteSeq unit(std::size_t idx, double value);  // value * e^{idx+1} (0-based idx)
};

double seq_lp_norm(const FiniteSeq& y, const Exponent& p);
/// sup over all coordinates including the zero tail.
double seq_sup(const FiniteSeq& y);
double seq_inf(const FiniteSeq& y);
/// Sup-distance of two zero-extended sequences.
double linf_distance(const FiniteSeq& a, const FiniteSeq& b);
/// Sup-distance to the constant sequence lambda (tail contributes |lambda|).
double linf_distance_to_constant(const FiniteSeq& a, double lambda);

/// 2^{1 - 1/p}: the span of the unit ball of l^p inside l^infty. p >= 1.
double sigma_lp(const Exponent& p);

/// Net of constant sequences lambda_k = sigma k / (2m), k = -m..m, with m the
/// smallest integer making (1 + 1/m) sigma / 2 < rho.
struct CoverNet {
  double sigma = 0.0;
  double rho = 0.0;
  long m = 0;
  std::vector<double> levels;  // levels[k + m] = sigma * k / (2m)

  std::size_t size() const { return levels.size(); }
  double level(long k) const { return levels[static_cast<std::size_t>(k + m)]; }
};

/// Throws when rho <= sigma / 2 (no finite constant net exists then).
CoverNet build_constant_net(double sigma, double rho);

/// The net's levels as constant functions on (0, total_space) — the centers
/// of the function-space model.
std::vector<StepFunction> constant_centers(const CoverNet& net, const Rational& total_space);

struct LocateResult {
  long k = 0;
  double lambda = 0.0;
  double distance = 0.0;  // sup-distance of y to the constant lambda
  double sup = 0.0;
  double inf = 0.0;
};

/// Finds a net center within rho of y (requires ||y||_p <= 1); follows the
/// inf-based case split and verifies sup y - inf y <= sigma on the way. The
/// all-zero sequence goes to the center lambda = 0. Throws if no center
/// works, which the covering argument rules out.
LocateResult locate(const FiniteSeq& y, const Exponent& p, const CoverNet& net);

struct RefuteWitness {
  FiniteSeq w;          // u_i - u_j with u_k = 2^{-1/p} e^k
  std::size_t i = 0;    // 1-based
  std::size_t j = 0;
  std::vector<double> distances;  // to each candidate center, all >= rho
  std::size_t ell = 0;  // 2^{#centers + 1} points scanned
};

/// Exhibits a unit-ball difference u_i - u_j no closer than rho to any given
/// center. Needs 2^{-1/p} in (rho, 2 rho); with ell = 2^{#centers+1} points
/// the row/column coloring bound guarantees a witness exists.
RefuteWitness refute_radius(const Exponent& p, const std::vector<FiniteSeq>& centers, double rho);

struct AlphaBracket {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t net_size = 0;       // centers in the upper-path net
  std::size_t samples = 0;        // unit-ball points located
  std::size_t refutations = 0;    // adversarial covers refuted on the lower path
};

/// Two-sided bracket (2^{-1/p} - eps, min(2^{-1/p} + eps, 1)) around the ball
/// measure of non-compactness of l^p -> l^infty; the upper side is certified
/// by net membership on a seeded sample plus the extremal two-point
/// sequences, the lower side by refutation witnesses against a fixed list of
/// adversarial covers.
AlphaBracket alpha_bracket(const Exponent& p, double eps, std::uint64_t seed = 0);

}  // namespace noncompact
