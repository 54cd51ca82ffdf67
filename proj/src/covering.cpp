#include "noncompact/covering.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "noncompact/precision.hpp"

namespace noncompact {

FiniteSeq FiniteSeq::unit(std::size_t idx, double value) {
  FiniteSeq y;
  y.entries.assign(idx + 1, 0.0);
  y.entries[idx] = value;
  return y;
}

double seq_lp_norm(const FiniteSeq& y, const Exponent& p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (double v : y.entries) m = std::max(m, std::fabs(v));
    return m;
  }
  const double pd = p.value().to_double();
  Accumulator acc;
  for (double v : y.entries) acc.add(real_pow(std::fabs(v), pd));
  return real_pow(acc.value(), 1.0 / pd);
}

double seq_sup(const FiniteSeq& y) {
  double s = 0.0;  // the zero tail
  for (double v : y.entries) s = std::max(s, v);
  return s;
}

double seq_inf(const FiniteSeq& y) {
  double s = 0.0;
  for (double v : y.entries) s = std::min(s, v);
  return s;
}

double linf_distance(const FiniteSeq& a, const FiniteSeq& b) {
  double d = 0.0;
  std::size_t n = std::max(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::fabs(a.at(i) - b.at(i)));
  return d;
}

double linf_distance_to_constant(const FiniteSeq& a, double lambda) {
  double d = std::fabs(lambda);
  for (double v : a.entries) d = std::max(d, std::fabs(v - lambda));
  return d;
}

double sigma_lp(const Exponent& p) {
  if (!p.is_infinite() && p.value() < Rational(1)) {
    throw std::invalid_argument("sigma_lp: p must be at least 1");
  }
  return real_pow(2.0, 1.0 - p.inverse_as_double());
}

CoverNet build_constant_net(double sigma, double rho) {
  if (!(rho > sigma / 2.0)) {
    throw std::invalid_argument("build_constant_net: rho must exceed sigma / 2");
  }
  constexpr long kMaxM = 2'000'000;
  long m = 0;
  for (long candidate = 1; candidate <= kMaxM; ++candidate) {
    if ((1.0 + 1.0 / static_cast<double>(candidate)) * sigma / 2.0 < rho) {
      m = candidate;
      break;
    }
  }
  if (m == 0) throw std::invalid_argument("build_constant_net: net too large to materialize");
  CoverNet net;
  net.sigma = sigma;
  net.rho = rho;
  net.m = m;
  net.levels.reserve(static_cast<std::size_t>(2 * m + 1));
  for (long k = -m; k <= m; ++k) {
    net.levels.push_back(sigma * static_cast<double>(k) / (2.0 * static_cast<double>(m)));
  }
  return net;
}

std::vector<StepFunction> constant_centers(const CoverNet& net, const Rational& total_space) {
  std::vector<StepFunction> centers;
  centers.reserve(net.levels.size());
  for (double lambda : net.levels) {
    centers.push_back(lambda == 0.0 ? StepFunction::zero(total_space)
                                    : StepFunction::make({{lambda, total_space}}, total_space));
  }
  return centers;
}

LocateResult locate(const FiniteSeq& y, const Exponent& p, const CoverNet& net) {
  if (seq_lp_norm(y, p) > 1.0 + 1e-12) {
    throw std::invalid_argument("locate: y must lie in the unit ball of l^p");
  }
  LocateResult res;
  res.sup = seq_sup(y);
  res.inf = seq_inf(y);
  if (res.sup - res.inf > net.sigma * (1.0 + 1e-12)) {
    throw std::logic_error("locate: sup - inf exceeds sigma");
  }

  auto try_k = [&](long k) {
    if (k < -net.m || k > net.m) return false;
    double lambda = net.level(k);
    double d = linf_distance_to_constant(y, lambda);
    if (d < net.rho) {
      res.k = k;
      res.lambda = lambda;
      res.distance = d;
      return true;
    }
    return false;
  };

  bool all_zero = std::all_of(y.entries.begin(), y.entries.end(), [](double v) { return v == 0.0; });
  if (all_zero && try_k(0)) return res;

  if (res.inf <= -net.sigma) {
    if (try_k(-net.m)) return res;
  } else {
    // unique k with inf y + sigma/2 in (lambda_{k-1}, lambda_k]
    double x = (res.inf + net.sigma / 2.0) * 2.0 * static_cast<double>(net.m) / net.sigma;
    long k = static_cast<long>(std::ceil(x - 1e-12));
    k = std::clamp(k, -net.m + 1, net.m);
    if (try_k(k) || try_k(k - 1) || try_k(k + 1)) return res;
  }
  throw std::logic_error("locate: no center found for an admissible sequence");
}

RefuteWitness refute_radius(const Exponent& p, const std::vector<FiniteSeq>& centers, double rho) {
  const double a = real_pow(2.0, -p.inverse_as_double());  // level 2^{-1/p}
  if (!(rho < a)) {
    throw std::invalid_argument("refute_radius: needs rho < 2^{-1/p}");
  }
  if (!(2.0 * rho > a)) {
    throw std::invalid_argument("refute_radius: needs 2 rho > 2^{-1/p}");
  }
  if (centers.size() > 24) {
    throw std::invalid_argument("refute_radius: too many centers for a 2^{m} point scan");
  }
  const std::size_t ell = std::size_t{1} << (centers.size() + 1);

  RefuteWitness witness;
  witness.ell = ell;
  FiniteSeq w;
  for (std::size_t j = 2; j <= ell; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      w.entries.assign(j, 0.0);
      w.entries[i - 1] = a;
      w.entries[j - 1] = -a;
      bool uncovered = true;
      std::vector<double> dists;
      dists.reserve(centers.size());
      for (const auto& c : centers) {
        double d = linf_distance(w, c);
        dists.push_back(d);
        if (d < rho) {
          uncovered = false;
          break;
        }
      }
      if (uncovered) {
        witness.w = w;
        witness.i = i;
        witness.j = j;
        witness.distances = std::move(dists);
        return witness;
      }
    }
  }
  throw std::logic_error("refute_radius: scan exhausted without a witness");
}

namespace {

FiniteSeq random_unit_ball_point(std::mt19937_64& rng, const Exponent& p) {
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  FiniteSeq y;
  y.entries.resize(len(rng));
  for (auto& v : y.entries) v = coord(rng);
  double n = seq_lp_norm(y, p);
  if (n == 0.0) return y;
  double scale = radius(rng) / n;
  for (auto& v : y.entries) v *= scale;
  return y;
}

}  // namespace

AlphaBracket alpha_bracket(const Exponent& p, double eps, std::uint64_t seed) {
  if (!(eps > 0.0)) throw std::invalid_argument("alpha_bracket: eps must be positive");
  const double target = real_pow(2.0, -p.inverse_as_double());
  const double sigma = sigma_lp(p);
  AlphaBracket bracket;

  // upper path: constant net at target + eps, membership of a seeded sample
  // plus every extremal two-point sequence up to index 8
  CoverNet net = build_constant_net(sigma, target + eps);
  bracket.net_size = net.size();
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 10'000; ++trial) {
    locate(random_unit_ball_point(rng, p), p, net);
    ++bracket.samples;
  }
  for (std::size_t i = 1; i <= 8; ++i) {
    for (std::size_t j = i + 1; j <= 8; ++j) {
      FiniteSeq y;
      y.entries.assign(j, 0.0);
      y.entries[i - 1] = target;
      y.entries[j - 1] = -target;
      locate(y, p, net);
      ++bracket.samples;
    }
  }

  // lower path: refute target - eps against a fixed adversarial cover list
  const double rho_low = target - eps;
  std::vector<std::vector<FiniteSeq>> adversaries;
  adversaries.push_back({});                       // empty cover
  adversaries.push_back({FiniteSeq{}});            // the origin
  {
    FiniteSeq first_diff;                          // a cover centered on one difference
    first_diff.entries = {target, -target};
    adversaries.push_back({first_diff});
  }
  {
    std::vector<FiniteSeq> grid;                   // coarse constant grid
    for (int k = -1; k <= 1; ++k) {
      FiniteSeq c;
      c.entries.assign(8, sigma * static_cast<double>(k) / 4.0);
      grid.push_back(std::move(c));
    }
    adversaries.push_back(std::move(grid));
  }
  {
    std::vector<FiniteSeq> randoms;                // seeded random centers
    for (int i = 0; i < 4; ++i) randoms.push_back(random_unit_ball_point(rng, p));
    adversaries.push_back(std::move(randoms));
  }
  for (const auto& cover : adversaries) {
    refute_radius(p, cover, rho_low);
    ++bracket.refutations;
  }

  bracket.lower = rho_low;
  bracket.upper = std::min(target + eps, 1.0);  // the operator norm caps the radius
  return bracket;
}

}  // namespace noncompact
