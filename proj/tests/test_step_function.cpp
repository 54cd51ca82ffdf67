#include <doctest.h>

#include <bit>
#include <cmath>
#include <limits>
#include <vector>

#include "generators.hpp"
#include "noncompact/precision.hpp"
#include "noncompact/step_function.hpp"

using namespace noncompact;

namespace {

/// Independent u** oracle at rational t: atomize (0, |Omega|) on the common
/// grid, enumerate every subset of t/g atoms and take the best average. The
/// greedy/averaging identity under test plays no part here.
double maximal_value_by_enumeration(const StepFunction& u, const Rational& t) {
  Rational g = t;
  for (const auto& p : u.pieces()) g = gcd(g, p.measure);
  g = gcd(g, u.total_space());
  std::vector<double> atoms;
  for (const auto& p : u.pieces()) {
    Rational n = p.measure / g;
    for (Rational i(0); i < n; i += 1) atoms.push_back(std::fabs(p.value));
  }
  Rational residual = u.total_space() - u.covered_measure();
  for (Rational i(0); i < residual / g; i += 1) atoms.push_back(0.0);

  long long want = 0;
  for (Rational i(0); i < t / g; i += 1) ++want;
  REQUIRE(atoms.size() <= 20);
  REQUIRE(want <= static_cast<long long>(atoms.size()));

  double best = -1.0;
  for (std::uint32_t mask = 0; mask < (1u << atoms.size()); ++mask) {
    if (std::popcount(mask) != want) continue;
    double s = 0.0;
    for (std::size_t b = 0; b < atoms.size(); ++b) {
      if ((mask >> b) & 1u) s += atoms[b];
    }
    best = std::max(best, s);
  }
  return best * g.to_double() / t.to_double();
}

}  // namespace

TEST_SUITE("step_function") {

TEST_CASE("make validates and canonicalizes") {
  auto u = StepFunction::make({{3.0, Rational(1, 2)}, {1.0, Rational(1, 4)}}, Rational(1));
  CHECK(u.covered_measure() == Rational(3, 4));
  CHECK(u.total_space() - u.covered_measure() == Rational(1, 4));

  CHECK_THROWS_AS(StepFunction::make({{1.0, Rational(2)}}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction::make({{1.0, Rational(0)}}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction::make({{1.0, Rational(-1, 2)}}, Rational(1)), std::invalid_argument);

  auto zero = StepFunction::make({}, Rational(1));
  CHECK(zero.is_zero());
  CHECK(zero.pieces().empty());

  // adjacent equal values merge, trailing zeros fold into the residual
  auto merged = StepFunction::make({{2.0, Rational(1, 4)}, {2.0, Rational(1, 4)}, {0.0, Rational(1, 4)}},
                                   Rational(1));
  CHECK(merged.pieces().size() == 1);
  CHECK(merged.pieces()[0].measure == Rational(1, 2));
}

TEST_CASE("value_at walks the layout") {
  auto u = StepFunction::make({{0.0, Rational(1, 4)}, {2.0, Rational(1, 4)}}, Rational(1));
  CHECK(u.value_at(Rational(0)) == 0.0);
  CHECK(u.value_at(Rational(1, 4)) == 2.0);
  CHECK(u.value_at(Rational(3, 8)) == 2.0);
  CHECK(u.value_at(Rational(1, 2)) == 0.0);
  CHECK_THROWS_AS(u.value_at(Rational(1)), std::invalid_argument);
}

TEST_CASE("rearrange sorts by magnitude") {
  auto u = StepFunction::make({{1.0, Rational(1, 4)}, {3.0, Rational(1, 2)}}, Rational(1));
  auto p = rearrange(u);
  REQUIRE(p.size() == 2);
  CHECK(p.levels[0] == 3.0);
  CHECK(p.breakpoints[0] == Rational(1, 2));
  CHECK(p.levels[1] == 1.0);
  CHECK(p.breakpoints[1] == Rational(3, 4));
  CHECK(p.value_at(Rational(3, 4)) == 0.0);

  // indicator of measure s at level s^{-1/r} rearranges to the same block at 0
  Rational s(1, 8);
  double level = real_pow(s.to_double(), -0.5);
  auto uk = StepFunction::indicator(level, s, Rational(1, 2), Rational(1));
  auto pk = rearrange(uk);
  REQUIRE(pk.size() == 1);
  CHECK(pk.levels[0] == level);
  CHECK(pk.breakpoints[0] == s);

  CHECK(rearrange(StepFunction::zero(Rational(1))).empty());
}

TEST_CASE("rearrange preserves the distribution function exactly") {
  nctest::Gen gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto u = gen.step(Rational(2), 6, true);
    auto p = rearrange(u);
    std::vector<double> lambdas = {0.001, 0.5, 1.0, 2.5};
    for (double level : p.levels) {
      lambdas.push_back(level);
      lambdas.push_back(level * 0.999);
    }
    for (double lambda : lambdas) {
      if (lambda <= 0.0) continue;
      Rational direct(0);
      for (const auto& piece : u.pieces()) {
        if (std::fabs(piece.value) > lambda) direct += piece.measure;
      }
      CHECK(direct == p.measure_above(lambda));
    }
  }
}

TEST_CASE("maximal_value matches hand integration") {
  auto u = StepFunction::make({{3.0, Rational(1, 2)}, {1.0, Rational(1, 4)}}, Rational(1));
  CHECK(maximal_value(u, Rational(3, 4)) == doctest::Approx(7.0 / 3.0).epsilon(1e-14));

  auto c = StepFunction::make({{2.5, Rational(1)}}, Rational(1));
  for (auto t : {Rational(1, 8), Rational(1, 2), Rational(1)}) {
    CHECK(maximal_value(c, t) == doctest::Approx(2.5).epsilon(1e-14));
  }

  // s^{-1/r} indicator of measure s: u**(t) = s^{1 - 1/r} / t for t >= s
  Rational s(1, 4);
  double r = 3.0;
  auto uk = StepFunction::indicator(real_pow(s.to_double(), -1.0 / r), s, Rational(0), Rational(1));
  for (auto t : {Rational(1, 4), Rational(1, 2), Rational(1)}) {
    double expect = real_pow(s.to_double(), 1.0 - 1.0 / r) / t.to_double();
    CHECK(maximal_value(uk, t) == doctest::Approx(expect).epsilon(1e-14));
  }

  CHECK_THROWS_AS(maximal_value(u, Rational(0)), std::invalid_argument);
  // past the space the averaged integral keeps falling
  CHECK(maximal_value(u, Rational(2)) == doctest::Approx((7.0 / 4.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("maximal_value agrees with exhaustive subset enumeration") {
  nctest::Gen gen(77);
  for (int trial = 0; trial < 40; ++trial) {
    // pieces on the 1/8 grid keep the atom count enumerable
    std::vector<Piece> pieces;
    int left = 8;
    while (left > 0 && gen.uniform_int(0, 3) != 0) {
      int w = gen.uniform_int(1, left);
      pieces.push_back({gen.value(true), Rational(w, 8)});
      left -= w;
    }
    auto u = StepFunction::make(std::move(pieces), Rational(1));
    for (long long num = 1; num <= 8; ++num) {
      Rational t(num, 8);
      CHECK(maximal_value(u, t) ==
            doctest::Approx(maximal_value_by_enumeration(u, t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("hardy-littlewood on piece-assembled sets") {
  nctest::Gen gen(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = gen.step(Rational(1), 5, true);
    auto p = rearrange(u);
    const auto& pieces = u.pieces();
    if (pieces.empty()) continue;
    std::uint32_t subsets = 1u << pieces.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      Rational measure(0);
      double integral = 0.0;
      for (std::size_t b = 0; b < pieces.size(); ++b) {
        if ((mask >> b) & 1u) {
          measure += pieces[b].measure;
          integral += std::fabs(pieces[b].value) * pieces[b].measure.to_double();
        }
      }
      CHECK(integral <= p.integral_to(measure) + 1e-9);
    }
  }
}

TEST_CASE("monotonicity of the rearrangements") {
  nctest::Gen gen(5150);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = gen.step(Rational(3, 2), 6, true);
    auto p = rearrange(u);
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p.levels[i] < p.levels[i - 1]);
    auto mp = maximal_profile(p);
    std::vector<Rational> ts;
    Rational prev(0);
    for (const auto& seg : mp.segments) {
      ts.push_back((prev + seg.hi) / 2);
      ts.push_back(seg.hi);
      prev = seg.hi;
    }
    double last = std::numeric_limits<double>::infinity();
    for (const auto& t : ts) {
      double star = p.value_at(t);
      double dstar = mp.value_at(t);
      CHECK(dstar >= star - 1e-12);
      CHECK(dstar <= last + 1e-12);
      last = dstar;
    }
  }
}

TEST_CASE("disjoint_sum merges the staircase") {
  // geometric supports 1/2, 1/4, 1/8 at levels s_k^{-1/2}
  std::vector<StepFunction> members;
  Rational offset(0);
  for (Rational s : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
    members.push_back(
        StepFunction::indicator(real_pow(s.to_double(), -0.5), s, offset, Rational(1)));
    offset += s;
  }
  auto sum = sum_disjoint(members);
  auto p = rearrange(sum);
  REQUIRE(p.size() == 3);
  // breakpoints are the tail sums a_2 = 1/8, a_1 = 3/8, a_0 = 7/8
  CHECK(p.breakpoints[0] == Rational(1, 8));
  CHECK(p.breakpoints[1] == Rational(3, 8));
  CHECK(p.breakpoints[2] == Rational(7, 8));
  CHECK(p.levels[0] == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
  CHECK(p.levels[1] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.levels[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  // single member
  auto single = sum_disjoint(std::span(members.data(), 1));
  CHECK(single == members[0]);

  // equal-value indicators merge into one block
  auto a = StepFunction::indicator(1.0, Rational(1, 2), Rational(0), Rational(1));
  auto b = StepFunction::indicator(1.0, Rational(1, 4), Rational(1, 2), Rational(1));
  std::vector<StepFunction> two = {a, b};
  auto merged = sum_disjoint(two);
  REQUIRE(merged.pieces().size() == 1);
  CHECK(merged.pieces()[0].measure == Rational(3, 4));

  // overlap rejected
  std::vector<StepFunction> overlapping = {a, a};
  CHECK_THROWS_AS(sum_disjoint(overlapping), std::invalid_argument);
}

TEST_CASE("combine_pointwise") {
  nctest::Gen gen(99);
  auto u = gen.step(Rational(1), 5, true);
  CHECK(add(u, u.negated()).is_zero());
  CHECK(smaller_in_magnitude(u, StepFunction::zero(Rational(1))).is_zero());

  double level = real_pow(2.0, -0.5);
  auto x = StepFunction::indicator(level, Rational(1, 4), Rational(0), Rational(1));
  auto y = StepFunction::indicator(level, Rational(1, 4), Rational(1, 4), Rational(1));
  auto diff = subtract(x, y);
  auto [lo, hi] = ess_bounds(diff);
  CHECK(hi - lo == doctest::Approx(2.0 * level).epsilon(1e-15));

  auto other = StepFunction::zero(Rational(2));
  CHECK_THROWS_AS(add(u, other), std::invalid_argument);

  // |u| keeps the layout
  auto au = noncompact::abs(diff);
  CHECK(au.value_at(Rational(1, 8)) == doctest::Approx(level));
  CHECK(au.value_at(Rational(3, 8)) == doctest::Approx(level));
}

TEST_CASE("ess_bounds includes the implicit zero set") {
  auto u = StepFunction::make({{3.0, Rational(1, 2)}, {-1.0, Rational(1, 4)}}, Rational(1));
  auto [lo, hi] = ess_bounds(u);
  CHECK(lo == -1.0);
  CHECK(hi == 3.0);

  auto [zlo, zhi] = ess_bounds(StepFunction::zero(Rational(1)));
  CHECK(zlo == 0.0);
  CHECK(zhi == 0.0);

  // fully covered positive function has a positive essential infimum
  auto full = StepFunction::make({{2.0, Rational(1, 2)}, {1.0, Rational(1, 2)}}, Rational(1));
  CHECK(ess_bounds(full).first == 1.0);
}

TEST_CASE("subadditivity of the rearrangements on fixed pairs") {
  nctest::Gen gen(4242);
  for (int trial = 0; trial < 50; ++trial) {
    auto u = gen.step(Rational(1), 4, true);
    auto v = gen.step(Rational(1), 4, true);
    auto s = add(u, v);
    auto mu = maximal_profile(u);
    auto mv = maximal_profile(v);
    auto ms = maximal_profile(s);
    Rational prev(0);
    for (const auto& seg : ms.segments) {
      for (const Rational& t : {(prev + seg.hi) / 2, seg.hi}) {
        if (!t.is_positive()) continue;
        CHECK(ms.value_at(t) <= mu.value_at(t) + mv.value_at(t) + 1e-9);
      }
      prev = seg.hi;
    }
  }
}

}  // TEST_SUITE
