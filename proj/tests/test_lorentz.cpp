#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "noncompact/lorentz.hpp"
#include "noncompact/precision.hpp"

using namespace noncompact;

namespace {

const Exponent kInf = Exponent::infinity();

/// Dense-sampling oracle for sup t^{1/p} u**(t): a grid over every segment,
/// endpoints included.
double weak_maximal_by_sampling(const MaximalProfile& mp, double p, int points_total) {
  double best = 0.0;
  int per_segment = points_total / std::max<int>(1, mp.segments.size());
  for (const auto& seg : mp.segments) {
    double lo = seg.lo.to_double(), hi = seg.hi.to_double();
    for (int i = 0; i <= per_segment; ++i) {
      double t = lo + (hi - lo) * i / per_segment;
      if (!(t > 0.0)) continue;
      best = std::max(best, std::pow(t, 1.0 / p) * mp.value_at_double(t));
    }
  }
  return best;
}

double lp_norm_direct(const StepFunction& u, double p) {
  double sum = 0.0;
  for (const auto& piece : u.pieces()) {
    sum += std::pow(std::fabs(piece.value), p) * piece.measure.to_double();
  }
  return std::pow(sum, 1.0 / p);
}

}  // namespace

TEST_SUITE("lorentz") {

TEST_CASE("weak norm of the geometric building block is one") {
  for (auto r : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5)}) {
    for (auto s : {Rational(1, 2), Rational(1, 8), Rational(3, 16)}) {
      double level = real_pow(s.to_double(), -(Rational(1) / r).to_double());
      auto u = StepFunction::indicator(level, s, Rational(1, 16), Rational(1));
      CHECK(lorentz_norm(u, {Exponent(r), kInf, NormKind::Star}) ==
            doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("L^{p,p} recovers the Lebesgue norm") {
  auto u = StepFunction::make({{3.0, Rational(1, 2)}, {1.0, Rational(1, 4)}}, Rational(1));
  // integral of |u|^2 is 9/2 + 1/4 = 19/4
  CHECK(lorentz_norm(u, {Exponent(2), Exponent(2), NormKind::Star}) ==
        doctest::Approx(std::sqrt(19.0 / 4.0)).epsilon(1e-14));

  nctest::Gen gen(808);
  for (int trial = 0; trial < 50; ++trial) {
    auto v = gen.step(Rational(1), 5, true);
    for (auto p : {Rational(1), Rational(2), Rational(7, 2)}) {
      double direct = lp_norm_direct(v, p.to_double());
      CHECK(lorentz_norm(v, {Exponent(p), Exponent(p), NormKind::Star}) ==
            doctest::Approx(direct).epsilon(1e-11));
    }
  }
}

TEST_CASE("weak norm of the merged staircase") {
  std::vector<StepFunction> members;
  Rational offset(0);
  for (auto s : {Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
    members.push_back(StepFunction::indicator(real_pow(s.to_double(), -0.5), s, offset, Rational(1)));
    offset += s;
  }
  auto sum = sum_disjoint(members);
  double norm = lorentz_norm(sum, {Exponent(2), kInf, NormKind::Star});
  CHECK(norm == doctest::Approx(std::sqrt(7.0 / 4.0)).epsilon(1e-14));
  CHECK(norm <= std::sqrt(2.0));
}

TEST_CASE("zero and infinite cases") {
  auto zero = StepFunction::zero(Rational(1));
  CHECK(lorentz_norm(zero, {Exponent(2), kInf, NormKind::Star}) == 0.0);
  CHECK(lorentz_maximal_norm(zero, {Exponent(2), kInf, NormKind::DoubleStar}) == 0.0);
  CHECK(lorentz_norm(zero, {kInf, Exponent(2), NormKind::Star}) == 0.0);

  auto u = StepFunction::make({{2.0, Rational(1, 2)}}, Rational(1));
  CHECK(lorentz_norm(u, {kInf, kInf, NormKind::Star}) == 2.0);
  CHECK(std::isinf(lorentz_norm(u, {kInf, Exponent(1), NormKind::Star})));
  CHECK(lorentz_maximal_norm(u, {kInf, kInf, NormKind::DoubleStar}) == 2.0);
}

TEST_CASE("maximal norm closed cases") {
  // constant c: u** = c, so the supremum is c |Omega|^{1/p}
  auto c = StepFunction::make({{2.5, Rational(3, 2)}}, Rational(3, 2));
  CHECK(lorentz_maximal_norm(c, {Exponent(2), kInf, NormKind::DoubleStar}) ==
        doctest::Approx(2.5 * std::sqrt(1.5)).epsilon(1e-14));

  // p <= 1 collapses to |Omega|^{1/p - 1} ||u||_1
  nctest::Gen gen(606);
  for (int trial = 0; trial < 30; ++trial) {
    auto u = gen.step(Rational(3, 2), 5, true);
    for (auto p : {Rational(1, 2), Rational(2, 3), Rational(1)}) {
      double l1 = rearrange(u).integral();
      double expect = real_pow(1.5, (Rational(1) / p - Rational(1)).to_double()) * l1;
      CHECK(lorentz_maximal_norm(u, {Exponent(p), kInf, NormKind::DoubleStar}) ==
            doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("maximal norm candidates match dense sampling") {
  auto u = StepFunction::make({{3.0, Rational(1, 2)}, {1.0, Rational(1, 4)}}, Rational(1));
  auto mp = maximal_profile(u);
  double exact = lorentz_maximal_norm(u, {Exponent(2), kInf, NormKind::DoubleStar});
  CHECK(exact == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(exact == doctest::Approx(weak_maximal_by_sampling(mp, 2.0, 100'000)).epsilon(1e-9));

  nctest::Gen gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto v = gen.step(Rational(1), 5, true);
    auto mv = maximal_profile(v);
    for (auto p : {Rational(3, 2), Rational(2), Rational(4)}) {
      double cand = lorentz_maximal_norm(v, {Exponent(p), kInf, NormKind::DoubleStar});
      double dense = weak_maximal_by_sampling(mv, p.to_double(), 100'000);
      CHECK(cand == doctest::Approx(dense).epsilon(1e-9));
    }
  }
}

TEST_CASE("maximal norm quadrature against a midpoint oracle") {
  auto u = StepFunction::make({{3.0, Rational(1, 2)}, {1.0, Rational(1, 4)}}, Rational(1));
  auto mp = maximal_profile(u);
  Rational p(3, 2), q(2);
  double norm = lorentz_maximal_norm(u, {Exponent(p), Exponent(q), NormKind::DoubleStar});

  double qd = q.to_double(), q_over_p = (q / p).to_double();
  double integral = 0.0;
  for (const auto& seg : mp.segments) {
    double lo = seg.lo.to_double(), hi = seg.hi.to_double();
    const int n = 400'000;
    double h = (hi - lo) / n;
    for (int i = 0; i < n; ++i) {
      double t = lo + (i + 0.5) * h;
      integral += std::pow(t, q_over_p - 1.0) * std::pow(mp.value_at_double(t), qd) * h;
    }
  }
  CHECK(norm == doctest::Approx(std::pow(integral, 1.0 / qd)).epsilon(1e-6));
}

TEST_CASE("star and maximal norms compare as u* and u** do") {
  nctest::Gen gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto u = gen.step(Rational(1), 6, true);
    for (auto p : {Rational(1, 2), Rational(1), Rational(2)}) {
      for (bool finite_q : {false, true}) {
        Exponent q = finite_q ? Exponent(Rational(3)) : kInf;
        double star = lorentz_norm(u, {Exponent(p), q, NormKind::Star});
        double dstar = lorentz_maximal_norm(u, {Exponent(p), q, NormKind::DoubleStar});
        CHECK(dstar >= star * (1.0 - 1e-9));
      }
    }
  }
}

TEST_CASE("homogeneity") {
  nctest::Gen gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto u = gen.step(Rational(1), 5, true);
    for (double lambda : {-2.0, 0.5, 3.0}) {
      auto v = u.scaled(lambda);
      for (LorentzExponents e : {LorentzExponents{Exponent(2), kInf, NormKind::Star},
                                 LorentzExponents{Exponent(3, 2), Exponent(1), NormKind::Star},
                                 LorentzExponents{Exponent(2), kInf, NormKind::DoubleStar}}) {
        CHECK(lorentz_functional(v, e) ==
              doctest::Approx(std::fabs(lambda) * lorentz_functional(u, e)).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("triangle inequality for the maximal weak norm") {
  nctest::Gen gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto u = gen.step(Rational(1), 4, true);
    auto v = gen.step(Rational(1), 4, true);
    for (auto r : {Rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
      double nu = weak_lebesgue_norm(u, Exponent(r), NormKind::DoubleStar);
      double nv = weak_lebesgue_norm(v, Exponent(r), NormKind::DoubleStar);
      double ns = weak_lebesgue_norm(add(u, v), Exponent(r), NormKind::DoubleStar);
      CHECK(ns <= nu + nv + 1e-9 * (1.0 + nu + nv));
    }
  }
}

TEST_CASE("quasinorm defect") {
  auto u = StepFunction::make({{2.0, Rational(1, 4)}, {-1.0, Rational(1, 4)}}, Rational(1));
  CHECK(quasinorm_defect(u, u, Rational(2)) == doctest::Approx(1.0).epsilon(1e-13));

  // disjoint indicators at one level and measure
  auto a = StepFunction::indicator(1.0, Rational(1, 4), Rational(0), Rational(1));
  auto b = StepFunction::indicator(1.0, Rational(1, 4), Rational(1, 4), Rational(1));
  // ||a+b|| = (1/2)^{1/2}, each norm (1/4)^{1/2}, so the ratio is 2^{-1/2}
  double d = quasinorm_defect(a, b, Rational(2));
  CHECK(d == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(d <= std::sqrt(2.0));

  auto zero = StepFunction::zero(Rational(1));
  CHECK_THROWS_AS(quasinorm_defect(zero, zero, Rational(2)), std::invalid_argument);
}

}  // TEST_SUITE
