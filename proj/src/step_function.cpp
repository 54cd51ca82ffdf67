#include "noncompact/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "noncompact/precision.hpp"

namespace noncompact {

namespace {

void merge_adjacent_equal(std::vector<Piece>& pieces) {
  std::vector<Piece> out;
  for (auto& p : pieces) {
    if (!out.empty() && out.back().value == p.value) {
      out.back().measure += p.measure;
    } else {
      out.push_back(std::move(p));
    }
  }
  pieces = std::move(out);
}

}  // namespace

StepFunction StepFunction::make(std::vector<Piece> pieces, Rational total_space) {
  if (!total_space.is_positive()) {
    throw std::invalid_argument("StepFunction: total_space must be positive");
  }
  Rational covered(0);
  for (const auto& p : pieces) {
    if (!p.measure.is_positive()) {
      throw std::invalid_argument("StepFunction: piece measures must be positive");
    }
    if (!std::isfinite(p.value)) {
      throw std::invalid_argument("StepFunction: piece values must be finite");
    }
    covered += p.measure;
  }
  if (covered > total_space) {
    throw std::invalid_argument("StepFunction: pieces exceed total_space");
  }
  merge_adjacent_equal(pieces);
  while (!pieces.empty() && pieces.back().value == 0.0) pieces.pop_back();

  StepFunction u;
  u.pieces_ = std::move(pieces);
  u.total_space_ = std::move(total_space);
  return u;
}

StepFunction StepFunction::indicator(double value, const Rational& measure, const Rational& offset,
                                     const Rational& total_space) {
  if (offset.is_negative()) throw std::invalid_argument("StepFunction::indicator: negative offset");
  std::vector<Piece> pieces;
  if (offset.is_positive()) pieces.push_back({0.0, offset});
  pieces.push_back({value, measure});
  return make(std::move(pieces), total_space);
}

Rational StepFunction::support_measure() const {
  Rational s(0);
  for (const auto& p : pieces_) {
    if (p.value != 0.0) s += p.measure;
  }
  return s;
}

Rational StepFunction::covered_measure() const {
  Rational s(0);
  for (const auto& p : pieces_) s += p.measure;
  return s;
}

bool StepFunction::is_zero() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.value == 0.0; });
}

double StepFunction::value_at(const Rational& t) const {
  if (t.is_negative() || t >= total_space_) {
    throw std::invalid_argument("StepFunction::value_at: t outside [0, total_space)");
  }
  Rational cursor(0);
  for (const auto& p : pieces_) {
    cursor += p.measure;
    if (t < cursor) return p.value;
  }
  return 0.0;
}

StepFunction StepFunction::tagged_as_derivative(int order) const {
  if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
  StepFunction u = *this;
  u.derivative_order_ = order;
  return u;
}

StepFunction StepFunction::scaled(double factor) const {
  std::vector<Piece> pieces = pieces_;
  for (auto& p : pieces) p.value *= factor;
  StepFunction u = make(std::move(pieces), total_space_);
  u.derivative_order_ = derivative_order_;
  return u;
}

std::pair<double, double> ess_bounds(const StepFunction& u) {
  double lo = 0.0;
  double hi = 0.0;
  bool residual = u.covered_measure() < u.total_space();
  bool first = true;
  for (const auto& p : u.pieces()) {
    if (first && !residual) {
      lo = hi = p.value;
      first = false;
    } else {
      lo = std::min(lo, p.value);
      hi = std::max(hi, p.value);
    }
  }
  return {lo, hi};
}

StepFunction combine_pointwise(const StepFunction& u, const StepFunction& v, PointwiseOp op) {
  if (u.total_space() != v.total_space()) {
    throw std::invalid_argument("combine_pointwise: mismatched total_space");
  }
  const auto& up = u.pieces();
  const auto& vp = v.pieces();

  std::vector<Piece> out;
  out.reserve(up.size() + vp.size() + 1);

  Rational cursor(0);
  std::size_t iu = 0, iv = 0;
  Rational end_u = up.empty() ? Rational(0) : up[0].measure;
  Rational end_v = vp.empty() ? Rational(0) : vp[0].measure;

  auto emit = [&](double value, const Rational& width) {
    if (width.is_positive()) out.push_back({value, width});
  };

  while (cursor < u.total_space()) {
    double a = iu < up.size() ? up[iu].value : 0.0;
    double b = iv < vp.size() ? vp[iv].value : 0.0;
    // next cut: nearest of the two piece ends and the total space
    Rational next = u.total_space();
    if (iu < up.size() && end_u < next) next = end_u;
    if (iv < vp.size() && end_v < next) next = end_v;

    double value = 0.0;
    switch (op) {
      case PointwiseOp::Add: value = a + b; break;
      case PointwiseOp::Subtract: value = a - b; break;
      case PointwiseOp::AbsValue: value = std::fabs(a); break;
      case PointwiseOp::SmallerMagnitude: value = std::fabs(a) < std::fabs(b) ? a : b; break;
    }
    emit(value, next - cursor);

    cursor = next;
    if (iu < up.size() && cursor == end_u) {
      ++iu;
      if (iu < up.size()) end_u += up[iu].measure;
    }
    if (iv < vp.size() && cursor == end_v) {
      ++iv;
      if (iv < vp.size()) end_v += vp[iv].measure;
    }
  }
  return StepFunction::make(std::move(out), u.total_space());
}

StepFunction add(const StepFunction& u, const StepFunction& v) {
  return combine_pointwise(u, v, PointwiseOp::Add);
}
StepFunction subtract(const StepFunction& u, const StepFunction& v) {
  return combine_pointwise(u, v, PointwiseOp::Subtract);
}
StepFunction abs(const StepFunction& u) {
  return combine_pointwise(u, u, PointwiseOp::AbsValue);
}
StepFunction smaller_in_magnitude(const StepFunction& u, const StepFunction& v) {
  return combine_pointwise(u, v, PointwiseOp::SmallerMagnitude);
}

bool equal_pointwise(const StepFunction& u, const StepFunction& v) {
  return subtract(u, v).is_zero();
}

StepFunction sum_disjoint(std::span<const StepFunction> members) {
  if (members.empty()) throw std::invalid_argument("sum_disjoint: empty family");
  StepFunction acc = members[0];
  for (std::size_t k = 1; k < members.size(); ++k) {
    if (members[k].total_space() != acc.total_space()) {
      throw std::invalid_argument("sum_disjoint: mismatched total_space");
    }
    // overlap check on the common refinement, then plain addition
    const StepFunction& m = members[k];
    const auto& ap = acc.pieces();
    const auto& bp = m.pieces();
    Rational cursor(0);
    std::size_t ia = 0, ib = 0;
    Rational end_a = ap.empty() ? Rational(0) : ap[0].measure;
    Rational end_b = bp.empty() ? Rational(0) : bp[0].measure;
    while (cursor < acc.total_space()) {
      double a = ia < ap.size() ? ap[ia].value : 0.0;
      double b = ib < bp.size() ? bp[ib].value : 0.0;
      if (a != 0.0 && b != 0.0) {
        throw std::invalid_argument("sum_disjoint: supports overlap");
      }
      Rational next = acc.total_space();
      if (ia < ap.size() && end_a < next) next = end_a;
      if (ib < bp.size() && end_b < next) next = end_b;
      cursor = next;
      if (ia < ap.size() && cursor == end_a) {
        ++ia;
        if (ia < ap.size()) end_a += ap[ia].measure;
      }
      if (ib < bp.size() && cursor == end_b) {
        ++ib;
        if (ib < bp.size()) end_b += bp[ib].measure;
      }
    }
    acc = add(acc, m);
  }
  return acc;
}

RearrangedProfile rearrange(const StepFunction& u) {
  std::vector<Piece> mass;
  mass.reserve(u.pieces().size());
  for (const auto& p : u.pieces()) {
    if (p.value != 0.0) mass.push_back({std::fabs(p.value), p.measure});
  }
  std::stable_sort(mass.begin(), mass.end(),
                   [](const Piece& a, const Piece& b) { return a.value > b.value; });

  RearrangedProfile profile;
  profile.total_space = u.total_space();
  Rational cursor(0);
  for (const auto& p : mass) {
    cursor += p.measure;
    if (!profile.levels.empty() && profile.levels.back() == p.value) {
      profile.breakpoints.back() = cursor;
    } else {
      profile.levels.push_back(p.value);
      profile.breakpoints.push_back(cursor);
    }
  }
  return profile;
}

double RearrangedProfile::value_at(const Rational& t) const {
  if (t.is_negative()) throw std::invalid_argument("RearrangedProfile::value_at: t < 0");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (t < breakpoints[i]) return levels[i];
  }
  return 0.0;
}

Rational RearrangedProfile::measure_above(double lambda) const {
  Rational m(0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] > lambda) m = breakpoints[i];
  }
  return m;
}

double RearrangedProfile::integral_to(const Rational& t) const {
  Accumulator acc;
  Rational prev(0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    Rational hi = min(breakpoints[i], t);
    if (hi <= prev) break;
    acc.add(levels[i] * (hi - prev).to_double());
    prev = breakpoints[i];
  }
  return acc.value();
}

double RearrangedProfile::integral() const {
  return breakpoints.empty() ? 0.0 : integral_to(breakpoints.back());
}

MaximalProfile maximal_profile(const RearrangedProfile& profile) {
  MaximalProfile mp;
  mp.total_space = profile.total_space;
  Accumulator integral;
  Rational prev(0);
  for (std::size_t i = 0; i < profile.levels.size(); ++i) {
    MaximalSegment seg;
    seg.lo = prev;
    seg.hi = profile.breakpoints[i];
    seg.level = profile.levels[i];
    seg.cumulative = integral.value() - profile.levels[i] * prev.to_double();
    mp.segments.push_back(seg);
    integral.add(profile.levels[i] * (seg.hi - seg.lo).to_double());
    prev = seg.hi;
  }
  if (prev < profile.total_space) {
    MaximalSegment seg;
    seg.lo = prev;
    seg.hi = profile.total_space;
    seg.level = 0.0;
    seg.cumulative = integral.value();
    mp.segments.push_back(seg);
  }
  return mp;
}

MaximalProfile maximal_profile(const StepFunction& u) { return maximal_profile(rearrange(u)); }

double MaximalProfile::value_at(const Rational& t) const {
  if (!t.is_positive()) throw std::invalid_argument("maximal rearrangement: t must be positive");
  return value_at_double(t.to_double());
}

double MaximalProfile::value_at_double(double t) const {
  if (!(t > 0.0)) throw std::invalid_argument("maximal rearrangement: t must be positive");
  if (segments.empty()) return 0.0;
  for (const auto& seg : segments) {
    if (t <= seg.hi.to_double()) return (seg.cumulative + seg.level * t) / t;
  }
  return integral() / t;
}

double MaximalProfile::integral() const {
  if (segments.empty()) return 0.0;
  const auto& last = segments.back();
  return last.cumulative + last.level * last.hi.to_double();
}

double maximal_value(const StepFunction& u, const Rational& t) {
  return maximal_profile(u).value_at(t);
}

}  // namespace noncompact
