#include "noncompact/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "noncompact/precision.hpp"

namespace noncompact {

bool Report::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

Json Report::to_json() const {
  Json j;
  j["schema"] = "v1";
  j["command"] = command;
  j["params"] = params;
  Json cs = Json::array();
  for (const auto& c : claims) {
    Json jc;
    jc["id"] = c.id;
    jc["anchor"] = c.anchor;
    jc["kind"] = c.kind;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["tol"] = c.tol;
    jc["pass"] = c.pass;
    cs.push_back(std::move(jc));
  }
  j["claims"] = std::move(cs);
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

bool close_rel(double expected, double computed, double tol) {
  if (expected == computed) return true;
  double scale = std::max(std::fabs(expected), std::fabs(computed));
  if (scale == 0.0) return true;
  double abs_tol = std::max(tol, tol * scale);
  return std::fabs(expected - computed) <= abs_tol;
}

Claim& Report::check_close(std::string id, std::string anchor, std::string kind, double expected,
                           double computed, double rel_tol) {
  Claim c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.kind = std::move(kind);
  c.expected = expected;
  c.computed = computed;
  c.tol = rel_tol;
  c.pass = close_rel(expected, computed, rel_tol);
  claims.push_back(std::move(c));
  return claims.back();
}

Claim& Report::check_true(std::string id, std::string anchor, std::string kind, bool condition,
                          Json detail) {
  Claim c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.kind = std::move(kind);
  c.expected = true;
  c.computed = detail.is_null() ? Json(condition) : detail;
  c.tol = 0.0;
  c.pass = condition;
  claims.push_back(std::move(c));
  return claims.back();
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational as \"a/b\" string or integer");
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

Json step_function_to_json(const StepFunction& u) {
  Json j;
  j["total_space"] = u.total_space().to_string();
  if (u.derivative_order() != 0) j["derivative_order"] = u.derivative_order();
  Json pieces = Json::array();
  for (const auto& p : u.pieces()) {
    Json jp;
    jp["value"] = p.value;
    jp["measure"] = p.measure.to_string();
    pieces.push_back(std::move(jp));
  }
  j["pieces"] = std::move(pieces);
  return j;
}

StepFunction step_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("total_space") || !j.contains("pieces")) {
    throw std::invalid_argument("step function JSON needs total_space and pieces");
  }
  std::vector<Piece> pieces;
  for (const auto& jp : j.at("pieces")) {
    pieces.push_back({jp.at("value").get<double>(), rational_from_json(jp.at("measure"))});
  }
  StepFunction u = StepFunction::make(std::move(pieces), rational_from_json(j.at("total_space")));
  if (j.contains("derivative_order")) {
    u = u.tagged_as_derivative(j.at("derivative_order").get<int>());
  }
  return u;
}

std::string figure_staircase_csv(const Rational& r, int m, const Rational& ratio,
                                 const Rational& total_space) {
  if (m < 1) throw std::invalid_argument("figure_staircase_csv: m must be at least 1");
  if (!ratio.is_positive() || ratio > Rational(1, 2)) {
    throw std::invalid_argument("figure_staircase_csv: ratio must lie in (0, 1/2]");
  }
  const double inv_r = (Rational(1) / r).to_double();
  std::vector<Rational> s;       // s_1..s_m
  std::vector<double> level;     // s_j^{-1/r}
  Rational cur = total_space;
  for (int j = 1; j <= m; ++j) {
    cur *= ratio;
    s.push_back(cur);
    level.push_back(real_pow(cur.to_double(), -inv_r));
  }
  std::vector<Rational> a(m + 1, Rational(0));  // a_j = s_{j+1} + ... + s_m
  for (int j = m; j-- > 0;) a[j] = a[j + 1] + s[j];

  std::string csv = "kind,t,value\n";
  for (int j = m; j >= 1; --j) {
    csv += "step," + format_double(a[j].to_double()) + "," + format_double(level[j - 1]) + "\n";
  }
  csv += "step," + format_double(a[0].to_double()) + "," + format_double(level[0]) + "\n";
  for (int j = m; j >= 1; --j) {
    csv += "comb," + format_double(a[j - 1].to_double()) + "," + format_double(level[j - 1]) + "\n";
  }
  return csv;
}

}  // namespace noncompact
