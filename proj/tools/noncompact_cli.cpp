#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "noncompact/coloring.hpp"
#include "noncompact/covering.hpp"
#include "noncompact/lorentz.hpp"
#include "noncompact/precision.hpp"
#include "noncompact/report.hpp"
#include "noncompact/scaling.hpp"
#include "noncompact/superadditivity.hpp"

using namespace noncompact;

namespace {

Exponent parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity") return Exponent::infinity();
  return Exponent(Rational::parse(s));
}

NormKind parse_kind(const std::string& s) {
  if (s == "star") return NormKind::Star;
  if (s == "double-star" || s == "double_star") return NormKind::DoubleStar;
  throw CLI::ValidationError("kind must be star or double-star");
}

struct Emitter {
  std::string out_path;  // empty = stdout
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  int finish(Report& rep) {
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    std::string text = rep.to_json().dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write report to " << out_path << "\n";
        return 2;
      }
      out << text;
    }
    return rep.all_pass() ? 0 : 1;
  }
};

// --- superadd ---------------------------------------------------------------

int cmd_superadd(const std::string& r_str, int m, const std::string& ratio_str, double gamma,
                 const std::string& kind_str, double tol, Emitter& emit) {
  Rational r = Rational::parse(r_str);
  Rational ratio = Rational::parse(ratio_str);
  NormKind kind = parse_kind(kind_str);
  const Rational total(1);

  Report rep;
  rep.command = "superadd";
  rep.params = {{"r", r.to_string()},
                {"m", m},
                {"ratio", ratio.to_string()},
                {"gamma", gamma},
                {"kind", kind == NormKind::Star ? "star" : "double-star"},
                {"tol", tol}};

  auto family = DisjointFamily::build(r, m, ratio, total);

  // member norms: unit for the plain weak norm at every r, and for the
  // maximal one once r >= 1; below 1 the maximal norm is a scaled L^1 norm
  double worst_unit = 0.0;
  for (const auto& u : family.members()) {
    worst_unit = std::max(worst_unit,
                          std::fabs(weak_lebesgue_norm(u, Exponent(r), NormKind::Star) - 1.0));
  }
  rep.check_close("member-weak-norms", "unit-weak-norm", "closed-form", 0.0, worst_unit, tol);

  if (r >= Rational(1)) {
    double worst = 0.0;
    for (const auto& u : family.members()) {
      worst = std::max(worst,
                       std::fabs(weak_lebesgue_norm(u, Exponent(r), NormKind::DoubleStar) - 1.0));
    }
    rep.check_close("member-maximal-norms", "unit-maximal-weak-norm", "closed-form", 0.0, worst,
                    tol);
  } else {
    double worst = 0.0;
    double scale = real_pow(total.to_double(), (Rational(1) / r - 1).to_double());
    for (const auto& u : family.members()) {
      double expect = scale * rearrange(u).integral();
      double got = weak_lebesgue_norm(u, Exponent(r), NormKind::DoubleStar);
      worst = std::max(worst, std::fabs(got / expect - 1.0));
    }
    rep.check_close("member-maximal-norms", "maximal-weak-norm-is-scaled-l1", "closed-form", 0.0,
                    worst, tol);
  }

  // exact halving bound on the tail sums
  auto a = family.tail_sums();
  bool halving = true;
  for (std::size_t j = 1; j <= family.size(); ++j) {
    if (a[j - 1] > Rational(2) * family.support_measures()[j - 1]) halving = false;
  }
  rep.check_true("halving-bound", "tail-sum-halving", "exact", halving);

  auto [weak, maximal] = sum_norm_bounds(family, r);
  double weak_bound = real_pow(2.0, (Rational(1) / r).to_double());
  rep.check_true("sum-weak-norm-bound", "sum-weak-norm-bound", "bound",
                 weak <= weak_bound * (1.0 + tol), Json{{"norm", weak}, {"bound", weak_bound}});
  if (r > Rational(1)) {
    rep.check_true("sum-maximal-norm-bound", "sum-maximal-norm-bound", "bound",
                   maximal <= 4.0 * (1.0 + tol), Json{{"norm", maximal}, {"bound", 4.0}});
  } else {
    double expect = real_pow(total.to_double(), (Rational(1) / r - 1).to_double()) *
                    rearrange(family.sum()).integral();
    rep.check_close("sum-maximal-norm-identity", "maximal-weak-norm-is-scaled-l1", "closed-form",
                    expect, maximal, tol);
  }

  // the constant the superadditivity inequality would need, family by family
  Json series = Json::array();
  std::vector<double> constants;
  for (int mm = 1; mm <= m; ++mm) {
    auto fam = DisjointFamily::build(r, mm, ratio, total);
    constants.push_back(required_constant(fam, r, gamma, kind));
    series.push_back(constants.back());
  }
  if (kind == NormKind::Star) {
    // strict growth needs gamma <= r; the divergence floor below holds always
    if (gamma <= r.to_double()) {
      bool increasing = true;
      for (std::size_t i = 1; i < constants.size(); ++i) {
        if (constants[i] <= constants[i - 1]) increasing = false;
      }
      rep.check_true("constant-series-increasing", "required-constant-divergence", "closed-form",
                     increasing, series);
    }
    bool floored = true;
    for (int mm = 1; mm <= m; ++mm) {
      double floor =
          static_cast<double>(mm) * real_pow(2.0, -gamma * (Rational(1) / r).to_double());
      if (constants[mm - 1] < floor * (1.0 - tol)) floored = false;
    }
    rep.check_true("constant-lower-bound", "required-constant-divergence", "bound", floored,
                   series);
  } else if (r <= Rational(1)) {
    double lo = *std::min_element(constants.begin(), constants.end());
    double hi = *std::max_element(constants.begin(), constants.end());
    rep.check_true("constant-series-flat", "superadditive-below-one", "closed-form",
                   hi <= lo * 1.01, series);
  } else {
    double floor = static_cast<double>(m) * real_pow(4.0, -gamma);
    rep.check_true("constant-series-grows", "required-constant-divergence", "bound",
                   constants.back() >= floor * (1.0 - tol), series);
  }
  return emit.finish(rep);
}

// --- cover ------------------------------------------------------------------

int cmd_cover(const std::string& p_str, const std::string& mode, double rho, double eps,
              std::uint64_t seed, Emitter& emit) {
  Exponent p = parse_exponent(p_str);
  Report rep;
  rep.command = "cover";
  rep.params = {{"p", p.to_string()}, {"mode", mode}, {"rho", rho}, {"eps", eps}, {"seed", seed}};
  const double target = real_pow(2.0, -p.inverse_as_double());

  if (mode == "upper") {
    auto net = build_constant_net(sigma_lp(p), rho);
    rep.params["net_m"] = net.m;
    rep.params["net_size"] = net.size();
    bool spacing = true;
    for (std::size_t i = 1; i < net.levels.size(); ++i) {
      if (!(net.levels[i] - net.levels[i - 1] < net.rho - net.sigma / 2.0)) spacing = false;
    }
    rep.check_true("net-spacing", "net-level-spacing", "closed-form", spacing,
                   Json{{"centers", net.size()}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_real_distribution<double> shrink(0.0, 1.0);
    std::size_t covered = 0;
    const int samples = 10'000;
    for (int i = 0; i < samples; ++i) {
      FiniteSeq y;
      y.entries.resize(len(rng));
      for (auto& v : y.entries) v = coord(rng);
      double n = seq_lp_norm(y, p);
      if (n > 0.0) {
        double s = shrink(rng) / n;
        for (auto& v : y.entries) v *= s;
      }
      if (locate(y, p, net).distance < rho) ++covered;
    }
    rep.check_true("sample-covered", "unit-ball-covered", "sampled",
                   covered == static_cast<std::size_t>(samples),
                   Json{{"covered", covered}, {"samples", samples}});
  } else if (mode == "lower") {
    std::vector<FiniteSeq> centers = {FiniteSeq{}};
    auto witness = refute_radius(p, centers, rho);
    Json detail{{"i", witness.i},
                {"j", witness.j},
                {"entries", witness.w.entries},
                {"distances", witness.distances},
                {"ell", witness.ell}};
    bool far = std::all_of(witness.distances.begin(), witness.distances.end(),
                           [&](double d) { return d >= rho; });
    rep.check_true("witness-uncovered", "difference-family-witness", "enumerated", far, detail);
  } else if (mode == "bracket") {
    auto bracket = alpha_bracket(p, eps, seed);
    rep.params["net_size"] = bracket.net_size;
    rep.params["samples"] = bracket.samples;
    rep.check_true("bracket-contains-target", "alpha-two-sided", "closed-form",
                   bracket.lower < target && target <= bracket.upper,
                   Json{{"lower", bracket.lower}, {"upper", bracket.upper}, {"target", target}});
    rep.check_true("bracket-width", "alpha-two-sided", "bound",
                   bracket.upper - bracket.lower <= 2.0 * eps + 1e-12,
                   Json{{"width", bracket.upper - bracket.lower}});
  } else {
    throw CLI::ValidationError("mode must be upper, lower or bracket");
  }
  return emit.finish(rep);
}

// --- coloring ---------------------------------------------------------------

int cmd_coloring(int m, int side, const std::string& mode, int cap, const std::string& grid_out,
                 const std::string& grid_in, Emitter& emit) {
  Report rep;
  rep.command = "coloring";
  rep.params = {{"mode", mode}, {"cap", cap}};
  if (m > 0) rep.params["m"] = m;
  if (side > 0) rep.params["side"] = side;

  auto load = [&]() -> TriangleColoring {
    if (!grid_in.empty()) {
      std::ifstream in(grid_in);
      if (!in) throw CLI::ValidationError("cannot read grid from " + grid_in);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return TriangleColoring::from_text(text);
    }
    if (m < 1) throw CLI::ValidationError("this mode needs --m or --in");
    return color_recursive(m);
  };

  auto write_grid = [&](const TriangleColoring& c) {
    if (grid_out.empty()) return true;
    if (grid_out == "-") {
      std::cout << c.to_text();
      return true;
    }
    std::ofstream out(grid_out);
    if (!out) return false;
    out << c.to_text();
    return bool(out);
  };

  if (mode == "construct") {
    auto c = load();
    rep.params["ell"] = c.ell();
    rep.check_true("colors-used", "recursive-color-count", "exact", m < 1 || c.num_colors() == m,
                   Json{{"colors", c.num_colors()}});
    rep.check_true("verify-accepts", "row-column-disjoint", "enumerated",
                   !verify_coloring(c).has_value());
    rep.check_true("grid-written", "grid-serialization", "exact", write_grid(c));
  } else if (mode == "verify") {
    auto c = load();
    rep.params["ell"] = c.ell();
    auto violation = verify_coloring(c);
    Json detail = true;
    if (violation) {
      detail = Json{{"t", violation->t},
                    {"i", violation->i},
                    {"j", violation->j},
                    {"color", violation->color}};
    }
    rep.check_true("verify-accepts", "row-column-disjoint", "enumerated", !violation.has_value(),
                   detail);
  } else if (mode == "exhaustive") {
    if (side < 1) throw CLI::ValidationError("exhaustive mode needs --side");
    std::uint32_t ell = static_cast<std::uint32_t>(side) + 1;
    rep.params["ell"] = ell;
    auto best = min_colors_exhaustive(ell, cap);
    rep.check_true("min-colors-within-cap", "exhaustive-minimum", "enumerated", best.has_value(),
                   Json{{"cap", cap}});
    if (best) {
      int bound = std::bit_width(ell - 1u);
      rep.check_true("min-colors-at-least-bound", "row-set-counting-bound", "enumerated",
                     best->num_colors() >= bound,
                     Json{{"min_colors", best->num_colors()}, {"bound", bound}});
      if ((ell & (ell - 1)) == 0) {
        rep.check_close("min-colors-matches-log", "exhaustive-minimum", "enumerated", bound,
                        best->num_colors(), 0.0);
      }
      rep.check_true("grid-written", "grid-serialization", "exact", write_grid(*best));
    }
  } else if (mode == "certify") {
    auto c = load();
    rep.params["ell"] = c.ell();
    auto cert = certify_lower_bound(c);
    rep.check_true("rows-nonempty", "row-sets-nonempty", "enumerated", cert.all_nonempty);
    rep.check_true("rows-distinct", "row-sets-distinct", "enumerated", cert.all_distinct);
    rep.check_close("bound-value", "row-set-counting-bound", "exact",
                    std::bit_width(c.ell() - 1u), cert.bound, 0.0);
    rep.check_true("bound-at-most-colors", "row-set-counting-bound", "exact",
                   cert.bound <= cert.colors_used,
                   Json{{"bound", cert.bound}, {"colors", cert.colors_used}});
  } else {
    throw CLI::ValidationError("mode must be construct, verify, exhaustive or certify");
  }
  return emit.finish(rep);
}

// --- figure2 ----------------------------------------------------------------

int cmd_figure2(const std::string& r_str, int m, const std::string& ratio_str,
                const std::string& out_csv, Emitter& emit) {
  Rational r = Rational::parse(r_str);
  Rational ratio = Rational::parse(ratio_str);
  Report rep;
  rep.command = "figure2";
  rep.params = {{"r", r.to_string()}, {"m", m}, {"ratio", ratio.to_string()}, {"out", out_csv}};

  auto csv = figure_staircase_csv(r, m, ratio, Rational(1));
  auto rows = static_cast<double>(std::count(csv.begin(), csv.end(), '\n'));
  rep.check_close("csv-rows", "staircase-row-count", "exact", 2.0 * (m + 1), rows, 0.0);

  bool written = false;
  if (out_csv == "-") {
    std::cout << csv;
    written = true;
  } else {
    std::ofstream out(out_csv);
    if (out) {
      out << csv;
      written = bool(out);
    }
  }
  rep.check_true("csv-written", "staircase-serialization", "exact", written,
                 Json{{"path", out_csv}});
  int code = emit.finish(rep);
  return written ? code : 2;
}

// --- norms ------------------------------------------------------------------

int cmd_norms(const std::string& function_json, const std::string& p_str, const std::string& q_str,
              const std::string& kind_str, Emitter& emit) {
  Json j;
  if (!function_json.empty() && function_json[0] == '@') {
    std::ifstream in(function_json.substr(1));
    if (!in) throw CLI::ValidationError("cannot read " + function_json.substr(1));
    in >> j;
  } else {
    j = Json::parse(function_json);
  }
  StepFunction u = step_function_from_json(j);
  Exponent p = parse_exponent(p_str);
  Exponent q = parse_exponent(q_str);

  Report rep;
  rep.command = "norms";
  rep.params = {{"p", p.to_string()}, {"q", q.to_string()}, {"kind", kind_str}};

  bool want_star = kind_str == "star" || kind_str == "both";
  bool want_maximal = kind_str == "double-star" || kind_str == "both";
  if (!want_star && !want_maximal) {
    throw CLI::ValidationError("kind must be star, double-star or both");
  }
  double star = 0.0, maximal = 0.0;
  if (want_star) {
    star = lorentz_norm(u, {p, q, NormKind::Star});
    rep.check_true("star-norm", "lorentz-norm-value", "closed-form", true, Json(star));
  }
  if (want_maximal) {
    maximal = lorentz_maximal_norm(u, {p, q, NormKind::DoubleStar});
    rep.check_true("maximal-norm", "lorentz-maximal-norm-value", "closed-form", true,
                   Json(maximal));
  }
  if (want_star && want_maximal) {
    bool ok = !(std::isfinite(star) && std::isfinite(maximal)) || maximal >= star * (1.0 - 1e-9);
    rep.check_true("maximal-dominates-star", "maximal-dominates-star", "bound", ok,
                   Json{{"star", star}, {"maximal", maximal}});
  }
  return emit.finish(rep);
}

// --- scaling ----------------------------------------------------------------

int cmd_scaling(int n, int k, const std::string& p_str, const std::string& kappa_str, int count,
                std::uint64_t seed, double norm_bound, double tol, Emitter& emit) {
  Rational p = Rational::parse(p_str);
  Rational kappa = Rational::parse(kappa_str);
  SobolevParams prm{n, k, p, kappa};

  Report rep;
  rep.command = "scaling";
  rep.params = {{"n", n},           {"k", k},       {"p", p.to_string()},
                {"kappa", kappa.to_string()}, {"count", count}, {"seed", seed},
                {"norm_bound", norm_bound},   {"tol", tol}};

  Rational ps = p_star(prm);
  rep.check_true("p-star-relation", "p-star-exponent-identity", "exact",
                 -(Rational(n) / ps) == Rational(k) - Rational(n) / p,
                 Json{{"p_star", ps.to_string()}});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pieces(0, 6);
  std::uniform_int_distribution<int> den_pow(0, 6);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  auto random_step = [&]() {
    int np = pieces(rng);
    std::vector<Piece> out;
    Rational sum(0);
    std::vector<Rational> raw;
    for (int i = 0; i < np; ++i) {
      long long den = 1LL << den_pow(rng);
      raw.push_back(Rational(std::uniform_int_distribution<long long>(1, den)(rng), den));
      sum += raw.back();
    }
    Rational slack(1, 2);
    for (int i = 0; i < np; ++i) out.push_back({val(rng), raw[i] / (sum + slack)});
    return StepFunction::make(std::move(out), Rational(1));
  };

  int breakpoint_mismatches = 0;
  double worst_ratio_dev = 0.0;
  double worst_double_dev = 0.0;
  Rational kn = kappa.pow_int(n);
  for (int trial = 0; trial < count; ++trial) {
    auto u = random_step();
    auto v = dilate(u, prm);
    auto pu = rearrange(u);
    auto pv = rearrange(v);
    if (pu.size() != pv.size()) {
      ++breakpoint_mismatches;
    } else {
      for (std::size_t i = 0; i < pu.size(); ++i) {
        if (pv.breakpoints[i] != pu.breakpoints[i] / kn) ++breakpoint_mismatches;
      }
    }
    struct Case {
      Exponent p, q;
    } cases[] = {{Exponent(ps), Exponent::infinity()},
                 {Exponent(Rational(n) / Rational(k)), Exponent(1)}};
    for (const auto& c : cases) {
      double before = lorentz_norm(u, {c.p, c.q, NormKind::Star});
      if (before == 0.0) continue;
      double after = lorentz_norm(v, {c.p, c.q, NormKind::Star});
      double expect = real_pow(kappa.to_double(), -(Rational(n) / c.p.value()).to_double());
      worst_ratio_dev = std::max(worst_ratio_dev, std::fabs(after / before / expect - 1.0));
    }
    if (Rational(2) * u.support_measure() <= u.total_space() && !u.is_zero()) {
      auto d = double_disjoint(u);
      LorentzExponents e{Exponent(Rational(n) / Rational(k)), Exponent(1), NormKind::Star};
      double ratio = lorentz_norm(d, e) / lorentz_norm(u, e);
      double expect = real_pow(2.0, static_cast<double>(k) / n);
      worst_double_dev = std::max(worst_double_dev, std::fabs(ratio / expect - 1.0));
    }
  }
  rep.check_close("dilation-breakpoints-exact", "dilation-breakpoint-identity", "exact", 0.0,
                  breakpoint_mismatches, 0.0);
  rep.check_close("dilation-norm-ratio", "dilation-norm-scaling", "closed-form", 0.0,
                  worst_ratio_dev, tol);
  rep.check_close("doubling-norm-ratio", "disjoint-doubling-scaling", "closed-form", 0.0,
                  worst_double_dev, tol);

  auto sa = span_and_alpha(n, k, norm_bound);
  rep.check_close("alpha-is-half-span", "span-alpha-formulas", "exact", sa.span / 2.0, sa.alpha,
                  0.0);
  rep.check_true("alpha-below-norm", "non-maximality-gap", "closed-form", sa.alpha < norm_bound,
                 Json{{"alpha", sa.alpha}, {"span", sa.span}, {"norm", norm_bound}});
  return emit.finish(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for weak-Lebesgue norm constructions"};
  app.require_subcommand(1);

  Emitter emit;
  app.add_option("--out", emit.out_path, "write the JSON report to a file instead of stdout");

  auto* superadd = app.add_subcommand("superadd", "disjoint families and superadditivity constants");
  std::string sa_r = "2", sa_ratio = "1/2", sa_kind = "star";
  int sa_m = 10;
  double sa_gamma = 1.0, sa_tol = 1e-12;
  superadd->add_option("--r", sa_r, "weak-norm exponent (rational)");
  superadd->add_option("--m", sa_m, "family size")->check(CLI::PositiveNumber);
  superadd->add_option("--ratio", sa_ratio, "support ratio, at most 1/2");
  superadd->add_option("--gamma", sa_gamma, "superadditivity power");
  superadd->add_option("--kind", sa_kind, "star | double-star");
  superadd->add_option("--tol", sa_tol, "relative tolerance");

  auto* cover = app.add_subcommand("cover", "covering nets for the sequence embedding");
  std::string cv_p = "2", cv_mode = "bracket";
  double cv_rho = 0.0, cv_eps = 1e-3;
  std::uint64_t cv_seed = 0;
  cover->add_option("--p", cv_p, "sequence exponent (rational or inf)");
  cover->add_option("--mode", cv_mode, "upper | lower | bracket");
  cover->add_option("--rho", cv_rho, "radius for upper/lower modes");
  cover->add_option("--eps", cv_eps, "bracket half-width");
  cover->add_option("--seed", cv_seed, "sample seed");

  auto* coloring = app.add_subcommand("coloring", "triangle coloring construction and certificates");
  int col_m = 0, col_side = 0, col_cap = 8;
  std::string col_mode = "construct", col_grid_out, col_grid_in;
  coloring->add_option("--m", col_m, "power: constructs on 2^m points");
  coloring->add_option("--side", col_side, "triangle side for exhaustive mode");
  coloring->add_option("--mode", col_mode, "construct | verify | exhaustive | certify");
  coloring->add_option("--cap", col_cap, "color cap for exhaustive mode");
  coloring->add_option("--grid-out", col_grid_out, "write the grid here ('-' for stdout)");
  coloring->add_option("--in", col_grid_in, "read a grid instead of constructing");

  auto* figure2 = app.add_subcommand("figure2", "staircase plot data for the rearranged sum");
  std::string fg_r = "2", fg_ratio = "1/2", fg_out = "-";
  int fg_m = 4;
  figure2->add_option("--r", fg_r, "weak-norm exponent");
  figure2->add_option("--m", fg_m, "family size")->check(CLI::PositiveNumber);
  figure2->add_option("--ratio", fg_ratio, "support ratio");
  figure2->add_option("--out-csv", fg_out, "CSV path ('-' for stdout)");

  auto* norms = app.add_subcommand("norms", "evaluate Lorentz functionals on a step function");
  std::string nm_fn, nm_p = "2", nm_q = "inf", nm_kind = "both";
  norms->add_option("--function", nm_fn, "step function as inline JSON or @file")->required();
  norms->add_option("--p", nm_p, "first exponent (rational or inf)");
  norms->add_option("--q", nm_q, "second exponent (rational or inf)");
  norms->add_option("--kind", nm_kind, "star | double-star | both");

  auto* scaling = app.add_subcommand("scaling", "dilation and doubling checks");
  int sc_n = 3, sc_k = 1, sc_count = 50;
  std::string sc_p = "2", sc_kappa = "3/2";
  std::uint64_t sc_seed = 0;
  double sc_norm = 1.0, sc_tol = 1e-12;
  scaling->add_option("--n", sc_n, "dimension");
  scaling->add_option("--k", sc_k, "order");
  scaling->add_option("--p", sc_p, "integrability exponent (rational)");
  scaling->add_option("--kappa", sc_kappa, "dilation factor, at least 1 (rational)");
  scaling->add_option("--count", sc_count, "random functions per check");
  scaling->add_option("--seed", sc_seed, "sample seed");
  scaling->add_option("--norm-bound", sc_norm, "declared operator norm");
  scaling->add_option("--tol", sc_tol, "relative tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (superadd->parsed()) {
      return cmd_superadd(sa_r, sa_m, sa_ratio, sa_gamma, sa_kind, sa_tol, emit);
    }
    if (cover->parsed()) return cmd_cover(cv_p, cv_mode, cv_rho, cv_eps, cv_seed, emit);
    if (coloring->parsed()) {
      return cmd_coloring(col_m, col_side, col_mode, col_cap, col_grid_out, col_grid_in, emit);
    }
    if (figure2->parsed()) return cmd_figure2(fg_r, fg_m, fg_ratio, fg_out, emit);
    if (norms->parsed()) return cmd_norms(nm_fn, nm_p, nm_q, nm_kind, emit);
    if (scaling->parsed()) {
      return cmd_scaling(sc_n, sc_k, sc_p, sc_kappa, sc_count, sc_seed, sc_norm, sc_tol, emit);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
