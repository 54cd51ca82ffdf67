#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "noncompact/rational.hpp"
#include "noncompact/step_function.hpp"

namespace noncompact {

using Json = nlohmann::ordered_json;

/// One checked statement in a report. `anchor` is the stable label of the
/// mathematical claim being checked and `kind` records how the expected side
/// is established: "exact" (rational identity), "closed-form", "bound",
/// "enumerated" or "sampled".
struct Claim {
  std::string id;
  std::string anchor;
  std::string kind;
  Json expected;
  Json computed;
  double tol = 0.0;
  bool pass = false;
};

struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<Claim> claims;
  std::int64_t elapsed_ms = 0;

  bool all_pass() const;
  Json to_json() const;  // schema v1

  Claim& check_close(std::string id, std::string anchor, std::string kind, double expected,
                     double computed, double rel_tol);
  Claim& check_true(std::string id, std::string anchor, std::string kind, bool condition,
                    Json detail = Json());
};

/// Relative closeness at tolerance tol, with absolute fallback near zero.
bool close_rel(double expected, double computed, double tol);

Json step_function_to_json(const StepFunction& u);
/// Accepts {"total_space": "1", "pieces": [{"value": 3.0, "measure": "1/2"}, ...]};
/// measures and total_space are rational strings (or integers).
StepFunction step_function_from_json(const Json& j);

/// Staircase plus comb-envelope plot data for the rearranged sum of the
/// geometric family: header row, then one "step" row per breakpoint
/// (left endpoints and the right end of the last step) and one "comb" row per
/// envelope point (a_{j-1}, s_j^{-1/r}).
std::string figure_staircase_csv(const Rational& r, int m, const Rational& ratio,
                                 const Rational& total_space);

}  // namespace noncompact
