#include <doctest.h>

#include <sstream>

#include "noncompact/report.hpp"

using namespace noncompact;

TEST_SUITE("report") {

TEST_CASE("step function json round trip") {
  auto u = StepFunction::make({{3.0, Rational(1, 2)}, {-1.5, Rational(1, 4)}}, Rational(3, 2));
  auto j = step_function_to_json(u);
  auto back = step_function_from_json(j);
  CHECK(back == u);

  auto parsed = step_function_from_json(Json::parse(
      R"({"total_space":"1","pieces":[{"value":3.0,"measure":"1/2"},{"value":1.0,"measure":"1/4"}]})"));
  CHECK(parsed.covered_measure() == Rational(3, 4));

  CHECK_THROWS_AS(step_function_from_json(Json::parse(R"({"pieces":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(
      step_function_from_json(Json::parse(R"({"total_space":"1","pieces":[{"value":1,"measure":"0"}]})")),
      std::invalid_argument);
}

TEST_CASE("claims and exit status") {
  Report rep;
  rep.command = "demo";
  rep.check_close("a", "anchor-a", "exact", 1.0, 1.0 + 1e-14, 1e-12);
  CHECK(rep.all_pass());
  rep.check_close("b", "anchor-b", "exact", 1.0, 1.1, 1e-12);
  CHECK_FALSE(rep.all_pass());

  auto j = rep.to_json();
  CHECK(j["schema"] == "v1");
  CHECK(j["claims"].size() == 2);
  CHECK(j["claims"][0]["pass"] == true);
  CHECK(j["claims"][1]["pass"] == false);
}

TEST_CASE("close_rel") {
  CHECK(close_rel(1.0, 1.0 + 5e-13, 1e-12));
  CHECK_FALSE(close_rel(1.0, 1.0 + 5e-12, 1e-12));
  CHECK(close_rel(0.0, 0.0, 1e-12));
  CHECK(close_rel(1e6, 1e6 * (1 + 1e-13), 1e-12));
}

TEST_CASE("staircase csv has 2(m+1) rows") {
  for (int m : {1, 4}) {
    auto csv = figure_staircase_csv(Rational(2), m, Rational(1, 2), Rational(1));
    int rows = 0;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2 * (m + 1));
  }
  auto csv = figure_staircase_csv(Rational(2), 3, Rational(1, 2), Rational(1));
  CHECK(csv.rfind("kind,t,value\n", 0) == 0);
  // first staircase row is the highest level at a_m = 0
  CHECK(csv.find("step,0,") != std::string::npos);
  CHECK_THROWS_AS(figure_staircase_csv(Rational(2), 0, Rational(1, 2), Rational(1)),
                  std::invalid_argument);
}

}  // TEST_SUITE
