#include <doctest.h>

#include "cadorder/errors.hpp"
#include "cadorder/harness.hpp"
#include "test_util.hpp"

using namespace cadorder;

namespace {

CostTable table(const std::string& text) { return costs_from_csv(parse_csv(text)); }

ChoiceRow choice(std::string id, std::string h, std::string o, std::string t = "0") {
  ChoiceRow r;
  r.problem_id = std::move(id);
  r.heuristic = std::move(h);
  r.ordering = std::move(o);
  r.heuristic_time_s = std::move(t);
  return r;
}

}  // namespace

TEST_CASE("forced fifty percent saving") {
  auto costs = table("problem_id,ordering,cells,time_s\np,x>y,100,1\np,y>x,300,3\n");
  auto r = compute_savings(costs, {choice("p", "brown", "x>y")});
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].cell_saving_pct == 50);
  CHECK(r.rows[0].time_saving_pct == 50);
}

TEST_CASE("average ordering saves nothing") {
  auto costs = table("problem_id,ordering,cells,time_s\np,x>y,100,2\np,y>x,100,2\n");
  auto r = compute_savings(costs, {choice("p", "sotd", "y>x")});
  CHECK(r.rows[0].cell_saving_pct == 0);
  CHECK(r.rows[0].time_saving_pct == 0);
}

TEST_CASE("two-problem fixture aggregated by type") {
  auto costs = table(
      "problem_id,ordering,cells,time_s\n"
      "10-000,x>y,100,1\n10-000,y>x,300,3\n"
      "10-001,x>y,200,2\n10-001,y>x,600,2\n");
  auto r = compute_savings(costs, {choice("10-000", "brown", "x>y"),
                                   choice("10-001", "brown", "y>x", "0.5")});
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[1].cell_saving_pct == -50);
  CHECK(r.rows[1].time_saving_pct == -25);
  REQUIRE(r.aggregate.size() == 2);
  CHECK(r.aggregate[0].group == "10");
  CHECK(r.aggregate[0].problems == 2);
  CHECK(r.aggregate[0].mean_cell_saving_pct == 0);
  CHECK(r.aggregate[0].mean_time_saving_pct == Rational(25, 2));
  CHECK(r.aggregate[1].group == "all");
  auto csv = aggregate_to_csv(r);
  CHECK(csv.rows[0] == std::vector<std::string>{"10", "brown", "0.0", "12.5"});
}

TEST_CASE("missing cost rows are named") {
  auto costs = table("problem_id,ordering,cells,time_s\np,x>y,100,1\np,y>x,300,3\n");
  try {
    compute_savings(costs, {choice("q", "brown", "x>y")});
    FAIL("expected an InputError");
  } catch (const InputError& e) {
    std::string what = e.what();
    CHECK(what.find("'q'") != std::string::npos);
    CHECK(what.find("'x>y'") != std::string::npos);
  }
}

TEST_CASE("partial problems are excluded") {
  auto costs = table(
      "problem_id,ordering,cells,time_s\n"
      "p,x>y>z,1,1\np,x>z>y,2,1\n");
  CHECK(costs.num_variables("p") == 3);
  CHECK(costs.is_partial("p"));
  auto r = compute_savings(costs, {choice("p", "brown", "x>y>z")});
  CHECK(r.rows.empty());
  CHECK(r.partial == std::vector<std::string>{"p"});
}

TEST_CASE("cost table validation") {
  CHECK_THROWS_AS(table("problem_id,ordering,cells,time_s\np,x>y,0,1\n"), InputError);
  CHECK_THROWS_AS(table("problem_id,ordering,cells,time_s\np,x>y,1,-1\n"), InputError);
  CHECK_THROWS_AS(table("problem_id,ordering,cells,time_s\np,x>y,1,1\np,x>y,2,1\n"), InputError);
  CHECK_THROWS_AS(table("problem_id,ordering,time_s\np,x>y,1\n"), InputError);
}

TEST_CASE("decimal parsing and rounding") {
  CHECK(parse_decimal("-0.25") == Rational(-1, 4));
  CHECK(parse_decimal("3.") == 3);
  CHECK(format_decimal(Rational(1, 20), 1) == "0.1");
  CHECK(format_decimal(Rational(-1, 20), 1) == "-0.1");
  CHECK(format_decimal(Rational(2, 3), 2) == "0.67");
  CHECK(group_of("22-004", {}) == "22");
  CHECK(group_of("abc-1", {}) == "");
  CHECK(group_of("abc-1", {{"abc-1", "11"}}) == "11");
}

TEST_CASE("sweep rows are complete and ordered") {
  std::vector<NamedProblem> corpus{
      {"b", testutil::problem("vars: x, y\nqff: x^2 + y - 1 = 0, x*y < 0\n")},
      {"a", testutil::problem("vars: x, y\nqff: x - y^2 > 0\n")},
  };
  std::vector<HeuristicId> all(kAllHeuristics.begin(), kAllHeuristics.end());
  auto one = run_sweep(corpus, all);
  REQUIRE(one.size() == 24);
  CHECK(one[0].problem_id == "a");
  CHECK(one[0].heuristic == "triangular");
  CHECK(one[11].heuristic == "newh-ext");
  SweepOptions opts;
  opts.jobs = 3;
  auto two = run_sweep(corpus, all, opts);
  REQUIRE(two.size() == one.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].ordering == two[i].ordering);
    CHECK(one[i].status == "ok");
  }
  auto round = choices_from_csv(choices_to_csv(one));
  CHECK(round == one);
}

TEST_CASE("sweep reports the enumeration cap") {
  std::vector<NamedProblem> corpus{
      {"big", testutil::problem("vars: a, b, c, d, e, f, g, h, i\nqff: a + b + c + d + e + f + g + h + i > 0\n")}};
  auto rows = run_sweep(corpus, {HeuristicId::kSotd, HeuristicId::kBrown});
  REQUIRE(rows.size() == 2);
  // Rows follow heuristic declaration order: brown, then sotd.
  CHECK(rows[0].status == "ok");
  CHECK(rows[1].status == "ordering-cap-exceeded");
  CHECK(rows[1].ordering.empty());
}
