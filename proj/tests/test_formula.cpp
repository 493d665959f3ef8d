#include <doctest.h>

#include "cadorder/errors.hpp"
#include "cadorder/formula.hpp"
#include "test_util.hpp"

using namespace cadorder;
using testutil::poly;
using testutil::problem;

TEST_CASE("system type counts equations per QFF") {
  auto p22 = problem(
      "vars: x, y, z\n"
      "qff: x^2 + y = 0, y*z - 1 = 0\n"
      "qff: x - z = 0, x*y*z = 0\n");
  CHECK(system_type(p22) == "22");
  auto p10 = problem(
      "vars: x, y, z\n"
      "qff: x^2 + y = 0, y*z - 1 < 0\n"
      "qff: x - z > 0, x*y*z < 0\n");
  CHECK(system_type(p10) == "10");
  CHECK(system_type(problem("vars: x\nqff: x > 0\n")) == "0");
  auto p01 = problem("vars: x, y\nqff: x < 0\nqff: y = 0\n");
  CHECK(system_type(p01) == "01");
  CHECK(sorted_system_type(p01) == "10");
}

TEST_CASE("QFF equational accessors") {
  auto p = problem("vars: x, y\nqff: x < 0, x - y = 0, y = 0, x + y = 0\n");
  const auto& q = p.qffs[0];
  CHECK(q.ec_count() == 3);
  REQUIRE(q.first_ec() != nullptr);
  CHECK(q.first_ec()->poly == poly("x - y", "x, y"));
  REQUIRE(q.second_ec() != nullptr);
  CHECK(q.second_ec()->poly == poly("y", "x, y"));
}

TEST_CASE("defining polynomials form a normalized set") {
  CHECK(defining_polynomials(problem("vars: x\nqff: x = 0, x < 1\n")) ==
        make_set({poly("x", "x"), poly("x - 1", "x")}));
  auto dup = problem("vars: x, y\nqff: x*y = 0\nqff: x*y < 0\n");
  CHECK(defining_polynomials(dup).size() == 1);
  auto signs = problem("vars: x\nqff: -x + 1 < 0\nqff: x - 1 = 0\n");
  CHECK(defining_polynomials(signs) == PolynomialSet{poly("x - 1", "x")});
}

TEST_CASE("constraint normalization flips the relation") {
  auto c = Constraint::normalized(poly("-x + 1", "x"), Relation::kLt);
  CHECK(c.poly == poly("x - 1", "x"));
  CHECK(c.relation == Relation::kGt);
  CHECK(negated_side(Relation::kLe) == Relation::kGe);
  CHECK(negated_side(Relation::kEq) == Relation::kEq);
  CHECK(negated_side(Relation::kNe) == Relation::kNe);
}

TEST_CASE("validate reports broken invariants") {
  auto ok = problem("vars: x, y\nqff: x + y = 0\n");
  CHECK(validate(ok).empty());

  Problem undeclared = ok;
  undeclared.qffs[0].constraints[0].poly = Polynomial::variable(2);
  auto v1 = validate(undeclared);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].message.find("undeclared variable") == 0);

  Problem empty = ok;
  empty.qffs.push_back(Qff{});
  auto v2 = validate(empty);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].message.find("empty QFF") == 0);
}

TEST_CASE("variable orderings") {
  std::vector<std::string> names{"x", "y", "z"};
  auto o = VariableOrdering::parse("z>y>x", names);
  CHECK(o.order() == std::vector<VarIndex>{2, 1, 0});
  CHECK(o.to_string(names) == "z>y>x");
  CHECK(o.is_permutation_of(3));
  CHECK_FALSE(VariableOrdering({0, 0, 1}).is_permutation_of(3));
  CHECK(VariableOrdering::identity(3) < o);
  CHECK_THROWS_AS(VariableOrdering::parse("z>y>w", names), InputError);
  CHECK_THROWS_AS(VariableOrdering::parse("z>y>y", names), InputError);
}
