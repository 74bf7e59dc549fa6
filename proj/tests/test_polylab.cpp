#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/polylab.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using namespace cay;

namespace {

const Field Q = Field::rationals();

MultiPoly var(std::size_t m, std::size_t i) { return MultiPoly::variable(Q, m, i); }
MultiPoly cst(std::size_t m, long long c) { return MultiPoly::constant(Q, m, c); }

}  // namespace

TEST_CASE("arithmetic") {
  const MultiPoly x1 = var(3, 0), x2 = var(3, 1), x3 = var(3, 2), one = cst(3, 1);
  const MultiPoly f = (x1 + one) * (x2 + one) * (x3 + one) - x1 * x2 * x3;
  CHECK(f == x1 * x2 + x1 * x3 + x2 * x3 + x1 + x2 + x3 + one);
  CHECK(f.degree() == 2);
  CHECK((f - f).is_zero());
  const MultiPoly x = var(1, 0);
  CHECK((x + cst(1, 1)).pow(2) == x * x + cst(1, 2) * x + cst(1, 1));
  CHECK((x + cst(1, 1)).pow(0) == cst(1, 1));
}

TEST_CASE("canonical printing") {
  const MultiPoly x1 = var(2, 0), x2 = var(2, 1);
  CHECK((x1 * x1 * x2 - cst(2, 3) * x1 + cst(2, 1)).to_string() == "x1^2*x2 - 3*x1 + 1");
  CHECK(MultiPoly(Q, 2).to_string() == "0");
  CHECK((-x2).to_string() == "-x2");
}

TEST_CASE("exact division") {
  const MultiPoly x = var(2, 0), y = var(2, 1);
  CHECK(exact_divide((x + y) * (x - y), x - y) == x + y);
  CHECK_THROWS_KIND(exact_divide(x * x + cst(2, 1), x + y), NotDivisible);
}

TEST_CASE("substitution") {
  // (x + 1) / x with x -> 1 / (y - 1) is y.
  const RatFunc f(var(1, 0) + cst(1, 1), var(1, 0));
  const std::vector<RatFunc> sigma{RatFunc(cst(1, 1), var(1, 0) - cst(1, 1))};
  CHECK(ratfunc_equal(substitute(f, sigma), RatFunc::variable(Q, 1, 0)));
  CHECK(ratfunc_equal(substitute(f, identity_assignment(Q, 1)), f));

  // y1 y2 y3 - 1 under y_i -> (x_i - 1)/(x_i + 1).
  const MultiPoly rel = var(3, 0) * var(3, 1) * var(3, 2) - cst(3, 1);
  std::vector<RatFunc> phi;
  for (std::size_t i = 0; i < 3; ++i) phi.emplace_back(var(3, i) - cst(3, 1), var(3, i) + cst(3, 1));
  const RatFunc pulled = substitute(rel, phi);
  const MultiPoly quadric = var(3, 0) * var(3, 1) + var(3, 1) * var(3, 2) + var(3, 0) * var(3, 2) + cst(3, 1);
  CHECK(pulled.num() == cst(3, -2) * quadric);
  CHECK(pulled.den() == (var(3, 0) + cst(3, 1)) * (var(3, 1) + cst(3, 1)) * (var(3, 2) + cst(3, 1)));

  // 1 / x2 with x2 -> 0 has an identically zero denominator.
  const std::vector<RatFunc> to_zero{RatFunc::variable(Q, 2, 0), RatFunc::constant(Q, 2, 0)};
  CHECK_THROWS_KIND(substitute(RatFunc(cst(2, 1), var(2, 1)), to_zero), ZeroDenominator);
}

TEST_CASE("semantic equality") {
  const MultiPoly x = var(1, 0), one = cst(1, 1);
  CHECK(ratfunc_equal(RatFunc(x * x - one, x - one), RatFunc(x + one)));
  CHECK(!ratfunc_equal(RatFunc(x), RatFunc(x + one)));
  CHECK_THROWS_KIND(RatFunc(x, MultiPoly(Q, 1)), ZeroDenominator);
}

TEST_CASE("partial derivatives") {
  const MultiPoly x1 = var(3, 0), x2 = var(3, 1), x3 = var(3, 2), one = cst(3, 1);
  CHECK(partial_derivative(x1 * x2 + x2 * x3 + x1 * x3 + one, 0) == x2 + x3);
  CHECK(partial_derivative(var(1, 0).pow(3), 0) == cst(1, 3) * var(1, 0).pow(2));
  const MultiPoly f = (x1 + one) * (x2 + one) * (x3 + one) - x1 * x2 * x3;
  CHECK(partial_derivative(f, 0) == (x2 + one) * (x3 + one) - x2 * x3);
  // Characteristic p kills p-th power derivatives.
  const Field f5 = Field::prime(5);
  CHECK(partial_derivative(MultiPoly::variable(f5, 1, 0).pow(5), 0).is_zero());
}

TEST_CASE("evaluation") {
  const Field f13 = Field::prime(13);
  const MultiPoly x1 = MultiPoly::variable(f13, 3, 0), x2 = MultiPoly::variable(f13, 3, 1),
                  x3 = MultiPoly::variable(f13, 3, 2), one = MultiPoly::constant(f13, 3, 1);
  const MultiPoly f = (x1 + one) * (x2 + one) * (x3 + one) - x1 * x2 * x3;
  const std::vector<FieldElement> a(3, f13.from_int(7));
  CHECK(evaluate(f, a).is_zero());
  CHECK(evaluate(one, a).is_one());
  const RatFunc pole(MultiPoly::constant(Q, 1, 1), var(1, 0) - cst(1, 1));
  CHECK_THROWS_KIND(evaluate(pole, std::vector<FieldElement>{Q.one()}), PoleAtPoint);
}

TEST_CASE("specialize and coefficients") {
  const MultiPoly x = var(2, 0), y = var(2, 1);
  const MultiPoly f = x * x * y + cst(2, 3) * y + x;
  const auto cs = f.coefficients_in(1);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == x);
  CHECK(cs[1] == x * x + cst(2, 3));
  CHECK(f.specialize(0, Q.from_int(2)) == cst(2, 7) * y + cst(2, 2));
  CHECK(f.degree_in(0) == 2);
  CHECK(f.extend(3, 1) == var(3, 1) * var(3, 1) * var(3, 2) + cst(3, 3) * var(3, 2) + var(3, 1));
}

TEST_CASE("term guard") {
  ScopedTermLimit guard(50);
  MultiPoly s = cst(6, 1);
  for (std::size_t i = 0; i < 6; ++i) s += var(6, i);
  CHECK_THROWS_KIND(s.pow(4), ExpressionTooLarge);
}

TEST_CASE("property: substitution homomorphism") {
  const auto r = props::substitution_homomorphism(100, 1);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("property: ratfunc equivalence") {
  const auto r = props::ratfunc_equivalence(100, 2);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("property: evaluate commutes with substitute") {
  const auto r = props::evaluate_commutes_with_substitute(200, 3);
  CHECK_MESSAGE(r.pass, r.detail);
}
