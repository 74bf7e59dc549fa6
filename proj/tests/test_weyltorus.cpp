#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/weyltorus.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using namespace cay;

namespace {

const Field Q = Field::rationals();

RatFunc y(std::size_t m, std::size_t i) { return RatFunc::variable(Q, m, i); }
RatFunc c(std::size_t m, long long v) { return RatFunc::constant(Q, m, v); }

GroupClosure close(const std::vector<SignedPermutation>& gens, std::size_t m, std::size_t cap = 100000) {
  return close_group(gens, m, cap);
}

}  // namespace

TEST_CASE("closures") {
  const auto s12 = SignedPermutation::transposition(3, 0, 1), s23 = SignedPermutation::transposition(3, 1, 2);
  CHECK(close({s12, s23}, 3).size() == 6);
  CHECK(close({s12, s23, SignedPermutation::global_inversion(3)}, 3).size() == 12);
  CHECK(close({SignedPermutation::identity(3)}, 3).size() == 1);
  CHECK(close({}, 2).size() == 1);
  CHECK_THROWS_KIND(close({s12, s23}, 3, 5), CapExceeded);
  const auto g = close({s12, s23}, 3);
  CHECK(g.elements.front().is_identity());
}

TEST_CASE("composition and inverse") {
  const SignedPermutation g({1, 2, 0}, {1, -1, 1});
  CHECK(g.then_after(g.inverse()).is_identity());
  CHECK(g.inverse().then_after(g).is_identity());
  CHECK_THROWS_KIND(SignedPermutation({0, 0}, {1, 1}), BadParameter);
  const auto sum = SignedPermutation::transposition(2, 0, 1).direct_sum(SignedPermutation::global_inversion(1));
  CHECK(sum.perm() == std::vector<std::size_t>{1, 0, 2});
  CHECK(sum.signs() == std::vector<int>{1, 1, -1});
}

TEST_CASE("torus action") {
  const std::vector<RatFunc> t{y(1, 0)};
  const auto inv = act_on_torus(SignedPermutation::global_inversion(1), t);
  CHECK(ratfunc_equal(inv[0], c(1, 1) / y(1, 0)));

  const std::vector<RatFunc> phi{y(2, 0) + c(2, 2) * y(2, 1)};
  const auto swapped = act_on_torus(SignedPermutation::transposition(2, 0, 1), phi);
  CHECK(ratfunc_equal(swapped[0], y(2, 1) + c(2, 2) * y(2, 0)));

  // Inversion flips the sign of -(y + 1)/(y - 1).
  const std::vector<RatFunc> psi{-(y(3, 0) + c(3, 1)) / (y(3, 0) - c(3, 1))};
  const auto flipped = act_on_torus(SignedPermutation::global_inversion(3), psi);
  CHECK(ratfunc_equal(flipped[0], -psi[0]));
}

TEST_CASE("Lie action") {
  const std::vector<RatFunc> v{y(3, 0), y(3, 1), y(3, 2)};
  const auto neg = act_on_lie(SignedPermutation::global_inversion(3), v);
  for (std::size_t i = 0; i < 3; ++i) CHECK(ratfunc_equal(neg[i], -v[i]));
  const auto same = act_on_lie(SignedPermutation::identity(3), v);
  for (std::size_t i = 0; i < 3; ++i) CHECK(ratfunc_equal(same[i], v[i]));
  const std::vector<RatFunc> w{y(2, 0), y(2, 1)};
  const auto swapped = act_on_lie(SignedPermutation::transposition(2, 0, 1), w);
  CHECK(ratfunc_equal(swapped[0], w[1]));
  CHECK(ratfunc_equal(swapped[1], w[0]));
}

TEST_CASE("reduction to free coordinates") {
  const TorusLiePair sl3 = sl_pair(3);
  CHECK(reduce_to_free(y(3, 0) * y(3, 1) * y(3, 2) - c(3, 1), sl3, Side::Torus).is_zero());
  CHECK(reduce_to_free(y(3, 0) + y(3, 1) + y(3, 2), sl3, Side::Lie).is_zero());
  CHECK(ratfunc_equal(reduce_to_free(y(3, 2), sl3, Side::Torus), c(3, 1) / (y(3, 0) * y(3, 1))));
  CHECK(ratfunc_equal(reduce_to_free(y(3, 2), sl3, Side::Lie), -y(3, 0) - y(3, 1)));
}

TEST_CASE("built-in pairs") {
  const TorusLiePair sl3 = builtin_pair("sl(3)");
  CHECK(sl3.ambient_dim() == 3);
  CHECK(sl3.rank() == 2);
  CHECK(sl3.closure().size() == 6);
  CHECK(builtin_pair("g2").closure().size() == 12);
  const TorusLiePair prod = builtin_pair("product(sl2,pgl2)");
  CHECK(prod.ambient_dim() == 2);
  CHECK(prod.rank() == 2);
  CHECK(prod.closure().size() == 4);
  CHECK(builtin_pair("product(sl(3),g2)").closure().size() == 72);
  CHECK_THROWS_KIND(builtin_pair("e8"), BadParameter);
  CHECK_THROWS_KIND(builtin_pair("sl(1)"), BadParameter);
}

TEST_CASE("property: Weyl closure orders") {
  const auto r = props::weyl_closure_orders();
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("property: dependency preservation") {
  const auto r = props::dependency_preservation();
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("property: torus action inverse") {
  const auto r = props::torus_action_inverse();
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("property: Lie zero sum preserved") {
  const auto r = props::lie_zero_sum_preserved();
  CHECK_MESSAGE(r.pass, r.detail);
}
