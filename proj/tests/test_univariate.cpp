#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/polylab.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using namespace cay;

namespace {

const Field Q = Field::rationals();

UniPoly uni(Field f, std::vector<long long> cs) {
  std::vector<FieldElement> out;
  for (long long c : cs) out.push_back(f.from_int(c));
  return UniPoly(f, out);
}

/// Cofactor expansion along the first row: an independent determinant oracle.
MultiPoly cofactor_det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MultiPoly acc(m[0][0].field(), m[0][0].nvars());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const MultiPoly term = m[0][j] * cofactor_det(minor);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST_CASE("line restriction") {
  const MultiPoly x = MultiPoly::variable(Q, 1, 0);
  const std::vector<FieldElement> base{Q.zero()}, dir{Q.one()};
  CHECK(univariate_restrict(x * x, base, dir) == uni(Q, {0, 0, 1}));

  // The quadric along (1,1,1) has leading coefficient 3.
  const MultiPoly x1 = MultiPoly::variable(Q, 3, 0), x2 = MultiPoly::variable(Q, 3, 1),
                  x3 = MultiPoly::variable(Q, 3, 2);
  const MultiPoly quadric = x1 * x2 + x2 * x3 + x1 * x3 + MultiPoly::constant(Q, 3, 1);
  const std::vector<FieldElement> p{Q.from_int(2), Q.from_int(-5), Q.from_int(3)};
  const std::vector<FieldElement> ones(3, Q.one());
  const UniPoly g = univariate_restrict(quadric, p, ones);
  CHECK(g.degree() == 2);
  CHECK(g.leading() == Q.from_int(3));

  // Base point on the hypersurface gives a root at s = 0.
  const Field f13 = Field::prime(13);
  MultiPoly prod = MultiPoly::constant(f13, 3, 1), mono = MultiPoly::constant(f13, 3, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    prod *= MultiPoly::variable(f13, 3, i) + MultiPoly::constant(f13, 3, 1);
    mono *= MultiPoly::variable(f13, 3, i);
  }
  const std::vector<FieldElement> center(3, f13.from_int(7));
  const std::vector<FieldElement> some_dir{f13.from_int(1), f13.from_int(4), f13.from_int(9)};
  CHECK(univariate_restrict(prod - mono, center, some_dir).coeff(0).is_zero());
}

TEST_CASE("squarefree degree") {
  CHECK(squarefree_degree(uni(Q, {0, 0, -1, 1})) == 2);  // s^2 (s - 1)
  CHECK(squarefree_degree(uni(Q, {0, 0, 0, 1})) == 1);
  CHECK(squarefree_degree(uni(Q, {5})) == 0);
  const Field f5 = Field::prime(5);
  CHECK_THROWS_KIND(squarefree_degree(uni(f5, {0, 0, 0, 0, 0, 1})), CharacteristicTooSmall);
}

TEST_CASE("gcd") {
  const UniPoly a = uni(Q, {-1, 0, 1});  // (s - 1)(s + 1)
  const UniPoly b = uni(Q, {-1, 1});
  CHECK(gcd(a, b) == b);
  CHECK(gcd(a, uni(Q, {2, 1})).degree() == 0);
  CHECK(gcd(UniPoly(Q), UniPoly(Q)).is_zero());
  const auto [q, r] = a.divmod(b);
  CHECK(q == uni(Q, {1, 1}));
  CHECK(r.is_zero());
}

TEST_CASE("resultants") {
  const MultiPoly x = MultiPoly::variable(Q, 2, 0), y = MultiPoly::variable(Q, 2, 1);
  const MultiPoly one = MultiPoly::constant(Q, 2, 1);
  CHECK(resultant(y * y - x, y - one, 1) == one - x);

  const MultiPoly a = MultiPoly::variable(Q, 3, 0), b = MultiPoly::variable(Q, 3, 1),
                  t = MultiPoly::variable(Q, 3, 2);
  const MultiPoly r = resultant(t - a, t - b, 2);
  CHECK((r == b - a || r == a - b));
  CHECK_THROWS_KIND(resultant(x, y - one, 1), DegreeZero);
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
  RandomStream rng(17);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::vector<MultiPoly>> m(n);
      for (auto& row : m)
        for (std::size_t k = 0; k < n; ++k) row.push_back(props::random_poly(Q, 2, 2, 3, rng));
      CHECK(bareiss_determinant(m) == cofactor_det(m));
    }
  }
  // A zero pivot forces a row swap.
  const MultiPoly z = MultiPoly(Q, 1), o = MultiPoly::constant(Q, 1, 1);
  CHECK(bareiss_determinant({{z, o}, {o, z}}) == MultiPoly::constant(Q, 1, -1));
}

TEST_CASE("property: resultant common roots") {
  const auto r = props::resultant_common_roots(50, 4);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("property: squarefree degree of a square") {
  const auto r = props::squarefree_of_square(100, 5);
  CHECK_MESSAGE(r.pass, r.detail);
}
