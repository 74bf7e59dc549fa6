#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include "cayley/constructions.hpp"
#include "test_util.hpp"

using namespace cay;

namespace {

const Field Q = Field::rationals();

MapCandidate pgl2_map(Field f) {
  const RatFunc t = RatFunc::variable(f, 1, 0), one = RatFunc::constant(f, 1, 1);
  return MapCandidate("pgl2", pgl2_pair(), {(t - one) / (t + one)});
}

MapCandidate sl2_map(Field f) {
  const RatFunc t = RatFunc::variable(f, 1, 0), one = RatFunc::constant(f, 1, 1);
  return MapCandidate("sl2", sl2_pair(), {(one - t) / (one + t)});
}

const IsogenySpec kSquare(std::vector<std::vector<long long>>{{2}});

int brute(const MapCandidate& c, uint64_t p) { return brute_force_degree(c.over(Field::prime(p)), p).degree; }

}  // namespace

TEST_CASE("candidate validation") {
  const RatFunc t = RatFunc::variable(Q, 3, 0);
  CHECK_THROWS_KIND(MapCandidate("short", sl_pair(3), {t, t}), BadParameter);
  CHECK(g2_candidate(Q).max_degree() >= 1);
}

TEST_CASE("target containment") {
  CHECK(target_contained(g2_candidate(Q)));
  const RatFunc one = RatFunc::constant(Q, 3, 1);
  CHECK(!target_contained(MapCandidate("const", sl_pair(3), {one, one, one})));
  CHECK(target_contained(sln_full_candidate(3, 13, 1)));
}

TEST_CASE("equivariance") {
  const MapCandidate psi = sln_psi(4);
  const std::vector<SignedPermutation> s12{SignedPermutation::transposition(4, 0, 1)};
  CHECK(check_equivariance(psi, s12).all_pass());

  const MapCandidate g2 = g2_candidate(Q);
  const std::vector<SignedPermutation> iota{SignedPermutation::global_inversion(3)};
  CHECK(check_equivariance(g2, iota).all_pass());
  const auto all = g2.pair.closure().elements;
  CHECK(check_equivariance(g2, all).all_pass());

  // Formulas of the first two components swapped, indices kept.
  auto broken = g2.components;
  std::swap(broken[0], broken[1]);
  const MapCandidate bad("broken", g2_pair(), broken);
  const auto report = check_equivariance(bad, g2.pair.generators());
  CHECK(!report.all_pass());
  bool witnessed = false;
  for (const auto& e : report.entries)
    if (!e.check.pass && e.check.witness) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("generator equivariance implies group equivariance") {
  for (const MapCandidate& c : {sln_full_candidate(3, 13, 1), sln_full_candidate(4, 241, 1), g2_candidate(Q)}) {
    CHECK(check_equivariance(c, c.pair.generators()).all_pass());
    const auto elements = c.pair.closure().elements;
    CHECK(elements.size() <= 24);
    CHECK(check_equivariance(c, elements).all_pass());
  }
}

TEST_CASE("dominance") {
  CHECK(check_dominance(sln_full_candidate(4, 241, 1), 241, 10));
  CHECK(check_dominance(g2_candidate(Field::prime(1009)), 1009, 10));
  const RatFunc one = RatFunc::constant(Q, 3, 1);
  CHECK(!check_dominance(MapCandidate("const", sl_pair(3), {one, one, one}), 1009, 10));
  CHECK_THROWS_KIND(check_dominance(sln_full_candidate(3, 13, 1), 1009, 10), FieldMismatch);
  CHECK_THROWS_KIND(check_dominance(g2_candidate(Q), 3, 10), BadParameter);
}

TEST_CASE("projection degree") {
  // Over F_11 some sampled lines are tangent; only the mode is stable.
  for (std::size_t k = 1; k < 5; ++k) {
    const auto d = projection_degree(sln_projection_spec(5, 11, k));
    CHECK(d.degree == 3);
    CHECK(d.method == DegreeMethod::StructuralProjection);
  }
  const auto g2 = projection_degree(g2_projection_spec(Field::prime(1009)));
  CHECK(g2.degree == 2);
  CHECK(g2.unanimous);
  CHECK(projection_degree(sln_projection_spec(3, 13, 1)).degree == 1);
  // Sign-flipped parametrization: the cubic regression.
  CHECK(projection_degree(g2_cubic_projection_spec(Field::prime(1009))).degree == 3);
}

TEST_CASE("projection degree is sample-stable") {
  // Tangent lines defined over F_p occur at rate O(deg / p); near 10^4
  // every sample of every built-in spec agrees.
  for (std::size_t n = 3; n <= 8; ++n) {
    const uint64_t p = find_prime_with_root(n, 10000);
    for (std::size_t k = 1; k < n; ++k) {
      const auto d = projection_degree(sln_projection_spec(n, p, k));
      CHECK(d.unanimous);
      CHECK(d.degree == static_cast<int>(n) - 2);
    }
  }
  CHECK(projection_degree(g2_projection_spec(Field::prime(10007))).unanimous);
  CHECK(projection_degree(g2_projection_spec(Field::prime(1009))).unanimous);
}

TEST_CASE("projection spec validation") {
  const Field f = Field::prime(1009);
  ProjectionSpec spec = g2_projection_spec(f);
  ProjectionOptions few;
  few.samples = 5;
  CHECK_THROWS_KIND(projection_degree(spec, few), BadParameter);

  ProjectionSpec off = sln_projection_spec(4, 241, 1);
  off.center[0] = off.center[0] + Field::prime(241).one();
  CHECK_THROWS_KIND(projection_degree(off), NotOnHypersurface);

  ProjectionSpec flat = spec;
  flat.hypersurface = MultiPoly::variable(f, 3, 0);
  CHECK_THROWS_KIND(projection_degree(flat), DegenerateSpec);

  ProjectionSpec tangent = spec;
  tangent.hyperplane = {f.one(), -f.one(), f.zero()};
  CHECK_THROWS_KIND(projection_degree(tangent), DegenerateSpec);

  ProjectionSpec rational = g2_projection_spec(Q);
  CHECK_THROWS_KIND(projection_degree(rational), BadParameter);
}

TEST_CASE("brute force degree") {
  CHECK(brute(pgl2_map(Q), 101) == 1);
  CHECK(brute(compose_with_isogeny(pgl2_map(Q), kSquare), 101) == 2);
  const auto sl3 = brute_force_degree(sln_full_candidate(3, 211, 1), 211);
  CHECK(sl3.degree == 1);
  CHECK(sl3.method == DegreeMethod::BruteForceHistogram);
  CHECK(sl3.samples == 210 * 210);
  CHECK_THROWS_KIND(brute_force_degree(pgl2_map(Field::prime(97)), 97), BadParameter);
  CHECK_THROWS_KIND(brute_force_degree(g2_candidate(Field::prime(10007)), 10007), CapExceeded);
}

TEST_CASE("serial and parallel kernels agree") {
  const MapCandidate g2 = g2_candidate(Field::prime(211));
  BruteForceOptions serial;
  serial.kernel = FiberKernel::Serial;
  const auto a = brute_force_degree(g2, 211, serial);
  const auto b = brute_force_degree(g2, 211);
  CHECK(a.histogram == b.histogram);
  CHECK(a.defined_points == b.defined_points);
  CHECK(a.degree == b.degree);

  const MapCandidate sl3 = sln_full_candidate(3, 211, 2);
  CHECK(brute_force_degree(sl3, 211, serial).histogram == brute_force_degree(sl3, 211).histogram);
}

TEST_CASE("parallel kernel is deterministic across thread counts") {
  const MapCandidate g2 = g2_candidate(Field::prime(211));
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = brute_force_degree(g2, 211);
  omp_set_num_threads(4);
  const auto four = brute_force_degree(g2, 211);
  omp_set_num_threads(saved);
  CHECK(one.histogram == four.histogram);
  CHECK(one.nonempty_fibers == four.nonempty_fibers);
}

TEST_CASE("brute force is invariant under Weyl precomposition") {
  const MapCandidate g2 = g2_candidate(Field::prime(211));
  const auto base = brute_force_degree(g2, 211);
  for (const auto& g : g2.pair.closure().elements) {
    BruteForceOptions opts;
    opts.precompose = g;
    const auto moved = brute_force_degree(g2, 211, opts);
    CHECK(moved.histogram == base.histogram);
    CHECK(moved.defined_points == base.defined_points);
  }
}

TEST_CASE("isogenies") {
  const IsogenySpec id(std::vector<std::vector<long long>>{{1}});
  const MapCandidate p = pgl2_map(Q);
  const MapCandidate same = compose_with_isogeny(p, id);
  CHECK(ratfunc_equal(same.components[0], p.components[0]));

  const IsogenySpec e2(std::vector<std::vector<long long>>{{2, 1}, {0, 3}});
  CHECK(e2.kernel_order() == 6);
  CHECK(kSquare.direct_sum(e2).kernel_order() == 12);
  CHECK_THROWS_KIND(IsogenySpec(std::vector<std::vector<long long>>{{1, 2}, {2, 4}}), BadParameter);

  CHECK_THROWS_KIND(compose_with_isogeny(p, e2), RankMismatch);
  const IsogenySpec skew(std::vector<std::vector<long long>>{{2, 0}, {0, 1}});
  CHECK(!isogeny_intertwines(sl_pair(3), skew));
  CHECK_THROWS_KIND(compose_with_isogeny(sln_full_candidate(3, 211, 1), skew), BadParameter);

  const IsogenySpec twice(std::vector<std::vector<long long>>{{2, 0}, {0, 2}});
  CHECK(isogeny_intertwines(sl_pair(3), twice));
  CHECK(isogeny_intertwines(g2_pair(), twice));
  CHECK(brute_force_degree(compose_with_isogeny(sln_full_candidate(3, 211, 1), twice), 211).degree == 4);
  CHECK(brute(compose_with_isogeny(g2_candidate(Q), twice), 211) == 4 * 2);
}

TEST_CASE("product maps") {
  const MapCandidate sq = compose_with_isogeny(sl2_map(Q), kSquare);
  CHECK(brute(product_map(pgl2_map(Q), sl2_map(Q)), 101) == 1);
  CHECK(brute(product_map(sq, sl2_map(Q)), 101) == 2);
  CHECK(brute(product_map(sq, sq), 101) == 4);
  const MapCandidate prod = product_map(pgl2_map(Q), g2_candidate(Q));
  CHECK(prod.pair.ambient_dim() == 4);
  CHECK(target_contained(prod));
}

TEST_CASE("sampled identity checks") {
  const MapCandidate g2 = g2_candidate(Q);
  VerifyOptions sampled;
  sampled.force_sampled = true;
  const IdentityCheck c = check_target_containment(g2, sampled);
  CHECK(c.pass);
  CHECK(c.mode == "sampled");
  CHECK(c.failure_probability > 0.0);
  CHECK(c.failure_probability < 1e-4);

  const IdentityCheck exact = check_target_containment(g2);
  CHECK(exact.mode == "symbolic");
  CHECK(exact.failure_probability == 0.0);

  // A tiny term budget forces the fallback on its own.
  // Distinct denominators make the exact check expand products.
  const RatFunc y1 = RatFunc::variable(Q, 3, 0), y2 = RatFunc::variable(Q, 3, 1), one = RatFunc::constant(Q, 3, 1);
  const RatFunc f1 = one / (y1 + one), f2 = one / (y2 + one);
  const MapCandidate split("split", sl_pair(3), {f1, f2, -f1 - f2});
  const MapCandidate sl4 = sln_full_candidate(4, 241, 1);
  {
    ScopedTermLimit guard(3);
    const IdentityCheck fallback = check_target_containment(split);
    CHECK(fallback.pass);
    CHECK(fallback.mode == "sampled");
    CHECK(check_equivariance(sl4, sl4.pair.generators()).all_pass());
  }

  const RatFunc x = RatFunc::variable(Q, 2, 0), y = RatFunc::variable(Q, 2, 1);
  const IdentityCheck wrong = check_identity(x * y, y * x + RatFunc::constant(Q, 2, 1), sampled);
  CHECK(!wrong.pass);
  CHECK(wrong.witness.has_value());
}
