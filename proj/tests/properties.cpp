#include "properties.hpp"

#include <numeric>

#include "cayley/weyltorus.hpp"

namespace cay::props {

namespace {

PropertyResult fail(std::string detail) { return {false, std::move(detail)}; }

RatFunc random_ratfunc(Field field, std::size_t nvars, unsigned deg, RandomStream& rng) {
  MultiPoly den(field, nvars);
  while (den.is_zero()) den = random_poly(field, nvars, 1, 2, rng);
  return RatFunc(random_poly(field, nvars, deg, 3, rng), den);
}

uint64_t factorial(uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

MultiPoly random_poly(Field field, std::size_t nvars, unsigned max_degree, std::size_t terms, RandomStream& rng) {
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m;
    unsigned budget = static_cast<unsigned>(rng.below(max_degree + 1));
    for (unsigned e = 0; e < budget; ++e) m.exp[rng.below(nvars)] += 1;
    ts.push_back({m, random_element(field, rng, 5)});
  }
  return MultiPoly::from_terms(field, nvars, std::move(ts));
}

PropertyResult field_axioms(Field field, std::size_t triples, uint64_t seed) {
  RandomStream rng(seed);
  const FieldElement zero = field.zero(), one = field.one();
  for (std::size_t i = 0; i < triples; ++i) {
    const FieldElement a = random_element(field, rng), b = random_element(field, rng), c = random_element(field, rng);
    if (!((a + b) + c == a + (b + c))) return fail("additive associativity");
    if (!((a * b) * c == a * (b * c))) return fail("multiplicative associativity");
    if (!(a + b == b + a) || !(a * b == b * a)) return fail("commutativity");
    if (!(a * (b + c) == a * b + a * c)) return fail("distributivity");
    if (!(a + zero == a) || !(a * one == a)) return fail("identities");
    if (!(a + (-a)).is_zero()) return fail("additive inverse");
    if (!a.is_zero() && !(a * inverse(a)).is_one()) return fail("multiplicative inverse of " + a.to_string());
  }
  return {true, std::to_string(triples) + " triples over " + field.name()};
}

PropertyResult roots_are_primitive() {
  const std::vector<std::pair<uint64_t, uint64_t>> cases{{13, 3},  {13, 4},  {13, 12},  {241, 4}, {241, 8},
                                                         {211, 5}, {1009, 7}, {31, 6},  {233, 8}, {229, 4}};
  for (const auto& [p, n] : cases) {
    const FieldElement z = nth_root_of_unity(p, n);
    if (!z.pow(n).is_one()) return fail("zeta^n != 1 for p=" + std::to_string(p));
    for (uint64_t d = 1; d < n; ++d) {
      if (n % d == 0 && z.pow(d).is_one()) return fail("not primitive for p=" + std::to_string(p));
    }
  }
  return {true, std::to_string(cases.size()) + " (p, n) pairs"};
}

PropertyResult rationals_stay_reduced(std::size_t samples, uint64_t seed) {
  RandomStream rng(seed);
  const Field q = Field::rationals();
  auto reduced = [](const Rational& r) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return g == 1 && r.get_den() > 0;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const FieldElement a = random_element(q, rng, 64), b = random_nonzero(q, rng, 64);
    for (const FieldElement& r : {a + b, a - b, a * b, a / b}) {
      if (!reduced(r.rational())) return fail("unreduced result " + r.to_string());
    }
  }
  return {true, std::to_string(samples) + " operand pairs, four operations each"};
}

PropertyResult substitution_homomorphism(std::size_t pairs, uint64_t seed) {
  RandomStream rng(seed);
  const Field q = Field::rationals();
  const std::size_t m = 3;
  for (std::size_t i = 0; i < pairs; ++i) {
    const MultiPoly a = random_poly(q, m, 3, 4, rng), b = random_poly(q, m, 3, 4, rng);
    std::vector<RatFunc> sigma;
    for (std::size_t v = 0; v < m; ++v) sigma.push_back(random_ratfunc(q, m, 2, rng));
    if (!ratfunc_equal(substitute(a * b, sigma), substitute(a, sigma) * substitute(b, sigma))) {
      return fail("product not preserved at pair " + std::to_string(i));
    }
    if (!ratfunc_equal(substitute(a + b, sigma), substitute(a, sigma) + substitute(b, sigma))) {
      return fail("sum not preserved at pair " + std::to_string(i));
    }
  }
  return {true, std::to_string(pairs) + " random pairs"};
}

PropertyResult ratfunc_equivalence(std::size_t triples, uint64_t seed) {
  RandomStream rng(seed);
  const Field q = Field::rationals();
  const std::size_t m = 2;
  for (std::size_t i = 0; i < triples; ++i) {
    const RatFunc f = random_ratfunc(q, m, 3, rng);
    MultiPoly c1(q, m), c2(q, m);
    while (c1.is_zero()) c1 = random_poly(q, m, 2, 3, rng);
    while (c2.is_zero()) c2 = random_poly(q, m, 2, 3, rng);
    const RatFunc g(f.num() * c1, f.den() * c1), h(f.num() * c2, f.den() * c2);
    if (!ratfunc_equal(f, f)) return fail("not reflexive");
    if (!ratfunc_equal(g, h) || !ratfunc_equal(h, g)) return fail("not symmetric");
    if (!ratfunc_equal(f, g) || !ratfunc_equal(f, h)) return fail("not transitive");
    const RatFunc shifted = f + RatFunc::constant(q, m, 1);
    if (ratfunc_equal(f, shifted) || ratfunc_equal(shifted, f)) return fail("f equal to f + 1");
  }
  return {true, std::to_string(triples) + " triples"};
}

PropertyResult evaluate_commutes_with_substitute(std::size_t samples, uint64_t seed) {
  RandomStream rng(seed);
  const Field f = Field::prime(1009);
  const std::size_t m = 3;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const RatFunc g = random_ratfunc(f, m, 3, rng);
    std::vector<RatFunc> sigma;
    for (std::size_t v = 0; v < m; ++v) sigma.push_back(random_ratfunc(f, m, 2, rng));
    std::vector<FieldElement> pt;
    for (std::size_t v = 0; v < m; ++v) pt.push_back(random_element(f, rng));
    const RatFunc composed = substitute(g, sigma);
    try {
      std::vector<FieldElement> image;
      for (const auto& s : sigma) image.push_back(evaluate(s, pt));
      const FieldElement lhs = evaluate(composed, pt);
      const FieldElement rhs = evaluate(g, image);
      if (!(lhs == rhs)) return fail("mismatch at sample " + std::to_string(i));
      ++checked;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAtPoint) throw;
    }
  }
  if (checked < samples / 2) return fail("too many poles");
  return {true, std::to_string(checked) + " points off the poles"};
}

PropertyResult resultant_common_roots(std::size_t specializations, uint64_t seed) {
  RandomStream rng(seed);
  const Field f = Field::prime(1009);
  const std::size_t x = 0, y = 1, m = 2;
  std::size_t common = 0;
  for (std::size_t i = 0; i < specializations; ++i) {
    // Monic in y, so specializing x never drops a degree.
    auto monic = [&](unsigned d) {
      MultiPoly p = MultiPoly::variable(f, m, y).pow(d);
      for (unsigned k = 0; k < d; ++k) p += random_poly(f, m, 2, 2, rng).specialize(y, f.one()) * MultiPoly::variable(f, m, y).pow(k);
      return p;
    };
    MultiPoly p = monic(1 + static_cast<unsigned>(rng.below(2)));
    MultiPoly q = monic(1 + static_cast<unsigned>(rng.below(2)));
    if (i % 2 == 0) {
      const MultiPoly shared = MultiPoly::variable(f, m, y) - random_poly(f, m, 1, 2, rng).specialize(y, f.one());
      p *= shared;
      q *= shared;
    }
    const MultiPoly r = resultant(p, q, y);
    const FieldElement x0 = random_element(f, rng);
    const std::vector<FieldElement> at{x0, f.zero()};
    const bool res_zero = evaluate(r, at).is_zero();
    const UniPoly ps = UniPoly::from_multipoly(p.specialize(x, x0), y);
    const UniPoly qs = UniPoly::from_multipoly(q.specialize(x, x0), y);
    const bool shares_root = gcd(ps, qs).degree() > 0;
    if (res_zero != shares_root) return fail("resultant and gcd disagree at specialization " + std::to_string(i));
    if (shares_root) ++common;
  }
  return {true, std::to_string(specializations) + " specializations, " + std::to_string(common) + " with a common root"};
}

PropertyResult squarefree_of_square(std::size_t samples, uint64_t seed) {
  RandomStream rng(seed);
  const Field f = Field::prime(1009);
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<FieldElement> c;
    const std::size_t deg = 1 + rng.below(6);
    for (std::size_t k = 0; k < deg; ++k) c.push_back(random_element(f, rng));
    c.push_back(random_nonzero(f, rng));
    const UniPoly g(f, c);
    if (squarefree_degree(g * g) != squarefree_degree(g)) return fail("sample " + std::to_string(i));
  }
  return {true, std::to_string(samples) + " random polynomials"};
}

PropertyResult weyl_closure_orders() {
  std::string detail;
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::size_t order = sl_pair(n).closure().size();
    if (order != factorial(n)) return fail("sl(" + std::to_string(n) + ") closure has " + std::to_string(order));
    detail += "sl(" + std::to_string(n) + "):" + std::to_string(order) + " ";
  }
  const std::size_t g2 = g2_pair().closure().size();
  if (g2 != 12) return fail("g2 closure has " + std::to_string(g2));
  return {true, detail + "g2:12"};
}

PropertyResult dependency_preservation() {
  const Field q = Field::rationals();
  std::vector<TorusLiePair> pairs{sl_pair(2), sl_pair(3), sl_pair(4), sl_pair(5), g2_pair(), sl2_pair(), pgl2_pair(),
                                  builtin_pair("product(sl(3),g2)"), builtin_pair("product(sl2,pgl2)")};
  std::size_t checks = 0;
  for (const auto& pair : pairs) {
    for (const auto& g : pair.generators()) {
      for (const auto& rel : pair.relations(Side::Torus, q)) {
        if (!reduce_to_free(substitute(rel, torus_substitution(g, q)), pair, Side::Torus).is_zero()) {
          return fail(pair.name() + " torus relation moved by " + g.to_string());
        }
        ++checks;
      }
      for (const auto& rel : pair.relations(Side::Lie, q)) {
        if (!reduce_to_free(substitute(rel, lie_substitution(g, q)), pair, Side::Lie).is_zero()) {
          return fail(pair.name() + " Lie relation moved by " + g.to_string());
        }
        ++checks;
      }
    }
  }
  return {true, std::to_string(checks) + " generator/relation checks on " + std::to_string(pairs.size()) + " pairs"};
}

PropertyResult torus_action_inverse() {
  const Field q = Field::rationals();
  RandomStream rng(7);
  std::size_t checks = 0;
  for (const auto& pair : {sl_pair(3), sl_pair(4), g2_pair()}) {
    const std::size_t m = pair.ambient_dim();
    std::vector<RatFunc> phi;
    for (std::size_t i = 0; i < m; ++i) phi.push_back(random_ratfunc(q, m, 2, rng));
    for (const auto& g : pair.closure().elements) {
      const auto back = act_on_torus(g.inverse(), act_on_torus(g, phi));
      for (std::size_t i = 0; i < m; ++i) {
        if (!ratfunc_equal(back[i], phi[i])) return fail(pair.name() + " element " + g.to_string());
      }
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " closure elements"};
}

PropertyResult lie_zero_sum_preserved() {
  const Field q = Field::rationals();
  RandomStream rng(11);
  std::size_t checks = 0;
  for (const auto& pair : {sl_pair(3), sl_pair(4), sl_pair(5), g2_pair()}) {
    const std::size_t m = pair.ambient_dim();
    std::vector<RatFunc> v;
    FieldElement total = q.zero();
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const FieldElement c = random_element(q, rng);
      total += c;
      v.emplace_back(MultiPoly::constant(q, m, c));
    }
    v.emplace_back(MultiPoly::constant(q, m, -total));
    for (const auto& g : pair.closure().elements) {
      RatFunc sum(MultiPoly(q, m));
      for (const auto& c : act_on_lie(g, v)) sum += c;
      if (!sum.is_zero()) return fail(pair.name() + " element " + g.to_string());
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " closure elements"};
}

std::vector<NamedProperty> all_properties(uint64_t seed) {
  return {
      {"field axioms over Q", [=] { return field_axioms(Field::rationals(), 10'000, seed); }},
      {"field axioms over F_13", [=] { return field_axioms(Field::prime(13), 10'000, seed); }},
      {"field axioms over F_1009", [=] { return field_axioms(Field::prime(1009), 10'000, seed); }},
      {"field axioms over F_2147483647", [=] { return field_axioms(Field::prime(2147483647), 10'000, seed); }},
      {"primitive roots of unity", [] { return roots_are_primitive(); }},
      {"rationals stay reduced", [=] { return rationals_stay_reduced(10'000, seed); }},
      {"substitution homomorphism", [=] { return substitution_homomorphism(100, seed); }},
      {"ratfunc equivalence relation", [=] { return ratfunc_equivalence(100, seed); }},
      {"evaluate commutes with substitute", [=] { return evaluate_commutes_with_substitute(200, seed); }},
      {"resultant common roots", [=] { return resultant_common_roots(50, seed); }},
      {"squarefree degree of a square", [=] { return squarefree_of_square(100, seed); }},
      {"Weyl closure orders", [] { return weyl_closure_orders(); }},
      {"dependency preservation", [] { return dependency_preservation(); }},
      {"torus action inverse", [] { return torus_action_inverse(); }},
      {"Lie zero sum preserved", [] { return lie_zero_sum_preserved(); }},
  };
}

}  // namespace cay::props
