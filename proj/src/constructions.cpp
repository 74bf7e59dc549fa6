#include "cayley/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cay {

namespace {

MultiPoly var(Field f, std::size_t nvars, std::size_t i) { return MultiPoly::variable(f, nvars, i); }
MultiPoly cst(Field f, std::size_t nvars, long long c) { return MultiPoly::constant(f, nvars, c); }

/// (1 + t)^k - t^k with binomial coefficients computed in the field.
UniPoly binomial_difference(Field f, std::size_t k) {
  std::vector<FieldElement> c(k + 1, f.zero());
  c[0] = f.one();
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i; j > 0; --j) c[j] += c[j - 1];
  }
  c[k] -= f.one();
  return UniPoly(f, std::move(c));
}

}  // namespace

// ------------------------------------------------------------------ SL_n

MapCandidate sln_psi(std::size_t n) {
  const Field q = Field::rationals();
  std::vector<RatFunc> comps;
  for (std::size_t i = 0; i < n; ++i) comps.emplace_back(cst(q, n, 1), var(q, n, i) - cst(q, n, 1));
  return MapCandidate("psi_sl" + std::to_string(n), sl_pair(n), std::move(comps));
}

std::vector<RatFunc> sln_phi(std::size_t n, Field field) {
  std::vector<RatFunc> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(var(field, n, i) + cst(field, n, 1), var(field, n, i));
  return out;
}

MultiPoly sln_hypersurface(std::size_t n, Field field) {
  if (n < 2) throw Error(ErrorKind::BadParameter, "sl(n) needs n >= 2");
  MultiPoly shifted = cst(field, n, 1), plain = cst(field, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    shifted *= var(field, n, i) + cst(field, n, 1);
    plain *= var(field, n, i);
  }
  return shifted - plain;
}

bool sln_irreducibility_certificate(std::size_t n) {
  const Field q = Field::rationals();
  const MultiPoly f = sln_hypersurface(n, q);
  if (f.constant_term().is_zero()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly r = f;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) r = r.specialize(j, q.one());
    }
    if (r.degree_in(i) != 1) return false;
  }
  return true;
}

SlnCenter sln_center(std::size_t n, uint64_t p, std::size_t zeta_index) {
  if (n == 2) throw Error(ErrorKind::HyperplaneCase, "for n = 2 the hypersurface is a hyperplane");
  if (n < 2) throw Error(ErrorKind::BadParameter, "sl(n) needs n >= 3");
  if (zeta_index % n == 0) throw Error(ErrorKind::BadRoot, "zeta = 1 gives no center");
  if (zeta_index >= n) throw Error(ErrorKind::BadParameter, "zeta index must lie in 1..n-1");
  const Field f = Field::prime(p);
  const FieldElement omega = nth_root_of_unity(p, n);

  SlnCenter c;
  c.zeta = omega.pow(zeta_index);
  c.a = inverse(c.zeta - f.one());
  c.point.assign(n, c.a);
  c.on_hypersurface = evaluate(sln_hypersurface(n, f), c.point).is_zero();
  c.off_cartan = !(f.from_int(static_cast<long long>(n)) * c.a).is_zero();
  c.smooth = gcd(binomial_difference(f, n), binomial_difference(f, n - 1)).degree() == 0;
  if (!c.on_hypersurface) throw Error(ErrorKind::NotOnHypersurface, "(a, ..., a) is not on the hypersurface");
  return c;
}

MapCandidate sln_full_candidate(std::size_t n, uint64_t p, std::size_t zeta_index) {
  const SlnCenter center = sln_center(n, p, zeta_index);
  const Field f = Field::prime(p);
  std::vector<MultiPoly> shifted;
  for (std::size_t j = 0; j < n; ++j) shifted.push_back(var(f, n, j) - cst(f, n, 1));
  MultiPoly d = cst(f, n, 1);
  for (const auto& s : shifted) d *= s;
  std::vector<MultiPoly> partial;  // D_i = prod_{j != i} (y_j - 1)
  MultiPoly total(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly di = cst(f, n, 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) di *= shifted[j];
    }
    total += di;
    partial.push_back(std::move(di));
  }
  const FieldElement na = f.from_int(static_cast<long long>(n)) * center.a;
  const MultiPoly den = d * na - total;
  std::vector<RatFunc> comps;
  for (std::size_t i = 0; i < n; ++i) {
    comps.emplace_back((partial[i] * f.from_int(static_cast<long long>(n)) - total) * center.a, den);
  }
  return MapCandidate("sl" + std::to_string(n) + "[zeta^" + std::to_string(zeta_index) + "]", sl_pair(n),
                      std::move(comps));
}

MapCandidate sln_full_candidate_by_substitution(std::size_t n, uint64_t p, std::size_t zeta_index) {
  const SlnCenter center = sln_center(n, p, zeta_index);
  const Field f = Field::prime(p);
  // pi(b)_i = a + lambda (b_i - a), lambda = n a / (n a - sum b)
  const RatFunc a(MultiPoly::constant(f, n, center.a));
  const RatFunc na(MultiPoly::constant(f, n, f.from_int(static_cast<long long>(n)) * center.a));
  RatFunc sum(MultiPoly(f, n));
  for (std::size_t i = 0; i < n; ++i) sum += RatFunc::variable(f, n, i);
  const RatFunc lambda = na / (na - sum);
  std::vector<RatFunc> pi;
  for (std::size_t i = 0; i < n; ++i) pi.push_back(a + lambda * (RatFunc::variable(f, n, i) - a));
  const MapCandidate psi = sln_psi(n).over(f);
  return MapCandidate("sl" + std::to_string(n) + "-substituted", sl_pair(n), substitute(pi, psi.components));
}

ProjectionSpec sln_projection_spec(std::size_t n, uint64_t p, std::size_t zeta_index) {
  const SlnCenter center = sln_center(n, p, zeta_index);
  const Field f = Field::prime(p);
  return ProjectionSpec{sln_hypersurface(n, f), center.point, false, std::vector<FieldElement>(n, f.one())};
}

// ------------------------------------------------------------------- G_2

std::vector<RatFunc> g2_psi(Field field) {
  std::vector<RatFunc> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.emplace_back(-(var(field, 3, i) + cst(field, 3, 1)), var(field, 3, i) - cst(field, 3, 1));
  }
  return out;
}

std::vector<RatFunc> g2_phi(Field field) {
  std::vector<RatFunc> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.emplace_back(var(field, 3, i) - cst(field, 3, 1), var(field, 3, i) + cst(field, 3, 1));
  }
  return out;
}

MapCandidate g2_candidate(Field field) {
  if (field.characteristic() == 3) throw Error(ErrorKind::BadCharacteristic, "the mean needs 1/3");
  const FieldElement third = inverse(field.from_int(3));
  const MultiPoly sum = var(field, 3, 0) + var(field, 3, 1) + var(field, 3, 2);
  std::vector<MultiPoly> alpha;
  for (std::size_t i = 0; i < 3; ++i) alpha.push_back(var(field, 3, i) - sum * third);
  const std::vector<RatFunc> psi = g2_psi(field);
  std::vector<RatFunc> comps;
  for (const auto& a : alpha) comps.push_back(substitute(a, psi));
  return MapCandidate("g2", g2_pair(), std::move(comps));
}

namespace {

QuadricPullback pullback_of_torus_relation(Field field, const std::vector<RatFunc>& param, MultiPoly expected) {
  const MultiPoly rel = var(field, 3, 0) * var(field, 3, 1) * var(field, 3, 2) - cst(field, 3, 1);
  QuadricPullback out{expected, substitute(rel, param).num(), false};
  out.matches = out.numerator == expected * field.from_int(-2);
  return out;
}

}  // namespace

QuadricPullback g2_quadric_pullback(Field field) {
  const MultiPoly x1 = var(field, 3, 0), x2 = var(field, 3, 1), x3 = var(field, 3, 2);
  return pullback_of_torus_relation(field, g2_phi(field), x1 * x2 + x2 * x3 + x1 * x3 + cst(field, 3, 1));
}

QuadricPullback g2_cubic_variant_pullback(Field field) {
  std::vector<RatFunc> param;
  for (std::size_t i = 0; i < 3; ++i) {
    param.emplace_back(cst(field, 3, 1) - var(field, 3, i), var(field, 3, i) + cst(field, 3, 1));
  }
  const MultiPoly x1 = var(field, 3, 0), x2 = var(field, 3, 1), x3 = var(field, 3, 2);
  return pullback_of_torus_relation(field, param, x1 * x2 * x3 + x1 + x2 + x3);
}

ProjectionSpec g2_projection_spec(Field field) {
  return ProjectionSpec{g2_quadric_pullback(field).quadric, std::vector<FieldElement>(3, field.one()), true,
                        std::vector<FieldElement>(3, field.one())};
}

ProjectionSpec g2_cubic_projection_spec(Field field) {
  return ProjectionSpec{g2_cubic_variant_pullback(field).quadric, std::vector<FieldElement>(3, field.one()), true,
                        std::vector<FieldElement>(3, field.one())};
}

// ------------------------------------------------------------ elimination

namespace {

constexpr std::size_t kS1 = 0, kS2 = 1, kT1 = 2, kT2 = 3, kElimVars = 4;

RatFunc rv(std::size_t i) { return RatFunc::variable(Field::rationals(), kElimVars, i); }
RatFunc rc(long long c) { return RatFunc::constant(Field::rationals(), kElimVars, c); }

/// Multiplies through by t1 t2, which clears every denominator in the system.
MultiPoly clear_denominators(const RatFunc& e) {
  const MultiPoly t1t2 = MultiPoly::variable(e.field(), kElimVars, kT1) * MultiPoly::variable(e.field(), kElimVars, kT2);
  return exact_divide(e.num() * t1t2, e.den());
}

MultiPoly t1_power_free(MultiPoly f) {
  const MultiPoly t1 = MultiPoly::variable(f.field(), kElimVars, kT1);
  while (!f.is_zero() && std::all_of(f.terms().begin(), f.terms().end(), [](const Term& t) { return t.mono.exp[kT1] > 0; })) {
    f = exact_divide(f, t1);
  }
  return f;
}

std::vector<MultiPoly> reference_sextic() {
  const Field q = Field::rationals();
  const MultiPoly s1 = var(q, kElimVars, kS1), s2 = var(q, kElimVars, kS2);
  const MultiPoly one = cst(q, kElimVars, 1);
  const FieldElement two = q.from_int(2);
  return {
      one,
      s1 + s2 + one,
      s1 * s2 + s1 * two + s2 * two + one,
      s1 * s1 + s2 * s2 - cst(q, kElimVars, 5),
      s1 * s2 - s1 * two - s2 * two - one,
      -(s1 + s2),
      one,
  };
}

}  // namespace

SexticElimination g2_sextic_elimination() {
  SexticElimination out{MultiPoly(Field::rationals(), kElimVars), MultiPoly(Field::rationals(), kElimVars),
                        MultiPoly(Field::rationals(), kElimVars), {}, reference_sextic(), {}};
  const RatFunc t1 = rv(kT1), t2 = rv(kT2);
  const RatFunc one = rc(1);
  // -t2 + 1/t2 = s1 - t1 + 1/t1 and t1 t2 - 1/(t1 t2) = s2 - t1 + 1/t1
  out.first_equation = clear_denominators(-t2 + one / t2 - (rv(kS1) - t1 + one / t1));
  out.second_equation = clear_denominators(t1 * t2 - one / (t1 * t2) - (rv(kS2) - t1 + one / t1));
  out.resultant = resultant(out.first_equation, out.second_equation, kT2);

  MultiPoly normalized = t1_power_free(out.resultant);
  std::vector<MultiPoly> coeffs = normalized.coefficients_in(kT1);
  const MultiPoly lead = coeffs.back();
  if (!lead.is_constant()) {
    // content in s1, s2
    for (auto& c : coeffs) c = exact_divide(c, lead);
  } else {
    const FieldElement inv = inverse(lead.constant_term());
    for (auto& c : coeffs) c *= inv;
  }
  out.coefficients = std::move(coeffs);
  for (std::size_t k = 0; k < std::max(out.coefficients.size(), out.reference.size()); ++k) {
    if (k >= out.coefficients.size() || k >= out.reference.size() || !(out.coefficients[k] == out.reference[k])) {
      out.mismatched.push_back(k);
    }
  }
  return out;
}

void require_reference_match(const SexticElimination& e) {
  if (e.matches_reference()) return;
  static const std::vector<std::string> names{"s1", "s2", "t1", "t2"};
  std::ostringstream msg;
  msg << "normalized resultant differs from the reference sextic at";
  for (std::size_t k : e.mismatched) {
    msg << " t1^" << k << " (computed " << (k < e.coefficients.size() ? e.coefficients[k].to_string(names) : "-")
        << ", reference " << (k < e.reference.size() ? e.reference[k].to_string(names) : "-") << ")";
  }
  throw Error(ErrorKind::EliminationMismatch, msg.str());
}

MultiPoly assemble_sextic(const std::vector<MultiPoly>& coefficients) {
  const Field q = coefficients.front().field();
  MultiPoly out(q, kElimVars);
  const MultiPoly t1 = var(q, kElimVars, kT1);
  for (std::size_t k = 0; k < coefficients.size(); ++k) out += coefficients[k] * t1.pow(static_cast<unsigned>(k));
  return out;
}

bool verify_recovery_formula() {
  const RatFunc t1 = rv(kT1), t2 = rv(kT2), one = rc(1);
  const RatFunc t3 = one / (t1 * t2);
  const RatFunc z1 = t1 - one / t1, z2 = t2 - one / t2, z3 = t3 - one / t3;
  const std::vector<RatFunc> assignment{z1 - z2, z1 - z3, t1, t2};
  const RatFunc s1 = rv(kS1), s2 = rv(kS2);
  const RatFunc formula = (t1 * t1 - one) / (t1 * t1 * s1 + t1 * s2 - t1 * t1 * t1 - t1 * t1 + t1 + one);
  return ratfunc_equal(substitute(formula, assignment), t2);
}

std::size_t sextic_consistency(const std::vector<MultiPoly>& coefficients, uint64_t p, std::size_t samples,
                               uint64_t seed) {
  const Field f = Field::prime(p);
  const MultiPoly sextic = assemble_sextic(coefficients).map_to(f);
  RandomStream rng(seed);
  std::size_t vanishing = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const FieldElement t1 = random_nonzero(f, rng), t2 = random_nonzero(f, rng);
    const FieldElement t3 = inverse(t1 * t2);
    auto z = [](const FieldElement& t) { return t - inverse(t); };
    const std::vector<FieldElement> point{z(t1) - z(t2), z(t1) - z(t3), t1, t2};
    if (evaluate(sextic, point).is_zero()) ++vanishing;
  }
  return vanishing;
}

// ------------------------------------------------- classical Cayley map

SquareMatrix::SquareMatrix(Field field, std::size_t n) : field_(field), n_(n), entries_(n * n, field.zero()) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "matrix dimension must be positive");
}

SquareMatrix SquareMatrix::identity(Field field, std::size_t n) {
  SquareMatrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
  SquareMatrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += o.entries_[k];
  return out;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& o) const {
  SquareMatrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= o.entries_[k];
  return out;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
  if (o.n_ != n_) throw Error(ErrorKind::BadParameter, "dimension mismatch");
  SquareMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool SquareMatrix::is_skew_symmetric() const { return transpose() == SquareMatrix(field_, n_) - *this; }

FieldElement SquareMatrix::determinant() const {
  std::vector<FieldElement> a = entries_;
  FieldElement prev = field_.one();
  bool negate = false;
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t r = k;
    while (r < n_ && a[r * n_ + k].is_zero()) ++r;
    if (r == n_) return field_.zero();
    if (r != k) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a[r * n_ + j], a[k * n_ + j]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        a[i * n_ + j] = (a[i * n_ + j] * a[k * n_ + k] - a[i * n_ + k] * a[k * n_ + j]) / prev;
      }
      a[i * n_ + k] = field_.zero();
    }
    prev = a[k * n_ + k];
  }
  return negate ? -prev : prev;
}

SquareMatrix SquareMatrix::inverse() const {
  // Fraction-free Gauss-Jordan on [A | I]: ends with [d I | adj'] where
  // adj' / d is the inverse.
  const std::size_t w = 2 * n_;
  std::vector<FieldElement> a(n_ * w, field_.zero());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) a[i * w + j] = at(i, j);
    a[i * w + n_ + i] = field_.one();
  }
  FieldElement prev = field_.one();
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t r = k;
    while (r < n_ && a[r * w + k].is_zero()) ++r;
    if (r == n_) throw Error(ErrorKind::SingularDenominator, "matrix is singular");
    if (r != k) {
      for (std::size_t j = 0; j < w; ++j) std::swap(a[r * w + j], a[k * w + j]);
    }
    const FieldElement pivot = a[k * w + k];
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k) continue;
      const FieldElement factor = a[i * w + k];
      for (std::size_t j = 0; j < w; ++j) a[i * w + j] = (a[i * w + j] * pivot - factor * a[k * w + j]) / prev;
    }
    prev = pivot;
  }
  const FieldElement d_inv = cay::inverse(prev);
  SquareMatrix out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.at(i, j) = a[i * w + n_ + j] * d_inv;
  return out;
}

std::string SquareMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < n_; ++j) out += (j ? " " : "") + at(i, j).to_string();
  }
  return out + "]";
}

SquareMatrix classical_cayley(const SquareMatrix& x) {
  const SquareMatrix id = SquareMatrix::identity(x.field(), x.dim());
  const SquareMatrix plus = id + x;
  if (plus.determinant().is_zero()) throw Error(ErrorKind::SingularDenominator, "det(I + X) = 0");
  return (id - x) * plus.inverse();
}

SquareMatrix random_skew_symmetric(Field field, std::size_t n, RandomStream& rng) {
  SquareMatrix m(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m.at(i, j) = random_element(field, rng);
      m.at(j, i) = -m.at(i, j);
    }
  return m;
}

ClassicalSuiteResult classical_suite(std::size_t n, std::size_t trials, uint64_t seed) {
  const Field q = Field::rationals();
  const SquareMatrix id = SquareMatrix::identity(q, n);
  RandomStream rng(seed);
  ClassicalSuiteResult r;
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const SquareMatrix x = random_skew_symmetric(q, n, rng);
    const SquareMatrix s = random_skew_symmetric(q, n, rng);
    SquareMatrix o(q, n);
    try {
      o = classical_cayley(x);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularDenominator) throw;
      ++r.singular;
      continue;
    }
    if (o.transpose() * o == id) ++r.orthogonal;
    if (classical_cayley(o) == x) ++r.involution;
    const SquareMatrix g = classical_cayley(s);
    const SquareMatrix g_inv = g.inverse();
    if (classical_cayley(g * x * g_inv) == g * o * g_inv) ++r.equivariant;
  }
  return r;
}

// ---------------------------------------------------------- known table

std::string to_string(ValueKind kind) { return kind == ValueKind::Exact ? "exact" : "upper-bound"; }

namespace {

constexpr const char* kClassification = "classification of simple Cayley groups";
constexpr const char* kSlnBound = "SL_n bound via projection of the hypersurface from a point";
constexpr const char* kG2 = "G_2 degree-two construction with lower bound from the classification";
constexpr const char* kSpin = "Spin_n via the two-sheeted isogeny to SO_n";
constexpr const char* kQuotient = "SL_n/mu_d via the isogeny to PGL_n";
constexpr const char* kSl4 = "SL_4: SL_n bound combined with the classification";
constexpr const char* kStable = "G_2 x G_m^2 is Cayley (stably Cayley G_2)";

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<KnownResult> lookup_known(const std::string& label) {
  const std::string_view l = label;
  if (l == "G_2") return KnownResult{label, ValueKind::Exact, 2, kG2};
  if (l == "G_2xG_m^2") return KnownResult{label, ValueKind::Exact, 1, kStable};
  if (l.starts_with("SL_")) {
    const auto slash = l.find("/mu_");
    if (slash != std::string_view::npos) {
      auto n = parse_int(l.substr(3, slash - 3));
      auto d = parse_int(l.substr(slash + 4));
      if (!n || !d || *d < 1 || *n < 2 || *n % *d != 0) return std::nullopt;
      if (*n == 2 * *d) return KnownResult{label, ValueKind::Exact, *d >= 3 ? 2 : 1, kQuotient};
      return KnownResult{label, ValueKind::UpperBound, *n / *d, kQuotient};
    }
    auto n = parse_int(l.substr(3));
    if (!n || *n < 2) return std::nullopt;
    if (*n <= 3) return KnownResult{label, ValueKind::Exact, 1, kClassification};
    if (*n == 4) return KnownResult{label, ValueKind::Exact, 2, kSl4};
    return KnownResult{label, ValueKind::UpperBound, *n - 2, kSlnBound};
  }
  if (l.starts_with("Spin_")) {
    auto n = parse_int(l.substr(5));
    if (!n || *n < 2) return std::nullopt;
    return KnownResult{label, ValueKind::Exact, *n >= 6 ? 2 : 1, kSpin};
  }
  if (l.starts_with("SO_")) {
    auto n = parse_int(l.substr(3));
    if (!n || *n < 1) return std::nullopt;
    return KnownResult{label, ValueKind::Exact, 1, kClassification};
  }
  if (l.starts_with("Sp_")) {
    auto n = parse_int(l.substr(3));
    if (!n || *n < 2 || *n % 2 != 0) return std::nullopt;
    return KnownResult{label, ValueKind::Exact, 1, kClassification};
  }
  if (l.starts_with("PGL_")) {
    auto n = parse_int(l.substr(4));
    if (!n || *n < 1) return std::nullopt;
    return KnownResult{label, ValueKind::Exact, 1, kClassification};
  }
  return std::nullopt;
}

std::vector<KnownResult> known_table() {
  std::vector<std::string> labels;
  for (int n = 2; n <= 10; ++n) labels.push_back("SL_" + std::to_string(n));
  for (int n = 3; n <= 10; ++n) labels.push_back("Spin_" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) labels.push_back("SO_" + std::to_string(n));
  for (int n = 2; n <= 8; n += 2) labels.push_back("Sp_" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) labels.push_back("PGL_" + std::to_string(n));
  for (const char* l : {"SL_4/mu_2", "SL_6/mu_2", "SL_6/mu_3", "SL_8/mu_2", "SL_8/mu_4", "SL_9/mu_3", "SL_10/mu_5"}) {
    labels.emplace_back(l);
  }
  labels.emplace_back("G_2");
  labels.emplace_back("G_2xG_m^2");
  std::vector<KnownResult> out;
  for (const auto& l : labels) out.push_back(*lookup_known(l));
  return out;
}

}  // namespace cay
