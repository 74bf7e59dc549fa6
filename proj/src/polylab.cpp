#include "cayley/polylab.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <unordered_map>

namespace cay {

namespace {

std::atomic<std::size_t> g_term_limit{2'000'000};

Monomial add_monomials(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.exp[i]) + b.exp[i];
    if (s > UINT16_MAX) throw Error(ErrorKind::ExpressionTooLarge, "exponent overflow");
    r.exp[i] = static_cast<uint16_t>(s);
  }
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] > b.exp[i]) return false;
  }
  return true;
}

Monomial sub_monomials(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<uint16_t>(b.exp[i] - a.exp[i]);
  return r;
}

void check_size(std::size_t n) {
  if (n > g_term_limit.load(std::memory_order_relaxed)) {
    throw Error(ErrorKind::ExpressionTooLarge,
                "expansion exceeds " + std::to_string(term_limit()) + " terms; use sampled verification");
  }
}

}  // namespace

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (uint16_t e : exp) d += e;
  return d;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (uint16_t e : m.exp) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool degrevlex_greater(const Monomial& a, const Monomial& b, std::size_t nvars) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (std::size_t i = nvars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  }
  return false;
}

std::size_t term_limit() { return g_term_limit.load(std::memory_order_relaxed); }

ScopedTermLimit::ScopedTermLimit(std::size_t limit) : previous_(g_term_limit.exchange(limit)) {}
ScopedTermLimit::~ScopedTermLimit() { g_term_limit.store(previous_); }

// ------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {
  if (nvars > kMaxVars) throw Error(ErrorKind::BadParameter, "too many variables");
}

MultiPoly MultiPoly::constant(Field field, std::size_t nvars, const FieldElement& c) {
  return monomial(field, nvars, Monomial{}, c);
}

MultiPoly MultiPoly::constant(Field field, std::size_t nvars, long long c) {
  return constant(field, nvars, field.from_int(c));
}

MultiPoly MultiPoly::variable(Field field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(ErrorKind::BadParameter, "variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  return monomial(field, nvars, m, field.one());
}

MultiPoly MultiPoly::monomial(Field field, std::size_t nvars, const Monomial& m, const FieldElement& c) {
  if (!(c.field() == field)) throw Error(ErrorKind::FieldMismatch, "coefficient field differs");
  MultiPoly p(field, nvars);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
  MultiPoly p(field, nvars);
  std::sort(terms.begin(), terms.end(), [nvars](const Term& a, const Term& b) {
    return degrevlex_greater(a.mono, b.mono, nvars);
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void MultiPoly::require_compatible(const MultiPoly& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (nvars_ != o.nvars_) throw Error(ErrorKind::FieldMismatch, "polynomials in different rings");
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.total_degree());
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.exp[var]));
  return d;
}

FieldElement MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono == Monomial{}) return terms_.back().coef;
  return field_.zero();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_compatible(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && degrevlex_greater(terms_[i].mono, o.terms_[j].mono, nvars_))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || degrevlex_greater(o.terms_[j].mono, terms_[i].mono, nvars_)) {
      merged.push_back(o.terms_[j++]);
    } else {
      FieldElement c = terms_[i].coef + o.terms_[j].coef;
      if (!c.is_zero()) merged.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const FieldElement& c) {
  if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "scalar from another field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b);
  MultiPoly r(a.field_, a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  // Multiplying by a single term preserves the order.
  if (a.size() == 1 || b.size() == 1) {
    const MultiPoly& single = a.size() == 1 ? a : b;
    const MultiPoly& other = a.size() == 1 ? b : a;
    const Term& s = single.terms_[0];
    r.terms_.reserve(other.size());
    for (const auto& t : other.terms_) r.terms_.push_back({add_monomials(s.mono, t.mono), s.coef * t.coef});
    return r;
  }
  std::unordered_map<Monomial, FieldElement, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), term_limit() + 1));
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = add_monomials(ta.mono, tb.mono);
      auto [it, inserted] = acc.try_emplace(m, ta.coef);
      if (inserted) {
        it->second *= tb.coef;
      } else {
        it->second += ta.coef * tb.coef;
      }
    }
    check_size(acc.size());
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), [n = a.nvars_](const Term& x, const Term& y) {
    return degrevlex_greater(x.mono, y.mono, n);
  });
  r.terms_ = std::move(terms);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(field_, nvars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
  for (const auto& t : terms_) {
    Term stripped = t;
    stripped.mono.exp[var] = 0;
    buckets[t.mono.exp[var]].push_back(std::move(stripped));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(field_, nvars_, std::move(b)));
  return out;
}

MultiPoly MultiPoly::specialize(std::size_t var, const FieldElement& c) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s = t;
    s.coef *= c.pow(t.mono.exp[var]);
    s.mono.exp[var] = 0;
    out.push_back(std::move(s));
  }
  return from_terms(field_, nvars_, std::move(out));
}

MultiPoly MultiPoly::map_to(Field target) const {
  if (target == field_) return *this;
  if (!field_.is_rational()) throw Error(ErrorKind::FieldMismatch, "only Q coefficients can be reduced");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono, target.from_rational(t.coef.rational())});
  return from_terms(target, nvars_, std::move(out));
}

MultiPoly MultiPoly::extend(std::size_t nvars, std::size_t shift) const {
  if (nvars_ + shift > nvars) throw Error(ErrorKind::BadParameter, "target ring too small");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s{Monomial{}, t.coef};
    for (std::size_t i = 0; i < nvars_; ++i) s.mono.exp[i + shift] = t.mono.exp[i];
    out.push_back(std::move(s));
  }
  return from_terms(field_, nvars, std::move(out));
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coef.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = t.mono == Monomial{};
    bool unit = c == "1";
    if (constant || !unit) os << c;
    bool need_star = !constant && !unit;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (t.mono.exp[i] > 1) os << "^" << t.mono.exp[i];
      need_star = true;
    }
  }
  return os.str();
}

std::string MultiPoly::to_string() const {
  auto names = default_names("x", nvars_);
  return to_string(names);
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInversion, "division by the zero polynomial");
  if (!(a.field() == b.field()) || a.nvars() != b.nvars()) {
    throw Error(ErrorKind::FieldMismatch, "division across rings");
  }
  const Term& lead = b.leading_term();
  const FieldElement lead_inv = inverse(lead.coef);
  if (b.size() == 1) {
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!divides(lead.mono, t.mono)) throw Error(ErrorKind::NotDivisible, "monomial does not divide");
      out.push_back({sub_monomials(t.mono, lead.mono), t.coef * lead_inv});
    }
    return MultiPoly::from_terms(a.field(), a.nvars(), std::move(out));
  }
  MultiPoly remainder = a;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& top = remainder.leading_term();
    if (!divides(lead.mono, top.mono)) throw Error(ErrorKind::NotDivisible, "leading term does not divide");
    Term q{sub_monomials(top.mono, lead.mono), top.coef * lead_inv};
    remainder -= MultiPoly::monomial(a.field(), a.nvars(), q.mono, q.coef) * b;
    quotient.push_back(std::move(q));
  }
  return MultiPoly::from_terms(a.field(), a.nvars(), std::move(quotient));
}

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var) {
  if (var >= f.nvars()) throw Error(ErrorKind::BadParameter, "variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono.exp[var] == 0) continue;
    Term d = t;
    d.coef *= f.field().from_int(t.mono.exp[var]);
    d.mono.exp[var] -= 1;
    out.push_back(std::move(d));
  }
  return MultiPoly::from_terms(f.field(), f.nvars(), std::move(out));
}

FieldElement evaluate(const MultiPoly& f, std::span<const FieldElement> point) {
  if (point.size() != f.nvars()) throw Error(ErrorKind::BadParameter, "point has wrong dimension");
  FieldElement sum = f.field().zero();
  for (const auto& t : f.terms()) {
    FieldElement v = t.coef;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (t.mono.exp[i] != 0) v *= point[i].pow(t.mono.exp[i]);
    }
    sum += v;
  }
  return sum;
}

std::vector<std::string> default_names(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(i + 1));
  return names;
}

// --------------------------------------------------------------- RatFunc

RatFunc::RatFunc(MultiPoly num)
    : num_(num), den_(MultiPoly::constant(num.field(), num.nvars(), 1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator is the zero polynomial");
  if (!(num_.field() == den_.field()) || num_.nvars() != den_.nvars()) {
    throw Error(ErrorKind::FieldMismatch, "numerator and denominator in different rings");
  }
}

RatFunc RatFunc::constant(Field field, std::size_t nvars, long long c) {
  return RatFunc(MultiPoly::constant(field, nvars, c));
}

RatFunc RatFunc::variable(Field field, std::size_t nvars, std::size_t index) {
  return RatFunc(MultiPoly::variable(field, nvars, index));
}

int RatFunc::degree_in(std::size_t var) const { return std::max(num_.degree_in(var), den_.degree_in(var)); }
int RatFunc::degree() const { return std::max(num_.degree(), den_.degree()); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (o.den_.is_constant()) {
    // a/d + b/c = (a + d*b/c)/d
    num_ += den_ * o.num_ * inverse(o.den_.constant_term());
  } else if (den_.is_constant()) {
    num_ = num_ * inverse(den_.constant_term()) * o.den_ + o.num_;
    den_ = o.den_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.num_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero function");
  num_ *= o.den_;
  den_ *= o.num_;
  return *this;
}

RatFunc RatFunc::map_to(Field target) const { return RatFunc(num_.map_to(target), den_.map_to(target)); }

RatFunc RatFunc::extend(std::size_t nvars, std::size_t shift) const {
  return RatFunc(num_.extend(nvars, shift), den_.extend(nvars, shift));
}

std::string RatFunc::to_string(std::span<const std::string> names) const {
  if (den_.is_constant() && den_.constant_term().is_one()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) {
  if (!(f.field() == g.field()) || f.nvars() != g.nvars()) {
    throw Error(ErrorKind::FieldMismatch, "comparing rational functions from different rings");
  }
  if (f.den() == g.den()) return f.num() == g.num();
  return f.num() * g.den() == g.num() * f.den();
}

FieldElement evaluate(const RatFunc& f, std::span<const FieldElement> point) {
  FieldElement d = evaluate(f.den(), point);
  if (d.is_zero()) throw Error(ErrorKind::PoleAtPoint, "denominator vanishes at the point");
  return evaluate(f.num(), point) / d;
}

// ---------------------------------------------------------- substitution

namespace {

struct SubstitutionPlan {
  std::size_t out_vars = 0;
  Field field = Field::rationals();
  std::vector<int> bound;  // exponent bound per variable
  bool all_monomial = true;
};

SubstitutionPlan plan_for(std::span<const RatFunc> assignment, std::vector<int> bound, Field field) {
  SubstitutionPlan plan;
  plan.field = field;
  plan.bound = std::move(bound);
  if (assignment.empty()) {
    plan.out_vars = 0;
    return plan;
  }
  plan.out_vars = assignment[0].nvars();
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const RatFunc& a = assignment[i];
    if (a.nvars() != plan.out_vars || !(a.field() == field)) {
      throw Error(ErrorKind::FieldMismatch, "assignment components live in different rings");
    }
    if (plan.bound[i] > 0 && (a.num().size() > 1 || a.den().size() > 1)) plan.all_monomial = false;
    if (plan.bound[i] > 0 && a.num().is_zero()) plan.all_monomial = false;
  }
  return plan;
}

/// Sum over terms of c * prod num_i^{a_i} den_i^{bound_i - a_i}.
MultiPoly substitute_numerator(const MultiPoly& f, std::span<const RatFunc> assignment,
                               const SubstitutionPlan& plan) {
  const std::size_t m = f.nvars();
  if (plan.all_monomial) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      Term r{Monomial{}, t.coef};
      for (std::size_t i = 0; i < m; ++i) {
        const int b = plan.bound[i];
        if (b == 0) continue;
        const int e = t.mono.exp[i];
        const Term& nt = assignment[i].num().terms()[0];
        const Term& dt = assignment[i].den().terms()[0];
        for (std::size_t v = 0; v < kMaxVars; ++v) {
          unsigned s = r.mono.exp[v] + unsigned(e) * nt.mono.exp[v] + unsigned(b - e) * dt.mono.exp[v];
          if (s > UINT16_MAX) throw Error(ErrorKind::ExpressionTooLarge, "exponent overflow");
          r.mono.exp[v] = static_cast<uint16_t>(s);
        }
        if (e > 0 && !nt.coef.is_one()) r.coef *= nt.coef.pow(e);
        if (b - e > 0 && !dt.coef.is_one()) r.coef *= dt.coef.pow(b - e);
      }
      out.push_back(std::move(r));
    }
    return MultiPoly::from_terms(plan.field, plan.out_vars, std::move(out));
  }

  // Power tables num_i^k and den_i^k for k <= bound_i.
  std::vector<std::vector<MultiPoly>> num_pow(m), den_pow(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int b = plan.bound[i];
    if (b == 0) continue;
    num_pow[i].push_back(MultiPoly::constant(plan.field, plan.out_vars, 1));
    den_pow[i].push_back(MultiPoly::constant(plan.field, plan.out_vars, 1));
    for (int k = 1; k <= b; ++k) {
      num_pow[i].push_back(num_pow[i].back() * assignment[i].num());
      den_pow[i].push_back(den_pow[i].back() * assignment[i].den());
    }
  }
  MultiPoly sum(plan.field, plan.out_vars);
  for (const auto& t : f.terms()) {
    MultiPoly prod = MultiPoly::constant(plan.field, plan.out_vars, t.coef);
    for (std::size_t i = 0; i < m && !prod.is_zero(); ++i) {
      const int b = plan.bound[i];
      if (b == 0) continue;
      const int e = t.mono.exp[i];
      if (e > 0) prod *= num_pow[i][e];
      if (b - e > 0) prod *= den_pow[i][b - e];
    }
    sum += prod;
  }
  return sum;
}

std::vector<int> bounds_of(const MultiPoly& f) {
  std::vector<int> b(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) b[i] = std::max(0, f.degree_in(i));
  return b;
}

void check_assignment(std::size_t nvars, std::span<const RatFunc> assignment, const std::vector<int>& bound) {
  if (assignment.size() != nvars) {
    throw Error(ErrorKind::BadParameter, "assignment must give one function per variable");
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    if (bound[i] > 0 && assignment[i].den().is_zero()) {
      throw Error(ErrorKind::ZeroDenominator, "substituted denominator is zero");
    }
  }
}

}  // namespace

RatFunc substitute(const MultiPoly& f, std::span<const RatFunc> assignment) {
  std::vector<int> bound = bounds_of(f);
  check_assignment(f.nvars(), assignment, bound);
  SubstitutionPlan plan = plan_for(assignment, bound, f.field());
  MultiPoly num = substitute_numerator(f, assignment, plan);
  MultiPoly den = MultiPoly::constant(plan.field, plan.out_vars, 1);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (plan.bound[i] > 0) den *= assignment[i].den().pow(static_cast<unsigned>(plan.bound[i]));
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc substitute(const RatFunc& f, std::span<const RatFunc> assignment) {
  std::vector<int> bound(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) bound[i] = std::max(0, f.degree_in(i));
  check_assignment(f.nvars(), assignment, bound);
  SubstitutionPlan plan = plan_for(assignment, bound, f.field());
  // Using one exponent bound for numerator and denominator makes the
  // substituted denominators cancel.
  MultiPoly num = substitute_numerator(f.num(), assignment, plan);
  MultiPoly den = substitute_numerator(f.den(), assignment, plan);
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "composed denominator vanishes identically");
  return RatFunc(std::move(num), std::move(den));
}

std::vector<RatFunc> substitute(std::span<const RatFunc> fs, std::span<const RatFunc> assignment) {
  std::vector<RatFunc> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(substitute(f, assignment));
  return out;
}

std::vector<RatFunc> identity_assignment(Field field, std::size_t nvars) {
  std::vector<RatFunc> out;
  for (std::size_t i = 0; i < nvars; ++i) out.push_back(RatFunc::variable(field, nvars, i));
  return out;
}

}  // namespace cay
