#include <algorithm>
#include <sstream>

#include "cayley/polylab.hpp"

namespace cay {

UniPoly::UniPoly(Field field, std::vector<FieldElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "coefficient from another field");
  }
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_multipoly(const MultiPoly& f, std::size_t var) {
  std::vector<FieldElement> c(static_cast<std::size_t>(std::max(f.degree_in(var), 0)) + 1, f.field().zero());
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (i != var && t.mono.exp[i] != 0) {
        throw Error(ErrorKind::BadParameter, "polynomial involves more than one variable");
      }
    }
    c[t.mono.exp[var]] += t.coef;
  }
  return UniPoly(f.field(), std::move(c));
}

FieldElement UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(field_);
  std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::derivative() const {
  std::vector<FieldElement> c;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c.push_back(coeffs_[i] * field_.from_int(static_cast<long long>(i)));
  return UniPoly(field_, std::move(c));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  FieldElement inv = inverse(leading());
  std::vector<FieldElement> c = coeffs_;
  for (auto& x : c) x *= inv;
  return UniPoly(field_, std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroInversion, "division by the zero polynomial");
  std::vector<FieldElement> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(field_), *this};
  std::vector<FieldElement> quot(coeffs_.size() - static_cast<std::size_t>(dd), field_.zero());
  const FieldElement lead_inv = inverse(divisor.leading());
  for (int k = degree(); k >= dd; --k) {
    FieldElement q = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (q.is_zero()) continue;
    quot[static_cast<std::size_t>(k - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(field_, std::move(quot)), UniPoly(field_, std::move(rem))};
}

FieldElement UniPoly::evaluate(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::size_t UniPoly::zero_root_multiplicity() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
  return k;
}

UniPoly UniPoly::shift_down(std::size_t k) const {
  if (k > zero_root_multiplicity()) throw Error(ErrorKind::NotDivisible, "s^k does not divide");
  return UniPoly(field_, std::vector<FieldElement>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

std::string UniPoly::to_string(std::string_view var) const {
  MultiPoly p(field_, 1);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Monomial m;
    m.exp[0] = static_cast<uint16_t>(i);
    terms.push_back({m, coeffs_[i]});
  }
  std::vector<std::string> names{std::string(var)};
  return MultiPoly::from_terms(field_, 1, std::move(terms)).to_string(names);
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

int squarefree_degree(const UniPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::BadParameter, "zero polynomial has no root count");
  const uint64_t ch = g.field().characteristic();
  if (ch != 0 && ch <= static_cast<uint64_t>(g.degree())) {
    throw Error(ErrorKind::CharacteristicTooSmall,
                "characteristic " + std::to_string(ch) + " does not exceed degree " + std::to_string(g.degree()));
  }
  return g.degree() - gcd(g, g.derivative()).degree();
}

UniPoly univariate_restrict(const MultiPoly& F, std::span<const FieldElement> base,
                            std::span<const FieldElement> dir) {
  const std::size_t m = F.nvars();
  if (base.size() != m || dir.size() != m) throw Error(ErrorKind::BadParameter, "dimension mismatch");
  if (std::all_of(dir.begin(), dir.end(), [](const FieldElement& d) { return d.is_zero(); })) {
    throw Error(ErrorKind::BadParameter, "direction must be nonzero");
  }
  const Field field = F.field();
  std::vector<RatFunc> line;
  for (std::size_t i = 0; i < m; ++i) {
    MultiPoly li = MultiPoly::constant(field, 1, base[i]) + MultiPoly::variable(field, 1, 0) * dir[i];
    line.emplace_back(std::move(li));
  }
  RatFunc g = substitute(F, line);
  // Substituted denominators are all 1.
  return UniPoly::from_multipoly(g.num(), 0);
}

// -------------------------------------------------------------- resultant

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorKind::BadParameter, "empty matrix");
  const Field field = a[0][0].field();
  const std::size_t nvars = a[0][0].nvars();
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(field, nvars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly(field, nvars);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_divide(t, prev);
      }
      a[i][k] = MultiPoly(field, nvars);
    }
    prev = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  if (!(p.field() == q.field()) || p.nvars() != q.nvars()) {
    throw Error(ErrorKind::FieldMismatch, "resultant across rings");
  }
  const int dp = p.degree_in(var);
  const int dq = q.degree_in(var);
  if (dp <= 0 || dq <= 0) throw Error(ErrorKind::DegreeZero, "both inputs need positive degree in the variable");
  const std::vector<MultiPoly> pc = p.coefficients_in(var);
  const std::vector<MultiPoly> qc = q.coefficients_in(var);
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n, MultiPoly(p.field(), p.nvars())));
  for (std::size_t row = 0; row < static_cast<std::size_t>(dq); ++row) {
    for (int k = 0; k <= dp; ++k) s[row][row + static_cast<std::size_t>(k)] = pc[static_cast<std::size_t>(dp - k)];
  }
  for (std::size_t row = 0; row < static_cast<std::size_t>(dp); ++row) {
    for (int k = 0; k <= dq; ++k) {
      s[static_cast<std::size_t>(dq) + row][row + static_cast<std::size_t>(k)] = qc[static_cast<std::size_t>(dq - k)];
    }
  }
  return bareiss_determinant(std::move(s));
}

}  // namespace cay
