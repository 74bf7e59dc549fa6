#pragma once

// Sparse multivariate polynomials, unreduced rational functions and dense
// univariate polynomials over a FieldElement domain.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cayley/exactfield.hpp"

namespace cay {

inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector; entries past the owning polynomial's variable
/// count stay zero.
struct Monomial {
  std::array<uint16_t, kMaxVars> exp{};

  unsigned total_degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Degree reverse lexicographic order: true when a comes first (is larger).
bool degrevlex_greater(const Monomial& a, const Monomial& b, std::size_t nvars);

struct Term {
  Monomial mono;
  FieldElement coef;
};

/// Expansions that would exceed this many terms raise ExpressionTooLarge.
std::size_t term_limit();

/// Overrides the term limit for the lifetime of the object.
class ScopedTermLimit {
 public:
  explicit ScopedTermLimit(std::size_t limit);
  ~ScopedTermLimit();
  ScopedTermLimit(const ScopedTermLimit&) = delete;
  ScopedTermLimit& operator=(const ScopedTermLimit&) = delete;

 private:
  std::size_t previous_;
};

class MultiPoly {
 public:
  MultiPoly(Field field, std::size_t nvars);

  static MultiPoly constant(Field field, std::size_t nvars, const FieldElement& c);
  static MultiPoly constant(Field field, std::size_t nvars, long long c);
  static MultiPoly variable(Field field, std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Field field, std::size_t nvars, const Monomial& m, const FieldElement& c);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  /// Sorted by degrevlex, largest first, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Degree in one variable; -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  /// Coefficient of the constant monomial.
  FieldElement constant_term() const;
  const Term& leading_term() const { return terms_.front(); }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const FieldElement& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const FieldElement& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;

  /// Coefficients with respect to `var`, lowest power first; each is free of var.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  /// Sets variable `var` to the constant c.
  MultiPoly specialize(std::size_t var, const FieldElement& c) const;
  /// Reinterprets the coefficients in another field (Q -> F_p reduction).
  MultiPoly map_to(Field target) const;
  /// Same terms viewed in a ring with more (or as many) variables.
  MultiPoly extend(std::size_t nvars, std::size_t shift = 0) const;

  /// Terms in degrevlex order with explicit signs, e.g. "x1^2*x2 - 3*x1 + 1".
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static MultiPoly from_terms(Field field, std::size_t nvars, std::vector<Term> terms);

 private:
  void require_compatible(const MultiPoly& o) const;

  Field field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Exact quotient a / b; NotDivisible when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

MultiPoly partial_derivative(const MultiPoly& f, std::size_t var);

FieldElement evaluate(const MultiPoly& f, std::span<const FieldElement> point);

/// Fraction of two polynomials, never reduced by a gcd.
class RatFunc {
 public:
  explicit RatFunc(MultiPoly num);
  /// ZeroDenominator when den is the zero polynomial.
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc constant(Field field, std::size_t nvars, long long c);
  static RatFunc variable(Field field, std::size_t nvars, std::size_t index);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  Field field() const { return num_.field(); }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  /// Larger of the numerator and denominator degrees in `var`.
  int degree_in(std::size_t var) const;
  /// Larger of the numerator and denominator total degrees.
  int degree() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc map_to(Field target) const;
  RatFunc extend(std::size_t nvars, std::size_t shift = 0) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

/// True iff f.num * g.den - g.num * f.den expands to zero.
bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

/// PoleAtPoint when the denominator vanishes at the point.
FieldElement evaluate(const RatFunc& f, std::span<const FieldElement> point);

/// Replaces variable i of f by assignment[i]. The denominator of the result
/// is the product of the substituted denominators raised to the degree of
/// their variable in f. ZeroDenominator if a substituted denominator (or the
/// composed denominator of a rational f) is the zero polynomial.
RatFunc substitute(const MultiPoly& f, std::span<const RatFunc> assignment);
RatFunc substitute(const RatFunc& f, std::span<const RatFunc> assignment);
std::vector<RatFunc> substitute(std::span<const RatFunc> fs, std::span<const RatFunc> assignment);

/// Identity assignment x_i -> x_i for nvars variables.
std::vector<RatFunc> identity_assignment(Field field, std::size_t nvars);

/// Names x1..xm for printing.
std::vector<std::string> default_names(std::string_view prefix, std::size_t count);

// ------------------------------------------------------------- univariate

class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(field) {}
  /// Coefficients lowest degree first; trailing zeros are trimmed.
  UniPoly(Field field, std::vector<FieldElement> coeffs);

  static UniPoly from_multipoly(const MultiPoly& f, std::size_t var);

  Field field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElement coeff(std::size_t i) const;
  const FieldElement& leading() const { return coeffs_.back(); }

  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  FieldElement evaluate(const FieldElement& x) const;
  /// Number of leading zero coefficients (multiplicity of the root 0).
  std::size_t zero_root_multiplicity() const;
  /// Divides by s^k.
  UniPoly shift_down(std::size_t k) const;

  std::string to_string(std::string_view var = "s") const;

 private:
  void trim();
  Field field_;
  std::vector<FieldElement> coeffs_;
};

/// Monic gcd by the Euclidean algorithm; zero only if both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// deg g - deg gcd(g, g'): the number of distinct roots of g in the
/// algebraic closure. CharacteristicTooSmall unless char = 0 or p > deg g.
int squarefree_degree(const UniPoly& g);

/// g(s) = F(base + s * dir) with exact coefficients.
UniPoly univariate_restrict(const MultiPoly& F, std::span<const FieldElement> base,
                            std::span<const FieldElement> dir);

/// Sylvester-matrix determinant in `var`, by fraction-free (Bareiss)
/// elimination over the polynomial ring in the remaining variables.
/// DegreeZero if either input is constant in var.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var);

/// Determinant of a square polynomial matrix by Bareiss elimination.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> matrix);

}  // namespace cay
