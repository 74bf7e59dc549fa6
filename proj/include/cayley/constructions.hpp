#pragma once

// Explicit objects: the SL_n and G_2 torus-level maps, the elimination for
// G_2 against the span of the z_i, the classical matrix Cayley transform
// and a table of known Cayley degrees.

#include <optional>
#include <string>
#include <vector>

#include "cayley/cayley_engine.hpp"

namespace cay {

// ------------------------------------------------------------------ SL_n

/// x_i = 1/(y_i - 1) on the sl(n) pair, over Q. The image is not in the
/// Cartan; this is the birational leg composed with the projection.
MapCandidate sln_psi(std::size_t n);
/// Inverse of sln_psi: y_i = (x_i + 1) / x_i.
std::vector<RatFunc> sln_phi(std::size_t n, Field field = Field::rationals());

/// (x_1 + 1)...(x_n + 1) - x_1...x_n, of total degree n - 1.
MultiPoly sln_hypersurface(std::size_t n, Field field = Field::rationals());

/// Every restriction x_j = 1 (j != i) has degree exactly 1 in x_i, and the
/// constant term is nonzero.
bool sln_irreducibility_certificate(std::size_t n);

struct SlnCenter {
  FieldElement zeta;
  FieldElement a;
  std::vector<FieldElement> point;  // (a, ..., a)
  bool on_hypersurface = false;
  bool off_cartan = false;  // n * a != 0
  bool smooth = false;      // gcd((1+t)^n - t^n, (1+t)^(n-1) - t^(n-1)) constant
};

/// zeta = omega^zeta_index for the primitive n-th root omega of F_p;
/// a = 1 / (zeta - 1). HyperplaneCase for n = 2, BadRoot for zeta_index = 0
/// (mod n), BadParameter unless p = 1 (mod n). NotOnHypersurface if the
/// center check fails.
SlnCenter sln_center(std::size_t n, uint64_t p, std::size_t zeta_index);

/// Projection from the center onto the hyperplane sum x_i = 0 composed
/// with sln_psi, written over the common denominator n a D - N where
/// D = prod (y_j - 1) and N = sum_j prod_{k != j} (y_k - 1).
MapCandidate sln_full_candidate(std::size_t n, uint64_t p, std::size_t zeta_index);

/// The same composite built by generic substitution (slow; for tests).
MapCandidate sln_full_candidate_by_substitution(std::size_t n, uint64_t p, std::size_t zeta_index);

/// Hypersurface, center and target hyperplane whose projection the
/// candidate realizes.
ProjectionSpec sln_projection_spec(std::size_t n, uint64_t p, std::size_t zeta_index);

// ------------------------------------------------------------------- G_2

/// x_i = -(y_i + 1) / (y_i - 1) in three variables.
std::vector<RatFunc> g2_psi(Field field);
/// Inverse: y_i = (x_i - 1) / (x_i + 1).
std::vector<RatFunc> g2_phi(Field field);

/// alpha o psi on the g2 pair, where alpha subtracts the mean of the
/// coordinates. BadCharacteristic in characteristic 3.
MapCandidate g2_candidate(Field field);

struct QuadricPullback {
  MultiPoly quadric;    // x1 x2 + x2 x3 + x1 x3 + 1
  MultiPoly numerator;  // numerator of y1 y2 y3 - 1 under g2_phi
  bool matches = false; // numerator == -2 * quadric
};

QuadricPullback g2_quadric_pullback(Field field = Field::rationals());

/// Numerator of y1 y2 y3 - 1 under y_i = (1 - x_i)/(x_i + 1) and the cubic
/// x1 x2 x3 + x1 + x2 + x3 it should be proportional to (-2 times).
QuadricPullback g2_cubic_variant_pullback(Field field = Field::rationals());

/// Quadric, center at infinity in direction (1, 1, 1), hyperplane sum x_i = 0.
ProjectionSpec g2_projection_spec(Field field);
ProjectionSpec g2_cubic_projection_spec(Field field);

/// Elimination of t2 from the cleared two-equation system relating
/// t1, t2 to s1 = z1 - z2 and s2 = z1 - z3 (z_i = t_i - 1/t_i, t1 t2 t3 = 1).
/// Polynomials in the ring (s1, s2, t1, t2), variables 0..3.
struct SexticElimination {
  MultiPoly first_equation;
  MultiPoly second_equation;
  MultiPoly resultant;
  /// Coefficient of t1^k, k = 0..6, as polynomials in (s1, s2, t1, t2)
  /// involving only s1, s2. Monic: coefficients[6] == 1.
  std::vector<MultiPoly> coefficients;
  /// The published reference polynomial, same layout.
  std::vector<MultiPoly> reference;
  /// Indices k where coefficients[k] != reference[k].
  std::vector<std::size_t> mismatched;
  bool matches_reference() const { return mismatched.empty(); }
};

SexticElimination g2_sextic_elimination();
/// EliminationMismatch listing the differing coefficients.
void require_reference_match(const SexticElimination& e);

/// The sextic with the given coefficients as one polynomial in (s1, s2, t1, t2).
MultiPoly assemble_sextic(const std::vector<MultiPoly>& coefficients);

/// t2 = (t1^2 - 1) / (t1^2 s1 + t1 s2 - t1^3 - t1^2 + t1 + 1) holds
/// identically once s1, s2 are written in t1, t2.
bool verify_recovery_formula();

/// Draws t1, t2 in F_p^*, forms s1, s2 and counts samples where the sextic
/// vanishes. Samples with a pole (t_i - 1/t_i undefined cannot happen; only
/// zero draws) are redrawn.
std::size_t sextic_consistency(const std::vector<MultiPoly>& coefficients, uint64_t p, std::size_t samples,
                               uint64_t seed);

// ------------------------------------------------- classical Cayley map

class SquareMatrix {
 public:
  SquareMatrix(Field field, std::size_t n);
  static SquareMatrix identity(Field field, std::size_t n);

  Field field() const { return field_; }
  std::size_t dim() const { return n_; }
  FieldElement& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  SquareMatrix operator+(const SquareMatrix& o) const;
  SquareMatrix operator-(const SquareMatrix& o) const;
  SquareMatrix operator*(const SquareMatrix& o) const;
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  SquareMatrix transpose() const;
  bool is_skew_symmetric() const;
  /// Fraction-free elimination.
  FieldElement determinant() const;
  /// SingularDenominator when the matrix is singular.
  SquareMatrix inverse() const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<FieldElement> entries_;
};

/// (I - X)(I + X)^{-1}; SingularDenominator when det(I + X) = 0.
SquareMatrix classical_cayley(const SquareMatrix& x);

/// Skew-symmetric matrix with random rational entries above the diagonal.
SquareMatrix random_skew_symmetric(Field field, std::size_t n, RandomStream& rng);

struct ClassicalSuiteResult {
  std::size_t trials = 0;
  std::size_t orthogonal = 0;
  std::size_t involution = 0;
  std::size_t equivariant = 0;
  /// Draws skipped because det(I + X) = 0.
  std::size_t singular = 0;
  bool all_pass() const {
    const std::size_t run = trials - singular;
    return orthogonal == run && involution == run && equivariant == run;
  }
};

/// Orthogonality, involution and conjugation equivariance on `trials`
/// random rational skew-symmetric matrices of size n.
ClassicalSuiteResult classical_suite(std::size_t n, std::size_t trials, uint64_t seed);

// ---------------------------------------------------------- known table

enum class ValueKind { Exact, UpperBound };

std::string to_string(ValueKind kind);

struct KnownResult {
  std::string group;
  ValueKind kind;
  int value;
  std::string provenance;
};

/// Representative entries for each family.
std::vector<KnownResult> known_table();

/// Any member of the families: "SL_n", "Spin_n", "SO_n", "Sp_2n", "PGL_n",
/// "SL_n/mu_d", "G_2", "G_2xG_m^2". nullopt for unknown labels.
std::optional<KnownResult> lookup_known(const std::string& label);

}  // namespace cay
