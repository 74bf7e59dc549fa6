#pragma once

// Exact coefficient arithmetic: reduced rationals (GMP), prime fields,
// roots of unity and reproducible random streams.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include "cayley/error.hpp"

namespace cay {

/// Always canonical: gmpxx arithmetic keeps numerator and denominator
/// coprime with a positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den);

/// Deterministic Miller-Rabin, valid for n < 3.4e14.
bool is_prime(uint64_t n);

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t p);
/// Inverse of a modulo p via extended Euclid; a must be nonzero mod p.
uint64_t inv_mod(uint64_t a, uint64_t p);

class FieldElement;

/// Either the rationals (modulus 0) or F_p.
class Field {
 public:
  static constexpr uint64_t kMaxPrime = 330'000'000'000'000ULL;

  static Field rationals() { return Field(0); }
  /// Throws BadParameter unless p is a prime below kMaxPrime.
  static Field prime(uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime_field() const { return modulus_ != 0; }
  uint64_t modulus() const { return modulus_; }
  uint64_t characteristic() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  /// Throws ZeroInversion when the denominator vanishes mod p.
  FieldElement from_rational(const Rational& q) const;

  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.modulus_ == b.modulus_; }

 private:
  friend class FieldElement;
  explicit Field(uint64_t modulus) : modulus_(modulus) {}
  uint64_t modulus_;
};

class FieldElement {
 public:
  /// Zero of Q.
  FieldElement() : modulus_(0), value_(Rational(0)) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only valid in a prime field.
  uint64_t residue() const { return std::get<uint64_t>(value_); }
  /// Only valid over Q.
  const Rational& rational() const { return std::get<Rational>(value_); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement pow(uint64_t e) const;

  /// Canonical text: "p/q" for rationals, the residue for F_p.
  std::string to_string() const;

 private:
  friend class Field;
  FieldElement(uint64_t modulus, uint64_t residue) : modulus_(modulus), value_(residue) {}
  explicit FieldElement(Rational q) : modulus_(0), value_(std::move(q)) {}

  void require_same_field(const FieldElement& o) const;

  uint64_t modulus_;
  std::variant<uint64_t, Rational> value_;
};

/// x^{-1}; throws ZeroInversion for x = 0.
FieldElement inverse(const FieldElement& x);

/// A primitive n-th root of unity in F_p, computed as g^((p-1)/n) for the
/// first generator g found among 2, 3, 5, 7, ...
FieldElement nth_root_of_unity(uint64_t p, uint64_t n);

/// Smallest prime p >= min with p = 1 (mod n); SearchExhausted past 2^31.
uint64_t find_prime_with_root(uint64_t n, uint64_t min);

/// Reproducible stream over std::mt19937_64. Bounded draws use rejection
/// sampling on the raw 64-bit output, so sequences are identical across
/// standard libraries.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  uint64_t below(uint64_t bound);
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi);

  /// Independent child stream for worker `index` (splitmix64 of seed and index).
  RandomStream child(uint64_t index) const;

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Uniform residue for F_p. Over Q: numerator uniform in [-height, height],
/// denominator uniform in [1, height].
FieldElement random_element(Field field, RandomStream& stream, long height = 16);
/// Same, excluding zero.
FieldElement random_nonzero(Field field, RandomStream& stream, long height = 16);

}  // namespace cay
