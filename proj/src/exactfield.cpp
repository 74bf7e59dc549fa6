#include "cayley/exactfield.hpp"

#include <array>
#include <vector>

namespace cay {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInversion: return "ZeroInversion";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::ExpressionTooLarge: return "ExpressionTooLarge";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::DegenerateSpec: return "DegenerateSpec";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::BadRoot: return "BadRoot";
    case ErrorKind::NotOnHypersurface: return "NotOnHypersurface";
    case ErrorKind::HyperplaneCase: return "HyperplaneCase";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::EliminationMismatch: return "EliminationMismatch";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::ZeroInversion, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t p) {
  uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a % p);
  if (new_r == 0) throw Error(ErrorKind::ZeroInversion, "inverse of 0 mod " + std::to_string(p));
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<uint64_t, 7> kBases{2, 3, 5, 7, 11, 13, 17};
  for (uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kBases) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Field

Field Field::prime(uint64_t p) {
  if (p >= kMaxPrime) throw Error(ErrorKind::BadParameter, "modulus too large for verified primality");
  if (!is_prime(p)) throw Error(ErrorKind::BadParameter, std::to_string(p) + " is not prime");
  return Field(p);
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long v) const {
  if (is_rational()) return FieldElement(Rational(static_cast<long>(v)));
  long long r = v % static_cast<long long>(modulus_);
  if (r < 0) r += static_cast<long long>(modulus_);
  return FieldElement(modulus_, static_cast<uint64_t>(r));
}

FieldElement Field::from_rational(const Rational& q) const {
  if (is_rational()) return FieldElement(q);
  mpz_class p(static_cast<unsigned long>(modulus_));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw Error(ErrorKind::ZeroInversion, "denominator divisible by " + std::to_string(modulus_));
  uint64_t n = num.get_ui();
  uint64_t d = den.get_ui();
  return FieldElement(modulus_, mul_mod(n, inv_mod(d, modulus_), modulus_));
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(modulus_);
}

// --------------------------------------------------------- FieldElement

Field FieldElement::field() const { return Field(modulus_); }

bool FieldElement::is_zero() const {
  if (modulus_ == 0) return sgn(std::get<Rational>(value_)) == 0;
  return std::get<uint64_t>(value_) == 0;
}

bool FieldElement::is_one() const {
  if (modulus_ == 0) return std::get<Rational>(value_) == 1;
  return std::get<uint64_t>(value_) == 1;
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (modulus_ != o.modulus_) {
    throw Error(ErrorKind::FieldMismatch, "cannot combine elements of different fields");
  }
}

FieldElement FieldElement::operator-() const {
  if (modulus_ == 0) return FieldElement(Rational(-std::get<Rational>(value_)));
  uint64_t v = std::get<uint64_t>(value_);
  return FieldElement(modulus_, v == 0 ? 0 : modulus_ - v);
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(o);
  if (modulus_ == 0) {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  } else {
    uint64_t s = std::get<uint64_t>(value_) + std::get<uint64_t>(o.value_);
    if (s >= modulus_) s -= modulus_;
    value_ = s;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same_field(o);
  if (modulus_ == 0) {
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
  } else {
    uint64_t a = std::get<uint64_t>(value_);
    uint64_t b = std::get<uint64_t>(o.value_);
    value_ = a >= b ? a - b : a + modulus_ - b;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same_field(o);
  if (modulus_ == 0) {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  } else {
    value_ = mul_mod(std::get<uint64_t>(value_), std::get<uint64_t>(o.value_), modulus_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  require_same_field(o);
  return *this *= inverse(o);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.modulus_ == b.modulus_ && a.value_ == b.value_;
}

FieldElement FieldElement::pow(uint64_t e) const {
  if (modulus_ != 0) return FieldElement(modulus_, pow_mod(std::get<uint64_t>(value_), e, modulus_));
  Rational result(1);
  Rational base = std::get<Rational>(value_);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return FieldElement(std::move(result));
}

std::string FieldElement::to_string() const {
  if (modulus_ == 0) return std::get<Rational>(value_).get_str();
  return std::to_string(std::get<uint64_t>(value_));
}

FieldElement inverse(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroInversion, "inverse of zero");
  Field f = x.field();
  if (f.is_rational()) {
    Rational inv = 1 / x.rational();
    return f.from_rational(inv);
  }
  return f.from_int(static_cast<long long>(inv_mod(x.residue(), f.modulus())));
}

// -------------------------------------------------------- roots of unity

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldElement nth_root_of_unity(uint64_t p, uint64_t n) {
  Field field = Field::prime(p);
  if (n == 0) throw Error(ErrorKind::BadParameter, "n must be positive");
  if ((p - 1) % n != 0) {
    throw Error(ErrorKind::NoRoot, std::to_string(p) + " is not 1 mod " + std::to_string(n));
  }
  if (n == 1) return field.one();
  const std::vector<uint64_t> factors = prime_factors(p - 1);
  for (uint64_t g = 2; g < p; ++g) {
    if (!is_prime(g)) continue;
    bool generator = true;
    for (uint64_t q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return field.from_int(static_cast<long long>(pow_mod(g, (p - 1) / n, p)));
  }
  throw Error(ErrorKind::NoRoot, "no generator found");  // unreachable for prime p
}

uint64_t find_prime_with_root(uint64_t n, uint64_t min) {
  constexpr uint64_t kLimit = 1ULL << 31;
  if (n == 0 || min < 2) throw Error(ErrorKind::BadParameter, "need n >= 1 and min >= 2");
  for (uint64_t p = min; p <= kLimit; ++p) {
    if ((p - 1) % n == 0 && is_prime(p)) return p;
  }
  throw Error(ErrorKind::SearchExhausted, "no prime = 1 mod " + std::to_string(n) + " below 2^31");
}

// --------------------------------------------------------------- random

uint64_t RandomStream::below(uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::BadParameter, "empty range");
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

long long RandomStream::between(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo) + 1));
}

RandomStream RandomStream::child(uint64_t index) const {
  uint64_t z = seed_ + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return RandomStream(z ^ (z >> 31));
}

FieldElement random_element(Field field, RandomStream& stream, long height) {
  if (field.is_prime_field()) {
    return field.from_int(static_cast<long long>(stream.below(field.modulus())));
  }
  long num = static_cast<long>(stream.between(-height, height));
  long den = static_cast<long>(stream.between(1, height));
  return field.from_rational(make_rational(num, den));
}

FieldElement random_nonzero(Field field, RandomStream& stream, long height) {
  for (;;) {
    FieldElement x = random_element(field, stream, height);
    if (!x.is_zero()) return x;
  }
}

}  // namespace cay
