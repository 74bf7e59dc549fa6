#include "cayley/fiber_kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cay {

namespace {

void check_kernel_input(const MapCandidate& c) {
  const Field f = c.field();
  if (!f.is_prime_field() || f.modulus() >= (1ULL << 31)) {
    throw Error(ErrorKind::BadParameter, "fiber kernels need a candidate over F_p with p < 2^31");
  }
}

/// Odometer over (F_p^*)^r; returns false after the last point.
bool advance(std::vector<uint64_t>& digits, uint64_t p, std::size_t from = 0) {
  for (std::size_t k = from; k < digits.size(); ++k) {
    if (++digits[k] < p) return true;
    digits[k] = 1;
  }
  return false;
}

FiberHistogram histogram_from_counts(uint64_t defined, const auto& counts) {
  FiberHistogram h;
  h.defined_points = defined;
  for (const auto& n : counts) {
    if (n == 0) continue;
    h.sizes[static_cast<std::size_t>(n)] += 1;
    ++h.nonempty_fibers;
  }
  return h;
}

// ----------------------------------------------------- compiled evaluator

/// Barrett reduction for p < 2^31 and inputs below 2^62.
class Barrett {
 public:
  explicit Barrett(uint64_t p) : p_(p), m_(static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) / p)) {}
  uint64_t reduce(uint64_t x) const {
    const uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    uint64_t r = x - q * p_;
    return r >= p_ ? r - p_ : r;
  }
  uint64_t mul(uint64_t a, uint64_t b) const { return reduce(a * b); }

 private:
  uint64_t p_;
  uint64_t m_;
};

/// Terms stored contiguously: term k has coefficient coefs[k] and power
/// table slots slots[begin[k] .. begin[k+1]).
struct FlatPoly {
  std::vector<uint64_t> coefs;
  std::vector<uint32_t> begin{0};
  std::vector<uint32_t> slots;
};

FlatPoly flatten(const MultiPoly& f, std::size_t stride) {
  FlatPoly out;
  for (const auto& t : f.terms()) {
    out.coefs.push_back(t.coef.residue());
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      if (t.mono.exp[v] != 0) out.slots.push_back(static_cast<uint32_t>(v * stride + t.mono.exp[v]));
    }
    out.begin.push_back(static_cast<uint32_t>(out.slots.size()));
  }
  return out;
}

/// The map compiled to residue arithmetic. Powers of each ambient
/// coordinate are tabulated per point; denominators shared between
/// components are evaluated once.
class CompiledMap {
 public:
  explicit CompiledMap(const MapCandidate& c)
      : p_(c.field().modulus()), mod_(p_), m_(c.pair.ambient_dim()) {
    free_ = c.pair.free_indices();
    for (const auto& d : c.pair.torus_dependencies()) deps_.push_back(d);
    for (std::size_t a : free_) max_exp_ = std::max(max_exp_, c.components[a].degree());
    const std::size_t stride = static_cast<std::size_t>(max_exp_) + 1;
    std::vector<MultiPoly> dens;
    for (std::size_t a : free_) {
      const RatFunc& f = c.components[a];
      nums_.push_back(flatten(f.num(), stride));
      auto it = std::find(dens.begin(), dens.end(), f.den());
      if (it == dens.end()) {
        den_index_.push_back(dens.size());
        dens.push_back(f.den());
      } else {
        den_index_.push_back(static_cast<std::size_t>(it - dens.begin()));
      }
    }
    for (const auto& d : dens) dens_.push_back(flatten(d, stride));
    if (p_ <= (1ULL << 22)) {
      inverse_table_.assign(p_, 0);
      inverse_table_[1] = 1;
      for (uint64_t x = 2; x < p_; ++x) inverse_table_[x] = (p_ - (p_ / x) * inverse_table_[p_ % x] % p_) % p_;
    }
  }

  std::size_t rank() const { return free_.size(); }
  uint64_t prime() const { return p_; }

  struct Scratch {
    std::vector<uint64_t> y;
    std::vector<uint64_t> powers;  // m x (max_exp + 1)
    std::vector<uint64_t> den_inv;
  };

  Scratch make_scratch() const {
    return {std::vector<uint64_t>(m_, 1), std::vector<uint64_t>(m_ * (max_exp_ + 1), 1),
            std::vector<uint64_t>(dens_.size(), 0)};
  }

  /// Writes the free image coordinates to `out`; false at a pole.
  bool image(const std::vector<uint64_t>& free_values, Scratch& s, uint64_t* out) const {
    for (std::size_t k = 0; k < free_.size(); ++k) s.y[free_[k]] = free_values[k];
    for (const auto& d : deps_) {
      uint64_t v = 1;
      for (std::size_t j = 0; j < m_; ++j) {
        const int e = d.exponents[j];
        if (e > 0) v = v * pow_mod(s.y[j], static_cast<uint64_t>(e), p_) % p_;
        if (e < 0) v = v * pow_mod(inv(s.y[j]), static_cast<uint64_t>(-e), p_) % p_;
      }
      s.y[d.index] = v;
    }
    const std::size_t stride = static_cast<std::size_t>(max_exp_) + 1;
    for (std::size_t j = 0; j < m_; ++j) {
      uint64_t* row = &s.powers[j * stride];
      for (std::size_t e = 1; e < stride; ++e) row[e] = mod_.mul(row[e - 1], s.y[j]);
    }
    for (std::size_t i = 0; i < dens_.size(); ++i) {
      const uint64_t d = eval(dens_[i], s);
      if (d == 0) return false;
      s.den_inv[i] = inv(d);
    }
    for (std::size_t a = 0; a < nums_.size(); ++a) out[a] = mod_.mul(eval(nums_[a], s), s.den_inv[den_index_[a]]);
    return true;
  }

 private:
  uint64_t inv(uint64_t x) const { return inverse_table_.empty() ? inv_mod(x, p_) : inverse_table_[x]; }

  uint64_t eval(const FlatPoly& f, const Scratch& s) const {
    uint64_t acc = 0;
    const uint64_t* pw = s.powers.data();
    for (std::size_t k = 0; k < f.coefs.size(); ++k) {
      uint64_t v = f.coefs[k];
      for (uint32_t i = f.begin[k]; i < f.begin[k + 1]; ++i) v = mod_.mul(v, pw[f.slots[i]]);
      acc += v;
      if (acc >= p_) acc -= p_;
    }
    return acc;
  }

  uint64_t p_;
  Barrett mod_;
  std::size_t m_;
  int max_exp_ = 0;
  std::vector<std::size_t> free_;
  std::vector<TorusDependency> deps_;
  std::vector<FlatPoly> nums_;
  std::vector<FlatPoly> dens_;
  std::vector<std::size_t> den_index_;
  std::vector<uint64_t> inverse_table_;
};

}  // namespace

int fiber_worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

FiberHistogram fiber_histogram_serial(const MapCandidate& c) {
  check_kernel_input(c);
  const Field field = c.field();
  const uint64_t p = field.modulus();
  const TorusLiePair& pair = c.pair;
  const std::size_t r = pair.rank();
  std::map<std::vector<uint64_t>, uint64_t> fibers;
  uint64_t defined = 0;
  std::vector<uint64_t> digits(r, 1);
  do {
    std::vector<FieldElement> y(pair.ambient_dim(), field.one());
    for (std::size_t k = 0; k < r; ++k) y[pair.free_indices()[k]] = field.from_int(static_cast<long long>(digits[k]));
    for (const auto& d : pair.torus_dependencies()) {
      FieldElement v = field.one();
      for (std::size_t j = 0; j < y.size(); ++j) {
        const int e = d.exponents[j];
        if (e > 0) v *= y[j].pow(static_cast<uint64_t>(e));
        if (e < 0) v *= inverse(y[j]).pow(static_cast<uint64_t>(-e));
      }
      y[d.index] = v;
    }
    std::vector<uint64_t> key;
    bool pole = false;
    for (std::size_t a : pair.free_indices()) {
      const FieldElement den = evaluate(c.components[a].den(), y);
      if (den.is_zero()) {
        pole = true;
        break;
      }
      key.push_back((evaluate(c.components[a].num(), y) / den).residue());
    }
    if (pole) continue;
    ++defined;
    ++fibers[key];
  } while (advance(digits, p));
  std::vector<uint64_t> counts;
  counts.reserve(fibers.size());
  for (const auto& [key, n] : fibers) counts.push_back(n);
  return histogram_from_counts(defined, counts);
}

FiberHistogram fiber_histogram_parallel(const MapCandidate& c) {
  check_kernel_input(c);
  const CompiledMap map(c);
  const uint64_t p = map.prime();
  const std::size_t r = map.rank();
  std::size_t cells = 1;
  for (std::size_t k = 0; k < r; ++k) cells *= p;
  std::vector<uint32_t> counts(cells, 0);
  uint64_t defined = 0;
  const long long first_max = static_cast<long long>(p);

#pragma omp parallel for schedule(dynamic, 1) reduction(+ : defined)
  for (long long first = 1; first < first_max; ++first) {
    auto scratch = map.make_scratch();
    std::vector<uint64_t> digits(r, 1);
    std::vector<uint64_t> img(r, 0);
    digits[0] = static_cast<uint64_t>(first);
    do {
      if (!map.image(digits, scratch, img.data())) continue;
      ++defined;
      std::size_t key = 0;
      for (std::size_t k = r; k-- > 0;) key = key * p + img[k];
#pragma omp atomic
      ++counts[key];
    } while (r > 1 && advance(digits, p, 1));
  }
  return histogram_from_counts(defined, counts);
}

}  // namespace cay
