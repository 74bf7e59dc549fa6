#include "cayley/weyltorus.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace cay {

SignedPermutation::SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw Error(ErrorKind::BadParameter, "permutation and signs differ in length");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t p : perm_) {
    if (p >= perm_.size() || seen[p]) throw Error(ErrorKind::BadParameter, "not a permutation");
    seen[p] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw Error(ErrorKind::BadParameter, "signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  return SignedPermutation(std::move(p), std::vector<int>(m, 1));
}

SignedPermutation SignedPermutation::transposition(std::size_t m, std::size_t i, std::size_t j) {
  SignedPermutation g = identity(m);
  std::swap(g.perm_.at(i), g.perm_.at(j));
  return g;
}

SignedPermutation SignedPermutation::global_inversion(std::size_t m) {
  SignedPermutation g = identity(m);
  std::fill(g.signs_.begin(), g.signs_.end(), -1);
  return g;
}

bool SignedPermutation::is_identity() const { return *this == identity(size()); }

SignedPermutation SignedPermutation::then_after(const SignedPermutation& inner) const {
  // g(h(y))_i = h(y)_{g.perm[i]}^{g.sign[i]} = y_{h.perm[g.perm[i]]}^{g.sign[i] h.sign[g.perm[i]]}
  const std::size_t m = size();
  std::vector<std::size_t> p(m);
  std::vector<int> s(m);
  for (std::size_t i = 0; i < m; ++i) {
    p[i] = inner.perm_[perm_[i]];
    s[i] = signs_[i] * inner.signs_[perm_[i]];
  }
  return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation SignedPermutation::inverse() const {
  const std::size_t m = size();
  std::vector<std::size_t> p(m);
  std::vector<int> s(m);
  for (std::size_t i = 0; i < m; ++i) {
    p[perm_[i]] = i;
    s[perm_[i]] = signs_[i];
  }
  return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation SignedPermutation::direct_sum(const SignedPermutation& other) const {
  std::vector<std::size_t> p = perm_;
  std::vector<int> s = signs_;
  for (std::size_t i = 0; i < other.size(); ++i) {
    p.push_back(other.perm_[i] + size());
    s.push_back(other.signs_[i]);
  }
  return SignedPermutation(std::move(p), std::move(s));
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) os << " ";
    os << (signs_[i] < 0 ? "-" : "") << perm_[i] + 1;
  }
  os << "]";
  return os.str();
}

std::vector<RatFunc> torus_substitution(const SignedPermutation& g, Field field) {
  const std::size_t m = g.size();
  std::vector<RatFunc> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    MultiPoly v = MultiPoly::variable(field, m, g.perm()[i]);
    MultiPoly one = MultiPoly::constant(field, m, 1);
    out.push_back(g.signs()[i] > 0 ? RatFunc(v, one) : RatFunc(one, v));
  }
  return out;
}

std::vector<RatFunc> lie_substitution(const SignedPermutation& g, Field field) {
  const std::size_t m = g.size();
  std::vector<RatFunc> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.emplace_back(MultiPoly::variable(field, m, g.perm()[i]) * field.from_int(g.signs()[i]));
  }
  return out;
}

std::vector<RatFunc> act_on_torus(const SignedPermutation& g, std::span<const RatFunc> phi) {
  if (phi.empty()) return {};
  if (phi[0].nvars() != g.size()) throw Error(ErrorKind::BadParameter, "element acts on a different torus");
  return substitute(phi, torus_substitution(g, phi[0].field()));
}

std::vector<RatFunc> act_on_lie(const SignedPermutation& g, std::span<const RatFunc> v) {
  if (v.size() != g.size()) throw Error(ErrorKind::BadParameter, "element acts on a different Lie algebra");
  std::vector<RatFunc> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatFunc& src = v[g.perm()[i]];
    out.push_back(g.signs()[i] > 0 ? src : -src);
  }
  return out;
}

GroupClosure close_group(std::span<const SignedPermutation> generators, std::size_t m, std::size_t cap) {
  if (cap == 0) throw Error(ErrorKind::BadParameter, "cap must be positive");
  for (const auto& g : generators) {
    if (g.size() != m) throw Error(ErrorKind::BadParameter, "generator of the wrong size");
  }
  GroupClosure closure;
  std::set<SignedPermutation> seen;
  std::deque<SignedPermutation> queue;
  SignedPermutation id = SignedPermutation::identity(m);
  seen.insert(id);
  queue.push_back(id);
  closure.elements.push_back(id);
  while (!queue.empty()) {
    SignedPermutation e = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      SignedPermutation next = e.then_after(g);
      if (seen.insert(next).second) {
        if (closure.elements.size() >= cap) {
          throw Error(ErrorKind::CapExceeded, "group closure exceeds " + std::to_string(cap) + " elements");
        }
        closure.elements.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return closure;
}

// --------------------------------------------------------- TorusLiePair

TorusLiePair::TorusLiePair(std::string name, std::size_t m, std::vector<TorusDependency> torus_deps,
                           std::vector<LieDependency> lie_deps, std::vector<SignedPermutation> generators)
    : name_(std::move(name)),
      m_(m),
      torus_deps_(std::move(torus_deps)),
      lie_deps_(std::move(lie_deps)),
      generators_(std::move(generators)) {
  if (m_ == 0 || m_ > kMaxVars) throw Error(ErrorKind::BadParameter, "ambient dimension out of range");
  std::vector<bool> dependent(m_, false);
  for (const auto& d : torus_deps_) {
    if (d.index >= m_ || d.exponents.size() != m_) throw Error(ErrorKind::BadParameter, "malformed torus dependency");
    dependent[d.index] = true;
  }
  std::vector<bool> lie_dependent(m_, false);
  for (const auto& d : lie_deps_) {
    if (d.index >= m_ || d.coefficients.size() != m_) throw Error(ErrorKind::BadParameter, "malformed Lie dependency");
    lie_dependent[d.index] = true;
  }
  if (dependent != lie_dependent) {
    throw Error(ErrorKind::BadParameter, "torus and Lie sides must have the same dependent coordinates");
  }
  for (std::size_t i = 0; i < m_; ++i) {
    if (!dependent[i]) free_.push_back(i);
  }
  for (const auto& d : torus_deps_) {
    for (std::size_t j = 0; j < m_; ++j) {
      if (dependent[j] && d.exponents[j] != 0) throw Error(ErrorKind::BadParameter, "dependency uses a dependent coordinate");
    }
  }
  for (const auto& d : lie_deps_) {
    for (std::size_t j = 0; j < m_; ++j) {
      if (dependent[j] && d.coefficients[j] != 0) throw Error(ErrorKind::BadParameter, "dependency uses a dependent coordinate");
    }
  }
  const Field q = Field::rationals();
  for (const auto& g : generators_) {
    if (g.size() != m_) throw Error(ErrorKind::BadParameter, "generator of the wrong size");
    for (Side side : {Side::Torus, Side::Lie}) {
      auto action = side == Side::Torus ? torus_substitution(g, q) : lie_substitution(g, q);
      for (const MultiPoly& rel : relations(side, q)) {
        RatFunc moved = substitute(rel, action);
        if (!reduce_to_free(moved, *this, side).is_zero()) {
          throw Error(ErrorKind::BadParameter, "generator " + g.to_string() + " does not preserve the " +
                                                   (side == Side::Torus ? "torus" : "Lie algebra") + " of " + name_);
        }
      }
    }
  }
}

std::vector<RatFunc> TorusLiePair::reduction(Side side, Field field) const {
  std::vector<RatFunc> out = identity_assignment(field, m_);
  if (side == Side::Torus) {
    for (const auto& d : torus_deps_) {
      Monomial num, den;
      for (std::size_t j = 0; j < m_; ++j) {
        if (d.exponents[j] > 0) num.exp[j] = static_cast<uint16_t>(d.exponents[j]);
        if (d.exponents[j] < 0) den.exp[j] = static_cast<uint16_t>(-d.exponents[j]);
      }
      out[d.index] = RatFunc(MultiPoly::monomial(field, m_, num, field.one()),
                             MultiPoly::monomial(field, m_, den, field.one()));
    }
  } else {
    for (const auto& d : lie_deps_) {
      MultiPoly form(field, m_);
      for (std::size_t j = 0; j < m_; ++j) {
        if (d.coefficients[j] != 0) form += MultiPoly::variable(field, m_, j) * field.from_int(d.coefficients[j]);
      }
      out[d.index] = RatFunc(std::move(form));
    }
  }
  return out;
}

std::vector<MultiPoly> TorusLiePair::relations(Side side, Field field) const {
  std::vector<MultiPoly> out;
  if (side == Side::Torus) {
    for (const auto& d : torus_deps_) {
      // y_d * prod_{e<0} y^{-e} - prod_{e>0} y^{e}
      Monomial lhs, rhs;
      lhs.exp[d.index] = 1;
      for (std::size_t j = 0; j < m_; ++j) {
        if (d.exponents[j] < 0) lhs.exp[j] = static_cast<uint16_t>(-d.exponents[j]);
        if (d.exponents[j] > 0) rhs.exp[j] = static_cast<uint16_t>(d.exponents[j]);
      }
      out.push_back(MultiPoly::monomial(field, m_, lhs, field.one()) - MultiPoly::monomial(field, m_, rhs, field.one()));
    }
  } else {
    for (const auto& d : lie_deps_) {
      MultiPoly rel = MultiPoly::variable(field, m_, d.index);
      for (std::size_t j = 0; j < m_; ++j) {
        if (d.coefficients[j] != 0) rel -= MultiPoly::variable(field, m_, j) * field.from_int(d.coefficients[j]);
      }
      out.push_back(std::move(rel));
    }
  }
  return out;
}

RatFunc reduce_to_free(const RatFunc& f, const TorusLiePair& pair, Side side) {
  if (f.nvars() != pair.ambient_dim()) throw Error(ErrorKind::BadParameter, "function not in ambient coordinates");
  const auto& deps = side == Side::Torus ? pair.torus_dependencies().size() : pair.lie_dependencies().size();
  if (deps == 0) return f;
  return substitute(f, pair.reduction(side, f.field()));
}

// -------------------------------------------------------------- builtins

TorusLiePair sl_pair(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::BadParameter, "sl(n) needs n >= 2");
  std::vector<int> exps(n, -1);
  exps[n - 1] = 0;
  std::vector<long long> coeffs(n, -1);
  coeffs[n - 1] = 0;
  std::vector<SignedPermutation> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(SignedPermutation::transposition(n, i, i + 1));
  return TorusLiePair("sl(" + std::to_string(n) + ")", n, {{n - 1, exps}}, {{n - 1, coeffs}}, std::move(gens));
}

TorusLiePair g2_pair() {
  const std::size_t n = 3;
  std::vector<SignedPermutation> gens{SignedPermutation::transposition(n, 0, 1),
                                      SignedPermutation::transposition(n, 1, 2),
                                      SignedPermutation::global_inversion(n)};
  return TorusLiePair("g2", n, {{2, {-1, -1, 0}}}, {{2, {-1, -1, 0}}}, std::move(gens));
}

TorusLiePair sl2_pair() { return TorusLiePair("sl2", 1, {}, {}, {SignedPermutation::global_inversion(1)}); }

TorusLiePair pgl2_pair() { return TorusLiePair("pgl2", 1, {}, {}, {SignedPermutation::global_inversion(1)}); }

TorusLiePair product_pair(const TorusLiePair& a, const TorusLiePair& b) {
  const std::size_t ma = a.ambient_dim(), mb = b.ambient_dim();
  const std::size_t m = ma + mb;
  std::vector<TorusDependency> td;
  for (const auto& d : a.torus_dependencies()) {
    std::vector<int> e(m, 0);
    std::copy(d.exponents.begin(), d.exponents.end(), e.begin());
    td.push_back({d.index, std::move(e)});
  }
  for (const auto& d : b.torus_dependencies()) {
    std::vector<int> e(m, 0);
    std::copy(d.exponents.begin(), d.exponents.end(), e.begin() + static_cast<long>(ma));
    td.push_back({d.index + ma, std::move(e)});
  }
  std::vector<LieDependency> ld;
  for (const auto& d : a.lie_dependencies()) {
    std::vector<long long> c(m, 0);
    std::copy(d.coefficients.begin(), d.coefficients.end(), c.begin());
    ld.push_back({d.index, std::move(c)});
  }
  for (const auto& d : b.lie_dependencies()) {
    std::vector<long long> c(m, 0);
    std::copy(d.coefficients.begin(), d.coefficients.end(), c.begin() + static_cast<long>(ma));
    ld.push_back({d.index + ma, std::move(c)});
  }
  std::vector<SignedPermutation> gens;
  for (const auto& g : a.generators()) gens.push_back(g.direct_sum(SignedPermutation::identity(mb)));
  for (const auto& g : b.generators()) gens.push_back(SignedPermutation::identity(ma).direct_sum(g));
  return TorusLiePair("product(" + a.name() + "," + b.name() + ")", m, std::move(td), std::move(ld), std::move(gens));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

TorusLiePair builtin_pair(std::string_view name) {
  name = trim(name);
  if (name == "g2") return g2_pair();
  if (name == "sl2") return sl2_pair();
  if (name == "pgl2") return pgl2_pair();
  if (name.starts_with("sl(") && name.ends_with(")")) {
    std::string digits(name.substr(3, name.size() - 4));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw Error(ErrorKind::BadParameter, "bad sl(n) parameter");
    }
    return sl_pair(std::stoul(digits));
  }
  if (name.starts_with("product(") && name.ends_with(")")) {
    std::string_view inner = name.substr(8, name.size() - 9);
    // split at the top-level comma
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        return product_pair(builtin_pair(inner.substr(0, i)), builtin_pair(inner.substr(i + 1)));
      }
    }
  }
  throw Error(ErrorKind::BadParameter, "unknown pair '" + std::string(name) + "'");
}

}  // namespace cay
