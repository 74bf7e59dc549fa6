#pragma once

// Maximal torus / Cartan subalgebra pairs presented in ambient
// coordinates, with Weyl groups generated by signed permutations.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/polylab.hpp"

namespace cay {

/// Acts on torus coordinates by y_i -> y_{perm[i]}^{sign[i]} and on Lie
/// coordinates by x_i -> sign[i] * x_{perm[i]}.
class SignedPermutation {
 public:
  SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs);

  static SignedPermutation identity(std::size_t m);
  static SignedPermutation transposition(std::size_t m, std::size_t i, std::size_t j);
  static SignedPermutation global_inversion(std::size_t m);

  std::size_t size() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }
  bool is_identity() const;

  /// The map "first apply `inner`, then this": (g * h)(y) = g(h(y)).
  SignedPermutation then_after(const SignedPermutation& inner) const;
  SignedPermutation inverse() const;

  /// Block concatenation: this on the first coordinates, other shifted.
  SignedPermutation direct_sum(const SignedPermutation& other) const;

  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    return a.perm_ != b.perm_ ? a.perm_ < b.perm_ : a.signs_ < b.signs_;
  }

 private:
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
};

/// Substitution y_i -> y_{perm[i]}^{sign[i]} in m torus variables.
std::vector<RatFunc> torus_substitution(const SignedPermutation& g, Field field);
/// Substitution x_i -> sign[i] * x_{perm[i]} in m Lie variables.
std::vector<RatFunc> lie_substitution(const SignedPermutation& g, Field field);

/// Phi o g, component by component.
std::vector<RatFunc> act_on_torus(const SignedPermutation& g, std::span<const RatFunc> phi);
/// (sign[i] * v[perm[i]])_i.
std::vector<RatFunc> act_on_lie(const SignedPermutation& g, std::span<const RatFunc> v);

struct GroupClosure {
  std::vector<SignedPermutation> elements;  // BFS order, identity first
  std::size_t size() const { return elements.size(); }
};

/// BFS closure from the identity, generators tried in the given order.
/// CapExceeded if the group has more than `cap` elements.
GroupClosure close_group(std::span<const SignedPermutation> generators, std::size_t m, std::size_t cap = 100000);

enum class Side { Torus, Lie };

/// y_index = prod_j y_j^{exponents[j]}, exponents supported on free coordinates.
struct TorusDependency {
  std::size_t index;
  std::vector<int> exponents;
};

/// x_index = sum_j coefficients[j] * x_j over free coordinates.
struct LieDependency {
  std::size_t index;
  std::vector<long long> coefficients;
};

class TorusLiePair {
 public:
  /// Validates the dependency structure and that every generator preserves
  /// both dependency loci (exact identity over Q). Throws BadParameter.
  TorusLiePair(std::string name, std::size_t m, std::vector<TorusDependency> torus_deps,
               std::vector<LieDependency> lie_deps, std::vector<SignedPermutation> generators);

  const std::string& name() const { return name_; }
  std::size_t ambient_dim() const { return m_; }
  std::size_t rank() const { return free_.size(); }
  const std::vector<std::size_t>& free_indices() const { return free_; }
  const std::vector<TorusDependency>& torus_dependencies() const { return torus_deps_; }
  const std::vector<LieDependency>& lie_dependencies() const { return lie_deps_; }
  const std::vector<SignedPermutation>& generators() const { return generators_; }

  GroupClosure closure(std::size_t cap = 100000) const { return close_group(generators_, m_, cap); }

  /// Assignment replacing dependent coordinates by their expressions in the
  /// free ones (identity on free coordinates).
  std::vector<RatFunc> reduction(Side side, Field field) const;

  /// Defining relations of the embedded torus / Lie algebra as polynomials
  /// vanishing on the locus.
  std::vector<MultiPoly> relations(Side side, Field field) const;

 private:
  std::string name_;
  std::size_t m_;
  std::vector<std::size_t> free_;
  std::vector<TorusDependency> torus_deps_;
  std::vector<LieDependency> lie_deps_;
  std::vector<SignedPermutation> generators_;
};

/// Substitutes the dependent coordinates of `side` by their expressions in
/// the free coordinates. The result keeps the ambient variable count.
RatFunc reduce_to_free(const RatFunc& f, const TorusLiePair& pair, Side side);

TorusLiePair sl_pair(std::size_t n);
TorusLiePair g2_pair();
/// Rank-one pairs with W = Z/2 acting by inversion / negation.
TorusLiePair sl2_pair();
TorusLiePair pgl2_pair();
TorusLiePair product_pair(const TorusLiePair& a, const TorusLiePair& b);

/// Parses "sl(n)", "g2", "sl2", "pgl2" and "product(a,b)". BadParameter
/// on anything else or on n < 2.
TorusLiePair builtin_pair(std::string_view name);

}  // namespace cay
