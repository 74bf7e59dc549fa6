#pragma once

// Candidate equivariant maps T -> t at torus level: verification
// (containment, equivariance, dominance), degree computation and the
// isogeny / product composition laws.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cayley/polylab.hpp"
#include "cayley/weyltorus.hpp"

namespace cay {

/// Components are rational functions in the m ambient torus variables,
/// read as the m ambient Lie coordinates of the image.
struct MapCandidate {
  std::string name;
  TorusLiePair pair;
  std::vector<RatFunc> components;

  /// BadParameter unless there is one component per ambient coordinate,
  /// all over one field.
  MapCandidate(std::string name, TorusLiePair pair, std::vector<RatFunc> components);

  Field field() const { return components.front().field(); }
  /// Coefficients reduced into F_p (identity when already over F_p).
  MapCandidate over(Field target) const;
  /// Largest total degree among numerators and denominators.
  int max_degree() const;
};

/// Torus self-map t_i -> prod_j t_j^{E_ij} on free coordinates.
class IsogenySpec {
 public:
  /// BadParameter unless E is square with nonzero determinant.
  explicit IsogenySpec(std::vector<std::vector<long long>> exponents);

  std::size_t rank() const { return exponents_.size(); }
  const std::vector<std::vector<long long>>& exponents() const { return exponents_; }
  /// |det E|.
  uint64_t kernel_order() const { return kernel_order_; }

  IsogenySpec direct_sum(const IsogenySpec& other) const;

 private:
  std::vector<std::vector<long long>> exponents_;
  uint64_t kernel_order_;
};

enum class DegreeMethod { StructuralProjection, BruteForceHistogram };

std::string to_string(DegreeMethod method);

struct DegreeReport {
  DegreeMethod method;
  int degree = 0;
  std::size_t samples = 0;
  /// Brute force: fiber size -> number of image points with that fiber size.
  /// Projection: per-sample degree -> number of samples.
  std::map<std::size_t, uint64_t> histogram;
  uint64_t prime = 0;
  /// Projection only: every accepted sample gave the same degree.
  bool unanimous = true;
  /// Brute force only: domain points where the map was defined.
  uint64_t defined_points = 0;
  uint64_t nonempty_fibers = 0;
};

struct ProjectionSpec {
  MultiPoly hypersurface;
  /// A point on the hypersurface, or a direction (point at infinity).
  std::vector<FieldElement> center;
  bool center_at_infinity = false;
  /// Coefficients of the linear form L cutting out the target hyperplane.
  std::vector<FieldElement> hyperplane;

  /// Checks F(c) = 0 and L(c) != 0 (finite center) or L(d) != 0 (direction).
  /// NotOnHypersurface / DegenerateSpec on violation, including deg F <= 1.
  void validate() const;
};

struct IdentityCheck {
  bool pass = false;
  /// "symbolic" or "sampled".
  std::string mode;
  /// Upper bound on the chance a sampled pass is wrong (0 when symbolic).
  double failure_probability = 0.0;
  /// Point where the two sides differ, if one was found.
  std::optional<std::vector<FieldElement>> witness;
  std::string detail;
};

struct EquivarianceEntry {
  SignedPermutation element;
  IdentityCheck check;
};

struct EquivarianceReport {
  std::vector<EquivarianceEntry> entries;
  bool all_pass() const;
};

struct VerifyOptions {
  uint64_t seed = 0;
  /// Skip symbolic expansion and go straight to sampled identity checks.
  bool force_sampled = false;
  std::size_t sample_points = 50;
};

/// Every Lie dependency holds identically on the image (after reducing the
/// torus variables to free coordinates).
IdentityCheck check_target_containment(const MapCandidate& c, const VerifyOptions& opts = {});
bool target_contained(const MapCandidate& c, const VerifyOptions& opts = {});

/// For each element g: g acting on the Lie side of the components equals
/// the components precomposed with g on the torus side, after reduction.
EquivarianceReport check_equivariance(const MapCandidate& c, std::span<const SignedPermutation> elements,
                                      const VerifyOptions& opts = {});

/// Rank of the r x r Jacobian of the reduced map at random points of F_p.
/// True once a full-rank point is found; false after `trials` misses.
bool check_dominance(const MapCandidate& c, uint64_t p, std::size_t trials, uint64_t seed = 0);

struct ProjectionOptions {
  std::size_t samples = 20;
  uint64_t seed = 0;
  /// Sample-count doublings allowed to break a tie in the modal degree.
  std::size_t max_doublings = 3;
};

/// Structural degree of the projection of {F = 0} onto {L = 0}. Degenerate
/// targets (on the hypersurface, or lines meeting it at infinity) are
/// resampled. Unstable if the modal degree stays tied.
DegreeReport projection_degree(const ProjectionSpec& spec, const ProjectionOptions& opts = {});

enum class FiberKernel { Serial, Parallel };

struct BruteForceOptions {
  uint64_t cap = 20'000'000;
  double delta = 0.02;
  FiberKernel kernel = FiberKernel::Parallel;
  /// Precompose with this Weyl element before enumerating.
  std::optional<SignedPermutation> precompose;
};

/// Enumerates every free torus point over F_p, builds the fiber-size
/// histogram over nonempty fibers and reports the largest fiber size whose
/// frequency exceeds delta. CapExceeded when (p-1)^r > cap; BadParameter
/// when p <= 2/delta.
DegreeReport brute_force_degree(const MapCandidate& c, uint64_t p, const BruteForceOptions& opts = {});

/// The torus map of an isogeny on the candidate's pair, as m ambient
/// components (dependent coordinates follow their dependencies).
std::vector<RatFunc> isogeny_components(const TorusLiePair& pair, const IsogenySpec& iso, Field field);
/// True when the isogeny commutes with every Weyl generator.
bool isogeny_intertwines(const TorusLiePair& pair, const IsogenySpec& iso);

/// Precomposes the candidate with the isogeny. RankMismatch if the ranks
/// differ; BadParameter if the isogeny does not commute with the Weyl action.
MapCandidate compose_with_isogeny(const MapCandidate& c, const IsogenySpec& iso);

/// Candidate on the product pair with concatenated components.
MapCandidate product_map(const MapCandidate& a, const MapCandidate& b);

/// Exact or sampled identity check of two rational functions over the
/// same ring; used by the verification routines.
IdentityCheck check_identity(const RatFunc& lhs, const RatFunc& rhs, const VerifyOptions& opts);

}  // namespace cay
