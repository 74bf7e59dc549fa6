#include "cayley/cayley_engine.hpp"

#include <algorithm>
#include <cmath>

#include "cayley/fiber_kernels.hpp"

namespace cay {

// ---------------------------------------------------------- MapCandidate

MapCandidate::MapCandidate(std::string n, TorusLiePair p, std::vector<RatFunc> comps)
    : name(std::move(n)), pair(std::move(p)), components(std::move(comps)) {
  if (components.size() != pair.ambient_dim()) {
    throw Error(ErrorKind::BadParameter, "candidate needs one component per ambient coordinate");
  }
  for (const auto& c : components) {
    if (c.nvars() != pair.ambient_dim()) throw Error(ErrorKind::BadParameter, "component in the wrong ring");
    if (!(c.field() == components.front().field())) throw Error(ErrorKind::FieldMismatch, "components over different fields");
  }
}

MapCandidate MapCandidate::over(Field target) const {
  std::vector<RatFunc> comps;
  for (const auto& c : components) comps.push_back(c.map_to(target));
  return MapCandidate(name, pair, std::move(comps));
}

int MapCandidate::max_degree() const {
  int d = 0;
  for (const auto& c : components) d = std::max(d, c.degree());
  return d;
}

// ----------------------------------------------------------- IsogenySpec

namespace {

long long integer_determinant(std::vector<std::vector<long long>> a) {
  // Bareiss over the integers; every division is exact.
  const std::size_t n = a.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

IsogenySpec::IsogenySpec(std::vector<std::vector<long long>> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw Error(ErrorKind::BadParameter, "isogeny needs rank >= 1");
  for (const auto& row : exponents_) {
    if (row.size() != exponents_.size()) throw Error(ErrorKind::BadParameter, "exponent matrix must be square");
  }
  long long det = integer_determinant(exponents_);
  if (det == 0) throw Error(ErrorKind::BadParameter, "exponent matrix is singular");
  kernel_order_ = static_cast<uint64_t>(det < 0 ? -det : det);
}

IsogenySpec IsogenySpec::direct_sum(const IsogenySpec& other) const {
  const std::size_t a = rank(), b = other.rank();
  std::vector<std::vector<long long>> e(a + b, std::vector<long long>(a + b, 0));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) e[i][j] = exponents_[i][j];
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) e[a + i][a + j] = other.exponents_[i][j];
  return IsogenySpec(std::move(e));
}

std::string to_string(DegreeMethod method) {
  return method == DegreeMethod::StructuralProjection ? "structural-projection" : "brute-force-histogram";
}

bool EquivarianceReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.check.pass; });
}

// ------------------------------------------------------ point evaluation

namespace {

/// Ambient torus point from free coordinate values; nullopt if a
/// dependency needs to invert zero.
std::optional<std::vector<FieldElement>> ambient_torus_point(const TorusLiePair& pair,
                                                             const std::vector<FieldElement>& free_values) {
  const Field field = free_values.front().field();
  std::vector<FieldElement> y(pair.ambient_dim(), field.one());
  for (std::size_t k = 0; k < pair.rank(); ++k) y[pair.free_indices()[k]] = free_values[k];
  for (const auto& d : pair.torus_dependencies()) {
    FieldElement v = field.one();
    for (std::size_t j = 0; j < pair.ambient_dim(); ++j) {
      int e = d.exponents[j];
      if (e == 0) continue;
      if (e < 0 && y[j].is_zero()) return std::nullopt;
      v *= e > 0 ? y[j].pow(static_cast<uint64_t>(e)) : inverse(y[j]).pow(static_cast<uint64_t>(-e));
    }
    y[d.index] = v;
  }
  return y;
}

std::optional<std::vector<FieldElement>> evaluate_all(std::span<const RatFunc> fs, std::span<const FieldElement> y) {
  std::vector<FieldElement> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    FieldElement d = evaluate(f.den(), y);
    if (d.is_zero()) return std::nullopt;
    out.push_back(evaluate(f.num(), y) / d);
  }
  return out;
}

std::vector<FieldElement> apply_torus_element(const SignedPermutation& g, std::span<const FieldElement> y) {
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const FieldElement& src = y[g.perm()[i]];
    out.push_back(g.signs()[i] > 0 ? src : inverse(src));
  }
  return out;
}

/// Sampling fields for identity checks: the candidate's own field, or two
/// primes above 10^4 when the coefficients are rational.
std::vector<Field> sampling_fields(const MapCandidate& c) {
  if (c.field().is_prime_field()) return {c.field()};
  std::vector<Field> out;
  uint64_t p = 10'000;
  while (out.size() < 2) {
    p = find_prime_with_root(1, p + 1);
    Field f = Field::prime(p);
    try {
      (void)c.over(f);
      out.push_back(f);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroInversion) throw;
    }
  }
  return out;
}

/// Evaluates `sides` (a function producing lhs/rhs vectors at a free point,
/// or nullopt at a pole) at random points of each sampling field.
template <typename Sides>
IdentityCheck sampled_check(const MapCandidate& c, const VerifyOptions& opts, Sides sides) {
  IdentityCheck out;
  out.mode = "sampled";
  out.pass = true;
  double bound = 1.0;
  RandomStream rng(opts.seed);
  for (const Field& field : sampling_fields(c)) {
    MapCandidate local = c.over(field);
    std::size_t accepted = 0, attempts = 0;
    // Schwartz-Zippel: a nonzero cross-multiplied difference of degree D
    // vanishes at a random point with probability <= D / p.
    const double per_point = std::min(1.0, 4.0 * local.max_degree() * local.pair.ambient_dim() /
                                               static_cast<double>(field.modulus()));
    while (accepted < opts.sample_points) {
      if (++attempts > 100 * opts.sample_points) {
        throw Error(ErrorKind::DegenerateSpec, "could not find enough points off the poles");
      }
      std::vector<FieldElement> free_values;
      for (std::size_t k = 0; k < local.pair.rank(); ++k) free_values.push_back(random_nonzero(field, rng));
      auto y = ambient_torus_point(local.pair, free_values);
      if (!y) continue;
      auto values = sides(local, *y);
      if (!values) continue;
      ++accepted;
      if (!(values->first == values->second)) {
        out.pass = false;
        out.witness = *y;
        out.detail = "sides differ at a sampled point over " + field.name();
        return out;
      }
    }
    bound *= std::pow(per_point, static_cast<double>(accepted));
  }
  out.failure_probability = bound;
  out.detail = std::to_string(opts.sample_points) + " points per field";
  return out;
}

}  // namespace

IdentityCheck check_identity(const RatFunc& lhs, const RatFunc& rhs, const VerifyOptions& opts) {
  IdentityCheck out;
  out.mode = "symbolic";
  if (!opts.force_sampled) {
    try {
      out.pass = ratfunc_equal(lhs, rhs);
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ExpressionTooLarge) throw;
    }
  }
  // Sampled comparison of the cross-multiplied numerators.
  out.mode = "sampled";
  out.pass = true;
  RandomStream rng(opts.seed);
  const Field field = lhs.field();
  std::vector<Field> fields;
  if (field.is_prime_field()) {
    fields.push_back(field);
  } else {
    fields = {Field::prime(10007), Field::prime(10009)};
  }
  const double degree = lhs.degree() + rhs.degree();
  double bound = 1.0;
  for (Field f : fields) {
    RatFunc l = lhs.map_to(f), r = rhs.map_to(f);
    for (std::size_t i = 0; i < opts.sample_points; ++i) {
      std::vector<FieldElement> pt;
      for (std::size_t k = 0; k < l.nvars(); ++k) pt.push_back(random_element(f, rng));
      FieldElement diff = evaluate(l.num(), pt) * evaluate(r.den(), pt) - evaluate(r.num(), pt) * evaluate(l.den(), pt);
      if (!diff.is_zero()) {
        out.pass = false;
        out.witness = pt;
        return out;
      }
    }
    bound *= std::pow(std::min(1.0, degree / static_cast<double>(f.modulus())), static_cast<double>(opts.sample_points));
  }
  out.failure_probability = bound;
  return out;
}

// ------------------------------------------------------------ containment

IdentityCheck check_target_containment(const MapCandidate& c, const VerifyOptions& opts) {
  const TorusLiePair& pair = c.pair;
  const Field field = c.field();
  if (!opts.force_sampled) {
    try {
      IdentityCheck out;
      out.mode = "symbolic";
      out.pass = true;
      for (const auto& dep : pair.lie_dependencies()) {
        RatFunc expr = c.components[dep.index];
        for (std::size_t j = 0; j < pair.ambient_dim(); ++j) {
          if (dep.coefficients[j] != 0) {
            expr -= c.components[j] * RatFunc(MultiPoly::constant(field, pair.ambient_dim(), dep.coefficients[j]));
          }
        }
        if (!reduce_to_free(expr, pair, Side::Torus).is_zero()) {
          out.pass = false;
          out.detail = "Lie dependency for coordinate " + std::to_string(dep.index + 1) + " fails";
          return out;
        }
      }
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ExpressionTooLarge) throw;
    }
  }
  return sampled_check(c, opts, [](const MapCandidate& local, const std::vector<FieldElement>& y)
                                    -> std::optional<std::pair<std::vector<FieldElement>, std::vector<FieldElement>>> {
    auto v = evaluate_all(local.components, y);
    if (!v) return std::nullopt;
    std::vector<FieldElement> lhs, rhs;
    const Field f = local.field();
    for (const auto& dep : local.pair.lie_dependencies()) {
      FieldElement s = f.zero();
      for (std::size_t j = 0; j < v->size(); ++j) s += (*v)[j] * f.from_int(dep.coefficients[j]);
      lhs.push_back((*v)[dep.index]);
      rhs.push_back(s);
    }
    return std::make_pair(lhs, rhs);
  });
}

bool target_contained(const MapCandidate& c, const VerifyOptions& opts) {
  return check_target_containment(c, opts).pass;
}

// ----------------------------------------------------------- equivariance

namespace {

IdentityCheck symbolic_equivariance(const MapCandidate& c, const SignedPermutation& g) {
  IdentityCheck out;
  out.mode = "symbolic";
  out.pass = true;
  const std::vector<RatFunc> lhs = act_on_lie(g, c.components);
  const std::vector<RatFunc> rhs = act_on_torus(g, c.components);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    // Equality in ambient coordinates implies equality on the torus.
    if (ratfunc_equal(lhs[i], rhs[i])) continue;
    if (ratfunc_equal(reduce_to_free(lhs[i], c.pair, Side::Torus), reduce_to_free(rhs[i], c.pair, Side::Torus))) continue;
    out.pass = false;
    out.detail = "component " + std::to_string(i + 1) + " differs";
    return out;
  }
  return out;
}

std::optional<std::vector<FieldElement>> equivariance_witness(const MapCandidate& c, const SignedPermutation& g,
                                                             uint64_t seed) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.force_sampled = true;
  opts.sample_points = 200;
  IdentityCheck sampled = sampled_check(c, opts, [&g](const MapCandidate& local, const std::vector<FieldElement>& y)
                                                     -> std::optional<std::pair<std::vector<FieldElement>, std::vector<FieldElement>>> {
    auto v = evaluate_all(local.components, y);
    if (!v) return std::nullopt;
    std::vector<FieldElement> lhs;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const FieldElement& src = (*v)[g.perm()[i]];
      lhs.push_back(g.signs()[i] > 0 ? src : -src);
    }
    for (const auto& yi : y) {
      if (yi.is_zero()) return std::nullopt;
    }
    auto rhs = evaluate_all(local.components, apply_torus_element(g, y));
    if (!rhs) return std::nullopt;
    return std::make_pair(lhs, *rhs);
  });
  return sampled.witness;
}

}  // namespace

EquivarianceReport check_equivariance(const MapCandidate& c, std::span<const SignedPermutation> elements,
                                      const VerifyOptions& opts) {
  EquivarianceReport report;
  for (const auto& g : elements) {
    if (g.size() != c.pair.ambient_dim()) throw Error(ErrorKind::BadParameter, "element acts on a different torus");
    EquivarianceEntry entry{g, {}};
    bool done = false;
    if (!opts.force_sampled) {
      try {
        entry.check = symbolic_equivariance(c, g);
        done = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ExpressionTooLarge) throw;
      }
    }
    if (!done) {
      entry.check = sampled_check(c, opts, [&g](const MapCandidate& local, const std::vector<FieldElement>& y)
                                               -> std::optional<std::pair<std::vector<FieldElement>, std::vector<FieldElement>>> {
        auto v = evaluate_all(local.components, y);
        if (!v) return std::nullopt;
        std::vector<FieldElement> lhs;
        for (std::size_t i = 0; i < g.size(); ++i) {
          const FieldElement& src = (*v)[g.perm()[i]];
          lhs.push_back(g.signs()[i] > 0 ? src : -src);
        }
        auto rhs = evaluate_all(local.components, apply_torus_element(g, y));
        if (!rhs) return std::nullopt;
        return std::make_pair(lhs, *rhs);
      });
    }
    if (!entry.check.pass && !entry.check.witness) entry.check.witness = equivariance_witness(c, g, opts.seed);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

// -------------------------------------------------------------- dominance

namespace {

std::size_t rank_mod_p(std::vector<std::vector<FieldElement>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const FieldElement inv = inverse(a[rank][col]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col].is_zero()) continue;
      const FieldElement factor = a[i][col] * inv;
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool check_dominance(const MapCandidate& c, uint64_t p, std::size_t trials, uint64_t seed) {
  if (trials == 0) throw Error(ErrorKind::BadParameter, "need at least one trial");
  const Field field = Field::prime(p);
  if (c.field().is_prime_field() && !(c.field() == field)) {
    throw Error(ErrorKind::FieldMismatch, "candidate is defined over " + c.field().name());
  }
  if (p <= 2 * static_cast<uint64_t>(c.max_degree())) {
    throw Error(ErrorKind::BadParameter, "prime must exceed twice the degree of the candidate");
  }
  const MapCandidate local = c.over(field);
  const auto& free = local.pair.free_indices();
  const std::size_t r = free.size();
  std::vector<RatFunc> reduced;
  std::vector<MultiPoly> dnum, dden;  // partials, row-major [a * r + b]
  for (std::size_t a = 0; a < r; ++a) {
    reduced.push_back(reduce_to_free(local.components[free[a]], local.pair, Side::Torus));
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      dnum.push_back(partial_derivative(reduced[a].num(), free[b]));
      dden.push_back(partial_derivative(reduced[a].den(), free[b]));
    }
  }
  RandomStream rng(seed);
  const std::size_t m = local.pair.ambient_dim();
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<FieldElement> y(m, field.one());
    for (std::size_t k : free) y[k] = random_nonzero(field, rng);
    std::vector<std::vector<FieldElement>> jac(r, std::vector<FieldElement>(r, field.zero()));
    bool pole = false;
    for (std::size_t a = 0; a < r && !pole; ++a) {
      const FieldElement n = evaluate(reduced[a].num(), y);
      const FieldElement d = evaluate(reduced[a].den(), y);
      if (d.is_zero()) {
        pole = true;
        break;
      }
      const FieldElement d2inv = inverse(d * d);
      for (std::size_t b = 0; b < r; ++b) {
        jac[a][b] = (evaluate(dnum[a * r + b], y) * d - n * evaluate(dden[a * r + b], y)) * d2inv;
      }
    }
    if (pole) continue;
    if (rank_mod_p(std::move(jac)) == r) return true;
  }
  return false;
}

// ------------------------------------------------------ projection degree

void ProjectionSpec::validate() const {
  const std::size_t m = hypersurface.nvars();
  if (center.size() != m || hyperplane.size() != m) throw Error(ErrorKind::DegenerateSpec, "dimension mismatch");
  if (hypersurface.degree() <= 1) {
    throw Error(ErrorKind::DegenerateSpec, "hypersurface is a hyperplane; projection undefined");
  }
  FieldElement lc = hypersurface.field().zero();
  for (std::size_t i = 0; i < m; ++i) lc += hyperplane[i] * center[i];
  if (lc.is_zero()) {
    throw Error(ErrorKind::DegenerateSpec, center_at_infinity ? "direction lies in the target hyperplane"
                                                             : "center lies on the target hyperplane");
  }
  if (!center_at_infinity && !evaluate(hypersurface, center).is_zero()) {
    throw Error(ErrorKind::NotOnHypersurface, "center is not on the hypersurface");
  }
}

DegreeReport projection_degree(const ProjectionSpec& spec, const ProjectionOptions& opts) {
  spec.validate();
  if (opts.samples < 10) throw Error(ErrorKind::BadParameter, "projection_degree needs at least 10 samples");
  const Field field = spec.hypersurface.field();
  if (field.is_rational()) throw Error(ErrorKind::BadParameter, "projection degree is sampled over a prime field");
  const std::size_t m = spec.hypersurface.nvars();
  const int full_degree = spec.hypersurface.degree();
  // Solve L(q) = 0 for the last coordinate with a nonzero coefficient.
  std::size_t solve_for = m;
  for (std::size_t i = m; i-- > 0;) {
    if (!spec.hyperplane[i].is_zero()) {
      solve_for = i;
      break;
    }
  }
  if (solve_for == m) throw Error(ErrorKind::DegenerateSpec, "zero linear form");
  const FieldElement lead_inv = inverse(spec.hyperplane[solve_for]);

  DegreeReport report;
  report.method = DegreeMethod::StructuralProjection;
  report.prime = field.modulus();
  RandomStream rng(opts.seed);
  std::size_t target = opts.samples;
  std::size_t attempts = 0;
  for (std::size_t round = 0;; ++round) {
    while (report.samples < target) {
      if (++attempts > 100 * target) throw Error(ErrorKind::DegenerateSpec, "too many degenerate targets");
      std::vector<FieldElement> q(m, field.zero());
      FieldElement acc = field.zero();
      for (std::size_t i = 0; i < m; ++i) {
        if (i == solve_for) continue;
        q[i] = random_element(field, rng);
        acc += spec.hyperplane[i] * q[i];
      }
      q[solve_for] = -acc * lead_inv;
      if (evaluate(spec.hypersurface, q).is_zero()) continue;
      UniPoly g(field);
      std::size_t base_mult = 0;
      if (spec.center_at_infinity) {
        g = univariate_restrict(spec.hypersurface, q, spec.center);
      } else {
        std::vector<FieldElement> dir(m, field.zero());
        for (std::size_t i = 0; i < m; ++i) dir[i] = q[i] - spec.center[i];
        g = univariate_restrict(spec.hypersurface, spec.center, dir);
      }
      if (g.is_zero()) throw Error(ErrorKind::DegenerateSpec, "line lies inside the hypersurface");
      // Lines meeting the hypersurface at infinity are not generic.
      if (g.degree() < full_degree) continue;
      if (!spec.center_at_infinity) {
        base_mult = g.zero_root_multiplicity();
        g = g.shift_down(base_mult);
      }
      const int d = squarefree_degree(g);
      report.histogram[static_cast<std::size_t>(d)] += 1;
      ++report.samples;
    }
    // Modal degree, rejecting ties.
    uint64_t best = 0;
    int best_degree = -1;
    bool tie = false;
    for (const auto& [deg, count] : report.histogram) {
      if (count > best) {
        best = count;
        best_degree = static_cast<int>(deg);
        tie = false;
      } else if (count == best) {
        tie = true;
      }
    }
    if (!tie) {
      report.degree = best_degree;
      report.unanimous = report.histogram.size() == 1;
      return report;
    }
    if (round >= opts.max_doublings) throw Error(ErrorKind::Unstable, "modal degree tied after doubling samples");
    target *= 2;
  }
}

// ------------------------------------------------------------ brute force

DegreeReport brute_force_degree(const MapCandidate& c, uint64_t p, const BruteForceOptions& opts) {
  if (!(opts.delta > 0.0 && opts.delta < 1.0)) throw Error(ErrorKind::BadParameter, "delta must lie in (0, 1)");
  if (static_cast<double>(p) <= 2.0 / opts.delta) {
    throw Error(ErrorKind::BadParameter, "prime too small: special fibers could exceed the frequency threshold");
  }
  if (p >= (1ULL << 31)) throw Error(ErrorKind::BadParameter, "brute force needs p < 2^31");
  const Field field = Field::prime(p);
  if (c.field().is_prime_field() && !(c.field() == field)) {
    throw Error(ErrorKind::FieldMismatch, "candidate is defined over " + c.field().name());
  }
  const std::size_t r = c.pair.rank();
  double domain = std::pow(static_cast<double>(p - 1), static_cast<double>(r));
  if (domain > static_cast<double>(opts.cap)) {
    throw Error(ErrorKind::CapExceeded, "(p-1)^r = " + std::to_string(static_cast<uint64_t>(domain)) +
                                            " exceeds the enumeration cap; use projection_degree");
  }
  MapCandidate local = c.over(field);
  if (opts.precompose) {
    local = MapCandidate(local.name, local.pair, act_on_torus(*opts.precompose, local.components));
  }
  FiberHistogram hist = opts.kernel == FiberKernel::Serial ? fiber_histogram_serial(local) : fiber_histogram_parallel(local);
  if (hist.nonempty_fibers == 0) throw Error(ErrorKind::DegenerateSpec, "map is nowhere defined over F_p");

  DegreeReport report;
  report.method = DegreeMethod::BruteForceHistogram;
  report.prime = p;
  report.samples = static_cast<std::size_t>(domain);
  report.histogram = hist.sizes;
  report.defined_points = hist.defined_points;
  report.nonempty_fibers = hist.nonempty_fibers;
  for (const auto& [size, count] : hist.sizes) {
    if (static_cast<double>(count) / static_cast<double>(hist.nonempty_fibers) > opts.delta) {
      report.degree = static_cast<int>(size);
    }
  }
  return report;
}

// -------------------------------------------------------------- isogenies

std::vector<RatFunc> isogeny_components(const TorusLiePair& pair, const IsogenySpec& iso, Field field) {
  const std::size_t m = pair.ambient_dim();
  const auto& free = pair.free_indices();
  if (iso.rank() != free.size()) throw Error(ErrorKind::RankMismatch, "isogeny rank differs from torus rank");
  auto laurent = [&](const std::vector<long long>& exps_over_free) {
    Monomial num, den;
    for (std::size_t b = 0; b < free.size(); ++b) {
      long long e = exps_over_free[b];
      if (e > 0) num.exp[free[b]] = static_cast<uint16_t>(e);
      if (e < 0) den.exp[free[b]] = static_cast<uint16_t>(-e);
    }
    return RatFunc(MultiPoly::monomial(field, m, num, field.one()), MultiPoly::monomial(field, m, den, field.one()));
  };
  std::vector<RatFunc> out = identity_assignment(field, m);
  for (std::size_t a = 0; a < free.size(); ++a) out[free[a]] = laurent(iso.exponents()[a]);
  for (const auto& d : pair.torus_dependencies()) {
    std::vector<long long> composed(free.size(), 0);
    for (std::size_t a = 0; a < free.size(); ++a) {
      const int e = d.exponents[free[a]];
      for (std::size_t b = 0; b < free.size(); ++b) composed[b] += e * iso.exponents()[a][b];
    }
    out[d.index] = laurent(composed);
  }
  return out;
}

bool isogeny_intertwines(const TorusLiePair& pair, const IsogenySpec& iso) {
  const Field q = Field::rationals();
  const std::vector<RatFunc> a = isogeny_components(pair, iso, q);
  for (const auto& g : pair.generators()) {
    const std::vector<RatFunc> gs = torus_substitution(g, q);
    for (std::size_t i = 0; i < a.size(); ++i) {
      RatFunc lhs = reduce_to_free(substitute(a[i], gs), pair, Side::Torus);
      RatFunc rhs = reduce_to_free(substitute(gs[i], a), pair, Side::Torus);
      if (!ratfunc_equal(lhs, rhs)) return false;
    }
  }
  return true;
}

MapCandidate compose_with_isogeny(const MapCandidate& c, const IsogenySpec& iso) {
  if (iso.rank() != c.pair.rank()) throw Error(ErrorKind::RankMismatch, "isogeny rank differs from torus rank");
  if (!isogeny_intertwines(c.pair, iso)) {
    throw Error(ErrorKind::BadParameter, "isogeny does not commute with the Weyl action");
  }
  const std::vector<RatFunc> a = isogeny_components(c.pair, iso, c.field());
  return MapCandidate(c.name + "*isogeny(d=" + std::to_string(iso.kernel_order()) + ")", c.pair,
                      substitute(c.components, a));
}

MapCandidate product_map(const MapCandidate& a, const MapCandidate& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "factors over different fields");
  TorusLiePair pair = product_pair(a.pair, b.pair);
  const std::size_t m = pair.ambient_dim();
  std::vector<RatFunc> comps;
  for (const auto& f : a.components) comps.push_back(f.extend(m, 0));
  for (const auto& f : b.components) comps.push_back(f.extend(m, a.pair.ambient_dim()));
  return MapCandidate(a.name + "x" + b.name, std::move(pair), std::move(comps));
}

}  // namespace cay
