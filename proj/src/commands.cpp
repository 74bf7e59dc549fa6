#include "cayley/commands.hpp"

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "cayley/constructions.hpp"
#include "cayley/fiber_kernels.hpp"

namespace cay::cli {

namespace {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string describe(const IdentityCheck& c) {
  std::string out = c.mode;
  if (c.mode == "sampled") {
    std::ostringstream s;
    s << std::setprecision(3) << c.failure_probability;
    out += ", failure bound " + s.str();
  }
  if (!c.detail.empty()) out += "; " + c.detail;
  if (c.witness) {
    out += "; witness (";
    for (std::size_t i = 0; i < c.witness->size(); ++i) out += (i ? ", " : "") + (*c.witness)[i].to_string();
    out += ")";
  }
  return out;
}

std::string histogram_text(const std::map<std::size_t, uint64_t>& h) {
  std::string out;
  for (const auto& [k, v] : h) out += (out.empty() ? "" : ", ") + std::to_string(k) + ":" + std::to_string(v);
  return out;
}

void require_prime(uint64_t p) {
  if (!is_prime(p)) throw UsageError("--prime " + std::to_string(p) + " is not prime");
}

/// Records every element's equivariance result as one check.
void add_equivariance(Report& r, const std::string& name, const EquivarianceReport& eq) {
  std::size_t passed = 0;
  std::string failures;
  for (const auto& e : eq.entries) {
    if (e.check.pass) {
      ++passed;
    } else {
      failures += " " + e.element.to_string() + ": " + describe(e.check) + ";";
    }
  }
  std::string mode = eq.entries.empty() ? "" : eq.entries.front().check.mode;
  r.add(name, eq.all_pass(),
        std::to_string(passed) + "/" + std::to_string(eq.entries.size()) + " elements (" + mode + ")" + failures);
}

}  // namespace

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass ? Status::Pass : Status::Fail, std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
  checks.push_back({std::move(name), Status::Skipped, std::move(detail)});
}

int Report::exit_code() const {
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return 1;
  }
  return 0;
}

nlohmann::json Report::to_json(bool include_time) const {
  nlohmann::json j;
  j["command"] = command;
  j["params"] = params;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  if (degree) j["degree"] = *degree;
  if (histogram) {
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [k, v] : *histogram) h[std::to_string(k)] = v;
    j["histogram"] = h;
  }
  if (!data.is_null()) j["data"] = data;
  if (include_time) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << command;
  for (const auto& [k, v] : params.items()) out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  out << "\n";
  for (const auto& line : text_lines) out << line << "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(7)
        << status_name(c.status) << " " << c.detail << "\n";
  }
  if (degree) out << "degree: " << *degree << "\n";
  if (histogram) out << "histogram (fiber size:count): " << histogram_text(*histogram) << "\n";
  out << (exit_code() == 0 ? "OK" : "FAILED") << " (" << std::fixed << std::setprecision(1) << elapsed_ms << " ms)\n";
  return out.str();
}

bool is_usage_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadParameter:
    case ErrorKind::NoRoot:
    case ErrorKind::BadCharacteristic:
    case ErrorKind::CharacteristicTooSmall:
    case ErrorKind::BadRoot:
    case ErrorKind::FieldMismatch:
      return true;
    default:
      return false;
  }
}

// ------------------------------------------------------------- verify-sln

Report verify_sln(const SlnOptions& opts) {
  Stopwatch clock;
  Report r;
  r.command = "verify-sln";
  if (opts.n < 2 || opts.n > 16) throw UsageError("--n must lie in 2..16");
  const auto n = static_cast<std::size_t>(opts.n);
  if (opts.samples < 10) throw UsageError("--samples must be at least 10");
  r.params["n"] = n;
  r.params["seed"] = opts.seed;
  r.params["samples"] = opts.samples;
  r.params["zeta_index"] = opts.zeta ? nlohmann::json(*opts.zeta) : nlohmann::json("all");

  r.add("irreducibility-certificate", sln_irreducibility_certificate(n),
        "restrictions to lines x_j = 1 (j != i) have degree 1; constant term 1");
  if (n == 2) {
    r.params["prime"] = nullptr;
    try {
      (void)sln_center(n, find_prime_with_root(n, 211), 1);
      r.add("center", true, "");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HyperplaneCase) throw;
      r.add("center", false, e.what());
    }
    r.elapsed_ms = clock.ms();
    return r;
  }
  const uint64_t p = opts.prime ? *opts.prime : find_prime_with_root(n, 211);
  require_prime(p);
  if (p % n != 1) throw UsageError("--prime must be 1 mod n (" + std::to_string(p) + " mod " + std::to_string(n) + ")");
  if (p <= 2 * n) throw UsageError("--prime too small for the dominance check");
  r.params["prime"] = p;
  std::vector<std::size_t> zetas;
  if (opts.zeta) {
    if (*opts.zeta == 0 || *opts.zeta >= n) throw UsageError("--zeta must lie in 1..n-1 (0 selects zeta = 1)");
    zetas.push_back(*opts.zeta);
  } else {
    for (std::size_t k = 1; k < n; ++k) zetas.push_back(k);
  }

  VerifyOptions vo;
  vo.seed = opts.seed;
  vo.sample_points = opts.samples;
  ProjectionOptions po;
  po.samples = opts.samples;
  po.seed = opts.seed;
  nlohmann::json per_zeta = nlohmann::json::array();
  std::optional<int> common;
  bool consistent = true;
  for (std::size_t k : zetas) {
    const std::string pre = "zeta=" + std::to_string(k) + "/";
    nlohmann::json entry{{"zeta_index", k}};
    try {
      const SlnCenter c = sln_center(n, p, k);
      entry["zeta"] = c.zeta.residue();
      entry["a"] = c.a.residue();
      r.add(pre + "center-on-hypersurface", c.on_hypersurface, "f(a,...,a) = 0 with a = " + c.a.to_string());
      r.add(pre + "center-off-cartan", c.off_cartan, "n*a != 0");
      r.add(pre + "center-smooth", c.smooth, "gcd((1+t)^n - t^n, (1+t)^(n-1) - t^(n-1)) is constant");
      const MapCandidate cand = sln_full_candidate(n, p, k);
      r.add(pre + "containment", check_target_containment(cand, vo).pass, "component sum vanishes");
      add_equivariance(r, pre + "generator-equivariance", check_equivariance(cand, cand.pair.generators(), vo));
      r.add(pre + "dominance", check_dominance(cand, p, 20, opts.seed), "full-rank Jacobian over F_" + std::to_string(p));
      const DegreeReport d = projection_degree(sln_projection_spec(n, p, k), po);
      entry["degree"] = d.degree;
      entry["unanimous"] = d.unanimous;
      r.add(pre + "projection-degree", d.degree == static_cast<int>(n) - 2,
            "degree " + std::to_string(d.degree) + " over " + std::to_string(d.samples) + " samples (" +
                histogram_text(d.histogram) + ")");
      if (common && *common != d.degree) consistent = false;
      common = d.degree;
    } catch (const Error& e) {
      if (is_usage_error(e.kind())) throw;
      r.add(pre + "error", false, e.what());
      consistent = false;
    }
    per_zeta.push_back(entry);
  }
  r.data = {{"zeta_choices", per_zeta}};
  if (common && consistent) r.degree = *common;
  r.elapsed_ms = clock.ms();
  return r;
}

// -------------------------------------------------------------- verify-g2

Report verify_g2(const G2Options& opts) {
  Stopwatch clock;
  Report r;
  r.command = "verify-g2";
  if (opts.prime == 3) throw Error(ErrorKind::BadCharacteristic, "characteristic 3 has no 1/3");
  require_prime(opts.prime);
  if (opts.prime <= 7) throw UsageError("--prime must exceed 7");
  r.params["prime"] = opts.prime;
  r.params["brute"] = opts.brute;
  r.params["seed"] = opts.seed;
  r.params["samples"] = opts.samples;
  const Field q = Field::rationals();
  const Field fp = Field::prime(opts.prime);

  const QuadricPullback pb = g2_quadric_pullback(q);
  r.add("quadric-pullback", pb.matches, "numerator of y1 y2 y3 - 1 = " + pb.numerator.to_string());
  const MapCandidate cand = g2_candidate(q);
  VerifyOptions vo;
  vo.seed = opts.seed;
  const GroupClosure w = cand.pair.closure();
  r.add("weyl-order", w.size() == 12, std::to_string(w.size()) + " elements");
  r.add("containment", check_target_containment(cand, vo).pass, "component sum vanishes");
  add_equivariance(r, "equivariance", check_equivariance(cand, w.elements, vo));
  r.add("dominance", check_dominance(cand, opts.prime, 20, opts.seed), "full-rank Jacobian over F_" + std::to_string(opts.prime));
  ProjectionOptions po;
  po.samples = opts.samples;
  po.seed = opts.seed;
  const DegreeReport d = projection_degree(g2_projection_spec(fp), po);
  r.add("projection-degree", d.degree == 2,
        "degree " + std::to_string(d.degree) + " over " + std::to_string(d.samples) + " samples");
  r.degree = d.degree;
  nlohmann::json data{{"projection_histogram", nlohmann::json::object()}};
  for (const auto& [k, v] : d.histogram) data["projection_histogram"][std::to_string(k)] = v;

  if (opts.brute) {
    try {
      const DegreeReport b = brute_force_degree(cand.over(fp), opts.prime);
      const uint64_t twos = b.histogram.count(2) ? b.histogram.at(2) : 0;
      const double freq = static_cast<double>(twos) / static_cast<double>(b.nonempty_fibers);
      std::ostringstream s;
      s << "generic fiber " << b.degree << "; size-2 fibers " << twos << "/" << b.nonempty_fibers << " = "
        << std::setprecision(4) << freq;
      r.add("brute-force", b.degree == 2 && freq > 0.10, s.str());
      r.histogram = b.histogram;
      data["brute_degree"] = b.degree;
      data["defined_points"] = b.defined_points;
      data["nonempty_fibers"] = b.nonempty_fibers;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      r.add("brute-force", false, std::string(e.what()) + "; choose a smaller --prime");
    }
  }
  r.data = data;
  r.elapsed_ms = clock.ms();
  return r;
}

// ----------------------------------------------------------------- sextic

Report sextic(const SexticOptions& opts) {
  Stopwatch clock;
  Report r;
  r.command = "sextic";
  require_prime(opts.prime);
  r.params["check"] = opts.check;
  r.params["prime"] = opts.prime;
  r.params["samples"] = opts.samples;
  r.params["seed"] = opts.seed;
  static const std::vector<std::string> names{"s1", "s2", "t1", "t2"};

  const SexticElimination e = g2_sextic_elimination();
  nlohmann::json coeffs = nlohmann::json::object();
  for (std::size_t k = e.coefficients.size(); k-- > 0;) {
    const std::string c = e.coefficients[k].to_string(names);
    coeffs["t1^" + std::to_string(k)] = c;
    r.text_lines.push_back("t1^" + std::to_string(k) + ": " + c);
  }
  r.data = {{"coefficients", coeffs}, {"resultant_terms", e.resultant.size()}};
  r.add("elimination", e.coefficients.size() == 7 && e.coefficients.back().is_constant(),
        "resultant in t2 normalized to a monic sextic in t1");
  if (opts.check) {
    const std::size_t ref_hits = sextic_consistency(e.reference, opts.prime, opts.samples, opts.seed);
    try {
      require_reference_match(e);
      r.add("reference-match", true, "all 7 coefficients agree");
    } catch (const Error& err) {
      r.add("reference-match", false,
            std::string(err.what()) + "; reference polynomial vanishes on " + std::to_string(ref_hits) + "/" +
                std::to_string(opts.samples) + " consistent points");
    }
    r.add("recovery-formula", verify_recovery_formula(), "t2 = (t1^2 - 1)/(t1^2 s1 + t1 s2 - t1^3 - t1^2 + t1 + 1)");
    const std::size_t hits = sextic_consistency(e.coefficients, opts.prime, opts.samples, opts.seed);
    r.add("consistency", hits == opts.samples,
          std::to_string(hits) + "/" + std::to_string(opts.samples) + " samples over F_" + std::to_string(opts.prime) +
              " vanish");
  }
  r.elapsed_ms = clock.ms();
  return r;
}

// ----------------------------------------------------------- brute-degree

uint64_t default_brute_prime(const std::string& map) {
  if (map == "sl3") return 211;
  if (map == "sl4") return 241;
  if (map == "g2") return 1009;
  return 101;
}

MapCandidate builtin_map(const std::string& name, uint64_t p) {
  const Field f = Field::prime(p);
  const std::size_t m = 1;
  const RatFunc t = RatFunc::variable(f, m, 0), one = RatFunc::constant(f, m, 1);
  if (name == "pgl2") return MapCandidate("pgl2", pgl2_pair(), {(t - one) / (t + one)});
  if (name == "sl2") return MapCandidate("sl2", sl2_pair(), {(one - t) / (one + t)});
  if (name == "sl2-sq-isogeny") return compose_with_isogeny(builtin_map("sl2", p), IsogenySpec(std::vector<std::vector<long long>>{{2}}));
  if (name == "sl3" || name == "sl4") {
    const std::size_t n = name == "sl3" ? 3 : 4;
    if (p % n != 1) throw UsageError(name + " needs a prime that is 1 mod " + std::to_string(n));
    return sln_full_candidate(n, p, 1);
  }
  if (name == "g2") return g2_candidate(f);
  if (name.starts_with("product:")) {
    const std::string rest = name.substr(8);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw UsageError("product maps are written product:<a>,<b>");
    return product_map(builtin_map(rest.substr(0, comma), p), builtin_map(rest.substr(comma + 1), p));
  }
  throw UsageError("unknown map '" + name + "'");
}

Report brute_degree(const BruteOptions& opts) {
  Stopwatch clock;
  Report r;
  r.command = "brute-degree";
  const uint64_t p = opts.prime ? *opts.prime : default_brute_prime(opts.map);
  require_prime(p);
  r.params["map"] = opts.map;
  r.params["prime"] = p;
  r.params["seed"] = opts.seed;
  r.params["kernel"] = opts.serial ? "serial" : "parallel";
  const MapCandidate cand = builtin_map(opts.map, p);
  BruteForceOptions bo;
  bo.kernel = opts.serial ? FiberKernel::Serial : FiberKernel::Parallel;
  try {
    const DegreeReport d = brute_force_degree(cand, p, bo);
    r.add("enumeration", true,
          std::to_string(d.samples) + " torus points, " + std::to_string(d.defined_points) + " defined, " +
              std::to_string(d.nonempty_fibers) + " nonempty fibers");
    r.degree = d.degree;
    r.histogram = d.histogram;
    r.data = {{"rank", cand.pair.rank()}, {"delta", bo.delta}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    r.add("enumeration", false, std::string(e.what()) + "; pick a smaller --prime or use the projection degree");
  }
  r.elapsed_ms = clock.ms();
  return r;
}

// ------------------------------------------------------------------ table

Report table() {
  Stopwatch clock;
  Report r;
  r.command = "table";
  nlohmann::json rows = nlohmann::json::array();
  std::size_t width = 0;
  const auto entries = known_table();
  for (const auto& k : entries) width = std::max(width, k.group.size());
  for (const auto& k : entries) {
    rows.push_back({{"group", k.group}, {"kind", to_string(k.kind)}, {"value", k.value}, {"provenance", k.provenance}});
    std::ostringstream line;
    line << std::left << std::setw(static_cast<int>(width)) << k.group << "  " << std::setw(11) << to_string(k.kind)
         << "  " << std::right << std::setw(2) << k.value << "  " << k.provenance;
    r.text_lines.push_back(line.str());
  }
  r.data = rows;
  r.add("table", !entries.empty(), std::to_string(entries.size()) + " entries");
  r.elapsed_ms = clock.ms();
  return r;
}

// -------------------------------------------------------------- classical

Report classical(const ClassicalOptions& opts) {
  Stopwatch clock;
  Report r;
  r.command = "classical";
  if (opts.n < 2 || opts.n > 12) throw UsageError("--n must lie in 2..12");
  if (opts.trials == 0) throw UsageError("--trials must be positive");
  const auto n = static_cast<std::size_t>(opts.n);
  r.params["n"] = n;
  r.params["trials"] = opts.trials;
  r.params["seed"] = opts.seed;
  const ClassicalSuiteResult s = classical_suite(n, opts.trials, opts.seed);
  const std::string run = std::to_string(s.trials - s.singular);
  r.add("orthogonality", s.orthogonal == s.trials - s.singular, std::to_string(s.orthogonal) + "/" + run + " with O^T O = I");
  r.add("involution", s.involution == s.trials - s.singular, std::to_string(s.involution) + "/" + run);
  r.add("conjugation-equivariance", s.equivariant == s.trials - s.singular, std::to_string(s.equivariant) + "/" + run);
  // X = -I has eigenvalue -1, so I + X is singular.
  const Field q = Field::rationals();
  SquareMatrix x(q, n);
  for (std::size_t i = 0; i < n; ++i) x.at(i, i) = -q.one();
  try {
    (void)classical_cayley(x);
    r.add("singular-probe", false, "X = -I was accepted");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularDenominator) throw;
    r.skip("singular-probe", "X = -I: det(I + X) = 0, precondition fails");
  }
  r.data = {{"singular_draws", s.singular}};
  r.elapsed_ms = clock.ms();
  return r;
}

}  // namespace cay::cli
