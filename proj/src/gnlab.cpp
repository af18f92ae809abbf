#include "gorlef/gnlab.hpp"

#include "gorlef/error.hpp"
#include "gorlef/report.hpp"

#include <sstream>

namespace gorlef {

namespace {

AlgebraElement random_element(const GradedAlgebra& a, unsigned degree, Rng& rng, long long lo,
                              long long hi) {
  const std::size_t n = a.dim(degree);
  if (n == 0) throw DegenerateAlgebra("R^" + std::to_string(degree) + " is zero");
  for (;;) {
    Vector coords(n);
    for (auto& c : coords) c = a.field().from_int(rng.uniform(lo, hi));
    if (!is_zero_vector(coords)) return a.element(degree, std::move(coords));
  }
}

AlgebraElement random_combination(const GradedAlgebra& a, unsigned degree,
                                  const std::vector<Vector>& vectors, Rng& rng) {
  for (;;) {
    AlgebraElement y = a.zero(degree);
    for (const auto& v : vectors) {
      y = a.add(y, a.scale(a.element(degree, v), a.field().from_int(rng.uniform(-kCoefficientBox,
                                                                                 kCoefficientBox))));
    }
    if (!y.is_zero()) return y;
  }
}

}  // namespace

nlohmann::json GammaSample::to_json() const {
  return {{"k", k},
          {"x", gorlef::to_json(x.coords)},
          {"y", gorlef::to_json(y.coords)},
          {"kernel_dim_at_x", kernel_dim_at_x}};
}

GammaSample sample_gamma(const GradedAlgebra& a, unsigned k, std::uint64_t seed) {
  const unsigned n = a.socle_degree();
  if (k < 1 || n < 3 || k > n - 2) {
    throw DomainError("Gamma_k sampling needs 1 <= k <= N-2 (k = " + std::to_string(k) +
                      ", N = " + std::to_string(n) + ")");
  }
  Rng rng(seed);
  for (std::size_t draw = 0; draw < kMaxNilpotentDraws; ++draw) {
    AlgebraElement x = random_element(a, 1, rng, -kCoefficientBox, kCoefficientBox);
    AlgebraElement xk = a.power(x, k);
    if (xk.is_zero()) continue;
    KernelResult ker = rank_kernel(a.mul_map(xk, 1));
    if (ker.kernel_basis.empty()) {
      throw SlpEvidence("x^" + std::to_string(k) + " : R^1 -> R^" + std::to_string(k + 1) +
                        " is injective at the sampled x; the fiber of Gamma_" + std::to_string(k) +
                        " is empty");
    }
    GammaSample s;
    s.k = k;
    s.kernel_dim_at_x = ker.kernel_basis.size();
    s.y = random_combination(a, 1, ker.kernel_basis, rng);
    s.x = std::move(x);
    return s;
  }
  throw DegenerateAlgebra("x^" + std::to_string(k) + " vanished for " +
                          std::to_string(kMaxNilpotentDraws) + " consecutive samples");
}

GammaSample corrupt_sample(const GradedAlgebra& a, const GammaSample& s, std::uint64_t seed) {
  Rng rng(seed);
  const AlgebraElement xk = a.power(s.x, s.k);
  for (std::size_t draw = 0; draw < kMaxNilpotentDraws; ++draw) {
    AlgebraElement y = random_element(a, 1, rng, -kCoefficientBox, kCoefficientBox);
    if (!a.multiply(xk, y).is_zero()) {
      GammaSample out = s;
      out.y = std::move(y);
      return out;
    }
  }
  throw DegenerateAlgebra("x^k annihilates every sampled element of R^1");
}

bool check_ker_coker(const GradedAlgebra& a, const GammaSample& s) {
  for (unsigned j = 1; j <= s.k + 1; ++j) {
    if (!a.multiply(a.power(s.x, s.k + 1 - j), a.power(s.y, j)).is_zero()) return false;
  }
  return true;
}

bool check_ggn(const GradedAlgebra& a, const GammaSample& s, const std::vector<long long>& t_values) {
  const AlgebraElement target = a.power(s.x, s.k + 1);
  for (long long t : t_values) {
    AlgebraElement shifted = a.add(s.x, a.scale(s.y, a.field().from_int(t)));
    if (a.power(shifted, s.k + 1) != target) return false;
  }
  return true;
}

std::size_t kernel_dim(const GradedAlgebra& a, const AlgebraElement& alpha, unsigned i) {
  if (i + alpha.degree > a.socle_degree()) return a.dim(i);
  return a.dim(i) - rank(a.mul_map(alpha, i));
}

unsigned generator_form_degree(const GradedAlgebra& a) {
  if (a.presentation() != PresentationKind::regular_sequence) {
    throw DomainError("expected an algebra given by a regular sequence");
  }
  const auto degrees = a.generator_degrees();
  for (unsigned e : degrees) {
    if (e != degrees.front()) throw DomainError("generators of different degrees");
  }
  if (degrees.front() < 2) throw DomainError("generators must have degree at least 2");
  return degrees.front() + 1;
}

bool check_k1_bound(const GradedAlgebra& a, const AlgebraElement& eta) {
  const unsigned d = generator_form_degree(a);
  if (eta.is_zero()) throw DomainError("K^1 bound needs a nonzero element");
  const unsigned h = eta.degree;
  if (h < 1 || h > a.socle_degree()) throw DomainError("K^1 bound needs 1 <= h <= N");
  return h >= (d - 2) * kernel_dim(a, eta, 1);
}

bool tangent_kernel_check(const GradedAlgebra& a, const AlgebraElement& y, unsigned exponent) {
  const unsigned d = generator_form_degree(a);
  if (y.degree != 1) throw DomainError("y must lie in R^1");
  const unsigned n = a.socle_degree();
  if (exponent < 1 || exponent - 1 > n) throw DomainError("y^(a-1) must be nonzero");
  const bool top_zero = exponent > n || a.power(y, exponent).is_zero();
  if (!top_zero) throw DomainError("y^a must vanish");
  AlgebraElement below = a.power(y, exponent - 1);
  if (below.is_zero()) throw DomainError("y^(a-1) must be nonzero");
  return (d - 2) * kernel_dim(a, below, 1) <= exponent - 1;
}

nlohmann::json DegeneratePair::to_json() const {
  return {{"x", gorlef::to_json(x.coords)},
          {"q", gorlef::to_json(q.coords)},
          {"lines_tried", lines_tried},
          {"k1_dim", k1_dim},
          {"k2_dim", k2_dim},
          {"in_range", in_range()}};
}

std::optional<DegeneratePair> degenerate_pair_search(const GradedAlgebra& a, std::uint64_t seed,
                                                     std::size_t budget) {
  const Field& f = a.field();
  if (f.is_rational()) throw DomainError("degenerate pair search needs a prime field");
  const std::uint64_t p = f.characteristic();
  if (p > kMaxScanPrime) throw DomainError("prime too large for an exhaustive root scan");
  if (a.socle_degree() < 4 || a.dim(2) != a.dim(3)) {
    throw DomainError("degenerate pair search needs dim R^2 = dim R^3 and N >= 4");
  }
  const long long top = static_cast<long long>(p) - 1;
  for (std::size_t line = 0; line < budget; ++line) {
    Rng rng(seed, line);
    AlgebraElement base = a.zero(1);
    for (auto& c : base.coords) c = f.from_int(rng.uniform(0, top));
    AlgebraElement dir = random_element(a, 1, rng, 0, top);
    const Matrix ma = a.mul_map(base, 2);
    const Matrix mb = a.mul_map(dir, 2);
    for (std::uint64_t t = 0; t < p; ++t) {
      const Scalar ts = f.from_int(static_cast<long long>(t));
      if (det_ff(ma + ts * mb) != 0) continue;
      AlgebraElement x = a.add(base, a.scale(dir, ts));
      if (x.is_zero()) continue;
      KernelResult ker = rank_kernel(a.mul_map(x, 2));
      if (ker.kernel_basis.empty()) continue;
      DegeneratePair out;
      out.q = a.element(2, ker.kernel_basis.front());
      out.x = std::move(x);
      out.lines_tried = line + 1;
      out.k1_dim = kernel_dim(a, out.q, 1);
      out.k2_dim = kernel_dim(a, out.q, 2);
      return out;
    }
  }
  return std::nullopt;
}

CheckReport gamma_check(const GradedAlgebra& a, unsigned k, std::size_t samples, std::uint64_t seed,
                        nlohmann::json* sample_log) {
  CheckReport r;
  bool ker_coker = true, ggn = true, controls = true;
  std::size_t drawn = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (std::size_t i = 0; i < samples; ++i) {
    GammaSample s;
    try {
      s = sample_gamma(a, k, derive_seed(seed, i));
    } catch (const SlpEvidence& e) {
      r.note("fiber_empty", {{"sample", i}, {"detail", e.what()}});
      break;
    }
    ++drawn;
    const GammaSample c = corrupt_sample(a, s, derive_seed(seed, samples + i));
    const bool ok_kc = check_ker_coker(a, s);
    const bool ok_ggn = check_ggn(a, s);
    const bool ok_ctl = !check_ker_coker(a, c) && !check_ggn(a, c);
    ker_coker &= ok_kc;
    ggn &= ok_ggn;
    controls &= ok_ctl;
    if (!(ok_kc && ok_ggn && ok_ctl)) bad.push_back(s.to_json());
    if (sample_log) sample_log->push_back(s.to_json());
  }
  r.note("samples_drawn", drawn);
  const nlohmann::json detail = {{"failing_samples", bad}};
  r.check("gamma.ker_coker", ker_coker, detail);
  r.check("gamma.ggn", ggn, detail);
  r.check("gamma.negative_controls_fail", controls, detail);
  return r;
}

void CheckReport::check(const std::string& name, bool passed, nlohmann::json detail) {
  entries_.push_back({name, passed, std::move(detail)});
}

void CheckReport::note(const std::string& name, nlohmann::json detail) { notes_[name] = std::move(detail); }

void CheckReport::merge(const CheckReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  for (auto it = other.notes_.begin(); it != other.notes_.end(); ++it) notes_[it.key()] = it.value();
}

bool CheckReport::passed() const {
  for (const auto& e : entries_) {
    if (!e.passed) return false;
  }
  return true;
}

nlohmann::json CheckReport::to_json(const std::string& title) const {
  nlohmann::json assertions = nlohmann::json::object();
  nlohmann::json failures = nlohmann::json::object();
  for (const auto& e : entries_) {
    assertions[e.name] = e.passed;
    if (!e.passed) failures[e.name] = e.detail;
  }
  return {{"schema", kSchemaVersion}, {"report", title},     {"passed", passed()},
          {"assertions", assertions}, {"failures", failures}, {"notes", notes_}};
}

std::string CheckReport::to_text(const std::string& title) const {
  std::ostringstream out;
  std::size_t ok = 0;
  for (const auto& e : entries_) {
    out << (e.passed ? "PASS " : "FAIL ") << e.name;
    if (!e.passed && !e.detail.is_null()) out << ": " << e.detail.dump();
    out << '\n';
    ok += e.passed;
  }
  for (auto it = notes_.begin(); it != notes_.end(); ++it) {
    out << "NOTE " << it.key() << ": " << it.value().dump() << '\n';
  }
  out << title << ": " << (passed() ? "PASS" : "FAIL") << " (" << ok << "/" << entries_.size()
      << " assertions)\n";
  return out.str();
}

}  // namespace gorlef
