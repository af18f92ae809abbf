#ifndef GORLEF_GNLAB_HPP
#define GORLEF_GNLAB_HPP

#include "gorlef/algebra.hpp"
#include "gorlef/lefschetz.hpp"
#include "gorlef/random.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gorlef {

// A point ([x], [y]) of Gamma_k: x^k y = 0 with y != 0, both in R^1.
struct GammaSample {
  unsigned k = 0;
  AlgebraElement x;
  AlgebraElement y;
  std::size_t kernel_dim_at_x = 0;

  nlohmann::json to_json() const;
};

inline constexpr std::size_t kMaxNilpotentDraws = 64;

// Random x in R^1 (coordinates in [-10, 10]) and a random nonzero y in ker(x^k : R^1 -> R^(k+1)).
GammaSample sample_gamma(const GradedAlgebra& a, unsigned k, std::uint64_t seed = kDefaultSeed);

// Replaces y by a random element with x^k y != 0.
GammaSample corrupt_sample(const GradedAlgebra& a, const GammaSample& s, std::uint64_t seed);

// x^i y^j = 0 in R^(k+1) for all i + j = k + 1, j >= 1.
bool check_ker_coker(const GradedAlgebra& a, const GammaSample& s);

inline const std::vector<long long> kDefaultGgnValues{1, -1, 2, 7};

// (x + t y)^(k+1) = x^(k+1) for every t.
bool check_ggn(const GradedAlgebra& a, const GammaSample& s,
               const std::vector<long long>& t_values = kDefaultGgnValues);

// dim ker(alpha : R^i -> R^(i + deg alpha)); all of R^i when the target degree exceeds N.
std::size_t kernel_dim(const GradedAlgebra& a, const AlgebraElement& alpha, unsigned i);

// Common degree d - 1 of the generators of a regular-sequence algebra, returned as d.
unsigned generator_form_degree(const GradedAlgebra& a);

// h >= (d - 2) dim K^1_eta for eta in R^h, on an algebra cut out by forms of degree d - 1.
bool check_k1_bound(const GradedAlgebra& a, const AlgebraElement& eta);

// (d - 2) dim K^1_(y^(a-1)) <= a - 1, given y^a = 0 and y^(a-1) != 0.
bool tangent_kernel_check(const GradedAlgebra& a, const AlgebraElement& y, unsigned exponent);

struct DegeneratePair {
  AlgebraElement x;  // degree 1, with ker(x : R^2 -> R^3) != 0
  AlgebraElement q;  // degree 2, x q = 0
  std::size_t lines_tried = 0;
  std::size_t k1_dim = 0;  // dim K^1_q
  std::size_t k2_dim = 0;  // dim K^2_q

  bool in_range() const { return (k2_dim == 6 || k2_dim == 7) && k1_dim <= 2; }
  nlohmann::json to_json() const;
};

inline constexpr std::size_t kDefaultLineBudget = 64;
inline constexpr std::uint64_t kMaxScanPrime = 10000;

// Searches random lines x = a + t b in R^1 for roots of det(x : R^2 -> R^3) by scanning
// every t in F_p. Needs a prime field with p <= 10^4 and R^2, R^3 of equal dimension.
std::optional<DegeneratePair> degenerate_pair_search(const GradedAlgebra& a,
                                                     std::uint64_t seed = kDefaultSeed,
                                                     std::size_t budget = kDefaultLineBudget);

// Named boolean assertions with the offending data attached to failures, plus notes.
class CheckReport {
 public:
  struct Entry {
    std::string name;
    bool passed = false;
    nlohmann::json detail;
  };

  void check(const std::string& name, bool passed, nlohmann::json detail = nullptr);
  void note(const std::string& name, nlohmann::json detail);
  void merge(const CheckReport& other);

  bool passed() const;
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  nlohmann::json to_json(const std::string& title) const;
  std::string to_text(const std::string& title) const;

 private:
  std::vector<Entry> entries_;
  nlohmann::json notes_ = nlohmann::json::object();
};

// Samples Gamma_k `samples` times and runs the Ker-Coker and GGN checks on each sample,
// together with a corrupted copy that both checks must reject. An empty fiber
// (SlpEvidence) is reported as a note and stops the sampling.
CheckReport gamma_check(const GradedAlgebra& a, unsigned k, std::size_t samples,
                        std::uint64_t seed = kDefaultSeed, nlohmann::json* sample_log = nullptr);

// The cubic x0 x3^2 + 2 x1 x3 x4 + x2 x4^2 and its algebra.
Polynomial perazzo_form();
GradedAlgebra perazzo_algebra();

CheckReport perazzo_fixture(std::size_t gamma_samples = 32, std::size_t y2_samples = 100,
                            std::uint64_t seed = kDefaultSeed);
CheckReport gn_map_check(const GradedAlgebra& perazzo, std::size_t x_samples = 16,
                         std::uint64_t seed = kDefaultSeed);

// One row of an experiment: a random draw and what happened to it.
struct TrialRecord {
  std::size_t trial = 0;
  std::string status;  // "pass", "fail" or "skipped"
  nlohmann::json data;
};

struct TrialFailure {
  std::size_t trial = 0;
  std::string stage;
  std::string detail;
};

struct ExperimentReport {
  std::string family;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t skipped = 0;
  std::size_t passes = 0;
  std::vector<TrialFailure> failures;
  std::vector<TrialRecord> records;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

struct ExperimentOptions {
  std::size_t trials = 20;
  std::uint64_t seed = kDefaultSeed;
  long long coeff_box = kCoefficientBox;
  bool include_monomial = true;  // trial 0 is the monomial complete intersection
  std::size_t probe_trials = kDefaultTrials;
  unsigned jobs = 1;
};

using TrialCallback = std::function<void(const TrialRecord&)>;

// Random complete intersections of 5 quadrics in 5 variables: Hilbert function
// (1,5,10,10,5,1) and witnesses for SLP_1 and SLP_2.
ExperimentReport theorem_c_experiment(const ExperimentOptions& options,
                                      const TrialCallback& on_trial = nullptr);

// Random non-cone forms in 2..4 variables of degree 3..5: SLP_1 witness.
ExperimentReport theorem_b_experiment(const ExperimentOptions& options,
                                      const TrialCallback& on_trial = nullptr);

std::vector<std::string> experiment_families();
ExperimentReport run_experiment(const std::string& family, const ExperimentOptions& options,
                                const TrialCallback& on_trial = nullptr);

// Helpers shared by the experiments and the tests.
Polynomial random_form(std::size_t n_vars, unsigned degree, Rng& rng, long long box,
                       Field field = Field::rational());
std::vector<Polynomial> monomial_quadrics(std::size_t n_vars, Field field = Field::rational());

}  // namespace gorlef

#endif  // GORLEF_GNLAB_HPP
