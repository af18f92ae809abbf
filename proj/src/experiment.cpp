#include "gorlef/apolarity.hpp"
#include "gorlef/error.hpp"
#include "gorlef/gnlab.hpp"
#include "gorlef/report.hpp"

#include <atomic>
#include <thread>

namespace gorlef {

namespace {

constexpr std::size_t kTheoremCVars = 5;
constexpr std::size_t kMaxConeDraws = 64;

nlohmann::json poly_strings(const std::vector<Polynomial>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

void skip(TrialRecord& rec, const std::string& why) {
  rec.status = "skipped";
  rec.data["skip_reason"] = why;
}

void fail(TrialRecord& rec, const std::string& stage, const std::string& why) {
  rec.status = "fail";
  rec.data["failure"] = {{"stage", stage}, {"detail", why}};
}

TrialRecord theorem_c_trial(const ExperimentOptions& o, std::size_t t) {
  TrialRecord rec;
  rec.trial = t;
  std::vector<Polynomial> gens;
  if (o.include_monomial && t == 0) {
    gens = monomial_quadrics(kTheoremCVars);
    rec.data["draw"] = "monomial";
  } else {
    Rng rng(o.seed, t);
    for (std::size_t i = 0; i < kTheoremCVars; ++i) gens.push_back(random_form(kTheoremCVars, 2, rng, o.coeff_box));
    rec.data["draw"] = "random";
  }
  rec.data["generators"] = poly_strings(gens);
  rec.data["generator_degrees"] = std::vector<unsigned>(kTheoremCVars, 2);
  for (const auto& g : gens) {
    if (g.is_zero()) {
      skip(rec, "zero generator");
      return rec;
    }
  }
  std::optional<GradedAlgebra> a;
  try {
    a = GradedAlgebra::from_regular_sequence(gens);
  } catch (const NotRegularSequence& e) {
    skip(rec, e.what());
    return rec;
  }
  rec.data["hilbert"] = a->hilbert();
  if (a->hilbert() != std::vector<std::size_t>{1, 5, 10, 10, 5, 1}) {
    fail(rec, "hilbert", "unexpected Hilbert function");
    return rec;
  }
  const std::uint64_t probe_seed = derive_seed(o.seed, t);
  const ProbeReport slp1 = lefschetz_probe(*a, LefschetzKind::strong, 1, o.probe_trials, probe_seed);
  const ProbeReport slp2 = lefschetz_probe(*a, LefschetzKind::strong, 2, o.probe_trials, probe_seed);
  rec.data["slp1"] = slp1.to_json();
  rec.data["slp2"] = slp2.to_json();
  if (!slp1.holds()) {
    fail(rec, "slp1", "max rank " + std::to_string(slp1.max_rank) + " of 5");
  } else if (!slp2.holds()) {
    fail(rec, "slp2", "max rank " + std::to_string(slp2.max_rank) + " of 10");
  } else {
    rec.status = "pass";
  }
  return rec;
}

TrialRecord theorem_b_trial(const ExperimentOptions& o, std::size_t t) {
  TrialRecord rec;
  rec.trial = t;
  Rng rng(o.seed, t);
  const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
  const auto d = static_cast<unsigned>(rng.uniform(3, 5));
  rec.data["n_vars"] = n;
  rec.data["degree"] = d;
  std::optional<Polynomial> form;
  std::size_t resampled = 0;
  for (std::size_t draw = 0; draw < kMaxConeDraws; ++draw) {
    Polynomial g = random_form(n, d, rng, o.coeff_box);
    if (!g.is_zero() && !is_cone(g)) {
      form = std::move(g);
      break;
    }
    ++resampled;
  }
  rec.data["cone_resamples"] = resampled;
  if (!form) {
    skip(rec, "no non-cone form drawn");
    return rec;
  }
  rec.data["form"] = form->to_string();
  const GradedAlgebra a = GradedAlgebra::from_inverse_system(*form);
  rec.data["hilbert"] = a.hilbert();
  const ProbeReport slp1 = lefschetz_probe(a, LefschetzKind::strong, 1, o.probe_trials, derive_seed(o.seed, t));
  rec.data["slp1"] = slp1.to_json();
  if (slp1.holds()) {
    rec.status = "pass";
  } else {
    fail(rec, "slp1", "max rank " + std::to_string(slp1.max_rank) + " of " +
                          std::to_string(slp1.target_rank));
  }
  return rec;
}

using TrialFn = TrialRecord (*)(const ExperimentOptions&, std::size_t);

// Runs trials in index order (or on worker threads) and reports them in index order.
ExperimentReport run_trials(const std::string& family, const ExperimentOptions& o, TrialFn fn,
                            const TrialCallback& on_trial) {
  if (o.trials == 0) throw DomainError("experiment needs at least one trial");
  std::vector<TrialRecord> records(o.trials);
  const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(o.trials)));
  if (jobs == 1) {
    for (std::size_t t = 0; t < o.trials; ++t) {
      records[t] = fn(o, t);
      if (on_trial) on_trial(records[t]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        try {
          for (std::size_t t = next++; t < o.trials; t = next++) records[t] = fn(o, t);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    if (on_trial) {
      for (const auto& rec : records) on_trial(rec);
    }
  }

  ExperimentReport report;
  report.family = family;
  report.trials = o.trials;
  report.seed = o.seed;
  for (auto& rec : records) {
    if (rec.status == "skipped") {
      ++report.skipped;
    } else if (rec.status == "pass") {
      ++report.passes;
    } else {
      const auto& f = rec.data["failure"];
      report.failures.push_back({rec.trial, f["stage"], f["detail"]});
    }
  }
  report.records = std::move(records);
  return report;
}

}  // namespace

Polynomial random_form(std::size_t n_vars, unsigned degree, Rng& rng, long long box, Field field) {
  Polynomial p(n_vars, field);
  for (const auto& m : monomial_basis(n_vars, degree)) p.add_term(m, field.from_int(rng.uniform(-box, box)));
  return p;
}

std::vector<Polynomial> monomial_quadrics(std::size_t n_vars, Field field) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n_vars; ++i) {
    Monomial m(n_vars);
    m[i] = 2;
    out.push_back(Polynomial::monomial(m, field));
  }
  return out;
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) fails.push_back({{"trial", f.trial}, {"stage", f.stage}, {"detail", f.detail}});
  nlohmann::json per_trial = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json row = r.data;
    row["trial"] = r.trial;
    row["status"] = r.status;
    per_trial.push_back(std::move(row));
  }
  return {{"schema", kSchemaVersion}, {"family", family},   {"trials", trials},
          {"seed", seed},             {"skipped", skipped}, {"passes", passes},
          {"failures", fails},        {"passed", passed()}, {"per_trial", per_trial}};
}

ExperimentReport theorem_c_experiment(const ExperimentOptions& options, const TrialCallback& on_trial) {
  return run_trials("theorem_c", options, theorem_c_trial, on_trial);
}

ExperimentReport theorem_b_experiment(const ExperimentOptions& options, const TrialCallback& on_trial) {
  return run_trials("theorem_b", options, theorem_b_trial, on_trial);
}

std::vector<std::string> experiment_families() { return {"theorem_b", "theorem_c"}; }

ExperimentReport run_experiment(const std::string& family, const ExperimentOptions& options,
                                const TrialCallback& on_trial) {
  if (family == "theorem_c") return theorem_c_experiment(options, on_trial);
  if (family == "theorem_b") return theorem_b_experiment(options, on_trial);
  throw Error(ErrorCode::invalid_argument, "unknown experiment family '" + family + "'");
}

}  // namespace gorlef
