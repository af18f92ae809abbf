#include "gorlef/gorlef.h"

#include "gorlef/analyze.hpp"
#include "gorlef/corpus.hpp"
#include "gorlef/error.hpp"
#include "gorlef/gnlab.hpp"
#include "gorlef/report.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

struct gorlef_algebra {
  gorlef::GradedAlgebra algebra;
};

namespace {

thread_local std::string last_error;
thread_local long last_position = -1;
thread_local long last_degree = -1;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gorlef_status fail(gorlef_status status, const std::string& what) {
  last_error = what;
  return status;
}

// Runs body, translating exceptions into status codes and the thread-local error.
template <class F>
gorlef_status guarded(F&& body) {
  last_error.clear();
  last_position = -1;
  last_degree = -1;
  try {
    body();
    return GORLEF_OK;
  } catch (const gorlef::ParseError& e) {
    last_position = static_cast<long>(e.position());
    return fail(GORLEF_ERR_PARSE, e.what());
  } catch (const gorlef::NotRegularSequence& e) {
    last_degree = e.degree();
    return fail(GORLEF_ERR_NOT_REGULAR_SEQUENCE, e.what());
  } catch (const gorlef::Error& e) {
    return fail(static_cast<gorlef_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GORLEF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GORLEF_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw gorlef::Error(gorlef::ErrorCode::invalid_argument, what);
}

gorlef::Field field_of(const char* field) {
  return field ? gorlef::Field::parse(field) : gorlef::Field::rational();
}

gorlef_status make_algebra(const gorlef::AlgebraInput& input, gorlef_algebra** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    *out = new gorlef_algebra{gorlef::build_algebra(input)};
  });
}

std::string experiment_line(const gorlef::TrialRecord& r, gorlef_format format) {
  if (format == GORLEF_FORMAT_JSON) {
    nlohmann::json row = r.data;
    row["trial"] = r.trial;
    row["status"] = r.status;
    return row.dump();
  }
  std::ostringstream out;
  out << "trial " << r.trial << ": " << r.status;
  if (r.data.contains("hilbert")) {
    out << "  hilbert";
    for (const auto& h : r.data["hilbert"]) out << ' ' << h.get<std::size_t>();
  }
  for (const char* key : {"slp1", "slp2"}) {
    if (r.data.contains(key)) {
      out << "  " << key << ' ' << r.data[key]["max_rank"].get<std::size_t>() << '/'
          << r.data[key]["target_rank"].get<std::size_t>();
    }
  }
  if (r.data.contains("skip_reason")) out << "  (" << r.data["skip_reason"].get<std::string>() << ')';
  if (r.data.contains("failure")) out << "  [" << r.data["failure"]["stage"].get<std::string>() << ']';
  return out.str();
}

}  // namespace

extern "C" {

const char* gorlef_version(void) { return "0.1.0"; }

const char* gorlef_last_error(void) { return last_error.c_str(); }

long gorlef_last_error_position(void) { return last_position; }

long gorlef_last_error_degree(void) { return last_degree; }

void gorlef_string_free(char* s) { std::free(s); }

gorlef_status gorlef_algebra_from_form(const char* form, size_t n_vars, const char* field,
                                       gorlef_algebra** out) {
  gorlef::AlgebraInput input;
  gorlef_status st = guarded([&] {
    require(form != nullptr, "null form");
    input.polynomials = {form};
    input.n_vars = n_vars;
    input.field = field_of(field);
  });
  return st == GORLEF_OK ? make_algebra(input, out) : st;
}

gorlef_status gorlef_algebra_from_generators(const char* const* generators, size_t count, size_t n_vars,
                                             const char* field, gorlef_algebra** out) {
  gorlef::AlgebraInput input;
  gorlef_status st = guarded([&] {
    require(generators != nullptr && count > 0, "no generators");
    input.kind = gorlef::AlgebraInput::Kind::generators;
    for (size_t i = 0; i < count; ++i) {
      require(generators[i] != nullptr, "null generator");
      input.polynomials.emplace_back(generators[i]);
    }
    input.n_vars = n_vars;
    input.field = field_of(field);
  });
  return st == GORLEF_OK ? make_algebra(input, out) : st;
}

gorlef_status gorlef_algebra_from_text(const char* text, gorlef_input_kind kind, size_t n_vars,
                                       const char* field, gorlef_algebra** out) {
  gorlef::AlgebraInput input;
  gorlef_status st = guarded([&] {
    require(text != nullptr, "null input text");
    std::optional<gorlef::AlgebraInput::Kind> k;
    if (kind == GORLEF_INPUT_FORM) k = gorlef::AlgebraInput::Kind::form;
    if (kind == GORLEF_INPUT_GENERATORS) k = gorlef::AlgebraInput::Kind::generators;
    input = gorlef::parse_algebra_input(text, k);
    input.n_vars = n_vars;
    input.field = field_of(field);
  });
  return st == GORLEF_OK ? make_algebra(input, out) : st;
}

gorlef_status gorlef_algebra_from_corpus(const char* corpus_path, const char* name, gorlef_algebra** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(name != nullptr, "null entry name");
    *out = nullptr;
    const auto corpus = gorlef::load_corpus(corpus_path ? corpus_path : gorlef::default_corpus_path());
    *out = new gorlef_algebra{gorlef::find_entry(corpus, name).build()};
  });
}

void gorlef_algebra_free(gorlef_algebra* a) { delete a; }

unsigned gorlef_algebra_socle_degree(const gorlef_algebra* a) { return a ? a->algebra.socle_degree() : 0; }

size_t gorlef_algebra_n_vars(const gorlef_algebra* a) { return a ? a->algebra.n_vars() : 0; }

gorlef_status gorlef_algebra_hilbert(const gorlef_algebra* a, size_t* values, size_t capacity,
                                     size_t* length) {
  return guarded([&] {
    require(a != nullptr, "null algebra");
    require(values != nullptr || capacity == 0, "null output buffer");
    const auto h = a->algebra.hilbert();
    for (size_t i = 0; i < h.size() && i < capacity; ++i) values[i] = h[i];
    if (length) *length = h.size();
  });
}

gorlef_status gorlef_algebra_to_json(const gorlef_algebra* a, char** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = dup_string(a->algebra.to_json().dump(2));
  });
}

gorlef_status gorlef_probe(const gorlef_algebra* a, gorlef_lefschetz kind, unsigned k, size_t trials,
                           uint64_t seed, char** json_out, int* holds) {
  return guarded([&] {
    require(a != nullptr, "null algebra");
    const auto r = gorlef::lefschetz_probe(
        a->algebra, kind == GORLEF_SLP ? gorlef::LefschetzKind::strong : gorlef::LefschetzKind::weak, k,
        trials, seed);
    if (holds) *holds = r.holds() ? 1 : 0;
    if (json_out) *json_out = dup_string(r.to_json().dump());
  });
}

gorlef_status gorlef_analyze(const gorlef_algebra* a, size_t trials, uint64_t seed, gorlef_format format,
                             char** out, int* structural_ok) {
  return guarded([&] {
    require(a != nullptr, "null algebra");
    const auto report = gorlef::analyze_algebra(a->algebra, {trials, seed});
    if (structural_ok) *structural_ok = gorlef::analysis_structural_ok(report) ? 1 : 0;
    if (out) {
      *out = dup_string(format == GORLEF_FORMAT_JSON ? report.dump(2) + "\n" : gorlef::analysis_to_text(report));
    }
  });
}

gorlef_status gorlef_corpus_check(const char* corpus_path, const char* name, size_t trials, uint64_t seed,
                                  gorlef_format format, char** out, int* passed) {
  return guarded([&] {
    const auto corpus = gorlef::load_corpus(corpus_path ? corpus_path : gorlef::default_corpus_path());
    const bool all = name == nullptr || std::strcmp(name, "all") == 0;
    nlohmann::json entries = nlohmann::json::array();
    std::ostringstream text;
    bool ok = true;
    for (const auto& e : corpus) {
      if (!all && e.name != name) continue;
      const auto report = gorlef::analyze_algebra(e.build(), {trials, seed});
      const auto diffs = gorlef::compare_expected(e, report);
      const bool structural = gorlef::analysis_structural_ok(report);
      const bool entry_ok = diffs.empty() && structural;
      ok = ok && entry_ok;
      nlohmann::json mismatches = nlohmann::json::object();
      for (const auto& key : diffs) {
        mismatches[key] = {{"expected", e.expected[key]},
                           {"found", report["summary"].value(key, nlohmann::json())},
                           {"provenance", e.provenance[key]}};
      }
      entries.push_back({{"name", e.name},
                         {"passed", entry_ok},
                         {"structural", structural},
                         {"mismatches", mismatches},
                         {"summary", report["summary"]}});
      text << e.name << ": " << (entry_ok ? "ok" : "MISMATCH");
      for (const auto& key : diffs) text << ' ' << key;
      if (!structural) text << " structural";
      text << '\n';
    }
    if (entries.empty()) throw gorlef::Error(gorlef::ErrorCode::invalid_argument,
                                             std::string("no corpus entry named '") + name + "'");
    if (passed) *passed = ok ? 1 : 0;
    if (out) {
      if (format == GORLEF_FORMAT_JSON) {
        *out = dup_string(nlohmann::json{{"schema", gorlef::kSchemaVersion}, {"passed", ok}, {"entries", entries}}
                              .dump(2) + "\n");
      } else {
        *out = dup_string(text.str());
      }
    }
  });
}

void gorlef_experiment_options_init(gorlef_experiment_options* options) {
  if (!options) return;
  const gorlef::ExperimentOptions d;
  options->trials = d.trials;
  options->seed = d.seed;
  options->coeff_box = d.coeff_box;
  options->include_monomial = d.include_monomial ? 1 : 0;
  options->probe_trials = d.probe_trials;
  options->jobs = d.jobs;
}

gorlef_status gorlef_experiment(const char* family, const gorlef_experiment_options* options,
                                gorlef_format format, gorlef_trial_callback on_trial, void* user, char** out,
                                int* passed) {
  return guarded([&] {
    require(family != nullptr, "null family");
    gorlef::ExperimentOptions o;
    if (options) {
      o.trials = options->trials;
      o.seed = options->seed;
      o.coeff_box = options->coeff_box;
      o.include_monomial = options->include_monomial != 0;
      o.probe_trials = options->probe_trials;
      o.jobs = options->jobs;
    }
    require(o.coeff_box >= 0, "coefficient box must be non-negative");
    require(o.probe_trials >= 1, "probes need at least one trial");
    gorlef::TrialCallback cb;
    if (on_trial) {
      cb = [&](const gorlef::TrialRecord& r) { on_trial(experiment_line(r, format).c_str(), user); };
    }
    const auto report = gorlef::run_experiment(family, o, cb);
    if (passed) *passed = report.passed() ? 1 : 0;
    if (out) {
      if (format == GORLEF_FORMAT_JSON) {
        *out = dup_string(report.to_json().dump(2) + "\n");
      } else {
        std::ostringstream s;
        s << report.family << ": " << report.trials << " trials, " << report.passes << " passed, "
          << report.skipped << " skipped, " << report.failures.size() << " failed (seed " << report.seed
          << "): " << (report.passed() ? "PASS" : "FAIL") << '\n';
        for (const auto& f : report.failures) {
          s << "  trial " << f.trial << " failed at " << f.stage << ": " << f.detail << '\n';
        }
        *out = dup_string(s.str());
      }
    }
  });
}

gorlef_status gorlef_fixture(const char* name, uint64_t seed, gorlef_format format, char** out, int* passed) {
  return guarded([&] {
    require(name != nullptr, "null fixture name");
    if (std::strcmp(name, "perazzo") != 0) {
      throw gorlef::Error(gorlef::ErrorCode::invalid_argument, std::string("unknown fixture '") + name + "'");
    }
    gorlef::CheckReport r = gorlef::perazzo_fixture(32, 100, seed);
    r.merge(gorlef::gn_map_check(gorlef::perazzo_algebra(), 16, seed));
    if (passed) *passed = r.passed() ? 1 : 0;
    if (out) *out = dup_string(format == GORLEF_FORMAT_JSON ? r.to_json(name).dump(2) + "\n" : r.to_text(name));
  });
}

gorlef_status gorlef_gamma(const gorlef_algebra* a, unsigned k, size_t samples, uint64_t seed,
                           gorlef_format format, char** out, int* passed) {
  return guarded([&] {
    require(a != nullptr, "null algebra");
    nlohmann::json log = nlohmann::json::array();
    const gorlef::CheckReport r = gorlef::gamma_check(a->algebra, k, samples, seed, &log);
    if (passed) *passed = r.passed() ? 1 : 0;
    if (out) {
      if (format == GORLEF_FORMAT_JSON) {
        nlohmann::json j = r.to_json("gamma_" + std::to_string(k));
        j["samples"] = log;
        *out = dup_string(j.dump(2) + "\n");
      } else {
        *out = dup_string(r.to_text("gamma_" + std::to_string(k)));
      }
    }
  });
}

}  // extern "C"
