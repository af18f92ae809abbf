// gorlef command-line driver. Talks to the engine through the C API only.
#include "gorlef/gorlef.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string field = "rational";
  std::uint64_t seed = 20211115;
  std::string format = "text";
  std::string output;
};

struct Output {
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

gorlef_format format_of(const Common& c) { return c.format == "json" ? GORLEF_FORMAT_JSON : GORLEF_FORMAT_TEXT; }

int exit_for(gorlef_status st) {
  switch (st) {
    case GORLEF_OK:
      return kExitPass;
    case GORLEF_ERR_NOT_REGULAR_SEQUENCE:
    case GORLEF_ERR_SLP_EVIDENCE:
    case GORLEF_ERR_DEGENERATE_ALGEBRA:
    case GORLEF_ERR_INTERNAL:
      return kExitFail;
    default:
      return kExitUsage;
  }
}

int report_error(gorlef_status st) {
  std::cerr << "gorlef: " << gorlef_last_error() << '\n';
  return exit_for(st);
}

// The argument is a file when one exists at that path, inline polynomial text otherwise.
std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  return arg;
}

gorlef_input_kind kind_of(const std::string& kind) {
  if (kind == "form") return GORLEF_INPUT_FORM;
  if (kind == "generators") return GORLEF_INPUT_GENERATORS;
  return GORLEF_INPUT_AUTO;
}

struct AlgebraDeleter {
  void operator()(gorlef_algebra* a) const { gorlef_algebra_free(a); }
};
using AlgebraPtr = std::unique_ptr<gorlef_algebra, AlgebraDeleter>;

void add_common(CLI::App* cmd, Common& c, bool with_field) {
  if (with_field) cmd->add_option("--field", c.field, "rational or fp:<p>")->capture_default_str();
  cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  cmd->add_option("--output", c.output, "write the report to a file instead of stdout");
}

int emit(char* text, const Common& c) {
  Output out(c.output);
  out.stream() << text;
  gorlef_string_free(text);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artinian Gorenstein algebras: Lefschetz probes, hessians and identity checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gorlef_version()));

  Common common;
  std::size_t trials = 8;
  std::size_t vars = 0;
  std::string kind = "auto";

  auto* analyze = app.add_subcommand("analyze", "Hilbert function, duality, hessian and Lefschetz probes");
  std::string analyze_input;
  std::string corpus_path;
  std::string entry;
  analyze->add_option("input", analyze_input, "polynomial text (';'-separated generators) or a file");
  analyze->add_option("--kind", kind, "how to read the input")->check(CLI::IsMember({"auto", "form", "generators"}));
  analyze->add_option("--vars", vars, "number of variables (default: inferred)");
  analyze->add_option("--trials", trials, "random trials per probe")->capture_default_str();
  analyze->add_option("--corpus", corpus_path, "corpus file (default: the bundled corpus)");
  analyze->add_option("--entry", entry, "analyze a corpus entry (or 'all') and compare with its expectations");
  add_common(analyze, common, true);

  auto* experiment = app.add_subcommand("experiment", "run a seeded random experiment");
  std::string family = "theorem_c";
  gorlef_experiment_options exp;
  gorlef_experiment_options_init(&exp);
  bool no_monomial = false;
  experiment->add_option("family", family, "theorem_c or theorem_b")->capture_default_str();
  experiment->add_option("--trials", exp.trials, "number of draws")->capture_default_str();
  experiment->add_option("--jobs", exp.jobs, "worker threads")->capture_default_str();
  experiment->add_option("--coeff-box", exp.coeff_box, "coefficients drawn from [-box, box]")->capture_default_str();
  experiment->add_option("--probe-trials", exp.probe_trials, "random trials per probe")->capture_default_str();
  experiment->add_flag("--no-monomial", no_monomial, "do not use the monomial complete intersection as trial 0");
  add_common(experiment, common, false);

  auto* fixture = app.add_subcommand("fixture", "run a built-in fixture");
  std::string fixture_name;
  fixture->add_option("name", fixture_name, "fixture name (perazzo)")->required();
  add_common(fixture, common, false);

  auto* gamma = app.add_subcommand("gamma", "sample the incidence correspondence Gamma_k");
  std::string gamma_input;
  unsigned k = 1;
  std::size_t samples = 32;
  gamma->add_option("input", gamma_input, "polynomial text or a file")->required();
  gamma->add_option("-k", k, "exponent k")->capture_default_str();
  gamma->add_option("--samples", samples, "number of samples")->capture_default_str();
  gamma->add_option("--kind", kind, "how to read the input")->check(CLI::IsMember({"auto", "form", "generators"}));
  gamma->add_option("--vars", vars, "number of variables (default: inferred)");
  add_common(gamma, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const gorlef_format format = format_of(common);
    char* text = nullptr;
    int ok = 0;

    if (*analyze) {
      if (!entry.empty()) {
        const gorlef_status st = gorlef_corpus_check(corpus_path.empty() ? nullptr : corpus_path.c_str(),
                                                     entry.c_str(), trials, common.seed, format, &text, &ok);
        if (st != GORLEF_OK) return report_error(st);
        emit(text, common);
        return ok ? kExitPass : kExitFail;
      }
      if (analyze_input.empty()) {
        std::cerr << "gorlef: analyze needs an input or --entry\n";
        return kExitUsage;
      }
      gorlef_algebra* raw = nullptr;
      gorlef_status st = gorlef_algebra_from_text(read_input(analyze_input).c_str(), kind_of(kind), vars,
                                                  common.field.c_str(), &raw);
      if (st != GORLEF_OK) return report_error(st);
      AlgebraPtr a(raw);
      st = gorlef_analyze(a.get(), trials, common.seed, format, &text, &ok);
      if (st != GORLEF_OK) return report_error(st);
      emit(text, common);
      return ok ? kExitPass : kExitFail;
    }

    if (*experiment) {
      exp.seed = common.seed;
      exp.include_monomial = no_monomial ? 0 : 1;
      Output out(common.output);
      auto stream_line = [](const char* line, void* user) {
        *static_cast<std::ostream*>(user) << line << '\n' << std::flush;
      };
      const gorlef_status st =
          gorlef_experiment(family.c_str(), &exp, format, format == GORLEF_FORMAT_TEXT ? +stream_line : nullptr,
                            &out.stream(), &text, &ok);
      if (st != GORLEF_OK) return report_error(st);
      out.stream() << text;
      gorlef_string_free(text);
      return ok ? kExitPass : kExitFail;
    }

    if (*fixture) {
      const gorlef_status st = gorlef_fixture(fixture_name.c_str(), common.seed, format, &text, &ok);
      if (st != GORLEF_OK) return report_error(st);
      emit(text, common);
      return ok ? kExitPass : kExitFail;
    }

    if (*gamma) {
      gorlef_algebra* raw = nullptr;
      gorlef_status st = gorlef_algebra_from_text(read_input(gamma_input).c_str(), kind_of(kind), vars,
                                                  common.field.c_str(), &raw);
      if (st != GORLEF_OK) return report_error(st);
      AlgebraPtr a(raw);
      st = gorlef_gamma(a.get(), k, samples, common.seed, format, &text, &ok);
      if (st != GORLEF_OK) return report_error(st);
      emit(text, common);
      return ok ? kExitPass : kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "gorlef: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
