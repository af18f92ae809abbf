#include "gorlef/analyze.hpp"

#include "gorlef/apolarity.hpp"
#include "gorlef/error.hpp"
#include "gorlef/report.hpp"

#include <sstream>

namespace gorlef {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const char* verdict(bool holds) { return holds ? "holds" : "fails"; }

}  // namespace

AlgebraInput parse_algebra_input(const std::string& text, std::optional<AlgebraInput::Kind> kind) {
  AlgebraInput in;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream pieces(line);
    std::string piece;
    while (std::getline(pieces, piece, ';')) {
      piece = trim(piece);
      if (!piece.empty()) in.polynomials.push_back(piece);
    }
  }
  if (in.polynomials.empty()) throw ParseError("no polynomial in input", 0);
  in.kind = kind.value_or(in.polynomials.size() == 1 ? AlgebraInput::Kind::form
                                                     : AlgebraInput::Kind::generators);
  if (in.kind == AlgebraInput::Kind::form && in.polynomials.size() != 1) {
    throw Error(ErrorCode::invalid_argument, "an inverse system takes exactly one form");
  }
  return in;
}

GradedAlgebra build_algebra(const AlgebraInput& input) {
  if (input.polynomials.empty()) throw Error(ErrorCode::invalid_argument, "no polynomial given");
  std::size_t n = input.n_vars;
  if (n == 0) {
    for (const auto& p : input.polynomials) n = std::max(n, infer_variable_count(p));
    if (input.kind == AlgebraInput::Kind::generators) n = std::max(n, input.polynomials.size());
    n = std::max<std::size_t>(n, 1);
  }
  std::vector<Polynomial> polys;
  for (const auto& p : input.polynomials) polys.push_back(parse_poly(p, n, input.field));
  if (input.kind == AlgebraInput::Kind::form) return GradedAlgebra::from_inverse_system(polys.front());
  return GradedAlgebra::from_regular_sequence(polys);
}

nlohmann::json analyze_algebra(const GradedAlgebra& a, const AnalyzeOptions& options) {
  nlohmann::json out;
  out["schema"] = kSchemaVersion;
  out["algebra"] = a.to_json();
  const unsigned n = a.socle_degree();
  nlohmann::json summary;
  summary["hilbert"] = a.hilbert();
  summary["symmetric"] = a.is_hilbert_symmetric();
  summary["standard"] = a.is_standard();

  nlohmann::json duality = nlohmann::json::array();
  bool all_perfect = true;
  for (unsigned s = 0; s <= n; ++s) {
    const bool perfect = a.pairing_check(s).perfect;
    all_perfect = all_perfect && perfect;
    duality.push_back({{"degree", s}, {"perfect", perfect}});
  }
  out["duality"] = duality;
  summary["duality"] = all_perfect;

  summary["cone"] = nullptr;
  summary["hess_zero"] = nullptr;
  if (a.presentation() == PresentationKind::inverse_system && a.form()) {
    summary["cone"] = is_cone(*a.form());
    if (a.n_vars() <= kMaxHessianVars) {
      const HessianReport h = hessian(*a.form());
      summary["hess_zero"] = h.vanishes;
      out["hessian_det"] = h.det.to_string();
    }
  }

  nlohmann::json probes = nlohmann::json::array();
  auto probe = [&](LefschetzKind kind, unsigned k) {
    const ProbeReport r = lefschetz_probe(a, kind, k, options.trials, derive_seed(options.seed, k));
    probes.push_back(r.to_json());
    const std::string key = (kind == LefschetzKind::weak ? "wlp" : "slp") + std::to_string(k);
    summary[key] = verdict(r.holds());
  };
  for (unsigned k = 0; n >= 1 && k <= n - 1; ++k) probe(LefschetzKind::weak, k);
  for (unsigned k = 0; 2 * k <= n; ++k) probe(LefschetzKind::strong, k);
  out["probes"] = probes;
  out["summary"] = summary;
  return out;
}

bool analysis_structural_ok(const nlohmann::json& report) {
  const auto& s = report.at("summary");
  return s.at("symmetric").get<bool>() && s.at("duality").get<bool>() && s.at("standard").get<bool>();
}

std::string analysis_to_text(const nlohmann::json& report) {
  std::ostringstream out;
  const auto& alg = report.at("algebra");
  const auto& s = report.at("summary");
  out << "presentation: " << alg.at("presentation").at("kind").get<std::string>() << '\n';
  if (alg.at("presentation").contains("form")) {
    out << "form: " << alg.at("presentation").at("form").get<std::string>() << '\n';
  } else if (alg.at("presentation").contains("generators")) {
    out << "generators:";
    for (const auto& g : alg.at("presentation").at("generators")) out << ' ' << g.get<std::string>() << ';';
    out << '\n';
  }
  out << "field: " << alg.at("field").get<std::string>() << '\n';
  out << "socle degree: " << alg.at("socle_degree").get<unsigned>() << '\n';
  out << "hilbert:";
  for (const auto& h : s.at("hilbert")) out << ' ' << h.get<std::size_t>();
  out << '\n';
  out << "symmetric: " << s.at("symmetric").dump() << "  standard: " << s.at("standard").dump()
      << "  duality:";
  for (const auto& d : report.at("duality")) out << ' ' << (d.at("perfect").get<bool>() ? "ok" : "FAIL");
  out << '\n';
  if (!s.at("cone").is_null()) out << "cone: " << s.at("cone").dump() << '\n';
  if (!s.at("hess_zero").is_null()) {
    out << "hess_zero: " << s.at("hess_zero").dump() << "  (hess = "
        << report.at("hessian_det").get<std::string>() << ")\n";
  }
  out << "probes:\n";
  for (const auto& p : report.at("probes")) {
    out << "  " << p.at("kind").get<std::string>() << ": "
        << (p.at("holds").get<bool>() ? "holds" : "fails") << "  rank " << p.at("max_rank").get<std::size_t>()
        << "/" << p.at("target_rank").get<std::size_t>()
        << (p.at("certified").get<bool>() ? "  certified" : "  evidence only") << '\n';
  }
  return out.str();
}

}  // namespace gorlef
