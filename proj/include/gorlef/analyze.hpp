#ifndef GORLEF_ANALYZE_HPP
#define GORLEF_ANALYZE_HPP

#include "gorlef/algebra.hpp"
#include "gorlef/lefschetz.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gorlef {

// A form (inverse system) or a list of generators (regular sequence), still as text.
struct AlgebraInput {
  enum class Kind { form, generators };
  Kind kind = Kind::form;
  std::vector<std::string> polynomials;
  std::size_t n_vars = 0;  // 0: inferred from the highest variable index
  Field field = Field::rational();
};

// Splits text into polynomials at ';' and newlines, dropping '#' comments and blank
// pieces. A single polynomial is read as a form unless `kind` says otherwise.
AlgebraInput parse_algebra_input(const std::string& text,
                                 std::optional<AlgebraInput::Kind> kind = std::nullopt);

GradedAlgebra build_algebra(const AlgebraInput& input);

struct AnalyzeOptions {
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
};

// Hilbert function, duality per degree, standardness, cone and hessian (for forms in at
// most 6 variables) and the WLP/SLP probe table for every valid k. The "summary" object
// holds the short verdicts (hilbert, cone, hess_zero, wlp<k>, slp<k>, ...).
nlohmann::json analyze_algebra(const GradedAlgebra& a, const AnalyzeOptions& options = {});

// True when every structural gate (symmetry, perfect pairings, standardness) holds.
bool analysis_structural_ok(const nlohmann::json& report);

std::string analysis_to_text(const nlohmann::json& report);

}  // namespace gorlef

#endif  // GORLEF_ANALYZE_HPP
