#include "helpers.hpp"

#include "gorlef/corpus.hpp"
#include "gorlef/error.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace gorlef;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("bundled corpus contents") {
  const auto corpus = load_corpus();
  CHECK(corpus.size() >= 14);
  const auto& p = find_entry(corpus, "perazzo");
  CHECK(p.expected["hess_zero"] == true);
  CHECK(p.provenance["hess_zero"] == "published");
  const auto& ci = find_entry(corpus, "monomial_ci_quadrics");
  CHECK(ci.expected["hilbert"] == nlohmann::json({1, 5, 10, 10, 5, 1}));
  CHECK(ci.provenance["hilbert"] == "derived");
  for (const char* name : {"fermat_cubic_surface_jacobian", "x0x1", "cone_x0_cubed_5vars"}) {
    CHECK_NOTHROW(find_entry(corpus, name));
  }
  std::size_t low_codim = 0;
  for (const auto& e : corpus) {
    low_codim += e.has_tag("codim_le_4");
    for (auto it = e.expected.begin(); it != e.expected.end(); ++it) CHECK(e.provenance.contains(it.key()));
  }
  CHECK(low_codim >= 7);
  CHECK_THROWS_AS(find_entry(corpus, "missing"), Error);
}

TEST_CASE("low-codimension Hilbert functions match the catalecticant oracle") {
  for (const auto& e : load_corpus()) {
    if (e.input.kind != AlgebraInput::Kind::form) continue;
    CAPTURE(e.name);
    GradedAlgebra a = e.build();
    const Polynomial& f = *a.form();
    const auto h = oracle::inverse_system_hilbert(testing::to_oracle(f), f.n_vars(), a.socle_degree());
    CHECK(a.hilbert() == std::vector<std::size_t>(h.begin(), h.end()));
  }
}

TEST_CASE("malformed corpora are rejected") {
  CHECK(code_of([] { load_corpus(write_temp("gorlef_empty.json", "[]")); }) == ErrorCode::parse);
  CHECK(code_of([] { load_corpus(write_temp("gorlef_bad.json", "{not json")); }) == ErrorCode::parse);
  CHECK(code_of([] { load_corpus("/nonexistent/corpus.json"); }) == ErrorCode::io);
  const auto entry = [](const std::string& prov) {
    return nlohmann::json{{"name", "a"},
                          {"kind", "form"},
                          {"input", "x0*x1"},
                          {"expected", {{"hilbert", {{"value", {1, 2, 1}}, {"provenance", prov}}}}}};
  };
  CHECK_NOTHROW(parse_corpus(nlohmann::json::array({entry("trivial")})));
  CHECK_THROWS_AS(parse_corpus(nlohmann::json::array({entry("hearsay")})), Error);
  CHECK_THROWS_AS(parse_corpus(nlohmann::json::array({entry("trivial"), entry("trivial")})), Error);
  auto no_value = entry("trivial");
  no_value["expected"]["hilbert"].erase("value");
  CHECK_THROWS_AS(parse_corpus(nlohmann::json::array({no_value})), Error);
  auto bad_kind = entry("trivial");
  bad_kind["kind"] = "ideal";
  CHECK_THROWS_AS(parse_corpus(nlohmann::json::array({bad_kind})), Error);
}

TEST_CASE("every entry reproduces its expectations and passes the structural gates") {
  for (const auto& e : load_corpus()) {
    CAPTURE(e.name);
    const auto report = analyze_algebra(e.build());
    CHECK(compare_expected(e, report).empty());
    CHECK(analysis_structural_ok(report));
  }
}

TEST_CASE("compare_expected reports mismatches") {
  auto corpus = load_corpus();
  CorpusEntry e = find_entry(corpus, "x0x1");
  const auto report = analyze_algebra(e.build());
  e.expected["hilbert"] = {1, 1, 1};
  const auto diff = compare_expected(e, report);
  REQUIRE(diff.size() == 1);
  CHECK(diff[0] == "hilbert");
}

TEST_CASE("input text parsing") {
  AlgebraInput in = parse_algebra_input("# monomial CI\nx0^2; x1^2\n\nx2^2 # last\n");
  CHECK(in.kind == AlgebraInput::Kind::generators);
  CHECK(in.polynomials.size() == 3);
  CHECK(build_algebra(in).hilbert() == std::vector<std::size_t>{1, 3, 3, 1});
  AlgebraInput form = parse_algebra_input("x0*x1");
  CHECK(form.kind == AlgebraInput::Kind::form);
  CHECK(build_algebra(form).hilbert() == std::vector<std::size_t>{1, 2, 1});
  CHECK_THROWS_AS(parse_algebra_input("x0; x1", AlgebraInput::Kind::form), Error);
  CHECK_THROWS_AS(parse_algebra_input("# nothing\n"), Error);
}

TEST_CASE("analysis summaries") {
  auto per = analyze_algebra(build_algebra(parse_algebra_input(testing::kPerazzo)));
  CHECK(per["summary"]["hilbert"] == nlohmann::json({1, 5, 5, 1}));
  CHECK(per["summary"]["cone"] == false);
  CHECK(per["summary"]["hess_zero"] == true);
  CHECK(per["summary"]["slp1"] == "fails");
  auto ci = analyze_algebra(build_algebra(parse_algebra_input("x0^2;x1^2;x2^2;x3^2;x4^2")));
  CHECK(ci["summary"]["slp1"] == "holds");
  CHECK(ci["summary"]["slp2"] == "holds");
  auto cube = analyze_algebra(build_algebra(parse_algebra_input("x0^3")));
  CHECK(cube["summary"]["hilbert"] == nlohmann::json({1, 1, 1, 1}));
  CHECK(cube["summary"]["slp1"] == "holds");
  CHECK(analysis_to_text(per).find("hilbert: 1 5 5 1") != std::string::npos);
  CHECK(per.dump() == analyze_algebra(build_algebra(parse_algebra_input(testing::kPerazzo))).dump());
}
