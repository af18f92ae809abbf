#include "gorlef/corpus.hpp"

#include "gorlef/error.hpp"

#include <algorithm>
#include <fstream>

#ifndef GORLEF_DATA_DIR
#define GORLEF_DATA_DIR "data"
#endif

namespace gorlef {

namespace {

const char* const kProvenances[] = {"published", "derived", "trivial"};

Error malformed(const std::string& what) { return Error(ErrorCode::parse, "malformed corpus: " + what); }

CorpusEntry parse_entry(const nlohmann::json& j) {
  if (!j.is_object()) throw malformed("entry is not an object");
  CorpusEntry e;
  if (!j.contains("name") || !j["name"].is_string()) throw malformed("entry without a name");
  e.name = j["name"];
  const std::string kind = j.value("kind", "form");
  if (kind != "form" && kind != "generators") throw malformed(e.name + ": unknown kind '" + kind + "'");
  e.input.kind = kind == "form" ? AlgebraInput::Kind::form : AlgebraInput::Kind::generators;
  if (!j.contains("input")) throw malformed(e.name + ": no input");
  const auto& input = j["input"];
  if (input.is_string()) {
    e.input.polynomials.push_back(input);
  } else if (input.is_array()) {
    for (const auto& p : input) {
      if (!p.is_string()) throw malformed(e.name + ": input must hold strings");
      e.input.polynomials.push_back(p);
    }
  } else {
    throw malformed(e.name + ": input must be a string or a list");
  }
  if (e.input.polynomials.empty()) throw malformed(e.name + ": empty input");
  if (e.input.kind == AlgebraInput::Kind::form && e.input.polynomials.size() != 1) {
    throw malformed(e.name + ": a form entry takes one polynomial");
  }
  e.input.n_vars = j.value("vars", std::size_t{0});
  e.input.field = Field::parse(j.value("field", std::string("rational")));
  e.expected = nlohmann::json::object();
  e.provenance = nlohmann::json::object();
  if (j.contains("expected")) {
    for (auto it = j["expected"].begin(); it != j["expected"].end(); ++it) {
      const auto& v = it.value();
      if (!v.is_object() || !v.contains("value") || !v.contains("provenance")) {
        throw malformed(e.name + "." + it.key() + ": expected values need value and provenance");
      }
      const std::string prov = v["provenance"];
      if (std::find(std::begin(kProvenances), std::end(kProvenances), prov) == std::end(kProvenances)) {
        throw malformed(e.name + "." + it.key() + ": unknown provenance '" + prov + "'");
      }
      e.expected[it.key()] = v["value"];
      e.provenance[it.key()] = prov;
    }
  }
  if (j.contains("tags")) e.tags = j["tags"].get<std::vector<std::string>>();
  return e;
}

}  // namespace

bool CorpusEntry::has_tag(const std::string& tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

GradedAlgebra CorpusEntry::build() const { return build_algebra(input); }

std::string default_corpus_path() { return std::string(GORLEF_DATA_DIR) + "/corpus.json"; }

std::vector<CorpusEntry> parse_corpus(const nlohmann::json& doc) {
  if (!doc.is_array()) throw malformed("top level must be an array");
  if (doc.empty()) throw malformed("no entries");
  std::vector<CorpusEntry> out;
  for (const auto& j : doc) {
    out.push_back(parse_entry(j));
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i].name == out.back().name) throw malformed("duplicate entry '" + out.back().name + "'");
    }
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open corpus file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw malformed(e.what());
  }
  return parse_corpus(doc);
}

const CorpusEntry& find_entry(const std::vector<CorpusEntry>& corpus, const std::string& name) {
  for (const auto& e : corpus) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::invalid_argument, "no corpus entry named '" + name + "'");
}

std::vector<std::string> compare_expected(const CorpusEntry& entry, const nlohmann::json& report) {
  std::vector<std::string> diffs;
  const auto& summary = report.at("summary");
  for (auto it = entry.expected.begin(); it != entry.expected.end(); ++it) {
    if (!summary.contains(it.key()) || summary[it.key()] != it.value()) diffs.push_back(it.key());
  }
  return diffs;
}

}  // namespace gorlef
