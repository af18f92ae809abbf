#ifndef GORLEF_CORPUS_HPP
#define GORLEF_CORPUS_HPP

#include "gorlef/analyze.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gorlef {

// A named algebra with the analysis verdicts it must reproduce. Each expected value
// carries its provenance: "published" (stated in the literature), "derived" (computed by
// an independent hand or oracle calculation) or "trivial".
struct CorpusEntry {
  std::string name;
  AlgebraInput input;
  nlohmann::json expected;    // summary key -> value
  nlohmann::json provenance;  // summary key -> provenance
  std::vector<std::string> tags;

  bool has_tag(const std::string& tag) const;
  GradedAlgebra build() const;
};

// Location of the corpus shipped with the sources.
std::string default_corpus_path();

std::vector<CorpusEntry> parse_corpus(const nlohmann::json& doc);
std::vector<CorpusEntry> load_corpus(const std::string& path = default_corpus_path());
const CorpusEntry& find_entry(const std::vector<CorpusEntry>& corpus, const std::string& name);

// Expected keys whose value differs from the summary of an analysis report.
std::vector<std::string> compare_expected(const CorpusEntry& entry, const nlohmann::json& report);

}  // namespace gorlef

#endif  // GORLEF_CORPUS_HPP
