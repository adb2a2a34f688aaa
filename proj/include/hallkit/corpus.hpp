#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallkit/hall.hpp"

namespace hallkit {

struct ExpectedVerdicts {
  Verdict E = Verdict::budget_exceeded;
  Verdict C = Verdict::budget_exceeded;
  Verdict D = Verdict::budget_exceeded;
  std::optional<std::size_t> k;
  friend bool operator==(const ExpectedVerdicts&, const ExpectedVerdicts&) = default;
};

struct CorpusEntry {
  std::string name;  // zoo name
  PiSet pi;
  std::optional<ExpectedVerdicts> expected;
  std::string provenance;
};

/// The (group, pi) pairs of the default corpus, without expectations.
std::vector<CorpusEntry> corpus_candidates();

/// Fills the expectations from the oracle alone.
std::vector<CorpusEntry> bootstrap_manifest(std::vector<CorpusEntry> entries, const Budget& budget,
                                            std::uint64_t seed = 1);

ExpectedVerdicts expected_from(const EcdResult& r);

std::string manifest_to_json(const std::vector<CorpusEntry>& entries);
/// Throws std::runtime_error on malformed manifests.
std::vector<CorpusEntry> manifest_from_json(const std::string& text);
std::vector<CorpusEntry> read_manifest(const std::string& path);
std::string default_manifest_path();

Verdict verdict_from_string(const std::string& s);

}  // namespace hallkit
