#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallkit/corpus.hpp"
#include "hallkit/reduction.hpp"

namespace hallkit {

struct SuiteResult {
  std::string id;
  std::string statement;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;  // budget ran out
  std::vector<std::string> failures;

  bool pass() const { return violations == 0; }
};

/// (id, statement) for every suite, in report order.
const std::vector<std::pair<std::string, std::string>>& suite_catalog();

struct EntryOutcome {
  std::size_t index = 0;
  std::string name;
  PiSet pi;
  BigInt order;
  ExpectedVerdicts observed;
  std::optional<ExpectedVerdicts> expected;
  Verdict reduction = Verdict::budget_exceeded;
  bool agree = false;
  std::optional<Verdict> shortcut;
  std::vector<std::string> class_fingerprints;
  std::vector<SuiteResult> suites;  // same order as suite_catalog()
  std::string error;
  double oracle_ms = 0;
  double reduction_ms = 0;
  double total_ms = 0;
};

struct CorpusReport {
  std::vector<EntryOutcome> entries;
  std::vector<SuiteResult> suites;
  bool ok() const;
};

EntryOutcome run_entry(const CorpusEntry& entry, std::size_t index, const Budget& budget, std::uint64_t seed,
                       bool composition_checks);

/// Entries run on `jobs` worker threads; output order follows the manifest.
CorpusReport run_corpus(const std::vector<CorpusEntry>& entries, const Budget& budget, std::uint64_t seed = 1,
                        std::size_t jobs = 1);

}  // namespace hallkit
