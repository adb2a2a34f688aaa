#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hallkit/corpus.hpp"
#include "hallkit/example.hpp"
#include "hallkit/reduction.hpp"
#include "hallkit/suites.hpp"

namespace hallkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hallkit-report/1";

/// Everything a command emits. Only `timings` may differ between two runs
/// with the same seed and budgets.
struct Report {
  std::string schema_version = kReportSchema;
  std::string command;
  Json input = Json::object();
  std::vector<std::uint64_t> pi;
  Json results = Json::object();
  std::vector<std::pair<std::string, double>> timings;
  Json budgets = Json::object();
  std::uint64_t seed = 1;

  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
/// Throws std::runtime_error on a document that is not a report.
Report report_from_json(const Json& j);
std::string dump(const Report& r);
/// The results section alone, in canonical form.
std::string results_text(const Report& r);

/// true, false or "budget_exceeded".
Json verdict_json(Verdict v);
Verdict verdict_from_json(const Json& j);

Json budget_json(const Budget& b);
Json group_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

Json ecd_json(const EcdResult& r);
Json hall_classes_json(const HallClassSet& s);
Json k_report_json(const KReport& k);
Json trace_json(const ReductionTrace& t);
Json comparison_json(const OracleComparison& c);
Json gl52_json(const Gl52Report& r);
Json suite_json(const SuiteResult& s);
/// Timings of the corpus run go to `timings`, not to the returned results.
Json corpus_json(const CorpusReport& c, std::vector<std::pair<std::string, double>>* timings = nullptr);

/// Recomputes the order arithmetic of a serialized trace from its generators.
/// Returns an empty string when every level checks out, else the first problem.
std::string replay_trace(const Json& trace);

}  // namespace hallkit
