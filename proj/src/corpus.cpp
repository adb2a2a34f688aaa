#include "hallkit/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hallkit/zoo.hpp"

#ifndef HALLKIT_DATA_DIR
#define HALLKIT_DATA_DIR "data"
#endif

namespace hallkit {

std::vector<CorpusEntry> corpus_candidates() {
  const std::vector<std::pair<const char*, PiSet>> list = {
      {"sym4", {2, 3}},       {"sym4", {2}},          {"sym4", {3}},         {"dihedral6", {2}},
      {"sym3xc3", {3}},       {"aff7_3", {7}},        {"cyclic12", {3}},     {"aff7_6", {2, 3}},
      {"alt5", {2, 3}},       {"alt5", {2, 5}},       {"alt5", {3, 5}},      {"alt5", {2}},
      {"sym5", {2, 3}},       {"sym5", {3, 5}},       {"sym5", {2, 5}},      {"alt6", {2, 3}},
      {"alt6", {3, 5}},       {"sym6", {2, 3}},       {"sym6", {2, 5}},      {"psl2_7", {2, 3}},
      {"psl2_7", {2, 7}},     {"psl2_7", {3, 7}},     {"psl2_11", {2, 3}},   {"psl2_11", {2, 5}},
      {"psl2_11", {3, 5}},    {"psl2_13", {2, 3}},    {"psl2_13", {3, 7}},   {"gl32", {2, 3}},
      {"pgl2_7", {2, 3}},     {"pgl2_11", {2, 3}},    {"alt7", {2, 3}},      {"alt5xalt5", {2, 3}},
      {"alt5xc7", {2, 3}},    {"sym5xc3", {2, 3}},    {"sym4wr2", {2, 3}},   {"sym3wr2", {2, 3}},
      {"alt5wr2", {2, 3}},    {"psl2_7xc2", {2, 3}},  {"aff13_12", {3}},     {"sym7", {2, 3}},
      {"psl2_17", {2, 3}},    {"alt7", {2, 5}},
  };
  std::vector<CorpusEntry> out;
  for (const auto& [name, pi] : list) out.push_back({name, pi, std::nullopt, ""});
  return out;
}

ExpectedVerdicts expected_from(const EcdResult& r) { return {r.E, r.C, r.D, r.k}; }

std::vector<CorpusEntry> bootstrap_manifest(std::vector<CorpusEntry> entries, const Budget& budget,
                                            std::uint64_t seed) {
  for (auto& e : entries) {
    auto g = zoo_group(e.name);
    if (!g) throw std::invalid_argument("unknown zoo group " + e.name);
    Budget b = budget;
    e.expected = expected_from(classify_ECD(*g, e.pi, b, seed, true));
    e.provenance = "oracle bootstrap, seed " + std::to_string(seed);
  }
  return entries;
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "true") return Verdict::yes;
  if (s == "false") return Verdict::no;
  if (s == "budget_exceeded") return Verdict::budget_exceeded;
  throw std::runtime_error("unknown verdict '" + s + "'");
}

std::string manifest_to_json(const std::vector<CorpusEntry>& entries) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = "hallkit-corpus/1";
  doc["entries"] = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json j;
    j["name"] = e.name;
    j["pi"] = e.pi.to_vector();
    if (e.expected) {
      ordered_json x;
      x["E"] = to_string(e.expected->E);
      x["C"] = to_string(e.expected->C);
      x["D"] = to_string(e.expected->D);
      x["k"] = e.expected->k ? ordered_json(*e.expected->k) : ordered_json(nullptr);
      j["expected"] = x;
    }
    j["provenance"] = e.provenance;
    doc["entries"].push_back(j);
  }
  return doc.dump(2) + "\n";
}

std::vector<CorpusEntry> manifest_from_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("manifest: ") + e.what());
  }
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw std::runtime_error("manifest: missing \"entries\" array");
  std::vector<CorpusEntry> out;
  for (const auto& j : doc["entries"]) {
    try {
      CorpusEntry e;
      e.name = j.at("name").get<std::string>();
      auto primes = j.at("pi").get<std::vector<std::uint64_t>>();
      e.pi = PiSet(std::set<std::uint64_t>(primes.begin(), primes.end()));
      if (j.contains("expected")) {
        const auto& x = j["expected"];
        ExpectedVerdicts ev{verdict_from_string(x.at("E")), verdict_from_string(x.at("C")),
                            verdict_from_string(x.at("D")), std::nullopt};
        if (!x.at("k").is_null()) ev.k = x["k"].get<std::size_t>();
        e.expected = ev;
      }
      e.provenance = j.value("provenance", "");
      out.push_back(std::move(e));
    } catch (const json::exception& ex) {
      throw std::runtime_error("manifest entry " + std::to_string(out.size()) + ": " + ex.what());
    }
  }
  return out;
}

std::vector<CorpusEntry> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return manifest_from_json(ss.str());
}

std::string default_manifest_path() { return std::string(HALLKIT_DATA_DIR) + "/corpus.json"; }

}  // namespace hallkit
