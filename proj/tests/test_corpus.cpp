#include <doctest.h>

#include <algorithm>

#include "hallkit/report.hpp"
#include "hallkit/zoo.hpp"

using namespace hallkit;

TEST_CASE("default manifest is complete") {
  auto m = read_manifest(default_manifest_path());
  CHECK(m.size() >= 30);
  for (const auto& e : m) {
    CAPTURE(e.name);
    CHECK(e.expected.has_value());
    auto g = zoo_group(e.name);
    REQUIRE(g.has_value());
    CHECK(g->order() <= 1'000'000);
  }
  CHECK(manifest_from_json(manifest_to_json(m)).size() == m.size());
}

TEST_CASE("solvable entries pass with D everywhere") {
  std::vector<CorpusEntry> solvable;
  for (const auto& e : read_manifest(default_manifest_path()))
    if (is_solvable(*zoo_group(e.name))) solvable.push_back(e);
  REQUIRE(solvable.size() >= 5);
  auto r = run_corpus(solvable, Budget{}, 1, 4);
  CHECK(r.ok());
  for (const auto& e : r.entries) {
    CAPTURE(e.name);
    CHECK(e.observed.D == Verdict::yes);
    CHECK(e.agree);
  }
}

TEST_CASE("single entry gives one row and worker count does not matter") {
  std::vector<CorpusEntry> one{{"sym4", {2, 3}, std::nullopt, ""}};
  auto a = run_corpus(one, Budget{}, 1, 1);
  REQUIRE(a.entries.size() == 1);
  CHECK(a.ok());

  std::vector<CorpusEntry> few = corpus_candidates();
  few.resize(8);
  few = bootstrap_manifest(few, Budget{});
  CHECK(corpus_json(run_corpus(few, Budget{}, 1, 1)).dump() == corpus_json(run_corpus(few, Budget{}, 1, 4)).dump());
}

TEST_CASE("a wrong expectation is a violation") {
  auto m = bootstrap_manifest({{"alt5", {2, 3}, std::nullopt, ""}}, Budget{});
  m[0].expected->k = 2;
  auto r = run_corpus(m, Budget{}, 1, 1);
  CHECK_FALSE(r.ok());
  auto it = std::find_if(r.suites.begin(), r.suites.end(), [](const auto& s) { return s.id == "manifest"; });
  REQUIRE(it != r.suites.end());
  CHECK(it->violations == 1);
}
