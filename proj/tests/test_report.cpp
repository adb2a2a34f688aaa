#include <doctest.h>

#include "hallkit/report.hpp"
#include "hallkit/zoo.hpp"

using namespace hallkit;

namespace {

Report reduce_report(const std::string& name, const PiSet& pi) {
  Budget b;
  Report r;
  r.command = "reduce";
  r.input = {{"zoo", name}};
  r.pi = pi.to_vector();
  r.budgets = budget_json(b);
  auto c = compare_with_oracle(*zoo_group(name), pi, b);
  r.results["trace"] = trace_json(c.trace);
  r.results["comparison"] = comparison_json(c);
  r.timings = {{"reduction", c.reduction_ms}, {"oracle", c.oracle_ms}};
  return r;
}

}  // namespace

TEST_CASE("verdicts stay tri-state") {
  for (auto v : {Verdict::yes, Verdict::no, Verdict::budget_exceeded}) CHECK(verdict_from_json(verdict_json(v)) == v);
  CHECK(verdict_json(Verdict::budget_exceeded) == "budget_exceeded");
  CHECK(verdict_json(Verdict::no) == false);
  CHECK_THROWS(verdict_from_json(Json(0)));
}

TEST_CASE("reports round-trip") {
  for (const char* name : {"sym5", "gl32"}) {
    Report r = reduce_report(name, {2, 3});
    std::string text = dump(r);
    Report back = report_from_json(Json::parse(text));
    CHECK(back == r);
    CHECK(dump(back) == text);
  }
  CHECK_THROWS_AS(report_from_json(Json{{"schema_version", "other/9"}}), std::runtime_error);
}

TEST_CASE("results sections are reproducible") {
  Report a = reduce_report("alt5wr2", {2, 3});
  Report b = reduce_report("alt5wr2", {2, 3});
  CHECK(results_text(a) == results_text(b));
}

TEST_CASE("serialized traces replay") {
  for (const char* name : {"sym5", "sym4wr2", "alt5xalt5", "gl32", "psl2_7xc2"}) {
    Budget b;
    auto t = cpi_reduce(*zoo_group(name), {2, 3}, b);
    Json j = Json::parse(trace_json(t).dump());
    CAPTURE(name);
    CHECK(replay_trace(j) == "");
  }
}

TEST_CASE("replay catches a tampered trace") {
  Budget b;
  auto t = cpi_reduce(*zoo_group("sym5"), {2, 3}, b);
  Json j = trace_json(t);
  REQUIRE(j["levels"].size() >= 2);
  j["levels"][1]["H_generators"] = Json::array();
  CHECK(replay_trace(j) != "");

  Json k = trace_json(t);
  k["hall_witness"] = group_json(*zoo_group("sym5"));
  CHECK(replay_trace(k) == "witness is not a pi-Hall subgroup");
}

TEST_CASE("group json round-trips") {
  auto g = *zoo_group("aff7_6");
  CHECK(group_from_json(group_json(g)) == g);
}
