#include "hallkit/report.hpp"

#include <set>
#include <stdexcept>

namespace hallkit {

namespace {

Json order_json(const BigInt& n) { return to_string(n); }

Json summary(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = order_json(g.order());
  return j;
}

Json gens_json(const std::vector<Perm>& gens) {
  Json a = Json::array();
  for (const auto& x : gens) a.push_back(std::vector<Point>(x.images().begin(), x.images().end()));
  return a;
}

Json opt_verdict(const std::optional<Verdict>& v) { return v ? verdict_json(*v) : Json(nullptr); }

Json opt_size(const std::optional<std::size_t>& k) { return k ? Json(*k) : Json(nullptr); }

Json expected_json(const ExpectedVerdicts& e) {
  Json j;
  j["E"] = verdict_json(e.E);
  j["C"] = verdict_json(e.C);
  j["D"] = verdict_json(e.D);
  j["k"] = opt_size(e.k);
  return j;
}

}  // namespace

Json verdict_json(Verdict v) {
  switch (v) {
    case Verdict::yes: return true;
    case Verdict::no: return false;
    case Verdict::budget_exceeded: return "budget_exceeded";
  }
  return nullptr;
}

Verdict verdict_from_json(const Json& j) {
  if (j.is_boolean()) return verdict(j.get<bool>());
  if (j == "budget_exceeded") return Verdict::budget_exceeded;
  throw std::runtime_error("not a verdict: " + j.dump());
}

Json budget_json(const Budget& b) {
  Json j;
  j["node_limit"] = b.node_limit;
  j["order_limit"] = b.order_limit;
  return j;
}

Json group_json(const PermGroup& g) {
  Json j = summary(g);
  j["generators"] = gens_json(g.generators());
  return j;
}

PermGroup group_from_json(const Json& j) {
  auto n = j.at("degree").get<std::size_t>();
  std::vector<Perm> gens;
  for (const auto& x : j.at("generators")) {
    auto images = x.get<std::vector<Point>>();
    if (images.size() != n) throw std::runtime_error("generator of the wrong degree");
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

Json ecd_json(const EcdResult& r) {
  Json j;
  j["E"] = verdict_json(r.E);
  j["C"] = verdict_json(r.C);
  j["D"] = verdict_json(r.D);
  j["k"] = opt_size(r.k);
  j["pi_separable"] = r.pi_separable;
  j["class_fingerprints"] = Json::array();
  for (const auto& f : r.class_fingerprints) j["class_fingerprints"].push_back(f.to_string());
  j["d_witness"] = r.d_witness ? group_json(*r.d_witness) : Json(nullptr);
  return j;
}

Json hall_classes_json(const HallClassSet& s) {
  Json j;
  j["group"] = summary(s.group);
  j["pi"] = s.pi.to_vector();
  j["k"] = s.k();
  j["exhaustive"] = s.exhaustive;
  j["found_containing_sylow"] = s.found_containing_sylow;
  j["accounting_ok"] = s.accounting_ok;
  j["classes"] = Json::array();
  for (std::size_t i = 0; i < s.k(); ++i) {
    Json c = group_json(s.class_reps[i]);
    c["class_size"] = order_json(s.class_sizes[i]);
    c["fingerprint"] = fingerprint(s.class_reps[i]).to_string();
    j["classes"].push_back(c);
  }
  return j;
}

Json k_report_json(const KReport& k) {
  Json j;
  j["group"] = summary(k.group);
  j["normal_subgroup"] = group_json(k.normal_subgroup);
  j["pi"] = k.pi.to_vector();
  j["E"] = k.group_has_hall;
  j["k_induced"] = k.k_induced;
  j["k_total"] = k.k_total;
  j["induced_class_fingerprints"] = Json::array();
  for (const auto& m : k.induced_class_reps) j["induced_class_fingerprints"].push_back(fingerprint(m).to_string());
  return j;
}

Json trace_json(const ReductionTrace& t) {
  Json j;
  j["group"] = group_json(t.group);
  j["pi"] = t.pi.to_vector();
  j["verdict"] = verdict_json(t.verdict);
  j["composition_factor_criterion"] = opt_verdict(t.shortcut);
  j["used_injected"] = t.used_injected;
  j["series"] = Json::array();
  for (std::size_t i = 0; i < t.series.terms.size(); ++i) {
    Json s = group_json(t.series.terms[i]);
    if (i > 0) {
      const auto& f = t.series.factors[i - 1];
      s["factor_order"] = order_json(f.order);
      s["factor_kind"] = to_string(f.abelian ? FactorKind::abelian : FactorKind::semisimple);
    }
    j["series"].push_back(s);
  }
  j["levels"] = Json::array();
  for (const auto& lv : t.levels) {
    Json l;
    l["index"] = lv.index;
    l["factor_order"] = order_json(lv.factor_order);
    l["factor_kind"] = to_string(lv.factor_kind);
    l["simple_factor_count"] = lv.simple_factor_count;
    l["H_order"] = order_json(lv.H_order);
    l["H_generators"] = gens_json(lv.H_generators);
    l["automizer_checks"] = Json::array();
    for (const auto& c : lv.automizer_checks) {
      Json a;
      a["factor_index"] = c.factor_index;
      a["automizer_order"] = order_json(c.automizer_order);
      a["cpi"] = verdict_json(c.cpi);
      a["strategy"] = to_string(c.strategy);
      a["injected"] = c.injected;
      l["automizer_checks"].push_back(a);
    }
    l["hall_method"] = lv.hall_method.empty() ? Json(nullptr) : Json(lv.hall_method);
    j["levels"].push_back(l);
  }
  j["hall_witness"] = t.hall_witness ? group_json(*t.hall_witness) : Json(nullptr);
  j["budget_level"] = opt_size(t.budget_level);
  j["budget_message"] = t.budget_message;
  return j;
}

Json comparison_json(const OracleComparison& c) {
  Json j;
  j["reduction"] = verdict_json(c.reduction);
  j["oracle"] = verdict_json(c.oracle);
  j["oracle_k"] = opt_size(c.oracle_k);
  j["decided"] = c.decided;
  j["agree"] = c.agree;
  return j;
}

Json gl52_json(const Gl52Report& r) {
  Json j;
  j["ok"] = r.ok();
  j["claims"] = Json::array();
  for (const auto& c : r.claims) {
    Json x;
    x["name"] = c.name;
    x["pass"] = c.pass;
    x["detail"] = c.detail;
    x["provenance"] = c.provenance;
    j["claims"].push_back(x);
  }
  j["G_order"] = order_json(r.G_order);
  j["G_factorization"] = r.G_factorization;
  j["hall_orders"] = Json::array();
  for (const auto& n : r.hall_orders) j["hall_orders"].push_back(order_json(n));
  j["hall_orbit_lengths"] = r.hall_orbit_lengths;
  j["H"] = r.H ? group_json(*r.H) : Json(nullptr);
  j["k_induced_known"] = r.k_induced_known;
  j["known_classes"] = r.known_classes;
  j["k_exhaustive_verified"] = r.k_exhaustive_verified;
  j["k_exhaustive_note"] = "the three known classes are not proven to be all {2,3}-Hall classes of GL(5,2)";
  j["injected_verdicts"] = r.registry.size();
  j["reduction"] = r.reduction ? trace_json(*r.reduction) : Json(nullptr);
  return j;
}

Json suite_json(const SuiteResult& s) {
  Json j;
  j["id"] = s.id;
  j["statement"] = s.statement;
  j["pass"] = s.pass();
  j["checked"] = s.checked;
  j["violations"] = s.violations;
  j["skipped"] = s.skipped;
  j["failures"] = s.failures;
  return j;
}

Json corpus_json(const CorpusReport& c, std::vector<std::pair<std::string, double>>* timings) {
  Json j;
  j["ok"] = c.ok();
  j["suites"] = Json::array();
  for (const auto& s : c.suites) j["suites"].push_back(suite_json(s));
  j["entries"] = Json::array();
  for (const auto& e : c.entries) {
    Json x;
    x["index"] = e.index;
    x["name"] = e.name;
    x["pi"] = e.pi.to_vector();
    x["order"] = order_json(e.order);
    x["observed"] = expected_json(e.observed);
    x["expected"] = e.expected ? expected_json(*e.expected) : Json(nullptr);
    x["reduction"] = verdict_json(e.reduction);
    x["agree"] = e.agree;
    x["composition_factor_criterion"] = opt_verdict(e.shortcut);
    x["class_fingerprints"] = e.class_fingerprints;
    x["suites"] = Json::object();
    for (const auto& s : e.suites)
      if (s.checked || s.violations || s.skipped)
        x["suites"][s.id] = {{"checked", s.checked}, {"violations", s.violations}, {"skipped", s.skipped}};
    x["error"] = e.error;
    j["entries"].push_back(x);
    if (timings) {
      std::string key = std::to_string(e.index) + ":" + e.name + ":" + e.pi.to_string();
      timings->emplace_back(key + ":oracle", e.oracle_ms);
      timings->emplace_back(key + ":reduction", e.reduction_ms);
      timings->emplace_back(key + ":total", e.total_ms);
    }
  }
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  j["input"] = r.input;
  j["pi"] = r.pi;
  j["seed"] = r.seed;
  j["budgets"] = r.budgets;
  j["results"] = r.results;
  j["timings"] = Json::object();
  for (const auto& [k, v] : r.timings) j["timings"][k] = v;
  return j;
}

Report report_from_json(const Json& j) {
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<std::string>();
    if (r.schema_version != kReportSchema) throw std::runtime_error("unknown schema " + r.schema_version);
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input");
    r.pi = j.at("pi").get<std::vector<std::uint64_t>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.budgets = j.at("budgets");
    r.results = j.at("results");
    for (const auto& [k, v] : j.at("timings").items()) r.timings.emplace_back(k, v.get<double>());
    return r;
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("report: ") + e.what());
  }
}

std::string dump(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string results_text(const Report& r) { return r.results.dump(2) + "\n"; }

std::string replay_trace(const Json& trace) {
  try {
    PermGroup g = group_from_json(trace.at("group"));
    auto primes = trace.at("pi").get<std::vector<std::uint64_t>>();
    PiSet pi(std::set<std::uint64_t>(primes.begin(), primes.end()));
    std::vector<PermGroup> terms;
    for (const auto& s : trace.at("series")) terms.push_back(group_from_json(s));
    if (terms.empty() || terms.front() != g || !terms.back().is_trivial()) return "series does not run from G to 1";
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (!terms[i - 1].contains(terms[i])) return "series is not descending at term " + std::to_string(i);
    std::optional<PermGroup> prev;
    for (const auto& l : trace.at("levels")) {
      auto i = l.at("index").get<std::size_t>();
      if (i == 0 || i >= terms.size()) return "level index out of range";
      PermGroup h(g.degree(), [&] {
        std::vector<Perm> gens;
        for (const auto& x : l.at("H_generators")) gens.emplace_back(x.get<std::vector<Point>>());
        return gens;
      }());
      std::string where = "level " + std::to_string(i) + ": ";
      if (to_string(h.order()) != l.at("H_order").get<std::string>()) return where + "recorded order is wrong";
      if (!g.contains(h)) return where + "H is not a subgroup of G";
      if (!h.contains(terms[i - 1])) return where + "H does not contain the series term above it";
      const BigInt& top = terms[i - 1].order();
      if (h.order() != top * pi_part(g.order() / top, pi)) return where + "H has the wrong order";
      if (prev && !prev->contains(h)) return where + "H is not inside the previous H";
      prev = std::move(h);
    }
    const Json& w = trace.at("hall_witness");
    bool yes = verdict_from_json(trace.at("verdict")) == Verdict::yes;
    if (yes != !w.is_null()) return "verdict and witness disagree";
    if (yes) {
      PermGroup k = group_from_json(w);
      if (!is_hall(g, k, pi)) return "witness is not a pi-Hall subgroup";
      if (prev && !prev->contains(k)) return "witness is not inside the last H";
    }
    return "";
  } catch (const std::exception& e) {
    return std::string("malformed trace: ") + e.what();
  }
}

}  // namespace hallkit
