#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "hallkit/io.hpp"
#include "hallkit/report.hpp"
#include "hallkit/search.hpp"
#include "hallkit/zoo.hpp"

using namespace hallkit;

namespace {

enum Exit { ok = 0, parse_error = 2, budget_error = 3, bad_pi = 4, verification_failed = 5, bad_subgroup = 6 };

struct Failure {
  int code;
  std::string message;
};

struct Globals {
  std::string pi;
  std::uint64_t seed = 1;
  std::uint64_t budget_nodes = Budget{}.node_limit;
  std::uint64_t budget_order = Budget{}.order_limit;
  std::string json_path;

  Budget budget() const {
    Budget b;
    b.node_limit = budget_nodes;
    b.order_limit = budget_order;
    return b;
  }
};

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t).count();
}

PiSet parse_pi(const Globals& g) {
  if (g.pi.empty()) throw Failure{bad_pi, "--pi is required"};
  try {
    return PiSet::parse(g.pi);
  } catch (const std::exception& e) {
    throw Failure{bad_pi, std::string("invalid pi: ") + e.what()};
  }
}

struct Input {
  std::string name;
  PermGroup group;
  Json descriptor;
};

Input load(const std::string& spec) {
  if (auto g = zoo_group(spec)) {
    Json d{{"kind", "zoo"}, {"name", spec}, {"degree", g->degree()}, {"order", to_string(g->order())}};
    return {spec, *g, d};
  }
  if (!std::filesystem::exists(spec)) throw Failure{parse_error, "'" + spec + "' is neither a zoo name nor a file"};
  try {
    auto f = read_group_file(spec);
    Json d{{"kind", "file"}, {"name", f.name}, {"degree", f.group.degree()}, {"order", to_string(f.group.order())}};
    return {f.name, f.group, d};
  } catch (const GroupParseError& e) {
    std::string where = spec + ":" + std::to_string(e.line());
    if (e.generator()) where += " (generator " + std::to_string(*e.generator()) + ")";
    throw Failure{parse_error, where + ": " + e.what()};
  }
}

PermGroup pad(const PermGroup& h, std::size_t n) {
  std::vector<Perm> gens;
  for (const auto& x : h.generators()) {
    std::vector<Point> img(x.images().begin(), x.images().end());
    for (std::size_t i = img.size(); i < n; ++i) img.push_back(static_cast<Point>(i));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

// derived, center, socle, whole, a zoo name (intersected with the group) or a group file.
PermGroup normal_from_spec(const PermGroup& g, const std::string& spec, Budget& budget, std::uint64_t seed) {
  PermGroup a;
  if (spec == "derived") {
    a = derived_subgroup(g);
  } else if (spec == "center") {
    a = center(g, budget);
  } else if (spec == "whole") {
    a = g;
  } else if (spec == "socle") {
    std::vector<Perm> gens;
    for (const auto& m : minimal_normal_subgroups(g, budget, seed))
      gens.insert(gens.end(), m.generators().begin(), m.generators().end());
    a = PermGroup(g.degree(), std::move(gens));
  } else {
    PermGroup h;
    if (auto z = zoo_group(spec)) {
      h = *z;
    } else if (std::filesystem::exists(spec)) {
      try {
        h = read_group_file(spec).group;
      } catch (const GroupParseError& e) {
        throw Failure{bad_subgroup, spec + ":" + std::to_string(e.line()) + ": " + e.what()};
      }
    } else {
      throw Failure{bad_subgroup, "unknown subgroup spec '" + spec + "'"};
    }
    if (h.degree() > g.degree()) throw Failure{bad_subgroup, "subgroup '" + spec + "' has larger degree"};
    a = intersection(g, pad(h, g.degree()), budget);
  }
  if (!is_normal(g, a)) throw Failure{bad_subgroup, "subgroup '" + spec + "' is not normal"};
  return a;
}

Report base_report(const std::string& command, const Globals& gl) {
  Report r;
  r.command = command;
  r.seed = gl.seed;
  r.budgets = budget_json(gl.budget());
  return r;
}

void emit(const Report& r, const Globals& gl) {
  if (gl.json_path.empty()) return;
  if (gl.json_path == "-") {
    std::cout << dump(r);
    return;
  }
  std::ofstream out(gl.json_path);
  if (!out) throw Failure{parse_error, "cannot write " + gl.json_path};
  out << dump(r);
}

std::ostream& text(const Globals& gl) { return gl.json_path == "-" ? std::cerr : std::cout; }

int cmd_analyze(const Globals& gl, const std::string& spec) {
  PiSet pi = parse_pi(gl);
  Input in = load(spec);
  Report r = base_report("analyze", gl);
  r.input = in.descriptor;
  r.pi = pi.to_vector();
  Budget b = gl.budget();
  auto t0 = clock_type::now();
  EcdResult e;
  try {
    e = classify_ECD(in.group, pi, b, gl.seed);
  } catch (const BudgetExceeded& ex) {
    r.results["error"] = ex.what();
    r.results["E"] = r.results["C"] = r.results["D"] = verdict_json(Verdict::budget_exceeded);
    emit(r, gl);
    throw Failure{budget_error, ex.what()};
  }
  r.timings.emplace_back("classify", since(t0));
  r.results = ecd_json(e);
  r.results["hall_order"] = to_string(pi_part(in.group.order(), pi));
  emit(r, gl);
  auto& os = text(gl);
  os << in.name << " pi={" << pi.to_string() << "} order " << to_string(in.group.order()) << "\n"
     << "  E: " << to_string(e.E) << "  C: " << to_string(e.C) << "  D: " << to_string(e.D)
     << "  k: " << (e.k ? std::to_string(*e.k) : "?") << "\n";
  for (const auto& f : e.class_fingerprints) os << "  class " << f.to_string() << "\n";
  bool open = e.E == Verdict::budget_exceeded || e.C == Verdict::budget_exceeded || e.D == Verdict::budget_exceeded;
  return open ? budget_error : ok;
}

int cmd_reduce(const Globals& gl, const std::string& spec, bool compare) {
  PiSet pi = parse_pi(gl);
  Input in = load(spec);
  Report r = base_report("reduce", gl);
  r.input = in.descriptor;
  r.pi = pi.to_vector();
  ReductionOptions opts;
  opts.seed = gl.seed;
  ReductionTrace t;
  std::optional<OracleComparison> c;
  if (compare) {
    c = compare_with_oracle(in.group, pi, gl.budget(), opts);
    t = c->trace;
    r.timings = {{"reduction", c->reduction_ms}, {"oracle", c->oracle_ms}};
  } else {
    Budget b = gl.budget();
    auto t0 = clock_type::now();
    t = cpi_reduce(in.group, pi, b, opts);
    r.timings.emplace_back("reduction", since(t0));
  }
  r.results["verdict"] = verdict_json(t.verdict);
  r.results["trace"] = trace_json(t);
  if (c) r.results["comparison"] = comparison_json(*c);
  emit(r, gl);
  auto& os = text(gl);
  os << in.name << " pi={" << pi.to_string() << "} C_pi by reduction: " << to_string(t.verdict) << "\n";
  for (const auto& lv : t.levels)
    os << "  level " << lv.index << ": factor " << to_string(lv.factor_order) << " (" << to_string(lv.factor_kind)
       << "), |H| = " << to_string(lv.H_order) << (lv.hall_method.empty() ? "" : ", next by " + lv.hall_method)
       << "\n";
  if (t.budget_level) os << "  budget exceeded at level " << *t.budget_level << ": " << t.budget_message << "\n";
  if (c) {
    os << "  oracle: " << to_string(c->oracle) << (c->oracle_k ? " (k=" + std::to_string(*c->oracle_k) + ")" : "")
       << ", " << (c->agree ? "agree" : c->decided ? "DISAGREE" : "undecided") << "\n";
    if (c->decided && !c->agree) return verification_failed;
  }
  return t.verdict == Verdict::budget_exceeded ? budget_error : ok;
}

int cmd_k(const Globals& gl, const std::string& spec, const std::string& normal) {
  PiSet pi = parse_pi(gl);
  Input in = load(spec);
  Budget b = gl.budget();
  PermGroup a = normal_from_spec(in.group, normal, b, gl.seed);
  Report r = base_report("k", gl);
  r.input = in.descriptor;
  r.input["normal"] = normal;
  r.pi = pi.to_vector();
  auto t0 = clock_type::now();
  KReport k;
  try {
    k = k_induced(in.group, a, pi, b, gl.seed);
  } catch (const BudgetExceeded& ex) {
    throw Failure{budget_error, ex.what()};
  }
  r.timings.emplace_back("k_induced", since(t0));
  r.results = k_report_json(k);
  emit(r, gl);
  text(gl) << in.name << " normal=" << normal << " (order " << to_string(a.order()) << ") pi={" << pi.to_string()
           << "}\n  E: " << (k.group_has_hall ? "true" : "false") << "  k_induced: " << k.k_induced
           << "  k_total: " << k.k_total << "\n";
  return ok;
}

int cmd_corpus(const Globals& gl, std::size_t jobs, std::string manifest, const std::string& bootstrap) {
  if (!bootstrap.empty()) {
    auto t0 = clock_type::now();
    auto m = bootstrap_manifest(corpus_candidates(), gl.budget(), gl.seed);
    std::ofstream out(bootstrap);
    if (!out) throw Failure{parse_error, "cannot write " + bootstrap};
    out << manifest_to_json(m);
    std::cout << "wrote " << m.size() << " entries to " << bootstrap << " in " << std::fixed << std::setprecision(1)
              << since(t0) / 1000 << " s\n";
    return ok;
  }
  if (manifest.empty()) manifest = default_manifest_path();
  std::vector<CorpusEntry> entries;
  try {
    entries = read_manifest(manifest);
  } catch (const std::exception& e) {
    throw Failure{parse_error, e.what()};
  }
  Report r = base_report("corpus", gl);
  r.input = {{"kind", "manifest"}, {"entries", entries.size()}};
  auto t0 = clock_type::now();
  CorpusReport c = run_corpus(entries, gl.budget(), gl.seed, jobs);
  r.results = corpus_json(c, &r.timings);
  r.timings.emplace_back("total", since(t0));
  emit(r, gl);
  auto& os = text(gl);
  for (const auto& e : c.entries)
    if (!e.error.empty() || !e.agree) os << "  " << e.name << " {" << e.pi.to_string() << "}: " << e.error << "\n";
  os << std::left << std::setw(30) << "suite" << std::right << std::setw(9) << "checked" << std::setw(12)
     << "violations" << std::setw(9) << "skipped" << "  result\n";
  for (const auto& s : c.suites) {
    os << std::left << std::setw(30) << s.id << std::right << std::setw(9) << s.checked << std::setw(12)
       << s.violations << std::setw(9) << s.skipped << "  " << (s.pass() ? "pass" : "FAIL") << "\n";
    for (const auto& f : s.failures) os << "    " << f << "\n";
  }
  os << c.entries.size() << " entries, " << (c.ok() ? "all suites pass" : "FAILURES") << "\n";
  return c.ok() ? ok : verification_failed;
}

int cmd_zoo_emit(const std::string& name, const std::string& out) {
  auto g = zoo_group(name);
  if (!g) throw Failure{parse_error, "unknown zoo group '" + name + "'"};
  std::string s = group_to_json(name, *g);
  if (out.empty()) {
    std::cout << s;
  } else {
    std::ofstream f(out);
    if (!f) throw Failure{parse_error, "cannot write " + out};
    f << s;
  }
  return ok;
}

int cmd_example(const Globals& gl) {
  Report r = base_report("example-gl52", gl);
  r.input = {{"kind", "example"}, {"name", "gl52_hat"}};
  r.pi = {2, 3};
  Budget b = gl.budget();
  auto t0 = clock_type::now();
  Gl52Report g = run_gl52_example(b);
  r.timings.emplace_back("pipeline", since(t0));
  r.results = gl52_json(g);
  emit(r, gl);
  auto& os = text(gl);
  for (const auto& c : g.claims)
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.name << " [" << c.provenance << "]"
       << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  os << "  k_induced over the " << g.known_classes << " known classes: " << g.k_induced_known
     << " (exhaustiveness of the classes: unverified)\n";
  if (const auto* f = g.failed()) {
    std::cerr << "failed claim: " << f->name << "\n";
    return verification_failed;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall subgroup analysis for permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--pi", gl.pi, "comma separated primes, e.g. 2,3");
  app.add_option("--seed", gl.seed, "random seed")->capture_default_str();
  app.add_option("--budget-nodes", gl.budget_nodes, "search node limit")->capture_default_str();
  app.add_option("--budget-order", gl.budget_order, "largest group order for exhaustive search")
      ->capture_default_str();
  app.add_option("--json", gl.json_path, "write the JSON report here ('-' for stdout)");

  std::string input, normal, manifest, bootstrap, out, zoo_name;
  bool compare = false;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* analyze = app.add_subcommand("analyze", "E, C and D verdicts with Hall class fingerprints");
  analyze->add_option("group", input, "zoo name or group file")->required();
  auto* reduce = app.add_subcommand("reduce", "C verdict through the chief series");
  reduce->add_option("group", input, "zoo name or group file")->required();
  reduce->add_flag("--compare-oracle", compare, "also run the exhaustive oracle");
  auto* k = app.add_subcommand("k", "classes of Hall subgroups of a normal subgroup induced by the group");
  k->add_option("group", input, "zoo name or group file")->required();
  k->add_option("--normal", normal, "derived, center, socle, whole, a zoo name or a group file")->required();
  auto* corpus = app.add_subcommand("corpus", "run every suite over a manifest");
  corpus->add_option("--jobs", jobs, "worker threads");
  corpus->add_option("--manifest", manifest, "manifest path (default: the bundled corpus)");
  corpus->add_option("--bootstrap", bootstrap, "write a manifest with oracle expectations and stop");
  auto* zoo = app.add_subcommand("zoo", "named groups");
  zoo->require_subcommand(1);
  auto* zoo_list = zoo->add_subcommand("list", "print the names");
  auto* zoo_emit = zoo->add_subcommand("emit", "print a group file");
  zoo_emit->add_option("name", zoo_name)->required();
  zoo_emit->add_option("-o,--output", out, "output path");
  auto* example = app.add_subcommand("example-gl52", "the GL(5,2) example with its outer automorphism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : parse_error;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(gl, input);
    if (reduce->parsed()) return cmd_reduce(gl, input, compare);
    if (k->parsed()) return cmd_k(gl, input, normal);
    if (corpus->parsed()) return cmd_corpus(gl, std::max<std::size_t>(jobs, 1), manifest, bootstrap);
    if (zoo_list->parsed()) {
      for (const auto& n : zoo_names()) std::cout << n << "\n";
      return ok;
    }
    if (zoo_emit->parsed()) return cmd_zoo_emit(zoo_name, out);
    if (example->parsed()) return cmd_example(gl);
  } catch (const Failure& f) {
    std::cerr << "hallkit: " << f.message << "\n";
    return f.code;
  } catch (const BudgetExceeded& e) {
    std::cerr << "hallkit: " << e.what() << "\n";
    return budget_error;
  } catch (const InvalidPi& e) {
    std::cerr << "hallkit: " << e.what() << "\n";
    return bad_pi;
  }
  return ok;
}
