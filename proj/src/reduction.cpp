#include "hallkit/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "hallkit/search.hpp"

namespace hallkit {

void VerdictRegistry::add(InjectedVerdict v) { entries_.push_back(std::move(v)); }

const InjectedVerdict* VerdictRegistry::find(const PermGroup& g, const PiSet& pi) const {
  for (const auto& e : entries_)
    if (e.pi == pi && e.group.degree() == g.degree() && e.group.order() == g.order() && e.group == g)
      return &e;
  return nullptr;
}

std::string to_string(FactorKind k) { return k == FactorKind::abelian ? "abelian" : "semisimple"; }

namespace {

Verdict combine(const std::vector<Verdict>& vs) {
  bool open = false;
  for (auto v : vs) {
    if (v == Verdict::no) return Verdict::no;
    open = open || v == Verdict::budget_exceeded;
  }
  return open ? Verdict::budget_exceeded : Verdict::yes;
}

Verdict cpi_of(const PermGroup& x, const PiSet& pi, Budget& budget, const ReductionOptions& opts,
               bool* injected = nullptr) {
  if (opts.registry)
    if (const auto* e = opts.registry->find(x, pi)) {
      if (injected) *injected = true;
      return e->cpi;
    }
  return classify_ECD(x, pi, budget, opts.seed).C;
}

// Full preimage in h of a pi-Hall subgroup of h/b.
std::pair<PermGroup, std::string> next_level(const PermGroup& h, const PermGroup& a, const PermGroup& b,
                                             const PiSet& pi, Budget& budget, const ReductionOptions& opts) {
  std::optional<ActionHom> hom;
  PermGroup q = h, abar = a;
  if (!b.is_trivial()) {
    hom.emplace(quotient_action(h, b, opts.index_budget));
    q = hom->image();
    abar = hom->image_of(a);
  }
  std::optional<PermGroup> k;
  std::string method;
  const InjectedVerdict* e = opts.registry ? opts.registry->find(q, pi) : nullptr;
  if (e && e->hall) {
    k = e->hall;
    method = "injected";
  } else if (q.order() <= opts.element_budget) {
    method = "extend";
    for (const auto& m : all_hall_classes(abar, pi, budget, opts.seed).class_reps)
      if (class_is_G_invariant(q, abar, m, budget)) {
        k = extend_hall(q, abar, m, pi, budget, opts.seed);
        break;
      }
  } else {
    method = "find";
    k = find_hall(q, pi, budget, opts.seed);
  }
  if (!k) throw std::logic_error("reduction: section has no pi-Hall subgroup after a passing check");
  return {hom ? hom->preimage(*k) : *k, method};
}

}  // namespace

std::vector<AutomizerCheck> automizer_cpi_check(const PermGroup& hi, const PermGroup& a, const PermGroup& b,
                                                const std::vector<PermGroup>& factors, bool abelian,
                                                const PiSet& pi, Budget& budget,
                                                const ReductionOptions& opts) {
  if (abelian) {
    AutomizerCheck c;
    c.automizer_order = a.order() / b.order();
    c.cpi = Verdict::yes;
    return {c};
  }
  std::vector<int> orbit(factors.size(), -1);
  std::vector<std::size_t> reps;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (orbit[j] >= 0) continue;
    orbit[j] = static_cast<int>(reps.size());
    std::vector<std::size_t> todo{j};
    for (std::size_t i = 0; i < todo.size(); ++i)
      for (const auto& t : hi.generators()) {
        PermGroup img = factors[todo[i]].conjugate(t);
        auto it = std::find(factors.begin(), factors.end(), img);
        if (it == factors.end()) throw std::logic_error("automizer_cpi_check: factors not permuted");
        auto k = static_cast<std::size_t>(it - factors.begin());
        if (orbit[k] < 0) {
          orbit[k] = orbit[j];
          todo.push_back(k);
        }
      }
    reps.push_back(j);
  }
  std::vector<AutomizerCheck> out;
  for (auto j : reps) {
    const PermGroup& s = factors[j];
    PermGroup n = is_normal(hi, s) ? hi : normalizer(hi, s, budget);
    InducedAutomizer aut = induced_automizer(n, s, b, budget, opts.element_budget, opts.index_budget);
    AutomizerCheck c;
    c.factor_index = j;
    c.strategy = aut.strategy;
    c.automizer_order = aut.section_image.order();
    c.cpi = cpi_of(aut.section_image, pi, budget, opts, &c.injected);
    out.push_back(std::move(c));
  }
  return out;
}

PermGroup section_group(const PermGroup& s, const PermGroup& b, const ReductionOptions& opts) {
  if (b.is_trivial()) return s;
  if (s.order() / b.order() <= opts.element_budget)
    return section_element_action(s, s, b, opts.element_budget).image();
  return quotient_action(s, b, opts.index_budget).image();
}

namespace {

std::optional<Verdict> criterion_from_series(const ChiefSeries& cs, const PiSet& pi, Budget& budget,
                                             const ReductionOptions& opts) {
  if (pi.contains(2) && pi.contains(3)) return std::nullopt;
  std::vector<Verdict> vs;
  for (std::size_t i = 1; i < cs.terms.size(); ++i) {
    const ChiefFactor& f = cs.factors[i - 1];
    if (f.abelian) continue;
    try {
      vs.push_back(cpi_of(section_group(f.simple_factors.front(), cs.terms[i], opts), pi, budget, opts));
    } catch (const BudgetExceeded&) {
      vs.push_back(Verdict::budget_exceeded);
    }
    if (vs.back() == Verdict::no) break;
  }
  return combine(vs);
}

}  // namespace

std::optional<Verdict> composition_factor_criterion(const PermGroup& g, const PiSet& pi, Budget& budget,
                                                    const ReductionOptions& opts) {
  if (pi.contains(2) && pi.contains(3)) return std::nullopt;
  return criterion_from_series(chief_series(g, budget, opts.seed), pi, budget, opts);
}

ReductionTrace cpi_reduce(const PermGroup& g, const PiSet& pi, Budget& budget, const ReductionOptions& opts) {
  ReductionTrace t;
  t.group = g;
  t.pi = pi;
  std::size_t level = 0;
  try {
    t.series = chief_series(g, budget, opts.seed);
    t.shortcut = criterion_from_series(t.series, pi, budget, opts);
    PermGroup h = g;
    const std::size_t n = t.series.terms.size() - 1;
    for (std::size_t i = 1; i <= n; ++i) {
      level = i;
      const PermGroup& a = t.series.terms[i - 1];
      const PermGroup& b = t.series.terms[i];
      const ChiefFactor& f = t.series.factors[i - 1];
      ReductionLevel lv;
      lv.index = i;
      lv.factor_order = f.order;
      lv.factor_kind = f.abelian ? FactorKind::abelian : FactorKind::semisimple;
      lv.simple_factor_count = f.simple_factors.size();
      lv.H_order = h.order();
      lv.H_generators = h.generators();
      lv.automizer_checks = automizer_cpi_check(h, a, b, f.simple_factors, f.abelian, pi, budget, opts);
      std::vector<Verdict> vs;
      for (const auto& c : lv.automizer_checks) {
        vs.push_back(c.cpi);
        t.used_injected = t.used_injected || c.injected;
      }
      Verdict v = combine(vs);
      if (v != Verdict::yes) {
        t.levels.push_back(std::move(lv));
        t.verdict = v;
        if (v == Verdict::budget_exceeded) {
          t.budget_level = i;
          t.budget_message = "automizer check undecided";
        }
        return t;
      }
      auto [next, method] = next_level(h, a, b, pi, budget, opts);
      lv.hall_method = method;
      t.used_injected = t.used_injected || method == "injected";
      t.levels.push_back(std::move(lv));
      if (!next.contains(b) || next.order() / b.order() != pi_part(g.order() / b.order(), pi))
        throw std::logic_error("cpi_reduce: level " + std::to_string(i) + " fails the order arithmetic");
      h = std::move(next);
    }
    if (!is_hall(g, h, pi)) throw std::logic_error("cpi_reduce: final subgroup is not a pi-Hall subgroup");
    t.verdict = Verdict::yes;
    t.hall_witness = h;
  } catch (const BudgetExceeded& e) {
    t.verdict = Verdict::budget_exceeded;
    t.budget_level = level;
    t.budget_message = e.what();
  }
  return t;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g, Budget& budget, std::uint64_t seed,
                                        std::size_t limit) {
  std::vector<PermGroup> all{PermGroup(g.degree())};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (auto& n : minimal_normal_over(g, all[i], budget, seed)) {
      if (std::find(all.begin(), all.end(), n) != all.end()) continue;
      if (all.size() >= limit)
        throw BudgetExceeded("more than " + std::to_string(limit) + " normal subgroups");
      all.push_back(std::move(n));
    }
  std::vector<std::string> keys;
  for (const auto& n : all) keys.push_back(subgroup_fingerprint(n));
  std::vector<std::size_t> idx(all.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) {
    if (all[x].order() != all[y].order()) return all[x].order() < all[y].order();
    return keys[x] < keys[y];
  });
  std::vector<PermGroup> out;
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

std::vector<NormalExtensionCheck> normal_extension_suite(const PermGroup& g, const PiSet& pi, Budget& budget,
                                                         std::uint64_t seed) {
  auto h = find_hall(g, pi, budget, seed);
  if (!h) throw std::invalid_argument("normal_extension_suite: group has no pi-Hall subgroup");
  std::vector<NormalExtensionCheck> out;
  for (const auto& a : normal_subgroups(g, budget, seed)) {
    NormalExtensionCheck c{a, h->closure(a.generators()), Verdict::budget_exceeded};
    try {
      c.cpi = classify_ECD(c.product, pi, budget, seed).C;
    } catch (const BudgetExceeded&) {
    }
    out.push_back(std::move(c));
  }
  return out;
}

OracleComparison compare_with_oracle(const PermGroup& g, const PiSet& pi, const Budget& budget,
                                     const ReductionOptions& opts) {
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::time_point a) {
    return std::chrono::duration<double, std::milli>(clock::now() - a).count();
  };
  auto reduction = std::async(std::launch::async, [&] {
    Budget b = budget;
    auto t0 = clock::now();
    ReductionTrace t = cpi_reduce(g, pi, b, opts);
    return std::make_pair(std::move(t), ms(t0));
  });
  auto oracle = std::async(std::launch::async, [&] {
    Budget b = budget;
    auto t0 = clock::now();
    std::optional<std::size_t> k;
    try {
      k = all_hall_classes(g, pi, b, opts.seed).k();
    } catch (const BudgetExceeded&) {
    }
    return std::make_pair(k, ms(t0));
  });
  OracleComparison c;
  auto [trace, rms] = reduction.get();
  auto [k, oms] = oracle.get();
  c.trace = std::move(trace);
  c.reduction = c.trace.verdict;
  c.reduction_ms = rms;
  c.oracle_k = k;
  c.oracle = k ? verdict(*k == 1) : Verdict::budget_exceeded;
  c.oracle_ms = oms;
  c.decided = c.reduction != Verdict::budget_exceeded && c.oracle != Verdict::budget_exceeded;
  c.agree = c.decided && c.reduction == c.oracle;
  return c;
}

}  // namespace hallkit
