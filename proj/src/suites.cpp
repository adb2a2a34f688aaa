#include "hallkit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "hallkit/search.hpp"
#include "hallkit/zoo.hpp"

namespace hallkit {

const std::vector<std::pair<std::string, std::string>>& suite_catalog() {
  static const std::vector<std::pair<std::string, std::string>> catalog = {
      {"manifest", "oracle verdicts equal the frozen manifest"},
      {"agreement", "reduction verdict equals the oracle verdict"},
      {"witness", "a positive reduction returns a Hall subgroup and the oracle finds one class"},
      {"seed_stability", "oracle class counts and fingerprints do not depend on the seed"},
      {"induced_bound", "k^G(A) <= k(A)"},
      {"hall_meets_normal", "H meet A is Hall in A and HA/A is Hall in G/A"},
      {"separable_dominance", "pi-separable groups satisfy D_pi"},
      {"extension_closure", "C_pi for A and for G/A gives C_pi for G"},
      {"normalizer_inheritance", "N_G(HA) and N_G(H meet A) satisfy C_pi when G does"},
      {"quotient_inheritance", "G/A satisfies C_pi when G does"},
      {"invariant_classes", "with HA C_G(A) normal, an A-class is induced iff it is H-invariant"},
      {"induced_count_local", "with HA normal, k^G(A) = k^HA(A)"},
      {"single_induced_class", "with HA normal, k^G(A) = 1 iff HA has C_pi iff all Halls are A-conjugate"},
      {"product_count", "k(A1 x A2) = k(A1) k(A2)"},
      {"transitive_factor_count", "minimal normal A = S x ... with G = HA C_G(A): k^G(A) = k^N_G(S)(S)"},
      {"normal_extension", "HA satisfies C_pi for every normal A of a C_pi group"},
      {"simple_socle_counts", "almost simple: k^G(S) lies in the allowed set and is a pi-number"},
      {"composition_factor_criterion",
       "2 or 3 outside pi: C_pi iff every nonabelian composition factor has C_pi"},
  };
  return catalog;
}

bool CorpusReport::ok() const {
  for (const auto& s : suites)
    if (!s.pass()) return false;
  for (const auto& e : entries)
    if (!e.error.empty()) return false;
  return true;
}

namespace {

using clock = std::chrono::steady_clock;

double ms_since(clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
}

// Thrown by a check whose premise does not hold for this instance.
struct NotApplicable {};

class Tally {
 public:
  Tally(std::string entry, const Budget& budget) : entry_(std::move(entry)), budget_(budget) {
    for (const auto& [id, st] : suite_catalog()) {
      index_[id] = results_.size();
      results_.push_back({id, st, 0, 0, 0, {}});
    }
  }

  /// Runs f with a fresh budget; f returns true when the property holds.
  template <class F>
  void run(const std::string& id, const std::string& what, F&& f) {
    auto& r = results_.at(index_.at(id));
    Budget b = budget_;
    try {
      bool ok = f(b);
      ++r.checked;
      if (!ok) {
        ++r.violations;
        r.failures.push_back(entry_ + ": " + what);
      }
    } catch (const BudgetExceeded&) {
      ++r.skipped;
    } catch (const NotApplicable&) {
    }
  }

  std::vector<SuiteResult> take() { return std::move(results_); }

 private:
  std::string entry_;
  const Budget& budget_;
  std::map<std::string, std::size_t> index_;
  std::vector<SuiteResult> results_;
};

bool oracle_cpi(const PermGroup& g, const PiSet& pi, Budget& b, std::uint64_t seed) {
  return all_hall_classes(g, pi, b, seed).k() == 1;
}

std::vector<std::string> fingerprints(const HallClassSet& c) {
  std::vector<std::string> out;
  for (const auto& h : c.class_reps) out.push_back(fingerprint(h).to_string());
  return out;
}

bool a_conjugate_to_some(const PermGroup& a, const PermGroup& m, const std::vector<PermGroup>& reps, Budget& b) {
  for (const auto& r : reps)
    if (are_conjugate(a, m, r, b)) return true;
  return false;
}

std::vector<std::string> product_parts(const std::string& name) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto x = name.find('x', start);
    parts.push_back(name.substr(start, x == std::string::npos ? std::string::npos : x - start));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return parts;
}

bool allowed_socle_count(std::size_t k, const PiSet& pi) {
  if (!is_pi_number(k, pi)) return false;
  if (!pi.contains(2)) return k == 1;
  if (!pi.contains(3)) return k == 1 || k == 2;
  return k == 1 || k == 2 || k == 3 || k == 4 || k == 9;
}

struct Quotient {
  PermGroup image;
  std::optional<ActionHom> hom;
  PermGroup operator()(const PermGroup& h) const { return hom ? hom->image_of(h) : image.is_trivial() ? image : h; }
};

Quotient quotient_by(const PermGroup& g, const PermGroup& a) {
  if (a.is_trivial()) return {g, std::nullopt};
  if (a.order() == g.order()) return {PermGroup(1), std::nullopt};
  ActionHom hom = quotient_action(g, a);
  PermGroup img = hom.image();
  return {img, std::move(hom)};
}

}  // namespace

EntryOutcome run_entry(const CorpusEntry& entry, std::size_t index, const Budget& budget, std::uint64_t seed,
                       bool composition_checks) {
  auto t_start = clock::now();
  EntryOutcome out;
  out.index = index;
  out.name = entry.name;
  out.pi = entry.pi;
  out.expected = entry.expected;
  Tally t(entry.name + " {" + entry.pi.to_string() + "}", budget);
  auto finish = [&] {
    out.suites = t.take();
    out.total_ms = ms_since(t_start);
    return out;
  };
  auto maybe = zoo_group(entry.name);
  if (!maybe) {
    out.error = "unknown zoo group";
    return finish();
  }
  const PermGroup g = *maybe;
  const PiSet& pi = entry.pi;
  out.order = g.order();

  {
    Budget b = budget;
    auto t0 = clock::now();
    try {
      out.observed = expected_from(classify_ECD(g, pi, b, seed, true));
    } catch (const BudgetExceeded&) {
    }
    out.oracle_ms = ms_since(t0);
  }
  t.run("manifest", "oracle verdicts differ from the manifest", [&](Budget&) {
    if (!entry.expected) throw NotApplicable{};
    return *entry.expected == out.observed;
  });

  OracleComparison cmp = compare_with_oracle(g, pi, budget, {seed});
  out.reduction = cmp.reduction;
  out.agree = cmp.agree;
  out.shortcut = cmp.trace.shortcut;
  out.reduction_ms = cmp.reduction_ms;
  t.run("agreement", "reduction and oracle disagree", [&](Budget&) {
    if (!cmp.decided) throw BudgetExceeded("undecided");
    return cmp.agree;
  });
  if (cmp.reduction == Verdict::yes)
    t.run("witness", "reduction witness is not a single Hall class", [&](Budget& b) {
      return cmp.trace.hall_witness && is_hall(g, *cmp.trace.hall_witness, pi) && oracle_cpi(g, pi, b, seed) &&
             find_hall(g, pi, b, seed).has_value();
    });

  std::optional<HallClassSet> cls;
  try {
    Budget b1 = budget, b2 = budget;
    cls = all_hall_classes(g, pi, b1, seed);
    auto other = all_hall_classes(g, pi, b2, seed + 1);
    out.class_fingerprints = fingerprints(*cls);
    t.run("seed_stability", "oracle output depends on the seed",
          [&](Budget&) { return fingerprints(other) == out.class_fingerprints && cls->accounting_ok; });
  } catch (const BudgetExceeded&) {
  }

  const bool has_hall = cls && cls->k() > 0;
  const bool g_cpi = cls && cls->k() == 1;

  t.run("separable_dominance", "pi-separable group without D_pi", [&](Budget& b) {
    if (!pi_separable_series(g, pi, b, seed)) throw NotApplicable{};
    return out.observed.D == Verdict::yes;
  });

  if (composition_checks)
    for (PiSet q : {PiSet{2, 5}, PiSet{3, 5}, PiSet{5, 7}})
      t.run("composition_factor_criterion", "criterion differs from the oracle for {" + q.to_string() + "}",
            [&](Budget& b) {
              auto s = composition_factor_criterion(g, q, b, {seed});
              if (!s || *s == Verdict::budget_exceeded) throw BudgetExceeded("undecided");
              return *s == verdict(oracle_cpi(g, q, b, seed));
            });

  auto parts = product_parts(entry.name);
  if (parts.size() > 1)
    t.run("product_count", "class count is not multiplicative", [&](Budget& b) {
      std::size_t prod = 1;
      for (const auto& p : parts) prod *= all_hall_classes(*zoo_group(p), pi, b, seed).k();
      return cls && cls->k() == prod;
    });

  std::vector<PermGroup> normals;
  try {
    Budget b = budget;
    normals = normal_subgroups(g, b, seed, 64);
  } catch (const BudgetExceeded&) {
  }

  std::vector<PermGroup> mins;
  if (has_hall) {
    Budget b = budget;
    try {
      mins = minimal_normal_subgroups(g, b, seed);
      if (mins.size() == 1 && !is_abelian(mins[0]) && centralizer(g, mins[0], b).is_trivial()) {
        const PermGroup s = mins[0];
        t.run("simple_socle_counts", "socle class count outside the allowed set", [&](Budget& bb) {
          return allowed_socle_count(k_induced(g, s, pi, bb, seed).k_induced, pi);
        });
      }
    } catch (const BudgetExceeded&) {
    }
  }

  for (const auto& a : normals) {
    const std::string an = " (normal subgroup of order " + to_string(a.order()) + ")";
    std::optional<Quotient> q;
    try {
      q = quotient_by(g, a);
    } catch (const BudgetExceeded&) {
    }

    if (has_hall) {
      const PermGroup& h = cls->class_reps.front();
      t.run("hall_meets_normal", "Hall intersection or image is not Hall" + an, [&](Budget& b) {
        if (!q) throw BudgetExceeded("quotient");
        return is_hall(a, intersection(h, a, b), pi) && is_hall(q->image, (*q)(h), pi);
      });

      std::optional<KReport> kr;
      try {
        Budget b = budget;
        kr = k_induced(g, a, pi, b, seed);
      } catch (const BudgetExceeded&) {
      }
      if (kr) t.run("induced_bound", "k^G(A) > k(A)" + an, [&](Budget&) { return kr->k_induced <= kr->k_total; });

      for (const auto& hj : cls->class_reps) {
        PermGroup ha = hj.closure(a.generators());
        bool ha_normal = is_normal(g, ha);
        if (kr) {
          t.run("invariant_classes", "induced classes differ from H-invariant classes" + an, [&](Budget& b) {
            PermGroup x = ha.closure(centralizer(g, a, b).generators());
            if (!is_normal(g, x)) throw NotApplicable{};
            for (const auto& m : all_hall_classes(a, pi, b, seed).class_reps) {
              bool induced = a_conjugate_to_some(a, m, kr->induced_class_reps, b);
              bool invariant = true;
              for (const auto& y : hj.generators()) invariant = invariant && are_conjugate(a, m.conjugate(y), m, b);
              if (induced != invariant) return false;
            }
            return true;
          });
        }
        if (ha_normal && kr) {
          t.run("induced_count_local", "k^G(A) differs from k^HA(A)" + an, [&](Budget& b) {
            return k_induced(ha, a, pi, b, seed).k_induced == kr->k_induced;
          });
          t.run("single_induced_class", "the three conditions disagree" + an, [&](Budget& b) {
            bool one = kr->k_induced == 1;
            bool ha_cpi = oracle_cpi(ha, pi, b, seed);
            PermGroup n = normalizer(g, hj, b);
            bool a_conj = cls->k() == 1 && a.order() / intersection(n, a, b).order() == g.order() / n.order();
            return one == ha_cpi && ha_cpi == a_conj;
          });
        }
      }

      const bool minimal = !is_abelian(a) && std::find(mins.begin(), mins.end(), a) != mins.end();
      if (minimal) {
        t.run("transitive_factor_count", "factor count differs from the normalizer count" + an, [&](Budget& b) {
          PermGroup x = h.closure(a.generators()).closure(centralizer(g, a, b).generators());
          if (x.order() != g.order()) throw NotApplicable{};
          auto factors = minimal_normal_over(a, PermGroup(g.degree()), b, seed);
          const PermGroup& s = factors.front();
          return k_induced(g, a, pi, b, seed).k_induced == k_induced(normalizer(g, s, b), s, pi, b, seed).k_induced;
        });
      }
    }

    if (!a.is_trivial() && a.order() != g.order() && q)
      t.run("extension_closure", "A and G/A have C_pi but G does not" + an, [&](Budget& b) {
        if (!oracle_cpi(a, pi, b, seed) || !oracle_cpi(q->image, pi, b, seed)) throw NotApplicable{};
        return g_cpi;
      });

    if (g_cpi) {
      const PermGroup& h = cls->class_reps.front();
      t.run("normalizer_inheritance", "a normalizer lacks C_pi" + an, [&](Budget& b) {
        PermGroup ha = h.closure(a.generators());
        PermGroup hma = intersection(h, a, b);
        return oracle_cpi(normalizer(g, ha, b), pi, b, seed) && oracle_cpi(normalizer(g, hma, b), pi, b, seed);
      });
      t.run("quotient_inheritance", "G/A lacks C_pi" + an, [&](Budget& b) {
        if (!q) throw BudgetExceeded("quotient");
        return oracle_cpi(q->image, pi, b, seed);
      });
      t.run("normal_extension", "HA lacks C_pi" + an,
            [&](Budget& b) { return oracle_cpi(h.closure(a.generators()), pi, b, seed); });
    }
  }
  return finish();
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries, const Budget& budget, std::uint64_t seed,
                        std::size_t jobs) {
  CorpusReport rep;
  rep.entries.resize(entries.size());
  std::vector<bool> first(entries.size(), true);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (entries[j].name == entries[i].name) first[i] = false;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      try {
        rep.entries[i] = run_entry(entries[i], i, budget, seed, first[i]);
      } catch (const std::exception& e) {
        rep.entries[i].index = i;
        rep.entries[i].name = entries[i].name;
        rep.entries[i].pi = entries[i].pi;
        rep.entries[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < std::max<std::size_t>(jobs, 1); ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& [id, st] : suite_catalog()) rep.suites.push_back({id, st, 0, 0, 0, {}});
  for (const auto& e : rep.entries)
    for (std::size_t s = 0; s < e.suites.size(); ++s) {
      auto& r = rep.suites[s];
      r.checked += e.suites[s].checked;
      r.violations += e.suites[s].violations;
      r.skipped += e.suites[s].skipped;
      r.failures.insert(r.failures.end(), e.suites[s].failures.begin(), e.suites[s].failures.end());
    }
  return rep;
}

}  // namespace hallkit
