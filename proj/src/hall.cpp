#include "hallkit/hall.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hallkit/search.hpp"
#include "hallkit/structure.hpp"

namespace hallkit {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "false";
    case Verdict::yes: return "true";
    case Verdict::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

bool is_hall(const PermGroup& g, const PermGroup& h, const PiSet& pi) {
  require_subgroup(g, h, "is_hall");
  return h.order() == pi_part(g.order(), pi);
}

// --- fingerprints and conjugacy -------------------------------------------------

std::string SubgroupFingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << hallkit::to_string(order) << ";orbits=";
  for (std::size_t i = 0; i < orbit_lengths.size(); ++i) os << (i ? "," : "") << orbit_lengths[i];
  if (has_cycle_types) {
    os << ";cycles=";
    bool first = true;
    for (const auto& [type, count] : cycle_types) {
      if (!first) os << " ";
      first = false;
      os << count << "x(";
      for (std::size_t i = 0; i < type.size(); ++i) os << (i ? "," : "") << type[i];
      os << ")";
    }
  }
  return os.str();
}

SubgroupFingerprint fingerprint(const PermGroup& h) {
  SubgroupFingerprint f;
  f.order = h.order();
  f.orbit_lengths = orbit_lengths(h);
  if (f.order <= 1000) {
    f.has_cycle_types = true;
    h.bsgs().for_each_element([&](const Perm& x) { ++f.cycle_types[x.cycle_type()]; });
  }
  return f;
}

std::optional<Perm> are_conjugate(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                  Budget& budget) {
  require_subgroup(g, h, "are_conjugate");
  require_subgroup(g, k, "are_conjugate");
  if (h == k) return Perm(g.degree());
  if (!(fingerprint(h) == fingerprint(k))) return std::nullopt;
  return conjugating_element(g, h, k, budget);
}

// --- subgroup sets keyed by element hash ------------------------------------------

namespace {

class SubgroupSet {
 public:
  /// False when an equal subgroup is already present.
  bool insert(const PermGroup& h) {
    auto& bucket = buckets_[h.element_hash()];
    for (const auto& x : bucket)
      if (x == h) return false;
    bucket.push_back(h);
    return true;
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<PermGroup>> buckets_;
};

std::vector<PermGroup> conjugates(const PermGroup& g, const PermGroup& q, Budget& budget) {
  std::vector<PermGroup> out{q};
  SubgroupSet seen;
  seen.insert(q);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& t : g.generators()) {
      budget.tick("Sylow conjugates");
      PermGroup r = out[i].conjugate(t);
      if (seen.insert(r)) out.push_back(std::move(r));
    }
  return out;
}

struct HallSearch {
  const PermGroup& g;
  Budget& budget;
  BigInt m;
  PermGroup sylow_base;
  std::vector<std::vector<PermGroup>> sylows;
  std::vector<SubgroupSet> seen;
  SubgroupSet found_set;
  std::vector<PermGroup> found;
  bool first_only = false;

  HallSearch(const PermGroup& group, const PiSet& pi, Budget& b, std::uint64_t seed, bool first)
      : g(group), budget(b), m(pi_part(group.order(), pi)), first_only(first) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;  // (p-part, p)
    for (auto [p, e] : g.order_factors())
      if (pi.contains(p)) parts.emplace_back(expand({{p, e}}).convert_to<std::uint64_t>(), p);
    std::sort(parts.begin(), parts.end(), [](auto a, auto b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    sylow_base = sylow(g, parts.front().second, seed, budget);
    for (std::size_t i = 1; i < parts.size(); ++i)
      sylows.push_back(conjugates(g, sylow(g, parts[i].second, seed, budget), budget));
    seen.resize(sylows.size());
  }

  bool done() const { return first_only && !found.empty(); }

  void dfs(std::size_t d, const PermGroup& k) {
    if (done()) return;
    if (k.order() == m) {
      if (found_set.insert(k)) found.push_back(k);
      return;
    }
    if (d == sylows.size()) return;
    for (const auto& q : sylows[d]) {
      budget.tick("Hall subgroup search");
      PermGroup l = k;
      bool ok = true;
      for (const auto& x : q.generators()) {
        if (l.contains(x)) continue;
        l = l.closure(x);
        if (m % l.order() != 0) {
          ok = false;
          break;
        }
      }
      if (!ok || !seen[d].insert(l)) continue;
      dfs(d + 1, l);
      if (done()) return;
    }
  }
};

BigInt index_of(const PermGroup& g, const PermGroup& h) { return g.order() / h.order(); }

void require_oracle_size(const PermGroup& g, const Budget& budget) {
  if (g.order() > budget.order_limit)
    throw BudgetExceeded("group order " + to_string(g.order()) + " exceeds oracle budget " +
                         std::to_string(budget.order_limit));
}

}  // namespace

std::optional<PermGroup> find_hall(const PermGroup& g, const PiSet& pi, Budget& budget,
                                   std::uint64_t seed) {
  BigInt m = pi_part(g.order(), pi);
  if (m == 1) return PermGroup(g.degree());
  if (m == g.order()) return g;
  HallSearch s(g, pi, budget, seed, true);
  s.dfs(0, s.sylow_base);
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

HallClassSet all_hall_classes(const PermGroup& g, const PiSet& pi, Budget& budget, std::uint64_t seed) {
  HallClassSet out{g, pi, {}, {}, true, 0, false};
  BigInt m = pi_part(g.order(), pi);
  if (m == 1 || m == g.order()) {
    out.class_reps.push_back(m == 1 ? PermGroup(g.degree()) : g);
    out.class_sizes.push_back(1);
    out.found_containing_sylow = 1;
    out.accounting_ok = true;
    return out;
  }
  require_oracle_size(g, budget);
  HallSearch s(g, pi, budget, seed, false);
  s.dfs(0, s.sylow_base);
  out.found_containing_sylow = s.found.size();

  std::vector<SubgroupFingerprint> fps;
  std::vector<std::uint64_t> hits;
  for (const auto& h : s.found) {
    bool matched = false;
    for (std::size_t c = 0; c < out.class_reps.size() && !matched; ++c) {
      if (are_conjugate(g, h, out.class_reps[c], budget)) {
        ++hits[c];
        matched = true;
      }
    }
    if (!matched) {
      out.class_reps.push_back(h);
      hits.push_back(1);
    }
  }
  const PermGroup& p = s.sylow_base;
  BigInt np_g = index_of(g, normalizer(g, p, budget));
  out.accounting_ok = true;
  for (std::size_t c = 0; c < out.class_reps.size(); ++c) {
    const PermGroup& h = out.class_reps[c];
    BigInt size = index_of(g, normalizer(g, h, budget));
    out.class_sizes.push_back(size);
    BigInt np_h = index_of(h, normalizer(h, p, budget));
    if (size * np_h != BigInt(hits[c]) * np_g) out.accounting_ok = false;
  }
  // Deterministic order: by fingerprint, then discovery.
  std::vector<std::size_t> order(out.class_reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> keys;
  for (const auto& h : out.class_reps) keys.push_back(fingerprint(h).to_string());
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  HallClassSet sorted{g, pi, {}, {}, true, out.found_containing_sylow, out.accounting_ok};
  for (auto i : order) {
    sorted.class_reps.push_back(out.class_reps[i]);
    sorted.class_sizes.push_back(out.class_sizes[i]);
  }
  return sorted;
}

// --- D_pi -------------------------------------------------------------------------

std::optional<PermGroup> pi_subgroup_outside_halls(const PermGroup& g, const PermGroup& h,
                                                   const PiSet& pi, Budget& budget) {
  require_subgroup(g, h, "pi_subgroup_outside_halls");
  require_oracle_size(g, budget);
  ActionHom omega = action_on_cosets(g, h);
  const CosetTable table(g, h);
  const std::size_t n = omega.image().degree();

  // One generator per cyclic pi-subgroup of prime-power order.
  std::vector<Perm> candidates;
  std::set<Perm> covered;
  for (const auto& x : g.elements()) {
    if (x.is_identity() || covered.count(x)) continue;
    auto primes = x.order_primes();
    if (primes.size() != 1 || !pi.contains(primes.front())) continue;
    long long ord = static_cast<long long>(x.order());
    for (long long k = 1; k < ord; ++k)
      if (std::gcd(k, ord) == 1) covered.insert(x.pow(k));
    candidates.push_back(x);
  }

  auto fixed_cosets = [&](const PermGroup& l) {
    std::vector<Point> fix;
    std::vector<Perm> imgs;
    for (const auto& x : l.generators()) imgs.push_back(omega(x));
    for (Point w = 0; w < n; ++w) {
      bool f = true;
      for (const auto& y : imgs) f = f && y(w) == w;
      if (f) fix.push_back(w);
    }
    return fix;
  };

  std::vector<PermGroup> states{PermGroup(g.degree())};
  SubgroupSet seen;
  seen.insert(states.front());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const auto& x : candidates) {
      budget.tick("pi-subgroup search");
      if (states[i].contains(x)) continue;
      PermGroup l = states[i].closure(x);
      if (!is_pi_number(l.order(), pi)) continue;
      auto fix = fixed_cosets(l);
      if (fix.empty()) return l;
      // l fixes the coset H t, so l^(t^-1) lies in h.
      PermGroup inside = l.conjugate(table.rep(fix.front()).inverse());
      if (seen.insert(inside)) states.push_back(std::move(inside));
    }
  }
  return std::nullopt;
}

std::optional<std::vector<PermGroup>> pi_separable_series(const PermGroup& g, const PiSet& pi,
                                                          Budget& budget, std::uint64_t seed) {
  BigInt m = pi_part(g.order(), pi);
  if (m == 1 || m == g.order()) return std::vector<PermGroup>{g, PermGroup(g.degree())};
  auto cs = chief_series(g, budget, seed);
  for (const auto& f : cs.factors) {
    BigInt part = pi_part(f.order, pi);
    if (part != 1 && part != f.order) return std::nullopt;
  }
  return cs.terms;
}

EcdResult classify_ECD(const PermGroup& g, const PiSet& pi, Budget& budget, std::uint64_t seed,
                       bool oracle_only) {
  EcdResult r;
  BigInt m = pi_part(g.order(), pi);
  auto all_true = [&](const std::optional<PermGroup>& hall) {
    r.E = r.C = r.D = Verdict::yes;
    r.k = 1;
    r.pi_separable = true;
    if (hall) r.class_fingerprints.push_back(fingerprint(*hall));
  };
  if (m == 1 || m == g.order()) {
    all_true(m == 1 ? PermGroup(g.degree()) : g);
    return r;
  }
  if (!oracle_only && (is_solvable(g) || pi_separable_series(g, pi, budget, seed))) {
    std::optional<PermGroup> h;
    try {
      h = find_hall(g, pi, budget, seed);
    } catch (const BudgetExceeded&) {
    }
    all_true(h);
    return r;
  }
  HallClassSet cls = all_hall_classes(g, pi, budget, seed);
  r.k = cls.k();
  if (oracle_only) r.pi_separable = pi_separable_series(g, pi, budget, seed).has_value();
  for (const auto& h : cls.class_reps) r.class_fingerprints.push_back(fingerprint(h));
  r.E = verdict(cls.k() >= 1);
  r.C = verdict(cls.k() == 1);
  if (cls.k() != 1) {
    r.D = Verdict::no;
    return r;
  }
  try {
    r.d_witness = pi_subgroup_outside_halls(g, cls.class_reps.front(), pi, budget);
    r.D = verdict(!r.d_witness);
  } catch (const BudgetExceeded&) {
    r.D = Verdict::budget_exceeded;
  }
  return r;
}

// --- induced Hall subgroups -----------------------------------------------------------

std::vector<PermGroup> induced_class_orbit(const PermGroup& g, const PermGroup& a, const PermGroup& m,
                                           Budget& budget) {
  std::vector<PermGroup> reps{m};
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (const auto& t : g.generators()) {
      PermGroup r = reps[i].conjugate(t);
      bool known = false;
      for (const auto& x : reps)
        if (are_conjugate(a, r, x, budget)) {
          known = true;
          break;
        }
      if (!known) reps.push_back(std::move(r));
    }
  return reps;
}

KReport k_induced(const PermGroup& g, const PermGroup& a, const PiSet& pi, Budget& budget,
                  std::uint64_t seed) {
  if (!is_normal(g, a)) throw std::invalid_argument("k_induced: subgroup is not normal");
  KReport rep{g, a, pi, false, 0, 0, {}};
  rep.k_total = all_hall_classes(a, pi, budget, seed).k();
  HallClassSet cls = all_hall_classes(g, pi, budget, seed);
  rep.group_has_hall = cls.k() > 0;
  for (const auto& h : cls.class_reps) {
    PermGroup m = intersection(h, a, budget);
    for (auto& r : induced_class_orbit(g, a, m, budget)) {
      bool known = false;
      for (const auto& x : rep.induced_class_reps)
        if (are_conjugate(a, r, x, budget)) {
          known = true;
          break;
        }
      if (!known) rep.induced_class_reps.push_back(std::move(r));
    }
  }
  rep.k_induced = rep.induced_class_reps.size();
  return rep;
}

bool class_is_G_invariant(const PermGroup& g, const PermGroup& a, const PermGroup& m, Budget& budget) {
  if (!is_normal(g, a)) throw std::invalid_argument("class_is_G_invariant: subgroup is not normal");
  require_subgroup(a, m, "class_is_G_invariant");
  for (const auto& t : g.generators())
    if (!are_conjugate(a, m.conjugate(t), m, budget)) return false;
  return true;
}

std::optional<PermGroup> extend_hall(const PermGroup& g, const PermGroup& a, const PermGroup& m,
                                     const PiSet& pi, Budget& budget, std::uint64_t seed) {
  if (!is_pi_number(g.order() / a.order(), pi))
    throw std::invalid_argument("extend_hall: index of the normal subgroup is not a pi-number");
  if (!is_hall(a, m, pi)) throw std::invalid_argument("extend_hall: M is not a pi-Hall subgroup of A");
  if (!class_is_G_invariant(g, a, m, budget)) return std::nullopt;
  PermGroup n = normalizer(g, m, budget);
  auto h = find_hall(n, pi, budget, seed);
  if (!h) throw std::logic_error("extend_hall: normalizer has no pi-Hall subgroup");
  PermGroup meet = intersection(*h, a, budget);
  if (!(meet == m)) {
    auto x = are_conjugate(a, meet, m, budget);
    if (!x) throw std::logic_error("extend_hall: intersection not conjugate to M");
    h = h->conjugate(*x);
  }
  if (!is_hall(g, *h, pi)) throw std::logic_error("extend_hall: result is not a pi-Hall subgroup");
  return h;
}

PermGroup lift_hall(const ActionHom& hom, const PermGroup& kbar, const PiSet& pi, Budget& budget,
                    std::uint64_t seed) {
  if (!is_hall(hom.image(), kbar, pi)) throw std::invalid_argument("lift_hall: Kbar is not Hall in the quotient");
  PermGroup k = hom.preimage(kbar);
  auto h = find_hall(k, pi, budget, seed);
  if (!h) throw std::invalid_argument("lift_hall: the group has no pi-Hall subgroup over Kbar");
  if (!is_hall(hom.source(), *h, pi)) throw std::logic_error("lift_hall: lifted subgroup is not Hall");
  return *h;
}

}  // namespace hallkit
