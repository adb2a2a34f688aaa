#include "hallkit/structure.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "hallkit/search.hpp"

namespace hallkit {

PermGroup normal_closure(const PermGroup& g, std::span<const Perm> s) {
  PermGroup n(g.degree(), std::vector<Perm>(s.begin(), s.end()));
  std::vector<Perm> todo = n.generators();
  for (std::size_t i = 0; i < todo.size(); ++i)
    for (const auto& t : g.generators()) {
      Perm y = todo[i].conjugate(t);
      if (n.contains(y)) continue;
      n = n.closure(y);
      todo.push_back(std::move(y));
    }
  return n;
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& h) {
  return normal_closure(g, h.generators());
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

PermGroup center(const PermGroup& g, Budget& budget) { return centralizer(g, g, budget); }

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

bool is_solvable(const PermGroup& g) {
  PermGroup h = g;
  while (!h.is_trivial()) {
    PermGroup d = derived_subgroup(h);
    if (d.order() == h.order()) return false;
    h = d;
  }
  return true;
}

// --- Sylow subgroups --------------------------------------------------------

namespace {

std::uint64_t p_part_of(const BigInt& n, std::uint64_t p) {
  BigInt m = n;
  std::uint64_t r = 1;
  while (m % p == 0) {
    m /= p;
    r *= p;
  }
  return r;
}

// x raised to kill the p'-part of its order, or nullopt when that is 1.
std::optional<Perm> p_component(const Perm& x, std::uint64_t p) {
  BigInt ord = x.order();
  std::uint64_t pp = p_part_of(ord, p);
  if (pp == 1) return std::nullopt;
  return x.pow(static_cast<long long>(ord / pp));
}

}  // namespace

PermGroup sylow(const PermGroup& g, std::uint64_t p, std::uint64_t seed, Budget& budget) {
  if (!is_prime(p)) throw std::invalid_argument("sylow: " + std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part_of(g.order(), p);
  if (target == 1) return PermGroup(g.degree());
  if (g.order() == target) return g;

  for (const auto& o : orbits(g))
    if (o.size() % p != 0 && o.size() > 1) return sylow(stabilizer(g, o.front()), p, seed, budget);

  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + p);
  std::optional<Perm> start;
  for (int attempt = 0; attempt < 24; ++attempt) {
    budget.tick("sylow");
    auto y = p_component(g.bsgs().random_element(rng), p);
    if (!y) continue;
    Perm z = y->pow(static_cast<long long>(y->order() / p));
    if (!start) start = z;
    PermGroup c = centralizer(g, PermGroup(g.degree(), {z}), budget);
    if (c.order() == g.order()) continue;
    if ((g.order() / c.order()) % p != 0) return sylow(c, p, seed + 1, budget);
  }
  while (!start) {
    budget.tick("sylow");
    auto y = p_component(g.bsgs().random_element(rng), p);
    if (y) start = y;
  }

  PermGroup q(g.degree(), {*start});
  while (q.order() != target) {
    PermGroup n = normalizer(g, q, budget);
    if ((n.order() / q.order()) % p != 0)
      throw std::logic_error("sylow: p-subgroup is self-normalizing modulo p but not Sylow");
    for (;;) {
      budget.tick("sylow");
      auto y = p_component(n.bsgs().random_element(rng), p);
      if (y && !q.contains(*y)) {
        q = q.closure(*y);
        break;
      }
    }
  }
  return q;
}

// --- minimal normal subgroups and chief series --------------------------------

std::vector<PermGroup> minimal_normal_over(const PermGroup& g, const PermGroup& m, Budget& budget,
                                           std::uint64_t seed) {
  require_subgroup(g, m, "minimal_normal_over");
  if (g.order() == m.order()) return {};
  std::vector<PermGroup> family;
  auto index = factorize(BigInt(g.order() / m.order()));
  for (auto [p, e] : index) {
    PermGroup P = sylow(g, p, seed, budget);
    PermGroup pm = intersection(P, m, budget);
    // Preimage in P of the center of PM/M.
    SearchPredicate central;
    central.accept = [&](const Perm& x) {
      for (const auto& s : P.generators())
        if (!m.contains(commutator(x, s))) return false;
      return true;
    };
    PermGroup z = subgroup_search(P, central, pm, budget, "center modulo a normal subgroup");
    PermGroup zm = intersection(z, m, budget);
    CosetTable cosets(z, zm);
    std::vector<char> done(cosets.size(), 0);
    for (std::size_t i = 1; i < cosets.size(); ++i) {
      if (done[i]) continue;
      const Perm& x = cosets.rep(i);
      if (!m.contains(x.pow(static_cast<long long>(p)))) continue;
      for (std::uint64_t k = 1; k < p; ++k) done[cosets.find(x.pow(static_cast<long long>(k)))] = 1;
      budget.tick("minimal normal subgroups");
      std::vector<Perm> gens = m.generators();
      gens.push_back(x);
      PermGroup n = normal_closure(g, gens);
      bool seen = false;
      for (const auto& f : family) seen = seen || f == n;
      if (!seen) family.push_back(std::move(n));
    }
  }
  std::vector<PermGroup> minimal;
  for (const auto& n : family) {
    bool is_min = true;
    for (const auto& o : family)
      if (o.order() < n.order() && n.contains(o)) is_min = false;
    if (is_min) minimal.push_back(n);
  }
  std::stable_sort(minimal.begin(), minimal.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return subgroup_fingerprint(a) < subgroup_fingerprint(b);
  });
  return minimal;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, Budget& budget, std::uint64_t seed) {
  return minimal_normal_over(g, PermGroup(g.degree()), budget, seed);
}

bool is_simple(const PermGroup& g, Budget& budget, std::uint64_t seed) {
  if (g.is_trivial()) return false;
  auto mins = minimal_normal_subgroups(g, budget, seed);
  return mins.size() == 1 && mins.front().order() == g.order();
}

std::string subgroup_fingerprint(const PermGroup& h) {
  std::ostringstream os;
  os << to_string(h.order()) << "|";
  for (const auto& o : orbits(h)) {
    if (o.size() == 1) continue;
    os << "[";
    for (Point p : o) os << p << ",";
    os << "]";
  }
  if (h.order() <= 100000) os << "|" << h.element_hash();
  return os.str();
}

ChiefSeries chief_series(const PermGroup& g, Budget& budget, std::uint64_t seed) {
  std::vector<PermGroup> up{PermGroup(g.degree())};
  while (up.back().order() != g.order()) {
    auto mins = minimal_normal_over(g, up.back(), budget, seed);
    if (mins.empty()) throw std::logic_error("chief_series: no minimal normal subgroup found");
    up.push_back(mins.front());
  }
  ChiefSeries cs;
  cs.group = g;
  cs.terms.assign(up.rbegin(), up.rend());
  cs.terms.front() = g;
  for (std::size_t i = 1; i < cs.terms.size(); ++i) {
    ChiefFactor f;
    f.order = cs.terms[i - 1].order() / cs.terms[i].order();
    bool abelian = true;
    const auto& gens = cs.terms[i - 1].generators();
    for (std::size_t a = 0; a < gens.size() && abelian; ++a)
      for (std::size_t b = a + 1; b < gens.size() && abelian; ++b)
        abelian = cs.terms[i].contains(commutator(gens[a], gens[b]));
    f.abelian = abelian;
    cs.factors.push_back(std::move(f));
  }
  for (std::size_t i = 1; i < cs.terms.size(); ++i)
    cs.factors[i - 1].simple_factors = chief_factor_decomposition(cs, i, budget, seed);
  return cs;
}

std::vector<PermGroup> chief_factor_decomposition(const ChiefSeries& series, std::size_t i,
                                                  Budget& budget, std::uint64_t seed) {
  if (i == 0 || i >= series.terms.size()) throw std::out_of_range("chief factor index out of range");
  const PermGroup& a = series.terms[i - 1];
  const PermGroup& b = series.terms[i];
  if (series.factors.size() >= i && series.factors[i - 1].abelian) {
    std::vector<PermGroup> out;
    PermGroup span = b;
    for (const auto& x : a.generators()) {
      if (span.contains(x)) continue;
      out.push_back(b.closure(x));
      span = span.closure(x);
    }
    return out;
  }
  return minimal_normal_over(a, b, budget, seed);
}

// --- induced automorphisms ------------------------------------------------------

std::string to_string(AutomizerStrategy s) {
  switch (s) {
    case AutomizerStrategy::element_action: return "element_action";
    case AutomizerStrategy::natural_action: return "natural_action";
    case AutomizerStrategy::centralizer_cosets: return "centralizer_cosets";
  }
  return "?";
}

InducedAutomizer induced_automizer(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                   Budget& budget, std::size_t element_budget,
                                   std::size_t index_budget) {
  require_subgroup(g, a, "induced_automizer");
  require_subgroup(a, b, "induced_automizer");
  if (!is_normal(g, a) || !is_normal(g, b))
    throw std::invalid_argument("induced_automizer: A and B must be normal in the ambient group");
  InducedAutomizer out{g, PermGroup(1), PermGroup(1), AutomizerStrategy::element_action, nullptr};
  if (a.order() / b.order() <= element_budget) {
    auto hom = std::make_shared<ActionHom>(section_element_action(g, a, b, element_budget));
    out.section_image = hom->image();
    out.inner_image = hom->image_of(a);
    out.projection = hom;
    return out;
  }
  if (b.is_trivial() && centralizer(g, a, budget).is_trivial()) {
    out.strategy = AutomizerStrategy::natural_action;
    out.section_image = g;
    out.inner_image = a;
    return out;
  }
  PermGroup c(g.degree());
  if (b.is_trivial()) {
    c = centralizer(g, a, budget);
  } else {
    ActionHom q = quotient_action(g, b, index_budget);
    c = q.preimage(centralizer(q.image(), q.image_of(a), budget));
  }
  auto hom = std::make_shared<ActionHom>(action_on_cosets(g, c, index_budget));
  out.strategy = AutomizerStrategy::centralizer_cosets;
  out.section_image = hom->image();
  out.inner_image = hom->image_of(a);
  out.projection = hom;
  return out;
}

}  // namespace hallkit
