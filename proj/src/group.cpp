#include "hallkit/group.hpp"

#include <algorithm>
#include <set>

namespace hallkit {

namespace {

constexpr std::size_t kExplicitRepDegree = 1024;

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

std::vector<Perm> normalize_generators(std::size_t degree, std::vector<Perm> gens) {
  std::vector<Perm> out;
  std::set<Perm> seen;
  for (auto& g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " + std::to_string(degree));
    if (g.is_identity() || !seen.insert(g).second) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

Bsgs::Bsgs(std::size_t degree, std::span<const Perm> generators, std::span<const Point> base_prefix)
    : degree_(degree), explicit_reps_(degree <= kExplicitRepDegree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw std::invalid_argument("base point out of range");
    bool dup = false;
    for (const auto& lv : levels_) dup = dup || lv.base == b;
    if (!dup) append_level(b);
  }
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    std::size_t t = 0;
    while (t < levels_.size() && g(levels_[t].base) == levels_[t].base) ++t;
    if (t == levels_.size()) {
      append_level(g.first_moved());
    }
    for (std::size_t l = 0; l <= t; ++l) levels_[l].gens.push_back(g);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) extend_orbit(l, 0);
  if (!levels_.empty()) schreier_sims(levels_.size() - 1);
}

void Bsgs::append_level(Point b) {
  Level lv;
  lv.base = b;
  lv.index.assign(degree_, -1);
  lv.index[b] = 0;
  lv.orbit.push_back(b);
  lv.label.push_back(-1);
  lv.parent.push_back(b);
  lv.checked.push_back(0);
  if (explicit_reps_) lv.reps.emplace_back(degree_);
  levels_.push_back(std::move(lv));
}

void Bsgs::extend_orbit(std::size_t i, std::size_t first_new_gen) {
  Level& lv = levels_[i];
  auto try_add = [&](std::size_t pos, std::size_t gi) {
    Point y = lv.gens[gi](lv.orbit[pos]);
    if (lv.index[y] >= 0) return;
    lv.index[y] = static_cast<std::int32_t>(lv.orbit.size());
    lv.orbit.push_back(y);
    lv.label.push_back(static_cast<std::int32_t>(gi));
    lv.parent.push_back(lv.orbit[pos]);
    lv.checked.push_back(0);
    if (explicit_reps_) lv.reps.push_back(lv.reps[pos] * lv.gens[gi]);
  };
  std::size_t old = lv.orbit.size();
  for (std::size_t p = 0; p < old; ++p)
    for (std::size_t gi = first_new_gen; gi < lv.gens.size(); ++gi) try_add(p, gi);
  for (std::size_t p = old; p < lv.orbit.size(); ++p)
    for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) try_add(p, gi);
}

void Bsgs::add_to_level(std::size_t i, const Perm& g) {
  levels_[i].gens.push_back(g);
  extend_orbit(i, levels_[i].gens.size() - 1);
}

Perm Bsgs::rep(std::size_t i, Point p) const {
  const Level& lv = levels_[i];
  auto pos = lv.index[p];
  if (pos < 0) throw std::logic_error("rep: point not in basic orbit");
  if (explicit_reps_) return lv.reps[pos];
  std::vector<std::int32_t> path;
  while (lv.label[pos] >= 0) {
    path.push_back(lv.label[pos]);
    pos = lv.index[lv.parent[pos]];
  }
  Perm r(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) r = r * lv.gens[*it];
  return r;
}

void Bsgs::schreier_sims(std::size_t start) {
  long i = static_cast<long>(start);
  while (i >= 0) {
    bool restarted = false;
    for (std::size_t p = 0; p < levels_[i].orbit.size() && !restarted; ++p) {
      while (levels_[i].checked[p] < levels_[i].gens.size()) {
        std::size_t gi = levels_[i].checked[p]++;
        const Level& lv = levels_[i];
        Point beta = lv.orbit[p];
        const Perm& x = lv.gens[gi];
        Point gamma = x(beta);
        Perm s = rep(i, beta) * x * rep(i, gamma).inverse();
        if (s.is_identity()) continue;
        auto [h, j] = strip(std::move(s), i + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) append_level(h.first_moved());
        for (std::size_t l = i + 1; l <= j; ++l) add_to_level(l, h);
        i = static_cast<long>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void Bsgs::add_generator(const Perm& g) {
  if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  if (contains(g)) return;
  std::size_t t = 0;
  while (t < levels_.size() && g(levels_[t].base) == levels_[t].base) ++t;
  if (t == levels_.size()) append_level(g.first_moved());
  for (std::size_t l = 0; l <= t; ++l) add_to_level(l, g);
  schreier_sims(t);
}

std::vector<Point> Bsgs::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base);
  return b;
}

std::vector<std::size_t> Bsgs::orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& lv : levels_) s.push_back(lv.orbit.size());
  return s;
}

BigInt Bsgs::order() const {
  BigInt r = 1;
  for (const auto& lv : levels_) r *= lv.orbit.size();
  return r;
}

Factorization Bsgs::order_factors() const {
  Factorization f;
  for (const auto& lv : levels_)
    for (auto [p, e] : factorize(static_cast<std::uint64_t>(lv.orbit.size()))) f[p] += e;
  return f;
}

std::pair<Perm, std::size_t> Bsgs::strip(Perm g, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    Point beta = g(levels_[j].base);
    if (levels_[j].index[beta] < 0) return {std::move(g), j};
    if (beta != levels_[j].base) g = g * rep(j, beta).inverse();
  }
  return {std::move(g), levels_.size()};
}

bool Bsgs::contains(const Perm& g) const {
  if (g.degree() != degree_)
    throw std::invalid_argument("degree mismatch: element of degree " + std::to_string(g.degree()) +
                                " tested against group of degree " + std::to_string(degree_));
  auto [h, j] = strip(g);
  return j == levels_.size() && h.is_identity();
}

std::vector<Perm> Bsgs::strong_generators() const {
  std::vector<Perm> out;
  std::set<Perm> seen;
  for (const auto& lv : levels_)
    for (const auto& g : lv.gens)
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

Perm Bsgs::random_element(std::mt19937_64& rng) const {
  Perm g(degree_);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    std::uniform_int_distribution<std::size_t> d(0, levels_[i].orbit.size() - 1);
    g = rep(i, levels_[i].orbit[d(rng)]) * g;
  }
  return g;
}

void Bsgs::for_each_element(const std::function<void(const Perm&)>& f) const {
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t i, const Perm& w) {
    if (i == levels_.size()) {
      f(w);
      return;
    }
    for (Point p : levels_[i].orbit) rec(i + 1, rep(i, p) * w);
  };
  rec(0, Perm(degree_));
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree)
    : degree_(degree),
      generators_(std::make_shared<const std::vector<Perm>>()),
      bsgs_(std::make_shared<const Bsgs>(degree, std::span<const Perm>{})) {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators,
                     std::span<const Point> base_prefix)
    : degree_(degree) {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
  auto gens = normalize_generators(degree, std::move(generators));
  bsgs_ = std::make_shared<const Bsgs>(degree, gens, base_prefix);
  generators_ = std::make_shared<const std::vector<Perm>>(std::move(gens));
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, Bsgs bsgs)
    : degree_(degree),
      generators_(std::make_shared<const std::vector<Perm>>(std::move(generators))),
      bsgs_(std::make_shared<const Bsgs>(std::move(bsgs))) {}

bool PermGroup::contains(const Perm& g) const { return bsgs_->contains(g); }

bool PermGroup::contains(const PermGroup& h) const {
  if (h.degree() != degree_) throw std::invalid_argument("degree mismatch between groups");
  for (const auto& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

PermGroup PermGroup::with_base_prefix(std::span<const Point> prefix) const {
  return PermGroup(degree_, *generators_, prefix);
}

PermGroup PermGroup::closure(std::span<const Perm> extra) const {
  Bsgs b = *bsgs_;
  std::vector<Perm> gens = *generators_;
  for (const auto& g : extra) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    if (b.contains(g)) continue;
    b.add_generator(g);
    gens.push_back(g);
  }
  return PermGroup(degree_, std::move(gens), std::move(b));
}

PermGroup PermGroup::conjugate(const Perm& x) const {
  std::vector<Perm> gens;
  for (const auto& g : *generators_) gens.push_back(g.conjugate(x));
  return PermGroup(degree_, std::move(gens));
}

Perm PermGroup::random_element(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return bsgs_->random_element(rng);
}

std::vector<Perm> PermGroup::elements() const {
  std::vector<Perm> out;
  bsgs_->for_each_element([&](const Perm& g) { out.push_back(g); });
  return out;
}

std::uint64_t PermGroup::element_hash() const {
  std::uint64_t h = mix(static_cast<std::uint64_t>(degree_));
  bsgs_->for_each_element([&](const Perm& g) { h += mix(g.hash()); });
  return h;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.contains(b);
}

PermGroup build_bsgs(const PermGroup& g, std::uint64_t) { return g; }

void require_subgroup(const PermGroup& g, const PermGroup& h, std::string_view what) {
  if (g.degree() != h.degree())
    throw std::invalid_argument(std::string(what) + ": degree mismatch");
  if (!g.contains(h)) throw std::invalid_argument(std::string(what) + ": not a subgroup");
}

}  // namespace hallkit
