#include "hallkit/action.hpp"

#include <algorithm>
#include <numeric>

namespace hallkit {

CosetCanon::CosetCanon(const PermGroup& g, const PermGroup& h) {
  require_subgroup(g, h, "coset action");
  base_ = g.bsgs().base();
  h_ = h.with_base_prefix(base_);
}

Perm CosetCanon::canonical(const Perm& x) const {
  const Bsgs& b = h_.bsgs();
  Perm c = x;
  for (std::size_t l = 0; l < b.length(); ++l) {
    const auto& orbit = b.level(l).orbit;
    Point best = orbit[0];
    for (Point y : orbit)
      if (c(y) < c(best)) best = y;
    if (best != b.level(l).base) c = b.rep(l, best) * c;
  }
  return c;
}

std::vector<Point> CosetCanon::key(const Perm& x) const {
  Perm c = canonical(x);
  std::vector<Point> k(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) k[i] = c(base_[i]);
  return k;
}

CosetTable::CosetTable(const PermGroup& g, const PermGroup& h, std::size_t index_budget)
    : canon_(g, h) {
  BigInt index = g.order() / h.order();
  if (index > index_budget)
    throw BudgetExceeded("coset action of index " + to_string(index) + " exceeds budget " +
                         std::to_string(index_budget));
  Perm e(g.degree());
  reps_.push_back(canon_.canonical(e));
  index_.emplace(canon_.key(e), 0);
  for (std::size_t i = 0; i < reps_.size(); ++i)
    for (const auto& s : g.generators()) {
      Perm y = reps_[i] * s;
      auto k = canon_.key(y);
      if (index_.count(k)) continue;
      index_.emplace(std::move(k), reps_.size());
      reps_.push_back(canon_.canonical(y));
    }
}

std::size_t CosetTable::find(const Perm& x) const {
  auto it = index_.find(canon_.key(x));
  if (it == index_.end()) throw std::invalid_argument("element outside the enumerated cosets");
  return it->second;
}

Perm CosetTable::right_action(const Perm& x) const {
  std::vector<Point> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = static_cast<Point>(find(reps_[i] * x));
  return Perm(std::move(img));
}

Perm CosetTable::conjugation_action(const Perm& x) const {
  std::vector<Point> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = static_cast<Point>(find(reps_[i].conjugate(x)));
  return Perm(std::move(img));
}

// ---------------------------------------------------------------------------

ActionHom::ActionHom(PermGroup source, std::size_t image_degree, std::vector<Perm> image_gens,
                     std::function<Perm(const Perm&)> apply)
    : source_(std::move(source)), image_gens_(std::move(image_gens)), apply_(std::move(apply)) {
  if (image_gens_.size() != source_.generators().size())
    throw std::invalid_argument("ActionHom: one image per source generator required");
  image_ = PermGroup(image_degree, image_gens_);
}

const PermGroup& ActionHom::diagonal() const {
  if (diagonal_) return *diagonal_;
  const std::size_t n = source_.degree(), m = image_.degree();
  std::vector<Perm> gens;
  const auto& src = source_.generators();
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::vector<Point> img(n + m);
    for (Point p = 0; p < n; ++p) img[p] = src[i](p);
    for (Point p = 0; p < m; ++p) img[n + p] = static_cast<Point>(n + image_gens_[i](p));
    gens.emplace_back(std::move(img));
  }
  std::vector<Point> prefix;
  for (Point b : image_.bsgs().base()) prefix.push_back(static_cast<Point>(n + b));
  prefix_ = prefix.size();
  diagonal_ = std::make_shared<PermGroup>(n + m, std::move(gens), prefix);
  return *diagonal_;
}

PermGroup ActionHom::kernel() const {
  const PermGroup& d = diagonal();
  const std::size_t n = source_.degree();
  auto base = d.bsgs().base();
  std::vector<Perm> gens;
  for (const auto& s : d.bsgs().strong_generators()) {
    bool fixes = true;
    for (std::size_t l = 0; l < prefix_ && fixes; ++l) fixes = s(base[l]) == base[l];
    if (!fixes) continue;
    std::vector<Point> img(n);
    for (Point p = 0; p < n; ++p) img[p] = s(p);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

Perm ActionHom::lift(const Perm& y) const {
  const PermGroup& d = diagonal();
  const Bsgs& b = d.bsgs();
  const std::size_t n = source_.degree(), m = image_.degree();
  if (y.degree() != m) throw std::invalid_argument("lift: degree mismatch");
  std::vector<Point> img(n + m);
  std::iota(img.begin(), img.begin() + n, Point{0});
  for (Point p = 0; p < m; ++p) img[n + p] = static_cast<Point>(n + y(p));
  Perm z(std::move(img));
  Perm lifted(n + m);
  for (std::size_t l = 0; l < prefix_; ++l) {
    Point beta = z(b.level(l).base);
    if (!b.level(l).contains(beta)) throw std::invalid_argument("lift: element not in the image");
    Perm u = b.rep(l, beta);
    z = z * u.inverse();
    lifted = u * lifted;
  }
  std::vector<Point> src(n);
  for (Point p = 0; p < n; ++p) src[p] = lifted(p);
  return Perm(std::move(src));
}

PermGroup ActionHom::preimage(const PermGroup& sub) const {
  PermGroup k = kernel();
  std::vector<Perm> extra;
  for (const auto& y : sub.generators()) extra.push_back(lift(y));
  return k.closure(extra);
}

PermGroup ActionHom::image_of(const PermGroup& h) const {
  std::vector<Perm> gens;
  for (const auto& x : h.generators()) gens.push_back(apply_(x));
  return PermGroup(image_.degree(), std::move(gens));
}

ActionHom action_on_cosets(const PermGroup& g, const PermGroup& h, std::size_t index_budget) {
  auto table = std::make_shared<CosetTable>(g, h, index_budget);
  std::vector<Perm> imgs;
  for (const auto& s : g.generators()) imgs.push_back(table->right_action(s));
  return ActionHom(g, table->size(), std::move(imgs), [table](const Perm& x) { return table->right_action(x); });
}

ActionHom quotient_action(const PermGroup& g, const PermGroup& n, std::size_t index_budget) {
  return action_on_cosets(g, n, index_budget);
}

ActionHom section_element_action(const PermGroup& ambient, const PermGroup& a, const PermGroup& b,
                                 std::size_t element_budget) {
  require_subgroup(a, b, "section");
  BigInt size = a.order() / b.order();
  if (size > element_budget)
    throw BudgetExceeded("section of order " + to_string(size) + " exceeds element budget " +
                         std::to_string(element_budget));
  auto table = std::make_shared<CosetTable>(a, b, element_budget);
  // Drop coset 0 (the identity of a/b).
  auto act = [table](const Perm& x) {
    const std::size_t k = table->size();
    if (k == 1) return Perm(1);
    Perm full = table->conjugation_action(x);
    std::vector<Point> img(k - 1);
    for (std::size_t i = 1; i < k; ++i) img[i - 1] = full(static_cast<Point>(i)) - 1;
    return Perm(std::move(img));
  };
  std::vector<Perm> imgs;
  for (const auto& s : ambient.generators()) imgs.push_back(act(s));
  return ActionHom(ambient, std::max<std::size_t>(table->size() - 1, 1), std::move(imgs), act);
}

PermGroup normal_core(const PermGroup& g, const PermGroup& h, std::size_t index_budget) {
  return action_on_cosets(g, h, index_budget).kernel();
}

}  // namespace hallkit
