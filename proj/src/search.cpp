#include "hallkit/search.hpp"

#include <algorithm>
#include <map>

namespace hallkit {

namespace {

class Backtrack {
 public:
  Backtrack(const PermGroup& g, const SearchPredicate& pred, Budget& budget, std::string_view what)
      : g_(g), b_(g.bsgs()), pred_(pred), budget_(budget), what_(what), base_(b_.base()),
        images_(base_.size()) {}

  bool admissible(std::size_t j, Point gamma) {
    if (pred_.allowed && !pred_.allowed(base_[j], gamma)) return false;
    images_[j] = gamma;
    if (pred_.partial &&
        !pred_.partial(std::span<const Point>(base_.data(), j + 1),
                       std::span<const Point>(images_.data(), j + 1)))
      return false;
    return true;
  }

  // w = u_{j-1} * ... * u_i; the image of b_j under the completed element is w(delta).
  std::optional<Perm> dfs(std::size_t j, const Perm& w) {
    budget_.tick(what_);
    if (j == base_.size()) {
      if (pred_.accept(w)) return w;
      return std::nullopt;
    }
    for (Point delta : b_.level(j).orbit) {
      Point gamma = w(delta);
      if (!admissible(j, gamma)) continue;
      auto r = dfs(j + 1, b_.rep(j, delta) * w);
      if (r) return r;
    }
    return std::nullopt;
  }

  PermGroup run_subgroup(const PermGroup& known) {
    const std::size_t n = g_.degree();
    const std::size_t len = base_.size();
    PermGroup k = known.with_base_prefix(base_);
    std::vector<Perm> found;
    for (long i = static_cast<long>(len) - 1; i >= 0; --i) {
      std::vector<Perm> gens;
      for (const auto& s : k.bsgs().strong_generators()) {
        bool fixes = true;
        for (long l = 0; l < i && fixes; ++l) fixes = s(base_[l]) == base_[l];
        if (fixes) gens.push_back(s);
      }
      for (const auto& f : found) gens.push_back(f);

      std::vector<char> in_orbit(n, 0), failed(n, 0);
      auto mark = [&](std::vector<char>& flags, Point p) {
        for (Point q : orbit(gens, n, p)) flags[q] = 1;
      };
      mark(in_orbit, base_[i]);
      for (long l = 0; l < i; ++l) images_[l] = base_[l];

      for (Point gamma : b_.level(i).orbit) {
        if (in_orbit[gamma] || failed[gamma]) continue;
        auto orb = orbit(gens, n, gamma);
        bool hits_failed = false;
        for (Point q : orb) hits_failed = hits_failed || failed[q];
        if (hits_failed || !admissible(i, gamma)) {
          for (Point q : orb) failed[q] = 1;
          continue;
        }
        auto r = dfs(i + 1, b_.rep(i, gamma));
        if (r) {
          found.push_back(*r);
          gens.push_back(*r);
          std::fill(in_orbit.begin(), in_orbit.end(), 0);
          mark(in_orbit, base_[i]);
        } else {
          for (Point q : orb) failed[q] = 1;
        }
      }
    }
    return known.closure(found);
  }

  std::optional<Perm> run_element() { return dfs(0, Perm(g_.degree())); }

 private:
  const PermGroup& g_;
  const Bsgs& b_;
  const SearchPredicate& pred_;
  Budget& budget_;
  std::string_view what_;
  std::vector<Point> base_;
  std::vector<Point> images_;
};

// Transversal element of h mapping `from` to `to`, or nullopt.
std::optional<Perm> orbit_transversal(const PermGroup& h, Point from, Point to) {
  const std::size_t n = h.degree();
  std::vector<std::int32_t> via(n, -1);
  std::vector<Point> parent(n, 0);
  std::vector<Point> queue{from};
  std::vector<char> seen(n, 0);
  seen[from] = 1;
  const auto& gens = h.generators();
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Point x = queue[qi];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Point y = gens[gi](x);
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = static_cast<std::int32_t>(gi);
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<std::int32_t> path;
  for (Point y = to; y != from; y = parent[y]) path.push_back(via[y]);
  Perm t(n);
  for (auto it = path.rbegin(); it != path.rend(); ++it) t = t * gens[*it];
  return t;
}

std::vector<std::size_t> orbit_length_per_point(const PermGroup& h) {
  std::vector<std::size_t> len(h.degree());
  for (const auto& o : orbits(h))
    for (Point p : o) len[p] = o.size();
  return len;
}

}  // namespace

PermGroup subgroup_search(const PermGroup& g, const SearchPredicate& pred, const PermGroup& known,
                          Budget& budget, std::string_view what) {
  Backtrack bt(g, pred, budget, what);
  return bt.run_subgroup(known);
}

std::optional<Perm> element_search(const PermGroup& g, const SearchPredicate& pred, Budget& budget,
                                   std::string_view what) {
  Backtrack bt(g, pred, budget, what);
  return bt.run_element();
}

std::vector<Point> orbit(std::span<const Perm> gens, std::size_t degree, Point p) {
  if (p >= degree) throw std::out_of_range("point " + std::to_string(p) + " out of range");
  std::vector<char> seen(degree, 0);
  std::vector<Point> out{p};
  seen[p] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  return out;
}

std::vector<Point> orbit(const PermGroup& g, Point p) {
  return orbit(g.generators(), g.degree(), p);
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(g.degree(), 0);
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p]) continue;
    auto o = orbit(g, p);
    for (Point q : o) seen[q] = 1;
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<std::size_t> orbit_ids(const PermGroup& g) {
  std::vector<std::size_t> id(g.degree());
  auto os = orbits(g);
  for (std::size_t k = 0; k < os.size(); ++k)
    for (Point p : os[k]) id[p] = k;
  return id;
}

std::vector<std::size_t> orbit_lengths(const PermGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits(g)) out.push_back(o.size());
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const Point> points) {
  for (Point p : points)
    if (p >= g.degree()) throw std::out_of_range("point " + std::to_string(p) + " out of range");
  PermGroup h = g.with_base_prefix(points);
  const Bsgs& b = h.bsgs();
  std::vector<Perm> gens;
  for (const auto& s : b.strong_generators()) {
    bool fixes = true;
    for (Point p : points) fixes = fixes && s(p) == p;
    if (fixes) gens.push_back(s);
  }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup stabilizer(const PermGroup& g, Point p) {
  Point pts[1] = {p};
  return pointwise_stabilizer(g, pts);
}

PermGroup partition_stabilizer(const PermGroup& g, std::span<const int> cells, Budget& budget) {
  if (cells.size() != g.degree()) throw std::invalid_argument("partition size mismatch");
  std::vector<int> cell(cells.begin(), cells.end());
  SearchPredicate pred;
  pred.allowed = [&cell](Point b, Point y) { return cell[b] == cell[y]; };
  pred.accept = [&cell](const Perm& x) {
    for (Point p = 0; p < cell.size(); ++p)
      if (cell[x(p)] != cell[p]) return false;
    return true;
  };
  return subgroup_search(g, pred, PermGroup(g.degree()), budget, "partition stabilizer");
}

PermGroup set_stabilizer(const PermGroup& g, std::span<const Point> set, Budget& budget) {
  std::vector<int> cells(g.degree(), 0);
  for (Point p : set) cells.at(p) = 1;
  return partition_stabilizer(g, cells, budget);
}

PermGroup intersection(const PermGroup& a, const PermGroup& b, Budget& budget) {
  if (a.degree() != b.degree()) throw std::invalid_argument("intersection: degree mismatch");
  if (b.contains(a)) return a;
  if (a.contains(b)) return b;
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  const Bsgs& lb = large.bsgs();
  const std::size_t r = lb.length();
  PermGroup h = small.with_base_prefix(lb.base());
  SearchPredicate pred;
  pred.partial = [&lb, r](std::span<const Point>, std::span<const Point> images) {
    // Is there an element of `large` sending its first base points to `images`?
    std::size_t upto = std::min(images.size(), r);
    Perm winv(lb.degree());
    for (std::size_t l = 0; l < upto; ++l) {
      Point y = winv(images[l]);
      if (!lb.level(l).contains(y)) return false;
      winv = winv * lb.rep(l, y).inverse();
    }
    return true;
  };
  pred.accept = [&large](const Perm& x) { return large.contains(x); };
  return subgroup_search(h, pred, PermGroup(a.degree()), budget, "intersection");
}

bool normalizes(const Perm& x, const PermGroup& h) {
  for (const auto& s : h.generators())
    if (!h.contains(s.conjugate(x))) return false;
  return true;
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  if (!g.contains(n)) return false;
  for (const auto& x : g.generators())
    if (!normalizes(x, n)) return false;
  return true;
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h, Budget& budget) {
  if (g.degree() != h.degree()) throw std::invalid_argument("centralizer: degree mismatch");
  if (h.is_trivial()) return g;
  auto len = orbit_length_per_point(h);
  auto base = g.bsgs().base();
  // Commuting with h pins the image of b_m once an earlier base point in
  // the same h-orbit has an image: x(t(b_l)) = t(x(b_l)).
  std::vector<long> anchor(base.size(), -1);
  std::vector<Perm> carry(base.size());
  for (std::size_t m = 0; m < base.size(); ++m) {
    for (std::size_t l = 0; l < m; ++l) {
      auto t = orbit_transversal(h, base[l], base[m]);
      if (t) {
        anchor[m] = static_cast<long>(l);
        carry[m] = *t;
        break;
      }
    }
  }
  SearchPredicate pred;
  pred.allowed = [&len](Point b, Point y) { return len[b] == len[y]; };
  pred.partial = [&anchor, &carry](std::span<const Point>, std::span<const Point> images) {
    std::size_t m = images.size() - 1;
    if (anchor[m] < 0) return true;
    return images[m] == carry[m](images[anchor[m]]);
  };
  pred.accept = [&h](const Perm& x) {
    for (const auto& s : h.generators())
      if (!(s * x == x * s)) return false;
    return true;
  };
  return subgroup_search(g, pred, PermGroup(g.degree()), budget, "centralizer");
}

namespace {

SearchPredicate orbit_structure_map(const std::vector<std::size_t>& len_src,
                                    const std::vector<std::size_t>& id_src,
                                    const std::vector<std::size_t>& len_dst,
                                    const std::vector<std::size_t>& id_dst) {
  SearchPredicate pred;
  pred.allowed = [&len_src, &len_dst](Point b, Point y) { return len_src[b] == len_dst[y]; };
  pred.partial = [&id_src, &id_dst](std::span<const Point> base, std::span<const Point> images) {
    std::size_t m = images.size() - 1;
    for (std::size_t l = 0; l < m; ++l) {
      bool same_src = id_src[base[l]] == id_src[base[m]];
      bool same_dst = id_dst[images[l]] == id_dst[images[m]];
      if (same_src != same_dst) return false;
    }
    return true;
  };
  return pred;
}

}  // namespace

PermGroup normalizer(const PermGroup& g, const PermGroup& h, Budget& budget) {
  require_subgroup(g, h, "normalizer");
  if (is_normal(g, h)) return g;
  auto len = orbit_length_per_point(h);
  std::vector<int> cells(len.begin(), len.end());
  // The normalizer permutes h-orbits, so it preserves orbit lengths.
  SearchPredicate outer;
  outer.allowed = [&cells](Point b, Point y) { return cells[b] == cells[y]; };
  outer.accept = [&cells](const Perm& x) {
    for (Point p = 0; p < cells.size(); ++p)
      if (cells[x(p)] != cells[p]) return false;
    return true;
  };
  PermGroup l = subgroup_search(g, outer, h, budget, "normalizer (orbit-length stabilizer)");
  if (is_normal(l, h)) return l;
  auto id = orbit_ids(h);
  SearchPredicate pred = orbit_structure_map(len, id, len, id);
  pred.accept = [&h](const Perm& x) { return normalizes(x, h); };
  return subgroup_search(l, pred, h, budget, "normalizer");
}

std::optional<Perm> conjugating_element(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                        Budget& budget) {
  require_subgroup(g, h, "conjugating_element");
  require_subgroup(g, k, "conjugating_element");
  if (h.order() != k.order()) return std::nullopt;
  if (h == k) return Perm(g.degree());
  if (orbit_lengths(h) != orbit_lengths(k)) return std::nullopt;
  auto len_h = orbit_length_per_point(h);
  auto len_k = orbit_length_per_point(k);
  auto id_h = orbit_ids(h);
  auto id_k = orbit_ids(k);
  SearchPredicate pred = orbit_structure_map(len_h, id_h, len_k, id_k);
  pred.accept = [&h, &k](const Perm& x) {
    for (const auto& s : h.generators())
      if (!k.contains(s.conjugate(x))) return false;
    return true;
  };
  return element_search(g, pred, budget, "subgroup conjugacy");
}

}  // namespace hallkit
