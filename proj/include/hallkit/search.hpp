#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hallkit/group.hpp"

namespace hallkit {

/// Describes a subgroup (or a coset of one) by a membership test plus
/// optional pruning rules evaluated on partial base images.
///
/// `allowed` and `partial` must never reject an element that `accept`
/// would accept.
struct SearchPredicate {
  std::function<bool(Point base_point, Point image)> allowed;
  /// Called with base points b_0..b_j and their candidate images.
  std::function<bool(std::span<const Point> base, std::span<const Point> images)> partial;
  std::function<bool(const Perm&)> accept;
};

/// All elements of g satisfying `pred`, which must define a subgroup that
/// contains `known`. Depth-first backtrack over the stabilizer chain of g;
/// base images outside the orbit of the subgroup found so far are skipped.
PermGroup subgroup_search(const PermGroup& g, const SearchPredicate& pred, const PermGroup& known,
                          Budget& budget, std::string_view what);

/// First element of g (in base-image order) satisfying `pred`.
std::optional<Perm> element_search(const PermGroup& g, const SearchPredicate& pred, Budget& budget,
                                   std::string_view what);

// --- orbits and stabilizers -----------------------------------------------

std::vector<Point> orbit(std::span<const Perm> gens, std::size_t degree, Point p);
std::vector<Point> orbit(const PermGroup& g, Point p);
/// Orbit id per point, ids numbered by smallest member.
std::vector<std::size_t> orbit_ids(const PermGroup& g);
std::vector<std::vector<Point>> orbits(const PermGroup& g);
/// Sorted multiset of orbit lengths.
std::vector<std::size_t> orbit_lengths(const PermGroup& g);

PermGroup stabilizer(const PermGroup& g, Point p);
PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const Point> points);

/// Stabilizer of the ordered partition whose cell of point x is cells[x].
PermGroup partition_stabilizer(const PermGroup& g, std::span<const int> cells, Budget& budget);
PermGroup set_stabilizer(const PermGroup& g, std::span<const Point> set, Budget& budget);

PermGroup intersection(const PermGroup& a, const PermGroup& b, Budget& budget);
PermGroup centralizer(const PermGroup& g, const PermGroup& h, Budget& budget);
PermGroup normalizer(const PermGroup& g, const PermGroup& h, Budget& budget);
/// Some x in g with h^x == k, or nullopt when none exists.
std::optional<Perm> conjugating_element(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                        Budget& budget);

bool is_normal(const PermGroup& g, const PermGroup& n);
bool normalizes(const Perm& x, const PermGroup& h);

}  // namespace hallkit
