#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "hallkit/group.hpp"

namespace hallkit {

inline constexpr std::size_t kDefaultIndexBudget = 100'000;

/// Canonical representatives of right cosets Hg of h in g.
class CosetCanon {
 public:
  CosetCanon(const PermGroup& g, const PermGroup& h);
  /// The least element of Hx in the order given by images of g's base.
  Perm canonical(const Perm& x) const;
  std::vector<Point> key(const Perm& x) const;

 private:
  PermGroup h_;
  std::vector<Point> base_;
};

/// Enumerated right cosets of h in g. Coset 0 is h itself.
class CosetTable {
 public:
  CosetTable(const PermGroup& g, const PermGroup& h, std::size_t index_budget = kDefaultIndexBudget);
  std::size_t size() const { return reps_.size(); }
  const Perm& rep(std::size_t i) const { return reps_[i]; }
  /// Index of the coset containing x.
  std::size_t find(const Perm& x) const;
  /// Permutation of the cosets induced by right multiplication with x.
  Perm right_action(const Perm& x) const;
  /// Permutation of the cosets induced by conjugation with x (h must be
  /// normalized by x).
  Perm conjugation_action(const Perm& x) const;

 private:
  CosetCanon canon_;
  std::vector<Perm> reps_;
  std::map<std::vector<Point>, std::size_t> index_;
};

/// A homomorphism from `source` onto `image` fixed by generator images,
/// with an evaluation rule for arbitrary elements. Lifting and kernels use
/// the diagonal subgroup of source x image acting on the disjoint union.
class ActionHom {
 public:
  ActionHom(PermGroup source, std::size_t image_degree, std::vector<Perm> image_gens,
            std::function<Perm(const Perm&)> apply);

  const PermGroup& source() const { return source_; }
  const PermGroup& image() const { return image_; }
  Perm operator()(const Perm& x) const { return apply_(x); }

  PermGroup kernel() const;
  /// Some element of source mapping to y (y must lie in image()).
  Perm lift(const Perm& y) const;
  /// Full preimage of a subgroup of image().
  PermGroup preimage(const PermGroup& sub) const;
  PermGroup image_of(const PermGroup& h) const;

 private:
  const PermGroup& diagonal() const;

  PermGroup source_;
  PermGroup image_;
  std::vector<Perm> image_gens_;
  std::function<Perm(const Perm&)> apply_;
  mutable std::shared_ptr<PermGroup> diagonal_;
  mutable std::size_t prefix_ = 0;
};

/// g acting on the right cosets of h. The kernel is the core of h in g.
ActionHom action_on_cosets(const PermGroup& g, const PermGroup& h,
                           std::size_t index_budget = kDefaultIndexBudget);

/// The quotient g/n realized on the cosets of n (n normal in g); the trivial
/// quotient is realized on one point.
ActionHom quotient_action(const PermGroup& g, const PermGroup& n,
                          std::size_t index_budget = kDefaultIndexBudget);

/// `ambient` acting by conjugation on the nonidentity elements of a/b. Both
/// a and b must be normalized by ambient. With a == b the image is trivial
/// on one point.
ActionHom section_element_action(const PermGroup& ambient, const PermGroup& a, const PermGroup& b,
                                 std::size_t element_budget);

PermGroup normal_core(const PermGroup& g, const PermGroup& h,
                      std::size_t index_budget = kDefaultIndexBudget);

}  // namespace hallkit
