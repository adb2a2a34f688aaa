#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hallkit/arith.hpp"
#include "hallkit/perm.hpp"

namespace hallkit {

/// Raised when a search or construction runs past its configured limit.
/// Never a negative answer: the question is left open.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Limits shared by the searches of one computation: backtrack nodes and
/// the largest group order the exhaustive Hall oracle will accept.
struct Budget {
  std::uint64_t node_limit = 20'000'000;
  std::uint64_t order_limit = 1'000'000;
  std::uint64_t nodes = 0;

  void tick(std::string_view what) {
    if (++nodes > node_limit)
      throw BudgetExceeded("node budget of " + std::to_string(node_limit) +
                           " exceeded in " + std::string(what));
  }
};

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i holds the strong generators fixing b_0..b_{i-1}, the orbit of b_i
/// under them and a transversal. Base points after an optional prefix are
/// chosen as the smallest point moved by the element that forces a new level.
/// The structure stays complete after `add_generator`.
class Bsgs {
 public:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> index;   // point -> position in orbit, -1 if absent
    std::vector<std::int32_t> label;   // orbit position -> generator index reaching it
    std::vector<Point> parent;         // orbit position -> predecessor point
    std::vector<Perm> reps;            // explicit coset representatives (small degree)
    std::vector<std::size_t> checked;  // orbit position -> Schreier generators verified

    bool contains(Point p) const { return index[p] >= 0; }
  };

  Bsgs() = default;
  Bsgs(std::size_t degree, std::span<const Perm> generators,
       std::span<const Point> base_prefix = {});

  void add_generator(const Perm& g);

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;

  /// Coset representative at level i mapping the base point to p.
  Perm rep(std::size_t i, Point p) const;

  BigInt order() const;
  Factorization order_factors() const;

  /// Sifts g from level `from`. Returns the residue and the level where
  /// sifting stopped (length() when it passed every level).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from = 0) const;
  bool contains(const Perm& g) const;

  /// All strong generators: the union of the level generator lists.
  std::vector<Perm> strong_generators() const;

  /// Product of uniformly chosen transversal elements, one per level.
  Perm random_element(std::mt19937_64& rng) const;
  void for_each_element(const std::function<void(const Perm&)>& f) const;

 private:
  void append_level(Point b);
  void add_to_level(std::size_t i, const Perm& g);
  void extend_orbit(std::size_t i, std::size_t first_new_gen);
  void schreier_sims(std::size_t start);

  std::size_t degree_ = 0;
  bool explicit_reps_ = true;
  std::vector<Level> levels_;
};

/// A permutation group given by generators, with its BSGS built on
/// construction. Copies share the immutable BSGS.
class PermGroup {
 public:
  PermGroup() : PermGroup(1) {}
  explicit PermGroup(std::size_t degree);
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return *generators_; }
  const Bsgs& bsgs() const { return *bsgs_; }

  BigInt order() const { return bsgs_->order(); }
  Factorization order_factors() const { return bsgs_->order_factors(); }
  bool is_trivial() const { return bsgs_->length() == 0; }

  bool contains(const Perm& g) const;
  /// True iff h is a subgroup of this group.
  bool contains(const PermGroup& h) const;

  /// The same group with a BSGS whose base starts with `prefix`.
  PermGroup with_base_prefix(std::span<const Point> prefix) const;
  /// The subgroup generated by this group and `extra`.
  PermGroup closure(std::span<const Perm> extra) const;
  PermGroup closure(const Perm& extra) const { return closure(std::span<const Perm>(&extra, 1)); }
  PermGroup conjugate(const Perm& x) const;

  Perm random_element(std::uint64_t seed) const;
  std::vector<Perm> elements() const;

  /// Order-independent hash of the element set; equal groups hash equally.
  std::uint64_t element_hash() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  PermGroup(std::size_t degree, std::vector<Perm> generators, Bsgs bsgs);

  std::size_t degree_;
  std::shared_ptr<const std::vector<Perm>> generators_;
  std::shared_ptr<const Bsgs> bsgs_;
};

/// `build_bsgs` spelled as a free function; the seed is accepted for
/// interface symmetry but construction is deterministic.
PermGroup build_bsgs(const PermGroup& g, std::uint64_t seed = 1);

/// Throws std::invalid_argument unless h <= g.
void require_subgroup(const PermGroup& g, const PermGroup& h, std::string_view what);

}  // namespace hallkit
