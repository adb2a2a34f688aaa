#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hallkit/arith.hpp"

namespace hallkit {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image list.
///
/// Composition reads left to right: `(p * q)(x) == q(p(x))`, so `p * q`
/// applies `p` first. Conjugation follows the same convention:
/// `p.conjugate(x) == x^-1 * p * x`.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<Point>> cycles);
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long long e) const;
  Perm conjugate(const Perm& x) const;
  /// Smallest point moved, or degree() for the identity.
  Point first_moved() const;

  /// Orders of the cycles of length > 1, ascending.
  std::vector<std::size_t> cycle_type() const;
  BigInt order() const;
  /// Prime divisors of the element order.
  std::vector<std::uint64_t> order_primes() const;
  std::vector<std::vector<Point>> cycles() const;
  std::string to_string() const;

  std::uint64_t hash() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// `p * q`; throws std::invalid_argument on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

/// Commutator `a^-1 b^-1 a b`.
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return static_cast<std::size_t>(p.hash()); }
};

}  // namespace hallkit
