#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hallkit/group.hpp"

namespace hallkit {

inline constexpr std::size_t kZooDegreeLimit = 10'000;

PermGroup sym(std::size_t n);
PermGroup alt(std::size_t n);
PermGroup cyclic(std::size_t n);
/// Dihedral group of order 2n acting on n points.
PermGroup dihedral(std::size_t n);
/// Affine group z -> az + b over GF(p) with a restricted to the subgroup of
/// order d of GF(p)^*; d = p - 1 gives AGL(1, p).
PermGroup affine(std::uint64_t p, std::uint64_t d);
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
/// G wr C_n in its imprimitive action on n copies of G's points.
PermGroup wreath(const PermGroup& g, std::size_t n);
PermGroup psl2(std::uint64_t p);
PermGroup pgl2(std::uint64_t p);

/// GF(q) for q a prime power <= 9, elements 0..q-1 in base-p digit
/// representation (constant coefficient least significant).
class SmallField {
 public:
  explicit SmallField(std::uint64_t q);
  std::uint64_t size() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const;
  unsigned primitive() const { return primitive_; }

 private:
  std::uint64_t q_, p_;
  std::vector<unsigned> add_, mul_, neg_;
  unsigned primitive_ = 1;
};

using Matrix = std::vector<std::vector<unsigned>>;

/// GL(n, q) acting on the right of row vectors. The vector with
/// coordinates (v_0, ..., v_{n-1}) has index sum v_i q^i and point index - 1.
class LinearSpace {
 public:
  LinearSpace(std::size_t n, std::uint64_t q);
  std::size_t dim() const { return n_; }
  const SmallField& field() const { return f_; }
  std::size_t point_count() const { return count_ - 1; }

  std::vector<unsigned> vector(Point p) const;
  Point point(const std::vector<unsigned>& v) const;
  std::vector<unsigned> times(const std::vector<unsigned>& v, const Matrix& m) const;
  Matrix multiply(const Matrix& a, const Matrix& b) const;
  std::optional<Matrix> inverse(const Matrix& m) const;
  Matrix transpose(const Matrix& m) const;
  Matrix identity() const;

  Perm perm(const Matrix& m) const;
  /// Matrix of a permutation that acts linearly on the nonzero vectors.
  Matrix matrix(const Perm& g) const;
  std::vector<Matrix> standard_generators() const;

 private:
  std::size_t n_;
  SmallField f_;
  std::size_t count_;
};

PermGroup gl(std::size_t n, std::uint64_t q);

/// Stabilizer in gl(n, q) of the standard flag: V_k is spanned by the first
/// dims[0] + ... + dims[k-1] coordinate vectors.
PermGroup flag_stabilizer(std::size_t n, std::uint64_t q, const std::vector<std::size_t>& dims,
                          Budget& budget);
/// |GL_d1(q)| ... |GL_dk(q)| * q^(sum_{i<j} d_i d_j).
BigInt parabolic_order(std::uint64_t q, const std::vector<std::size_t>& dims);

struct Flag {
  std::vector<std::size_t> dims;
  /// Chain of subspaces V_1 < ... < V_k = V as sorted point lists.
  std::vector<std::vector<Point>> subspaces;
};

/// The chain of invariant subspaces of a flag stabilizer, read off its orbits.
std::optional<Flag> invariant_flag(const LinearSpace& space, const PermGroup& h);

PermGroup gl52_H1(Budget& budget);
PermGroup gl52_H2(Budget& budget);
PermGroup gl52_H3(Budget& budget);

struct Gl52Hat {
  PermGroup group;       // degree 62: vectors 0..30, covectors 31..61
  PermGroup G_inside;
  Perm iota;
};

Gl52Hat gl52_hat();
/// The degree-62 element of the hat group acting on vectors like g.
Perm embed_in_hat(const LinearSpace& space, const Perm& g);
/// Restriction of a subgroup of the hat group's G_inside to the 31 vectors.
PermGroup restrict_to_vectors(const PermGroup& h);

/// Some g in GL(n, q) with h_a^g == h_b, found by mapping adapted bases of
/// the invariant flags onto each other; nullopt when the dimension
/// sequences differ.
std::optional<Perm> dual_flag_conjugator(const LinearSpace& space, const PermGroup& h_a,
                                         const PermGroup& h_b);

/// Named groups understood by the CLI and the corpus ("alt5", "gl32", ...).
std::optional<PermGroup> zoo_group(const std::string& name);
std::vector<std::string> zoo_names();

}  // namespace hallkit
