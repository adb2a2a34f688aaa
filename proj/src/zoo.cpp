#include "hallkit/zoo.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "hallkit/search.hpp"

namespace hallkit {

namespace {

void check_degree(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": degree must be positive");
  if (n > kZooDegreeLimit)
    throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(n) +
                                " exceeds limit " + std::to_string(kZooDegreeLimit));
}

Perm cycle_perm(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return Perm(std::move(img));
}

Perm shifted(const Perm& g, std::size_t offset, std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < g.degree(); ++i) img[offset + i] = static_cast<Point>(offset + g(i));
  return Perm(std::move(img));
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto f = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [r, e] : f) ok = ok && powmod(g, (p - 1) / r, p) != 1;
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

}  // namespace

PermGroup sym(std::size_t n) {
  check_degree(n, "sym");
  if (n < 2) return PermGroup(n);
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(cycle_perm(n));
  return PermGroup(n, std::move(gens));
}

PermGroup alt(std::size_t n) {
  check_degree(n, "alt");
  if (n < 3) return PermGroup(n);
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic(std::size_t n) {
  check_degree(n, "cyclic");
  if (n == 1) return PermGroup(1);
  return PermGroup(n, {cycle_perm(n)});
}

PermGroup dihedral(std::size_t n) {
  check_degree(n, "dihedral");
  if (n < 3) {
    // D_1 = C_2, D_2 = C_2 x C_2 in their regular-ish actions.
    if (n == 1) return PermGroup(2, {Perm::from_cycles(2, {{0, 1}})});
    return PermGroup(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  }
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_perm(n), Perm(std::move(refl))});
}

PermGroup affine(std::uint64_t p, std::uint64_t d) {
  if (!is_prime(p)) throw std::invalid_argument("affine: p must be prime");
  if (d == 0 || (p - 1) % d != 0) throw std::invalid_argument("affine: d must divide p - 1");
  check_degree(p, "affine");
  std::uint64_t a = powmod(primitive_root(p), (p - 1) / d, p);
  std::vector<Point> mul(p);
  for (std::uint64_t z = 0; z < p; ++z) mul[z] = static_cast<Point>(a * z % p);
  return PermGroup(p, {cycle_perm(p), Perm(std::move(mul))});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::size_t n = a.degree() + b.degree();
  check_degree(n, "direct_product");
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) gens.push_back(shifted(g, 0, n));
  for (const auto& g : b.generators()) gens.push_back(shifted(g, a.degree(), n));
  return PermGroup(n, std::move(gens));
}

PermGroup wreath(const PermGroup& g, std::size_t n) {
  std::size_t m = g.degree();
  check_degree(n * m, "wreath");
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) gens.push_back(shifted(x, 0, n * m));
  if (n > 1) {
    std::vector<Point> img(n * m);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < m; ++i) img[b * m + i] = static_cast<Point>(((b + 1) % n) * m + i);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n * m, std::move(gens));
}

namespace {

// Projective line over GF(p): points 0..p-1 and infinity = p.
PermGroup projective_line_group(std::uint64_t p, bool full) {
  if (!is_prime(p)) throw std::invalid_argument("psl2/pgl2: p must be prime");
  check_degree(p + 1, "psl2");
  const Point inf = static_cast<Point>(p);
  std::uint64_t w = primitive_root(p);
  auto mobius = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    // z -> (az + b) / (cz + d)
    std::vector<Point> img(p + 1);
    for (std::uint64_t z = 0; z <= p; ++z) {
      std::uint64_t num, den;
      if (z == p) {
        num = a;
        den = c;
      } else {
        num = (a * z + b) % p;
        den = (c * z + d) % p;
      }
      img[z] = den == 0 ? inf : static_cast<Point>(num * powmod(den, p - 2, p) % p);
    }
    return Perm(std::move(img));
  };
  std::vector<Perm> gens{mobius(1, 1, 0, 1), mobius(w * w % p, 0, 0, 1), mobius(0, p - 1, 1, 0)};
  if (full) gens.push_back(mobius(w, 0, 0, 1));
  return PermGroup(p + 1, std::move(gens));
}

}  // namespace

PermGroup psl2(std::uint64_t p) { return projective_line_group(p, false); }
PermGroup pgl2(std::uint64_t p) { return projective_line_group(p, true); }

// --- finite fields and GL(n, q) ----------------------------------------------

SmallField::SmallField(std::uint64_t q) : q_(q) {
  auto f = factorize(q);
  if (q < 2 || f.size() != 1 || q > 9)
    throw std::invalid_argument("field order " + std::to_string(q) + " unsupported (prime power <= 9)");
  p_ = f.begin()->first;
  unsigned k = f.begin()->second;
  // x^k = -(m_0 + m_1 x + ...); coefficients of x^2+x+1, x^3+x+1, x^2+1.
  std::vector<unsigned> modulus;
  if (q == 4) modulus = {1, 1};
  if (q == 8) modulus = {1, 1, 0};
  if (q == 9) modulus = {1, 0};
  auto digits = [&](unsigned a) {
    std::vector<unsigned> d(k);
    for (unsigned i = 0; i < k; ++i, a /= p_) d[i] = a % p_;
    return d;
  };
  auto number = [&](const std::vector<unsigned>& d) {
    unsigned a = 0;
    for (unsigned i = k; i-- > 0;) a = a * p_ + d[i];
    return a;
  };
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<unsigned> dn(k);
    for (unsigned i = 0; i < k; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = number(dn);
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<unsigned> s(k);
      for (unsigned i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = number(s);
      std::vector<unsigned> prod(2 * k, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (unsigned t = 2 * k - 1; t >= k && k > 1; --t) {
        unsigned c = prod[t];
        prod[t] = 0;
        for (unsigned i = 0; i < k; ++i)
          prod[t - k + i] = (prod[t - k + i] + (p_ - 1) * c * modulus[i]) % p_;
      }
      if (k == 1) prod[0] %= p_;
      prod.resize(k);
      mul_[a * q + b] = number(prod);
    }
  }
  for (unsigned g = 1; g < q; ++g) {
    unsigned x = g, ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

unsigned SmallField::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  for (unsigned b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::logic_error("field element without inverse");
}

LinearSpace::LinearSpace(std::size_t n, std::uint64_t q) : n_(n), f_(q), count_(1) {
  if (n == 0 || n > 6) throw std::invalid_argument("gl: dimension must be 1..6");
  for (std::size_t i = 0; i < n; ++i) count_ *= q;
  check_degree(count_ - 1, "gl");
}

std::vector<unsigned> LinearSpace::vector(Point p) const {
  std::vector<unsigned> v(n_);
  std::size_t idx = p + 1;
  for (std::size_t i = 0; i < n_; ++i, idx /= f_.size()) v[i] = static_cast<unsigned>(idx % f_.size());
  return v;
}

Point LinearSpace::point(const std::vector<unsigned>& v) const {
  std::size_t idx = 0;
  for (std::size_t i = n_; i-- > 0;) idx = idx * f_.size() + v[i];
  if (idx == 0) throw std::logic_error("zero vector has no point");
  return static_cast<Point>(idx - 1);
}

std::vector<unsigned> LinearSpace::times(const std::vector<unsigned>& v, const Matrix& m) const {
  std::vector<unsigned> r(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    if (v[i])
      for (std::size_t j = 0; j < n_; ++j) r[j] = f_.add(r[j], f_.mul(v[i], m[i][j]));
  return r;
}

Matrix LinearSpace::multiply(const Matrix& a, const Matrix& b) const {
  Matrix r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = times(a[i], b);
  return r;
}

Matrix LinearSpace::identity() const {
  Matrix m(n_, std::vector<unsigned>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i) m[i][i] = 1;
  return m;
}

Matrix LinearSpace::transpose(const Matrix& m) const {
  Matrix t(n_, std::vector<unsigned>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[j][i] = m[i][j];
  return t;
}

std::optional<Matrix> LinearSpace::inverse(const Matrix& m) const {
  Matrix a = m, r = identity();
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && a[piv][c] == 0) ++piv;
    if (piv == n_) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(r[c], r[piv]);
    unsigned s = f_.inv(a[c][c]);
    for (std::size_t j = 0; j < n_; ++j) {
      a[c][j] = f_.mul(a[c][j], s);
      r[c][j] = f_.mul(r[c][j], s);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c || a[i][c] == 0) continue;
      unsigned t = f_.neg(a[i][c]);
      for (std::size_t j = 0; j < n_; ++j) {
        a[i][j] = f_.add(a[i][j], f_.mul(t, a[c][j]));
        r[i][j] = f_.add(r[i][j], f_.mul(t, r[c][j]));
      }
    }
  }
  return r;
}

Perm LinearSpace::perm(const Matrix& m) const {
  std::vector<Point> img(point_count());
  for (Point p = 0; p < img.size(); ++p) img[p] = point(times(vector(p), m));
  return Perm(std::move(img));
}

Matrix LinearSpace::matrix(const Perm& g) const {
  Matrix m(n_);
  std::size_t idx = 1;
  for (std::size_t i = 0; i < n_; ++i, idx *= f_.size())
    m[i] = vector(g(static_cast<Point>(idx - 1)));
  return m;
}

std::vector<Matrix> LinearSpace::standard_generators() const {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    Matrix a = identity(), b = identity();
    a[i][i + 1] = 1;
    b[i + 1][i] = 1;
    gens.push_back(a);
    gens.push_back(b);
  }
  if (f_.size() > 2) {
    Matrix d = identity();
    d[0][0] = f_.primitive();
    gens.push_back(d);
  }
  return gens;
}

PermGroup gl(std::size_t n, std::uint64_t q) {
  LinearSpace space(n, q);
  std::vector<Perm> gens;
  for (const auto& m : space.standard_generators()) gens.push_back(space.perm(m));
  return PermGroup(space.point_count(), std::move(gens));
}

BigInt parabolic_order(std::uint64_t q, const std::vector<std::size_t>& dims) {
  BigInt r = 1;
  for (std::size_t d : dims) {
    BigInt qd = 1;
    for (std::size_t i = 0; i < d; ++i) qd *= q;
    BigInt qi = 1;
    for (std::size_t i = 0; i < d; ++i, qi *= q) r *= qd - qi;
  }
  for (std::size_t i = 0; i < dims.size(); ++i)
    for (std::size_t j = i + 1; j < dims.size(); ++j)
      for (std::size_t e = 0; e < dims[i] * dims[j]; ++e) r *= q;
  return r;
}

PermGroup flag_stabilizer(std::size_t n, std::uint64_t q, const std::vector<std::size_t>& dims,
                          Budget& budget) {
  if (std::accumulate(dims.begin(), dims.end(), std::size_t{0}) != n ||
      std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end())
    throw std::invalid_argument("flag dimensions must be positive and sum to n");
  LinearSpace space(n, q);
  std::vector<int> cells(space.point_count());
  for (Point p = 0; p < cells.size(); ++p) {
    auto v = space.vector(p);
    std::size_t top = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i]) top = i;
    std::size_t s = 0;
    int k = 0;
    while (s + dims[k] <= top) s += dims[k++];
    cells[p] = k;
  }
  return partition_stabilizer(gl(n, q), cells, budget);
}

std::optional<Flag> invariant_flag(const LinearSpace& space, const PermGroup& h) {
  if (h.degree() != space.point_count()) return std::nullopt;
  auto os = orbits(h);
  std::vector<char> used(os.size(), 0);
  std::vector<char> in(space.point_count(), 0);
  auto closed = [&](const std::vector<char>& s) {
    const auto& f = space.field();
    for (Point a = 0; a < s.size(); ++a) {
      if (!s[a]) continue;
      auto va = space.vector(a);
      for (unsigned c = 2; c < f.size(); ++c) {
        auto w = va;
        for (auto& x : w) x = f.mul(x, c);
        if (!s[space.point(w)]) return false;
      }
      for (Point b = a + 1; b < s.size(); ++b) {
        if (!s[b]) continue;
        auto vb = space.vector(b);
        std::vector<unsigned> w(va.size());
        bool zero = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
          w[i] = f.add(va[i], vb[i]);
          zero = zero && w[i] == 0;
        }
        if (!zero && !s[space.point(w)]) return false;
      }
    }
    return true;
  };
  Flag flag;
  std::size_t size = 1, dim = 0;
  std::size_t remaining = os.size();
  while (remaining) {
    long pick = -1;
    for (std::size_t k = 0; k < os.size(); ++k) {
      if (used[k] || (pick >= 0 && os[k].size() >= os[pick].size())) continue;
      auto trial = in;
      for (Point p : os[k]) trial[p] = 1;
      if (closed(trial)) pick = static_cast<long>(k);
    }
    if (pick < 0) return std::nullopt;
    used[pick] = 1;
    --remaining;
    for (Point p : os[pick]) in[p] = 1;
    size += os[pick].size();
    std::size_t d = 0;
    for (std::size_t s = 1; s < size; s *= space.field().size()) ++d;
    flag.dims.push_back(d - dim);
    dim = d;
    std::vector<Point> sub;
    for (Point p = 0; p < in.size(); ++p)
      if (in[p]) sub.push_back(p);
    flag.subspaces.push_back(std::move(sub));
  }
  return flag;
}

PermGroup gl52_H1(Budget& budget) { return flag_stabilizer(5, 2, {2, 1, 2}, budget); }
PermGroup gl52_H2(Budget& budget) { return flag_stabilizer(5, 2, {1, 2, 2}, budget); }
PermGroup gl52_H3(Budget& budget) { return flag_stabilizer(5, 2, {2, 2, 1}, budget); }

Perm embed_in_hat(const LinearSpace& space, const Perm& g) {
  const std::size_t n = space.point_count();
  Matrix m = space.matrix(g);
  auto minv = space.inverse(m);
  if (!minv) throw std::invalid_argument("embed_in_hat: permutation is not linear");
  Matrix c = space.transpose(*minv);
  std::vector<Point> img(2 * n);
  for (Point p = 0; p < n; ++p) {
    img[p] = g(p);
    img[n + p] = static_cast<Point>(n + space.point(space.times(space.vector(p), c)));
  }
  return Perm(std::move(img));
}

Gl52Hat gl52_hat() {
  LinearSpace space(5, 2);
  const std::size_t n = space.point_count();
  std::vector<Perm> inside;
  for (const auto& m : space.standard_generators()) inside.push_back(embed_in_hat(space, space.perm(m)));
  std::vector<Point> img(2 * n);
  for (Point p = 0; p < n; ++p) {
    img[p] = static_cast<Point>(n + p);
    img[n + p] = p;
  }
  Perm iota(std::move(img));
  std::vector<Perm> all = inside;
  all.push_back(iota);
  return Gl52Hat{PermGroup(2 * n, std::move(all)), PermGroup(2 * n, std::move(inside)), iota};
}

PermGroup restrict_to_vectors(const PermGroup& h) {
  const std::size_t n = h.degree() / 2;
  std::vector<Perm> gens;
  for (const auto& g : h.generators()) {
    std::vector<Point> img(n);
    for (Point p = 0; p < n; ++p) {
      if (g(p) >= n) throw std::invalid_argument("restrict_to_vectors: element swaps the blocks");
      img[p] = g(p);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

std::optional<Perm> dual_flag_conjugator(const LinearSpace& space, const PermGroup& h_a,
                                         const PermGroup& h_b) {
  auto fa = invariant_flag(space, h_a);
  auto fb = invariant_flag(space, h_b);
  if (!fa || !fb) throw std::invalid_argument("dual_flag_conjugator: input is not a flag stabilizer");
  if (fa->dims != fb->dims) return std::nullopt;
  const auto& f = space.field();
  auto adapted = [&](const Flag& flag) {
    Matrix basis;
    std::set<std::vector<unsigned>> span{std::vector<unsigned>(space.dim(), 0)};
    for (const auto& sub : flag.subspaces)
      for (Point p : sub) {
        auto v = space.vector(p);
        if (span.count(v)) continue;
        basis.push_back(v);
        std::set<std::vector<unsigned>> grown;
        for (const auto& s : span)
          for (unsigned c = 0; c < f.size(); ++c) {
            auto w = s;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = f.add(w[i], f.mul(c, v[i]));
            grown.insert(w);
          }
        span = std::move(grown);
      }
    return basis;
  };
  Matrix a = adapted(*fa), b = adapted(*fb);
  auto ainv = space.inverse(a);
  if (!ainv) throw std::logic_error("adapted basis is singular");
  Perm g = space.perm(space.multiply(*ainv, b));
  if (!(h_a.conjugate(g) == h_b))
    throw std::logic_error("dual_flag_conjugator: flag map does not conjugate the stabilizers");
  return g;
}

// --- names --------------------------------------------------------------------

namespace {

std::optional<PermGroup> zoo_factor(const std::string& s) {
  auto num_after = [&](const std::string& prefix) -> std::optional<std::uint64_t> {
    if (s.rfind(prefix, 0) != 0 || s.size() == prefix.size()) return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = prefix.size(); i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      v = v * 10 + (s[i] - '0');
      if (v > 100000) return std::nullopt;
    }
    return v;
  };
  auto wr = s.find("wr");
  if (wr != std::string::npos) {
    auto base = zoo_factor(s.substr(0, wr));
    std::uint64_t k = 0;
    for (char c : s.substr(wr + 2)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      k = k * 10 + (c - '0');
    }
    if (!base || k == 0) return std::nullopt;
    return wreath(*base, k);
  }
  auto us = s.find('_');
  if (s.rfind("aff", 0) == 0 && us != std::string::npos) {
    // aff<p>_<d>
    std::uint64_t p = std::stoull(s.substr(3, us - 3)), d = std::stoull(s.substr(us + 1));
    return affine(p, d);
  }
  if (s == "gl52hat") return gl52_hat().group;
  if (auto v = num_after("psl2_")) return psl2(*v);
  if (auto v = num_after("pgl2_")) return pgl2(*v);
  if (auto v = num_after("sym")) return sym(*v);
  if (auto v = num_after("alt")) return alt(*v);
  if (auto v = num_after("cyclic")) return cyclic(*v);
  if (auto v = num_after("c")) return cyclic(*v);
  if (auto v = num_after("dihedral")) return dihedral(*v);
  if (auto v = num_after("d")) return dihedral(*v);
  if (auto v = num_after("gl"); v && *v >= 10 && *v < 100) return gl(*v / 10, *v % 10);
  return std::nullopt;
}

}  // namespace

std::optional<PermGroup> zoo_group(const std::string& name) {
  try {
    std::optional<PermGroup> g;
    std::size_t start = 0;
    while (start <= name.size()) {
      auto x = name.find('x', start);
      if (x == std::string::npos) x = name.size();
      auto f = zoo_factor(name.substr(start, x - start));
      if (!f) return std::nullopt;
      g = g ? direct_product(*g, *f) : *f;
      start = x + 1;
    }
    return g;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

std::vector<std::string> zoo_names() {
  return {"sym<n>",    "alt<n>",    "cyclic<n> | c<n>", "dihedral<n> | d<n> (order 2n)",
          "psl2_<p>",  "pgl2_<p>",  "gl<n><q>",         "aff<p>_<d>",
          "gl52hat",   "<a>x<b> (direct product)",      "<a>wr<k> (wreath with C_k)"};
}

}  // namespace hallkit
