#include <doctest.h>

#include <map>

#include "hallkit/search.hpp"
#include "hallkit/zoo.hpp"

using namespace hallkit;

TEST_CASE("composition applies the left factor first") {
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  Perm c = a * b;
  CHECK(c(0) == 2);
  CHECK(c(1) == 0);
  // Written as functions, (0 1) o (1 2) applies (1 2) first: the 3-cycle [1,2,0].
  Perm d = compose(b, a);
  CHECK(std::vector<Point>(d.images().begin(), d.images().end()) == std::vector<Point>{1, 2, 0});
  CHECK((Perm(3) * a) == a);
  CHECK((a * a.inverse()).is_identity());
  CHECK_THROWS_AS(Perm(3) * Perm(4), std::invalid_argument);
}

TEST_CASE("image lists must be bijections") {
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 3, 1}), std::invalid_argument);
}

TEST_CASE("conjugate matches x^-1 h x") {
  Perm h = Perm::from_cycles(5, {{0, 1, 2}});
  Perm x = Perm::from_cycles(5, {{2, 3, 4}, {0, 1}});
  CHECK(h.conjugate(x) == x.inverse() * h * x);
}

TEST_CASE("orders of small groups") {
  CHECK(PermGroup(4).order() == 1);
  CHECK(alt(5).order() == 60);
  CHECK(sym(4).order() == 24);
  CHECK(sym(6).order() == 720);
  CHECK(cyclic(7).order() == 7);
  CHECK(dihedral(4).order() == 8);
  CHECK(psl2(7).order() == 168);
  CHECK(gl(3, 2).order() == 168);
  CHECK(direct_product(alt(5), alt(5)).order() == 3600);
  CHECK(wreath(sym(3), 2).order() == 72);
  CHECK(gl(2, 3).order() == 48);
  CHECK(gl(2, 4).order() == 180);
  CHECK(gl(2, 9).order() == 5760);
  CHECK(gl(2, 8).order() == 3528);
}

TEST_CASE("order agrees with element enumeration") {
  for (const auto& g : {sym(5), alt(6), dihedral(6), psl2(7), wreath(sym(3), 2), affine(7, 3)}) {
    auto els = g.elements();
    CHECK(BigInt(els.size()) == g.order());
    std::set<Perm> distinct(els.begin(), els.end());
    CHECK(distinct.size() == els.size());
  }
}

TEST_CASE("membership and subgroups") {
  CHECK(alt(4).contains(Perm::from_cycles(4, {{0, 1, 2}})));
  CHECK_FALSE(alt(4).contains(Perm::from_cycles(4, {{0, 1}})));
  CHECK(sym(4).contains(alt(4)));
  CHECK_FALSE(alt(4).contains(sym(4)));
  CHECK_THROWS_AS(alt(4).contains(Perm(5)), std::invalid_argument);
}

TEST_CASE("products of random elements stay in the group") {
  auto g = psl2(11);
  for (std::uint64_t s = 1; s <= 50; ++s) {
    Perm a = g.random_element(s), b = g.random_element(s + 1000);
    CHECK(g.contains(a * b));
  }
  CHECK(g.random_element(7) == g.random_element(7));
  CHECK(PermGroup(3).random_element(1).is_identity());
}

TEST_CASE("random elements of sym(3) are uniform") {
  auto g = sym(3);
  std::mt19937_64 rng(1);
  std::map<Perm, int> freq;
  const int n = 10000;
  for (int i = 0; i < n; ++i) ++freq[g.bsgs().random_element(rng)];
  CHECK(freq.size() == 6);
  double p = 1.0 / 6, sigma = std::sqrt(n * p * (1 - p));
  for (auto& [x, c] : freq) CHECK(std::abs(c - n * p) < 5 * sigma);
}

TEST_CASE("orbits and stabilizers") {
  CHECK(orbit(PermGroup(5), 3) == std::vector<Point>{3});
  CHECK(stabilizer(sym(5), 0).order() == 24);
  auto g = gl(5, 2);
  CHECK(orbit(g, 7).size() == 31);
  for (const auto& h : {psl2(7), wreath(sym(3), 2), alt(6)})
    for (Point p = 0; p < h.degree(); ++p)
      CHECK(BigInt(orbit(h, p).size()) * stabilizer(h, p).order() == h.order());
  CHECK_THROWS_AS(orbit(sym(3), 5), std::out_of_range);
}

TEST_CASE("base prefix is honoured and the order is unchanged") {
  auto g = psl2(11);
  Point pre[] = {5, 3};
  auto h = g.with_base_prefix(pre);
  CHECK(h.bsgs().base()[0] == 5);
  CHECK(h.bsgs().base()[1] == 3);
  CHECK(h.order() == g.order());
}

TEST_CASE("gl(5,2) order matches its factorization") {
  auto g = gl(5, 2);
  CHECK(g.degree() == 31);
  CHECK(to_string(g.order_factors()) == "2^10*3^2*5*7*31");
  CHECK(g.order() == BigInt(1024) * 9 * 5 * 7 * 31);
  CHECK(g.order() == BigInt(31) * 30 * 28 * 24 * 16);
  // The decimal 99999360 printed next to this factorization is not its value.
  CHECK(g.order() == BigInt(9999360));
  CHECK(BigInt(99999360) != BigInt(1024) * 9 * 5 * 7 * 31);
}
