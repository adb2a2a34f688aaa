#include <doctest.h>

#include "hallkit/search.hpp"
#include "hallkit/zoo.hpp"

using namespace hallkit;

namespace {

// Brute-force reference filters over explicit element lists.
BigInt count_if_elements(const PermGroup& g, const std::function<bool(const Perm&)>& f) {
  BigInt c = 0;
  for (const auto& x : g.elements())
    if (f(x)) ++c;
  return c;
}

std::vector<PermGroup> small_subgroups(const PermGroup& g, std::uint64_t seeds) {
  std::vector<PermGroup> out{PermGroup(g.degree())};
  for (std::uint64_t s = 1; s <= seeds; ++s) {
    out.push_back(PermGroup(g.degree(), {g.random_element(s)}));
    out.push_back(PermGroup(g.degree(), {g.random_element(s), g.random_element(s + 100)}));
  }
  return out;
}

}  // namespace

TEST_CASE("normalizer and centralizer of small examples") {
  Budget b;
  PermGroup c3(4, {Perm::from_cycles(4, {{0, 1, 2}})});
  CHECK(normalizer(sym(4), c3, b).order() == 6);
  CHECK(normalizer(sym(4), alt(4), b).order() == 24);
  CHECK(centralizer(sym(3), alt(3), b) == alt(3));
  CHECK(centralizer(sym(5), PermGroup(5), b) == sym(5));
}

TEST_CASE("normalizer and centralizer agree with element filtering") {
  Budget b;
  for (const auto& g : {sym(5), psl2(7), wreath(sym(3), 2), affine(7, 6), sym(6)}) {
    for (const auto& h0 : small_subgroups(g, 6)) {
      PermGroup h = h0;
      auto n = normalizer(g, h, b);
      CHECK(n.contains(h));
      CHECK(n.order() == count_if_elements(g, [&](const Perm& x) { return normalizes(x, h); }));
      auto c = centralizer(g, h, b);
      CHECK(c.order() == count_if_elements(g, [&](const Perm& x) {
              for (const auto& s : h.generators())
                if (!(s * x == x * s)) return false;
              return true;
            }));
    }
  }
}

TEST_CASE("intersections agree with element filtering") {
  Budget b;
  auto g = sym(6);
  auto subs = small_subgroups(g, 5);
  subs.push_back(alt(6));
  subs.push_back(stabilizer(g, 2));
  for (const auto& x : subs)
    for (const auto& y : subs) {
      auto i = intersection(x, y, b);
      CHECK(i.order() == count_if_elements(x, [&](const Perm& e) { return y.contains(e); }));
    }
}

TEST_CASE("set stabilizers") {
  Budget b;
  Point s[] = {0, 1};
  CHECK(set_stabilizer(sym(5), s, b).order() == 12);
  CHECK(set_stabilizer(alt(5), s, b).order() == 6);
  Point t[] = {0, 2, 4};
  auto g = psl2(11);
  CHECK(set_stabilizer(g, t, b).order() ==
        count_if_elements(g, [&](const Perm& x) {
          for (Point p : t)
            if (x(p) != 0 && x(p) != 2 && x(p) != 4) return false;
          return true;
        }));
}

TEST_CASE("conjugating elements between subgroups") {
  Budget b;
  auto g = sym(4);
  PermGroup h(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})});
  Perm y = Perm::from_cycles(4, {{1, 2}});
  auto k = h.conjugate(y);
  auto x = conjugating_element(g, h, k, b);
  REQUIRE(x);
  CHECK(h.conjugate(*x) == k);
  CHECK_FALSE(conjugating_element(g, h, alt(4), b));
  PermGroup v4(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  PermGroup other(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
  CHECK_FALSE(conjugating_element(g, v4, other, b));
}

TEST_CASE("budget exhaustion is reported as an exception") {
  Budget b;
  b.node_limit = 3;
  Point s[] = {0, 1, 2};
  CHECK_THROWS_AS(set_stabilizer(sym(8), s, b), BudgetExceeded);
}

TEST_CASE("flag stabilizers have parabolic order") {
  Budget b;
  CHECK(flag_stabilizer(3, 2, {3}, b) == gl(3, 2));
  CHECK(flag_stabilizer(3, 2, {1, 2}, b).order() == 24);
  CHECK(flag_stabilizer(3, 3, {1, 1, 1}, b).order() == parabolic_order(3, {1, 1, 1}));
  CHECK(flag_stabilizer(2, 4, {1, 1}, b).order() == parabolic_order(4, {1, 1}));
  for (auto dims : std::vector<std::vector<std::size_t>>{{2, 1, 2}, {1, 2, 2}, {2, 2, 1}}) {
    auto h = flag_stabilizer(5, 2, dims, b);
    CHECK(h.order() == 9216);
    CHECK(h.order() == parabolic_order(2, dims));
  }
}

TEST_CASE("flag stabilizers of gl(5,2) are self-normalizing and distinguished by orbits") {
  Budget b;
  auto g = gl(5, 2);
  auto h1 = gl52_H1(b), h2 = gl52_H2(b), h3 = gl52_H3(b);
  CHECK(normalizer(g, h1, b) == h1);
  CHECK(normalizer(g, h2, b) == h2);
  CHECK(normalizer(g, h3, b) == h3);
  CHECK(orbit_lengths(h1) == std::vector<std::size_t>{3, 4, 24});
  CHECK(orbit_lengths(h2) == std::vector<std::size_t>{1, 6, 24});
  CHECK(orbit_lengths(h3) == std::vector<std::size_t>{3, 12, 16});
  CHECK_FALSE(conjugating_element(g, h1, h2, b));
}

TEST_CASE("the degree-62 extension of gl(5,2)") {
  auto hat = gl52_hat();
  CHECK(hat.group.degree() == 62);
  CHECK(hat.group.order() == BigInt(2) * 9999360);
  CHECK(hat.G_inside.order() == 9999360);
  CHECK((hat.iota * hat.iota).is_identity());
  CHECK(restrict_to_vectors(hat.G_inside).generators() == gl(5, 2).generators());
  LinearSpace space(5, 2);
  for (const auto& x : hat.G_inside.generators()) {
    Perm y = x.conjugate(hat.iota);
    CHECK(hat.G_inside.contains(y));
    auto m = space.matrix(restrict_to_vectors(PermGroup(62, {x})).generators()[0]);
    auto expect = space.transpose(*space.inverse(m));
    CHECK(space.matrix(restrict_to_vectors(PermGroup(62, {y})).generators()[0]) == expect);
  }
  Budget b;
  CHECK(centralizer(hat.group, hat.G_inside, b).is_trivial());
}

TEST_CASE("flag conjugator maps flags through the duality") {
  Budget b;
  LinearSpace space(5, 2);
  auto hat = gl52_hat();
  auto h1 = gl52_H1(b), h2 = gl52_H2(b), h3 = gl52_H3(b);
  auto up = [&](const PermGroup& h) {
    std::vector<Perm> gens;
    for (const auto& x : h.generators()) gens.push_back(embed_in_hat(space, x));
    return PermGroup(62, gens);
  };
  auto twist = [&](const PermGroup& h) { return restrict_to_vectors(up(h).conjugate(hat.iota)); };
  auto g11 = dual_flag_conjugator(space, h1, h1);
  REQUIRE(g11);
  CHECK(g11->is_identity());
  CHECK(dual_flag_conjugator(space, twist(h1), h1));
  CHECK(dual_flag_conjugator(space, twist(h2), h3));
  CHECK_FALSE(dual_flag_conjugator(space, twist(h2), h2));
}

TEST_CASE("zoo names") {
  CHECK(zoo_group("alt5")->order() == 60);
  CHECK(zoo_group("gl32")->order() == 168);
  CHECK(zoo_group("alt5xalt5")->order() == 3600);
  CHECK(zoo_group("sym3wr2")->order() == 72);
  CHECK(zoo_group("psl2_11")->order() == 660);
  CHECK(zoo_group("aff7_3")->order() == 21);
  CHECK_FALSE(zoo_group("nonsense"));
  CHECK(zoo_group("sym4")->generators() == sym(4).generators());
}
