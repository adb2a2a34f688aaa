#include <doctest.h>

#include "hallkit/search.hpp"
#include "hallkit/structure.hpp"
#include "hallkit/zoo.hpp"

using namespace hallkit;

namespace {

// Minimal members of { normal closure of x : x in G, x != 1 }.
std::vector<PermGroup> brute_minimal_normal(const PermGroup& g) {
  std::vector<PermGroup> fam;
  for (const auto& x : g.elements()) {
    if (x.is_identity()) continue;
    Perm one[] = {x};
    auto n = normal_closure(g, one);
    bool seen = false;
    for (const auto& f : fam) seen = seen || f == n;
    if (!seen) fam.push_back(n);
  }
  std::vector<PermGroup> out;
  for (const auto& n : fam) {
    bool min = true;
    for (const auto& o : fam)
      if (o.order() < n.order() && n.contains(o)) min = false;
    if (min) out.push_back(n);
  }
  return out;
}

bool same_set(const std::vector<PermGroup>& a, const std::vector<PermGroup>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    bool found = false;
    for (const auto& y : b) found = found || x == y;
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("normal closure, derived subgroup and center") {
  Budget b;
  Perm x[] = {Perm::from_cycles(5, {{0, 1}, {2, 3}})};
  CHECK(normal_closure(alt(5), x) == alt(5));
  // Derived subgroup of sym(4) by closing all element commutators.
  auto s4 = sym(4);
  auto els = s4.elements();
  std::vector<Perm> comms;
  for (const auto& a : els)
    for (const auto& c : els) comms.push_back(commutator(a, c));
  CHECK(derived_subgroup(s4) == PermGroup(4, comms));
  CHECK(derived_subgroup(s4) == alt(4));
  auto d8 = dihedral(4);
  auto z = center(d8, b);
  BigInt brute = 0;
  for (const auto& a : d8.elements()) {
    bool central = true;
    for (const auto& c : d8.generators()) central = central && a * c == c * a;
    if (central) ++brute;
  }
  CHECK(z.order() == brute);
  CHECK(z.order() == 2);
  CHECK(is_solvable(sym(4)));
  CHECK_FALSE(is_solvable(alt(5)));
}

TEST_CASE("Sylow subgroups have full p-part") {
  Budget b;
  CHECK(sylow(sym(4), 2, 1, b).order() == 8);
  CHECK(sylow(alt(5), 5, 1, b).order() == 5);
  CHECK(sylow(gl(5, 2), 2, 1, b).order() == 1024);
  for (const auto& g : {sym(6), psl2(13), gl(3, 2), wreath(sym(3), 3), direct_product(alt(5), cyclic(6)),
                        affine(13, 12), gl(3, 3)}) {
    for (auto [p, e] : g.order_factors()) {
      auto P = sylow(g, p, 3, b);
      CHECK(g.contains(P));
      CHECK(P.order_factors() == Factorization{{p, e}});
    }
  }
}

TEST_CASE("simplicity") {
  Budget b;
  CHECK(is_simple(cyclic(7), b));
  CHECK(is_simple(alt(5), b));
  CHECK(is_simple(gl(3, 2), b));
  CHECK(is_simple(psl2(11), b));
  CHECK(is_simple(alt(6), b));
  CHECK_FALSE(is_simple(sym(4), b));
  CHECK_FALSE(is_simple(sym(5), b));
  CHECK_FALSE(is_simple(cyclic(6), b));
}

TEST_CASE("minimal normal subgroups agree with normal-closure sweep") {
  Budget b;
  auto mins = minimal_normal_subgroups(alt(5), b);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0] == alt(5));
  auto s4 = minimal_normal_subgroups(sym(4), b);
  REQUIRE(s4.size() == 1);
  CHECK(s4[0].order() == 4);
  auto aa = direct_product(alt(5), alt(5));
  auto two = minimal_normal_subgroups(aa, b);
  CHECK(two.size() == 2);
  CHECK(same_set(two, brute_minimal_normal(aa)));
  for (const auto& g : {sym(4), dihedral(6), wreath(sym(3), 2), direct_product(cyclic(3), cyclic(3)),
                        affine(7, 6), direct_product(sym(3), alt(4)), sym(5)})
    CHECK(same_set(minimal_normal_subgroups(g, b), brute_minimal_normal(g)));
}

TEST_CASE("chief series of sym(4)") {
  Budget b;
  auto cs = chief_series(sym(4), b);
  REQUIRE(cs.terms.size() == 4);
  CHECK(cs.terms[1] == alt(4));
  CHECK(cs.terms[2].order() == 4);
  CHECK(cs.terms[3].is_trivial());
  CHECK(cs.factors[0].order == 2);
  CHECK(cs.factors[1].order == 3);
  CHECK(cs.factors[2].order == 4);
  CHECK(cs.factors[2].abelian);
  auto v = chief_factor_decomposition(cs, 3, b);
  REQUIRE(v.size() == 2);
  CHECK(v[0].order() == 2);
  CHECK(v[1].order() == 2);
}

TEST_CASE("chief series invariants") {
  Budget b;
  for (const auto& g : {sym(5), wreath(sym(3), 2), direct_product(alt(5), cyclic(4)), wreath(alt(5), 2),
                        direct_product(sym(3), sym(3)), affine(13, 4)}) {
    auto cs = chief_series(g, b);
    BigInt prod = 1;
    for (std::size_t i = 1; i < cs.terms.size(); ++i) {
      CHECK(is_normal(g, cs.terms[i]));
      CHECK(cs.terms[i - 1].contains(cs.terms[i]));
      CHECK(cs.terms[i - 1].order() > cs.terms[i].order());
      // No normal subgroup of g strictly between consecutive terms.
      auto over = minimal_normal_over(g, cs.terms[i], b);
      for (const auto& n : over)
        CHECK_FALSE((cs.terms[i - 1].contains(n) && n.order() < cs.terms[i - 1].order()));
      prod *= cs.factors[i - 1].order;
    }
    CHECK(prod == g.order());
  }
}

TEST_CASE("socle of alt(5) wr 2 splits into two factors") {
  Budget b;
  auto g = wreath(alt(5), 2);
  auto cs = chief_series(g, b);
  REQUIRE(cs.terms.size() == 3);
  CHECK(cs.factors[1].order == 3600);
  CHECK_FALSE(cs.factors[1].abelian);
  auto f = chief_factor_decomposition(cs, 2, b);
  REQUIRE(f.size() == 2);
  CHECK(f[0].order() == 60);
  CHECK(f[1].order() == 60);
  auto simple = chief_factor_decomposition(chief_series(alt(5), b), 1, b);
  REQUIRE(simple.size() == 1);
  CHECK(simple[0] == alt(5));
}

TEST_CASE("chief series of the degree-62 extension") {
  Budget b;
  auto hat = gl52_hat();
  auto cs = chief_series(hat.group, b);
  REQUIRE(cs.terms.size() == 3);
  CHECK(cs.terms[1] == hat.G_inside);
  CHECK(is_simple(hat.G_inside, b));
}

TEST_CASE("induced automizers") {
  Budget b;
  PermGroup v4(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  auto a1 = induced_automizer(sym(4), v4, PermGroup(4), b);
  CHECK(a1.section_image.order() == 6);
  auto a2 = induced_automizer(sym(5), alt(5), PermGroup(5), b);
  CHECK(a2.section_image.order() == 120);
  CHECK(a2.inner_image.order() == 60);
  auto a3 = induced_automizer(sym(4), sym(4), sym(4), b);
  CHECK(a3.section_image.is_trivial());
  // Large sections fall back to the natural action or centralizer cosets.
  auto a4 = induced_automizer(sym(5), alt(5), PermGroup(5), b, 10);
  CHECK(a4.strategy == AutomizerStrategy::natural_action);
  CHECK(a4.section_image.order() == 120);
  auto g = direct_product(sym(5), cyclic(3));
  auto a = direct_product(alt(5), PermGroup(3));
  auto a5 = induced_automizer(g, a, PermGroup(8), b, 10);
  CHECK(a5.strategy == AutomizerStrategy::centralizer_cosets);
  CHECK(a5.section_image.order() == 120);
  CHECK(a5.inner_image.order() == 60);
}
