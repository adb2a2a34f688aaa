#include <doctest.h>

#include "hallkit/action.hpp"
#include "hallkit/search.hpp"
#include "hallkit/zoo.hpp"

using namespace hallkit;

namespace {

PermGroup v4() {
  return PermGroup(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup d8_in_s4() {
  return PermGroup(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})});
}

}  // namespace

TEST_CASE("coset actions of sym(4)") {
  auto g = sym(4);
  auto whole = action_on_cosets(g, g);
  CHECK(whole.image().degree() == 1);
  CHECK(whole.image().is_trivial());
  auto sign = action_on_cosets(g, alt(4));
  CHECK(sign.image().degree() == 2);
  CHECK(sign.image().order() == 2);
  auto on3 = action_on_cosets(g, d8_in_s4());
  CHECK(on3.image().degree() == 3);
  CHECK(on3.image().order() == 6);
  CHECK(on3.kernel() == v4());
  CHECK(normal_core(g, d8_in_s4()) == v4());
}

TEST_CASE("coset action is a homomorphism and lifts are preimages") {
  auto g = psl2(11);
  auto h = stabilizer(g, 0);
  auto hom = action_on_cosets(g, h);
  CHECK(hom.image().degree() == 12);
  CHECK(hom.image().order() == g.order());
  for (std::uint64_t s = 1; s <= 20; ++s) {
    Perm a = g.random_element(s), b = g.random_element(s + 77);
    CHECK(hom(a * b) == hom(a) * hom(b));
    Perm y = hom.image().random_element(s);
    CHECK(hom(hom.lift(y)) == y);
  }
  CHECK(hom.kernel().is_trivial());
}

TEST_CASE("preimages through a quotient") {
  auto g = sym(4);
  auto q = quotient_action(g, v4());
  CHECK(q.image().order() == 6);
  PermGroup c3(q.image().degree(), {q(Perm::from_cycles(4, {{0, 1, 2}}))});
  auto pre = q.preimage(c3);
  CHECK(pre == alt(4));
  CHECK(q.preimage(PermGroup(q.image().degree())) == v4());
  CHECK(q.image_of(alt(4)).order() == 3);
}

TEST_CASE("index budget") {
  CHECK_THROWS_AS(action_on_cosets(sym(8), PermGroup(8), 1000), BudgetExceeded);
}

TEST_CASE("conjugation on the elements of a section") {
  auto g = sym(4);
  auto onv4 = section_element_action(g, v4(), PermGroup(4), 10000);
  CHECK(onv4.image().degree() == 3);
  CHECK(onv4.image().order() == 6);
  CHECK(onv4.kernel() == v4());
  auto s5 = section_element_action(sym(5), alt(5), PermGroup(5), 10000);
  CHECK(s5.image().order() == 120);
  auto triv = section_element_action(g, g, g, 10000);
  CHECK(triv.image().is_trivial());
  auto top = section_element_action(g, g, alt(4), 10000);
  CHECK(top.image().is_trivial());
}
