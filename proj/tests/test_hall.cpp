#include <doctest.h>

#include "hallkit/hall.hpp"
#include "hallkit/search.hpp"
#include "hallkit/structure.hpp"
#include "hallkit/zoo.hpp"

using namespace hallkit;

namespace {

// Every subgroup generated by at most two elements.
std::vector<PermGroup> two_generated(const PermGroup& g) {
  auto els = g.elements();
  std::vector<PermGroup> out;
  std::map<std::uint64_t, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i; j < els.size(); ++j) {
      PermGroup h(g.degree(), {els[i], els[j]});
      auto& bucket = seen[h.element_hash()];
      bool dup = false;
      for (auto k : bucket) dup = dup || out[k] == h;
      if (dup) continue;
      bucket.push_back(out.size());
      out.push_back(std::move(h));
    }
  return out;
}

std::vector<PermGroup> brute_halls(const PermGroup& g, const PiSet& pi) {
  std::vector<PermGroup> out;
  for (auto& h : two_generated(g))
    if (is_hall(g, h, pi)) out.push_back(std::move(h));
  return out;
}

BigInt total(const HallClassSet& c) {
  BigInt s = 0;
  for (const auto& x : c.class_sizes) s += x;
  return s;
}

}  // namespace

TEST_CASE("oracle agrees with brute-force enumeration of Hall subgroups") {
  struct Case {
    const char* name;
    PiSet pi;
  };
  for (const auto& c : std::vector<Case>{{"sym4", {2}},
                                         {"sym4", {2, 3}},
                                         {"alt5", {2, 3}},
                                         {"alt5", {2, 5}},
                                         {"alt5", {3, 5}},
                                         {"alt5", {2}},
                                         {"gl32", {2, 3}},
                                         {"gl32", {2, 7}},
                                         {"gl32", {3, 7}},
                                         {"sym5", {2, 3}},
                                         {"dihedral6", {2}}}) {
    CAPTURE(c.name);
    CAPTURE(c.pi.to_string());
    PermGroup g = *zoo_group(c.name);
    Budget b;
    auto cls = all_hall_classes(g, c.pi, b);
    auto brute = brute_halls(g, c.pi);
    CHECK(cls.accounting_ok);
    CHECK(total(cls) == brute.size());
    for (std::size_t i = 0; i < cls.k(); ++i) {
      CHECK(is_hall(g, cls.class_reps[i], c.pi));
      for (std::size_t j = i + 1; j < cls.k(); ++j)
        CHECK_FALSE(are_conjugate(g, cls.class_reps[i], cls.class_reps[j], b));
    }
    // Every brute-force Hall subgroup is conjugate to a representative.
    for (const auto& h : brute) {
      bool hit = false;
      for (const auto& r : cls.class_reps) hit = hit || are_conjugate(g, h, r, b).has_value();
      CHECK(hit);
    }
  }
}

TEST_CASE("E/C/D verdicts on small groups") {
  Budget b;
  auto alt5 = alt(5);
  auto r = classify_ECD(alt5, {2, 3}, b);
  CHECK(r.E == Verdict::yes);
  CHECK(r.C == Verdict::yes);
  CHECK(r.D == Verdict::no);
  CHECK(r.k == 1u);
  REQUIRE(r.d_witness);
  CHECK(is_pi_number(r.d_witness->order(), {2, 3}));
  for (const auto& h : brute_halls(alt5, {2, 3})) CHECK_FALSE(h.contains(*r.d_witness));

  auto none = classify_ECD(alt5, {3, 5}, b);
  CHECK(none.E == Verdict::no);
  CHECK(none.k == 0u);
  CHECK(classify_ECD(alt5, {2, 5}, b).E == Verdict::no);

  auto gl32 = classify_ECD(gl(3, 2), {2, 3}, b);
  CHECK(gl32.E == Verdict::yes);
  CHECK(gl32.C == Verdict::no);
  CHECK(gl32.D == Verdict::no);
  CHECK(gl32.k == 2u);

  auto sylow_case = classify_ECD(alt5, {2}, b);
  CHECK(sylow_case.D == Verdict::yes);
  auto solvable = classify_ECD(sym(4), {2, 3}, b);
  CHECK(solvable.D == Verdict::yes);
  CHECK(solvable.pi_separable);
}

TEST_CASE("D check finds pi-subgroups that escape every Hall subgroup") {
  // In sym5 with pi = {2,3} the Hall subgroups are the point stabilizers;
  // <(0 1 2), (3 4)> fixes no point.
  Budget b;
  auto g = sym(5);
  auto h = stabilizer(g, 4);
  auto w = pi_subgroup_outside_halls(g, h, {2, 3}, b);
  REQUIRE(w);
  CHECK(is_pi_number(w->order(), {2, 3}));
  for (const auto& x : brute_halls(g, {2, 3})) CHECK_FALSE(x.contains(*w));
  CHECK_FALSE(pi_subgroup_outside_halls(sym(4), sylow(sym(4), 2, 1, b), {2}, b));
}

TEST_CASE("find_hall and is_hall") {
  Budget b;
  CHECK(*find_hall(sym(4), {2, 3}, b) == sym(4));
  CHECK(find_hall(sym(4), {5}, b)->is_trivial());
  CHECK_FALSE(find_hall(alt(5), {3, 5}, b));
  auto a4 = find_hall(alt(5), {2, 3}, b);
  REQUIRE(a4);
  CHECK(a4->order() == 12);
  CHECK(is_hall(alt(5), stabilizer(alt(5), 0), {2, 3}));
  CHECK_FALSE(is_hall(alt(5), stabilizer(alt(5), 0), {2}));
  CHECK(is_hall(gl(5, 2), gl52_H1(b), {2, 3}));
}

TEST_CASE("conjugacy tests") {
  Budget b;
  auto s4 = sym(4);
  auto p = sylow(s4, 2, 1, b);
  auto q = p.conjugate(Perm::from_cycles(4, {{0, 3}}));
  auto x = are_conjugate(s4, p, q, b);
  REQUIRE(x);
  CHECK(p.conjugate(*x) == q);
  auto cls = all_hall_classes(gl(3, 2), {2, 3}, b);
  REQUIRE(cls.k() == 2);
  CHECK_FALSE(are_conjugate(cls.group, cls.class_reps[0], cls.class_reps[1], b));
  CHECK(cls.class_reps[0].order() == cls.class_reps[1].order());
}

TEST_CASE("oracle output does not depend on the seed") {
  for (const char* name : {"gl32", "alt5", "sym5"}) {
    Budget b1, b2;
    auto g = *zoo_group(name);
    auto c1 = all_hall_classes(g, {2, 3}, b1, 1);
    auto c2 = all_hall_classes(g, {2, 3}, b2, 7);
    REQUIRE(c1.k() == c2.k());
    for (std::size_t i = 0; i < c1.k(); ++i) {
      CHECK(fingerprint(c1.class_reps[i]) == fingerprint(c2.class_reps[i]));
      CHECK(c1.class_sizes[i] == c2.class_sizes[i]);
    }
  }
}

TEST_CASE("oracle refuses groups above the order budget") {
  Budget b;
  b.order_limit = 100;
  CHECK_THROWS_AS(all_hall_classes(sym(5), {2, 3}, b), BudgetExceeded);
}

TEST_CASE("pi-separable series") {
  Budget b;
  auto s = pi_separable_series(sym(4), {2}, b);
  REQUIRE(s);
  CHECK(s->front() == sym(4));
  CHECK(s->back().is_trivial());
  CHECK(pi_separable_series(cyclic(6), {3}, b));
  CHECK(pi_separable_series(alt(5), {2, 3, 5}, b));
  CHECK_FALSE(pi_separable_series(alt(5), {2, 3}, b));
  CHECK_FALSE(pi_separable_series(sym(5), {5}, b));
  auto prod = direct_product(alt(5), cyclic(7));
  CHECK(pi_separable_series(prod, {7}, b));
}

TEST_CASE("Hall subgroups induced on a normal subgroup") {
  Budget b;
  auto s5 = sym(5);
  auto a5 = alt(5);
  auto rep = k_induced(s5, a5, {2, 3}, b);
  CHECK(rep.group_has_hall);
  CHECK(rep.k_induced == 1);
  CHECK(rep.k_total == 1);

  auto m = stabilizer(a5, 0);
  CHECK(class_is_G_invariant(s5, a5, m, b));
  auto h = extend_hall(s5, a5, m, {2, 3}, b);
  REQUIRE(h);
  CHECK(h->order() == 24);
  CHECK(intersection(*h, a5, b) == m);

  // gl32 = PSL(2,7) inside PGL(2,7): the outer automorphism swaps the two classes.
  auto pgl = pgl2(7);
  auto psl = derived_subgroup(pgl);
  REQUIRE(psl.order() == 168);
  auto inside = all_hall_classes(psl, {2, 3}, b);
  REQUIRE(inside.k() == 2);
  CHECK_FALSE(class_is_G_invariant(pgl, psl, inside.class_reps[0], b));
  CHECK_FALSE(extend_hall(pgl, psl, inside.class_reps[0], {2, 3}, b));
  CHECK(induced_class_orbit(pgl, psl, inside.class_reps[0], b).size() == 2);
}

TEST_CASE("lifting a Hall subgroup through a quotient") {
  Budget b;
  auto s4 = sym(4);
  auto v4 = derived_subgroup(derived_subgroup(s4));
  REQUIRE(v4.order() == 4);
  auto q = quotient_action(s4, v4);
  REQUIRE(q.image().order() == 6);
  auto kbar = sylow(q.image(), 3, 1, b);
  auto h = lift_hall(q, kbar, {3}, b);
  CHECK(h.order() == 3);
  CHECK(q.image_of(h) == kbar);
  auto kbar2 = sylow(q.image(), 2, 1, b);
  auto h2 = lift_hall(q, kbar2, {2}, b);
  CHECK(h2.order() == 8);
  CHECK_THROWS_AS(lift_hall(q, q.image(), {3}, b), std::invalid_argument);
}
