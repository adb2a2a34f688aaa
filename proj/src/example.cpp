#include "hallkit/example.hpp"

#include <sstream>

#include "hallkit/search.hpp"

namespace hallkit {

bool Gl52Report::ok() const { return failed() == nullptr; }

const ClaimCheck* Gl52Report::failed() const {
  for (const auto& c : claims)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

std::string lengths(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

Gl52Report run_gl52_example(Budget& budget, bool run_reduction) {
  Gl52Report r;
  const PiSet pi{2, 3};
  auto claim = [&](std::string name, bool pass, std::string detail, std::string prov) {
    r.claims.push_back({std::move(name), pass, std::move(detail), std::move(prov)});
    return pass;
  };

  LinearSpace space(5, 2);
  Gl52Hat hat = gl52_hat();
  PermGroup g = gl(5, 2);
  r.G_order = g.order();
  r.G_factorization = to_string(g.order_factors());
  BigInt formula = 1;
  for (int i = 0; i < 5; ++i) formula *= BigInt(32 - (1 << i));
  claim("order of GL(5,2)", r.G_order == formula && r.G_factorization == "2^10*3^2*5*7*31",
        to_string(r.G_order) + " = " + r.G_factorization, "stated");
  claim("order of the extension", hat.group.order() == 2 * r.G_order,
        to_string(hat.group.order()), "derived");

  std::vector<PermGroup> hs{gl52_H1(budget), gl52_H2(budget), gl52_H3(budget)};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& h = hs[k];
    std::string name = "H" + std::to_string(k + 1);
    r.hall_orders.push_back(h.order());
    r.hall_orbit_lengths.push_back(orbit_lengths(h));
    claim(name + " is a {2,3}-Hall subgroup of order 9216", is_hall(g, h, pi) && h.order() == 9216,
          to_string(h.order()), "stated");
    claim(name + " is self-normalizing", normalizer(g, h, budget) == h, "normalizer computed in GL(5,2)",
          "stated");
  }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      claim("H" + std::to_string(a + 1) + " and H" + std::to_string(b + 1) + " are not conjugate",
            r.hall_orbit_lengths[a] != r.hall_orbit_lengths[b],
            "orbit lengths " + lengths(r.hall_orbit_lengths[a]) + " vs " + lengths(r.hall_orbit_lengths[b]),
            "stated");

  auto up = [&](const PermGroup& h) {
    std::vector<Perm> gens;
    for (const auto& x : h.generators()) gens.push_back(embed_in_hat(space, x));
    return PermGroup(62, std::move(gens));
  };
  auto twist = [&](const PermGroup& h) { return restrict_to_vectors(up(h).conjugate(hat.iota)); };
  auto c11 = dual_flag_conjugator(space, twist(hs[0]), hs[0]);
  auto c23 = dual_flag_conjugator(space, twist(hs[1]), hs[2]);
  auto c32 = dual_flag_conjugator(space, twist(hs[2]), hs[1]);
  auto c22 = dual_flag_conjugator(space, twist(hs[1]), hs[1]);
  claim("iota fixes the class of H1", c11.has_value(), "flag conjugator found and verified", "stated");
  claim("iota swaps the classes of H2 and H3", c23 && c32 && !c22,
        "H2 twisted has orbit lengths " + lengths(orbit_lengths(twist(hs[1]))), "stated");

  // iota * g normalizes H1 inside the extension.
  PermGroup h1 = up(hs[0]);
  if (c11) {
    Perm t = hat.iota * embed_in_hat(space, *c11);
    PermGroup h = h1.closure(t);
    r.H = h;
    claim("<H1, iota g> has order 18432", h.order() == 18432, to_string(h.order()), "derived");
    claim("<H1, iota g> is a {2,3}-Hall subgroup of the extension", is_hall(hat.group, h, pi), "", "stated");
    claim("<H1, iota g> meets GL(5,2) in H1", intersection(h, hat.G_inside, budget) == h1, "", "stated");
    claim("<H1, iota g> is the normalizer of H1", normalizer(hat.group, h1, budget) == h,
          "normalizer computed on 62 points", "stated");
  }

  // Known classes fixed by the outer generator are the induced ones.
  r.known_classes = 3;
  std::vector<bool> fixed{c11.has_value(), c22.has_value(),
                          dual_flag_conjugator(space, twist(hs[2]), hs[2]).has_value()};
  r.k_induced_known = static_cast<std::size_t>(std::count(fixed.begin(), fixed.end(), true));
  claim("k_induced over the three known classes is 1", r.k_induced_known == 1,
        "exhaustiveness of the three classes is not verified", "stated");
  r.k_exhaustive_verified = false;

  if (r.H) {
    r.registry.add({hat.group, pi, Verdict::yes, r.H,
                    "gl52 example pipeline: flag stabilizers and the induced normalizer; "
                    "the three known classes are assumed exhaustive"});
  }
  if (run_reduction && r.H) {
    ReductionOptions opts;
    opts.registry = &r.registry;
    r.reduction = cpi_reduce(hat.group, pi, budget, opts);
    const auto& t = *r.reduction;
    claim("reduction on the extension returns C_pi with a Hall witness",
          t.verdict == Verdict::yes && t.hall_witness && is_hall(hat.group, *t.hall_witness, pi),
          "uses injected verdicts: " + std::string(t.used_injected ? "yes" : "no"), "derived");
  }
  return r;
}

}  // namespace hallkit
