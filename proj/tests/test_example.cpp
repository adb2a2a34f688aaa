#include <doctest.h>

#include "hallkit/example.hpp"

using namespace hallkit;

TEST_CASE("GL(5,2) example claims") {
  Budget b;
  auto r = run_gl52_example(b);
  for (const auto& c : r.claims) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  CHECK(r.claims.size() >= 15);
  CHECK(r.G_order == 9999360);
  REQUIRE(r.H);
  CHECK(r.H->order() == 18432);
  CHECK(r.k_induced_known == 1);
  CHECK_FALSE(r.k_exhaustive_verified);
  REQUIRE(r.reduction);
  CHECK(r.reduction->used_injected);
  CHECK(r.reduction->levels.size() == 2);
}
