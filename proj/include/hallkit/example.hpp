#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallkit/reduction.hpp"
#include "hallkit/zoo.hpp"

namespace hallkit {

struct ClaimCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  std::string provenance;  // "stated" (claimed by the example) or "derived"
};

/// Reproduction of the GL(5,2) extended by inverse-transpose example.
struct Gl52Report {
  std::vector<ClaimCheck> claims;
  BigInt G_order;
  std::string G_factorization;
  std::vector<BigInt> hall_orders;
  std::vector<std::vector<std::size_t>> hall_orbit_lengths;
  std::optional<PermGroup> H;  // the normalizer of H1 in the extension
  std::size_t k_induced_known = 0;
  std::size_t known_classes = 0;
  bool k_exhaustive_verified = false;
  VerdictRegistry registry;
  std::optional<ReductionTrace> reduction;

  bool ok() const;
  const ClaimCheck* failed() const;
};

Gl52Report run_gl52_example(Budget& budget, bool run_reduction = true);

}  // namespace hallkit
