#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hallkit/action.hpp"
#include "hallkit/arith.hpp"
#include "hallkit/group.hpp"

namespace hallkit {

enum class Verdict { no, yes, budget_exceeded };
std::string to_string(Verdict v);
inline Verdict verdict(bool b) { return b ? Verdict::yes : Verdict::no; }

bool is_hall(const PermGroup& g, const PermGroup& h, const PiSet& pi);

/// Conjugation-invariant summary used to reject non-conjugate pairs cheaply.
/// The cycle-type histogram is exact (all elements) and only present for
/// subgroups of order at most 1000.
struct SubgroupFingerprint {
  BigInt order;
  std::vector<std::size_t> orbit_lengths;
  std::map<std::vector<std::size_t>, std::uint64_t> cycle_types;
  bool has_cycle_types = false;

  std::string to_string() const;
  friend bool operator==(const SubgroupFingerprint&, const SubgroupFingerprint&) = default;
};

SubgroupFingerprint fingerprint(const PermGroup& h);

std::optional<Perm> are_conjugate(const PermGroup& g, const PermGroup& h, const PermGroup& k,
                                  Budget& budget);

std::optional<PermGroup> find_hall(const PermGroup& g, const PiSet& pi, Budget& budget,
                                   std::uint64_t seed = 1);

struct HallClassSet {
  PermGroup group;
  PiSet pi;
  std::vector<PermGroup> class_reps;
  std::vector<BigInt> class_sizes;
  bool exhaustive = false;
  /// Halls containing the fixed Sylow subgroup that the search produced,
  /// and whether that count matches the class sizes.
  std::uint64_t found_containing_sylow = 0;
  bool accounting_ok = false;

  std::size_t k() const { return class_reps.size(); }
};

/// The oracle: every conjugacy class of pi-Hall subgroups.
HallClassSet all_hall_classes(const PermGroup& g, const PiSet& pi, Budget& budget,
                              std::uint64_t seed = 1);

struct EcdResult {
  Verdict E = Verdict::budget_exceeded;
  Verdict C = Verdict::budget_exceeded;
  Verdict D = Verdict::budget_exceeded;
  std::optional<std::size_t> k;
  bool pi_separable = false;
  std::vector<SubgroupFingerprint> class_fingerprints;
  /// A pi-subgroup lying in no Hall subgroup, when D fails with E and C true.
  std::optional<PermGroup> d_witness;
};

/// With oracle_only the solvable and pi-separable fast paths are skipped.
EcdResult classify_ECD(const PermGroup& g, const PiSet& pi, Budget& budget, std::uint64_t seed = 1,
                       bool oracle_only = false);

/// Some pi-subgroup of g contained in no conjugate of the Hall subgroup h.
std::optional<PermGroup> pi_subgroup_outside_halls(const PermGroup& g, const PermGroup& h,
                                                   const PiSet& pi, Budget& budget);

/// A normal series whose factors are pi- or pi'-groups, or nullopt.
std::optional<std::vector<PermGroup>> pi_separable_series(const PermGroup& g, const PiSet& pi,
                                                          Budget& budget, std::uint64_t seed = 1);

struct KReport {
  PermGroup group;
  PermGroup normal_subgroup;
  PiSet pi;
  bool group_has_hall = false;
  std::size_t k_induced = 0;
  std::size_t k_total = 0;
  std::vector<PermGroup> induced_class_reps;
};

KReport k_induced(const PermGroup& g, const PermGroup& a, const PiSet& pi, Budget& budget,
                  std::uint64_t seed = 1);

/// Orbit of the a-class of m under conjugation by g, as a-class representatives.
std::vector<PermGroup> induced_class_orbit(const PermGroup& g, const PermGroup& a, const PermGroup& m,
                                           Budget& budget);

bool class_is_G_invariant(const PermGroup& g, const PermGroup& a, const PermGroup& m, Budget& budget);

std::optional<PermGroup> extend_hall(const PermGroup& g, const PermGroup& a, const PermGroup& m,
                                     const PiSet& pi, Budget& budget, std::uint64_t seed = 1);

/// A pi-Hall subgroup of hom.source() whose image is kbar.
PermGroup lift_hall(const ActionHom& hom, const PermGroup& kbar, const PiSet& pi, Budget& budget,
                    std::uint64_t seed = 1);

}  // namespace hallkit
