#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hallkit/action.hpp"
#include "hallkit/group.hpp"

namespace hallkit {

PermGroup normal_closure(const PermGroup& g, std::span<const Perm> s);
PermGroup normal_closure(const PermGroup& g, const PermGroup& h);
PermGroup derived_subgroup(const PermGroup& g);
PermGroup center(const PermGroup& g, Budget& budget);
bool is_abelian(const PermGroup& g);
bool is_solvable(const PermGroup& g);

/// A Sylow p-subgroup. Descends to point stabilizers of orbits of p'-length
/// and to centralizers of p-central elements, otherwise grows a p-subgroup
/// inside its normalizer. Deterministic for a fixed seed.
PermGroup sylow(const PermGroup& g, std::uint64_t p, std::uint64_t seed, Budget& budget);

/// Subgroups N with m < N normal in g and N/m minimal normal in g/m.
/// Requires m normal in g.
std::vector<PermGroup> minimal_normal_over(const PermGroup& g, const PermGroup& m, Budget& budget,
                                           std::uint64_t seed = 1);
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, Budget& budget,
                                                std::uint64_t seed = 1);
bool is_simple(const PermGroup& g, Budget& budget, std::uint64_t seed = 1);

/// Order-independent description used to break ties between subgroups.
std::string subgroup_fingerprint(const PermGroup& h);

struct ChiefFactor {
  BigInt order;
  bool abelian = false;
  /// Subgroups of the upper term whose images modulo the lower term are the
  /// direct factors of the section.
  std::vector<PermGroup> simple_factors;
};

struct ChiefSeries {
  PermGroup group;
  std::vector<PermGroup> terms;  // terms[0] = group, terms.back() trivial
  std::vector<ChiefFactor> factors;  // factors[i-1] describes terms[i-1]/terms[i]
};

ChiefSeries chief_series(const PermGroup& g, Budget& budget, std::uint64_t seed = 1);
/// Direct factors of terms[i-1]/terms[i], 1 <= i <= n.
std::vector<PermGroup> chief_factor_decomposition(const ChiefSeries& series, std::size_t i,
                                                  Budget& budget, std::uint64_t seed = 1);

inline constexpr std::size_t kDefaultElementBudget = 10'000;

enum class AutomizerStrategy { element_action, natural_action, centralizer_cosets };
std::string to_string(AutomizerStrategy s);

/// Aut_G(A/B) for A, B normal in G, realized faithfully.
struct InducedAutomizer {
  PermGroup ambient;
  PermGroup section_image;
  PermGroup inner_image;
  AutomizerStrategy strategy;
  std::shared_ptr<const ActionHom> projection;  // null for the natural action
};

InducedAutomizer induced_automizer(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                   Budget& budget,
                                   std::size_t element_budget = kDefaultElementBudget,
                                   std::size_t index_budget = kDefaultIndexBudget);

}  // namespace hallkit
