#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallkit/hall.hpp"
#include "hallkit/structure.hpp"

namespace hallkit {

/// Verdicts supplied from outside the generic algorithms, for groups too
/// large for the oracle. Lookups compare groups exactly.
struct InjectedVerdict {
  PermGroup group;
  PiSet pi;
  Verdict cpi = Verdict::budget_exceeded;
  std::optional<PermGroup> hall;
  std::string provenance;
};

class VerdictRegistry {
 public:
  void add(InjectedVerdict v);
  const InjectedVerdict* find(const PermGroup& g, const PiSet& pi) const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<InjectedVerdict> entries_;
};

struct AutomizerCheck {
  std::size_t factor_index = 0;
  BigInt automizer_order;
  Verdict cpi = Verdict::budget_exceeded;
  AutomizerStrategy strategy = AutomizerStrategy::element_action;
  bool injected = false;
};

enum class FactorKind { abelian, semisimple };
std::string to_string(FactorKind k);

struct ReductionLevel {
  std::size_t index = 0;
  BigInt factor_order;
  FactorKind factor_kind = FactorKind::abelian;
  std::size_t simple_factor_count = 0;
  std::vector<AutomizerCheck> automizer_checks;
  BigInt H_order;
  std::vector<Perm> H_generators;
  /// How the next H was built: "extend", "find", "injected" or empty.
  std::string hall_method;
};

struct ReductionTrace {
  PermGroup group;
  PiSet pi;
  ChiefSeries series;
  std::vector<ReductionLevel> levels;
  Verdict verdict = Verdict::budget_exceeded;
  std::optional<PermGroup> hall_witness;
  /// Composition-factor criterion, when 2 or 3 is outside pi.
  std::optional<Verdict> shortcut;
  /// Level at which a budget ran out, with the message.
  std::optional<std::size_t> budget_level;
  std::string budget_message;
  bool used_injected = false;
};

struct ReductionOptions {
  std::uint64_t seed = 1;
  std::size_t element_budget = kDefaultElementBudget;
  std::size_t index_budget = kDefaultIndexBudget;
  const VerdictRegistry* registry = nullptr;
};

/// One entry per orbit of hi on the factors: the C_pi verdict of the
/// automorphisms induced on that factor.
std::vector<AutomizerCheck> automizer_cpi_check(const PermGroup& hi, const PermGroup& a, const PermGroup& b,
                                                const std::vector<PermGroup>& factors, bool abelian,
                                                const PiSet& pi, Budget& budget,
                                                const ReductionOptions& opts = {});

ReductionTrace cpi_reduce(const PermGroup& g, const PiSet& pi, Budget& budget,
                          const ReductionOptions& opts = {});

/// C_pi of every nonabelian composition factor. nullopt when 2 and 3 both lie in pi.
std::optional<Verdict> composition_factor_criterion(const PermGroup& g, const PiSet& pi, Budget& budget,
                                                    const ReductionOptions& opts = {});

/// A nonabelian composition factor as a faithful permutation group.
PermGroup section_group(const PermGroup& s, const PermGroup& b, const ReductionOptions& opts);

/// Every normal subgroup of g, ordered by (order, fingerprint).
std::vector<PermGroup> normal_subgroups(const PermGroup& g, Budget& budget, std::uint64_t seed = 1,
                                        std::size_t limit = 256);

struct NormalExtensionCheck {
  PermGroup normal;
  PermGroup product;  // <H, A>
  Verdict cpi = Verdict::budget_exceeded;
};

/// For a C_pi group, C_pi of <H, A> for every normal A.
std::vector<NormalExtensionCheck> normal_extension_suite(const PermGroup& g, const PiSet& pi, Budget& budget,
                                                         std::uint64_t seed = 1);

struct OracleComparison {
  Verdict reduction = Verdict::budget_exceeded;
  Verdict oracle = Verdict::budget_exceeded;
  bool agree = false;
  bool decided = false;  // both pipelines finished within budget
  double reduction_ms = 0;
  double oracle_ms = 0;
  ReductionTrace trace;
  std::optional<std::size_t> oracle_k;
};

/// Runs the reduction and the oracle concurrently, each with its own copy of the budget.
OracleComparison compare_with_oracle(const PermGroup& g, const PiSet& pi, const Budget& budget,
                                     const ReductionOptions& opts = {});

}  // namespace hallkit
