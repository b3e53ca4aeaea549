#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "stanley/poset.hpp"

namespace stanley {

struct SearchLimits {
  std::uint64_t node_budget = 100'000'000;
};

enum class SearchStatus { found, exhausted, budget_exceeded };

struct PartitionSearch {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<IntervalPartition> partition;
  std::uint64_t nodes = 0;
};

/// Decides whether the poset splits into intervals whose tops all satisfy
/// rho(d, g) >= min_rho_target. Backtracking exact cover: the lex-least
/// uncovered point must start its interval, candidate tops are tried by
/// decreasing rho with lex-descending tie-break, so the first certificate
/// in that canonical order is returned deterministically. Exceeding the
/// node budget aborts with budget_exceeded, never a wrong answer.
PartitionSearch exists_partition_at(const CharacteristicPoset& poset, int min_rho_target,
                                    const SearchLimits& limits = {});

enum class RefutationKind {
  searched,  // emptiness one level above the value was established by search
  vacuous,   // value + 1 exceeds the variable count, nothing to search
  ci_bound,  // closed by the complete-intersection upper bound (budget ran out)
};

struct SdepthResult {
  int value = 0;
  IntervalPartition certificate;
  int refutation_level = 0;  // value + 1
  RefutationKind refutation = RefutationKind::searched;
  std::uint64_t nodes = 0;
};

struct SolveOptions {
  std::uint64_t node_budget = 100'000'000;
  /// Start the descending search at the complete-intersection upper bound
  /// instead of the variable count when the ideal is one.
  bool prime_with_ci_bound = true;
  /// Establish the refutation at value + 1 by search even when a proven
  /// bound already implies it.
  bool verify_refutation = true;
};

/// Outcome of sdepth_exact: either an exact value with certificate and
/// refutation level, or an explicit unknown with certified bounds.
struct SdepthOutcome {
  std::optional<SdepthResult> exact;
  int lower = 0;
  int upper = 0;
  std::optional<IntervalPartition> lower_certificate;  // witnesses `lower` when unknown
  std::uint64_t nodes = 0;

  bool is_exact() const { return exact.has_value(); }
};

/// Maximum k such that a partition with min rho k exists, searched
/// decision-by-decision downward from the best available upper bound.
SdepthOutcome sdepth_exact(const MonomialIdeal& ideal, const SolveOptions& options = {});

/// (1 + n - m, ceil(m/2) + n - m) for a complete intersection with m
/// generators in n variables.
std::pair<int, int> ci_bounds(const MonomialIdeal& ideal);

/// n - m + 1 for a complete intersection.
int depth_ci(const MonomialIdeal& ideal);

/// n - m + ceil(m/2), the Stanley depth of (x1^a1, ..., xm^am) in n
/// variables. Requires 1 <= m <= n.
int irreducible_sdepth_formula(int m, int n);

}  // namespace stanley
