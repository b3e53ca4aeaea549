#pragma once

#include <vector>

#include "stanley/decomposition.hpp"
#include "stanley/monomial_ideal.hpp"
#include "stanley/poset.hpp"

namespace stanley {

/// One exponent decrement on the way from an ideal to its radical.
struct ReductionStep {
  int variable = 0;   // 0-based
  int generator = 0;  // index into before.generators()
  MonomialIdeal before;
  MonomialIdeal after;
};

/// Chain of single-exponent decrements from a complete intersection down
/// to its radical, preferring the lowest variable index and then the
/// lowest generator index. The chain length is the sum of (e - 1) over
/// all generator exponents e >= 1.
std::vector<ReductionStep> radical_reduction_chain(const MonomialIdeal& ideal);

struct TransformedPartition {
  MonomialIdeal ideal;
  IntervalPartition partition;
  int dropped_empty = 0;
};

/// Pushes a valid partition of the poset of I through the exponent raise
/// x_var^a -> x_var^(a+1), where x_var occurs in exactly one generator
/// with exponent a >= 1. Per interval: c gains e_var when c(var) = a,
/// d gains e_var when d(var) >= a - 1. Min rho is preserved exactly and
/// the result is validated on the new poset. The partition must use the
/// lcm bounding vector.
TransformedPartition lift_partition(const MonomialIdeal& ideal, const IntervalPartition& partition,
                                    int var);

/// Inverse direction: pushes a valid partition of the poset of I' (where
/// x_var occurs in exactly one generator with exponent a + 1 >= 2) down to
/// the ideal with exponent a. Per interval: c loses e_var when
/// c(var) = a + 1, d loses e_var when d(var) >= a; intervals that empty
/// out are dropped and counted. Min rho never decreases.
TransformedPartition lower_partition(const MonomialIdeal& ideal, const IntervalPartition& partition,
                                     int var);

struct TransformedDecomposition {
  MonomialIdeal ideal;
  StanleyDecomposition decomposition;
};

/// Applies the substitution that sends the last variable to 1: keeps the
/// spaces whose z contains it, divides each u by its full power of that
/// variable and drops the coordinate. The input decomposition must be
/// valid and no generator may be a pure power of the last variable (the
/// image would be the unit ideal). The result is a valid decomposition of
/// the image ideal with sdepth at least one less.
TransformedDecomposition project_decomposition(const MonomialIdeal& ideal,
                                               const StanleyDecomposition& decomposition);

/// Adjoins a fresh variable x_{n+1}: every space gains it in z, so the
/// result decomposes the extension ideal with sdepth one higher.
TransformedDecomposition extend_decomposition(const MonomialIdeal& ideal,
                                              const StanleyDecomposition& decomposition);

}  // namespace stanley
