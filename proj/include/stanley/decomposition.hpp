#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stanley/monomial_ideal.hpp"
#include "stanley/poset.hpp"

namespace stanley {

/// Stanley space u*K[Z]: all monomials u*w where w involves only the
/// variables in z (sorted, 0-based).
struct StanleySpace {
  ExponentVector u;
  std::vector<int> z;

  bool contains(const ExponentVector& m) const;
  /// u is squarefree and its support lies inside z.
  bool squarefree() const;

  bool operator==(const StanleySpace&) const = default;
};

struct StanleyDecomposition {
  int n = 0;
  std::vector<StanleySpace> spaces;

  /// min |z| over the spaces; throws on an empty decomposition.
  int sdepth() const;
};

/// Interval [c, d] with Z = {x_j : d(j) = g(j)} contributes the spaces
/// x^p * K[Z] for every p in [c, d] with p(j) = c(j) on Z; all spaces of
/// an interval share |Z| = rho(d), so the sdepth equals the partition's
/// min rho.
StanleyDecomposition partition_to_decomposition(const IntervalPartition& partition);

struct DecompositionReport {
  bool has_spaces = true;
  bool generators_inside = true;  // every u lies in the ideal
  bool disjoint = true;
  bool covers = true;
  std::optional<ExponentVector> witness;
  std::string detail;
  int sdepth = 0;

  bool valid() const { return has_spaces && generators_inside && disjoint && covers; }
};

/// Exact verification: membership of each u, pairwise disjointness via the
/// componentwise-max criterion, and coverage swept over the capped box
/// B(j) = max(g(j), max_i u_i(j)) + 1, beyond which all membership
/// predicates are constant in each coordinate. Failures carry a witness
/// monomial and are reported, never thrown.
DecompositionReport verify_decomposition(const MonomialIdeal& ideal,
                                         const StanleyDecomposition& decomposition);

/// For squarefree ideals: one space x_F * K[Z_F] per subset F with x_F in
/// the ideal, where Z_F = F.
StanleyDecomposition canonical_squarefree(const MonomialIdeal& ideal);

/// Keeps the spaces with squarefree u and enlarges each z by supp(u);
/// the result is again a decomposition of the (squarefree) ideal.
StanleyDecomposition squarefree_refine(const MonomialIdeal& ideal,
                                       const StanleyDecomposition& decomposition);

/// Partition of the monomial set u*K[Z] intersected with a squarefree
/// ideal into squarefree Stanley spaces; empty when the intersection is
/// empty. Requires a squarefree space and a squarefree ideal.
StanleyDecomposition intersect_space_with_ideal(const StanleySpace& space,
                                                const MonomialIdeal& ideal);

/// Decomposition of sub_ideal (in n+1 variables, contained in the
/// extension of `ideal` by the new variable) assembled by extending every
/// space of `decomposition` with x_{n+1} and intersecting it with
/// sub_ideal. Everything involved must be squarefree.
StanleyDecomposition extension_refinement(const MonomialIdeal& ideal,
                                          const StanleyDecomposition& decomposition,
                                          const MonomialIdeal& sub_ideal);

std::string space_string(const StanleySpace& space);
std::ostream& operator<<(std::ostream& os, const StanleySpace& space);

}  // namespace stanley
