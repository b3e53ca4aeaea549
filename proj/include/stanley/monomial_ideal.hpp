#pragma once

#include <string>
#include <vector>

#include "stanley/exponent_vector.hpp"

namespace stanley {

/// Monomial ideal with minimal monomial generators. Construction removes
/// duplicates and divisibility-redundant generators and stores the rest in
/// decreasing lexicographic order. The zero ideal (no generators) and the
/// unit ideal (generator 1) are rejected.
class MonomialIdeal {
 public:
  MonomialIdeal(int var_count, std::vector<ExponentVector> generators);

  int var_count() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  /// Membership of the monomial x^m: some generator divides it.
  bool contains(const ExponentVector& m) const;
  bool is_squarefree() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int n_ = 0;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal minimalize(int var_count, std::vector<ExponentVector> generators);
MonomialIdeal minimalize(std::vector<ExponentVector> generators);

/// Exponents clamped to 1, then minimalized.
MonomialIdeal radical(const MonomialIdeal& ideal);

/// True when the generator supports are pairwise disjoint.
bool is_complete_intersection(const MonomialIdeal& ideal);

/// Componentwise maximum of the generators; coordinates untouched by every
/// generator are 0.
ExponentVector lcm_exponent(const MonomialIdeal& ideal);

/// Canonical text form "(x1^2*x2,x3)"; parse_ideal round-trips it.
std::string render(const MonomialIdeal& ideal);

}  // namespace stanley
