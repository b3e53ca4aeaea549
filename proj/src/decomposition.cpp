#include "stanley/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace stanley {
namespace {

constexpr std::int64_t kMaxSweepBox = std::int64_t{1} << 22;
constexpr int kMaxMaskVars = 22;

std::uint32_t to_mask(const std::vector<int>& vars, int n) {
  std::uint32_t mask = 0;
  for (int v : vars) {
    if (v < 0 || v >= n) throw std::invalid_argument("variable index out of range");
    mask |= std::uint32_t{1} << v;
  }
  return mask;
}

std::vector<int> mask_to_vars(std::uint32_t mask) {
  std::vector<int> vars;
  for (int j = 0; mask >> j; ++j)
    if (mask >> j & 1) vars.push_back(j);
  return vars;
}

ExponentVector mask_to_vector(std::uint32_t mask, int n) {
  ExponentVector v = ExponentVector::zero(n);
  for (int j = 0; j < n; ++j)
    if (mask >> j & 1) v[j] = 1;
  return v;
}

void check_sorted_vars(const StanleySpace& space) {
  int n = space.u.size();
  for (std::size_t i = 0; i < space.z.size(); ++i) {
    int v = space.z[i];
    if (v < 0 || v >= n) throw std::invalid_argument("space variable index out of range");
    if (i > 0 && space.z[i - 1] >= v)
      throw std::invalid_argument("space variables must be sorted and distinct");
  }
}

}  // namespace

bool StanleySpace::contains(const ExponentVector& m) const {
  if (m.size() != u.size()) throw std::invalid_argument("monomial length differs from space");
  if (!u.leq(m)) return false;
  for (int j = 0; j < m.size(); ++j)
    if (m[j] > u[j] && !std::binary_search(z.begin(), z.end(), j)) return false;
  return true;
}

bool StanleySpace::squarefree() const {
  if (!u.is_squarefree()) return false;
  for (int j : u.support())
    if (!std::binary_search(z.begin(), z.end(), j)) return false;
  return true;
}

int StanleyDecomposition::sdepth() const {
  if (spaces.empty()) throw std::invalid_argument("empty decomposition has no sdepth");
  int best = n + 1;
  for (const auto& space : spaces) best = std::min(best, static_cast<int>(space.z.size()));
  return best;
}

StanleyDecomposition partition_to_decomposition(const IntervalPartition& partition) {
  int n = partition.var_count();
  StanleyDecomposition result{n, {}};
  result.spaces.reserve(partition.intervals.size());
  for (const auto& ival : partition.intervals) {
    if (ival.c.size() != n || ival.d.size() != n)
      throw std::invalid_argument("interval endpoint length differs from variable count");
    if (!ival.c.leq(ival.d) || !ival.d.leq(partition.g))
      throw std::invalid_argument("interval violates c <= d <= g");
    std::vector<int> z;
    std::vector<int> free;  // coordinates the interval spans without reaching g
    for (int j = 0; j < n; ++j) {
      if (ival.d[j] == partition.g[j])
        z.push_back(j);
      else if (ival.d[j] > ival.c[j])
        free.push_back(j);
    }
    // One space per choice of exponents on the free coordinates; the K[Z]
    // directions absorb everything between c and d on the z coordinates.
    ExponentVector u = ival.c;
    for (;;) {
      result.spaces.push_back(StanleySpace{u, z});
      int k = static_cast<int>(free.size()) - 1;
      while (k >= 0 && u[free[k]] == ival.d[free[k]]) {
        u[free[k]] = ival.c[free[k]];
        --k;
      }
      if (k < 0) break;
      ++u[free[k]];
    }
  }
  return result;
}

DecompositionReport verify_decomposition(const MonomialIdeal& ideal,
                                         const StanleyDecomposition& decomposition) {
  int n = ideal.var_count();
  if (decomposition.n != n)
    throw std::invalid_argument("decomposition and ideal have different variable counts");
  for (const auto& space : decomposition.spaces) {
    if (space.u.size() != n) throw std::invalid_argument("space length differs from variable count");
    check_sorted_vars(space);
  }

  DecompositionReport report;
  if (decomposition.spaces.empty()) {
    report.has_spaces = false;
    report.detail = "decomposition has no spaces";
    return report;
  }
  report.sdepth = decomposition.sdepth();

  for (std::size_t i = 0; i < decomposition.spaces.size(); ++i) {
    const auto& u = decomposition.spaces[i].u;
    if (!ideal.contains(u)) {
      report.generators_inside = false;
      if (!report.witness) {
        report.witness = u;
        report.detail = "space " + std::to_string(i + 1) + " starts at " + u.monomial_string() +
                        ", which is outside the ideal";
      }
      break;
    }
  }

  // Two spaces meet iff the componentwise max of their u's lies in both.
  for (std::size_t i = 0; i + 1 < decomposition.spaces.size() && report.disjoint; ++i) {
    for (std::size_t j = i + 1; j < decomposition.spaces.size(); ++j) {
      ExponentVector w = join(decomposition.spaces[i].u, decomposition.spaces[j].u);
      if (decomposition.spaces[i].contains(w) && decomposition.spaces[j].contains(w)) {
        report.disjoint = false;
        if (!report.witness) {
          report.witness = w;
          report.detail = "spaces " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                          " both contain " + w.monomial_string();
        }
        break;
      }
    }
  }

  // Membership of every predicate is constant in coordinate j from B(j)
  // on, so sweeping the capped box decides coverage exactly.
  ExponentVector cap = lcm_exponent(ideal);
  for (const auto& space : decomposition.spaces) cap = join(cap, space.u);
  for (int j = 0; j < n; ++j) cap[j] += 1;
  std::int64_t box = 1;
  for (int j = 0; j < n; ++j) {
    box *= cap[j] + 1;
    if (box > kMaxSweepBox) throw std::runtime_error("verification box too large to sweep");
  }

  ExponentVector cur = ExponentVector::zero(n);
  const ExponentVector lo = ExponentVector::zero(n);
  do {
    int covered = 0;
    for (const auto& space : decomposition.spaces)
      if (space.contains(cur)) ++covered;
    bool inside = ideal.contains(cur);
    if (inside && covered != 1) {
      report.covers = false;
      if (!report.witness) {
        report.witness = cur;
        report.detail = "ideal monomial " + cur.monomial_string() + " lies in " +
                        std::to_string(covered) + " spaces";
      }
      break;
    }
    if (!inside && covered != 0) {
      report.covers = false;
      if (!report.witness) {
        report.witness = cur;
        report.detail = "monomial " + cur.monomial_string() + " outside the ideal lies in a space";
      }
      break;
    }
  } while (next_in_box(cur, lo, cap));

  return report;
}

StanleyDecomposition canonical_squarefree(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw std::invalid_argument("canonical_squarefree requires a squarefree ideal");
  int n = ideal.var_count();
  if (n > kMaxMaskVars) throw std::runtime_error("too many variables for subset enumeration");
  StanleyDecomposition result{n, {}};
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    ExponentVector u = mask_to_vector(mask, n);
    if (ideal.contains(u)) result.spaces.push_back(StanleySpace{u, mask_to_vars(mask)});
  }
  return result;
}

StanleyDecomposition squarefree_refine(const MonomialIdeal& ideal,
                                       const StanleyDecomposition& decomposition) {
  if (!ideal.is_squarefree())
    throw std::invalid_argument("squarefree_refine requires a squarefree ideal");
  DecompositionReport report = verify_decomposition(ideal, decomposition);
  if (!report.valid())
    throw std::invalid_argument("input decomposition invalid: " + report.detail);

  StanleyDecomposition result{decomposition.n, {}};
  for (const auto& space : decomposition.spaces) {
    if (!space.u.is_squarefree()) continue;
    std::vector<int> z = space.z;
    for (int j : space.u.support()) z.push_back(j);
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    result.spaces.push_back(StanleySpace{space.u, std::move(z)});
  }
  DecompositionReport check = verify_decomposition(ideal, result);
  if (!check.valid())
    throw std::logic_error("squarefree refinement failed to verify: " + check.detail);
  return result;
}

StanleyDecomposition intersect_space_with_ideal(const StanleySpace& space,
                                                const MonomialIdeal& ideal) {
  int n = ideal.var_count();
  if (space.u.size() != n)
    throw std::invalid_argument("space and ideal have different variable counts");
  check_sorted_vars(space);
  if (!space.squarefree())
    throw std::invalid_argument("intersect_space_with_ideal requires a squarefree space");
  if (!ideal.is_squarefree())
    throw std::invalid_argument("intersect_space_with_ideal requires a squarefree ideal");
  if (n > kMaxMaskVars) throw std::runtime_error("too many variables for subset enumeration");

  // In the squarefree world membership depends only on supports, so the
  // intersection is the family of sets G with supp(u) <= G <= Z and x_G in
  // the ideal, and squarefree spaces are exactly boolean intervals [G, Z'].
  const std::uint32_t z_mask = to_mask(space.z, n);
  const std::uint32_t u_mask = to_mask(space.u.support(), n);
  const std::uint32_t free_mask = z_mask & ~u_mask;

  std::unordered_set<std::uint32_t> uncovered;
  std::vector<std::uint32_t> seeds;
  for (std::uint32_t f = free_mask;; f = (f - 1) & free_mask) {
    std::uint32_t g = u_mask | f;
    if (ideal.contains(mask_to_vector(g, n))) {
      uncovered.insert(g);
      seeds.push_back(g);
    }
    if (f == 0) break;
  }
  // Small seeds first so each can grab the largest remaining interval; ties
  // in lex order of the seed monomial.
  std::sort(seeds.begin(), seeds.end(), [&](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return mask_to_vector(a, n) < mask_to_vector(b, n);
  });

  StanleyDecomposition result{n, {}};
  for (std::uint32_t g : seeds) {
    if (uncovered.count(g) == 0) continue;
    const std::uint32_t room = z_mask & ~g;
    std::vector<std::uint32_t> tops;
    for (std::uint32_t f = room;; f = (f - 1) & room) {
      tops.push_back(g | f);
      if (f == 0) break;
    }
    std::sort(tops.begin(), tops.end(), [&](std::uint32_t a, std::uint32_t b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      if (pa != pb) return pa > pb;
      return mask_to_vector(a, n) < mask_to_vector(b, n);
    });
    std::uint32_t top = g;
    for (std::uint32_t cand : tops) {
      bool free_interval = true;
      const std::uint32_t gain = cand & ~g;
      for (std::uint32_t f = gain;; f = (f - 1) & gain) {
        if (uncovered.count(g | f) == 0) {
          free_interval = false;
          break;
        }
        if (f == 0) break;
      }
      if (free_interval) {
        top = cand;
        break;
      }
    }
    const std::uint32_t gain = top & ~g;
    for (std::uint32_t f = gain;; f = (f - 1) & gain) {
      uncovered.erase(g | f);
      if (f == 0) break;
    }
    result.spaces.push_back(StanleySpace{mask_to_vector(g, n), mask_to_vars(top)});
  }

  // Exact self-check over the capped box: the emitted spaces must tile the
  // intersection set.
  ExponentVector cap = lcm_exponent(ideal);
  cap = join(cap, space.u);
  for (int j = 0; j < n; ++j) cap[j] += 1;
  ExponentVector cur = ExponentVector::zero(n);
  const ExponentVector lo = ExponentVector::zero(n);
  do {
    bool target = space.contains(cur) && ideal.contains(cur);
    int covered = 0;
    for (const auto& s : result.spaces)
      if (s.contains(cur)) ++covered;
    if (covered != (target ? 1 : 0))
      throw std::logic_error("space intersection failed to tile at " + cur.monomial_string());
  } while (next_in_box(cur, lo, cap));

  return result;
}

StanleyDecomposition extension_refinement(const MonomialIdeal& ideal,
                                          const StanleyDecomposition& decomposition,
                                          const MonomialIdeal& sub_ideal) {
  int n = ideal.var_count();
  if (sub_ideal.var_count() != n + 1)
    throw std::invalid_argument("refinement target must have exactly one more variable");
  if (!ideal.is_squarefree() || !sub_ideal.is_squarefree())
    throw std::invalid_argument("extension_refinement requires squarefree ideals");
  for (const auto& gen : sub_ideal.generators()) {
    std::vector<int> head(gen.entries().begin(), gen.entries().end() - 1);
    if (!ideal.contains(ExponentVector(std::move(head))))
      throw std::invalid_argument("target ideal is not contained in the extension");
  }
  for (const auto& space : decomposition.spaces)
    if (!space.squarefree())
      throw std::invalid_argument("extension_refinement requires a squarefree decomposition");
  DecompositionReport report = verify_decomposition(ideal, decomposition);
  if (!report.valid())
    throw std::invalid_argument("input decomposition invalid: " + report.detail);

  StanleyDecomposition result{n + 1, {}};
  for (const auto& space : decomposition.spaces) {
    std::vector<int> entries = space.u.entries();
    entries.push_back(0);
    StanleySpace extended{ExponentVector(std::move(entries)), space.z};
    extended.z.push_back(n);
    for (auto& piece : intersect_space_with_ideal(extended, sub_ideal).spaces)
      result.spaces.push_back(std::move(piece));
  }
  DecompositionReport check = verify_decomposition(sub_ideal, result);
  if (!check.valid())
    throw std::logic_error("extension refinement failed to verify: " + check.detail);
  return result;
}

std::string space_string(const StanleySpace& space) {
  std::string s = space.u.monomial_string() + "*K[";
  for (std::size_t i = 0; i < space.z.size(); ++i) {
    if (i > 0) s += ',';
    s += 'x';
    s += std::to_string(space.z[i] + 1);
  }
  s += ']';
  return s;
}

std::ostream& operator<<(std::ostream& os, const StanleySpace& space) {
  return os << space_string(space);
}

}  // namespace stanley
