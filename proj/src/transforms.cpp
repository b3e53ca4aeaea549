#include "stanley/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stanley {
namespace {

// The generator carrying x_var; the shape precondition of the exponent
// lift/lower is that there is exactly one.
int distinguished_generator(const MonomialIdeal& ideal, int var) {
  if (var < 0 || var >= ideal.var_count())
    throw std::invalid_argument("variable index out of range");
  int found = -1;
  for (int i = 0; i < ideal.generator_count(); ++i) {
    if (ideal.generators()[static_cast<std::size_t>(i)][var] == 0) continue;
    if (found >= 0)
      throw std::invalid_argument("variable x" + std::to_string(var + 1) +
                                  " occurs in two generators");
    found = i;
  }
  if (found < 0)
    throw std::invalid_argument("variable x" + std::to_string(var + 1) +
                                " occurs in no generator");
  return found;
}

void require_canonical_bound(const MonomialIdeal& ideal, const IntervalPartition& partition) {
  if (partition.g != lcm_exponent(ideal))
    throw std::invalid_argument("partition must use the lcm bounding vector of the ideal");
}

void require_valid(const CharacteristicPoset& poset, const IntervalPartition& partition,
                   const char* who) {
  PartitionReport report = validate_partition(poset, partition);
  if (!report.valid())
    throw std::invalid_argument(std::string(who) + ": input partition invalid: " + report.detail);
}

MonomialIdeal with_generator_shift(const MonomialIdeal& ideal, int gen, int var, int delta) {
  std::vector<ExponentVector> gens = ideal.generators();
  gens[static_cast<std::size_t>(gen)] = gens[static_cast<std::size_t>(gen)].shifted(var, delta);
  return MonomialIdeal(ideal.var_count(), std::move(gens));
}

}  // namespace

std::vector<ReductionStep> radical_reduction_chain(const MonomialIdeal& ideal) {
  if (!is_complete_intersection(ideal))
    throw std::invalid_argument("radical_reduction_chain requires a complete intersection");
  std::vector<ReductionStep> steps;
  MonomialIdeal current = ideal;
  for (;;) {
    int var = -1, gen = -1;
    for (int j = 0; j < current.var_count() && var < 0; ++j)
      for (int i = 0; i < current.generator_count(); ++i)
        if (current.generators()[static_cast<std::size_t>(i)][j] >= 2) {
          var = j;
          gen = i;
          break;
        }
    if (var < 0) break;
    MonomialIdeal next = with_generator_shift(current, gen, var, -1);
    steps.push_back(ReductionStep{var, gen, current, next});
    current = std::move(next);
  }
  if (!(current == radical(ideal)))
    throw std::logic_error("reduction chain did not terminate at the radical");
  return steps;
}

TransformedPartition lift_partition(const MonomialIdeal& ideal, const IntervalPartition& partition,
                                    int var) {
  int gen = distinguished_generator(ideal, var);
  int a = ideal.generators()[static_cast<std::size_t>(gen)][var];
  require_canonical_bound(ideal, partition);
  require_valid(build_poset(ideal), partition, "lift_partition");

  MonomialIdeal lifted = with_generator_shift(ideal, gen, var, +1);
  IntervalPartition result{partition.g.shifted(var, +1), {}};
  result.intervals.reserve(partition.intervals.size());
  for (const auto& ival : partition.intervals) {
    ExponentVector c = ival.c[var] == a ? ival.c.shifted(var, +1) : ival.c;
    ExponentVector d = ival.d[var] >= a - 1 ? ival.d.shifted(var, +1) : ival.d;
    result.intervals.push_back(Interval{std::move(c), std::move(d)});
  }

  CharacteristicPoset lifted_poset = build_poset(lifted);
  PartitionReport report = validate_partition(lifted_poset, result);
  if (!report.valid())
    throw std::logic_error("lifted partition failed to validate: " + report.detail);
  for (std::size_t i = 0; i < result.intervals.size(); ++i)
    if (rho(partition.intervals[i].d, partition.g) != rho(result.intervals[i].d, result.g))
      throw std::logic_error("lift changed the rho of an interval");
  return TransformedPartition{std::move(lifted), std::move(result), 0};
}

TransformedPartition lower_partition(const MonomialIdeal& ideal, const IntervalPartition& partition,
                                     int var) {
  int gen = distinguished_generator(ideal, var);
  int raised = ideal.generators()[static_cast<std::size_t>(gen)][var];
  if (raised < 2)
    throw std::invalid_argument("exponent of x" + std::to_string(var + 1) +
                                " is already 1, nothing to lower");
  int a = raised - 1;
  require_canonical_bound(ideal, partition);
  require_valid(build_poset(ideal), partition, "lower_partition");

  MonomialIdeal lowered = with_generator_shift(ideal, gen, var, -1);
  IntervalPartition result{partition.g.shifted(var, -1), {}};
  int dropped = 0;
  for (const auto& ival : partition.intervals) {
    ExponentVector c = ival.c[var] == a + 1 ? ival.c.shifted(var, -1) : ival.c;
    ExponentVector d = ival.d[var] >= a ? ival.d.shifted(var, -1) : ival.d;
    if (!c.leq(d)) {
      ++dropped;
      continue;
    }
    result.intervals.push_back(Interval{std::move(c), std::move(d)});
  }

  CharacteristicPoset lowered_poset = build_poset(lowered);
  PartitionReport report = validate_partition(lowered_poset, result);
  if (!report.valid())
    throw std::logic_error("lowered partition failed to validate: " + report.detail);
  return TransformedPartition{std::move(lowered), std::move(result), dropped};
}

TransformedDecomposition project_decomposition(const MonomialIdeal& ideal,
                                               const StanleyDecomposition& decomposition) {
  int n = ideal.var_count();
  if (n < 2) throw std::invalid_argument("projection needs at least two variables");
  DecompositionReport report = verify_decomposition(ideal, decomposition);
  if (!report.valid())
    throw std::invalid_argument("input decomposition invalid: " + report.detail);

  int last = n - 1;
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& gen : ideal.generators()) {
    std::vector<int> head(gen.entries().begin(), gen.entries().end() - 1);
    ExponentVector image(std::move(head));
    if (image.is_zero())
      throw std::invalid_argument("generator " + gen.monomial_string() +
                                  " is a pure power of x" + std::to_string(last + 1) +
                                  "; the image would be the unit ideal");
    gens.push_back(std::move(image));
  }
  MonomialIdeal image_ideal(n - 1, std::move(gens));

  StanleyDecomposition result{n - 1, {}};
  for (const auto& space : decomposition.spaces) {
    if (!std::binary_search(space.z.begin(), space.z.end(), last)) continue;
    std::vector<int> head(space.u.entries().begin(), space.u.entries().end() - 1);
    StanleySpace projected{ExponentVector(std::move(head)), {}};
    for (int v : space.z)
      if (v != last) projected.z.push_back(v);
    result.spaces.push_back(std::move(projected));
  }
  if (result.spaces.empty())
    throw std::logic_error("no space frees the projected variable; decomposition inconsistent");

  DecompositionReport check = verify_decomposition(image_ideal, result);
  if (!check.valid())
    throw std::logic_error("projected decomposition failed to verify: " + check.detail);
  return TransformedDecomposition{std::move(image_ideal), std::move(result)};
}

TransformedDecomposition extend_decomposition(const MonomialIdeal& ideal,
                                              const StanleyDecomposition& decomposition) {
  int n = ideal.var_count();
  DecompositionReport report = verify_decomposition(ideal, decomposition);
  if (!report.valid())
    throw std::invalid_argument("input decomposition invalid: " + report.detail);

  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& gen : ideal.generators()) {
    std::vector<int> entries = gen.entries();
    entries.push_back(0);
    gens.emplace_back(std::move(entries));
  }
  MonomialIdeal extended(n + 1, std::move(gens));

  StanleyDecomposition result{n + 1, {}};
  for (const auto& space : decomposition.spaces) {
    std::vector<int> entries = space.u.entries();
    entries.push_back(0);
    StanleySpace bigger{ExponentVector(std::move(entries)), space.z};
    bigger.z.push_back(n);
    result.spaces.push_back(std::move(bigger));
  }

  DecompositionReport check = verify_decomposition(extended, result);
  if (!check.valid())
    throw std::logic_error("extended decomposition failed to verify: " + check.detail);
  return TransformedDecomposition{std::move(extended), std::move(result)};
}

}  // namespace stanley
