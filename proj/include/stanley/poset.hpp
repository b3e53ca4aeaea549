#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stanley/monomial_ideal.hpp"

namespace stanley {

/// Axis-aligned block {s : c <= s <= d} of exponent vectors.
struct Interval {
  ExponentVector c;
  ExponentVector d;

  bool contains(const ExponentVector& p) const { return c.leq(p) && p.leq(d); }
  std::int64_t cardinality() const;

  bool operator==(const Interval&) const = default;
  auto operator<=>(const Interval&) const = default;
};

/// Claimed interval partition of a characteristic poset with bounding
/// vector g; this is the certificate format for Stanley depth.
struct IntervalPartition {
  ExponentVector g;
  std::vector<Interval> intervals;

  int var_count() const { return g.size(); }
};

/// The finite poset P = {s : s <= g, some generator divides x^s},
/// materialized in lexicographic order with a dense membership index
/// over the box [0, g].
class CharacteristicPoset {
 public:
  CharacteristicPoset(MonomialIdeal ideal, ExponentVector g);

  const MonomialIdeal& ideal() const { return ideal_; }
  const ExponentVector& bound() const { return g_; }
  int var_count() const { return g_.size(); }
  const std::vector<ExponentVector>& points() const { return points_; }
  int point_count() const { return static_cast<int>(points_.size()); }
  std::int64_t box_size() const { return static_cast<std::int64_t>(box_to_point_.size()); }

  /// Index of p in the lex-ordered point list, -1 when p is not a point.
  int index_of(const ExponentVector& p) const;
  bool contains(const ExponentVector& p) const { return index_of(p) >= 0; }

 private:
  MonomialIdeal ideal_;
  ExponentVector g_;
  std::vector<ExponentVector> points_;
  std::vector<std::int32_t> box_to_point_;
  std::vector<std::int64_t> stride_;
};

/// Poset of the ideal under the bounding vector g (default: lcm of the
/// generators). Every generator must divide x^g.
CharacteristicPoset build_poset(const MonomialIdeal& ideal,
                                std::optional<ExponentVector> g = std::nullopt);

/// Number of coordinates where d meets the bounding vector g. Requires d <= g.
int rho(const ExponentVector& d, const ExponentVector& g);

/// Minimum of rho(d, g) over the intervals of a nonempty partition.
int min_rho(const IntervalPartition& partition);

struct PartitionReport {
  bool well_formed = true;  // every interval satisfies c <= d <= g
  bool inside = true;       // every interval point belongs to the poset
  bool disjoint = true;
  bool covers = true;
  std::optional<int> min_rho;             // set when valid
  std::optional<ExponentVector> witness;  // first offending point
  std::string detail;

  bool valid() const { return well_formed && inside && disjoint && covers; }
};

/// Exact validation by full enumeration of the box [0, g]. Failures are
/// reported with a witness, not thrown.
PartitionReport validate_partition(const CharacteristicPoset& poset,
                                   const IntervalPartition& partition);

std::ostream& operator<<(std::ostream& os, const Interval& ival);

}  // namespace stanley
