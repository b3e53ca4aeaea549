#include "stanley/poset.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace stanley {

namespace {
// Dense index tables keep poset construction and membership O(1) per point;
// this bounds the boxes we are willing to materialize (plenty for the sizes
// the solver is meant for).
constexpr std::int64_t kMaxBoxSize = std::int64_t{1} << 22;
}  // namespace

std::int64_t Interval::cardinality() const {
  if (c.size() != d.size()) throw std::invalid_argument("interval endpoints of different length");
  std::int64_t total = 1;
  for (int j = 0; j < c.size(); ++j) {
    if (c[j] > d[j]) return 0;
    total *= d[j] - c[j] + 1;
  }
  return total;
}

CharacteristicPoset::CharacteristicPoset(MonomialIdeal ideal, ExponentVector g)
    : ideal_(std::move(ideal)), g_(std::move(g)) {
  int n = ideal_.var_count();
  if (g_.size() != n) throw std::invalid_argument("bounding vector length differs from variable count");
  for (const auto& v : ideal_.generators())
    if (!v.leq(g_))
      throw std::invalid_argument("bounding vector must dominate every generator");

  std::int64_t box = 1;
  for (int j = 0; j < n; ++j) {
    box *= g_[j] + 1;
    if (box > kMaxBoxSize) throw std::runtime_error("poset box too large to materialize");
  }
  stride_.assign(static_cast<std::size_t>(n), 1);
  for (int j = n - 2; j >= 0; --j) stride_[static_cast<std::size_t>(j)] = stride_[static_cast<std::size_t>(j + 1)] * (g_[j + 1] + 1);
  box_to_point_.assign(static_cast<std::size_t>(box), -1);

  ExponentVector cur = ExponentVector::zero(n);
  std::int64_t rank = 0;
  do {
    if (ideal_.contains(cur)) {
      box_to_point_[static_cast<std::size_t>(rank)] = static_cast<std::int32_t>(points_.size());
      points_.push_back(cur);
    }
    ++rank;
  } while (next_in_box(cur, ExponentVector::zero(n), g_));
}

int CharacteristicPoset::index_of(const ExponentVector& p) const {
  if (p.size() != var_count()) throw std::invalid_argument("point length differs from variable count");
  std::int64_t rank = 0;
  for (int j = 0; j < p.size(); ++j) {
    if (p[j] > g_[j]) return -1;
    rank += p[j] * stride_[static_cast<std::size_t>(j)];
  }
  return box_to_point_[static_cast<std::size_t>(rank)];
}

CharacteristicPoset build_poset(const MonomialIdeal& ideal, std::optional<ExponentVector> g) {
  return CharacteristicPoset(ideal, g ? std::move(*g) : lcm_exponent(ideal));
}

int rho(const ExponentVector& d, const ExponentVector& g) {
  if (!d.leq(g)) throw std::invalid_argument("rho requires d <= g");
  int count = 0;
  for (int j = 0; j < d.size(); ++j)
    if (d[j] == g[j]) ++count;
  return count;
}

int min_rho(const IntervalPartition& partition) {
  if (partition.intervals.empty()) throw std::invalid_argument("empty partition has no min rho");
  int best = std::numeric_limits<int>::max();
  for (const auto& ival : partition.intervals) best = std::min(best, rho(ival.d, partition.g));
  return best;
}

PartitionReport validate_partition(const CharacteristicPoset& poset,
                                   const IntervalPartition& partition) {
  int n = poset.var_count();
  if (partition.var_count() != n)
    throw std::invalid_argument("partition and poset have different variable counts");
  if (partition.g != poset.bound())
    throw std::invalid_argument("partition bounding vector differs from the poset's");

  PartitionReport report;
  for (std::size_t i = 0; i < partition.intervals.size(); ++i) {
    const Interval& ival = partition.intervals[i];
    if (ival.c.size() != n || ival.d.size() != n)
      throw std::invalid_argument("interval endpoint length differs from variable count");
    if (!ival.c.leq(ival.d)) {
      report.well_formed = false;
      if (!report.witness) {
        report.witness = ival.c;
        report.detail = "interval " + std::to_string(i + 1) + " has c > d";
      }
    } else if (!ival.d.leq(partition.g)) {
      report.well_formed = false;
      report.inside = false;
      if (!report.witness) {
        report.witness = ival.d;
        report.detail = "interval " + std::to_string(i + 1) + " leaves the box [0,g]";
      }
    }
  }

  ExponentVector cur = ExponentVector::zero(n);
  const ExponentVector lo = ExponentVector::zero(n);
  do {
    int covered = 0;
    for (const auto& ival : partition.intervals)
      if (ival.contains(cur)) ++covered;
    bool in_poset = poset.contains(cur);
    if (covered > 1 && report.disjoint) {
      report.disjoint = false;
      if (!report.witness) {
        report.witness = cur;
        report.detail = "point " + cur.to_string() + " lies in two intervals";
      }
    }
    if (covered > 0 && !in_poset && report.inside) {
      report.inside = false;
      if (!report.witness) {
        report.witness = cur;
        report.detail = "covered point " + cur.to_string() + " is outside the poset";
      }
    }
    if (covered == 0 && in_poset && report.covers) {
      report.covers = false;
      if (!report.witness) {
        report.witness = cur;
        report.detail = "poset point " + cur.to_string() + " is uncovered";
      }
    }
  } while (next_in_box(cur, lo, partition.g));

  if (report.valid() && !partition.intervals.empty()) report.min_rho = min_rho(partition);
  return report;
}

std::ostream& operator<<(std::ostream& os, const Interval& ival) {
  return os << '[' << ival.c << ',' << ival.d << ']';
}

}  // namespace stanley
