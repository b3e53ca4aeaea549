#include "stanley/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace stanley {
namespace {

struct StateKey {
  std::vector<std::uint64_t> words;
  bool operator==(const StateKey&) const = default;
};

struct StateHash {
  std::size_t operator()(const StateKey& key) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : key.words) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

class PartitionSearcher {
 public:
  PartitionSearcher(const CharacteristicPoset& poset, int target, std::uint64_t budget)
      : poset_(poset),
        g_(poset.bound()),
        n_(poset.var_count()),
        target_(target),
        budget_(budget) {
    int count = poset_.point_count();
    uncovered_.assign(static_cast<std::size_t>((count + 63) / 64), 0);
    for (int i = 0; i < count; ++i)
      uncovered_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
    uncovered_count_ = count;
  }

  PartitionSearch run() {
    PartitionSearch result;
    Step step = dfs();
    result.nodes = nodes_;
    switch (step) {
      case Step::success:
        result.status = SearchStatus::found;
        result.partition = IntervalPartition{g_, chosen_};
        break;
      case Step::dead_end:
        result.status = SearchStatus::exhausted;
        break;
      case Step::out_of_budget:
        result.status = SearchStatus::budget_exceeded;
        break;
    }
    return result;
  }

 private:
  enum class Step { success, dead_end, out_of_budget };

  Step dfs() {
    if (uncovered_count_ == 0) return Step::success;
    if (failed_.count(StateKey{uncovered_}) > 0) return Step::dead_end;

    const ExponentVector sigma = poset_.points()[static_cast<std::size_t>(first_uncovered())];
    std::vector<std::pair<int, ExponentVector>> candidates = collect_candidates(sigma);

    for (auto& [r, d] : candidates) {
      if (++nodes_ > budget_) return Step::out_of_budget;
      cover(sigma, d, true);
      chosen_.push_back(Interval{sigma, d});
      Step step = dfs();
      if (step == Step::success) return step;
      chosen_.pop_back();
      cover(sigma, d, false);
      if (step == Step::out_of_budget) return step;
    }

    if (failed_.size() < kMaxMemo) failed_.insert(StateKey{uncovered_});
    return Step::dead_end;
  }

  // All tops d in [sigma, g] with rho(d) >= target whose interval is still
  // fully uncovered, ordered by decreasing rho, ties lex-descending.
  std::vector<std::pair<int, ExponentVector>> collect_candidates(const ExponentVector& sigma) {
    std::vector<std::pair<int, ExponentVector>> candidates;
    ExponentVector d = sigma;
    do {
      int r = 0;
      for (int j = 0; j < n_; ++j)
        if (d[j] == g_[j]) ++r;
      if (r < target_) continue;
      if (!interval_uncovered(sigma, d)) continue;
      candidates.emplace_back(r, d);
    } while (next_in_box(d, sigma, g_));
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second > b.second;
    });
    return candidates;
  }

  bool interval_uncovered(const ExponentVector& lo, const ExponentVector& hi) const {
    ExponentVector cur = lo;
    do {
      int idx = poset_.index_of(cur);
      // The poset is an up-set of the box, so every point of [lo, hi] with
      // lo in the poset is a point; idx >= 0 always holds here.
      if (!(uncovered_[static_cast<std::size_t>(idx) / 64] >> (idx % 64) & 1)) return false;
    } while (next_in_box(cur, lo, hi));
    return true;
  }

  void cover(const ExponentVector& lo, const ExponentVector& hi, bool covering) {
    ExponentVector cur = lo;
    do {
      int idx = poset_.index_of(cur);
      uncovered_[static_cast<std::size_t>(idx) / 64] ^= std::uint64_t{1} << (idx % 64);
      uncovered_count_ += covering ? -1 : 1;
    } while (next_in_box(cur, lo, hi));
  }

  int first_uncovered() const {
    for (std::size_t w = 0; w < uncovered_.size(); ++w)
      if (uncovered_[w] != 0)
        return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(uncovered_[w])));
    return -1;
  }

  static constexpr std::size_t kMaxMemo = std::size_t{1} << 22;

  const CharacteristicPoset& poset_;
  const ExponentVector& g_;
  int n_;
  int target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> uncovered_;
  int uncovered_count_ = 0;
  std::vector<Interval> chosen_;
  // Uncovered regions already proven unpartitionable at this target; sound
  // to skip because the subtree outcome depends only on that region.
  std::unordered_set<StateKey, StateHash> failed_;
};

IntervalPartition singleton_partition(const CharacteristicPoset& poset) {
  IntervalPartition part{poset.bound(), {}};
  part.intervals.reserve(poset.points().size());
  for (const auto& p : poset.points()) part.intervals.push_back(Interval{p, p});
  return part;
}

std::uint64_t spend(std::uint64_t& remaining, std::uint64_t used) {
  remaining -= std::min(remaining, used);
  return used;
}

}  // namespace

PartitionSearch exists_partition_at(const CharacteristicPoset& poset, int min_rho_target,
                                    const SearchLimits& limits) {
  if (min_rho_target < 0 || min_rho_target > poset.var_count())
    throw std::invalid_argument("target min rho must lie between 0 and the variable count");
  return PartitionSearcher(poset, min_rho_target, limits.node_budget).run();
}

SdepthOutcome sdepth_exact(const MonomialIdeal& ideal, const SolveOptions& options) {
  const CharacteristicPoset poset = build_poset(ideal);
  const int n = ideal.var_count();
  const bool ci = is_complete_intersection(ideal);
  const int math_upper = ci ? ci_bounds(ideal).second : n;

  // The all-singletons partition is always valid, so its min rho is a free
  // certified lower bound; no search below it is ever needed.
  int base = std::numeric_limits<int>::max();
  for (const auto& p : poset.points()) base = std::min(base, rho(p, poset.bound()));
  IntervalPartition base_certificate = singleton_partition(poset);

  SdepthOutcome outcome;
  std::uint64_t remaining = options.node_budget;
  const int start = std::max(options.prime_with_ci_bound && ci ? math_upper : n, base);

  int refuted = -1;  // smallest level shown empty by search
  int value = -1;
  IntervalPartition certificate;
  for (int k = start; k > base; --k) {
    PartitionSearch search = exists_partition_at(poset, k, {remaining});
    outcome.nodes += spend(remaining, search.nodes);
    if (search.status == SearchStatus::found) {
      value = k;
      certificate = std::move(*search.partition);
      break;
    }
    if (search.status == SearchStatus::budget_exceeded) {
      outcome.lower = base;
      outcome.upper = std::min(refuted > 0 ? refuted - 1 : n, math_upper);
      outcome.lower_certificate = std::move(base_certificate);
      return outcome;
    }
    refuted = k;
  }
  if (value < 0) {
    value = base;
    certificate = std::move(base_certificate);
  }

  SdepthResult result;
  result.refutation_level = value + 1;
  if (result.refutation_level > n) {
    result.refutation = RefutationKind::vacuous;
  } else if (refuted == result.refutation_level) {
    result.refutation = RefutationKind::searched;
  } else {
    // The first search already succeeded, so nothing above the value has
    // been refuted yet. Search upward until a level comes back empty.
    while (true) {
      if (!options.verify_refutation && ci && value >= math_upper) {
        result.refutation = RefutationKind::ci_bound;
        break;
      }
      PartitionSearch search = exists_partition_at(poset, result.refutation_level, {remaining});
      outcome.nodes += spend(remaining, search.nodes);
      if (search.status == SearchStatus::exhausted) {
        result.refutation = RefutationKind::searched;
        break;
      }
      if (search.status == SearchStatus::found) {
        value = result.refutation_level;
        certificate = std::move(*search.partition);
        if (++result.refutation_level > n) {
          result.refutation = RefutationKind::vacuous;
          break;
        }
        continue;
      }
      // Budget exhausted mid-refutation. The value itself is still exact
      // when the complete-intersection bound pins it from above.
      if (ci && value >= math_upper) {
        result.refutation = RefutationKind::ci_bound;
        break;
      }
      outcome.lower = value;
      outcome.upper = math_upper;
      outcome.lower_certificate = std::move(certificate);
      return outcome;
    }
  }

  result.value = value;
  result.certificate = std::move(certificate);
  result.nodes = outcome.nodes;
  outcome.lower = value;
  outcome.upper = value;
  outcome.exact = std::move(result);
  return outcome;
}

std::pair<int, int> ci_bounds(const MonomialIdeal& ideal) {
  if (!is_complete_intersection(ideal))
    throw std::invalid_argument("ci_bounds requires a complete intersection");
  int n = ideal.var_count();
  int m = ideal.generator_count();
  return {1 + n - m, (m + 1) / 2 + n - m};
}

int depth_ci(const MonomialIdeal& ideal) {
  if (!is_complete_intersection(ideal))
    throw std::invalid_argument("depth_ci requires a complete intersection");
  return ideal.var_count() - ideal.generator_count() + 1;
}

int irreducible_sdepth_formula(int m, int n) {
  if (m < 1 || m > n)
    throw std::invalid_argument("irreducible_sdepth_formula requires 1 <= m <= n");
  return n - m + (m + 1) / 2;
}

}  // namespace stanley
