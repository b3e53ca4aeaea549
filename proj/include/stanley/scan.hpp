#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "stanley/json_io.hpp"
#include "stanley/monomial_ideal.hpp"

namespace stanley {

// One complete-intersection shape, canonical up to renaming variables:
// generator i occupies a block of consecutive variables and carries the
// exponents listed for it, so only the multiset of exponent tuples and the
// total variable count matter. Tuples are non-increasing, and tuples of
// equal length appear in non-increasing lexicographic order.
struct ScanTask {
  int index = 0;
  int n = 0;
  std::vector<std::vector<int>> exponents;  // one non-increasing tuple per generator

  int generator_count() const { return static_cast<int>(exponents.size()); }
  std::vector<std::vector<int>> support_pattern() const;  // 1-based variable blocks
  MonomialIdeal ideal() const;
};

// Every canonical shape with up to n_max variables and exponents in
// [1, exp_max]. exp_max = 1 restricts to squarefree ideals.
std::vector<ScanTask> enumerate_ci_scan(int n_max, int exp_max = 1);

struct ScanRecord {
  int index = 0;
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> support_pattern;
  std::vector<std::vector<int>> exponents;
  std::optional<int> sdepth;  // empty when the node budget ran out
  int conjecture_value = 0;
  int lower = 0;
  int upper = 0;
  std::optional<bool> match;  // sdepth == conjecture_value; empty when unknown
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

json scan_record_to_json(const ScanRecord& record);
ScanRecord scan_record_from_json(const json& j);

struct ScanSummary {
  int total = 0;
  int matches = 0;
  int mismatches = 0;
  int unknowns = 0;

  void accumulate(const ScanRecord& record);
};

struct ScanOptions {
  std::uint64_t node_budget = 100'000'000;
  int threads = 1;
  std::set<int> skip;  // task indices already on file (resume)
};

ScanRecord run_scan_task(const ScanTask& task, std::uint64_t node_budget);

// Runs every task not in options.skip and hands each finished record to
// emit, strictly in task-index order even when worker threads finish out
// of order. Returns the summary of the emitted records.
ScanSummary run_scan(const std::vector<ScanTask>& tasks, const ScanOptions& options,
                     const std::function<void(const ScanRecord&)>& emit);

}  // namespace stanley
