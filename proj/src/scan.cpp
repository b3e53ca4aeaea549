#include "stanley/scan.hpp"

#include <chrono>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "stanley/solver.hpp"

namespace stanley {
namespace {

// Non-increasing tuples of the given length over [1, exp_max], at most
// lex_cap in lexicographic order (tuples of equal length must not increase
// across generators, or renaming variables would reproduce a shape).
void enumerate_tuples(int length, int exp_max, const std::vector<int>* lex_cap,
                      std::vector<int>& current,
                      const std::function<void(const std::vector<int>&)>& yield) {
  if (static_cast<int>(current.size()) == length) {
    yield(current);
    return;
  }
  int high = current.empty() ? exp_max : current.back();
  if (lex_cap) {
    const std::vector<int>& cap = *lex_cap;
    std::size_t i = current.size();
    bool tied = std::equal(current.begin(), current.end(), cap.begin());
    if (tied && cap[i] < high) high = cap[i];
  }
  for (int e = high; e >= 1; --e) {
    current.push_back(e);
    enumerate_tuples(length, exp_max, lex_cap, current, yield);
    current.pop_back();
  }
}

void enumerate_shapes(int n, int exp_max, int budget, int max_size,
                      std::vector<std::vector<int>>& shape,
                      const std::function<void(const std::vector<std::vector<int>>&)>& yield) {
  if (!shape.empty()) yield(shape);
  for (int size = std::min(budget, max_size); size >= 1; --size) {
    const std::vector<int>* lex_cap = nullptr;
    if (!shape.empty() && static_cast<int>(shape.back().size()) == size)
      lex_cap = &shape.back();
    std::vector<int> tuple;
    enumerate_tuples(size, exp_max, lex_cap, tuple, [&](const std::vector<int>& t) {
      shape.push_back(t);
      enumerate_shapes(n, exp_max, budget - size, size, shape, yield);
      shape.pop_back();
    });
  }
}

}  // namespace

std::vector<std::vector<int>> ScanTask::support_pattern() const {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (const std::vector<int>& tuple : exponents) {
    std::vector<int> block;
    for (std::size_t i = 0; i < tuple.size(); ++i) block.push_back(next++);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

MonomialIdeal ScanTask::ideal() const {
  std::vector<ExponentVector> generators;
  int offset = 0;
  for (const std::vector<int>& tuple : exponents) {
    std::vector<int> entries(n, 0);
    for (std::size_t i = 0; i < tuple.size(); ++i) entries[offset + i] = tuple[i];
    offset += static_cast<int>(tuple.size());
    generators.emplace_back(std::move(entries));
  }
  return MonomialIdeal(n, std::move(generators));
}

std::vector<ScanTask> enumerate_ci_scan(int n_max, int exp_max) {
  if (n_max < 1) throw std::invalid_argument("the variable limit must be at least 1");
  if (exp_max < 1) throw std::invalid_argument("the exponent limit must be at least 1");
  std::vector<ScanTask> tasks;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::vector<int>> shape;
    enumerate_shapes(n, exp_max, n, n, shape, [&](const std::vector<std::vector<int>>& s) {
      ScanTask task;
      task.index = static_cast<int>(tasks.size());
      task.n = n;
      task.exponents = s;
      tasks.push_back(std::move(task));
    });
  }
  return tasks;
}

json scan_record_to_json(const ScanRecord& record) {
  json j;
  j["index"] = record.index;
  j["n"] = record.n;
  j["m"] = record.m;
  j["support_pattern"] = record.support_pattern;
  j["exponents"] = record.exponents;
  j["sdepth"] = record.sdepth ? json(*record.sdepth) : json(nullptr);
  j["conjecture_value"] = record.conjecture_value;
  j["bounds"] = {{"lower", record.lower}, {"upper", record.upper}};
  j["match"] = record.match ? json(*record.match) : json(nullptr);
  j["nodes"] = record.nodes;
  j["elapsed_ms"] = record.elapsed_ms;
  return j;
}

ScanRecord scan_record_from_json(const json& j) {
  ScanRecord record;
  record.index = j.at("index").get<int>();
  record.n = j.at("n").get<int>();
  record.m = j.at("m").get<int>();
  record.support_pattern = j.at("support_pattern").get<std::vector<std::vector<int>>>();
  record.exponents = j.at("exponents").get<std::vector<std::vector<int>>>();
  if (!j.at("sdepth").is_null()) record.sdepth = j.at("sdepth").get<int>();
  record.conjecture_value = j.at("conjecture_value").get<int>();
  record.lower = j.at("bounds").at("lower").get<int>();
  record.upper = j.at("bounds").at("upper").get<int>();
  if (!j.at("match").is_null()) record.match = j.at("match").get<bool>();
  record.nodes = j.at("nodes").get<std::uint64_t>();
  record.elapsed_ms = j.at("elapsed_ms").get<double>();
  return record;
}

void ScanSummary::accumulate(const ScanRecord& record) {
  ++total;
  if (!record.match)
    ++unknowns;
  else if (*record.match)
    ++matches;
  else
    ++mismatches;
}

ScanRecord run_scan_task(const ScanTask& task, std::uint64_t node_budget) {
  ScanRecord record;
  record.index = task.index;
  record.n = task.n;
  record.m = task.generator_count();
  record.support_pattern = task.support_pattern();
  record.exponents = task.exponents;
  record.conjecture_value = (record.m + 1) / 2 + record.n - record.m;

  MonomialIdeal ideal = task.ideal();
  SolveOptions options;
  options.node_budget = node_budget;
  // The proven complete-intersection upper bound stands in for the search
  // one level above the value; the conjecture itself is never assumed.
  options.verify_refutation = false;

  auto start = std::chrono::steady_clock::now();
  SdepthOutcome outcome = sdepth_exact(ideal, options);
  auto stop = std::chrono::steady_clock::now();
  record.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  record.nodes = outcome.nodes;
  record.lower = outcome.lower;
  record.upper = outcome.upper;
  if (outcome.is_exact()) {
    record.sdepth = outcome.exact->value;
    record.match = (outcome.exact->value == record.conjecture_value);
  }
  return record;
}

ScanSummary run_scan(const std::vector<ScanTask>& tasks, const ScanOptions& options,
                     const std::function<void(const ScanRecord&)>& emit) {
  std::vector<const ScanTask*> pending;
  for (const ScanTask& task : tasks)
    if (!options.skip.count(task.index)) pending.push_back(&task);

  ScanSummary summary;
  if (options.threads <= 1) {
    for (const ScanTask* task : pending) {
      ScanRecord record = run_scan_task(*task, options.node_budget);
      summary.accumulate(record);
      emit(record);
    }
    return summary;
  }

  std::mutex mutex;
  std::condition_variable done;
  std::map<std::size_t, ScanRecord> finished;  // keyed by position in `pending`
  std::size_t cursor = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      std::size_t position;
      {
        std::lock_guard<std::mutex> lock(mutex);
        if (failure || cursor >= pending.size()) return;
        position = cursor++;
      }
      try {
        ScanRecord record = run_scan_task(*pending[position], options.node_budget);
        std::lock_guard<std::mutex> lock(mutex);
        finished.emplace(position, std::move(record));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!failure) failure = std::current_exception();
      }
      done.notify_all();
    }
  };

  std::vector<std::thread> workers;
  int thread_count = std::min<int>(options.threads, static_cast<int>(pending.size()));
  for (int i = 0; i < thread_count; ++i) workers.emplace_back(worker);

  // Emit strictly in task order regardless of which worker finishes first.
  for (std::size_t next = 0; next < pending.size(); ++next) {
    ScanRecord record;
    {
      std::unique_lock<std::mutex> lock(mutex);
      done.wait(lock, [&] { return failure || finished.count(next); });
      if (failure) break;
      record = std::move(finished.at(next));
      finished.erase(next);
    }
    try {
      summary.accumulate(record);
      emit(record);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex);
      if (!failure) failure = std::current_exception();
      break;
    }
  }

  for (std::thread& thread : workers) thread.join();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace stanley
