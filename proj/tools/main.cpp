#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stanley/json_io.hpp"
#include "stanley/parse.hpp"
#include "stanley/poset.hpp"
#include "stanley/scan.hpp"
#include "stanley/solver.hpp"
#include "stanley/transforms.hpp"

namespace {

using namespace stanley;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnknown = 3;

struct GlobalFlags {
  int vars = 0;  // 0 = infer from the highest index used
  std::uint64_t budget = SearchLimits{}.node_budget;
  int threads = 1;
  std::uint64_t seed = 0;
  bool as_json = false;
};

MonomialIdeal parse_with_vars(const std::string& text, const GlobalFlags& flags) {
  std::optional<int> vars;
  if (flags.vars > 0) vars = flags.vars;
  return parse_ideal(text, vars);
}

const char* refutation_name(RefutationKind kind) {
  switch (kind) {
    case RefutationKind::searched: return "searched";
    case RefutationKind::vacuous: return "vacuous";
    case RefutationKind::ci_bound: return "ci_bound";
  }
  return "unknown";
}

void write_partition_file(const std::string& path, const IntervalPartition& partition) {
  save_json_file(path, partition_to_json(partition));
  std::cerr << "wrote " << path << "\n";
}

int cmd_sdepth(const std::string& ideal_text, const GlobalFlags& flags,
               const std::string& certificate_path, const std::string& decomposition_path) {
  MonomialIdeal ideal = parse_with_vars(ideal_text, flags);
  SolveOptions options;
  options.node_budget = flags.budget;
  SdepthOutcome outcome = sdepth_exact(ideal, options);

  const IntervalPartition* certificate = nullptr;
  if (outcome.is_exact())
    certificate = &outcome.exact->certificate;
  else if (outcome.lower_certificate)
    certificate = &*outcome.lower_certificate;

  if (certificate) {
    CharacteristicPoset poset = build_poset(ideal);
    PartitionReport report = validate_partition(poset, *certificate);
    if (!report.valid())
      throw std::logic_error("solver produced an invalid certificate: " + report.detail);
    if (!certificate_path.empty()) write_partition_file(certificate_path, *certificate);
    if (!decomposition_path.empty()) {
      StanleyDecomposition decomposition = partition_to_decomposition(*certificate);
      DecompositionReport dreport = verify_decomposition(ideal, decomposition);
      if (!dreport.valid())
        throw std::logic_error("certificate does not convert to a valid decomposition: " +
                               dreport.detail);
      save_json_file(decomposition_path, decomposition_to_json(decomposition));
      std::cerr << "wrote " << decomposition_path << "\n";
    }
  }

  if (flags.as_json) {
    json j;
    j["ideal"] = render(ideal);
    j["n"] = ideal.var_count();
    j["status"] = outcome.is_exact() ? "exact" : "unknown";
    j["sdepth"] = outcome.is_exact() ? json(outcome.exact->value) : json(nullptr);
    j["lower"] = outcome.lower;
    j["upper"] = outcome.upper;
    j["refutation_level"] =
        outcome.is_exact() ? json(outcome.exact->refutation_level) : json(nullptr);
    j["refutation"] =
        outcome.is_exact() ? json(refutation_name(outcome.exact->refutation)) : json(nullptr);
    j["intervals"] = certificate ? json(certificate->intervals.size()) : json(nullptr);
    j["nodes"] = outcome.nodes;
    std::cout << j.dump(2) << "\n";
  } else if (outcome.is_exact()) {
    std::cout << "sdepth = " << outcome.exact->value << "\n";
    std::cout << "refutation at " << outcome.exact->refutation_level << ": "
              << refutation_name(outcome.exact->refutation) << " (" << outcome.nodes
              << " nodes total)\n";
  } else {
    std::cout << "sdepth unknown: certified bounds [" << outcome.lower << ", " << outcome.upper
              << "], node budget exhausted after " << outcome.nodes << " nodes\n";
  }
  return outcome.is_exact() ? kExitOk : kExitUnknown;
}

int cmd_verify(const std::string& ideal_text, const std::string& file,
               const GlobalFlags& flags) {
  MonomialIdeal ideal = parse_with_vars(ideal_text, flags);
  json document = load_json_file(file);
  DocumentKind kind = detect_document_kind(document);

  bool valid = false;
  std::string detail;
  json j;
  if (kind == DocumentKind::partition) {
    IntervalPartition partition = partition_from_json(document);
    CharacteristicPoset poset = build_poset(ideal, partition.g);
    PartitionReport report = validate_partition(poset, partition);
    valid = report.valid();
    detail = report.detail;
    j["kind"] = "partition";
    j["valid"] = valid;
    j["detail"] = detail;
    j["min_rho"] = report.min_rho ? json(*report.min_rho) : json(nullptr);
    if (!flags.as_json) {
      if (valid)
        std::cout << "valid: interval partition of the characteristic poset, min rho = "
                  << *report.min_rho << "\n";
      else
        std::cout << "invalid: " << detail << "\n";
    }
  } else {
    StanleyDecomposition decomposition = decomposition_from_json(document);
    DecompositionReport report = verify_decomposition(ideal, decomposition);
    valid = report.valid();
    detail = report.detail;
    j["kind"] = "decomposition";
    j["valid"] = valid;
    j["detail"] = detail;
    j["sdepth"] = valid ? json(report.sdepth) : json(nullptr);
    if (!flags.as_json) {
      if (valid)
        std::cout << "valid: Stanley decomposition, sdepth = " << report.sdepth << "\n";
      else
        std::cout << "invalid: " << detail << "\n";
    }
  }
  if (flags.as_json) std::cout << j.dump(2) << "\n";
  return valid ? kExitOk : kExitInvalid;
}

int cmd_transform_lift(const std::string& ideal_text, const std::string& in_path, int var,
                       bool lower, const std::string& out_path, const GlobalFlags& flags) {
  MonomialIdeal ideal = parse_with_vars(ideal_text, flags);
  if (var < 1 || var > ideal.var_count())
    throw std::invalid_argument("--var must name one of the variables x1..x" +
                                std::to_string(ideal.var_count()));
  IntervalPartition partition = partition_from_json(load_json_file(in_path));
  int before = min_rho(partition);
  TransformedPartition result = lower ? lower_partition(ideal, partition, var - 1)
                                      : lift_partition(ideal, partition, var - 1);
  int after = min_rho(result.partition);

  if (flags.as_json) {
    json j;
    j["kind"] = lower ? "lower" : "lift";
    j["ideal"] = render(result.ideal);
    j["min_rho_before"] = before;
    j["min_rho_after"] = after;
    j["intervals"] = result.partition.intervals.size();
    j["dropped_empty"] = result.dropped_empty;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (lower ? "lowered" : "lifted") << " ideal: " << render(result.ideal) << "\n";
    std::cout << "min rho: " << before << " -> " << after << "\n";
    std::cout << "intervals: " << result.partition.intervals.size() << "\n";
    if (result.dropped_empty > 0)
      std::cout << "dropped empty intervals: " << result.dropped_empty << "\n";
  }
  if (!out_path.empty()) write_partition_file(out_path, result.partition);
  return kExitOk;
}

int cmd_transform_project(const std::string& ideal_text, const std::string& in_path, int drop,
                          const std::string& out_path, const GlobalFlags& flags) {
  MonomialIdeal ideal = parse_with_vars(ideal_text, flags);
  if (drop != ideal.var_count())
    throw std::invalid_argument(
        "only the last variable can be projected away; got --drop " + std::to_string(drop) +
        " with " + std::to_string(ideal.var_count()) + " variables");
  StanleyDecomposition decomposition = decomposition_from_json(load_json_file(in_path));
  int before = decomposition.sdepth();
  TransformedDecomposition result = project_decomposition(ideal, decomposition);
  int after = result.decomposition.sdepth();

  if (flags.as_json) {
    json j;
    j["kind"] = "project";
    j["ideal"] = render(result.ideal);
    j["sdepth_before"] = before;
    j["sdepth_after"] = after;
    j["spaces"] = result.decomposition.spaces.size();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "image ideal: " << render(result.ideal) << "\n";
    std::cout << "sdepth: " << before << " -> " << after << "\n";
    std::cout << "spaces: " << result.decomposition.spaces.size() << "\n";
  }
  if (!out_path.empty()) {
    save_json_file(out_path, decomposition_to_json(result.decomposition));
    std::cerr << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_transform_extend(const std::string& ideal_text, const std::string& in_path,
                         const std::string& out_path, const GlobalFlags& flags) {
  MonomialIdeal ideal = parse_with_vars(ideal_text, flags);
  StanleyDecomposition decomposition = decomposition_from_json(load_json_file(in_path));
  int before = decomposition.sdepth();
  TransformedDecomposition result = extend_decomposition(ideal, decomposition);
  int after = result.decomposition.sdepth();

  if (flags.as_json) {
    json j;
    j["kind"] = "extend";
    j["ideal"] = render(result.ideal);
    j["sdepth_before"] = before;
    j["sdepth_after"] = after;
    j["spaces"] = result.decomposition.spaces.size();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "extended ideal: " << render(result.ideal) << "\n";
    std::cout << "sdepth: " << before << " -> " << after << "\n";
    std::cout << "spaces: " << result.decomposition.spaces.size() << "\n";
  }
  if (!out_path.empty()) {
    save_json_file(out_path, decomposition_to_json(result.decomposition));
    std::cerr << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_transform_radical_chain(const std::string& ideal_text, const std::string& out_path,
                                const GlobalFlags& flags) {
  MonomialIdeal ideal = parse_with_vars(ideal_text, flags);
  std::vector<ReductionStep> chain = radical_reduction_chain(ideal);

  json steps = json::array();
  for (const ReductionStep& step : chain) {
    json j;
    j["variable"] = step.variable + 1;
    j["generator"] = step.generator;
    j["before"] = render(step.before);
    j["after"] = render(step.after);
    steps.push_back(std::move(j));
    if (!flags.as_json)
      std::cout << "x" << step.variable + 1 << ": " << render(step.before) << " -> "
                << render(step.after) << "\n";
  }
  const MonomialIdeal& final_ideal = chain.empty() ? ideal : chain.back().after;
  if (flags.as_json) {
    json j;
    j["kind"] = "radical-chain";
    j["steps"] = std::move(steps);
    j["radical"] = render(final_ideal);
    std::cout << j.dump(2) << "\n";
  } else if (chain.empty()) {
    std::cout << "already radical: " << render(final_ideal) << "\n";
  } else {
    std::cout << "radical reached in " << chain.size() << " steps: " << render(final_ideal)
              << "\n";
  }
  if (!out_path.empty()) {
    json j;
    j["steps"] = json::array();
    for (const ReductionStep& step : chain) {
      json s;
      s["variable"] = step.variable + 1;
      s["generator"] = step.generator;
      s["before"] = render(step.before);
      s["after"] = render(step.after);
      j["steps"].push_back(std::move(s));
    }
    j["radical"] = render(final_ideal);
    save_json_file(out_path, j);
    std::cerr << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_scan_ci(int n_max, bool exponents, int exp_max, const std::string& out_path,
                const std::string& resume_path, const GlobalFlags& flags) {
  if (!exponents) exp_max = 1;
  std::vector<ScanTask> tasks = enumerate_ci_scan(n_max, exp_max);

  ScanOptions options;
  options.node_budget = flags.budget;
  options.threads = flags.threads;
  ScanSummary resumed;
  if (!resume_path.empty()) {
    std::ifstream in(resume_path);
    if (!in) throw std::invalid_argument("cannot open resume file " + resume_path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        ScanRecord record = scan_record_from_json(json::parse(line));
        options.skip.insert(record.index);
        resumed.accumulate(record);
      } catch (const std::exception& e) {
        throw std::invalid_argument("cannot parse resume file " + resume_path + " at line " +
                                    std::to_string(line_no) + ": " + e.what());
      }
    }
  }

  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    bool append = (out_path == resume_path);
    out_file.open(out_path, append ? std::ios::app : std::ios::trunc);
    if (!out_file) throw std::invalid_argument("cannot write " + out_path);
    out = &out_file;
  }

  ScanSummary fresh = run_scan(tasks, options, [&](const ScanRecord& record) {
    (*out) << scan_record_to_json(record).dump() << "\n";
    out->flush();
  });

  ScanSummary total = resumed;
  total.total += fresh.total;
  total.matches += fresh.matches;
  total.mismatches += fresh.mismatches;
  total.unknowns += fresh.unknowns;
  std::cerr << "scan-ci n<=" << n_max << (exp_max > 1 ? ", exponents<=" + std::to_string(exp_max)
                                                      : std::string(", squarefree"))
            << ": " << total.total << " records, " << total.matches << " match, "
            << total.mismatches << " mismatch, " << total.unknowns << " unknown";
  if (resumed.total > 0) std::cerr << " (" << resumed.total << " resumed)";
  std::cerr << "\n";
  return kExitOk;
}

int cmd_poset_show(const std::string& ideal_text, const GlobalFlags& flags) {
  MonomialIdeal ideal = parse_with_vars(ideal_text, flags);
  CharacteristicPoset poset = build_poset(ideal);
  if (flags.as_json) {
    json j;
    j["ideal"] = render(ideal);
    j["n"] = poset.var_count();
    j["g"] = poset.bound().entries();
    j["points"] = json::array();
    for (const ExponentVector& point : poset.points()) {
      json entry;
      entry["point"] = point.entries();
      entry["rho"] = rho(point, poset.bound());
      j["points"].push_back(std::move(entry));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n = " << poset.var_count() << ", g = " << poset.bound() << ", "
              << poset.point_count() << " points\n";
    for (const ExponentVector& point : poset.points())
      std::cout << point << "  rho = " << rho(point, poset.bound()) << "\n";
  }
  return kExitOk;
}

std::uint64_t budget_from_env() {
  const char* env = std::getenv("STANLEY_BUDGET");
  if (!env || !*env) return SearchLimits{}.node_budget;
  std::uint64_t value = 0;
  const char* end = env + std::string_view(env).size();
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0)
    throw std::invalid_argument("STANLEY_BUDGET must be a positive integer, got \"" +
                                std::string(env) + "\"");
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley depth toolkit: compute, certify, transform, and scan"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  int exit_code = kExitOk;

  app.add_option("--vars", flags.vars,
                 "number of ring variables (default: highest index that appears)");
  app.add_option("--budget", flags.budget,
                 "search node budget (env STANLEY_BUDGET overrides the default)");
  app.add_option("--threads", flags.threads, "worker threads for scan-ci");
  app.add_option("--seed", flags.seed,
                 "seed for randomized operations; current subcommands are deterministic");
  app.add_flag("--json", flags.as_json, "machine-readable output");

  std::string sdepth_ideal, sdepth_certificate, sdepth_decomposition;
  auto* sdepth = app.add_subcommand("sdepth", "compute the Stanley depth of a monomial ideal");
  sdepth->add_option("ideal", sdepth_ideal, "ideal, e.g. \"(x1^2, x2*x3)\"")->required();
  sdepth->add_option("--certificate", sdepth_certificate,
                     "write the witnessing interval partition to this file");
  sdepth->add_option("--decomposition", sdepth_decomposition,
                     "write the witnessing Stanley decomposition to this file");
  sdepth->callback([&] {
    exit_code = cmd_sdepth(sdepth_ideal, flags, sdepth_certificate, sdepth_decomposition);
  });

  std::string verify_ideal, verify_file;
  auto* verify = app.add_subcommand(
      "verify", "check a partition or decomposition file against an ideal");
  verify->add_option("ideal", verify_ideal, "ideal the file claims to decompose")->required();
  verify->add_option("file", verify_file, "partition or decomposition JSON file")->required();
  verify->callback([&] { exit_code = cmd_verify(verify_ideal, verify_file, flags); });

  auto* transform = app.add_subcommand("transform", "rewrite partitions and decompositions");
  transform->require_subcommand(1);
  std::string tr_ideal, tr_in, tr_out;
  int tr_var = 0, tr_drop = 0;

  auto* lift = transform->add_subcommand(
      "lift", "raise one variable's exponent in an ideal and its partition");
  lift->add_option("ideal", tr_ideal, "ideal the partition certifies")->required();
  lift->add_option("--in", tr_in, "partition JSON file")->required();
  lift->add_option("--var", tr_var, "variable to lift (1-based)")->required();
  lift->add_option("--out", tr_out, "where to write the lifted partition");
  lift->callback(
      [&] { exit_code = cmd_transform_lift(tr_ideal, tr_in, tr_var, false, tr_out, flags); });

  auto* lower = transform->add_subcommand(
      "lower", "decrease one variable's exponent in an ideal and its partition");
  lower->add_option("ideal", tr_ideal, "ideal the partition certifies")->required();
  lower->add_option("--in", tr_in, "partition JSON file")->required();
  lower->add_option("--var", tr_var, "variable to lower (1-based)")->required();
  lower->add_option("--out", tr_out, "where to write the lowered partition");
  lower->callback(
      [&] { exit_code = cmd_transform_lift(tr_ideal, tr_in, tr_var, true, tr_out, flags); });

  auto* project = transform->add_subcommand(
      "project", "set the last variable to 1 across a decomposition");
  project->add_option("ideal", tr_ideal, "ideal the decomposition certifies")->required();
  project->add_option("--in", tr_in, "decomposition JSON file")->required();
  project->add_option("--drop", tr_drop, "variable to eliminate; must be the last one")
      ->required();
  project->add_option("--out", tr_out, "where to write the projected decomposition");
  project->callback(
      [&] { exit_code = cmd_transform_project(tr_ideal, tr_in, tr_drop, tr_out, flags); });

  auto* extend = transform->add_subcommand(
      "extend", "adjoin a fresh variable to an ideal and its decomposition");
  extend->add_option("ideal", tr_ideal, "ideal the decomposition certifies")->required();
  extend->add_option("--in", tr_in, "decomposition JSON file")->required();
  extend->add_option("--out", tr_out, "where to write the extended decomposition");
  extend->callback(
      [&] { exit_code = cmd_transform_extend(tr_ideal, tr_in, tr_out, flags); });

  auto* radical = transform->add_subcommand(
      "radical-chain", "reduce a complete intersection to its radical one exponent at a time");
  radical->add_option("ideal", tr_ideal, "complete-intersection ideal")->required();
  radical->add_option("--out", tr_out, "where to write the reduction steps");
  radical->callback(
      [&] { exit_code = cmd_transform_radical_chain(tr_ideal, tr_out, flags); });

  int scan_nmax = 0, scan_exp_max = 3;
  bool scan_exponents = false;
  std::string scan_out, scan_resume;
  auto* scan = app.add_subcommand(
      "scan-ci", "test the complete-intersection conjecture over all shapes up to a size");
  scan->add_option("--nmax", scan_nmax, "largest number of variables to scan")->required();
  scan->add_flag("--exponents", scan_exponents,
                 "scan exponent assignments too, not just squarefree shapes");
  scan->add_option("--exp-max", scan_exp_max, "largest exponent when --exponents is set");
  scan->add_option("--out", scan_out, "write JSON-lines records here instead of stdout");
  scan->add_option("--resume", scan_resume,
                   "JSON-lines file whose records are already done; appends when it is --out");
  scan->callback([&] {
    if (scan->count("--exp-max") > 0) scan_exponents = true;
    exit_code = cmd_scan_ci(scan_nmax, scan_exponents, scan_exp_max, scan_out, scan_resume,
                            flags);
  });

  auto* poset = app.add_subcommand("poset", "inspect the characteristic poset");
  poset->require_subcommand(1);
  std::string poset_ideal;
  auto* show = poset->add_subcommand("show", "list the poset's points and their rho values");
  show->add_option("ideal", poset_ideal, "ideal whose poset to print")->required();
  show->callback([&] { exit_code = cmd_poset_show(poset_ideal, flags); });

  try {
    flags.budget = budget_from_env();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
  return exit_code;
}
