#include "stanley/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

namespace stanley {
namespace {

std::vector<int> int_array(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument("expected an array field \"" + key + "\"");
  std::vector<int> out;
  out.reserve(j[key].size());
  for (const auto& entry : j[key]) {
    if (!entry.is_number_integer())
      throw std::invalid_argument("field \"" + key + "\" must contain integers");
    out.push_back(entry.get<int>());
  }
  return out;
}

int int_field(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument("expected an integer field \"" + key + "\"");
  return j[key].get<int>();
}

}  // namespace

json partition_to_json(const IntervalPartition& partition) {
  json j;
  j["n"] = partition.var_count();
  j["g"] = partition.g.entries();
  j["intervals"] = json::array();
  for (const Interval& interval : partition.intervals) {
    json entry;
    entry["c"] = interval.c.entries();
    entry["d"] = interval.d.entries();
    j["intervals"].push_back(std::move(entry));
  }
  return j;
}

IntervalPartition partition_from_json(const json& j) {
  int n = int_field(j, "n");
  if (n < 1) throw std::invalid_argument("\"n\" must be at least 1");
  ExponentVector g(int_array(j, "g"));
  if (g.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("\"g\" must have exactly n entries");
  if (!j.contains("intervals") || !j["intervals"].is_array())
    throw std::invalid_argument("expected an array field \"intervals\"");
  IntervalPartition partition{std::move(g), {}};
  for (const auto& entry : j["intervals"]) {
    ExponentVector c(int_array(entry, "c"));
    ExponentVector d(int_array(entry, "d"));
    if (c.size() != static_cast<std::size_t>(n) || d.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("interval endpoints must have exactly n entries");
    partition.intervals.push_back(Interval{std::move(c), std::move(d)});
  }
  return partition;
}

json decomposition_to_json(const StanleyDecomposition& decomposition) {
  json j;
  j["n"] = decomposition.n;
  j["spaces"] = json::array();
  for (const StanleySpace& space : decomposition.spaces) {
    json entry;
    entry["u"] = space.u.entries();
    json z = json::array();
    for (int var : space.z) z.push_back(var + 1);
    entry["Z"] = std::move(z);
    j["spaces"].push_back(std::move(entry));
  }
  return j;
}

StanleyDecomposition decomposition_from_json(const json& j) {
  int n = int_field(j, "n");
  if (n < 1) throw std::invalid_argument("\"n\" must be at least 1");
  if (!j.contains("spaces") || !j["spaces"].is_array())
    throw std::invalid_argument("expected an array field \"spaces\"");
  StanleyDecomposition decomposition{n, {}};
  for (const auto& entry : j["spaces"]) {
    ExponentVector u(int_array(entry, "u"));
    if (u.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("space monomial must have exactly n entries");
    std::vector<int> z;
    for (int var : int_array(entry, "Z")) {
      if (var < 1 || var > n)
        throw std::invalid_argument("\"Z\" entries must be variable indices in 1..n");
      if (!z.empty() && z.back() >= var - 1)
        throw std::invalid_argument("\"Z\" entries must be strictly increasing");
      z.push_back(var - 1);
    }
    decomposition.spaces.push_back(StanleySpace{std::move(u), std::move(z)});
  }
  return decomposition;
}

DocumentKind detect_document_kind(const json& j) {
  if (j.contains("intervals")) return DocumentKind::partition;
  if (j.contains("spaces")) return DocumentKind::decomposition;
  throw std::invalid_argument(
      "document has neither an \"intervals\" nor a \"spaces\" field");
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("cannot parse " + path.string() + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace stanley
