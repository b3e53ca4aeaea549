#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "stanley/decomposition.hpp"
#include "stanley/poset.hpp"

namespace stanley {

using json = nlohmann::ordered_json;

// Interval partition file format:
//   {"n": 3, "g": [2, 1, 1], "intervals": [{"c": [...], "d": [...]}, ...]}
json partition_to_json(const IntervalPartition& partition);
IntervalPartition partition_from_json(const json& j);

// Stanley decomposition file format ("Z" lists 1-based variable indices):
//   {"n": 3, "spaces": [{"u": [1, 0, 0], "Z": [1, 3]}, ...]}
json decomposition_to_json(const StanleyDecomposition& decomposition);
StanleyDecomposition decomposition_from_json(const json& j);

enum class DocumentKind { partition, decomposition };

// Decides which of the two formats a parsed document uses, by its keys.
DocumentKind detect_document_kind(const json& j);

json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const json& j);

}  // namespace stanley
