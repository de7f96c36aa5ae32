#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "csys/connectivity.hpp"

namespace csys {

using Json = nlohmann::ordered_json;

// Instance files: {"type": "graph-cut" | "cut-rank" | "table" | "weighted-graph-cut", ...}.
// Parse errors name the offending key and index.
ConnectivitySystem parse_instance(const Json& doc, std::string name = "");
ConnectivitySystem load_instance(const std::filesystem::path& path);

Json instance_to_json(const ConnectivitySystem& system);

Json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

} // namespace csys
