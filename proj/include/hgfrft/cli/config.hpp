#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hgfrft/graph.hpp"

namespace hgfrft::cli {

/// Either a builtin generator or an edge-list file.
struct GraphSource {
    std::string builtin;  // path | cycle | product | geometric; empty when edge_list is set
    Index n = 0;
    bool directed = false;
    double radius = 0.25;
    std::optional<std::uint64_t> seed;  // geometric only; falls back to the config seed
    std::vector<GraphSource> factors;   // product only
    std::filesystem::path edge_list;
};

struct ExperimentConfig {
    std::optional<GraphSource> graph;
    ShiftKind shift = ShiftKind::Laplacian;
    Index m = 4;
    double alpha = 1.0;
    double beta = 1.0;
    std::string experiment;
    nlohmann::json params = nlohmann::json::object();
    std::filesystem::path output = ".";
    std::uint64_t seed = 0;
    std::filesystem::path base_dir;  // relative paths in params resolve here
};

/// Validates the document against the config schema; unknown keys and wrong
/// types raise ConfigError. Relative paths resolve against `base_dir`.
ExperimentConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

Graph build_graph(const GraphSource& source, std::uint64_t fallback_seed);

/// Cap on m * n from HGFRFT_MAX_DIM (default 16384).
Index max_joint_dim();

}  // namespace hgfrft::cli
