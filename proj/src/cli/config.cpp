#include "hgfrft/cli/config.hpp"

#include <cstdlib>
#include <set>

#include "hgfrft/io.hpp"

namespace hgfrft::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg)
{
    throw Error(ErrorCode::ConfigError, msg);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where)
{
    if (!obj.is_object()) {
        fail(where + " must be an object");
    }
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) {
            fail("unknown field '" + key + "' in " + where);
        }
    }
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where)
{
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        fail(where + "." + key + " has the wrong type");
    }
}

Index get_count(const json& obj, const char* key, const std::string& where)
{
    if (!obj.at(key).is_number_integer()) {
        fail(where + "." + key + " must be an integer");
    }
    return obj.at(key).get<Index>();
}

std::filesystem::path resolve(const std::filesystem::path& p, const std::filesystem::path& base)
{
    return p.is_absolute() || base.empty() ? p : base / p;
}

GraphSource parse_graph(const json& g, const std::filesystem::path& base, const std::string& where)
{
    reject_unknown(g, {"builtin", "n", "directed", "radius", "seed", "factors", "edge_list"}, where);
    GraphSource src;
    if (g.contains("edge_list")) {
        if (g.contains("builtin")) {
            fail(where + " cannot set both builtin and edge_list");
        }
        src.edge_list = resolve(get<std::string>(g, "edge_list", where), base);
        return src;
    }
    if (!g.contains("builtin")) {
        fail(where + " needs builtin or edge_list");
    }
    src.builtin = get<std::string>(g, "builtin", where);
    if (g.contains("directed")) src.directed = get<bool>(g, "directed", where);
    if (g.contains("radius")) src.radius = get<double>(g, "radius", where);
    if (g.contains("seed")) {
        if (!g.at("seed").is_number_unsigned()) fail(where + ".seed must be a non-negative integer");
        src.seed = g.at("seed").get<std::uint64_t>();
    }
    if (src.builtin == "product") {
        if (!g.contains("factors") || !g.at("factors").is_array() || g.at("factors").size() != 2) {
            fail(where + ".factors must list exactly two graphs");
        }
        for (std::size_t k = 0; k < 2; ++k) {
            src.factors.push_back(parse_graph(g.at("factors")[k], base, where + ".factors[" + std::to_string(k) + "]"));
        }
    } else if (src.builtin == "path" || src.builtin == "cycle" || src.builtin == "geometric") {
        if (!g.contains("n")) fail(where + ".n is required");
        src.n = get_count(g, "n", where);
    } else {
        fail(where + ".builtin '" + src.builtin + "' is not one of path, cycle, product, geometric");
    }
    return src;
}

}  // namespace

ExperimentConfig parse_config(const json& doc, const std::filesystem::path& base_dir)
{
    reject_unknown(doc, {"graph", "shift", "m", "alpha", "beta", "experiment", "params", "output", "seed"}, "config");
    ExperimentConfig cfg;
    cfg.base_dir = base_dir;
    if (doc.contains("graph")) cfg.graph = parse_graph(doc.at("graph"), base_dir, "graph");
    if (doc.contains("shift")) cfg.shift = parse_shift_kind(get<std::string>(doc, "shift", "config"));
    if (doc.contains("m")) {
        cfg.m = get_count(doc, "m", "config");
        if (cfg.m < 2) fail("config.m must be >= 2");
    }
    if (doc.contains("alpha")) cfg.alpha = get<double>(doc, "alpha", "config");
    if (doc.contains("beta")) cfg.beta = get<double>(doc, "beta", "config");
    if (doc.contains("experiment")) cfg.experiment = get<std::string>(doc, "experiment", "config");
    if (doc.contains("params")) {
        if (!doc.at("params").is_object()) fail("config.params must be an object");
        cfg.params = doc.at("params");
    }
    if (doc.contains("output")) cfg.output = resolve(get<std::string>(doc, "output", "config"), base_dir);
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned()) fail("config.seed must be a non-negative integer");
        cfg.seed = doc.at("seed").get<std::uint64_t>();
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    json doc;
    try {
        doc = json::parse(io::read_text(path));
    } catch (const json::parse_error& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    } catch (const Error& e) {
        fail(e.what());
    }
    return parse_config(doc, path.parent_path());
}

Graph build_graph(const GraphSource& source, std::uint64_t fallback_seed)
{
    if (!source.edge_list.empty()) {
        return from_edge_list(source.edge_list);
    }
    if (source.builtin == "path") return path_graph(source.n);
    if (source.builtin == "cycle") return cycle_graph(source.n, source.directed);
    if (source.builtin == "geometric") {
        return random_geometric_graph(source.n, source.radius, source.seed.value_or(fallback_seed)).graph;
    }
    if (source.builtin == "product") {
        return cartesian_product(build_graph(source.factors.at(0), fallback_seed),
                                 build_graph(source.factors.at(1), fallback_seed));
    }
    fail("unknown graph source");
}

Index max_joint_dim()
{
    if (const char* env = std::getenv("HGFRFT_MAX_DIM")) {
        long long v = 0;
        try {
            v = io::parse_integer(env);
        } catch (const Error&) {
            fail("HGFRFT_MAX_DIM is not an integer");
        }
        if (v < 1) fail("HGFRFT_MAX_DIM must be positive");
        return static_cast<Index>(v);
    }
    return linalg::kDefaultMaxDim;
}

}  // namespace hgfrft::cli
