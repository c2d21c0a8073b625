#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hgfrft/filtering.hpp"
#include "hgfrft/sampling.hpp"
#include "hgfrft/transform.hpp"

namespace hgfrft::io {

/// Shortest form that round-trips ("%.17g").
std::string format_double(double x);
double parse_double(std::string_view s);
long long parse_integer(std::string_view s);
std::vector<std::string> split_csv_line(std::string_view line);

// Joint arrays: one row per Hilbert index, "re,im" column pairs per vertex.
void write_joint_csv(std::ostream& out, const ComplexMatrix& x);
ComplexMatrix read_joint_csv(std::istream& in);

struct JointMetadata {
    Index m = 0;
    Index n = 0;
    double alpha = 0.0;
    double beta = 0.0;
};

nlohmann::json to_json(const JointMetadata& meta);
JointMetadata metadata_from_json(const nlohmann::json& j);

/// Sidecar path for a CSV: same stem with a ".json" extension.
std::filesystem::path sidecar_path(const std::filesystem::path& csv);

void save_signal(const std::filesystem::path& csv, const JointSignal& sig);
void save_spectrum(const std::filesystem::path& csv, const JointSpectrum& spec);
JointSignal load_signal(const std::filesystem::path& csv);
/// Orders come from the sidecar when present, zero otherwise.
JointSpectrum load_spectrum(const std::filesystem::path& csv);

// Complex vectors: one "re,im" row per entry.
void write_vector_csv(std::ostream& out, const ComplexVector& v);
ComplexVector read_vector_csv(std::istream& in);
void save_vector(const std::filesystem::path& csv, const ComplexVector& v);
ComplexVector load_vector(const std::filesystem::path& csv);

/// JSON array of [i, j] pairs.
nlohmann::json to_json(const FrequencyRegion& region);
FrequencyRegion region_from_json(const nlohmann::json& j, Index m, Index n);

/// {w: [...], support: [[i,j],...], alpha, beta, m, n}.
nlohmann::json to_json(const SamplingPlan& plan);

struct PlanSpec {
    std::vector<Index> w;
    std::vector<FrequencyRegion::Pair> support;
    double alpha = 0.0;
    double beta = 0.0;
};
PlanSpec plan_from_json(const nlohmann::json& j);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace hgfrft::io
