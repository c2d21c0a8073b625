#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgfrft/cli/config.hpp"

namespace hgfrft::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitNumeric = 3,
    kExitStability = 4,
};

/// Command-line overrides layered on top of the config file.
struct CommandOptions {
    std::optional<std::filesystem::path> config;
    std::optional<std::filesystem::path> out;
    std::optional<std::uint64_t> seed;
    std::optional<Index> samples;
    std::optional<std::pair<double, double>> alpha_range;
    std::optional<std::pair<double, double>> beta_range;
    std::optional<double> coarse_step;
    std::optional<double> fine_step;
};

const std::vector<std::string>& command_names();

/// Runs one subcommand. Results go to files under the output directory and a
/// one-line JSON summary goes to `out`; diagnostics go to `err`. Returns an
/// ExitCode.
int run_command(const std::string& name, const CommandOptions& options, std::ostream& out, std::ostream& err);

/// Maps a library error to its exit code.
int exit_code_for(ErrorCode code) noexcept;

}  // namespace hgfrft::cli
