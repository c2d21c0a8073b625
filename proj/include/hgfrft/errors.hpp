#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgfrft {

enum class ErrorCode {
    InvalidArgument,
    NotNormal,
    NoConvergence,
    ZeroEigenvalue,
    DimensionOverflow,
    DimensionMismatch,
    IndexOutOfRange,
    OrderMismatch,
    RankDeficient,
    UnstableSpeed,
    ParseError,
    NegativeWeight,
    DuplicateEdge,
    CyclicShiftInvalid,
    DirectedInput,
    ConfigError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; every library failure is one of these.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hgfrft
