#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgeo {

// Numeric values are part of the C ABI (dg_status in dgeo.h); append only.
enum class ErrorKind : int {
    InvalidArgument = 1,
    Dimension = 2,
    Validation = 3,
    ZeroRadius = 4,
    TooManyNegative = 5,
    WrongLength = 6,
    Parse = 7,
    NonFinite = 8,
    Singular = 9,
    NoRealRoot = 10,
    NeedsFloat = 11,
    Inconsistent = 12,
    RankExceedsDim = 13,
    NonEuclidean = 14,
    NoSolution = 15,
    Ambiguous = 16,
    Seed = 17,
    Geometry = 18,
    DepthExceeded = 19,
    Io = 20,
    Internal = 21,
};

/// Stable snake_case identifier used in JSON responses.
std::string_view kind_name(ErrorKind kind) noexcept;

/// True for errors caused by malformed input, false for computational failures.
bool is_validation(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dgeo
