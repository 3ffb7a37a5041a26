#include "dgeo/error.hpp"

namespace dgeo {

std::string_view kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid_argument";
        case ErrorKind::Dimension: return "dimension";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::ZeroRadius: return "zero_radius";
        case ErrorKind::TooManyNegative: return "too_many_negative";
        case ErrorKind::WrongLength: return "wrong_length";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::NonFinite: return "non_finite";
        case ErrorKind::Singular: return "singular";
        case ErrorKind::NoRealRoot: return "no_real_root";
        case ErrorKind::NeedsFloat: return "needs_float";
        case ErrorKind::Inconsistent: return "inconsistent_configuration";
        case ErrorKind::RankExceedsDim: return "rank_exceeds_dim";
        case ErrorKind::NonEuclidean: return "non_euclidean";
        case ErrorKind::NoSolution: return "no_solution";
        case ErrorKind::Ambiguous: return "ambiguous";
        case ErrorKind::Seed: return "seed";
        case ErrorKind::Geometry: return "geometry";
        case ErrorKind::DepthExceeded: return "depth_exceeded";
        case ErrorKind::Io: return "io";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

bool is_validation(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::Dimension:
        case ErrorKind::Validation:
        case ErrorKind::ZeroRadius:
        case ErrorKind::TooManyNegative:
        case ErrorKind::WrongLength:
        case ErrorKind::Parse:
        case ErrorKind::NonFinite:
        case ErrorKind::Seed:
        case ErrorKind::DepthExceeded:
        case ErrorKind::Io:
            return true;
        default:
            return false;
    }
}

}  // namespace dgeo
