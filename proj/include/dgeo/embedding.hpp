#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dgeo/cayley_menger.hpp"

namespace dgeo {

inline constexpr double kDefaultEmbeddingTolerance = 1e-9;

/// Float coordinates for m points in R^dim.
struct EmbeddedPoints {
    std::vector<Point<double>> points;
    std::size_t dim;
};

/// Classical realization from the Gram matrix relative to point 0.
///
/// Output is normalized: point 0 at the origin, point 1 on the positive first
/// axis, point 2 in the upper half of the first two axes, and so on (the
/// coordinates of points 1.. form a lower-triangular matrix with nonnegative
/// diagonal). Eigenvalues are judged against tol * max d2.
///
/// Throws Error(RankExceedsDim) when more than `dim` eigenvalues are positive
/// and Error(NonEuclidean) when any is clearly negative.
EmbeddedPoints realize_points(const SquaredDistanceMatrix<double>& d, std::size_t dim,
                              double tol = kDefaultEmbeddingTolerance);

/// All points (at most two) at the given squared distances from `existing`.
/// Two candidates are returned when the existing points leave exactly one
/// reflection free; they are ordered so the first has the larger final
/// coordinate (ties broken on earlier coordinates, from last to first).
std::vector<Point<double>> trilaterate(const EmbeddedPoints& existing, std::span<const double> d2_new,
                                       double tol = kDefaultEmbeddingTolerance);

/// Trilateration with the reflection resolved toward a nonnegative final
/// coordinate. Throws Error(NoSolution) for inconsistent distances and
/// Error(Ambiguous) when more than a reflection is undetermined.
Point<double> append_point(const EmbeddedPoints& existing, std::span<const double> d2_new,
                           double tol = kDefaultEmbeddingTolerance);

}  // namespace dgeo
