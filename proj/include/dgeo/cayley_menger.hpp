#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dgeo/matrix.hpp"

namespace dgeo {

template <Scalar T>
using Point = std::vector<T>;

/// Symmetric matrix of squared pairwise distances among m >= 2 points, with
/// zero diagonal. Float mode additionally requires finite, nonnegative entries.
template <Scalar T>
class SquaredDistanceMatrix {
public:
    explicit SquaredDistanceMatrix(Matrix<T> entries);

    /// Pairwise |x_i - x_j|^2 of the given points (all of equal dimension).
    static SquaredDistanceMatrix from_points(std::span<const Point<T>> points);

    std::size_t point_count() const noexcept { return d2_.rows(); }
    const T& operator()(std::size_t i, std::size_t j) const { return d2_(i, j); }
    const Matrix<T>& matrix() const noexcept { return d2_; }
    T max_entry() const;

private:
    Matrix<T> d2_;
};

/// Squared content of an m-point simplex, tagged with its dimension m - 1.
template <Scalar T>
struct VolumeSquared {
    T value;
    std::size_t dim;
};

/// Bordered (m+1)x(m+1) matrix: zero corner, ones along row/column 0, d2 block.
template <Scalar T>
Matrix<T> build_cm_matrix(const SquaredDistanceMatrix<T>& d);

template <Scalar T>
T cm_determinant(const SquaredDistanceMatrix<T>& d);

/// v^2 = (-1)^m det(CM) / (2^(m-1) ((m-1)!)^2).
///
/// This is the general n+2 point formula (-1)^n 2^(n+1) ((n+1)! v)^2 with
/// n = m - 2; the "n" there is the dimension of the tangent spheres, one less
/// than the simplex dimension returned here.
template <Scalar T>
VolumeSquared<T> volume_squared(const SquaredDistanceMatrix<T>& d);

/// Heron's A^2 from side lengths, evaluated through the 3-point determinant.
template <Scalar T>
T heron_area_squared(const T& a, const T& b, const T& c);

/// Same, from squared side lengths; stays exact for triangles with rational
/// vertices, whose sides are generally irrational.
template <Scalar T>
T heron_area_squared_from_squares(const T& a2, const T& b2, const T& c2);

/// Exact zero test for rationals; for floats |v^2| <= tol * (max d2)^(m-1).
template <Scalar T>
bool is_degenerate(const SquaredDistanceMatrix<T>& d, double tol = 1e-9);

/// Coordinate route: v = |det[1 ... 1; x_1 ... x_m]| / (m-1)!, for m points
/// in R^(m-1). Independent of the distance route above.
template <Scalar T>
VolumeSquared<T> volume_squared_from_coordinates(std::span<const Point<T>> points);

}  // namespace dgeo
