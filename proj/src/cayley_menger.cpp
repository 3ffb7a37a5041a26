#include "dgeo/cayley_menger.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dgeo {

template <Scalar T>
SquaredDistanceMatrix<T>::SquaredDistanceMatrix(Matrix<T> entries) : d2_(std::move(entries)) {
    if (!d2_.square()) throw Error(ErrorKind::Dimension, "squared distance matrix must be square");
    if (d2_.rows() < 2) throw Error(ErrorKind::Dimension, "need at least two points");
    for (std::size_t i = 0; i < d2_.rows(); ++i) {
        if (!is_zero(d2_(i, i)))
            throw Error(ErrorKind::Validation, "nonzero diagonal entry at " + std::to_string(i));
        for (std::size_t j = 0; j < d2_.cols(); ++j) {
            require_finite(d2_(i, j));
            if constexpr (!is_exact_v<T>) {
                if (d2_(i, j) < 0.0) throw Error(ErrorKind::Validation, "negative squared distance");
            }
            if (!(d2_(i, j) == d2_(j, i)))
                throw Error(ErrorKind::Validation,
                            "asymmetric entries at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

template <Scalar T>
SquaredDistanceMatrix<T> SquaredDistanceMatrix<T>::from_points(std::span<const Point<T>> points) {
    if (points.size() < 2) throw Error(ErrorKind::Dimension, "need at least two points");
    const std::size_t dim = points.front().size();
    Matrix<T> d2(points.size(), points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim) throw Error(ErrorKind::Dimension, "points of mixed dimension");
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            T s(0);
            for (std::size_t c = 0; c < dim; ++c) {
                const T delta = points[i][c] - points[j][c];
                s += delta * delta;
            }
            d2(i, j) = s;
            d2(j, i) = s;
        }
    }
    return SquaredDistanceMatrix(std::move(d2));
}

template <Scalar T>
T SquaredDistanceMatrix<T>::max_entry() const {
    T best(0);
    for (const T& v : d2_.values()) best = std::max(best, v);
    return best;
}

template <Scalar T>
Matrix<T> build_cm_matrix(const SquaredDistanceMatrix<T>& d) {
    const std::size_t m = d.point_count();
    Matrix<T> cm(m + 1, m + 1);
    for (std::size_t j = 1; j <= m; ++j) {
        cm(0, j) = T(1);
        cm(j, 0) = T(1);
        for (std::size_t k = 1; k <= m; ++k) cm(j, k) = d(j - 1, k - 1);
    }
    return cm;
}

template <Scalar T>
T cm_determinant(const SquaredDistanceMatrix<T>& d) {
    return determinant(build_cm_matrix(d));
}

template <Scalar T>
VolumeSquared<T> volume_squared(const SquaredDistanceMatrix<T>& d) {
    const auto m = static_cast<unsigned>(d.point_count());
    const T f = factorial<T>(m - 1);
    const T denom = integer_power(T(2), m - 1) * f * f;
    T value = cm_determinant(d) / denom;
    if (m % 2 == 1) value = -value;
    return {value, m - 1};
}

template <Scalar T>
T heron_area_squared(const T& a, const T& b, const T& c) {
    for (const T* side : {&a, &b, &c}) {
        require_finite(*side);
        if (*side < T(0)) throw Error(ErrorKind::Validation, "negative side length");
    }
    return heron_area_squared_from_squares(a * a, b * b, c * c);
}

template <Scalar T>
T heron_area_squared_from_squares(const T& a2, const T& b2, const T& c2) {
    Matrix<T> d2(3, 3);
    d2(0, 1) = d2(1, 0) = c2;
    d2(0, 2) = d2(2, 0) = b2;
    d2(1, 2) = d2(2, 1) = a2;
    return -cm_determinant(SquaredDistanceMatrix<T>(std::move(d2))) / T(16);
}

template <Scalar T>
bool is_degenerate(const SquaredDistanceMatrix<T>& d, double tol) {
    const VolumeSquared<T> v = volume_squared(d);
    if constexpr (is_exact_v<T>) {
        (void)tol;
        return v.value.is_zero();
    } else {
        if (tol < 0.0) throw Error(ErrorKind::InvalidArgument, "tolerance must be nonnegative");
        const double scale = std::pow(d.max_entry(), static_cast<double>(d.point_count() - 1));
        return std::fabs(v.value) <= tol * scale;
    }
}

template <Scalar T>
VolumeSquared<T> volume_squared_from_coordinates(std::span<const Point<T>> points) {
    const std::size_t m = points.size();
    if (m < 2) throw Error(ErrorKind::Dimension, "need at least two points");
    Matrix<T> u(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        if (points[j].size() != m - 1)
            throw Error(ErrorKind::Dimension, "expected " + std::to_string(m) + " points of dimension " +
                                                  std::to_string(m - 1));
        u(0, j) = T(1);
        for (std::size_t c = 0; c + 1 < m; ++c) u(c + 1, j) = points[j][c];
    }
    const T scaled = determinant(u) / factorial<T>(static_cast<unsigned>(m - 1));
    return {scaled * scaled, m - 1};
}

template class SquaredDistanceMatrix<Rational>;
template class SquaredDistanceMatrix<double>;

#define DGEO_INSTANTIATE(T)                                                                  \
    template Matrix<T> build_cm_matrix(const SquaredDistanceMatrix<T>&);                     \
    template T cm_determinant(const SquaredDistanceMatrix<T>&);                              \
    template VolumeSquared<T> volume_squared(const SquaredDistanceMatrix<T>&);               \
    template T heron_area_squared(const T&, const T&, const T&);                             \
    template T heron_area_squared_from_squares(const T&, const T&, const T&);                \
    template bool is_degenerate(const SquaredDistanceMatrix<T>&, double);                    \
    template VolumeSquared<T> volume_squared_from_coordinates(std::span<const Point<T>>);

DGEO_INSTANTIATE(Rational)
DGEO_INSTANTIATE(double)
#undef DGEO_INSTANTIATE

}  // namespace dgeo
