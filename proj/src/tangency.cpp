#include "dgeo/tangency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dgeo {

namespace {

void require_count(std::size_t count, std::size_t n, const char* what) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension n must be at least 1");
    if (count != n + 2)
        throw Error(ErrorKind::WrongLength, std::string(what) + ": expected " + std::to_string(n + 2) +
                                                " values for n = " + std::to_string(n) + ", got " +
                                                std::to_string(count));
}

template <Scalar T>
T max_square(std::span<const T> values) {
    T best(0);
    for (const T& v : values) best = std::max(best, v * v);
    return best;
}

}  // namespace

template <Scalar T>
SignedRadii<T>::SignedRadii(std::vector<T> radii, std::size_t n) : r_(std::move(radii)), n_(n) {
    require_count(r_.size(), n_, "radii");
    for (std::size_t i = 0; i < r_.size(); ++i) {
        require_finite(r_[i]);
        if (is_zero(r_[i])) throw Error(ErrorKind::ZeroRadius, "radius " + std::to_string(i) + " is zero");
    }
}

template <Scalar T>
T SignedRadii<T>::product() const {
    T p(1);
    for (const T& v : r_) p = p * v;
    return p;
}

template <Scalar T>
Curvatures<T>::Curvatures(std::vector<T> curvatures, std::size_t n) : k_(std::move(curvatures)), n_(n) {
    require_count(k_.size(), n_, "curvatures");
    for (std::size_t i = 0; i < k_.size(); ++i) {
        require_finite(k_[i]);
        if (is_zero(k_[i])) throw Error(ErrorKind::ZeroRadius, "curvature " + std::to_string(i) + " is zero");
    }
}

template <Scalar T>
SignedRadii<T> validate_radii(std::vector<T> raw, std::size_t n, bool strict) {
    SignedRadii<T> r(std::move(raw), n);
    if (strict) {
        const auto negatives =
            std::count_if(r.values().begin(), r.values().end(), [](const T& v) { return v < T(0); });
        if (negatives > 1)
            throw Error(ErrorKind::TooManyNegative,
                        std::to_string(negatives) + " negative radii; at most one sphere may enclose the others");
    }
    return r;
}

template <Scalar T>
Curvatures<T> curvatures_from_radii(const SignedRadii<T>& r) {
    std::vector<T> k;
    k.reserve(r.size());
    for (const T& v : r.values()) k.push_back(T(1) / v);
    return Curvatures<T>(std::move(k), r.dimension());
}

template <Scalar T>
SignedRadii<T> radii_from_curvatures(const Curvatures<T>& k) {
    std::vector<T> r;
    r.reserve(k.size());
    for (const T& v : k.values()) r.push_back(T(1) / v);
    return SignedRadii<T>(std::move(r), k.dimension());
}

template <Scalar T>
SquaredDistanceMatrix<T> tangency_squared_distances(const SignedRadii<T>& r) {
    const std::size_t m = r.size();
    Matrix<T> d2(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const T s = r[i] + r[j];
            d2(i, j) = s * s;
            d2(j, i) = s * s;
        }
    return SquaredDistanceMatrix<T>(std::move(d2));
}

template <Scalar T>
T descartes_residual(const Curvatures<T>& k) {
    T sum(0), sum_sq(0);
    for (const T& v : k.values()) {
        sum += v;
        sum_sq += v * v;
    }
    return sum * sum - T(k.dimension()) * sum_sq;
}

template <Scalar T>
VolumeSquared<T> factored_volume_squared(const SignedRadii<T>& r) {
    const auto n = static_cast<unsigned>(r.dimension());
    const T scaled = r.product() / factorial<T>(n + 1);
    return {integer_power(T(2), n) * scaled * scaled * descartes_residual(curvatures_from_radii(r)), n + 1};
}

template <Scalar T>
IdentitySides<T> central_identity(const SignedRadii<T>& r) {
    const auto n = static_cast<unsigned>(r.dimension());
    const T prod = r.product();
    T factored = integer_power(T(2), 2 * n + 1) * prod * prod * descartes_residual(curvatures_from_radii(r));
    if (n % 2 == 1) factored = -factored;
    return {cm_determinant(tangency_squared_distances(r)), factored};
}

template <Scalar T>
CurvatureRoots<T> solve_missing_curvature(std::span<const T> known, std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension n must be at least 1");
    if (known.size() != n + 1)
        throw Error(ErrorKind::WrongLength, "expected " + std::to_string(n + 1) + " known curvatures for n = " +
                                                std::to_string(n));
    T sum(0), sum_sq(0);
    for (const T& v : known) {
        require_finite(v);
        if (is_zero(v)) throw Error(ErrorKind::ZeroRadius, "zero curvature (straight line) is not supported");
        sum += v;
        sum_sq += v * v;
    }

    if (n == 1) {
        // (S + k)^2 - (Q + k^2) = S^2 + 2Sk - Q is linear in k.
        if (is_zero(sum)) throw Error(ErrorKind::NoRealRoot, "linear curvature equation has no solution");
        const T root = (sum_sq - sum * sum) / (T(2) * sum);
        require_finite(root);
        return {root, root, true};
    }

    const T lead(n - 1);
    const T disc = T(n) * (sum * sum - lead * sum_sq);
    if constexpr (is_exact_v<T>) {
        if (disc < T(0)) throw Error(ErrorKind::NoRealRoot, "negative discriminant " + disc.str());
        const auto root = disc.exact_sqrt();
        if (!root)
            throw Error(ErrorKind::NeedsFloat,
                        "discriminant " + disc.str() + " is not a rational square; use float mode");
        return {(sum + *root) / lead, (sum - *root) / lead};
    } else {
        const double scale = static_cast<double>(n) * (sum * sum + lead * sum_sq);
        double d = disc;
        if (d < 0.0) {
            if (d < -1e-12 * scale) throw Error(ErrorKind::NoRealRoot, "negative discriminant " + to_string(d));
            d = 0.0;
        }
        const double root = std::sqrt(d);
        // Cancellation-free pair: the root away from zero directly, its mate
        // through the product of roots (nQ - S^2)/(n-1).
        const double t = sum + std::copysign(root, sum);
        if (t == 0.0) return {0.0, 0.0};
        const double first = t / lead;
        const double second = (static_cast<double>(n) * sum_sq - sum * sum) / t;
        return {std::max(first, second), std::min(first, second)};
    }
}

template <Scalar T>
T vieta_partner(const Curvatures<T>& k, std::size_t index, double tol) {
    const std::size_t n = k.dimension();
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "Vieta partner needs n >= 2 (n = 1 has a single root)");
    if (index >= k.size()) throw Error(ErrorKind::InvalidArgument, "index out of range");
    const T residual = descartes_residual(k);
    if constexpr (is_exact_v<T>) {
        (void)tol;
        if (!residual.is_zero())
            throw Error(ErrorKind::Inconsistent, "curvatures are not tangent: residual " + residual.str());
    } else {
        const double bound = tol * std::max(1.0, max_square(k.values()));
        if (std::fabs(residual) > bound)
            throw Error(ErrorKind::Inconsistent, "curvatures are not tangent: residual " + to_string(residual));
    }
    T others(0);
    for (std::size_t j = 0; j < k.size(); ++j)
        if (j != index) others += k[j];
    return T(2) * others / T(n - 1) - k[index];
}

template class SignedRadii<Rational>;
template class SignedRadii<double>;
template class Curvatures<Rational>;
template class Curvatures<double>;

#define DGEO_INSTANTIATE(T)                                                                   \
    template SignedRadii<T> validate_radii(std::vector<T>, std::size_t, bool);                \
    template Curvatures<T> curvatures_from_radii(const SignedRadii<T>&);                      \
    template SignedRadii<T> radii_from_curvatures(const Curvatures<T>&);                      \
    template SquaredDistanceMatrix<T> tangency_squared_distances(const SignedRadii<T>&);      \
    template T descartes_residual(const Curvatures<T>&);                                      \
    template VolumeSquared<T> factored_volume_squared(const SignedRadii<T>&);                 \
    template IdentitySides<T> central_identity(const SignedRadii<T>&);                        \
    template CurvatureRoots<T> solve_missing_curvature(std::span<const T>, std::size_t);      \
    template T vieta_partner(const Curvatures<T>&, std::size_t, double);

DGEO_INSTANTIATE(Rational)
DGEO_INSTANTIATE(double)
#undef DGEO_INSTANTIATE

}  // namespace dgeo
