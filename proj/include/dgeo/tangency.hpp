#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dgeo/cayley_menger.hpp"

namespace dgeo {

/// Signed radii of n+2 mutually tangent n-spheres. A radius is negative when
/// its sphere encloses the others, which keeps d_ij^2 = (r_i + r_j)^2.
template <Scalar T>
class SignedRadii {
public:
    /// Lenient validation: nonzero entries, exactly n+2 of them, n >= 1.
    SignedRadii(std::vector<T> radii, std::size_t n);

    std::size_t dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return r_.size(); }
    const T& operator[](std::size_t i) const { return r_[i]; }
    std::span<const T> values() const noexcept { return r_; }
    T product() const;

private:
    std::vector<T> r_;
    std::size_t n_;
};

/// Curvatures k_i = 1/r_i of n+2 tangent n-spheres.
template <Scalar T>
class Curvatures {
public:
    Curvatures(std::vector<T> curvatures, std::size_t n);

    std::size_t dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return k_.size(); }
    const T& operator[](std::size_t i) const { return k_[i]; }
    std::span<const T> values() const noexcept { return k_; }

private:
    std::vector<T> k_;
    std::size_t n_;
};

/// Strict mode also rejects more than one negative radius.
template <Scalar T>
SignedRadii<T> validate_radii(std::vector<T> raw, std::size_t n, bool strict);

template <Scalar T>
Curvatures<T> curvatures_from_radii(const SignedRadii<T>& r);

template <Scalar T>
SignedRadii<T> radii_from_curvatures(const Curvatures<T>& k);

template <Scalar T>
SquaredDistanceMatrix<T> tangency_squared_distances(const SignedRadii<T>& r);

/// (sum k)^2 - n * sum k^2; zero exactly when the Soddy-Gosset relation holds.
template <Scalar T>
T descartes_residual(const Curvatures<T>& k);

/// v^2 = 2^n (prod r / (n+1)!)^2 * residual, dimension n+1.
template <Scalar T>
VolumeSquared<T> factored_volume_squared(const SignedRadii<T>& r);

/// Both sides of det(CM) = (-1)^n 2^(2n+1) (prod r)^2 * residual(1/r).
template <Scalar T>
struct IdentitySides {
    T cm_determinant;
    T factored;
};

template <Scalar T>
IdentitySides<T> central_identity(const SignedRadii<T>& r);

/// Roots of the curvature quadratic for the missing sphere, larger first.
/// For n = 1 the equation is linear; `single` is set and both fields hold it.
template <Scalar T>
struct CurvatureRoots {
    T larger;
    T smaller;
    bool single = false;
};

/// Exact mode throws Error(NeedsFloat) when the discriminant is not the square
/// of a rational. Negative discriminant throws Error(NoRealRoot).
template <Scalar T>
CurvatureRoots<T> solve_missing_curvature(std::span<const T> known, std::size_t n);

/// Second root for position `index`: 2 * sum_{j != index} k_j / (n-1) - k_index.
/// Float mode accepts |residual| <= tol * max(1, k_max^2).
template <Scalar T>
T vieta_partner(const Curvatures<T>& k, std::size_t index, double tol = 1e-9);

}  // namespace dgeo
