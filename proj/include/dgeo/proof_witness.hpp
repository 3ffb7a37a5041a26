#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dgeo/tangency.hpp"

namespace dgeo {

/// One checked identity. Scalars are stored as 1x1 matrices so both sides can
/// be re-checked independently of the `passed` flag.
struct ProofEntry {
    std::string name;
    std::size_t n;  // sphere dimension; m = n + 2 points
    bool passed;
    Matrix<Rational> lhs;
    Matrix<Rational> rhs;
};

class ProofReport {
public:
    void add(std::string name, std::size_t n, Matrix<Rational> lhs, Matrix<Rational> rhs);
    void add(std::string name, std::size_t n, const Rational& lhs, const Rational& rhs);
    void append(const ProofReport& other);

    const std::vector<ProofEntry>& entries() const noexcept { return entries_; }
    std::size_t failures() const noexcept;
    bool passed() const noexcept { return failures() == 0; }

    /// One line per entry: "PASS <name> n=<n> lhs=<...> rhs=<...>".
    std::string to_text() const;

private:
    std::vector<ProofEntry> entries_;
};

/// "[a]" for 1x1, "[[a,b],[c,d]]" otherwise.
std::string format_matrix(const Matrix<Rational>& m);

/// Row 0 = (1, |x_1|^2, ..., |x_m|^2), row 1 = (0, 1, ..., 1), rows 2.. = (0, coordinates).
Matrix<Rational> build_U(std::span<const Point<Rational>> points);

/// [[0,1],[1,0]] block followed by -2 on the remaining diagonal.
Matrix<Rational> build_W(std::size_t m);

/// Identity with row 0 replaced by (1, -r_1^2, ..., -r_{n+2}^2).
Matrix<Rational> build_P(const SignedRadii<Rational>& r);

/// diag(1, 1/r_1, ..., 1/r_{n+2}).
Matrix<Rational> build_Q(const SignedRadii<Rational>& r);

/// 2*ones*ones^T - 4I of size n+2.
Matrix<Rational> build_S(std::size_t n);

/// (1/(4n)) ones*ones^T - (1/4) I.
Matrix<Rational> closed_form_S_inverse(std::size_t n);

/// |A22| * |A11 - A12 A22^-1 A21| with A11 the leading split x split block.
Rational block_determinant(const Matrix<Rational>& a, std::size_t split);

/// U^T W U = D and the determinant bookkeeping that yields the volume.
ProofReport check_UWU_congruence(std::span<const Point<Rational>> points);

/// Closed-form determinant and inverse of S; the n = 2 specials as well.
ProofReport check_S_properties(std::size_t n);

/// The P/Q congruence reduction of the tangency Cayley-Menger matrix down to
/// the Soddy-Gosset residual, one entry per step.
ProofReport check_reduction_chain(const SignedRadii<Rational>& r);

/// Random radii: |num| in [1,10], den in [1,10], at most one negative.
SignedRadii<Rational> random_radii(std::mt19937_64& rng, std::size_t n);

/// m points in R^dim with coordinates p/q, |p| <= 10, q in [1,10].
std::vector<Point<Rational>> random_points(std::mt19937_64& rng, std::size_t m, std::size_t dim);

/// check_S_properties(n) followed by `count` reduction chains on random radii
/// and `count` congruence checks on random points in R^(n+1). Deterministic in seed.
ProofReport verify_random(std::size_t count, std::size_t n, std::uint64_t seed);

}  // namespace dgeo
