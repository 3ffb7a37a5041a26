#include "doctest.h"

#include <cmath>
#include <random>

#include "dgeo/tangency.hpp"
#include "oracles.hpp"

using namespace dgeo;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Internal;
}

// Residual computed directly from the definition, for oracle use.
Rational residual_by_hand(const std::vector<Rational>& k, std::size_t n) {
    Rational s(0), s2(0);
    for (const auto& v : k) {
        s += v;
        s2 += v * v;
    }
    return s * s - Rational(n) * s2;
}

std::vector<Rational> random_signed_radii(std::mt19937_64& rng, std::size_t n) {
    auto r = oracle::random_positive(rng, n + 2);
    std::uniform_int_distribution<std::size_t> pick(0, 2 * (n + 2) - 1);
    if (const auto i = pick(rng); i < r.size()) r[i] = -r[i];
    return r;
}

}  // namespace

TEST_CASE("curvatures_from_radii") {
    CHECK(std::ranges::equal(curvatures_from_radii(SignedRadii<Rational>({1, 1, 1, 1}, 2)).values(),
                             std::vector<Rational>{1, 1, 1, 1}));
    CHECK(std::ranges::equal(curvatures_from_radii(SignedRadii<Rational>({-1, q(1, 2), q(1, 2), q(1, 3)}, 2)).values(),
                             std::vector<Rational>{-1, 2, 2, 3}));
    CHECK(std::ranges::equal(curvatures_from_radii(SignedRadii<Rational>({2, 3, 6, -12}, 2)).values(),
                             std::vector<Rational>{q(1, 2), q(1, 3), q(1, 6), q(-1, 12)}));
    CHECK(kind_of([] { SignedRadii<Rational>({0, 1, 1, 1}, 2); }) == ErrorKind::ZeroRadius);
}

TEST_CASE("tangency_squared_distances") {
    const auto ones = tangency_squared_distances(SignedRadii<Rational>({1, 1, 1, 1}, 2));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(ones(i, j) == (i == j ? q(0) : q(4)));

    const auto frac = tangency_squared_distances(SignedRadii<Rational>({-1, q(1, 2), q(1, 2), q(1, 3)}, 2));
    CHECK(frac(0, 1) == q(1, 4));
    CHECK(frac(1, 2) == q(1));
    CHECK(frac(1, 3) == q(25, 36));

    const auto ints = tangency_squared_distances(SignedRadii<Rational>({-1, 2, 2, 3}, 2));
    CHECK(ints(0, 1) == q(1));
    CHECK(ints(0, 3) == q(4));
    CHECK(ints(1, 2) == q(16));
    CHECK(ints(1, 3) == q(25));
}

TEST_CASE("descartes_residual") {
    CHECK(descartes_residual(Curvatures<Rational>({-1, 2, 2, 3}, 2)) == q(0));
    CHECK(descartes_residual(Curvatures<Rational>({1, 1, 1, 1}, 2)) == q(8));
    const double k5 = 2.0 + std::sqrt(6.0);
    CHECK(std::fabs(descartes_residual(Curvatures<double>({1, 1, 1, 1, k5}, 3))) <= 1e-12);
    CHECK(kind_of([] { Curvatures<Rational>({1, 1, 1}, 2); }) == ErrorKind::WrongLength);
}

TEST_CASE("factored_volume_squared") {
    const auto unit = factored_volume_squared(SignedRadii<Rational>({1, 1, 1, 1}, 2));
    CHECK(unit.value == q(8, 9));
    CHECK(unit.value == oracle::regular_simplex_volume_squared(4, 3));  // side 2 tetrahedron
    CHECK(unit.dim == 3);
    CHECK(factored_volume_squared(SignedRadii<Rational>({-1, q(1, 2), q(1, 2), q(1, 3)}, 2)).value == q(0));
    const auto five = factored_volume_squared(SignedRadii<Rational>({1, 1, 1, 1, 1}, 3));
    CHECK(five.value == q(5, 36));
    CHECK(five.value == oracle::regular_simplex_volume_squared(4, 4));
    CHECK(five.dim == 4);
}

TEST_CASE("solve_missing_curvature") {
    SUBCASE("n = 2, irrational roots need float mode") {
        const std::vector<double> known{1, 1, 1};
        const auto roots = solve_missing_curvature<double>(known, 2);
        CHECK(roots.larger == doctest::Approx(3 + 2 * std::sqrt(3.0)).epsilon(1e-14));
        CHECK(roots.smaller == doctest::Approx(3 - 2 * std::sqrt(3.0)).epsilon(1e-14));
        const std::vector<Rational> exact{1, 1, 1};
        CHECK(kind_of([&] { solve_missing_curvature<Rational>(exact, 2); }) == ErrorKind::NeedsFloat);
    }
    SUBCASE("double root") {
        const std::vector<Rational> known{-1, 2, 2};
        const auto roots = solve_missing_curvature<Rational>(known, 2);
        CHECK(roots.larger == q(3));
        CHECK(roots.smaller == q(3));
        CHECK_FALSE(roots.single);
    }
    SUBCASE("n = 3") {
        const std::vector<double> known{1, 1, 1, 1};
        const auto roots = solve_missing_curvature<double>(known, 3);
        CHECK(std::fabs(roots.larger - (2 + std::sqrt(6.0))) <= 1e-12);
        CHECK(std::fabs(roots.smaller - (2 - std::sqrt(6.0))) <= 1e-12);
    }
    SUBCASE("negative discriminant") {
        const std::vector<Rational> known{1, -1, 1};  // S = 1, Q = 3: 2(1 - 3) < 0
        CHECK(kind_of([&] { solve_missing_curvature<Rational>(known, 2); }) == ErrorKind::NoRealRoot);
        const std::vector<double> known_f{1, -1, 1};
        CHECK(kind_of([&] { solve_missing_curvature<double>(known_f, 2); }) == ErrorKind::NoRealRoot);
    }
    SUBCASE("n = 1 is linear") {
        // Three collinear tangent intervals: (S + k)^2 = Q + k^2.
        const std::vector<Rational> known{1, 1};
        const auto roots = solve_missing_curvature<Rational>(known, 1);
        CHECK(roots.single);
        CHECK(roots.larger == roots.smaller);
        CHECK(descartes_residual(Curvatures<Rational>({1, 1, roots.larger}, 1)) == q(0));
        const std::vector<Rational> cancel{1, -1};
        CHECK(kind_of([&] { solve_missing_curvature<Rational>(cancel, 1); }) == ErrorKind::NoRealRoot);
    }
    SUBCASE("argument checks") {
        const std::vector<Rational> short_list{1, 1};
        CHECK(kind_of([&] { solve_missing_curvature<Rational>(short_list, 2); }) == ErrorKind::WrongLength);
        const std::vector<Rational> zero{0, 1, 1};
        CHECK(kind_of([&] { solve_missing_curvature<Rational>(zero, 2); }) == ErrorKind::ZeroRadius);
    }
}

TEST_CASE("solver soundness on random tuples") {
    std::mt19937_64 rng(5);
    int exact_hits = 0;
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
        std::vector<Rational> known;
        for (std::size_t j = 0; j <= n; ++j) known.push_back(oracle::random_rational(rng, 6, false));
        std::vector<double> known_f;
        for (const auto& k : known) known_f.push_back(k.to_double());

        CurvatureRoots<double> fr;
        try {
            fr = solve_missing_curvature<double>(known_f, n);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NoRealRoot);
            continue;
        }
        double kmax = 0;
        for (double v : known_f) kmax = std::max(kmax, v * v);
        for (double root : {fr.larger, fr.smaller}) {
            if (root == 0.0) continue;
            auto all = known_f;
            all.push_back(root);
            const double bound = 1e-12 * std::max({1.0, kmax, root * root}) * static_cast<double>(n + 2);
            CHECK(std::fabs(descartes_residual(Curvatures<double>(all, n))) <= bound);
        }
        CHECK(fr.larger >= fr.smaller);

        try {
            const auto er = solve_missing_curvature<Rational>(known, n);
            ++exact_hits;
            for (const auto& root : {er.larger, er.smaller}) {
                if (root.is_zero()) continue;
                auto all = known;
                all.push_back(root);
                CHECK(descartes_residual(Curvatures<Rational>(all, n)) == q(0));
            }
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NeedsFloat);
        }
    }
    // Tuples built to have a square discriminant: k1, k2 free, k3 = (t^2 - k1 k2)/(k1 + k2).
    for (int i = 0; i < 100; ++i) {
        const auto k12 = oracle::random_positive(rng, 2);
        const Rational t = (k12[0] + k12[1]) / q(2) + oracle::random_positive(rng, 1)[0];
        const Rational k3 = (t * t - k12[0] * k12[1]) / (k12[0] + k12[1]);
        const std::vector<Rational> known{k12[0], k12[1], k3};
        const auto roots = solve_missing_curvature<Rational>(known, 2);
        ++exact_hits;
        CHECK(roots.larger == k12[0] + k12[1] + k3 + q(2) * t);
        CHECK(roots.smaller == k12[0] + k12[1] + k3 - q(2) * t);
    }
    CHECK(exact_hits >= 100);
}

TEST_CASE("vieta_partner") {
    const Curvatures<Rational> k({-1, 2, 2, 3}, 2);
    CHECK(vieta_partner(k, 0) == q(15));
    CHECK(residual_by_hand({15, 2, 2, 3}, 2) == q(0));
    CHECK(vieta_partner(k, 3) == q(3));

    const double s3 = std::sqrt(3.0);
    const Curvatures<double> kf({1, 1, 1, 3 + 2 * s3}, 2);
    CHECK(vieta_partner(kf, 3) == doctest::Approx(3 - 2 * s3).epsilon(1e-14));

    CHECK(kind_of([] { vieta_partner(Curvatures<Rational>({1, 1, 1, 1}, 2), 0); }) == ErrorKind::Inconsistent);
    CHECK(kind_of([] { vieta_partner(Curvatures<Rational>({1, 1, 1}, 1), 0); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { vieta_partner(k, 4); }) == ErrorKind::InvalidArgument);

    // Applying the reflection twice at one index returns the original.
    for (std::size_t idx = 0; idx < 4; ++idx) {
        std::vector<Rational> v{k.values().begin(), k.values().end()};
        v[idx] = vieta_partner(k, idx);
        const Curvatures<Rational> once(v, 2);
        CHECK(descartes_residual(once) == q(0));
        CHECK(vieta_partner(once, idx) == k[idx]);
    }
}

TEST_CASE("validate_radii") {
    CHECK_NOTHROW(validate_radii<Rational>({-1, 2, 2, 3}, 2, true));
    CHECK(kind_of([] { validate_radii<Rational>({-1, -2, 2, 3}, 2, true); }) == ErrorKind::TooManyNegative);
    CHECK_NOTHROW(validate_radii<Rational>({-1, -2, 2, 3}, 2, false));
    CHECK(kind_of([] { validate_radii<Rational>({0, 1, 1, 1}, 2, false); }) == ErrorKind::ZeroRadius);
    CHECK(kind_of([] { validate_radii<Rational>({1, 1, 1}, 2, false); }) == ErrorKind::WrongLength);
    CHECK(kind_of([] { validate_radii<Rational>({1, 1}, 0, false); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("central identity and factored volume on random radii") {
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int i = 0; i < 40; ++i) {
            const SignedRadii<Rational> r(random_signed_radii(rng, n), n);
            const auto sides = central_identity(r);
            CHECK(sides.cm_determinant == sides.factored);
            CHECK(factored_volume_squared(r).value == volume_squared(tangency_squared_distances(r)).value);
        }
    }
    // Spot check against the permutation-sum determinant.
    const SignedRadii<Rational> r({q(1, 2), q(-7, 3), q(5), q(2, 9), q(3, 4)}, 3);
    CHECK(oracle::leibniz_determinant(build_cm_matrix(tangency_squared_distances(r))) == central_identity(r).factored);
}

TEST_CASE("residual scale covariance") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
        const SignedRadii<Rational> r(random_signed_radii(rng, n), n);
        const Rational s = oracle::random_positive(rng, 1)[0];
        std::vector<Rational> scaled;
        for (const auto& v : r.values()) scaled.push_back(s * v);
        const Rational base = descartes_residual(curvatures_from_radii(r));
        const Rational after = descartes_residual(curvatures_from_radii(SignedRadii<Rational>(scaled, n)));
        CHECK(after == base / (s * s));
        CHECK(after.is_zero() == base.is_zero());
    }
}
