#include "doctest.h"

#include <algorithm>
#include <random>

#include "dgeo/tangency.hpp"
#include "oracles.hpp"

using namespace dgeo;

namespace {

SquaredDistanceMatrix<Rational> uniform_d2(std::size_t m, const Rational& value) {
    Matrix<Rational> d(m, m, value);
    for (std::size_t i = 0; i < m; ++i) d(i, i) = Rational(0);
    return SquaredDistanceMatrix<Rational>(d);
}

SquaredDistanceMatrix<Rational> triangle_d2(const Rational& a2, const Rational& b2, const Rational& c2) {
    return SquaredDistanceMatrix<Rational>(Matrix<Rational>{{0, c2, b2}, {c2, 0, a2}, {b2, a2, 0}});
}

}  // namespace

TEST_CASE("squared distance matrix validation") {
    CHECK_THROWS_AS(SquaredDistanceMatrix<Rational>(Matrix<Rational>{{0, 1}, {2, 0}}), Error);
    CHECK_THROWS_AS(SquaredDistanceMatrix<Rational>(Matrix<Rational>{{1, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(SquaredDistanceMatrix<Rational>(Matrix<Rational>{{0}}), Error);
    CHECK_THROWS_AS(SquaredDistanceMatrix<double>(Matrix<double>{{0, -1}, {-1, 0}}), Error);
    CHECK_THROWS_AS(SquaredDistanceMatrix<double>(Matrix<double>{{0, NAN}, {NAN, 0}}), Error);
    // Exact mode accepts any rational.
    CHECK_NOTHROW(SquaredDistanceMatrix<Rational>(Matrix<Rational>{{0, -1}, {-1, 0}}));
    try {
        SquaredDistanceMatrix<Rational>(Matrix<Rational>{{0, 1}, {2, 0}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
    }
}

TEST_CASE("build_cm_matrix") {
    const auto cm = build_cm_matrix(uniform_d2(3, 1));
    CHECK(cm == Matrix<Rational>{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});

    // 3-4-5 triangle plus a fourth point: border of ones.
    const std::vector<Point<Rational>> pts{{0, 0}, {3, 0}, {0, 4}, {1, 1}};
    const auto cm4 = build_cm_matrix(SquaredDistanceMatrix<Rational>::from_points(pts));
    REQUIRE(cm4.rows() == 5);
    CHECK(cm4(0, 0) == Rational(0));
    for (std::size_t j = 1; j < 5; ++j) {
        CHECK(cm4(0, j) == Rational(1));
        CHECK(cm4(j, 0) == Rational(1));
    }
    CHECK(cm4.symmetric());

    // Radii (-1,2,2,3): block entries are (r_i + r_j)^2.
    const auto cmr = build_cm_matrix(tangency_squared_distances(SignedRadii<Rational>({-1, 2, 2, 3}, 2)));
    CHECK(cmr == Matrix<Rational>{{0, 1, 1, 1, 1},
                                  {1, 0, 1, 1, 4},
                                  {1, 1, 0, 16, 25},
                                  {1, 1, 16, 0, 25},
                                  {1, 4, 25, 25, 0}});
}

TEST_CASE("cm_determinant examples") {
    CHECK(cm_determinant(triangle_d2(9, 16, 25)) == Rational(-576));
    // Regular tetrahedron with unit side: 288 v^2, v^2 = 1/72 from the regular simplex formula.
    CHECK(cm_determinant(uniform_d2(4, 1)) == Rational(288) * oracle::regular_simplex_volume_squared(1, 3));
    CHECK(cm_determinant(uniform_d2(4, 1)) == Rational(4));
    // Collinear 0, 1, 3 on a line: distances 1, 2, 3.
    CHECK(cm_determinant(triangle_d2(4, 9, 1)) == Rational(0));
}

TEST_CASE("volume_squared examples") {
    const auto tet = volume_squared(uniform_d2(4, 1));
    CHECK(tet.value == Rational(1, 72));
    CHECK(tet.value == oracle::regular_simplex_volume_squared(1, 3));
    CHECK(tet.dim == 3);

    const auto tri = volume_squared(triangle_d2(9, 16, 25));
    CHECK(tri.value == Rational(36));
    CHECK(tri.dim == 2);

    const auto four = volume_squared(uniform_d2(5, 4));
    CHECK(four.value == Rational(5, 36));
    CHECK(four.value == oracle::regular_simplex_volume_squared(4, 4));

    // Segment: v^2 is the squared length.
    CHECK(volume_squared(uniform_d2(2, 7)).value == Rational(7));
    CHECK(volume_squared(uniform_d2(2, 7)).dim == 1);
}

TEST_CASE("heron_area_squared") {
    CHECK(heron_area_squared<Rational>(3, 4, 5) == Rational(36));
    CHECK(heron_area_squared<Rational>(1, 1, 2) == Rational(0));
    CHECK(heron_area_squared<Rational>(2, 2, 2) == Rational(3));
    CHECK(heron_area_squared<double>(3, 4, 5) == doctest::Approx(36.0));
    CHECK_THROWS_AS(heron_area_squared<Rational>(-1, 1, 1), Error);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto s = oracle::random_positive(rng, 3);
        CHECK(heron_area_squared(s[0], s[1], s[2]) == oracle::heron_classical(s[0], s[1], s[2]));
    }
}

TEST_CASE("is_degenerate") {
    // Radii (-1, 1/2, 1/2, 1/3): curvatures (-1,2,2,3) have zero residual.
    const SignedRadii<Rational> flat({-1, Rational(1, 2), Rational(1, 2), Rational(1, 3)}, 2);
    CHECK(is_degenerate(tangency_squared_distances(flat)));
    CHECK_FALSE(is_degenerate(uniform_d2(4, 1)));
    CHECK_FALSE(is_degenerate(uniform_d2(2, 5)));

    // Radii (-1,2,2,3) themselves are not a flat configuration.
    CHECK_FALSE(is_degenerate(tangency_squared_distances(SignedRadii<Rational>({-1, 2, 2, 3}, 2))));

    const SignedRadii<double> flat_f({-1.0, 0.5, 0.5, 1.0 / 3.0}, 2);
    CHECK(is_degenerate(tangency_squared_distances(flat_f), 1e-9));
    CHECK_FALSE(is_degenerate(SquaredDistanceMatrix<double>(dgeo::to_float(uniform_d2(4, 1).matrix())), 1e-9));
}

TEST_CASE("volume_squared_from_coordinates") {
    const std::vector<Point<Rational>> corner{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(volume_squared_from_coordinates<Rational>(corner).value == Rational(1, 36));

    const std::vector<Point<Rational>> tri{{0, 0}, {3, 0}, {0, 4}};
    CHECK(volume_squared_from_coordinates<Rational>(tri).value == Rational(36));

    const std::vector<Point<Rational>> flat{{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {1, 1, 0}};
    CHECK(volume_squared_from_coordinates<Rational>(flat).value == Rational(0));

    const std::vector<Point<Rational>> bad{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK_THROWS_AS(volume_squared_from_coordinates<Rational>(bad), Error);
}

TEST_CASE("distance and coordinate routes agree on 500 random rational simplices") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        const std::size_t m = 3 + static_cast<std::size_t>(i % 3);
        std::vector<Point<Rational>> pts(m, Point<Rational>(m - 1));
        for (auto& p : pts)
            for (auto& x : p) x = oracle::random_rational(rng, 10);
        const auto d2 = SquaredDistanceMatrix<Rational>::from_points(pts);
        const auto by_distance = volume_squared(d2);
        const auto by_coords = volume_squared_from_coordinates<Rational>(pts);
        CHECK(by_distance.value == by_coords.value);
        CHECK(by_distance.dim == by_coords.dim);
        // Sign convention: realized configurations never give a negative v^2.
        CHECK(by_distance.value >= Rational(0));
    }
}

TEST_CASE("cm_determinant invariances") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const std::size_t m = 3 + static_cast<std::size_t>(i % 4);
        std::vector<Point<Rational>> pts(m, Point<Rational>(3));
        for (auto& p : pts)
            for (auto& x : p) x = oracle::random_rational(rng, 10);
        const auto d2 = SquaredDistanceMatrix<Rational>::from_points(pts);
        const Rational det = cm_determinant(d2);

        std::vector<std::size_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix<Rational> permuted(m, m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) permuted(a, b) = d2(perm[a], perm[b]);
        CHECK(cm_determinant(SquaredDistanceMatrix<Rational>(permuted)) == det);

        const Rational s = oracle::random_rational(rng, 10, false);
        const auto scaled = SquaredDistanceMatrix<Rational>((s * s) * d2.matrix());
        const auto degree = static_cast<unsigned>(2 * (m - 1));
        CHECK(cm_determinant(scaled) == s.pow(degree) * det);
        CHECK(volume_squared(scaled).value == s.pow(degree) * volume_squared(d2).value);
    }
}
