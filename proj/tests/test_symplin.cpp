#include "doctest.h"

#include <cmath>
#include <numbers>

#include "reebmec/symplin.hpp"
#include "reebmec/verify.hpp"

using namespace reebmec;

namespace {
constexpr double kPi = std::numbers::pi;

Mat rot(double phi) {
    return Mat{{std::cos(phi), -std::sin(phi)}, {std::sin(phi), std::cos(phi)}};
}

Mat diag22(double a, double b) { return Mat{{a, 0.0}, {0.0, b}}; }
} // namespace

TEST_CASE("standard_J block form and square") {
    Mat j1 = standard_J(1);
    CHECK(j1 == Mat{{0.0, -1.0}, {1.0, 0.0}});

    Mat j2 = standard_J(2);
    CHECK(j2(0, 2) == -1.0);
    CHECK(j2(1, 3) == -1.0);
    CHECK(j2(2, 0) == 1.0);
    CHECK(j2(3, 1) == 1.0);

    for (int n = 1; n <= 4; ++n) {
        Mat j = standard_J(n);
        CHECK(max_abs_diff(j * j, -1.0 * Mat::identity(2 * n)) == 0.0);
    }
    CHECK_THROWS_AS(standard_J(0), Error);
}

TEST_CASE("is_symplectic accepts Sp(2) elements and rejects non-symplectic ones") {
    CHECK(is_symplectic(Mat::identity(2), 1e-9));
    CHECK(is_symplectic(diag22(2.0, 0.5), 1e-9));
    CHECK_FALSE(is_symplectic(diag22(2.0, 2.0), 1e-9));
    CHECK_THROWS_AS(is_symplectic(Mat::identity(3), 1e-9), Error);
    CHECK_THROWS_AS(is_symplectic(Mat::identity(2), 0.0), Error);
}

TEST_CASE("polar decomposition of already-factored inputs") {
    PolarParts pu = polar_decompose(SympMatrix(1, diag22(2.0, 0.5)));
    CHECK(max_abs_diff(pu.p, diag22(2.0, 0.5)) < 1e-12);
    CHECK(max_abs_diff(pu.u, Mat::identity(2)) < 1e-12);

    pu = polar_decompose(SympMatrix(1, rot(0.7)));
    CHECK(max_abs_diff(pu.p, Mat::identity(2)) < 1e-12);
    CHECK(max_abs_diff(pu.u, rot(0.7)) < 1e-12);
}

TEST_CASE("polar decomposition recovers the rotation factor of R(pi/3) diag(3, 1/3)") {
    Mat a = rot(kPi / 3.0) * diag22(3.0, 1.0 / 3.0);
    PolarParts pu = polar_decompose(SympMatrix(1, a));
    CHECK(max_abs_diff(pu.u, rot(kPi / 3.0)) < 1e-10);
    Mat p_expected = rot(kPi / 3.0) * diag22(3.0, 1.0 / 3.0) * rot(-kPi / 3.0);
    CHECK(max_abs_diff(pu.p, p_expected) < 1e-10);
    CHECK(max_abs_diff(pu.p * pu.u, a) < 1e-9);
}

TEST_CASE("polar decomposition refuses non-symplectic input") {
    CHECK_THROWS_AS(polar_decompose(SympMatrix(1, diag22(2.0, 2.0))), Error);
}

TEST_CASE("squared complex determinant on unitary blocks") {
    CHECK(std::abs(det_complex_sq(SympMatrix(1, Mat::identity(2))) - cplx(1.0, 0.0)) < 1e-12);

    double phi = 0.9;
    cplx expect = std::exp(cplx(0.0, 2.0 * phi));
    CHECK(std::abs(det_complex_sq(SympMatrix(1, rot(phi))) - expect) < 1e-12);

    // two blocks multiply the determinants
    SympPath p = rotation_path({0.4, 1.1}, 1.0, 8);
    cplx two = det_complex_sq(SympMatrix(2, p.endpoint()));
    CHECK(std::abs(two - std::exp(cplx(0.0, 2.0 * (0.4 + 1.1)))) < 1e-12);

    CHECK_THROWS_AS(det_complex_sq(SympMatrix(1, diag22(2.0, 0.5))), Error);
}

TEST_CASE("lift_angle on rotation paths") {
    SUBCASE("constant identity stays at zero") {
        SympPath p = rotation_path({0.0}, 1.0, 8);
        AngleTrack t = lift_angle(p);
        for (double th : t.theta)
            CHECK(std::fabs(th) < 1e-12);
    }
    SUBCASE("full turn lifts to 2 pi") {
        SympPath p = rotation_path({2.0 * kPi}, 1.0, 32);
        CHECK(lift_angle(p).total() == doctest::Approx(2.0 * kPi).epsilon(1e-10));
    }
    SUBCASE("opposite blocks cancel") {
        SympPath p = rotation_path({2.0 * kPi, -2.0 * kPi}, 1.0, 32);
        CHECK(std::fabs(lift_angle(p).total()) < 1e-10);
    }
    SUBCASE("coarse sampling trips the guard") {
        // two blocks pass the per-block construction guard but the summed
        // per-step increment lands in the lift's refusal band
        SympPath p = rotation_path({2.96, 2.96}, 1.0, 4);
        CHECK_THROWS_AS(lift_angle(p), Error);
    }
}

TEST_CASE("iterate_path follows the iteration rule") {
    SympPath p = rotation_path({kPi}, 1.0, 16);
    SUBCASE("k = 1 is the path itself") {
        SympPath q = iterate_path(p, 1);
        CHECK(q.size() == p.size());
        CHECK(max_abs_diff(q.endpoint(), p.endpoint()) == 0.0);
    }
    SUBCASE("a half-turn path iterates to the full turn") {
        SympPath q = iterate_path(p, 2);
        CHECK(q.duration() == doctest::Approx(2.0));
        for (size_t i = 0; i < q.size(); ++i) {
            double t = q.time(i);
            CHECK(max_abs_diff(q.matrix(i), rot(kPi * t)) < 1e-12);
        }
    }
    SUBCASE("endpoint is the k-th power") {
        SympPath p2 = rotation_path({0.8, -1.3}, 1.0, 16);
        Mat e3 = p2.endpoint() * p2.endpoint() * p2.endpoint();
        CHECK(max_abs_diff(iterate_path(p2, 3).endpoint(), e3) < 1e-12);
    }
}

TEST_CASE("catenate composes paths") {
    SympPath p = rotation_path({kPi}, 1.0, 16);
    SUBCASE("identity tail extends with a constant block") {
        SympPath tail = rotation_path({0.0}, 1.0, 4);
        SympPath cat = catenate(p, tail);
        CHECK(cat.duration() == doctest::Approx(2.0));
        CHECK(max_abs_diff(cat.endpoint(), p.endpoint()) < 1e-12);
    }
    SUBCASE("two half-turns compose to the full turn") {
        SympPath cat = catenate(p, p);
        for (size_t i = 0; i < cat.size(); ++i)
            CHECK(max_abs_diff(cat.matrix(i), rot(kPi * cat.time(i))) < 1e-12);
    }
    SUBCASE("endpoint is the product in composition order") {
        SympPath q = rotation_path({0.3, 0.4}, 1.0, 8);
        SympPath r = rotation_path({1.0, -0.2}, 1.0, 8);
        CHECK(max_abs_diff(catenate(q, r).endpoint(), r.endpoint() * q.endpoint()) < 1e-12);
    }
    SUBCASE("half-dimensions must match") {
        CHECK_THROWS_AS(catenate(p, rotation_path({1.0, 1.0}, 1.0, 8)), Error);
    }
}

TEST_CASE("rotation_path construction and guards") {
    SympPath loop = rotation_path({2.0 * kPi}, 1.0, 16);
    CHECK(max_abs_diff(loop.endpoint(), Mat::identity(2)) < 1e-12);

    SympPath half = rotation_path({kPi, -kPi}, 1.0, 16);
    CHECK(max_abs_diff(half.endpoint(), -1.0 * Mat::identity(4)) < 1e-12);

    CHECK_THROWS_AS(rotation_path({8.0}, 1.0, 4), Error); // 8/4 = 2 > pi/4
    CHECK_THROWS_AS(rotation_path({}, 1.0, 4), Error);
    CHECK_THROWS_AS(rotation_path({1.0}, -1.0, 4), Error);
}

TEST_CASE("path constructor enforces the invariants") {
    // must start at the identity
    CHECK_THROWS_AS(SympPath(1, {0.0, 1.0}, {rot(0.1), rot(0.2)}), Error);
    // strictly increasing times
    CHECK_THROWS_AS(SympPath(1, {0.0, 0.0}, {Mat::identity(2), rot(0.1)}), Error);
    // symplectic samples only
    CHECK_THROWS_AS(SympPath(1, {0.0, 1.0}, {Mat::identity(2), diag22(2.0, 2.0)}), Error);
}

TEST_CASE("reverse_inverse_path starts at the identity and inverts the endpoint") {
    SympPath p = rotation_path({0.7, -0.3}, 1.0, 16);
    SympPath r = reverse_inverse_path(p);
    CHECK(max_abs_diff(r.matrix(0), Mat::identity(4)) < 1e-12);
    CHECK(max_abs_diff(r.endpoint() * p.endpoint(), Mat::identity(4)) < 1e-12);
}

TEST_CASE("matrices accepted as symplectic have unit determinant") {
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(rng.range(0, 3));
        Mat a = random_symplectic(n, rng, 8);
        REQUIRE(is_symplectic(a, 1e-8));
        CHECK(det(a) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("the angle track reconstructs the squared determinant") {
    SympPath p = rotation_path({1.9, -0.8}, 1.0, 24);
    AngleTrack track = lift_angle(p);
    for (size_t i = 0; i < p.size(); ++i) {
        cplx expect = det_complex_sq(SympMatrix(2, p.matrix(i)));
        cplx from_theta = std::exp(cplx(0.0, 2.0 * track.theta[i]));
        CHECK(std::abs(expect - from_theta) < 1e-9);
    }
}
