#include "doctest.h"

#include "reebmec/catalog.hpp"
#include "reebmec/mec.hpp"

using namespace reebmec;

TEST_CASE("catalog models validate and reproduce the known values") {
    for (int n = 2; n <= 10; ++n) {
        MBModel s = standard_sphere(n);
        CHECK(validate_mb(s).empty());
        MecValue v = mec_mb(s);
        CHECK(*v.chi_plus == Rational(1, 2));
        CHECK(*v.chi_minus == Rational(0));
    }
    CHECK_THROWS_AS(standard_sphere(1), Error);
}

TEST_CASE("sphere companions agree across the two routes") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(validate_af(standard_sphere_af(n)).empty());
        MecValue af = mec_af(standard_sphere_af(n));
        MecValue mb = mec_mb(standard_sphere(n));
        CHECK(*af.chi_plus == *mb.chi_plus);
        CHECK(*af.chi_minus == *mb.chi_minus);
        CHECK(enumerate_generators(standard_sphere_af(n), 1000) ==
              enumerate_generators(standard_sphere(n), 1000));
    }
}

TEST_CASE("Brieskorn family invariants") {
    MBModel u = ustilovsky(5, 7);
    CHECK(e_invariant(u.maximal[0].strata) == 29); // (n-1)p + 1 = 4*7 + 1
    CHECK(*mec_mb(u).chi_plus == Rational(29, 46));

    // ((n-1)p+1) / (2((n-2)p+2)) across the allowed exponents
    for (long long p : {7LL, 9LL, 15LL, 17LL, 23LL}) {
        for (int n : {3, 5, 7}) {
            MecValue v = mec_mb(ustilovsky(n, p));
            CHECK(*v.chi_plus == Rational((n - 1) * p + 1, 2 * ((n - 2) * p + 2)));
            CHECK(*v.chi_minus == Rational(0));
        }
    }

    SUBCASE("different exponents are distinguished") {
        CHECK(*mec_mb(ustilovsky(5, 7)).chi_plus != *mec_mb(ustilovsky(5, 9)).chi_plus);
        CHECK(Rational(29, 46) != Rational(37, 58));
    }
    SUBCASE("parameter constraints") {
        CHECK_THROWS_AS(ustilovsky(4, 7), Error);  // n must be odd
        CHECK_THROWS_AS(ustilovsky(5, 3), Error);  // p must be +-1 mod 8
        CHECK_THROWS_AS(ustilovsky(5, -7), Error);
        CHECK_NOTHROW(ustilovsky(5, 9));
        CHECK_NOTHROW(ustilovsky(5, 17));
    }
}

TEST_CASE("prequantization closed form") {
    MecValue bundle = prequantization(2, 2);
    MecValue sphere = mec_mb(standard_sphere(2));
    CHECK(*bundle.chi_plus == *sphere.chi_plus);
    CHECK(*bundle.chi_minus == *sphere.chi_minus);
    CHECK(*bundle.chi == *sphere.chi);

    CHECK(*prequantization(0, 5).chi_plus == Rational(0));

    SUBCASE("negative pairing swaps the roles of the halves") {
        MecValue v = prequantization(6, -3);
        CHECK(*v.chi_plus == Rational(0));
        CHECK(*v.chi_minus == Rational(-1));
    }
    SUBCASE("the Morse-Bott encoding computes the same value") {
        MecValue model = mec_mb(prequantization_mb(6, -3));
        CHECK(*model.chi_plus == Rational(0));
        CHECK(*model.chi_minus == Rational(-1));
        MecValue pos = mec_mb(prequantization_mb(2, 2));
        CHECK(*pos.chi_plus == Rational(1, 2));
    }
    CHECK_THROWS_AS(prequantization(2, 0), Error);
}

TEST_CASE("catalog resolution for the CLI") {
    ResolvedCatalogModel s = resolve_catalog("standard_sphere", {{"n", 3}});
    REQUIRE(s.mb);
    CHECK(s.mb->n == 3);

    ResolvedCatalogModel u = resolve_catalog("ustilovsky", {});
    REQUIRE(u.mb); // defaults n = 5, p = 7
    CHECK(*mec_mb(*u.mb).chi_plus == Rational(29, 46));

    CHECK_THROWS_AS(resolve_catalog("nonsense", {}), Error);
    CHECK(catalog_entries().size() >= 4);
}
