#include "doctest.h"

#include "reebmec/catalog.hpp"
#include "reebmec/mec.hpp"

using namespace reebmec;

namespace {

AFModel single_family_model(int n, OrbitType type, int sigma, Rational delta) {
    AFModel m;
    m.n = n;
    m.no_low_degree = true;
    PrincipalOrbitFamily f;
    f.label = "f";
    f.orbit_type = type;
    f.sigma = sigma;
    f.delta = delta;
    m.families.push_back(f);
    return m;
}

} // namespace

TEST_CASE("MecValue combines its halves") {
    MecValue v = MecValue::from_halves(Rational(1, 2), Rational(0));
    CHECK(*v.chi == Rational(1, 4));
    CHECK(v.halves_defined());

    MecValue c = MecValue::chi_only(Rational(3, 4));
    CHECK_FALSE(c.halves_defined());
    CHECK(*c.chi == Rational(3, 4));
}

TEST_CASE("mec_af on the sphere companion and small fixtures") {
    MecValue sphere = mec_af(standard_sphere_af(2));
    CHECK(*sphere.chi_plus == Rational(1, 2));
    CHECK(*sphere.chi_minus == Rational(0));

    SUBCASE("empty model sums to zero") {
        AFModel empty;
        empty.n = 3;
        empty.no_low_degree = true;
        MecValue v = mec_af(empty);
        CHECK(*v.chi_plus == Rational(0));
        CHECK(*v.chi_minus == Rational(0));
        CHECK(*v.chi == Rational(0));
    }
    SUBCASE("type II families contribute with weight one half") {
        MecValue v = mec_af(single_family_model(3, OrbitType::II, 1, Rational(2)));
        CHECK(*v.chi_plus == Rational(1, 4));
    }
    SUBCASE("the no-low-degree hypothesis is enforced") {
        AFModel m = standard_sphere_af(2);
        m.no_low_degree = false;
        CHECK_THROWS_AS(mec_af(m), Error);
    }
}

TEST_CASE("mec_mb on catalog models") {
    for (int n = 2; n <= 6; ++n) {
        MecValue v = mec_mb(standard_sphere(n));
        CHECK(*v.chi_plus == Rational(1, 2));
        CHECK(*v.chi_minus == Rational(0));
        CHECK(*v.chi == Rational(1, 4));
    }
    MecValue u = mec_mb(ustilovsky(5, 7));
    CHECK(*u.chi_plus == Rational(29, 46));
    CHECK(*u.chi_minus == Rational(0));

    SUBCASE("zero mean index leaves the MEC undefined") {
        MBModel m = standard_sphere(2);
        m.maximal[0].mu_rs_rule.a = Rational(0);
        m.maximal[0].mu_rs_rule.b = Rational(4); // keep the degree integral and even
        CHECK_THROWS_AS(mec_mb(m), Error);
        try {
            mec_mb(m);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::undefined_result);
        }
    }
}

TEST_CASE("truncated Euler characteristic of the sphere complexes") {
    CHECK(truncated_euler(standard_sphere(2), 100) == Rational(50));
    CHECK(truncated_euler(standard_sphere_af(2), 100) == Rational(50));
    CHECK(truncated_euler(standard_sphere(2), -5) == Rational(0)); // below l+
    // n = 3: degrees start at 4, window starts at l+ = 2
    CHECK(truncated_euler(standard_sphere(3), 100) == Rational(49));
}

TEST_CASE("type II families carry weight one half through the oracle") {
    // one even family and one odd (type II) family; the truncated complex
    // must converge to 1/4 - (1/2)(1/3) = 1/12
    AFModel m;
    m.n = 2;
    m.no_low_degree = true;
    PrincipalOrbitFamily x;
    x.label = "x";
    x.orbit_type = OrbitType::I;
    x.sigma = 1;
    x.delta = Rational(4);
    x.degree_rule = DegreeRule{4, 0};
    PrincipalOrbitFamily y;
    y.label = "y";
    y.orbit_type = OrbitType::II;
    y.sigma = -1;
    y.delta = Rational(3);
    y.degree_rule = DegreeRule{3, 0};
    m.families = {x, y};
    REQUIRE(validate_af(m).empty());

    MecValue v = mec_af(m);
    CHECK(*v.chi_plus == Rational(1, 12));

    // counts by hand: floor(N/4) even generators minus the odd multiples of 3
    CHECK(truncated_euler(m, 1200) == Rational(100)); // 300 - 200
    CHECK(truncated_euler(m, 100) == Rational(8));    // 25 - 17

    OracleReport rep = oracle_convergence(m, {100, 1000, 10000, 100000});
    CHECK(rep.closed_form == Rational(1, 12));
    for (const Rational& dev : rep.deviations)
        CHECK(dev <= Rational(2));
}

TEST_CASE("the mirror window matches the negative-side magnitude") {
    AFModel m = single_family_model(2, OrbitType::I, 1, Rational(-4));
    m.families[0].degree_rule = DegreeRule{-4, 0};
    MecValue v = mec_af(m);
    // the formula carries the sign of Delta; the window count carries the
    // generator parity
    CHECK(*v.chi_minus == Rational(-1, 4));
    CHECK(truncated_euler_minus(m, 100) == Rational(25));
}

TEST_CASE("oracle convergence on the sphere") {
    OracleReport rep = oracle_convergence(standard_sphere(2), {100, 1000, 10000});
    CHECK(rep.estimates == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    CHECK(rep.fitted_limit == Rational(1, 2));
    CHECK(rep.max_dev == Rational(0));

    OracleReport rep3 = oracle_convergence(standard_sphere(3), {100, 1000, 10000});
    CHECK(rep3.max_dev <= Rational(2));
    CHECK(rep3.closed_form == Rational(1, 2));

    CHECK_THROWS_AS(oracle_convergence(standard_sphere(2), {1000, 100}), Error);
    CHECK_THROWS_AS(oracle_convergence(standard_sphere(2), {}), Error);

    SUBCASE("a model with no generators is all zeros") {
        AFModel empty;
        empty.n = 2;
        empty.no_low_degree = true;
        OracleReport rep = oracle_convergence(empty, {100, 1000});
        for (const Rational& e : rep.estimates)
            CHECK(e == Rational(0));
        CHECK(rep.fitted_limit == Rational(0));
        CHECK(rep.max_dev == Rational(0));
    }
}

TEST_CASE("surgery generator degrees") {
    CHECK(surgery_generators(2, 1, 7) == std::vector<long long>{1, 3, 5, 7});
    CHECK(surgery_generators(3, 1, 8) == std::vector<long long>{3, 5, 7});
    CHECK(surgery_generators(3, 1, 2) == std::vector<long long>{});
    CHECK_THROWS_AS(surgery_generators(3, 3, 10), Error); // not subcritical
    CHECK_THROWS_AS(surgery_generators(3, 0, 10), Error);
}

TEST_CASE("handle family data") {
    PrincipalOrbitFamily f = handle_family(3, 1);
    CHECK(f.sigma == -1);
    CHECK(f.delta == Rational(2));
    CHECK(f.degree_rule->at(1) == 3); // first degree

    CHECK(handle_family(4, 2).sigma == 1);
    CHECK(handle_family(4, 2).degree_rule->at(1) == 4);
    CHECK(handle_family(2, 1).degree_rule->at(1) == 1); // the dimension-3 connect-sum orbit
}

TEST_CASE("af_surgery injects the handle family") {
    AFModel base = standard_sphere_af(3);
    AFModel after = af_surgery(base, 1);
    CHECK(after.families.size() == base.families.size() + 1);
    const PrincipalOrbitFamily& f = after.families.back();
    CHECK(f.delta == Rational(2));
    CHECK(f.sigma == -1);
    CHECK(f.degree_rule->at(1) == 3);
    CHECK(after.no_low_degree);

    CHECK(*mec_af(after).chi_plus == Rational(0)); // 1/2 - 1/2

    SUBCASE("k = 2 flips the sign") {
        CHECK(af_surgery(base, 2).families.back().sigma == 1);
    }
    SUBCASE("supercritical indices are rejected") {
        CHECK_THROWS_AS(af_surgery(base, 3), Error);
    }
    SUBCASE("dimension 3 is refused in cylindrical mode") {
        CHECK_THROWS_AS(af_surgery(standard_sphere_af(2), 1), Error);
        try {
            af_surgery(standard_sphere_af(2), 1);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::dimension_guard);
        }
        AFModel lin = af_surgery(standard_sphere_af(2), 1, true);
        CHECK_FALSE(lin.no_low_degree); // the degree-1 orbit is on the books
    }
}

TEST_CASE("surgery_apply in both modes") {
    MecValue sphere = MecValue::from_halves(Rational(1, 2), Rational(0));

    SUBCASE("generator mode moves chi+ only") {
        MecValue v = surgery_apply(sphere, {1, 3, SurgeryMode::generator, false});
        CHECK(*v.chi_plus == Rational(0));
        CHECK(*v.chi_minus == Rational(0));
        CHECK(*v.chi == Rational(0));
        MecValue w = surgery_apply(v, {1, 3, SurgeryMode::generator, false});
        CHECK(*w.chi_plus == Rational(-1, 2)); // two odd surgeries shift by -1
    }
    SUBCASE("corollary mode shifts chi as stated") {
        MecValue v = surgery_apply(sphere, {2, 3, SurgeryMode::corollary, false});
        CHECK(*v.chi == Rational(3, 4)); // 1/4 + 1/2
        CHECK_FALSE(v.halves_defined());
    }
    SUBCASE("undefined inputs are refused") {
        CHECK_THROWS_AS(surgery_apply(MecValue{}, {1, 3, SurgeryMode::corollary, false}), Error);
    }
    SUBCASE("dimension-3 guard applies at the value level too") {
        CHECK_THROWS_AS(surgery_apply(sphere, {1, 2, SurgeryMode::generator, false}), Error);
        MecValue lin = surgery_apply(sphere, {1, 2, SurgeryMode::generator, true});
        CHECK(*lin.chi_plus == Rational(0));
    }
}

TEST_CASE("surgery reachability is a half-integer lattice condition") {
    MecValue sphere = MecValue::from_halves(Rational(1, 2), Rational(0));
    MecValue usti = mec_mb(ustilovsky(5, 7));

    Reachability r = reachability_necessary(sphere, usti, SurgeryMode::generator);
    CHECK_FALSE(r.reachable);
    CHECK(r.difference == Rational(3, 23));

    Reachability same = reachability_necessary(sphere, sphere, SurgeryMode::generator);
    CHECK(same.reachable);
    CHECK(same.min_surgeries == 0);

    MecValue shifted = MecValue::from_halves(Rational(0), Rational(0));
    Reachability one = reachability_necessary(sphere, shifted, SurgeryMode::generator);
    CHECK(one.reachable);
    CHECK(one.net_half_units == -1); // one odd-index surgery
    CHECK(one.min_surgeries == 1);
}
