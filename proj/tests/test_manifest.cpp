#include "doctest.h"

#include "reebmec/catalog.hpp"
#include "reebmec/manifest.hpp"

using namespace reebmec;

TEST_CASE("manifest round trip preserves the MEC") {
    SUBCASE("Morse-Bott models") {
        for (int n = 2; n <= 4; ++n) {
            MBModel m = standard_sphere(n);
            Manifest back = parse_manifest(manifest_json(m));
            REQUIRE(back.mb);
            CHECK(*mec_mb(*back.mb).chi_plus == *mec_mb(m).chi_plus);
            CHECK(validate_mb(*back.mb).empty());
        }
        MBModel u = ustilovsky(5, 7);
        Manifest back = parse_manifest(manifest_json(u));
        CHECK(*mec_mb(*back.mb).chi_plus == Rational(29, 46));
    }
    SUBCASE("asymptotically finite models") {
        AFModel m = standard_sphere_af(3);
        Manifest back = parse_manifest(manifest_json(m));
        REQUIRE(back.af);
        CHECK(*mec_af(*back.af).chi_plus == Rational(1, 2));
        CHECK(enumerate_generators(*back.af, 50) == enumerate_generators(m, 50));
    }
    SUBCASE("metadata passes through") {
        json meta = {{"source", "test"}};
        Manifest back = parse_manifest(manifest_json(standard_sphere(2), meta));
        CHECK(back.metadata.at("source") == "test");
    }
}

TEST_CASE("manifest rejects unknown and malformed fields with locations") {
    json doc = manifest_json(standard_sphere(2));
    SUBCASE("unknown top-level key") {
        doc["surprise"] = 1;
        CHECK_THROWS_WITH_AS(parse_manifest(doc), doctest::Contains("surprise"), Error);
    }
    SUBCASE("unknown stratum key, with the path to it") {
        doc["maximal"][0]["strata"][0]["stab"] = 3;
        CHECK_THROWS_WITH_AS(parse_manifest(doc),
                             doctest::Contains("maximal[0]/strata[0]"), Error);
    }
    SUBCASE("bad kind") {
        doc["kind"] = "other";
        CHECK_THROWS_AS(parse_manifest(doc), Error);
    }
    SUBCASE("missing required key") {
        doc.erase("good_only");
        CHECK_THROWS_WITH_AS(parse_manifest(doc), doctest::Contains("good_only"), Error);
    }
    SUBCASE("parse errors carry position info") {
        try {
            parse_manifest_text("{\"kind\": \"mb\", ");
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::invalid_input);
            CHECK(std::string(e.what()).find("parse error") != std::string::npos);
        }
    }
}

TEST_CASE("rationals in manifests accept all three encodings") {
    json doc = {{"kind", "af"},
                {"n", 2},
                {"no_low_degree", true},
                {"families", json::array({json{{"label", "a"},
                                               {"orbit_type", "I"},
                                               {"sigma", 1},
                                               {"delta", "4/1"}},
                                          json{{"label", "b"},
                                               {"orbit_type", "I"},
                                               {"sigma", 1},
                                               {"delta", json{{"num", 4}, {"den", 1}}}},
                                          json{{"label", "c"},
                                               {"orbit_type", "I"},
                                               {"sigma", 1},
                                               {"delta", 4}}})}};
    Manifest m = parse_manifest(doc);
    for (const PrincipalOrbitFamily& f : m.af->families)
        CHECK(f.delta == Rational(4));
}

TEST_CASE("machine MEC output uses num/den objects") {
    json out = mec_json(MecValue::from_halves(Rational(1, 2), Rational(0)));
    CHECK(out["chi_plus"]["num"] == 1);
    CHECK(out["chi_plus"]["den"] == 2);
    CHECK(out["chi"]["den"] == 4);
    json undef = mec_json(MecValue::chi_only(Rational(1)));
    CHECK(undef["chi_plus"].is_null());
}

TEST_CASE("path exchange format round trips and validates") {
    SympPath p = rotation_path({1.3, -0.6}, 1.0, 12);
    SympPath back = parse_path_json(path_json(p));
    CHECK(back.n() == 2);
    CHECK(back.size() == p.size());
    for (size_t i = 0; i < p.size(); ++i)
        CHECK(max_abs_diff(back.matrix(i), p.matrix(i)) < 1e-12);

    SUBCASE("the reader enforces the path invariants") {
        json doc = path_json(p);
        doc[0]["A"][0] = 2.0; // first sample no longer the identity
        CHECK_THROWS_AS(parse_path_json(doc), Error);
    }
    SUBCASE("matrix sizes must be consistent") {
        json doc = path_json(p);
        doc[1]["A"].push_back(0.0);
        CHECK_THROWS_AS(parse_path_json(doc), Error);
    }
    SUBCASE("unknown sample keys are rejected") {
        json doc = path_json(p);
        doc[0]["extra"] = 1;
        CHECK_THROWS_AS(parse_path_json(doc), Error);
    }
}
