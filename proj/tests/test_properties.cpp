#include "doctest.h"

#include "reebmec/verify.hpp"

using namespace reebmec;

// The randomized invariants run through the same drivers the CLI exposes;
// two seeds here, the acceptance suite runs the full-size corpora.
TEST_CASE("seeded property suites pass") {
    for (uint64_t seed : {1ull, 2ull}) {
        for (const std::string& name : verify_suite_names()) {
            CAPTURE(name);
            CAPTURE(seed);
            for (const PropertyResult& r : run_verify_suite(name, seed)) {
                INFO(r.property << ": " << r.detail);
                CHECK(r.pass);
            }
        }
    }
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_verify_suite("nope", 1), Error);
}

TEST_CASE("suite reports are deterministic for a fixed seed") {
    auto a = run_verify_suite("quasimorphism", 7);
    auto b = run_verify_suite("quasimorphism", 7);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].detail == b[i].detail);
        CHECK(a[i].pass == b[i].pass);
    }
}
