#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "imzv/verify.hpp"

using namespace imzv;

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    for (const char* n : {"lemma31", "eq42", "theorem22", "prop32", "eq48", "height2", "prop41", "cor42", "prop43",
                          "euler", "homomorphism-numeric", "duality-numeric"}) {
        CAPTURE(n);
        CHECK(is_suite(n));
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    }
    CHECK_FALSE(is_suite("nonsense"));
    CHECK_THROWS_AS(run_suite("nonsense"), std::invalid_argument);
}

TEST_CASE("small exact suites pass and count their cases") {
    VerifyOptions o;
    o.max = 3;
    const VerifyReport r = run_suite("lemma31", o);
    CHECK(r.ok());
    CHECK(r.cases_total == 9);
    CHECK(r.failures.empty());
    CHECK(r.suite == "lemma31");

    VerifyOptions e;
    e.max = 3;
    CHECK(run_suite("euler", e).cases_total == 4);

    VerifyOptions k;
    k.k = 3;
    const VerifyReport odd = run_suite("prop41", k);
    CHECK(odd.ok());
    CHECK(odd.cases_total >= 1);
}

TEST_CASE("invalid bounds are rejected") {
    VerifyOptions o;
    o.max = 0;
    CHECK_THROWS_AS(run_suite("lemma31", o), std::invalid_argument);
    VerifyOptions big;
    big.max_weight = 40;
    CHECK_THROWS_AS(run_suite("duality-numeric", big), std::invalid_argument);
}

TEST_CASE("reports round-trip through JSON with a schema version") {
    VerifyOptions o;
    o.max = 2;
    VerifyReport r = run_suite("eq42", o);
    r.failures.push_back({{{"m", 1}}, "xy", "yx", {"xy: 1 vs 0"}});
    const auto j = r.to_json();
    CHECK(j.at("schema") == 1);
    const VerifyReport back = VerifyReport::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.failures.size() == 1);
    CHECK(back.failures[0].diff == std::vector<std::string>{"xy: 1 vs 0"});
    CHECK_FALSE(r.to_text().empty());
}

TEST_CASE("numeric suites at reduced size") {
    VerifyOptions h;
    h.count = 3;
    h.max_weight = 5;
    const VerifyReport hom = run_suite("homomorphism-numeric", h);
    CHECK(hom.ok());
    CHECK(hom.cases_total == 9);  // three values of t per pair

    VerifyOptions d;
    d.max_weight = 5;
    const VerifyReport dual = run_suite("duality-numeric", d);
    CHECK(dual.ok());
    CHECK(dual.cases_total == 15);  // admissible indices of weight 2..5
}
