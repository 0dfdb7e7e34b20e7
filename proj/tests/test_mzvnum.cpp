#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "frozen_values.hpp"
#include "imzv/compositions.hpp"
#include "imzv/mzvnum.hpp"
#include "oracles/reference_constants.hpp"

using namespace imzv;

TEST_CASE("reference series agree with the frozen anchors") {
    CHECK(std::fabs(static_cast<double>(reference::zeta2()) - frozen::kZeta2) < frozen::kAnchorTol);
    CHECK(std::fabs(static_cast<double>(reference::zeta3()) - frozen::kZeta3) < frozen::kAnchorTol);
    CHECK(std::fabs(static_cast<double>(reference::zeta4()) - frozen::kZeta4) < frozen::kAnchorTol);
    CHECK(std::fabs(static_cast<double>(reference::zeta_em(2) - reference::zeta2())) < 1e-15);
}

TEST_CASE("single zeta values agree with the reference series") {
    const double z2 = static_cast<double>(reference::zeta2());
    const double z3 = static_cast<double>(reference::zeta3());
    const double z4 = static_cast<double>(reference::zeta4());
    for (auto method : {EvalMethod::PartialSums, EvalMethod::HalfSplit, EvalMethod::Auto}) {
        CAPTURE(to_string(method));
        const EvalResult r2 = eval_mzv(parse_index("(2)"), 1e-9, method);
        CHECK(r2.error_estimate > 0.0);
        CHECK(std::fabs(r2.value - z2) <= r2.error_estimate);
        // Truncated series converge like 1/N for l_1 = 2; the other methods reach 1e-9.
        CHECK(r2.tolerance_met == (method != EvalMethod::PartialSums));
        if (r2.tolerance_met) CHECK(std::fabs(r2.value - z2) < 1e-9);
        CHECK(std::fabs(eval_mzv(parse_index("(3)"), 1e-9, method).value - z3) < 1e-9);
        CHECK(std::fabs(eval_mzv(parse_index("(4)"), 1e-9, method).value - z4) < 1e-9);
    }
    // zeta(2,1) = zeta(3)
    CHECK(std::fabs(eval_mzv(parse_index("(2,1)")).value - z3) < 1e-9);
}

TEST_CASE("evaluation reports the method, cutoff and envelope") {
    const EvalResult r = eval_mzv_partial_sums(parse_index("(3,1)"), 1000);
    CHECK(r.cutoff_used == 2000);
    CHECK(r.method == EvalMethod::PartialSums);
    CHECK(std::fabs(r.value - std::pow(static_cast<double>(reference::pi()), 4) / 360.0) < 1e-6);
    CHECK_THROWS_AS(eval_mzv(parse_index("(1,2)")), std::invalid_argument);
    CHECK_THROWS_AS(eval_mzv(parse_index("(13)")), std::invalid_argument);
    CHECK_THROWS_AS(eval_mzv_partial_sums(parse_index("(2)"), 0), std::invalid_argument);
    CHECK(parse_eval_method("half-split") == EvalMethod::HalfSplit);
    CHECK_THROWS_AS(parse_eval_method("fast"), std::invalid_argument);
}

TEST_CASE("the two evaluation methods agree within their estimates up to weight 6") {
    for (int w = 2; w <= 6; ++w)
        for (const auto& parts : positive_compositions(w)) {
            const Index idx(parts);
            if (!idx.admissible()) continue;
            CAPTURE(idx.str());
            const EvalResult a = eval_mzv_half_split(idx);
            const EvalResult b = eval_mzv_partial_sums(idx);
            CHECK(std::fabs(a.value - b.value) <= a.error_estimate + b.error_estimate + 1e-12);
        }
}

TEST_CASE("raising the cutoff never more than doubles the error estimate (property)") {
    for (int w = 2; w <= 8; ++w)
        for (const auto& parts : positive_compositions(w)) {
            const Index idx(parts);
            if (!idx.admissible() || idx.depth() > 3) continue;
            CAPTURE(idx.str());
            double previous = eval_mzv_partial_sums(idx, 250).error_estimate;
            for (long cutoff : {500L, 1000L, 2000L, 4000L}) {
                const double e = eval_mzv_partial_sums(idx, cutoff).error_estimate;
                CHECK(e <= 2.0 * previous);
                previous = e;
            }
        }
}

TEST_CASE("combinations: exact scalars, shared targets and star values") {
    EvalSession session;
    const EvalResult sq = session.eval_combo(parse_zeta_combo("2*z(2,2) + 4*z(3,1)"), 0, 1e-8);
    const double z2 = static_cast<double>(reference::zeta2());
    CHECK(std::fabs(sq.value - z2 * z2) < 1e-8);
    CHECK(std::fabs(sq.value - frozen::kZeta2Squared) < frozen::kAnchorTol);
    CHECK(sq.tolerance_met);
    CHECK(session.cache_size() == 2);
    const EvalResult half = eval_combo(parse_zeta_combo("1/2 + z(2) - z(2)"), 0);
    CHECK(half.value == 0.5);
    const EvalResult star = eval_combo(parse_zeta_combo("zs(5,1)"), 0, 1e-8);
    const long double s51 = reference::zeta2() * reference::zeta4() - reference::zeta3() * reference::zeta3() / 2;
    CHECK(std::fabs(star.value - static_cast<double>(s51)) < 1e-8);
    CHECK(std::fabs(star.value - frozen::kZetaStar51) < frozen::kAnchorTol);
    const EvalResult interp =
        eval_combo(parse_zeta_combo("z(7,1)", Interpretation::Interpolated), 1, 1e-8);
    CHECK(std::fabs(interp.value - frozen::kZetaStar71) < frozen::kAnchorTol);
}
