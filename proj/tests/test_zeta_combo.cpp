#include <doctest.h>

#include <random>
#include <stdexcept>

#include "frozen_values.hpp"
#include "imzv/compositions.hpp"
#include "imzv/tshuffle.hpp"
#include "imzv/zeta_combo.hpp"
#include "test_support.hpp"

using namespace imzv;

namespace {

ZetaCombo interpolated(const char* idx) { return ZetaCombo(Interpretation::Interpolated, parse_index(idx)); }

HElement random_h0(std::mt19937_64& rng) {
    std::vector<Word> adm;
    for (const auto& w : support::words_up_to(5, true))
        if (is_admissible(w)) adm.push_back(w);
    std::uniform_int_distribution<std::size_t> pick(0, adm.size() - 1);
    std::uniform_int_distribution<int> coef(-4, 4);
    HElement e;
    for (int i = 0; i < 3; ++i) e.add_term(adm[pick(rng)], QtPoly({coef(rng), coef(rng)}));
    return e;
}

}  // namespace

TEST_CASE("interpolated images of products match the frozen values") {
    for (const auto& p : frozen::kZetaProducts) {
        CAPTURE(p.a);
        CAPTURE(p.b);
        const Word a = word_from_index(parse_index(p.a));
        const Word b = word_from_index(parse_index(p.b));
        const ZetaCombo zc = zt_map(tshuffle_words(a, b));
        CHECK(zc.to_text() == p.text);
        CHECK(zc == parse_zeta_combo(p.text, Interpretation::Interpolated));
    }
}

TEST_CASE("expansions match the frozen values") {
    for (const auto& e : frozen::kExpansions) {
        CAPTURE(e.index);
        const ZetaCombo zc = expand_index(parse_index(e.index));
        CHECK(zc.interpretation() == Interpretation::Plain);
        CHECK(zc.to_text() == e.text);
    }
}

TEST_CASE("zt_map sends the empty word to the scalar part and rejects non-admissible words") {
    const ZetaCombo zc = zt_map(parse_helement("2*1 + xy"));
    CHECK(zc.scalar_part() == QtPoly(2));
    CHECK(zc.coeff(parse_index("(2)")) == QtPoly(1));
    CHECK_THROWS_AS(zt_map(parse_helement("yy")), std::invalid_argument);
    CHECK_THROWS_AS(ZetaCombo(Interpretation::Plain, parse_index("(1,2)")), std::invalid_argument);
}

TEST_CASE("zt_map is linear (property)") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const HElement u = random_h0(rng), v = random_h0(rng);
        const QtPoly c({Rational(i % 5 - 2), Rational(1, 1 + i % 3)});
        CHECK(zt_map(u + v) == zt_map(u) + zt_map(v));
        CHECK(zt_map(c * u) == zc_mul_scalar(c, zt_map(u)));
    }
}

TEST_CASE("expansion: identity at t = 0, at most 2^{n-1} terms, weight preserved (property)") {
    for (int w = 2; w <= 9; ++w)
        for (const auto& parts : positive_compositions(w)) {
            const Index idx(parts);
            if (!idx.admissible()) continue;
            const ZetaCombo ex = expand_index(idx);
            CHECK(ex.eval_t(0) == ZetaCombo(Interpretation::Plain, idx));
            CHECK(ex.terms().size() <= (std::size_t{1} << (idx.depth() - 1)));
            for (const auto& [j, c] : ex.terms()) {
                CHECK(j.weight() == idx.weight());
                CHECK(c.term_count() == 1);
                CHECK(c.degree() == idx.depth() - j.depth());
            }
        }
}

TEST_CASE("star specialisation and plain rewriting") {
    const ZetaCombo zs = star_specialize(interpolated("(2,1)"));
    CHECK(zs.interpretation() == Interpretation::Star);
    CHECK(zs.to_text() == "zs(2,1)");
    CHECK(to_plain_at(zs, 0) == parse_zeta_combo("z(2,1) + z(3)"));
    CHECK(to_plain_at(interpolated("(2,1)"), Rational(1, 2)) == parse_zeta_combo("z(2,1) + 1/2*z(3)"));
    CHECK_THROWS_AS(star_specialize(ZetaCombo(Interpretation::Plain, parse_index("(2)"))), std::invalid_argument);
}

TEST_CASE("parsing combos") {
    const ZetaCombo zc = parse_zeta_combo("2*z(2,2)+4*z(3,1) - t*z(4) + 1/2");
    CHECK(zc.coeff(parse_index("(2,2)")) == QtPoly(2));
    CHECK(zc.coeff(parse_index("(4)")) == QtPoly({0, -1}));
    CHECK(zc.scalar_part() == QtPoly(Rational(1, 2)));
    CHECK(parse_zeta_combo("(1 - t)*zs(2,1)").interpretation() == Interpretation::Star);
    CHECK_THROWS_AS(parse_zeta_combo("z(2) + zs(3)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zeta_combo("z(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zeta_combo("2*q(2)"), std::invalid_argument);
    CHECK_THROWS_AS(zt_map(HElement()) += parse_zeta_combo("zs(2)"), std::invalid_argument);
}

TEST_CASE("combo JSON round-trips (property)") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 50; ++i) {
        const ZetaCombo zc = zt_map(random_h0(rng));
        CHECK(ZetaCombo::from_json(zc.to_json()) == zc);
        const ZetaCombo ex = expand_interpolated(zc);
        CHECK(ZetaCombo::from_json(ex.to_json()) == ex);
        CHECK(parse_zeta_combo(ex.to_text()) == ex);
    }
}

TEST_CASE("in-place arithmetic with itself") {
    ZetaCombo zc = parse_zeta_combo("2*z(2) + 1");
    zc += zc;
    CHECK(zc == parse_zeta_combo("4*z(2) + 2"));
    zc -= zc;
    CHECK(zc.is_zero());
}
