#include <doctest.h>

#include <random>
#include <stdexcept>

#include "imzv/coeffs.hpp"

using namespace imzv;

namespace {

// mpq_class(num, den) does not reduce; arithmetic expects canonical operands.
Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

QtPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(-1, 3);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    QtPoly p;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) p += QtPoly::t_power(static_cast<unsigned>(i), frac(num(rng), den(rng)));
    return p;
}

}  // namespace

TEST_CASE("parse_rational accepts integers and fractions in lowest terms") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("binomial coefficients vanish outside the triangle") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(4, -1) == 0);
    CHECK(binom(4, 5) == 0);
    CHECK(binom(-1, 0) == 0);
    CHECK(binom_z(40, 20) == mpz_class("137846528820"));
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= n; ++k) CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("QtPoly text form is ascending with explicit signs") {
    CHECK(QtPoly().to_string() == "0");
    CHECK(QtPoly({2, -3, 1}).to_string() == "2 - 3*t + t^2");
    CHECK(QtPoly({0, Rational(-1, 2)}).to_string() == "-1/2*t");
    CHECK(QtPoly({2, -3, 1}).degree() == 2);
    CHECK(QtPoly().degree() == -1);
    CHECK(QtPoly({1, 0, 0}).degree() == 0);  // trailing zeros are dropped
    CHECK(parse_qtpoly("3/2*t^2") == QtPoly::t_power(2, Rational(3, 2)));
    CHECK(parse_qtpoly("-t") == QtPoly({0, -1}));
}

TEST_CASE("rational arithmetic is exact (property)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 500; ++i) {
        const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rational sum = frac(a, b) + frac(c, d);
        // Cross-multiplication: sum * b * d == a * d + c * b exactly.
        CHECK(sum * b * d == Rational(a * d + c * b));
        CHECK(mpz_class(gcd(sum.get_num(), sum.get_den())) == 1);
        CHECK(sum.get_den() > 0);
    }
}

TEST_CASE("QtPoly satisfies the commutative ring axioms (property)") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const QtPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + QtPoly() == p);
        CHECK(p * QtPoly(1) == p);
        CHECK((p - p).is_zero());
        CHECK(qt_add(p, q) == p + q);
        CHECK(qt_mul(p, q) == p * q);
        CHECK(parse_qtpoly(p.to_string()) == p);
    }
}

TEST_CASE("evaluation at t0 is a ring homomorphism (property)") {
    std::mt19937_64 rng(13);
    const Rational points[] = {Rational(0), Rational(1, 2), Rational(1), Rational(-3, 7)};
    for (int i = 0; i < 200; ++i) {
        const QtPoly p = random_poly(rng), q = random_poly(rng);
        for (const auto& t0 : points) {
            CHECK(qt_eval(p * q, t0) == qt_eval(p, t0) * qt_eval(q, t0));
            CHECK(qt_eval(p + q, t0) == qt_eval(p, t0) + qt_eval(q, t0));
        }
    }
}
