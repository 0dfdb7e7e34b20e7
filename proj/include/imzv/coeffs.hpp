// Exact coefficient ring Q[t]: arbitrary-precision rationals and
// polynomials in a single variable t with rational coefficients.
#ifndef IMZV_COEFFS_HPP
#define IMZV_COEFFS_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace imzv {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

// Parse "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Binomial coefficient with the vanishing convention: C(n,k) = 0 whenever
// k < 0, k > n or n < 0.
Rational binom(long n, long k);

// Same value as an exact integer (no rational normalisation overhead).
mpz_class binom_z(long n, long k);

// Dense polynomial in t. coeffs_[d] is the coefficient of t^d; the highest
// stored coefficient is never zero, so the zero polynomial is empty.
class QtPoly {
public:
    QtPoly() = default;
    QtPoly(const Rational& c);  // NOLINT(google-explicit-constructor): constants embed naturally
    QtPoly(long c);             // NOLINT(google-explicit-constructor)
    QtPoly(std::initializer_list<Rational> ascending);

    static QtPoly t_power(unsigned degree, const Rational& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of t^d (zero beyond the degree).
    Rational coeff(std::size_t d) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // Number of nonzero coefficients.
    std::size_t term_count() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    QtPoly& operator+=(const QtPoly& q);
    QtPoly& operator-=(const QtPoly& q);
    QtPoly& operator*=(const QtPoly& q);
    QtPoly& operator*=(const Rational& c);
    // Multiply by t^k in place.
    QtPoly& shift(unsigned k);
    QtPoly operator-() const;

    friend QtPoly operator+(QtPoly p, const QtPoly& q) { return p += q; }
    friend QtPoly operator-(QtPoly p, const QtPoly& q) { return p -= q; }
    friend QtPoly operator*(const QtPoly& p, const QtPoly& q);
    friend bool operator==(const QtPoly& p, const QtPoly& q) { return p.coeffs_ == q.coeffs_; }

    Rational eval(const Rational& t0) const;
    double eval(double t0) const;

    // "2 - 3*t + t^2": ascending degree, explicit signs, "0" for zero.
    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

QtPoly qt_add(const QtPoly& p, const QtPoly& q);
QtPoly qt_mul(const QtPoly& p, const QtPoly& q);
Rational qt_eval(const QtPoly& p, const Rational& t0);

// Parse the textual form produced by QtPoly::to_string (also accepts
// products such as "3/2*t^2" and implicit unit coefficients).
QtPoly parse_qtpoly(std::string_view text);

}  // namespace imzv

#endif  // IMZV_COEFFS_HPP
