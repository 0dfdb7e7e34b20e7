#include "imzv/coeffs.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace imzv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = slash == std::string_view::npos ? text : text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    const mpz_class nz{std::string(num)};
    const mpz_class dz{std::string(den)};
    if (dz == 0) throw std::invalid_argument("zero denominator");
    Rational q{nz, dz};
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

mpz_class binom_z(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational binom(long n, long k) { return Rational(binom_z(n, k)); }

QtPoly::QtPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

QtPoly::QtPoly(long c) {
    if (c != 0) coeffs_.emplace_back(c);
}

QtPoly::QtPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { normalize(); }

QtPoly QtPoly::t_power(unsigned degree, const Rational& c) {
    QtPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_[degree] = c;
    return p;
}

Rational QtPoly::coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(0); }

std::size_t QtPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

void QtPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QtPoly& QtPoly::operator+=(const QtPoly& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
    normalize();
    return *this;
}

QtPoly& QtPoly::operator-=(const QtPoly& q) {
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
    normalize();
    return *this;
}

QtPoly operator*(const QtPoly& p, const QtPoly& q) {
    QtPoly r;
    if (p.is_zero() || q.is_zero()) return r;
    r.coeffs_.assign(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r.coeffs_[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    r.normalize();
    return r;
}

QtPoly& QtPoly::operator*=(const QtPoly& q) { return *this = *this * q; }

QtPoly& QtPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

QtPoly& QtPoly::shift(unsigned k) {
    if (!coeffs_.empty() && k > 0) coeffs_.insert(coeffs_.begin(), k, Rational(0));
    return *this;
}

QtPoly QtPoly::operator-() const {
    QtPoly r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

Rational QtPoly::eval(const Rational& t0) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
    return acc;
}

double QtPoly::eval(double t0) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + it->get_d();
    return acc;
}

std::string QtPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const Rational& c = coeffs_[d];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        if (d == 0) {
            mono = mag.get_str();
        } else {
            if (mag != 1) mono = mag.get_str() + "*";
            mono += "t";
            if (d > 1) mono += "^" + std::to_string(d);
        }
        out += mono;
    }
    return out;
}

QtPoly qt_add(const QtPoly& p, const QtPoly& q) { return p + q; }
QtPoly qt_mul(const QtPoly& p, const QtPoly& q) { return p * q; }
Rational qt_eval(const QtPoly& p, const Rational& t0) { return p.eval(t0); }

QtPoly parse_qtpoly(std::string_view text) {
    // Grammar: term (('+'|'-') term)*, term := [rational ['*']] ['t' ['^' int]]
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    QtPoly result;
    std::size_t i = 0;
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
        } else if (i != 0) {
            throw std::invalid_argument("malformed polynomial: '" + s + "'");
        }
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        Rational c = 1;
        bool have_number = j > i;
        if (have_number) c = parse_rational(std::string_view(s).substr(i, j - i));
        i = j;
        unsigned deg = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_number) throw std::invalid_argument("malformed polynomial: '" + s + "'");
            ++i;
            if (i >= s.size() || s[i] != 't') throw std::invalid_argument("malformed polynomial: '" + s + "'");
        }
        if (i < s.size() && s[i] == 't') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) throw std::invalid_argument("malformed exponent in '" + s + "'");
                deg = static_cast<unsigned>(std::stoul(s.substr(i, k - i)));
                i = k;
            }
        } else if (!have_number) {
            throw std::invalid_argument("malformed polynomial: '" + s + "'");
        }
        if (neg) c = -c;
        result += QtPoly::t_power(deg, c);
        if (i < s.size() && s[i] != '+' && s[i] != '-') throw std::invalid_argument("malformed polynomial: '" + s + "'");
    }
    return result;
}

}  // namespace imzv
