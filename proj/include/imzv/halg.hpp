// The algebra H_t = Q[t]<x, y>: finite Q[t]-linear combinations of words.
#ifndef IMZV_HALG_HPP
#define IMZV_HALG_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "imzv/coeffs.hpp"
#include "imzv/words.hpp"

namespace imzv {

class HElement {
public:
    using TermMap = std::map<Word, QtPoly>;

    HElement() = default;
    // c * w; a zero coefficient yields the zero element.
    explicit HElement(const Word& w, const QtPoly& c = QtPoly(1));
    // Sums repeated words and drops zero coefficients.
    static HElement from_terms(const std::vector<std::pair<Word, QtPoly>>& terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    // Coefficient of w (zero if absent).
    QtPoly coeff(const Word& w) const;

    void add_term(const Word& w, const QtPoly& c);
    // Adds c * t^deg * w without building a temporary polynomial.
    void add_term(const Word& w, const Rational& c, unsigned deg);

    HElement& operator+=(const HElement& v);
    HElement& operator-=(const HElement& v);
    HElement& operator*=(const QtPoly& c);
    HElement operator-() const;
    friend HElement operator+(HElement u, const HElement& v) { return u += v; }
    friend HElement operator-(HElement u, const HElement& v) { return u -= v; }
    friend HElement operator*(const QtPoly& c, HElement v) { return v *= c; }
    friend bool operator==(const HElement& u, const HElement& v) = default;

    // a * v: prepends the letter to every word. Prepending is monotone for the
    // graded-lex order, so the result is built with ordered-insert hints.
    HElement left_multiplied(Letter a) const;

    // Substitute t = t0 in every coefficient.
    HElement eval_t(const Rational& t0) const;
    // The part of the element carrying t^deg, returned with constant coefficients.
    HElement t_degree_part(unsigned deg) const;

    // "2*xyxy + 4*xxyy + (-6*t)*xxxy": terms from the greatest to the least
    // word in graded-lex order; unit coefficients omitted; non-constant or
    // negative coefficients parenthesised; "0" for the zero element.
    std::string to_text() const;
    // [{"word": "xyxy", "coeff": "2"}, ...] in the same order as to_text.
    nlohmann::json to_json() const;
    static HElement from_json(const nlohmann::json& j);

private:
    TermMap terms_;
};

HElement h_add(const HElement& u, const HElement& v);
HElement h_scale(const QtPoly& c, const HElement& v);
// Bilinear extension of word concatenation.
HElement h_concat(const HElement& u, const HElement& v);
// Every word with a nonzero coefficient is empty or starts with x and ends with y.
bool in_h0(const HElement& v);
// Every word with a nonzero coefficient is empty or ends with y.
bool in_h1(const HElement& v);

// Parses the to_text form: terms "c*w", "(poly)*w" or "w" joined by "+", or
// by "-" directly after a word ("xy - yx").
HElement parse_helement(std::string_view text);

// Terms present in exactly one side or with different coefficients, rendered
// as "word: lhs_coeff vs rhs_coeff" lines. Empty when u == v.
std::vector<std::string> describe_difference(const HElement& u, const HElement& v, std::size_t max_lines = 8);

}  // namespace imzv

#endif  // IMZV_HALG_HPP
