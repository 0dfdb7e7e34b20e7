#include "imzv/halg.hpp"

#include <cctype>
#include <stdexcept>

namespace imzv {

HElement::HElement(const Word& w, const QtPoly& c) {
    if (!c.is_zero()) terms_.emplace(w, c);
}

HElement HElement::from_terms(const std::vector<std::pair<Word, QtPoly>>& terms) {
    HElement e;
    for (const auto& [w, c] : terms) e.add_term(w, c);
    return e;
}

QtPoly HElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QtPoly() : it->second;
}

void HElement::add_term(const Word& w, const QtPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void HElement::add_term(const Word& w, const Rational& c, unsigned deg) {
    if (c == 0) return;
    add_term(w, QtPoly::t_power(deg, c));
}

HElement& HElement::operator+=(const HElement& v) {
    if (&v == this) return *this += HElement(v);  // add_term may erase entries of v
    for (const auto& [w, c] : v.terms_) add_term(w, c);
    return *this;
}

HElement& HElement::operator-=(const HElement& v) {
    if (&v == this) return *this += -v;
    for (const auto& [w, c] : v.terms_) add_term(w, -c);
    return *this;
}

HElement& HElement::operator*=(const QtPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, p] : terms_) p *= c;
    return *this;
}

HElement HElement::operator-() const {
    HElement r = *this;
    for (auto& [w, p] : r.terms_) p = -p;
    return r;
}

HElement HElement::left_multiplied(Letter a) const {
    HElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w.prepended(a), c);
    return r;
}

HElement HElement::eval_t(const Rational& t0) const {
    HElement r;
    for (const auto& [w, p] : terms_) r.add_term(w, QtPoly(p.eval(t0)));
    return r;
}

HElement HElement::t_degree_part(unsigned deg) const {
    HElement r;
    for (const auto& [w, p] : terms_) r.add_term(w, QtPoly(p.coeff(deg)));
    return r;
}

namespace {

std::string coeff_prefix(const QtPoly& c) {
    if (c.is_constant() && c.coeff(0) > 0) return c.coeff(0) == 1 ? "" : c.coeff(0).get_str() + "*";
    return "(" + c.to_string() + ")*";
}

}  // namespace

std::string HElement::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        const std::string pre = coeff_prefix(it->second);
        // A bare unit coefficient on the empty word still prints the word "1".
        out += pre + it->first.str();
    }
    return out;
}

nlohmann::json HElement::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        arr.push_back({{"word", it->first.str()}, {"coeff", it->second.to_string()}});
    return arr;
}

HElement HElement::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("HElement JSON must be an array of {word, coeff} records");
    HElement e;
    for (const auto& rec : j) {
        if (!rec.is_object() || !rec.contains("word") || !rec.contains("coeff"))
            throw std::invalid_argument("HElement JSON record needs 'word' and 'coeff'");
        e.add_term(Word(rec.at("word").get<std::string>()), parse_qtpoly(rec.at("coeff").get<std::string>()));
    }
    return e;
}

HElement h_add(const HElement& u, const HElement& v) { return u + v; }

HElement h_scale(const QtPoly& c, const HElement& v) { return c * v; }

HElement h_concat(const HElement& u, const HElement& v) {
    HElement r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) r.add_term(wu + wv, cu * cv);
    return r;
}

bool in_h0(const HElement& v) {
    for (const auto& [w, c] : v.terms())
        if (!is_admissible(w)) return false;
    return true;
}

bool in_h1(const HElement& v) {
    for (const auto& [w, c] : v.terms())
        if (!in_h1_word(w)) return false;
    return true;
}

HElement parse_helement(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty element");
    if (s == "0") return {};
    HElement e;
    std::size_t i = 0;
    bool negate = false;
    while (i <= s.size()) {
        // One term ends at the next '+' outside parentheses, or at a '-' that
        // directly follows a word.
        std::size_t j = i;
        int depth = 0;
        bool next_negate = false;
        while (j < s.size()) {
            if (s[j] == '(') ++depth;
            if (s[j] == ')') --depth;
            if (depth == 0 && s[j] == '+') break;
            if (depth == 0 && s[j] == '-' && j > i && (s[j - 1] == 'x' || s[j - 1] == 'y' || s.substr(i, j - i) == "1")) {
                next_negate = true;
                break;
            }
            ++j;
        }
        const std::string term = s.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("malformed element '" + std::string(text) + "'");
        QtPoly c(1);
        std::string word = term;
        const auto star = term.rfind('*');
        if (star != std::string::npos) {
            std::string cs = term.substr(0, star);
            word = term.substr(star + 1);
            if (cs.size() >= 2 && cs.front() == '(' && cs.back() == ')') cs = cs.substr(1, cs.size() - 2);
            c = parse_qtpoly(cs);
        } else if (!word.empty() && word.front() == '-') {
            c = QtPoly(-1);
            word = word.substr(1);
        }
        e.add_term(Word(word), negate ? -c : c);
        if (j == s.size()) break;
        negate = next_negate;
        i = j + 1;
    }
    return e;
}

std::vector<std::string> describe_difference(const HElement& u, const HElement& v, std::size_t max_lines) {
    std::vector<std::string> out;
    const HElement d = u - v;
    for (auto it = d.terms().rbegin(); it != d.terms().rend() && out.size() < max_lines; ++it)
        out.push_back(it->first.str() + ": " + u.coeff(it->first).to_string() + " vs " + v.coeff(it->first).to_string());
    return out;
}

}  // namespace imzv
