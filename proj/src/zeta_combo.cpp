#include "imzv/zeta_combo.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <vector>

namespace imzv {

std::string to_string(Interpretation i) {
    switch (i) {
        case Interpretation::Interpolated: return "interpolated";
        case Interpretation::Plain: return "plain";
        case Interpretation::Star: return "star";
    }
    return "plain";
}

Interpretation parse_interpretation(std::string_view s) {
    if (s == "interpolated") return Interpretation::Interpolated;
    if (s == "plain") return Interpretation::Plain;
    if (s == "star") return Interpretation::Star;
    throw std::invalid_argument("unknown interpretation '" + std::string(s) + "'");
}

namespace {

void require_admissible(const Index& idx) {
    if (!idx.admissible()) throw std::invalid_argument("zeta symbol with non-admissible index " + idx.str());
}

void require_same(Interpretation a, Interpretation b) {
    if (a != b) throw std::invalid_argument("cannot combine " + to_string(a) + " and " + to_string(b) + " zeta symbols");
}

}  // namespace

ZetaCombo::ZetaCombo(Interpretation interp, const Index& idx, const QtPoly& c) : interp_(interp) { add_term(idx, c); }

ZetaCombo ZetaCombo::scalar(Interpretation interp, const QtPoly& c) {
    ZetaCombo z(interp);
    z.scalar_ = c;
    return z;
}

QtPoly ZetaCombo::coeff(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? QtPoly() : it->second;
}

void ZetaCombo::add_term(const Index& idx, const QtPoly& c) {
    require_admissible(idx);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ZetaCombo::add_scalar(const QtPoly& c) { scalar_ += c; }

ZetaCombo& ZetaCombo::operator+=(const ZetaCombo& other) {
    require_same(interp_, other.interp_);
    if (&other == this) return *this += ZetaCombo(other);  // add_term may erase entries of other
    for (const auto& [idx, c] : other.terms_) add_term(idx, c);
    scalar_ += other.scalar_;
    return *this;
}

ZetaCombo& ZetaCombo::operator-=(const ZetaCombo& other) {
    require_same(interp_, other.interp_);
    if (&other == this) {
        terms_.clear();
        scalar_ = QtPoly();
        return *this;
    }
    for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
    scalar_ -= other.scalar_;
    return *this;
}

ZetaCombo& ZetaCombo::operator*=(const QtPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        scalar_ = QtPoly();
        return *this;
    }
    for (auto& [idx, p] : terms_) p *= c;
    scalar_ *= c;
    return *this;
}

ZetaCombo ZetaCombo::eval_t(const Rational& t0) const {
    ZetaCombo r(interp_);
    for (const auto& [idx, p] : terms_) r.add_term(idx, QtPoly(p.eval(t0)));
    r.scalar_ = QtPoly(scalar_.eval(t0));
    return r;
}

namespace {

// Appends one signed term "c*symbol" in the zeta text style: a monomial
// coefficient contributes its sign to the joining operator; a longer
// polynomial is parenthesised.
void append_term(std::string& out, const QtPoly& c, const std::string& symbol) {
    bool neg = false;
    std::string body;
    if (c.term_count() == 1) {
        const auto d = static_cast<unsigned>(c.degree());
        Rational mag = c.coeff(d);
        neg = mag < 0;
        if (neg) mag = -mag;
        std::vector<std::string> factors;
        if (mag != 1 || (d == 0 && symbol.empty())) factors.push_back(mag.get_str());
        if (d == 1) factors.emplace_back("t");
        if (d > 1) factors.push_back("t^" + std::to_string(d));
        if (!symbol.empty()) factors.push_back(symbol);
        for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
    } else {
        body = "(" + c.to_string() + ")";
        if (!symbol.empty()) body += "*" + symbol;
    }
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    out += body;
}

std::string symbol_text(Interpretation interp, const Index& idx) {
    const std::string parts = idx.str();
    return (interp == Interpretation::Star ? "zs" : "z") + parts;
}

}  // namespace

std::string ZetaCombo::to_text() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) append_term(out, it->second, symbol_text(interp_, it->first));
    if (!scalar_.is_zero()) append_term(out, scalar_, "");
    return out;
}

nlohmann::json ZetaCombo::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        terms.push_back({{"index", it->first.parts()}, {"coeff", it->second.to_string()}});
    return {{"interpretation", to_string(interp_)}, {"scalar", scalar_.to_string()}, {"terms", terms}};
}

ZetaCombo ZetaCombo::from_json(const nlohmann::json& j) {
    ZetaCombo z(parse_interpretation(j.at("interpretation").get<std::string>()));
    for (const auto& rec : j.at("terms"))
        z.add_term(Index(rec.at("index").get<std::vector<int>>()), parse_qtpoly(rec.at("coeff").get<std::string>()));
    if (j.contains("scalar")) z.scalar_ = parse_qtpoly(j.at("scalar").get<std::string>());
    return z;
}

ZetaCombo zt_map(const HElement& v) {
    if (!in_h0(v)) throw std::invalid_argument("Z^t is defined on H^0 only");
    ZetaCombo z(Interpretation::Interpolated);
    for (const auto& [w, c] : v.terms()) {
        if (w.empty())
            z.add_scalar(c);
        else
            z.add_term(index_from_word(w), c);
    }
    return z;
}

ZetaCombo expand_index(const Index& idx) {
    require_admissible(idx);
    ZetaCombo z(Interpretation::Plain);
    const auto& p = idx.parts();
    const std::size_t n = p.size();
    const std::size_t gaps = n - 1;
    // Bit g of `mask` set means the g-th separator is '+'.
    for (std::uint64_t mask = 0; mask < (1ULL << gaps); ++mask) {
        std::vector<int> merged{p[0]};
        for (std::size_t g = 0; g < gaps; ++g) {
            if (mask >> g & 1ULL)
                merged.back() += p[g + 1];
            else
                merged.push_back(p[g + 1]);
        }
        const auto dep = merged.size();
        z.add_term(Index(std::move(merged)), QtPoly::t_power(static_cast<unsigned>(n - dep)));
    }
    return z;
}

ZetaCombo expand_interpolated(const ZetaCombo& zc) {
    require_same(zc.interpretation(), Interpretation::Interpolated);
    ZetaCombo out(Interpretation::Plain);
    for (const auto& [idx, c] : zc.terms()) {
        ZetaCombo e = expand_index(idx);
        e *= c;
        out += e;
    }
    out.add_scalar(zc.scalar_part());
    return out;
}

ZetaCombo star_specialize(const ZetaCombo& zc) {
    require_same(zc.interpretation(), Interpretation::Interpolated);
    ZetaCombo out(Interpretation::Star);
    for (const auto& [idx, c] : zc.terms()) out.add_term(idx, QtPoly(c.eval(Rational(1))));
    out.add_scalar(QtPoly(zc.scalar_part().eval(Rational(1))));
    return out;
}

ZetaCombo to_plain_at(const ZetaCombo& zc, const Rational& t0) {
    switch (zc.interpretation()) {
        case Interpretation::Plain: return zc.eval_t(t0);
        case Interpretation::Interpolated: return expand_interpolated(zc).eval_t(t0);
        case Interpretation::Star: {
            ZetaCombo out(Interpretation::Plain);
            for (const auto& [idx, c] : zc.terms()) {
                ZetaCombo e = expand_index(idx).eval_t(Rational(1));
                e *= QtPoly(c.eval(t0));
                out += e;
            }
            out.add_scalar(QtPoly(zc.scalar_part().eval(t0)));
            return out;
        }
    }
    return zc;
}

ZetaCombo zc_add(const ZetaCombo& a, const ZetaCombo& b) { return a + b; }

ZetaCombo zc_mul_scalar(const QtPoly& c, const ZetaCombo& zc) {
    ZetaCombo r = zc;
    r *= c;
    return r;
}

namespace {

class ComboParser {
public:
    ComboParser(std::string_view text, Interpretation symbol_interp) : symbol_interp_(symbol_interp) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    ZetaCombo parse() {
        if (s_.empty()) fail("empty expression");
        std::vector<std::pair<QtPoly, std::optional<std::pair<bool, Index>>>> terms;
        while (pos_ < s_.size() || terms.empty()) {
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++pos_;
            } else if (!terms.empty()) {
                fail("expected '+' or '-'");
            }
            terms.push_back(parse_term());
            if (neg) terms.back().first = -terms.back().first;
        }
        bool any_star = false;
        bool any_plain = false;
        for (const auto& t : terms)
            if (t.second) (t.second->first ? any_star : any_plain) = true;
        if (any_star && any_plain) fail("mixed z(...) and zs(...) symbols");
        ZetaCombo out(any_star ? Interpretation::Star : symbol_interp_);
        for (const auto& [c, sym] : terms) {
            if (sym)
                out.add_term(sym->second, c);
            else
                out.add_scalar(c);
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse zeta combination '" + s_ + "': " + why);
    }

    std::pair<QtPoly, std::optional<std::pair<bool, Index>>> parse_term() {
        QtPoly c(1);
        std::optional<std::pair<bool, Index>> sym;
        while (true) {
            const char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t j = pos_;
                while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '/')) ++j;
                c *= QtPoly(parse_rational(std::string_view(s_).substr(pos_, j - pos_)));
                pos_ = j;
            } else if (ch == '(') {
                const auto close = s_.find(')', pos_);
                if (close == std::string::npos) fail("unbalanced parenthesis");
                c *= parse_qtpoly(std::string_view(s_).substr(pos_ + 1, close - pos_ - 1));
                pos_ = close + 1;
            } else if (ch == 'z') {
                bool star = false;
                ++pos_;
                if (peek() == 's') {
                    star = true;
                    ++pos_;
                }
                if (peek() != '(') fail("expected '(' after z");
                const auto close = s_.find(')', pos_);
                if (close == std::string::npos) fail("unbalanced parenthesis");
                if (sym) fail("a term may contain only one zeta symbol");
                Index idx = parse_index(std::string_view(s_).substr(pos_, close - pos_ + 1));
                if (!idx.admissible()) fail("non-admissible index " + idx.str());
                sym = std::make_pair(star, std::move(idx));
                pos_ = close + 1;
            } else if (ch == 't') {
                ++pos_;
                unsigned deg = 1;
                if (peek() == '^') {
                    ++pos_;
                    std::size_t j = pos_;
                    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
                    if (j == pos_) fail("missing exponent");
                    deg = static_cast<unsigned>(std::stoul(s_.substr(pos_, j - pos_)));
                    pos_ = j;
                }
                c *= QtPoly::t_power(deg);
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return {c, sym};
    }

    std::string s_;
    std::size_t pos_ = 0;
    Interpretation symbol_interp_;
};

}  // namespace

ZetaCombo parse_zeta_combo(std::string_view text, Interpretation symbol_interp) {
    return ComboParser(text, symbol_interp).parse();
}

}  // namespace imzv
