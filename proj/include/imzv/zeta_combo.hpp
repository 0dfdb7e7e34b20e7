// Zeta-symbol layer: the Z^t map from admissible words to interpolated zeta
// symbols, and the expansion of interpolated symbols into plain MZV symbols.
#ifndef IMZV_ZETA_COMBO_HPP
#define IMZV_ZETA_COMBO_HPP

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "imzv/coeffs.hpp"
#include "imzv/halg.hpp"
#include "imzv/words.hpp"

namespace imzv {

enum class Interpretation {
    Interpolated,  // zeta^t symbols
    Plain,         // zeta symbols
    Star,          // zeta-star symbols (interpolated symbols read at t = 1)
};

std::string to_string(Interpretation i);
Interpretation parse_interpretation(std::string_view s);

// Finite Q[t]-linear combination of admissible zeta symbols plus a scalar
// (the image of the empty word). All terms share one interpretation.
class ZetaCombo {
public:
    using TermMap = std::map<Index, QtPoly>;

    explicit ZetaCombo(Interpretation interp = Interpretation::Plain) : interp_(interp) {}
    // c * symbol(idx); throws std::invalid_argument for non-admissible idx.
    ZetaCombo(Interpretation interp, const Index& idx, const QtPoly& c = QtPoly(1));
    static ZetaCombo scalar(Interpretation interp, const QtPoly& c);

    Interpretation interpretation() const { return interp_; }
    const TermMap& terms() const { return terms_; }
    const QtPoly& scalar_part() const { return scalar_; }
    QtPoly coeff(const Index& idx) const;
    bool is_zero() const { return terms_.empty() && scalar_.is_zero(); }
    std::size_t size() const { return terms_.size() + (scalar_.is_zero() ? 0 : 1); }

    void add_term(const Index& idx, const QtPoly& c);
    void add_scalar(const QtPoly& c);

    // Throws std::invalid_argument if the interpretations differ.
    ZetaCombo& operator+=(const ZetaCombo& other);
    ZetaCombo& operator-=(const ZetaCombo& other);
    ZetaCombo& operator*=(const QtPoly& c);
    friend ZetaCombo operator+(ZetaCombo a, const ZetaCombo& b) { return a += b; }
    friend ZetaCombo operator-(ZetaCombo a, const ZetaCombo& b) { return a -= b; }
    friend bool operator==(const ZetaCombo& a, const ZetaCombo& b) = default;

    // Substitute t = t0 in every coefficient (interpretation unchanged).
    ZetaCombo eval_t(const Rational& t0) const;

    // "2*z(2,2) + 4*z(3,1) - 6*t*z(4)"; star symbols print as "zs(...)".
    // Terms run from the highest weight down, in the same order as the
    // words of an HElement.
    std::string to_text() const;
    nlohmann::json to_json() const;
    static ZetaCombo from_json(const nlohmann::json& j);

private:
    Interpretation interp_;
    TermMap terms_;
    QtPoly scalar_;
};

// Z^t: each admissible word becomes its interpolated symbol; the empty word
// becomes the scalar part. Throws std::invalid_argument outside H^0.
ZetaCombo zt_map(const HElement& v);

// Each zeta^t(l_1..l_n) becomes the sum over the 2^{n-1} comma/plus patterns p
// of t^{n - dep(p)} zeta(p). Requires an interpolated combo.
ZetaCombo expand_interpolated(const ZetaCombo& zc);
// Expansion of a single interpolated symbol.
ZetaCombo expand_index(const Index& idx);

// Sets t = 1 and relabels the symbols as zeta-star symbols. Requires an
// interpolated combo.
ZetaCombo star_specialize(const ZetaCombo& zc);

// Rewrites any combo as plain symbols with t set to t0: interpolated symbols
// are expanded and evaluated at t0; star symbols are expanded at t = 1 after
// their coefficients are evaluated at t0.
ZetaCombo to_plain_at(const ZetaCombo& zc, const Rational& t0);

ZetaCombo zc_add(const ZetaCombo& a, const ZetaCombo& b);
ZetaCombo zc_mul_scalar(const QtPoly& c, const ZetaCombo& zc);

// Parses sums of terms such as "2*z(2,2)", "-t*z(3)", "(1 - t)*zs(2,1)", "1/2".
// "z(...)" symbols take `symbol_interp`; "zs(...)" symbols are star symbols.
// Mixing z and zs, non-admissible indices and malformed text raise
// std::invalid_argument.
ZetaCombo parse_zeta_combo(std::string_view text, Interpretation symbol_interp = Interpretation::Plain);

}  // namespace imzv

#endif  // IMZV_ZETA_COMBO_HPP
