// Explicit product formulas for t-shuffles of structured words, each an
// independent evaluation that can be checked against the recursive oracle.
//
// Notation: xy(e) = x^{e_1} y ... x^{e_n} y and z_k = x^{k-1} y. Every formula
// returns an exact HElement (or ZetaCombo) and never calls the oracle.
#ifndef IMZV_CLOSEDFORMS_HPP
#define IMZV_CLOSEDFORMS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "imzv/halg.hpp"
#include "imzv/zeta_combo.hpp"

namespace imzv {

// ---------------------------------------------------------------------------
// General product xy(a) * xy(b) for exponent vectors a (length r) and b
// (length s).

// The four interleaving patterns of the y-letters:
//   (i)   the first y belongs to xy(a) and xy(b) places its last y first;
//   (ii)  the first y belongs to xy(a) and xy(a) places its last y first;
//   (iii) the first y belongs to xy(b) and xy(a) places its last y first;
//   (iv)  the first y belongs to xy(b) and xy(b) places its last y first.
// For each pattern the x-runs of both words are distributed over the gaps
// (multinomial weight per gap), giving the shuffle words; the same word with
// the earlier-finishing last y replaced by -t x gives the correction terms.
struct GeneralFormulaCases {
    std::array<HElement, 4> by_case;  // contributions of patterns (i)..(iv)
    HElement total() const;
};
GeneralFormulaCases general_formula_cases(const std::vector<int>& a, const std::vector<int>& b);
// Requires r, s >= 1 and nonnegative entries.
HElement general_formula(const std::vector<int>& a, const std::vector<int>& b);
// Direct transcription of the coefficient sums Sigma_1..Sigma_4 (with the
// beta/gamma exponent systems) and the four merge families. Cross-check only.
HElement general_formula_sums(const std::vector<int>& a, const std::vector<int>& b);

// zeta^t(m, p,...,p) zeta^t(u, p,...,p) with n and v trailing p's: the Z^t
// image of general_formula((m-1, p-1 x n), (u-1, p-1 x v)).
// Requires m, u >= 2, p >= 1, n, v >= 0.
ZetaCombo theorem1_decomposition(int m, int p, int n, int u, int v);

// Euler's decomposition of zeta(i) zeta(j) (i, j >= 2) as plain symbols:
// sum_{k=1}^{i} C(i+j-k-1, j-1) zeta(i+j-k, k) + sum_{k=1}^{j} C(i+j-k-1, i-1) zeta(i+j-k, k).
ZetaCombo euler_decomposition(int i, int j);

// ---------------------------------------------------------------------------
// Height one: x^a y^r * x^b y^s.

// Shuffle part with coefficients C(alpha_1, a) C(r+s-l-1, r-l) prod delta,
// plus the -t families (the two y^r * y^s style sums, the delta_{s,1} / delta_{r,1}
// guarded sums and the two merged-run sums). Requires a, b, r, s >= 1.
HElement height_one_word_formula(int a, int r, int b, int s);
// Z^t image of height_one_word_formula(a, r, b, s):
// zeta^t(a+1, {1}^{r-1}) zeta^t(b+1, {1}^{s-1}).
ZetaCombo theorem2_decomposition(int a, int b, int r, int s);

// The expanded recursive-route formula for x^m y^j * x^n y^k (two shuffle
// families and the -t families), including the delta_{k,1} family that the
// uncorrected variant omits. Requires m, j, n, k >= 1.
HElement eq48_word_formula(int m, int j, int n, int k);
// The same expansion without the delta_{k,1} family (uncorrected variant).
HElement eq48_word_formula_uncorrected(int m, int j, int n, int k);
ZetaCombo theorem3_decomposition(int m, int j, int n, int k);

// ---------------------------------------------------------------------------
// Height two: x^a y^r * x^{b1} y^{s1} x^{b2} y^{s2}, by where the first y of
// x^a y^r falls among the y's of the second word (before all of them, inside
// the first y-block, right after it, or inside the second y-block). Each case
// contributes its shuffle words and one -t x substitution per interleaving.
// Requires a, b1, b2 >= 0 and r, s1, s2 >= 1.
HElement height_two_case_formula(int a, int r, int b1, int s1, int b2, int s2);

// ---------------------------------------------------------------------------
// Alternating sums  sum_{i=0}^{k} (-1)^i z_p z_1^i * z_p z_1^{k-i}.

HElement alternating_sum_lhs(int k, int p);
// Closed form for even k >= 2 (throws std::invalid_argument for odd k):
//   2 sum_{alpha in comp(2(p-1), k+2)} C(alpha_1, p-1) z_{alpha_1+1}...z_{alpha_{k+2}+1} - 2t A
// with A the six merge families and last-family weight (-1 + (-1)^l).
HElement alternating_sum_rhs(int k, int p);
// Uncorrected right-hand side: bracketed binomial weights on the
// shuffle part and the extra -delta_{k,2} term. Cross-check only.
HElement alternating_sum_rhs_uncorrected(int k, int p);
// The p = 2 shape
//   2( sum_{a in comp(1,k+2)} (a_{k+2}+1) z_{a_{k+2}+2} z_{a_1+1}...z_{a_{k+1}+1}
//      + t sum_{i=0}^{k-1} (2(-1)^i - 1) z_2 z_1^i z_3 z_1^{k-i-1} - 3t z_4 z_1^k )
// for even k, and 0 for odd k.
HElement corollary42_rhs(int k);
// (LHS, RHS) as interpolated combos: Z^t(alternating_sum_lhs(k, 2)) and the
// Z^t image of corollary42_rhs(k).
std::pair<ZetaCombo, ZetaCombo> prop43_identity(int k);

// ---------------------------------------------------------------------------
// Machine-readable comparison of the uncorrected formula variants against the
// oracle on the standard grids ("formula-discrepancy" report).
nlohmann::json discrepancy_report();

}  // namespace imzv

#endif  // IMZV_CLOSEDFORMS_HPP
