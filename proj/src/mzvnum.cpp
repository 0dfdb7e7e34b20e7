#include "imzv/mzvnum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace imzv {

std::string to_string(EvalMethod m) {
    switch (m) {
        case EvalMethod::Auto: return "auto";
        case EvalMethod::PartialSums: return "partial-sums";
        case EvalMethod::HalfSplit: return "half-split";
    }
    return "auto";
}

EvalMethod parse_eval_method(const std::string& s) {
    if (s == "auto") return EvalMethod::Auto;
    if (s == "partial-sums") return EvalMethod::PartialSums;
    if (s == "half-split") return EvalMethod::HalfSplit;
    throw std::invalid_argument("unknown evaluation method '" + s + "' (expected auto, partial-sums or half-split)");
}

namespace {

void check_envelope(const Index& idx) {
    if (!idx.admissible()) throw std::invalid_argument("cannot evaluate non-admissible index " + idx.str());
    if (idx.weight() > kMaxEvalWeight || idx.depth() > kMaxEvalDepth)
        throw std::invalid_argument("index " + idx.str() + " is outside the evaluation envelope (weight <= 12)");
}

// sum_{m_1 > ... > m_n >= 1, m_1 <= M} z^{m_1} / (m_1^{l_1} ... m_n^{l_n}),
// recorded at every requested checkpoint M (ascending). Inner sums are
// carried along so each step costs O(depth).
std::vector<long double> nested_sums(const std::vector<int>& parts, const std::vector<long>& checkpoints, long double z) {
    const std::size_t n = parts.size();
    std::vector<long double> T(n + 1, 0.0L);  // T[k]: sum over the tail l_{k+1}..l_n
    T[n] = 1.0L;
    std::vector<long double> out;
    long double zp = 1.0L;
    std::size_t next = 0;
    const long last = checkpoints.back();
    int max_part = *std::max_element(parts.begin(), parts.end());
    std::vector<long double> inv_pow(static_cast<std::size_t>(max_part) + 1);
    for (long m = 1; m <= last; ++m) {
        const long double inv = 1.0L / static_cast<long double>(m);
        inv_pow[0] = 1.0L;
        for (int e = 1; e <= max_part; ++e) inv_pow[static_cast<std::size_t>(e)] = inv_pow[static_cast<std::size_t>(e) - 1] * inv;
        zp *= z;
        // Outer level first so it sees the inner sums over indices < m.
        for (std::size_t k = 0; k < n; ++k) {
            long double c = inv_pow[static_cast<std::size_t>(parts[k])] * T[k + 1];
            if (k == 0) c *= zp;
            T[k] += c;
        }
        if (m == checkpoints[next]) {
            out.push_back(T[0]);
            ++next;
        }
    }
    return out;
}

long double li_half(const Word& v, long terms) {
    if (v.empty()) return 1.0L;
    const Index idx = index_from_word(v);
    return nested_sums(idx.parts(), {terms}, 0.5L).front();
}

// Swap x and y and reverse.
Word swap_reverse(const Word& w) {
    Word r;
    for (std::size_t i = w.length(); i-- > 0;) r.append(w.at(i) == Letter::X ? Letter::Y : Letter::X);
    return r;
}

long double half_split_value(const Word& w, long terms) {
    long double total = 0.0L;
    for (std::size_t j = 0; j <= w.length(); ++j)
        total += li_half(swap_reverse(w.prefix(j)), terms) * li_half(w.suffix_from(j), terms);
    return total;
}

}  // namespace

EvalResult eval_mzv_partial_sums(const Index& idx, long cutoff, double target_abs_err) {
    check_envelope(idx);
    if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
    const double target = std::max(target_abs_err, kErrorFloor);
    const auto raw = nested_sums(idx.parts(), {cutoff, 2 * cutoff}, 1.0L);
    const long double p = static_cast<long double>(idx.parts().front() - 1);
    const long double scale = std::pow(2.0L, p) - 1.0L;
    const long double extrap = raw[1] + (raw[1] - raw[0]) / scale;
    EvalResult r;
    r.value = static_cast<double>(extrap);
    // Add the rounding of the final conversion so the estimate is never 0.
    r.error_estimate = static_cast<double>(std::fabs(extrap - raw[1])) + 4.0 * 2.2e-16 * std::fabs(r.value);
    r.cutoff_used = 2 * cutoff;
    r.tolerance_met = r.error_estimate <= target;
    r.method = EvalMethod::PartialSums;
    return r;
}

EvalResult eval_mzv_half_split(const Index& idx, double target_abs_err) {
    check_envelope(idx);
    const double target = std::max(target_abs_err, kErrorFloor);
    const Word w = word_from_index(idx);
    constexpr long kTerms = 64;
    const long double coarse = half_split_value(w, kTerms);
    const long double fine = half_split_value(w, 2 * kTerms);
    EvalResult r;
    r.value = static_cast<double>(fine);
    // Truncation difference plus rounding of the (|w|+1) products in double.
    const long double rounding = 8.0L * static_cast<long double>(w.length() + 1) * 2.2e-16L * std::fabs(fine);
    r.error_estimate = static_cast<double>(std::fabs(fine - coarse) + rounding);
    r.cutoff_used = 2 * kTerms;
    r.tolerance_met = r.error_estimate <= target;
    r.method = EvalMethod::HalfSplit;
    return r;
}

EvalResult eval_mzv(const Index& idx, double target_abs_err, EvalMethod method) {
    switch (method) {
        case EvalMethod::PartialSums: return eval_mzv_partial_sums(idx, kDefaultCutoff, target_abs_err);
        case EvalMethod::HalfSplit: return eval_mzv_half_split(idx, target_abs_err);
        case EvalMethod::Auto: break;
    }
    EvalResult r = eval_mzv_partial_sums(idx, kDefaultCutoff, target_abs_err);
    if (r.tolerance_met) return r;
    return eval_mzv_half_split(idx, target_abs_err);
}

const EvalResult& EvalSession::eval(const Index& idx, double target_abs_err) {
    const auto key = std::make_pair(idx, std::max(target_abs_err, kErrorFloor));
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    return cache_.emplace(key, eval_mzv(idx, target_abs_err, method_)).first->second;
}

EvalResult EvalSession::eval_combo(const ZetaCombo& zc, const Rational& t0, double target_abs_err) {
    const ZetaCombo plain = to_plain_at(zc, t0);
    // Share the target between the terms in proportion to |coefficient|.
    double weight = 0.0;
    for (const auto& [idx, c] : plain.terms()) weight += std::fabs(c.eval(t0).get_d());
    const double per_term = weight > 0.0 ? target_abs_err / weight : target_abs_err;

    EvalResult r;
    r.method = method_;
    r.value = plain.scalar_part().eval(t0).get_d();
    bool terms_met = true;
    for (const auto& [idx, c] : plain.terms()) {
        const double cv = c.eval(t0).get_d();
        const EvalResult& e = eval(idx, per_term);
        r.value += cv * e.value;
        r.error_estimate += std::fabs(cv) * e.error_estimate;
        r.cutoff_used = std::max(r.cutoff_used, e.cutoff_used);
        terms_met = terms_met && e.tolerance_met;
    }
    r.tolerance_met = terms_met;
    return r;
}

EvalResult eval_combo(const ZetaCombo& zc, const Rational& t0, double target_abs_err, EvalMethod method) {
    EvalSession session(method);
    return session.eval_combo(zc, t0, target_abs_err);
}

}  // namespace imzv
