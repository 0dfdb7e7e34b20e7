// Floating-point evaluation of multiple zeta values and of zeta combinations,
// used as a numerical sanity layer for the exact identities.
#ifndef IMZV_MZVNUM_HPP
#define IMZV_MZVNUM_HPP

#include <map>
#include <string>

#include "imzv/coeffs.hpp"
#include "imzv/words.hpp"
#include "imzv/zeta_combo.hpp"

namespace imzv {

enum class EvalMethod {
    Auto,         // partial sums; the 1/2-split series when they miss the target
    PartialSums,  // truncated nested series at N and 2N plus one extrapolation step
    HalfSplit,    // path split at 1/2: products of polylogarithm values at 1/2
};

std::string to_string(EvalMethod m);
EvalMethod parse_eval_method(const std::string& s);

struct EvalResult {
    double value = 0.0;
    double error_estimate = 0.0;  // >= 0
    long cutoff_used = 1;         // >= 1
    bool tolerance_met = true;
    EvalMethod method = EvalMethod::PartialSums;
};

inline constexpr double kErrorFloor = 1e-9;
inline constexpr long kDefaultCutoff = 100000;
inline constexpr int kMaxEvalWeight = 12;
inline constexpr int kMaxEvalDepth = kMaxEvalWeight - 1;  // implied by the weight bound

// Nested partial sums up to N and 2N; the extrapolated value assumes a
// leading error proportional to N^{-(l_1 - 1)}, and the error estimate is
// |extrapolated - raw(2N)|. Requires an admissible index of weight <= 12
// and cutoff >= 1.
EvalResult eval_mzv_partial_sums(const Index& idx, long cutoff = kDefaultCutoff, double target_abs_err = kErrorFloor);

// zeta(w) = sum_j Li_{dual prefix}(1/2) Li_{suffix}(1/2) over the splits of w,
// where the prefix a_1..a_j is read backwards with x and y exchanged. Each
// factor is a geometrically convergent series; the estimate compares two
// truncation orders.
EvalResult eval_mzv_half_split(const Index& idx, double target_abs_err = kErrorFloor);

// Dispatch on `method`. Targets below kErrorFloor are raised to it. The
// tolerance_met flag reports whether error_estimate <= target.
EvalResult eval_mzv(const Index& idx, double target_abs_err = kErrorFloor, EvalMethod method = EvalMethod::Auto);

// Memoising evaluator for one evaluation session.
class EvalSession {
public:
    explicit EvalSession(EvalMethod method = EvalMethod::Auto) : method_(method) {}
    const EvalResult& eval(const Index& idx, double target_abs_err = kErrorFloor);
    // Sum of c(t0) * zeta(idx) with absolute-sum error accumulation. Any
    // combo is first rewritten as plain symbols at t = t0; the scalar part is
    // exact.
    EvalResult eval_combo(const ZetaCombo& zc, const Rational& t0, double target_abs_err = 1e-6);
    std::size_t cache_size() const { return cache_.size(); }

private:
    EvalMethod method_;
    std::map<std::pair<Index, double>, EvalResult> cache_;
};

EvalResult eval_combo(const ZetaCombo& zc, const Rational& t0, double target_abs_err = 1e-6,
                      EvalMethod method = EvalMethod::Auto);

}  // namespace imzv

#endif  // IMZV_MZVNUM_HPP
