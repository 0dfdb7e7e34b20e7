#include "imzv/closedforms.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "imzv/compositions.hpp"
#include "imzv/tshuffle.hpp"

namespace imzv {

namespace {

const Word kX = Word::letter(Letter::X);
const Word kY = Word::letter(Letter::Y);

// Sparse accumulator for elements whose coefficients live in Z + Z t; far
// cheaper than repeated HElement insertions while a formula is expanded.
class Accumulator {
public:
    void add(const Word& w, const mpz_class& c, int deg = 0) {
        if (c == 0) return;
        terms_[w][static_cast<std::size_t>(deg)] += c;
    }
    // Adds -c t w (the shape of every correction term).
    void add_t(const Word& w, const mpz_class& c) { add(w, -c, 1); }

    HElement finish() const {
        HElement r;
        for (const auto& [w, cs] : terms_) {
            QtPoly p{Rational(cs[0]), Rational(cs[1])};
            if (!p.is_zero()) r.add_term(w, p);
        }
        return r;
    }

private:
    std::unordered_map<Word, std::array<mpz_class, 2>, WordHash> terms_;
};

mpz_class C(long n, long k) { return binom_z(n, k); }

// z_{k_1} z_{k_2} ... as a word (parts >= 1).
Word zw(const std::vector<int>& ks) {
    Word w;
    for (int k : ks) w.append(Word::z(k));
    return w;
}

std::vector<int> plus_one(const std::vector<int>& v, std::size_t from, std::size_t to) {
    std::vector<int> out;
    for (std::size_t i = from; i < to; ++i) out.push_back(v[i] + 1);
    return out;
}

std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1); }

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Replace the k-th y (1-based) of w by x.
Word subst_y(const Word& w, int k) {
    int seen = 0;
    for (std::size_t i = 0; i < w.length(); ++i)
        if (w.at(i) == Letter::Y && ++seen == k) return w.with_letter(i, Letter::X);
    throw std::logic_error("subst_y: word has fewer y letters than requested");
}

// The word xy(al) with the q-th y (1-based, q < |al|) replaced by x, i.e.
// xy(al_1..al_{q-1}) x^{al_q + 1 + al_{q+1}} y xy(al_{q+2}..).
Word merged_at(const std::vector<int>& al, int q) {
    if (q < 1 || q >= static_cast<int>(al.size())) throw std::logic_error("merge position out of range");
    const auto uq = static_cast<std::size_t>(q);
    Word w = xy_word(std::vector<int>(al.begin(), al.begin() + static_cast<long>(uq - 1)));
    w.append(x_pow(al[uq - 1] + 1 + al[uq]));
    w.append(kY);
    w.append(xy_word(std::vector<int>(al.begin() + static_cast<long>(uq + 1), al.end())));
    return w;
}

void check_exponents(const std::vector<int>& v, const char* what) {
    if (v.empty()) throw std::invalid_argument(std::string(what) + " must have at least one entry");
    for (int e : v)
        if (e < 0) throw std::invalid_argument(std::string(what) + " entries must be >= 0");
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// General formula, constructive.

HElement GeneralFormulaCases::total() const {
    HElement r;
    for (const auto& h : by_case) r += h;
    return r;
}

GeneralFormulaCases general_formula_cases(const std::vector<int>& a, const std::vector<int>& b) {
    check_exponents(a, "a");
    check_exponents(b, "b");
    const int r = static_cast<int>(a.size());
    const int s = static_cast<int>(b.size());
    const int n = r + s;
    std::array<Accumulator, 4> acc;

    // A run of x's owned by one word, spread over gaps lo..hi (1-based).
    struct Run {
        int amount, lo, hi;
        bool first_word;
    };

    std::vector<bool> is_first(static_cast<std::size_t>(n), false);
    // Enumerate the positions of word 1's y's among the n merged y's.
    std::function<void(int, int)> choose = [&](int next, int left) {
        if (left == 0) {
            std::vector<int> pos1{0}, pos2{0};
            for (int p = 1; p <= n; ++p) (is_first[static_cast<std::size_t>(p - 1)] ? pos1 : pos2).push_back(p);
            std::vector<Run> runs;
            for (int k = 0; k < r; ++k) runs.push_back({a[static_cast<std::size_t>(k)], pos1[k] + 1, pos1[k + 1], true});
            for (int k = 0; k < s; ++k) runs.push_back({b[static_cast<std::size_t>(k)], pos2[k] + 1, pos2[k + 1], false});
            const int q = std::min(pos1[static_cast<std::size_t>(r)], pos2[static_cast<std::size_t>(s)]);
            const bool first1 = is_first[0];
            const bool fin1 = pos1[static_cast<std::size_t>(r)] < pos2[static_cast<std::size_t>(s)];
            const int cs = first1 ? (fin1 ? 1 : 0) : (fin1 ? 2 : 3);
            Accumulator& out = acc[static_cast<std::size_t>(cs)];

            std::vector<int> alpha(static_cast<std::size_t>(n), 0), own1(static_cast<std::size_t>(n), 0);
            std::function<void(std::size_t)> distribute = [&](std::size_t idx) {
                if (idx == runs.size()) {
                    mpz_class c = 1;
                    for (std::size_t g = 0; g < alpha.size() && c != 0; ++g) c *= C(alpha[g], own1[g]);
                    if (c == 0) return;
                    out.add(xy_word(alpha), c);
                    out.add_t(merged_at(alpha, q), c);
                    return;
                }
                const Run& run = runs[idx];
                const int span = run.hi - run.lo + 1;
                for_each_composition(run.amount, span, [&](const std::vector<int>& comp) {
                    for (int t = 0; t < span; ++t) {
                        const auto g = static_cast<std::size_t>(run.lo - 1 + t);
                        alpha[g] += comp[static_cast<std::size_t>(t)];
                        if (run.first_word) own1[g] += comp[static_cast<std::size_t>(t)];
                    }
                    distribute(idx + 1);
                    for (int t = 0; t < span; ++t) {
                        const auto g = static_cast<std::size_t>(run.lo - 1 + t);
                        alpha[g] -= comp[static_cast<std::size_t>(t)];
                        if (run.first_word) own1[g] -= comp[static_cast<std::size_t>(t)];
                    }
                });
            };
            distribute(0);
            return;
        }
        for (int p = next; p <= n - left + 1; ++p) {
            is_first[static_cast<std::size_t>(p - 1)] = true;
            choose(p + 1, left - 1);
            is_first[static_cast<std::size_t>(p - 1)] = false;
        }
    };
    choose(1, r);

    GeneralFormulaCases res;
    for (std::size_t i = 0; i < 4; ++i) res.by_case[i] = acc[i].finish();
    return res;
}

HElement general_formula(const std::vector<int>& a, const std::vector<int>& b) {
    return general_formula_cases(a, b).total();
}

// ---------------------------------------------------------------------------
// General formula, transcription of the coefficient sums.

HElement general_formula_sums(const std::vector<int>& a, const std::vector<int>& b) {
    check_exponents(a, "a");
    check_exponents(b, "b");
    const int r = static_cast<int>(a.size());
    const int s = static_cast<int>(b.size());
    const int n = r + s;
    int tot = 0;
    std::vector<int> A{0}, B{0};
    for (int e : a) A.push_back(A.back() + e);
    for (int e : b) B.push_back(B.back() + e);
    tot = A.back() + B.back();
    auto Aa = [&](int i) { return A[static_cast<std::size_t>(std::min(i, r))]; };
    auto Bb = [&](int i) { return B[static_cast<std::size_t>(std::min(i, s))]; };
    auto partial = [](const std::vector<int>& v) {
        std::vector<int> out{0};
        for (int e : v) out.push_back(out.back() + e);
        return out;
    };

    using Exps = std::vector<std::optional<int>>;  // 1-based positions
    auto set = [&](Exps& v, int pos, int val) {
        if (pos >= 1 && pos <= n) v[static_cast<std::size_t>(pos)] = val;
    };
    // beta: the exponent system whose leading block comes from a.
    auto beta = [&](const std::vector<int>& ls, const std::vector<int>& ns, const std::vector<int>& al, std::vector<int>& L,
                    std::vector<int>& N) {
        L = partial(ls);
        N = partial(ns);
        const std::vector<int> S = partial(al);
        Exps v(static_cast<std::size_t>(n + 1));
        for (std::size_t j = 0; j < ls.size(); ++j) {
            const int p0 = L[j] + N[std::min(j, N.size() - 1)];
            set(v, p0 + 1, Aa(L[j] + 1) + Bb(N[std::min(j, N.size() - 1)]) - S[static_cast<std::size_t>(std::min(p0, n))]);
            for (int d = 2; d <= ls[j]; ++d) set(v, p0 + d, a[static_cast<std::size_t>(L[j] + d - 1)]);
        }
        for (std::size_t j = 0; j < ns.size(); ++j) {
            if (j + 1 >= L.size()) continue;
            const int p0 = L[j + 1] + N[j];
            set(v, p0 + 1, Aa(L[j + 1]) + Bb(N[j] + 1) - S[static_cast<std::size_t>(std::min(p0, n))]);
            for (int d = 2; d <= ns[j]; ++d) set(v, p0 + d, b[static_cast<std::size_t>(N[j] + d - 1)]);
        }
        return v;
    };
    // gamma: the mirror system whose leading block comes from b.
    auto gamma = [&](const std::vector<int>& ls, const std::vector<int>& ns, const std::vector<int>& al, std::vector<int>& L,
                     std::vector<int>& N) {
        L = partial(ls);
        N = partial(ns);
        const std::vector<int> S = partial(al);
        Exps v(static_cast<std::size_t>(n + 1));
        for (std::size_t j = 0; j < ns.size(); ++j) {
            const int p0 = L[std::min(j, L.size() - 1)] + N[j];
            set(v, p0 + 1, Aa(L[std::min(j, L.size() - 1)]) + Bb(N[j] + 1) - S[static_cast<std::size_t>(std::min(p0, n))]);
            for (int d = 2; d <= ns[j]; ++d) set(v, p0 + d, b[static_cast<std::size_t>(N[j] + d - 1)]);
        }
        for (std::size_t j = 0; j < ls.size(); ++j) {
            if (j + 1 >= N.size()) continue;
            const int p0 = L[j] + N[j + 1];
            set(v, p0 + 1, Aa(L[j] + 1) + Bb(N[j + 1]) - S[static_cast<std::size_t>(std::min(p0, n))]);
            for (int d = 2; d <= ls[j]; ++d) set(v, p0 + d, a[static_cast<std::size_t>(L[j] + d - 1)]);
        }
        return v;
    };
    // prod_{i <= top} C(al_i, v_i) * prod_{top+2 <= j <= n} delta(al_j = tail_j)
    auto weight = [&](const std::vector<int>& al, const Exps& v, int top, const std::vector<int>& tail_src, int shift) {
        mpz_class c = 1;
        for (int i = 1; i <= top && c != 0; ++i) {
            const auto& e = v[static_cast<std::size_t>(i)];
            if (!e) throw std::logic_error("exponent system undefined at a required position");
            c *= C(al[static_cast<std::size_t>(i - 1)], *e);
        }
        for (int j = top + 2; j <= n && c != 0; ++j) {
            const int src = j - shift - 1;
            if (src < 0 || src >= static_cast<int>(tail_src.size()) || al[static_cast<std::size_t>(j - 1)] != tail_src[static_cast<std::size_t>(src)])
                c = 0;
        }
        return c;
    };

    Accumulator acc;
    auto emit = [&](const std::vector<int>& al, const mpz_class& c, int q) {
        if (c == 0) return;
        acc.add(xy_word(al), c);
        acc.add_t(merged_at(al, q), c);
    };
    const auto lcomps = positive_compositions(r);
    const auto ncomps = positive_compositions(s);
    for_each_composition(tot, n, [&](const std::vector<int>& al) {
        for (const auto& ls : lcomps)
            for (const auto& ns : ncomps) {
                const int p = static_cast<int>(ns.size());
                const int lp = static_cast<int>(ls.size());
                std::vector<int> L, N;
                if (lp == p + 1) {  // Sigma_1
                    const Exps v = beta(ls, ns, al, L, N);
                    emit(al, weight(al, v, L[static_cast<std::size_t>(p)] + s, a, s), r - ls[static_cast<std::size_t>(p)] + s);
                }
                if (lp == p) {  // Sigma_2 and Sigma_4
                    Exps v = beta(ls, ns, al, L, N);
                    emit(al, weight(al, v, r + N[static_cast<std::size_t>(p - 1)], b, r), r + s - ns[static_cast<std::size_t>(p - 1)]);
                    v = gamma(ls, ns, al, L, N);
                    emit(al, weight(al, v, s + L[static_cast<std::size_t>(p - 1)], a, s), r + s - ls[static_cast<std::size_t>(p - 1)]);
                }
                if (lp + 1 == p) {  // Sigma_3
                    const Exps v = gamma(ls, ns, al, L, N);
                    emit(al, weight(al, v, N[static_cast<std::size_t>(lp)] + r, b, r), s - ns[static_cast<std::size_t>(lp)] + r);
                }
            }
    });
    return acc.finish();
}

ZetaCombo theorem1_decomposition(int m, int p, int n, int u, int v) {
    require(m >= 2 && u >= 2, "theorem1_decomposition requires m, u >= 2");
    require(p >= 1, "theorem1_decomposition requires p >= 1");
    require(n >= 0 && v >= 0, "theorem1_decomposition requires n, v >= 0");
    std::vector<int> a{m - 1}, b{u - 1};
    for (int i = 0; i < n; ++i) a.push_back(p - 1);
    for (int i = 0; i < v; ++i) b.push_back(p - 1);
    return zt_map(general_formula(a, b));
}

ZetaCombo euler_decomposition(int i, int j) {
    require(i >= 2 && j >= 2, "euler_decomposition requires i, j >= 2");
    ZetaCombo r(Interpretation::Plain);
    for (int k = 1; k <= i; ++k) r.add_term(Index({i + j - k, k}), QtPoly(binom(i + j - k - 1, j - 1)));
    for (int k = 1; k <= j; ++k) r.add_term(Index({i + j - k, k}), QtPoly(binom(i + j - k - 1, i - 1)));
    return r;
}

// ---------------------------------------------------------------------------
// Height one.

HElement height_one_word_formula(int a, int r, int b, int s) {
    require(a >= 1 && r >= 1 && b >= 1 && s >= 1, "height_one_word_formula requires a, r, b, s >= 1");
    Accumulator acc;
    // Shuffle part.
    for_each_composition(a + b, r + s, [&](const std::vector<int>& al) {
        auto tail_zero = [&](int l) {
            for (int j = l + 2; j <= r + s; ++j)
                if (al[static_cast<std::size_t>(j - 1)] != 0) return false;
            return true;
        };
        mpz_class coef = 0;
        for (int l = 1; l <= r; ++l)
            if (tail_zero(l)) coef += C(al[0], a) * C(r + s - l - 1, r - l);
        for (int l = 1; l <= s; ++l)
            if (tail_zero(l)) coef += C(al[0], b) * C(r + s - l - 1, s - l);
        acc.add(xy_word(al), coef);
    });
    // Corrections where the y-tails of both words are still interleaving.
    auto yy_family = [&](int lead, int own, int other, int fixed) {
        // own = the word whose x-run starts the word; other block sizes.
        for (int l = 1; l < own; ++l)
            for_each_composition(a + b, l + 1, [&](const std::vector<int>& al) {
                for (int i = std::max(std::min(own - l, other - 1) - 1, 0); i <= r + s - l - 3; ++i) {
                    const mpz_class c = C(al[0], lead) * (C(i, own - l - 1) + C(i, fixed));
                    if (c != 0) acc.add_t(xy_word(al) + y_pow(i) + kX + y_pow(r + s - l - i - 2), c);
                }
            });
    };
    yy_family(a, r, s, s - 2);
    yy_family(b, s, r, r - 2);
    // delta_{s,1}: the single y of the second word finishes first.
    auto single_y = [&](int lead, int own) {
        for (int l = 1; l < own; ++l)
            for_each_composition(a + b, l + 1, [&](const std::vector<int>& al) {
                const mpz_class c = C(al[0], lead);
                if (c == 0) return;
                Word w = xy_word(std::vector<int>(al.begin(), al.begin() + l));
                acc.add_t(w + x_pow(al[static_cast<std::size_t>(l)] + 1) + y_pow(own - l), c);
            });
    };
    if (s == 1) single_y(a, r);
    if (r == 1) single_y(b, s);
    // One word's y-block is placed entirely before the other's last y.
    auto merged_runs = [&](int lead, int own, int other) {
        for_each_composition(a + b, own + 1, [&](const std::vector<int>& al) {
            const mpz_class c = C(al[0], lead);
            if (c == 0) return;
            Word w = xy_word(std::vector<int>(al.begin(), al.begin() + own - 1));
            acc.add_t(w + x_pow(al[static_cast<std::size_t>(own - 1)] + al[static_cast<std::size_t>(own)] + 1) + y_pow(other), c);
        });
    };
    merged_runs(a, r, s);
    merged_runs(b, s, r);
    return acc.finish();
}

ZetaCombo theorem2_decomposition(int a, int b, int r, int s) {
    return zt_map(height_one_word_formula(a, r, b, s));
}

// ---------------------------------------------------------------------------
// Recursive-route formula for x^m y^j * x^n y^k.

namespace {

// x^{al_1 + lead} y x^{al_2} y ... y x^{al_last} (no trailing y).
Word lead_runs(std::vector<int> al, int lead) {
    al.front() += lead;
    return runs_word(al);
}

HElement eq48_impl(int m, int j, int n, int k, bool with_k1_family) {
    require(m >= 1 && j >= 1 && n >= 1 && k >= 1, "eq48_word_formula requires m, j, n, k >= 1");
    Accumulator acc;
    for (int n1 = 0; n1 <= n; ++n1) {
        const mpz_class c0 = C(m + n1 - 1, m - 1);
        for (int m1 = 0; m1 <= j; ++m1) {
            const int m2 = j - m1;
            for_each_composition(n - n1, m1 + 1, [&](const std::vector<int>& al) {
                const Word pre = lead_runs(al, m + n1);
                acc.add(pre + y_pow(m2 + k), c0 * C(m2 + k - 1, k - 1));
                for (int i = std::max(std::min(m2, k - 1) - 1, 0); i <= m2 + k - 3; ++i) {
                    const mpz_class c = c0 * (C(i, m2 - 1) + C(i, k - 2));
                    if (c != 0) acc.add_t(pre + y_pow(i + 1) + kX + y_pow(m2 + k - i - 2), c);
                }
            });
        }
        for (int j1 = 0; j1 <= n - n1; ++j1) {
            const int j2 = n - n1 - j1;
            for_each_composition(j1, j, [&](const std::vector<int>& al) {
                acc.add_t(lead_runs(al, m + n1) + x_pow(j2 + 1) + y_pow(k), c0);
            });
        }
        if (with_k1_family && k == 1) {
            // The single y of x^n y finishes first inside x^m y^j's y-block.
            for (int i = 0; i < j; ++i)
                for_each_composition(n - n1, i + 1, [&](const std::vector<int>& al) {
                    acc.add_t(lead_runs(al, m + n1) + kX + y_pow(j - i), c0);
                });
        }
    }
    for (int k1 = 1; k1 <= k; ++k1)
        for (int m1 = 0; m1 < m; ++m1) {
            const int m2 = m - 1 - m1;
            const mpz_class c0 = C(m1 + n - 1, n - 1);
            for_each_composition(m2, k1 + 1, [&](const std::vector<int>& bb) {
                const Word base = lead_runs(std::vector<int>(bb.begin(), bb.begin() + k1), n + m1) + kY +
                                  x_pow(bb[static_cast<std::size_t>(k1)] + 1);
                acc.add(base + y_pow(j + k - k1), c0 * C(j + k - k1, j));
                for (int i = std::max(std::min(j, k - k1) - 1, 0); i <= j + k - k1 - 2; ++i) {
                    const mpz_class c = c0 * (C(i, j - 1) + C(i, k - k1 - 1));
                    if (c != 0) acc.add_t(base + y_pow(i) + kX + y_pow(j + k - k1 - i - 1), c);
                }
            });
        }
    for (int m1 = 0; m1 < m; ++m1)
        for (int m2 = 0; m2 < m - m1; ++m2) {
            const int m3 = m - 1 - m1 - m2;
            const mpz_class c0 = C(m1 + n - 1, n - 1);
            for_each_composition(m2, k, [&](const std::vector<int>& al) {
                acc.add_t(lead_runs(al, n + m1) + x_pow(m3 + 2) + y_pow(j), c0);
            });
        }
    return acc.finish();
}

}  // namespace

HElement eq48_word_formula(int m, int j, int n, int k) { return eq48_impl(m, j, n, k, true); }

HElement eq48_word_formula_uncorrected(int m, int j, int n, int k) { return eq48_impl(m, j, n, k, false); }

ZetaCombo theorem3_decomposition(int m, int j, int n, int k) { return zt_map(eq48_word_formula(m, j, n, k)); }

// ---------------------------------------------------------------------------
// Height two.

HElement height_two_case_formula(int a, int r, int b1, int s1, int b2, int s2) {
    require(a >= 0 && b1 >= 0 && b2 >= 0, "height_two_case_formula requires a, b1, b2 >= 0");
    require(r >= 1 && s1 >= 1 && s2 >= 1, "height_two_case_formula requires r, s1, s2 >= 1");
    Accumulator acc;
    // -t sum over the t-part of y^p * y^q appended to pre.
    auto add_yy = [&](const Word& pre, int p, int q, const mpz_class& c) {
        const HElement part = yy_t_part(p, q);
        for (const auto& [w, poly] : part.terms()) acc.add_t(pre + w, c * poly.coeff(0).get_num());
    };
    // Tail of the product once both words have placed their prefixes: the
    // remaining y^p of the first word against y^q of the second word. When one
    // side is empty the word that already finished has its last y (number
    // `finisher`) replaced.
    auto tail = [&](const Word& pre, const mpz_class& c, int p, int q, int finisher) {
        acc.add(pre + y_pow(p + q), c * C(p + q, p));
        if (p >= 1 && q >= 1)
            add_yy(pre, p, q, c);
        else
            acc.add_t(subst_y(pre, finisher) + y_pow(p + q), c);
    };

    // (i) the first y of x^a y^r comes before every y of the second word.
    for (int r1 = 1; r1 <= r; ++r1)
        for (int r2 = 0; r2 <= r - r1; ++r2) {
            if (s1 == 1 && r2 > 0) continue;
            for (int r3 = 0; r3 <= r - r1 - r2; ++r3) {
                const int r4 = r - r1 - r2 - r3;
                for_each_composition(b1, r1 + 1, [&](const std::vector<int>& al) {
                    const mpz_class c0 = C(al[0] + a, a);
                    if (c0 == 0) return;
                    const Word P = lead_runs(al, a) + kY;
                    const mpz_class mult = s1 >= 2 ? C(r2 + s1 - 2, r2) : mpz_class(1);
                    const int ny_region = s1 >= 2 ? r2 + s1 - 2 : 0;
                    const int nyP = r1 + 1 + (s1 >= 2 ? ny_region + 1 : 0);
                    const mpz_class base = c0 * mult;
                    for_each_composition(b2, r3 + 1, [&](const std::vector<int>& be) {
                        const Word mid = runs_word(be) + kY;
                        const Word pre = s1 >= 2 ? P + y_pow(ny_region) + kY + mid : P + mid;
                        if (r4 >= 1) {
                            acc.add(pre + y_pow(r4 + s2 - 1), base * C(r4 + s2 - 1, r4));
                            if (s2 >= 2)
                                add_yy(pre, r4, s2 - 1, base);
                            else
                                acc.add_t(subst_y(pre, nyP + r3 + 1) + y_pow(r4), base);
                        } else {
                            acc.add(pre + y_pow(s2 - 1), base);
                            if (r3 >= 1) {
                                acc.add_t(subst_y(pre, nyP + r3) + y_pow(s2 - 1), base);
                            } else if (r2 >= 1) {
                                for (int i = r2 - 1; i <= r2 + s1 - 3; ++i) {
                                    const mpz_class cc = C(i, r2 - 1);
                                    if (cc != 0)
                                        acc.add_t(P + y_pow(i) + kX + y_pow(r2 + s1 - 2 - i) + mid + y_pow(s2 - 1), c0 * cc);
                                }
                            } else {
                                acc.add_t(subst_y(pre, r1) + y_pow(s2 - 1), base);
                            }
                        }
                    });
                });
            }
        }
    // (ii) the first y of x^a y^r comes after l of the first block's y's.
    for (int l = 1; l < s1; ++l)
        for (int r1 = 1; r1 <= r; ++r1)
            for (int r2 = 0; r2 <= r - r1; ++r2) {
                const int r3 = r - r1 - r2;
                for_each_composition(a, l + 1, [&](const std::vector<int>& al) {
                    const mpz_class c0 = C(al[0] + b1, b1);
                    if (c0 == 0) return;
                    const Word P = lead_runs(al, b1) + kY;
                    const int nreg = r1 + s1 - l - 2;
                    const mpz_class base = c0 * C(nreg, r1 - 1);
                    const int nyP = l + 1 + nreg + 1;
                    for_each_composition(b2, r2 + 1, [&](const std::vector<int>& be) {
                        const Word mid = runs_word(be) + kY;
                        const Word pre = P + y_pow(nreg) + kY + mid;
                        if (r3 >= 1) {
                            tail(pre, base, r3, s2 - 1, nyP + r2 + 1);
                        } else {
                            acc.add(pre + y_pow(s2 - 1), base);
                            if (r2 >= 1) {
                                acc.add_t(subst_y(pre, nyP + r2) + y_pow(s2 - 1), base);
                            } else if (r1 >= 2) {
                                for (int i = r1 - 2; i <= r1 + s1 - l - 3; ++i) {
                                    const mpz_class cc = C(i, r1 - 2);
                                    if (cc != 0)
                                        acc.add_t(P + y_pow(i) + kX + y_pow(r1 + s1 - l - 2 - i) + mid + y_pow(s2 - 1), c0 * cc);
                                }
                            } else {
                                acc.add_t(subst_y(pre, l + 1) + y_pow(s2 - 1), base);
                            }
                        }
                    });
                });
            }
    // (iii) the first y of x^a y^r comes right after the first y-block.
    for (int r1 = 1; r1 <= r; ++r1) {
        const int r2 = r - r1;
        for_each_composition(a, s1 + 1, [&](const std::vector<int>& al) {
            for_each_composition(b2, r1 + 1, [&](const std::vector<int>& be) {
                const mpz_class c0 = C(al[0] + b1, b1) * C(al.back() + be[0], be[0]);
                if (c0 == 0) return;
                std::vector<int> g(al.begin(), al.end() - 1);
                g[0] += b1;
                g.push_back(al.back() + be[0]);
                g.insert(g.end(), be.begin() + 1, be.end());
                const Word pre = runs_word(g) + kY;
                if (r2 >= 1) {
                    tail(pre, c0, r2, s2 - 1, s1 + r1 + 1);
                } else {
                    acc.add(pre + y_pow(s2 - 1), c0);
                    acc.add_t(subst_y(pre, s1 + r1) + y_pow(s2 - 1), c0);
                }
            });
        });
    }
    // (iv) the first y of x^a y^r comes after l of the second block's y's.
    for (int l = 1; l <= s2; ++l)
        for_each_composition(a, s1 + l + 1, [&](const std::vector<int>& al) {
            std::vector<int> g = al;
            g[0] += b1;
            g[static_cast<std::size_t>(s1)] += b2;
            const mpz_class c0 = C(g[0], b1) * C(g[static_cast<std::size_t>(s1)], b2);
            if (c0 == 0) return;
            const Word pre = runs_word(g) + kY;
            if (l < s2) {
                tail(pre, c0, r - 1, s2 - l, s1 + l + 1);
            } else {
                acc.add(pre + y_pow(r - 1), c0);
                acc.add_t(subst_y(pre, s1 + s2) + y_pow(r - 1), c0);
            }
        });
    return acc.finish();
}

// ---------------------------------------------------------------------------
// Alternating sums.

HElement alternating_sum_lhs(int k, int p) {
    require(k >= 1 && p >= 1, "alternating_sum_lhs requires k, p >= 1");
    TShuffleEngine engine;
    HElement r;
    for (int i = 0; i <= k; ++i) {
        const Word u = zw(cat({p}, ones(i)));
        const Word v = zw(cat({p}, ones(k - i)));
        HElement term = engine.product(u, v);
        if (i % 2 == 1) term = -term;
        r += term;
    }
    return r;
}

namespace {

// Shared merge families of the alternating-sum closed form (the element
// multiplied by -2t). `last_weight(l)` gives the weight of the final family.
void alternating_merge_families(Accumulator& T, int k, int p, const std::function<long(int)>& last_weight) {
    const int P = 2 * (p - 1);
    const int h = k / 2;
    auto w0 = [&](const std::vector<int>& al) { return C(al[0], p - 1); };
    for (int l = 1; l <= k; ++l)
        for_each_composition(P, l + 1, [&](const std::vector<int>& al) {
            T.add(zw(cat(cat(plus_one(al, 0, static_cast<std::size_t>(l)), {al[static_cast<std::size_t>(l)] + 2}), ones(k - l))),
                  w0(al));
        });
    for_each_composition(P, 2, [&](const std::vector<int>& al) { T.add(zw(cat({al[0] + al[1] + 2}, ones(k))), w0(al)); });
    for_each_composition(P, k + 2, [&](const std::vector<int>& al) {
        const auto uk = static_cast<std::size_t>(k);
        T.add(zw(cat(plus_one(al, 0, uk), {al[uk] + al[uk + 1] + 2})), w0(al));
    });
    for (int i = 1; i <= h; ++i)
        for_each_composition(P, i + 2, [&](const std::vector<int>& al) {
            const auto ui = static_cast<std::size_t>(i);
            const int sign = i % 2 == 0 ? 1 : -1;
            T.add(zw(cat(cat(plus_one(al, 0, ui), {al[ui] + al[ui + 1] + 2}), ones(k - i))), sign * w0(al));
        });
    for (int i = 1; i < h; ++i)
        for_each_composition(P, k - i + 2, [&](const std::vector<int>& al) {
            const auto uki = static_cast<std::size_t>(k - i);
            const int sign = i % 2 == 0 ? 1 : -1;
            T.add(zw(cat(cat(plus_one(al, 0, uki), {al[uki] + al[uki + 1] + 2}), ones(i))), sign * w0(al));
        });
    for (int l = 1; l < k; ++l) {
        const long c = last_weight(l);
        if (c == 0) continue;
        for_each_composition(P, l + 1, [&](const std::vector<int>& al) {
            T.add(zw(cat(cat(plus_one(al, 0, al.size()), {2}), ones(k - l - 1))), c * w0(al));
        });
    }
}

HElement finish_alternating(Accumulator& shuffle_part, const Accumulator& T) {
    HElement r = shuffle_part.finish();
    r += QtPoly::t_power(1, -2) * T.finish();
    return r;
}

}  // namespace

HElement alternating_sum_rhs(int k, int p) {
    require(p >= 1, "alternating_sum_rhs requires p >= 1");
    require(k >= 2 && k % 2 == 0, "alternating_sum_rhs requires an even k >= 2");
    const int P = 2 * (p - 1);
    Accumulator S, T;
    for_each_composition(P, k + 2, [&](const std::vector<int>& al) {
        S.add(zw(plus_one(al, 0, al.size())), 2 * C(al[0], p - 1));
    });
    alternating_merge_families(T, k, p, [](int l) { return -1L + (l % 2 == 0 ? 1L : -1L); });
    return finish_alternating(S, T);
}

HElement alternating_sum_rhs_uncorrected(int k, int p) {
    require(p >= 1, "alternating_sum_rhs requires p >= 1");
    require(k >= 2 && k % 2 == 0, "alternating_sum_rhs requires an even k >= 2");
    const int P = 2 * (p - 1);
    const int h = k / 2;
    auto sgn = [](int d) { return d % 2 == 0 ? 1L : -1L; };
    Accumulator S, T;
    // 2[2 sum_{d=1}^{k/2-1} (-1)^d C(k,d) + (-1)^{k/2} C(k,k/2)] on the depth-2 head.
    mpz_class c1 = 0;
    for (int d = 1; d < h; ++d) c1 += sgn(d) * C(k, d);
    c1 = 2 * (2 * c1 + sgn(h) * C(k, h));
    for_each_composition(P, 2, [&](const std::vector<int>& al) {
        S.add(zw(cat({al[0] + 1, al[1] + 1}, ones(k))), c1 * C(al[0], p - 1));
    });
    for (int l = 2; l <= k; ++l) {
        mpz_class c = 0;
        if (l <= h + 1) {
            for (int d = l - 1; d <= h; ++d) c += sgn(d) * C(k + 1 - l, d + 1 - l);
            for (int d = 1; d < h; ++d) c += sgn(d) * C(k + 1 - l, d);
        } else {
            c = -1;  // the bracket "-sum_{l=k/2+2}^{k}" read as -1 per l
        }
        c *= 2;
        for_each_composition(P, l + 1, [&](const std::vector<int>& al) {
            S.add(zw(cat(plus_one(al, 0, al.size()), ones(k + 1 - l))), c * C(al[0], p - 1));
        });
    }
    alternating_merge_families(T, k, p, [&](int l) { return -1L + sgn(l) - ((k == 2 && l <= h) ? 1L : 0L); });
    return finish_alternating(S, T);
}

HElement corollary42_rhs(int k) {
    require(k >= 1, "corollary42_rhs requires k >= 1");
    if (k % 2 == 1) return HElement();
    Accumulator acc;
    for_each_composition(1, k + 2, [&](const std::vector<int>& al) {
        const int last = al.back();
        acc.add(zw(cat({last + 2}, plus_one(al, 0, al.size() - 1))), 2 * (last + 1));
    });
    for (int i = 0; i < k; ++i) {
        const long c = 2 * (2 * (i % 2 == 0 ? 1 : -1) - 1);
        acc.add(zw(cat(cat(cat({2}, ones(i)), {3}), ones(k - i - 1))), c, 1);
    }
    acc.add(zw(cat({4}, ones(k))), -6, 1);
    return acc.finish();
}

std::pair<ZetaCombo, ZetaCombo> prop43_identity(int k) {
    require(k >= 1, "prop43_identity requires k >= 1");
    return {zt_map(alternating_sum_lhs(k, 2)), zt_map(corollary42_rhs(k))};
}

// ---------------------------------------------------------------------------
// Discrepancy report.

namespace {

struct GridResult {
    int cases = 0;
    int mismatches = 0;
    nlohmann::json examples = nlohmann::json::array();

    void record(const nlohmann::json& params, const HElement& got, const HElement& expected) {
        ++cases;
        if (got == expected) return;
        ++mismatches;
        if (examples.size() < 3) {
            nlohmann::json diff = nlohmann::json::array();
            for (const auto& line : describe_difference(got, expected, 6)) diff.push_back(line);
            examples.push_back({{"params", params}, {"difference", diff}});
        }
    }
    nlohmann::json to_json(const std::string& formula, const std::string& grid, const std::string& note) const {
        return {{"formula", formula}, {"grid", grid},        {"cases", cases},
                {"mismatches", mismatches}, {"examples", examples}, {"note", note}};
    }
};

void for_each_vector(int len, int max_entry, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> v(static_cast<std::size_t>(len), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == v.size()) {
            f(v);
            return;
        }
        for (int e = 0; e <= max_entry; ++e) {
            v[i] = e;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace

nlohmann::json discrepancy_report() {
    nlohmann::json entries = nlohmann::json::array();
    TShuffleEngine engine;

    {
        GridResult g;
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s)
                for_each_vector(r, 2, [&](const std::vector<int>& a) {
                    for_each_vector(s, 2, [&](const std::vector<int>& b) {
                        g.record({{"a", a}, {"b", b}}, general_formula_sums(a, b), engine.product(xy_word(a), xy_word(b)));
                    });
                });
        entries.push_back(g.to_json("general_formula_sums", "r,s<=3, entries<=2",
                                    "coefficient sums with beta/gamma exponent systems, direct transcription"));
    }
    {
        GridResult g;
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int r = 1; r <= 4; ++r)
                    for (int s = 1; s <= 4; ++s)
                        g.record({{"a", a}, {"r", r}, {"b", b}, {"s", s}}, height_one_word_formula(a, r, b, s),
                                 engine.product(x_pow(a) + y_pow(r), x_pow(b) + y_pow(s)));
        entries.push_back(g.to_json("height_one_word_formula", "1<=a,b<=3, 1<=r,s<=4", "direct transcription"));
    }
    {
        GridResult g;
        for (int m = 1; m <= 3; ++m)
            for (int j = 1; j <= 3; ++j)
                for (int n = 1; n <= 3; ++n)
                    for (int k = 1; k <= 3; ++k)
                        g.record({{"m", m}, {"j", j}, {"n", n}, {"k", k}}, eq48_word_formula_uncorrected(m, j, n, k),
                                 engine.product(x_pow(m) + y_pow(j), x_pow(n) + y_pow(k)));
        entries.push_back(g.to_json("eq48_word_formula_uncorrected", "1<=m,j,n,k<=3",
                                    "uncorrected: lacks the -t family in which the single y of x^n y finishes inside "
                                    "the y-block of x^m y^j (k = 1), and the corresponding block subscript"));
    }
    {
        GridResult g;
        for (int l1 = 0; l1 <= 4; ++l1)
            for (int l2 = 0; l2 <= 4; ++l2)
                for (std::uint64_t m1 = 0; m1 < (1ULL << l1); ++m1)
                    for (std::uint64_t m2 = 0; m2 < (1ULL << l2); ++m2) {
                        Word u, v;
                        for (int i = l1 - 1; i >= 0; --i) u.append((m1 >> i) & 1U ? Letter::Y : Letter::X);
                        for (int i = l2 - 1; i >= 0; --i) v.append((m2 >> i) & 1U ? Letter::Y : Letter::X);
                        g.record({{"w1", u.str()}, {"w2", v.str()}}, block_recursive_uncorrected(word_blocks(u), word_blocks(v)),
                                 engine.product(u, v));
                    }
        entries.push_back(g.to_json("block_recursive_uncorrected", "all word pairs of length <= 4",
                                    "uncorrected: trailing term uses a_1^{m_1} instead of a_1^{m_1-1}, and the "
                                    "single-block range stops before the last block of the second word"));
    }
    {
        GridResult g;
        for (int p = 2; p <= 3; ++p)
            for (int k = 2; k <= 6; k += 2)
                g.record({{"k", k}, {"p", p}}, alternating_sum_rhs_uncorrected(k, p), alternating_sum_lhs(k, p));
        entries.push_back(g.to_json("alternating_sum_rhs_uncorrected", "k in {2,4,6}, p in {2,3}",
                                    "uncorrected: bracketed binomial weights on the shuffle part (the unlabeled "
                                    "bracket read as -1 per l) and the extra -delta_{k,2} term"));
    }
    {
        GridResult g;
        for (int k = 1; k <= 6; ++k) g.record({{"k", k}}, corollary42_rhs(k), alternating_sum_lhs(k, 2));
        entries.push_back(g.to_json("corollary42_rhs", "1<=k<=6, p=2", "direct transcription"));
    }
    return {{"schema", 1}, {"report", "formula-discrepancy"}, {"entries", entries}};
}

}  // namespace imzv
