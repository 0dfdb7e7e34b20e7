#include "imzv/tshuffle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "imzv/compositions.hpp"

namespace imzv {

namespace {

const Word kX = Word::letter(Letter::X);

// -t * w
QtPoly minus_t() { return QtPoly::t_power(1, -1); }

}  // namespace

const HElement& TShuffleEngine::product(const Word& u, const Word& v) {
    const auto key = std::make_pair(u, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    HElement r;
    if (u.empty()) {
        r = HElement(v);
    } else if (v.empty()) {
        r = HElement(u);
    } else {
        const Letter a = u.front();
        const Letter b = v.front();
        const Word w1 = u.suffix_from(1);
        const Word w2 = v.suffix_from(1);
        // References into the memo survive later insertions (node-based map).
        r = product(w1, v).left_multiplied(a);
        r += product(u, w2).left_multiplied(b);
        if (w1.empty() && a == Letter::Y) r.add_term(kX + v, minus_t());
        if (w2.empty() && b == Letter::Y) r.add_term(kX + u, minus_t());
    }
    return memo_.emplace(key, std::move(r)).first->second;
}

HElement TShuffleEngine::product(const HElement& u, const HElement& v) {
    HElement r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) {
            const QtPoly c = cu * cv;
            for (const auto& [w, p] : product(wu, wv).terms()) r.add_term(w, c * p);
        }
    return r;
}

HElement tshuffle_words(const Word& w1, const Word& w2) {
    TShuffleEngine engine;
    return engine.product(w1, w2);
}

HElement tshuffle(const HElement& u, const HElement& v) {
    TShuffleEngine engine;
    return engine.product(u, v);
}

HElement shuffle_combinatorial(const Word& w1, const Word& w2) {
    // Enumerate the order-preserving interleavings one letter at a time: at
    // each position the next letter comes either from w1 or from w2.
    std::unordered_map<Word, std::uint64_t, WordHash> counts;
    const std::size_t n = w1.length();
    const std::size_t m = w2.length();
    std::function<void(std::size_t, std::size_t, Word)> rec = [&](std::size_t i, std::size_t j, Word acc) {
        if (i == n && j == m) {
            ++counts[acc];
            return;
        }
        if (i < n) rec(i + 1, j, Word(acc).append(w1.at(i)));
        if (j < m) rec(i, j + 1, Word(acc).append(w2.at(j)));
    };
    rec(0, 0, Word());
    HElement r;
    for (const auto& [w, c] : counts) r.add_term(w, QtPoly(Rational(mpz_class(static_cast<unsigned long>(c)))));
    return r;
}

HElement shuffle(const HElement& u, const HElement& v) {
    HElement r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) {
            const QtPoly c = cu * cv;
            for (const auto& [w, p] : shuffle_combinatorial(wu, wv).terms()) r.add_term(w, c * p);
        }
    return r;
}

HElement yy_t_part(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("yy_closed_form requires m, n >= 1");
    HElement r;
    const int lo = std::max(std::min(m, n) - 1, 0);
    for (int i = lo; i <= m + n - 2; ++i) {
        const Rational c = binom(i, m - 1) + binom(i, n - 1);
        if (c != 0) r.add_term(y_pow(i) + kX + y_pow(m + n - i - 1), QtPoly(c));
    }
    return r;
}

HElement yy_closed_form(int m, int n) {
    HElement r(y_pow(m + n), QtPoly(binom(m + n, n)));
    r += minus_t() * yy_t_part(m, n);
    return r;
}

HElement block_B(int n_plus_1, int m) {
    if (n_plus_1 < 1 || m < 0) throw std::invalid_argument("block_B requires n+1 >= 1 and m >= 0");
    HElement r;
    for_each_composition(m, n_plus_1, [&](const std::vector<int>& c) { r.add_term(runs_word(c), QtPoly(1)); });
    return r;
}

HElement block_C(int n, int m_minus_1) {
    if (n < 0 || m_minus_1 < -1) throw std::invalid_argument("block_C requires n >= 0 and m >= 0");
    HElement r;
    if (n == 0) return r;
    const int m = m_minus_1 + 1;
    for (int i = 0; i <= m - 1; ++i)
        for_each_composition(i, n, [&](const std::vector<int>& c) {
            std::vector<int> e = c;
            e.back() += m - i + 1;
            r.add_term(runs_word(e), QtPoly(1));
        });
    return r;
}

namespace {

class SplitEvaluator {
public:
    HElement eval(const Word& a, const Word& b, std::size_t k) {
        const std::size_t m = a.length();
        const std::size_t n = b.length();
        HElement r;
        const Word a_pre = a.prefix(k - 1);
        const Letter a_k = a.at(k - 1);
        const Word a_post = a.suffix_from(k);
        for (std::size_t i = 0; i <= n; ++i) {
            const HElement pre = shuffle_combinatorial(a_pre, b.prefix(i));
            const HElement& suf = suffix_product(a_post, b.suffix_from(i));
            r += h_concat(h_concat(pre, HElement(Word::letter(a_k))), suf);
        }
        if (n >= 1 && b.back() == Letter::Y) {
            // -(a_1..a_{k-1} sh b_1..b_{n-1} rho(b_n)) a_k..a_m
            const Word b_mod = b.prefix(n - 1) + kX;
            r += minus_t() * h_concat(shuffle_combinatorial(a_pre, b_mod), HElement(a.suffix_from(k - 1)));
        }
        if (k == m && a.back() == Letter::Y) {
            for (std::size_t i = 0; i + 1 <= n; ++i) {
                const HElement pre = shuffle_combinatorial(a.prefix(m - 1), b.prefix(i));
                r += minus_t() * h_concat(pre, HElement(kX + b.suffix_from(i)));
            }
        }
        return r;
    }

private:
    const HElement& suffix_product(const Word& a, const Word& b) {
        const auto key = std::make_pair(a, b);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        HElement r;
        if (a.empty())
            r = HElement(b);
        else if (b.empty())
            r = HElement(a);
        else
            r = eval(a, b, 1);
        return memo_.emplace(key, std::move(r)).first->second;
    }

    std::unordered_map<std::pair<Word, Word>, HElement, WordPairHash> memo_;
};

}  // namespace

HElement split_formula(const Word& a, const Word& b, std::size_t k) {
    if (k < 1 || k > a.length()) throw std::invalid_argument("split_formula requires 1 <= k <= |a|");
    SplitEvaluator ev;
    return ev.eval(a, b, k);
}

Word expand_blocks(const std::vector<Block>& blocks) {
    Word w;
    for (const auto& bl : blocks) {
        if (bl.exponent < 0) throw std::invalid_argument("block exponents must be >= 0");
        w.append(Word::power(bl.letter, static_cast<std::size_t>(bl.exponent)));
    }
    return w;
}

std::vector<Block> word_blocks(const Word& w) {
    std::vector<Block> out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (!out.empty() && out.back().letter == w.at(i))
            ++out.back().exponent;
        else
            out.push_back({w.at(i), 1});
    }
    return out;
}

namespace {

std::vector<Block> drop_empty(const std::vector<Block>& blocks) {
    std::vector<Block> out;
    for (const auto& bl : blocks) {
        if (bl.exponent < 0) throw std::invalid_argument("block exponents must be >= 0");
        if (bl.exponent > 0) out.push_back(bl);
    }
    return out;
}

// Blocks of b after removing its first i letters.
std::vector<Block> drop_letters(const std::vector<Block>& b, int i) {
    std::vector<Block> out;
    int seen = 0;
    for (const auto& bl : b) {
        const int keep = bl.exponent - std::max(0, i - seen);
        if (keep > 0) out.push_back({bl.letter, keep});
        seen += bl.exponent;
    }
    return out;
}

HElement block_rec(const std::vector<Block>& A_in, const std::vector<Block>& B_in, bool uncorrected) {
    const std::vector<Block> A = drop_empty(A_in);
    const std::vector<Block> B = drop_empty(B_in);
    if (A.empty()) return HElement(expand_blocks(B));
    if (B.empty()) return HElement(expand_blocks(A));

    const Letter a1 = A.front().letter;
    const int m1 = A.front().exponent;
    const std::vector<Block> rest(A.begin() + 1, A.end());
    const Word a_head = Word::power(a1, static_cast<std::size_t>(m1 - 1));
    const Word bw = expand_blocks(B);
    const int n = static_cast<int>(bw.length());
    const HElement a1_letter(Word::letter(a1));

    HElement r;
    // Prefix-split sum: (a_1^{m_1-1} sh b_1..b_i) a_1 (rest * b_{i+1}..b_n),
    // i = 0 giving a_1^{m_1} (rest * b).
    for (int i = 0; i <= n; ++i) {
        const HElement pre = shuffle_combinatorial(a_head, bw.prefix(static_cast<std::size_t>(i)));
        const HElement inner = block_rec(rest, drop_letters(B, i), uncorrected);
        r += h_concat(h_concat(pre, a1_letter), inner);
    }
    if (A.size() == 1 && a1 == Letter::Y) {
        // delta_{k,1}: the single a-block ends first; its last y becomes t x.
        int last_i = n - 1;
        if (uncorrected) last_i = n - B.back().exponent;  // only splits ending in blocks 1..l-1
        for (int i = 0; i <= last_i; ++i) {
            const HElement pre = shuffle_combinatorial(a_head, bw.prefix(static_cast<std::size_t>(i)));
            r += minus_t() * h_concat(pre, HElement(kX + bw.suffix_from(static_cast<std::size_t>(i))));
        }
    }
    if (B.back().letter == Letter::Y) {
        const Word b_mod = bw.prefix(static_cast<std::size_t>(n - 1)) + kX;
        const Word head = uncorrected ? Word::power(a1, static_cast<std::size_t>(m1)) : a_head;
        r += minus_t() * h_concat(shuffle_combinatorial(head, b_mod), HElement(Word::letter(a1) + expand_blocks(rest)));
    }
    return r;
}

}  // namespace

HElement block_recursive(const std::vector<Block>& blocks_a, const std::vector<Block>& blocks_b) {
    return block_rec(blocks_a, blocks_b, false);
}

HElement block_recursive_uncorrected(const std::vector<Block>& blocks_a, const std::vector<Block>& blocks_b) {
    return block_rec(blocks_a, blocks_b, true);
}

}  // namespace imzv
