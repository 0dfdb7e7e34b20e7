// Product engines on H_t: the recursive t-shuffle (ground truth), the plain
// combinatorial shuffle, and the small closed forms and recursive
// decompositions built on them.
#ifndef IMZV_TSHUFFLE_HPP
#define IMZV_TSHUFFLE_HPP

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "imzv/halg.hpp"
#include "imzv/words.hpp"

namespace imzv {

struct WordPairHash {
    std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
        const std::size_t h1 = WordHash{}(p.first);
        const std::size_t h2 = WordHash{}(p.second);
        return h1 ^ (h2 + 0x9E3779B97F4A7C15ULL + (h1 << 6) + (h1 >> 2));
    }
};

// Direct recursion on the defining rules
//   1 * w = w * 1 = w,
//   a w1 * b w2 = a (w1 * b w2) + b (a w1 * w2)
//                 - delta(w1) rho(a) b w2 - delta(w2) rho(b) a w1,
// with rho(x) = 0, rho(y) = t x and delta the empty-word indicator.
// Results are memoised on exact (ordered) word pairs for the lifetime of the
// engine; create one engine per computation.
class TShuffleEngine {
public:
    const HElement& product(const Word& u, const Word& v);
    HElement product(const HElement& u, const HElement& v);
    std::size_t cache_size() const { return memo_.size(); }

private:
    std::unordered_map<std::pair<Word, Word>, HElement, WordPairHash> memo_;
};

// t-shuffle of two words with a fresh per-call cache.
HElement tshuffle_words(const Word& w1, const Word& w2);
// Bilinear extension.
HElement tshuffle(const HElement& u, const HElement& v);

// Sum over all order-preserving interleavings (the t = 0 product).
HElement shuffle_combinatorial(const Word& w1, const Word& w2);
HElement shuffle(const HElement& u, const HElement& v);

// y^m * y^n = C(m+n, n) y^{m+n}
//             - t sum_{i=min(m,n)-1}^{m+n-2} [C(i,m-1) + C(i,n-1)] y^i x y^{m+n-i-1}.
// Requires m, n >= 1.
HElement yy_closed_form(int m, int n);
// Only the bracketed t-coefficient sum of yy_closed_form (without -t).
HElement yy_t_part(int m, int n);

// B^m_{n+1} = sum over m_1+...+m_{n+1} = m of x^{m_1} y ... x^{m_n} y x^{m_{n+1}}.
HElement block_B(int n_plus_1, int m);
// C^{m-1}_n = sum_{i=0}^{m-1} sum over m_1+...+m_n = i of
//             x^{m_1} y ... x^{m_{n-1}} y x^{m_n + m - i + 1}; zero if n == 0.
HElement block_C(int n, int m_minus_1);

// Splits a at its k-th letter (1-based): interleave-prefix sum over the
// prefixes b_1..b_i, the rho(b_n) correction and, when k = |a|, the
// rho(a_m) correction. Prefixes are combined with the plain shuffle and
// suffixes with the t-shuffle, itself evaluated by this formula at k = 1.
// Throws std::invalid_argument unless 1 <= k <= |a|.
HElement split_formula(const Word& a, const Word& b, std::size_t k);

struct Block {
    Letter letter;
    int exponent;
};
Word expand_blocks(const std::vector<Block>& blocks);

// Recursive block formula for (a_1^{m_1}...a_k^{m_k}) * (b_1^{n_1}...b_l^{n_l}):
// split at the last letter of the first a-block. Zero-exponent blocks are
// dropped first. Uses the corrected trailing term (a_1^{m_1-1} shuffled with
// the rho-modified b) and the full delta_{k,1} range of split positions.
HElement block_recursive(const std::vector<Block>& blocks_a, const std::vector<Block>& blocks_b);
// The uncorrected recursion: trailing term built from a_1^{m_1} and split
// positions ending in blocks 1..l-1 only. Kept to report where it departs
// from the oracle.
HElement block_recursive_uncorrected(const std::vector<Block>& blocks_a, const std::vector<Block>& blocks_b);

// Maximal runs of a word, e.g. "xxyx" -> (x,2)(y,1)(x,1).
std::vector<Block> word_blocks(const Word& w);

}  // namespace imzv

#endif  // IMZV_TSHUFFLE_HPP
