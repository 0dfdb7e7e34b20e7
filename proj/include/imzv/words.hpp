// Letters, words over {x, y}, indices, the z_k encoding and MZV duality.
#ifndef IMZV_WORDS_HPP
#define IMZV_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace imzv {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

char to_char(Letter a);

// A word over {x, y}, packed into a 64-bit mask: the first letter is the most
// significant of the `length()` used bits, x = 0 and y = 1. With this layout,
// numeric comparison of equal-length words is lexicographic with x < y.
class Word {
public:
    static constexpr std::size_t max_length = 64;

    Word() = default;  // the empty word (algebra unit)
    // Parses a lowercase x/y string; "1" and "" denote the empty word.
    // Throws std::invalid_argument for any other character.
    explicit Word(std::string_view letters);

    static Word letter(Letter a);
    static Word power(Letter a, std::size_t n);
    // x^{k-1} y
    static Word z(int k);

    std::size_t length() const { return len_; }
    bool empty() const { return len_ == 0; }
    Letter at(std::size_t i) const;
    Letter front() const { return at(0); }
    Letter back() const { return at(len_ - 1); }
    std::size_t count(Letter a) const;

    // Subword of letters [pos, pos + n).
    Word substr(std::size_t pos, std::size_t n) const;
    Word prefix(std::size_t n) const { return substr(0, n); }
    Word suffix_from(std::size_t pos) const { return substr(pos, len_ - pos); }

    Word& append(Letter a);
    Word& append(const Word& w);
    Word prepended(Letter a) const;
    friend Word operator+(Word u, const Word& v) { return u.append(v); }

    // Replace the letter at position i.
    Word with_letter(std::size_t i, Letter a) const;

    // Canonical text: "xxy"; the empty word prints as "1".
    std::string str() const;

    std::uint64_t bits() const { return bits_; }

    friend bool operator==(const Word& u, const Word& v) = default;
    // Graded lexicographic order: shorter words first, then x < y.
    friend std::strong_ordering operator<=>(const Word& u, const Word& v) {
        if (auto c = u.len_ <=> v.len_; c != 0) return c;
        return u.bits_ <=> v.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::uint64_t h = w.bits() * 0x9E3779B97F4A7C15ULL ^ (w.length() + 0x632BE59BD9B4E019ULL);
        h ^= h >> 29;
        return static_cast<std::size_t>(h);
    }
};

// Composition of positive integers: the argument list of a zeta symbol.
class Index {
public:
    Index() = default;
    // Throws std::invalid_argument if empty or any part is < 1.
    explicit Index(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int depth() const { return static_cast<int>(parts_.size()); }
    int height() const;
    bool admissible() const { return !parts_.empty() && parts_.front() >= 2; }

    // "(3,1,2)"
    std::string str() const;

    friend bool operator==(const Index& a, const Index& b) = default;
    // Ordered by the graded-lex order of the encoding words.
    friend std::strong_ordering operator<=>(const Index& a, const Index& b);

private:
    std::vector<int> parts_;
};

// Parses "(3,1,2)" (parentheses optional, whitespace ignored).
Index parse_index(std::string_view text);

Word word_from_index(const Index& idx);
// Throws std::invalid_argument for the empty word or a word ending in x.
Index index_from_word(const Word& w);

// True iff w is empty, or starts with x and ends with y.
bool is_admissible(const Word& w);
// True iff w is empty or ends with y.
bool in_h1_word(const Word& w);

// Reverse and swap x <-> y. Throws std::invalid_argument unless w is a
// nonempty admissible word.
Word dual(const Word& w);
Index dual(const Index& idx);

}  // namespace imzv

template <>
struct std::hash<imzv::Word> : imzv::WordHash {};

#endif  // IMZV_WORDS_HPP
