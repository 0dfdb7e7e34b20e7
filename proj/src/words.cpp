#include "imzv/words.hpp"

#include <cctype>
#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace imzv {

char to_char(Letter a) { return a == Letter::X ? 'x' : 'y'; }

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

void check_length(std::size_t n) {
    if (n > Word::max_length) throw std::length_error("word longer than " + std::to_string(Word::max_length) + " letters");
}

}  // namespace

Word::Word(std::string_view letters) {
    if (letters == "1") return;
    check_length(letters.size());
    for (char c : letters) {
        if (c == 'x')
            append(Letter::X);
        else if (c == 'y')
            append(Letter::Y);
        else
            throw std::invalid_argument("invalid letter '" + std::string(1, c) + "' in word '" + std::string(letters) + "'");
    }
}

Word Word::letter(Letter a) {
    Word w;
    return w.append(a);
}

Word Word::power(Letter a, std::size_t n) {
    check_length(n);
    Word w;
    w.len_ = static_cast<std::uint8_t>(n);
    w.bits_ = a == Letter::Y ? low_mask(n) : 0;
    return w;
}

Word Word::z(int k) {
    if (k < 1) throw std::invalid_argument("z_k requires k >= 1");
    return power(Letter::X, static_cast<std::size_t>(k - 1)).append(Letter::Y);
}

Letter Word::at(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("word index out of range");
    return ((bits_ >> (len_ - 1 - i)) & 1ULL) ? Letter::Y : Letter::X;
}

std::size_t Word::count(Letter a) const {
    const auto ys = static_cast<std::size_t>(__builtin_popcountll(bits_));
    return a == Letter::Y ? ys : len_ - ys;
}

Word Word::substr(std::size_t pos, std::size_t n) const {
    if (pos > len_ || n > len_ - pos) throw std::out_of_range("substr out of range");
    Word w;
    w.len_ = static_cast<std::uint8_t>(n);
    w.bits_ = n == 0 ? 0 : (bits_ >> (len_ - pos - n)) & low_mask(n);
    return w;
}

Word& Word::append(Letter a) {
    check_length(len_ + 1U);
    bits_ = (len_ == 0 ? 0 : bits_ << 1) | static_cast<std::uint64_t>(a);
    ++len_;
    return *this;
}

Word& Word::append(const Word& w) {
    if (w.len_ == 0) return *this;
    check_length(static_cast<std::size_t>(len_) + w.len_);
    bits_ = (w.len_ >= 64 ? 0 : bits_ << w.len_) | w.bits_;
    len_ = static_cast<std::uint8_t>(len_ + w.len_);
    return *this;
}

Word Word::prepended(Letter a) const {
    check_length(len_ + 1U);
    Word w = *this;
    if (a == Letter::Y) w.bits_ |= 1ULL << len_;
    ++w.len_;
    return w;
}

Word Word::with_letter(std::size_t i, Letter a) const {
    if (i >= len_) throw std::out_of_range("word index out of range");
    Word w = *this;
    const std::uint64_t bit = 1ULL << (len_ - 1 - i);
    if (a == Letter::Y)
        w.bits_ |= bit;
    else
        w.bits_ &= ~bit;
    return w;
}

std::string Word::str() const {
    if (len_ == 0) return "1";
    std::string s(len_, 'x');
    for (std::size_t i = 0; i < len_; ++i)
        if (at(i) == Letter::Y) s[i] = 'y';
    return s;
}

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("an index needs at least one part");
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("index parts must be positive integers");
}

int Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Index::height() const {
    int h = 0;
    for (int p : parts_)
        if (p > 1) ++h;
    return h;
}

std::string Index::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::strong_ordering operator<=>(const Index& a, const Index& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    // Equal weight: compare the encoding words letter by letter (x < y).
    // A larger leading part means more leading x's, hence a smaller word.
    const std::size_t n = std::min(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.parts_[i] != b.parts_[i]) return b.parts_[i] <=> a.parts_[i];
    return a.parts_.size() <=> b.parts_.size();
}

Index parse_index(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in index '" + std::string(text) + "'");
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) throw std::invalid_argument("empty index");
    std::vector<int> parts;
    std::size_t i = 0;
    while (true) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i || j - i > 6) throw std::invalid_argument("malformed index '" + std::string(text) + "'");
        parts.push_back(std::stoi(s.substr(i, j - i)));
        if (j == s.size()) break;
        if (s[j] != ',') throw std::invalid_argument("malformed index '" + std::string(text) + "'");
        i = j + 1;
    }
    return Index(std::move(parts));
}

Word word_from_index(const Index& idx) {
    Word w;
    for (int k : idx.parts()) w.append(Word::z(k));
    return w;
}

Index index_from_word(const Word& w) {
    if (w.empty()) throw std::invalid_argument("the empty word has no index");
    if (w.back() != Letter::Y) throw std::invalid_argument("word '" + w.str() + "' does not end in y");
    std::vector<int> parts;
    int run = 1;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (w.at(i) == Letter::X) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    return Index(std::move(parts));
}

bool is_admissible(const Word& w) { return w.empty() || (w.front() == Letter::X && w.back() == Letter::Y); }

bool in_h1_word(const Word& w) { return w.empty() || w.back() == Letter::Y; }

Word dual(const Word& w) {
    if (w.empty() || !is_admissible(w)) throw std::invalid_argument("dual requires a nonempty admissible word, got '" + w.str() + "'");
    Word d;
    for (std::size_t i = w.length(); i-- > 0;) d.append(w.at(i) == Letter::X ? Letter::Y : Letter::X);
    return d;
}

Index dual(const Index& idx) {
    if (!idx.admissible()) throw std::invalid_argument("dual requires an admissible index, got " + idx.str());
    return index_from_word(dual(word_from_index(idx)));
}

}  // namespace imzv
