#include "imzv/compositions.hpp"

#include <stdexcept>

namespace imzv {

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    for_each_composition(total, parts, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

std::vector<std::vector<int>> positive_compositions(int total) {
    std::vector<std::vector<int>> out;
    if (total < 0) return out;
    if (total == 0) {
        out.emplace_back();
        return out;
    }
    for (int first = 1; first <= total; ++first)
        for (auto& rest : positive_compositions(total - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

Word x_pow(int n) {
    if (n < 0) throw std::invalid_argument("negative exponent");
    return Word::power(Letter::X, static_cast<std::size_t>(n));
}

Word y_pow(int n) {
    if (n < 0) throw std::invalid_argument("negative exponent");
    return Word::power(Letter::Y, static_cast<std::size_t>(n));
}

Word xy_word(const std::vector<int>& e) {
    Word w;
    for (int a : e) w.append(x_pow(a)).append(Letter::Y);
    return w;
}

Word runs_word(const std::vector<int>& e) {
    Word w;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) w.append(Letter::Y);
        w.append(x_pow(e[i]));
    }
    return w;
}

}  // namespace imzv
