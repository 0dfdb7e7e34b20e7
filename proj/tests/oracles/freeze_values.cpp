// Prints the values frozen into tests/frozen_values.hpp. Every product comes
// from the interleaving oracle (never from the recursive engine); every
// expansion from an independent enumeration of merge patterns; every number
// from the single-series reference constants. Re-run after a deliberate
// format change and paste the output.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "imzv/words.hpp"
#include "imzv/zeta_combo.hpp"
#include "interleave_oracle.hpp"
#include "reference_constants.hpp"

namespace {

std::string z(const std::vector<int>& ks) {
    std::string w;
    for (int k : ks) w += std::string(static_cast<std::size_t>(k - 1), 'x') + "y";
    return w;
}

// Interpolated expansion by direct enumeration: bit i of `mask` set means the
// (i+1)-th comma becomes a plus.
imzv::ZetaCombo expand(const std::vector<int>& idx) {
    imzv::ZetaCombo out(imzv::Interpretation::Plain);
    const std::size_t n = idx.size();
    for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<int> merged{idx[0]};
        unsigned plus = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if ((mask >> (i - 1)) & 1U) {
                merged.back() += idx[i];
                ++plus;
            } else {
                merged.push_back(idx[i]);
            }
        }
        out.add_term(imzv::Index(merged), imzv::QtPoly::t_power(plus));
    }
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"x", "1"},   {"x", "y"},    {"y", "y"},     {"xy", "xy"},  {"xy", "y"},   {"yy", "y"},
        {"xyy", "xy"}, {"xxy", "xy"}, {"xxy", "xyy"}, {"xy", "xyy"}, {"y", "yy"},   {"yy", "xyxy"},
        {"xy", "xxy"}, {"xyxy", "xy"}, {"xyy", "xyy"}};
    std::cout << "// tshuffle products\n";
    for (const auto& [u, v] : pairs)
        std::cout << "{\"" << u << "\", \"" << v << "\", \"" << oracle::tshuffle(u, v).to_text() << "\"},\n";

    std::cout << "\n// interpolated images of products\n";
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> zpairs = {
        {{2}, {2}}, {{2, 2}, {2}}, {{2, 1}, {2}}, {{3}, {2}}, {{2, 1}, {2, 1}}, {{3, 1}, {2}}};
    for (const auto& [a, b] : zpairs)
        std::cout << "{\"" << imzv::Index(a).str() << "\", \"" << imzv::Index(b).str() << "\", \""
                  << imzv::zt_map(oracle::tshuffle(z(a), z(b))).to_text() << "\"},\n";

    std::cout << "\n// alternating sums, p = 2, interpolated images\n";
    for (int k = 1; k <= 4; ++k) {
        imzv::HElement sum;
        for (int i = 0; i <= k; ++i) {
            std::vector<int> a{2}, b{2};
            a.insert(a.end(), static_cast<std::size_t>(i), 1);
            b.insert(b.end(), static_cast<std::size_t>(k - i), 1);
            imzv::HElement term = oracle::tshuffle(z(a), z(b));
            sum += (i % 2 == 0) ? term : -term;
        }
        std::cout << "{" << k << ", \"" << imzv::zt_map(sum).to_text() << "\"},\n";
    }

    std::cout << "\n// expansions\n";
    for (const auto& idx : std::vector<std::vector<int>>{{2}, {2, 1}, {3, 1, 2}, {2, 1, 1}, {5, 1}, {7, 1}})
        std::cout << "{\"" << imzv::Index(idx).str() << "\", \"" << expand(idx).to_text() << "\"},\n";

    using namespace reference;
    std::printf("\n// numbers\n");
    std::printf("zeta2 %.10Lf\nzeta3 %.10Lf\nzeta4 %.10Lf\n", zeta2(), zeta3(), zeta4());
    std::printf("zeta2^2 %.10Lf\n", zeta2() * zeta2());
    std::printf("zs(5,1) %.10Lf\n", zeta2() * zeta4() - zeta3() * zeta3() / 2);
    std::printf("zs(7,1) %.10Lf\n", zeta2() * zeta6() - zeta3() * zeta_em(5) + zeta4() * zeta4() / 2);
    return 0;
}
