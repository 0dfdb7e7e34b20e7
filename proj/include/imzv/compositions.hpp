// Weak compositions (ordered tuples of nonnegative integers with a fixed sum)
// and the exponent-vector word builders used by the closed forms.
#ifndef IMZV_COMPOSITIONS_HPP
#define IMZV_COMPOSITIONS_HPP

#include <cstddef>
#include <vector>

#include "imzv/words.hpp"

namespace imzv {

// Calls f(c) for every c = (c_1..c_parts) with c_i >= 0 and sum == total, in
// lexicographic order of the vector. parts == 0 yields the empty tuple iff
// total == 0; a negative total yields nothing.
template <class F>
void for_each_composition(int total, int parts, F&& f) {
    if (total < 0 || parts < 0) return;
    std::vector<int> c(static_cast<std::size_t>(parts), 0);
    if (parts == 0) {
        if (total == 0) f(static_cast<const std::vector<int>&>(c));
        return;
    }
    // Recursive fill: position i takes every value 0..remaining.
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i + 1 == c.size()) {
            c[i] = remaining;
            f(static_cast<const std::vector<int>&>(c));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            c[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
}

std::vector<std::vector<int>> compositions(int total, int parts);

// Compositions of total into positive parts, any number of parts.
std::vector<std::vector<int>> positive_compositions(int total);

// x^{e_1} y x^{e_2} y ... x^{e_n} y
Word xy_word(const std::vector<int>& e);
// x^{e_1} y x^{e_2} y ... y x^{e_n} (no trailing y); empty vector -> empty word.
Word runs_word(const std::vector<int>& e);
Word x_pow(int n);
Word y_pow(int n);

}  // namespace imzv

#endif  // IMZV_COMPOSITIONS_HPP
