#pragma once

#include "cryst/twocol.hpp"

namespace cryst {

// Row reading word of a two-column tableau (top to bottom, right to left).
inline std::vector<Letter> two_col_word(const TwoColumn& t) {
    std::vector<Letter> w;
    for (int g = 1; g <= t.rows(); ++g) {
        if (auto x = t.right_at_row(g)) w.push_back(*x);
        if (auto x = t.left_at_row(g)) w.push_back(*x);
    }
    return w;
}

} // namespace cryst
