#pragma once

#include <string>
#include <vector>

namespace cryst {

// Letters are signed ints: k stands for k, -k for k-bar, 0 for the zero letter.
// The underlying order is 1 < 2 < ... < n < 0 < n-bar < ... < 2-bar < 1-bar,
// which is *not* integer order; always compare through an Alphabet.
using Letter = int;

enum class LieType { B, C };

enum class AlphabetKind {
    Full,    // J_n, with the zero letter (type B tableaux)
    NoZero,  // J_n without 0 (type C tableaux, spin columns)
    Neg,     // barred letters only (spinor and Verma models)
    Pos,     // unbarred letters only
};

struct Alphabet {
    int n = 0;
    AlphabetKind kind = AlphabetKind::NoZero;

    bool operator==(const Alphabet&) const = default;

    bool contains(Letter x) const {
        if (x == 0) return kind == AlphabetKind::Full;
        int k = x > 0 ? x : -x;
        if (k < 1 || k > n) return false;
        if (x > 0) return kind != AlphabetKind::Neg;
        return kind != AlphabetKind::Pos;
    }

    // Position in the total order; strictly increasing in the letter order.
    int key(Letter x) const {
        if (x > 0) return x;
        if (x == 0) return n + 1;
        return 2 * n + 2 + x; // x = -k  ->  2n+2-k
    }

    bool less(Letter a, Letter b) const { return key(a) < key(b); }
    bool leq(Letter a, Letter b) const { return key(a) <= key(b); }

    // The zero letter is the only odd one: strict along rows, weak down columns.
    static bool is_odd(Letter x) { return x == 0; }
};

inline std::string letter_str(Letter x) {
    if (x >= 0) return std::to_string(x);
    return std::to_string(-x) + "~";
}

inline std::string word_str(const std::vector<Letter>& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += letter_str(w[i]);
    }
    return s;
}

} // namespace cryst
