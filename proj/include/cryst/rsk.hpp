#pragma once

#include "cryst/skew.hpp"

#include <vector>

namespace cryst {

// Matrix over the barred alphabet: m[i-1][j-1] counts the letter j-bar in
// row i-bar.  Rows and columns are indexed by n-bar..1-bar via 1..n.
struct SymMatrix {
    int n = 0;
    std::vector<std::vector<int>> m;

    explicit SymMatrix(int n_ = 0) : n(n_), m(n_, std::vector<int>(n_, 0)) {}
    int& at(int i, int j) { return m[i - 1][j - 1]; }
    int at(int i, int j) const { return m[i - 1][j - 1]; }
    bool symmetric() const;
    int total() const;
    bool operator==(const SymMatrix&) const = default;
};

// Column insertion into a rotated tableau, working from the rightmost column:
// the letter bumps the bottommost entry <= it (or lands on top of the column),
// the bumped entry moves one column to the left.
SkewTableau reverse_column_insert(const SkewTableau& t, Letter x);

// Bijection between symmetric matrices and rotated semistandard tableaux over
// the barred alphabet: insert the row words of m, bottom row label first,
// reading each row right to left, last word letter inserted first.
SkewTableau kappa(const SymMatrix& m);
SymMatrix kappa_inv(const SkewTableau& p);

} // namespace cryst
