#include "cryst/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace cryst {

bool SymMatrix::symmetric() const {
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

int SymMatrix::total() const {
    int t = 0;
    for (auto& r : m)
        for (int v : r) t += v;
    return t;
}

namespace {

// Columns listed right to left, entries top to bottom, bottom-aligned.
using Cols = std::vector<std::vector<Letter>>;

Cols columns_of(const SkewTableau& t) {
    Cols cols;
    for (int j = 1; j <= t.column_count(); ++j) cols.push_back(t.column(j));
    return cols;
}

// Insert x starting at the rightmost column: bump the bottommost entry <= x,
// send the bumped letter one column left; with no such entry x lands on top.
// Returns the column index (0-based) of the new cell.
int insert_into(Cols& cols, const Alphabet& a, Letter x) {
    Letter cur = x;
    for (size_t c = 0;; ++c) {
        if (c == cols.size()) {
            cols.push_back({cur});
            return static_cast<int>(c);
        }
        auto& col = cols[c];
        int k = -1;
        for (int p = 0; p < static_cast<int>(col.size()); ++p)
            if (a.leq(col[p], cur)) k = p;
        if (k < 0) {
            col.insert(col.begin(), cur);
            return static_cast<int>(c);
        }
        std::swap(col[k], cur);
    }
}

// Undo one insertion whose final cell was the top of column j: returns the
// letter that was originally inserted.
Letter uninsert_from(Cols& cols, const Alphabet& a, int j) {
    Letter cur = cols[j].front();
    cols[j].erase(cols[j].begin());
    if (cols[j].empty()) cols.erase(cols.begin() + j);
    for (int c = j - 1; c >= 0; --c) {
        auto& col = cols[c];
        int k = -1;
        for (int p = 0; p < static_cast<int>(col.size()); ++p) {
            if (a.leq(cur, col[p])) {
                k = p;
                break;
            }
        }
        if (k < 0) throw std::logic_error("uninsert_from: no entry to displace");
        std::swap(col[k], cur);
    }
    return cur;
}

} // namespace

SkewTableau reverse_column_insert(const SkewTableau& t, Letter x) {
    if (!t.rotated && !t.empty()) throw std::invalid_argument("reverse_column_insert: rotated shape expected");
    Cols cols = columns_of(t);
    Alphabet a = t.alphabet;
    if (!a.contains(x)) throw std::invalid_argument("reverse_column_insert: letter outside alphabet");
    insert_into(cols, a, x);
    return rotated_from_columns(a, cols);
}

SkewTableau kappa(const SymMatrix& m) {
    if (!m.symmetric()) throw std::invalid_argument("kappa: not symmetric");
    Alphabet a{m.n, AlphabetKind::Neg};
    // Row words, bottom label first, each row read right to left; the whole
    // word is then inserted back to front.
    std::vector<Letter> w;
    for (int i = m.n; i >= 1; --i)
        for (int j = 1; j <= m.n; ++j)
            for (int c = 0; c < m.at(i, j); ++c) w.push_back(-j);
    Cols cols;
    for (auto it = w.rbegin(); it != w.rend(); ++it) insert_into(cols, a, *it);
    return rotated_from_columns(a, cols);
}

SymMatrix kappa_inv(const SkewTableau& p) {
    if (p.alphabet.kind != AlphabetKind::Neg)
        throw std::invalid_argument("kappa_inv: barred alphabet expected");
    if (auto v = sst_violation(p)) throw std::invalid_argument("kappa_inv: " + *v);
    int n = p.alphabet.n;
    Alphabet a = p.alphabet;
    Cols cols = columns_of(p);
    // The recording tableau of a symmetric matrix equals the insertion
    // tableau, so labels are read off p itself.  Cells were added with labels
    // running from 1-bar down to n-bar, later cells of an equal-label block
    // sitting further left; extraction reverses that order.
    Cols labels = cols;
    SymMatrix m(n);
    while (!cols.empty()) {
        int pick = -1;
        for (int j = 0; j < static_cast<int>(labels.size()); ++j) {
            if (pick < 0 || a.leq(labels[j].front(), labels[pick].front())) pick = j;
        }
        Letter lab = labels[pick].front();
        labels[pick].erase(labels[pick].begin());
        if (labels[pick].empty()) labels.erase(labels.begin() + pick);
        Letter b = uninsert_from(cols, a, pick);
        m.at(-lab, -b) += 1;
    }
    if (!m.symmetric()) throw std::logic_error("kappa_inv: non-symmetric preimage");
    return m;
}

} // namespace cryst
