#include "cryst/skew.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cryst {

std::vector<int> SkewTableau::shape() const {
    std::vector<int> s;
    s.reserve(rows.size());
    for (auto& r : rows) s.push_back(static_cast<int>(r.size()));
    if (rotated) std::reverse(s.begin(), s.end());
    return s;
}

int SkewTableau::column_count() const {
    int w = 0;
    for (auto& r : rows) w = std::max(w, static_cast<int>(r.size()));
    return w;
}

std::vector<Letter> SkewTableau::column(int j) const {
    std::vector<Letter> col;
    for (auto& r : rows) {
        int len = static_cast<int>(r.size());
        if (rotated) {
            // entries right-justified; column j from the right exists iff len >= j
            if (len >= j) col.push_back(r[len - j]);
        } else {
            if (len >= j) col.push_back(r[j - 1]);
        }
    }
    return col;
}

SkewTableau make_straight(Alphabet a, std::vector<std::vector<Letter>> rows) {
    SkewTableau t;
    t.alphabet = a;
    t.rotated = false;
    t.rows = std::move(rows);
    return t;
}

SkewTableau make_rotated(Alphabet a, std::vector<std::vector<Letter>> rows) {
    SkewTableau t;
    t.alphabet = a;
    t.rotated = true;
    t.rows = std::move(rows);
    return t;
}

SkewTableau rotated_from_columns(Alphabet a, const std::vector<std::vector<Letter>>& cols) {
    for (size_t k = 0; k + 1 < cols.size(); ++k)
        if (cols[k].size() < cols[k + 1].size())
            throw std::invalid_argument("rotated_from_columns: column heights must decrease leftward");
    int height = 0;
    for (auto& c : cols) height = std::max(height, static_cast<int>(c.size()));
    std::vector<std::vector<Letter>> rows;
    for (int g = 0; g < height; ++g) {
        std::vector<Letter> row;
        // columns listed right to left; row entries left to right
        for (int j = static_cast<int>(cols.size()); j >= 1; --j) {
            int h = static_cast<int>(cols[j - 1].size());
            int top = height - h; // first global row this column occupies
            if (g >= top) row.push_back(cols[j - 1][g - top]);
        }
        if (!row.empty()) rows.push_back(std::move(row));
        else if (g >= 1 && !rows.empty()) throw std::invalid_argument("rotated_from_columns: gap row");
    }
    return make_rotated(a, std::move(rows));
}

std::string SkewTableau::str() const {
    std::string s;
    int w = column_count();
    for (auto& r : rows) {
        int pad = rotated ? w - static_cast<int>(r.size()) : 0;
        for (int k = 0; k < pad; ++k) s += " .";
        for (Letter x : r) s += " " + letter_str(x);
        s += "\n";
    }
    return s;
}

SkewGrid to_grid(const SkewTableau& t) {
    SkewGrid g;
    g.alphabet = t.alphabet;
    int w = t.column_count();
    for (auto& r : t.rows) {
        std::vector<std::optional<Letter>> row(w);
        int off = t.rotated ? w - static_cast<int>(r.size()) : 0;
        for (size_t k = 0; k < r.size(); ++k) row[off + k] = r[k];
        g.cells.push_back(std::move(row));
    }
    return g;
}

std::optional<std::string> sst_violation(const SkewTableau& t) {
    const Alphabet& a = t.alphabet;
    SkewGrid g = to_grid(t);
    int h = static_cast<int>(g.cells.size());
    int w = h ? static_cast<int>(g.cells[0].size()) : 0;
    // shape sanity: row lengths must be weakly decreasing downward for
    // straight shapes, weakly increasing for rotated ones
    for (int r = 0; r + 1 < h; ++r) {
        size_t l0 = t.rows[r].size(), l1 = t.rows[r + 1].size();
        if (!t.rotated && l0 < l1) return "row lengths increase in a straight shape";
        if (t.rotated && l0 > l1) return "row lengths decrease in a rotated shape";
    }
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            if (!g.occupied(r, c)) continue;
            Letter x = g.at(r, c);
            if (!a.contains(x)) return "letter " + letter_str(x) + " not in the alphabet";
            if (g.occupied(r, c + 1)) {
                Letter y = g.at(r, c + 1);
                if (!a.leq(x, y)) return "row decreases at " + letter_str(x) + "," + letter_str(y);
                if (Alphabet::is_odd(x) && x == y) return "odd letter repeats in a row";
            }
            if (g.occupied(r + 1, c)) {
                Letter y = g.at(r + 1, c);
                if (!a.leq(x, y)) return "column decreases at " + letter_str(x) + "," + letter_str(y);
                if (!Alphabet::is_odd(x) && x == y) return "even letter repeats in a column";
            }
        }
    }
    return std::nullopt;
}

std::vector<Letter> reading_word(const SkewTableau& t) {
    std::vector<Letter> w;
    for (auto& r : t.rows)
        for (auto it = r.rbegin(); it != r.rend(); ++it) w.push_back(*it);
    return w;
}

namespace {

// One inward slide from the hole (r,c); the hole must be an inner corner.
void slide_in(SkewGrid& g, int r, int c) {
    const Alphabet& a = g.alphabet;
    for (;;) {
        bool below = g.occupied(r + 1, c);
        bool right = g.occupied(r, c + 1);
        if (!below && !right) break;
        bool take_below;
        if (below && right)
            take_below = a.leq(g.at(r + 1, c), g.at(r, c + 1));
        else
            take_below = below;
        if (take_below) {
            g.cells[r][c] = g.cells[r + 1][c];
            g.cells[r + 1][c].reset();
            ++r;
        } else {
            g.cells[r][c] = g.cells[r][c + 1];
            g.cells[r][c + 1].reset();
            ++c;
        }
    }
}

std::vector<std::pair<int, int>> inner_corners(const SkewGrid& g) {
    // A slide may start only at a removable cell of the inner region: a
    // leading empty whose right and below neighbours are not leading empties
    // themselves.  Fully empty rows contribute no inner cells.
    std::vector<std::pair<int, int>> cs;
    int h = static_cast<int>(g.cells.size());
    int w = h ? static_cast<int>(g.cells[0].size()) : 0;
    std::vector<int> first_occ(h, 0);
    int lam_below = 0; // row length of the nearest occupied row below
    for (int r = h - 1; r >= 0; --r) {
        int f = 0;
        while (f < w && !g.occupied(r, f)) ++f;
        if (f < w) {
            first_occ[r] = f;
            int last = w - 1;
            while (!g.occupied(r, last)) --last;
            lam_below = last + 1;
        } else {
            // fully empty rows pass the shape of the piece below through
            first_occ[r] = lam_below;
        }
    }
    auto inner = [&](int r, int c) { return r < h && c < first_occ[r]; };
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < first_occ[r]; ++c) {
            bool inside = g.occupied(r, c + 1) || g.occupied(r + 1, c);
            if (inside && !inner(r, c + 1) && !inner(r + 1, c)) cs.emplace_back(r, c);
        }
    }
    return cs;
}

SkewTableau grid_to_straight(const SkewGrid& g) {
    // after rectification every occupied row is a left-justified prefix
    std::vector<std::vector<Letter>> rows;
    for (auto& row : g.cells) {
        std::vector<Letter> out;
        for (auto& c : row) {
            if (!c) break;
            out.push_back(*c);
        }
        if (!out.empty()) rows.push_back(std::move(out));
    }
    // trim leading empty rows kept nothing; rows collected in order
    return make_straight(g.alphabet, std::move(rows));
}

SkewTableau rectify_impl(SkewGrid g, unsigned long long* seed) {
    std::mt19937_64 rng(seed ? *seed : 0);
    for (;;) {
        auto cs = inner_corners(g);
        if (cs.empty()) break;
        size_t pick = cs.size() - 1;
        if (seed) pick = rng() % cs.size();
        slide_in(g, cs[pick].first, cs[pick].second);
    }
    return grid_to_straight(g);
}

} // namespace

SkewTableau jdt_rectify(const SkewGrid& g) { return rectify_impl(g, nullptr); }
SkewTableau jdt_rectify(const SkewTableau& t) { return rectify_impl(to_grid(t), nullptr); }
SkewTableau jdt_rectify_seeded(const SkewGrid& g, unsigned long long seed) {
    return rectify_impl(g, &seed);
}

SkewTableau column_insert_word(Alphabet a, const std::vector<Letter>& w) {
    // columns[c] top to bottom; insert bumps the topmost entry >= x
    std::vector<std::vector<Letter>> cols;
    for (Letter x : w) {
        Letter cur = x;
        for (size_t c = 0;; ++c) {
            if (c == cols.size()) {
                cols.push_back({cur});
                break;
            }
            auto& col = cols[c];
            size_t k = 0;
            while (k < col.size() && a.less(col[k], cur)) ++k;
            if (k == col.size()) {
                col.push_back(cur);
                break;
            }
            std::swap(col[k], cur);
        }
    }
    std::vector<std::vector<Letter>> rows;
    for (size_t r = 0;; ++r) {
        std::vector<Letter> row;
        for (auto& col : cols) {
            if (r < col.size()) row.push_back(col[r]);
            else break;
        }
        if (row.empty()) break;
        rows.push_back(std::move(row));
    }
    return make_straight(a, std::move(rows));
}

} // namespace cryst
