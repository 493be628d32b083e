#include "cryst/twocol.hpp"

#include <algorithm>
#include <stdexcept>

namespace cryst {

std::string TwoColumn::str() const {
    std::string s = "[a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                    ",c=" + std::to_string(c) + "; L=" + word_str(left) +
                    "; R=" + word_str(right) + "]";
    return s;
}

std::optional<std::string> two_col_violation(const Alphabet& a, const TwoColumn& t) {
    if (t.a < 0 || t.b < 0 || t.c < 0) return "negative shape parameter";
    if (static_cast<int>(t.left.size()) != t.a + t.c) return "left column height mismatch";
    if (static_cast<int>(t.right.size()) != t.b + t.c) return "right column height mismatch";
    auto strict_col = [&](const std::vector<Letter>& col) -> std::optional<std::string> {
        for (auto x : col)
            if (!a.contains(x)) return "letter " + letter_str(x) + " not in the alphabet";
        for (size_t k = 0; k + 1 < col.size(); ++k)
            if (!a.less(col[k], col[k + 1])) return "column not strictly increasing";
        return std::nullopt;
    };
    if (auto v = strict_col(t.left)) return v;
    if (auto v = strict_col(t.right)) return v;
    for (int g = t.b + 1; g <= t.b + t.c; ++g) {
        auto l = t.left_at_row(g), r = t.right_at_row(g);
        if (l && r && !a.leq(*l, *r)) return "row decreases at global row " + std::to_string(g);
    }
    return std::nullopt;
}

int max_right_slide(const Alphabet& a, const TwoColumn& t) {
    for (int k = std::min(t.a, t.b); k >= 1; --k) {
        bool ok = true;
        // right column slid down k: occupies rows k+1 .. b+c+k
        for (int g = std::max(t.b + 1, k + 1); g <= std::min(t.a + t.b + t.c, t.b + t.c + k); ++g) {
            auto l = t.left_at_row(g);
            if (!l) continue;
            Letter r = t.right[g - 1 - k];
            if (!a.leq(*l, r)) {
                ok = false;
                break;
            }
        }
        if (ok) return k;
    }
    return 0;
}

namespace {

struct Grid2 {
    // 1-based rows; index 0 unused
    std::vector<std::optional<Letter>> L, R;

    explicit Grid2(const TwoColumn& t) : L(t.rows() + 2), R(t.rows() + 2) {
        for (int g = 1; g <= t.rows(); ++g) {
            if (auto x = t.left_at_row(g)) L[g] = *x;
            if (auto x = t.right_at_row(g)) R[g] = *x;
        }
    }

    TwoColumn collect() const {
        TwoColumn t;
        int l_top = 0, l_bot = -1, r_top = 0, r_bot = -1;
        for (int g = 1; g < static_cast<int>(L.size()); ++g) {
            if (L[g]) {
                if (!l_top) l_top = g;
                l_bot = g;
                t.left.push_back(*L[g]);
            }
            if (R[g]) {
                if (!r_top) r_top = g;
                r_bot = g;
                t.right.push_back(*R[g]);
            }
        }
        if (t.right.empty()) {
            // bare tail: rows l_top..l_bot, all tail
            t.b = 0;
            t.c = 0;
            t.a = static_cast<int>(t.left.size());
            return t;
        }
        if (r_top != 1) throw std::logic_error("two-column slide: right column detached from the top");
        t.b = t.left.empty() ? r_bot : l_top - 1;
        t.c = r_bot - t.b;
        t.a = static_cast<int>(t.left.size()) - t.c;
        if (t.a < 0 || t.b < 0 || t.c < 0 || (!t.left.empty() && l_bot - l_top + 1 != t.a + t.c))
            throw std::logic_error("two-column slide: ragged column");
        return t;
    }
};

} // namespace

std::optional<TwoColumn> two_col_raise(const Alphabet& a, const TwoColumn& t) {
    if (max_right_slide(a, t) != 0) throw std::invalid_argument("two_col_raise: slide rank must be 0");
    if (t.a == 0) return std::nullopt;
    Grid2 g(t);
    int r = t.b + t.c + 1; // hole below the right column
    bool in_right = true;
    for (;;) {
        auto& self = in_right ? g.R : g.L;
        std::optional<Letter> above = self[r - 1];
        std::optional<Letter> side = in_right ? g.L[r] : std::nullopt;
        if (!above && !side) break;
        bool take_above;
        if (above && side)
            take_above = a.leq(*side, *above); // move the larger; ties go above
        else
            take_above = above.has_value();
        if (take_above) {
            self[r] = above;
            self[r - 1].reset();
            --r;
        } else {
            g.R[r] = side;
            g.L[r].reset();
            in_right = false;
        }
    }
    return g.collect();
}

std::optional<TwoColumn> two_col_lower(const Alphabet& a, const TwoColumn& t) {
    if (max_right_slide(a, t) != 0) throw std::invalid_argument("two_col_lower: slide rank must be 0");
    if (t.b == 0) return std::nullopt;
    Grid2 g(t);
    int r = t.b; // hole above the left column
    bool in_left = true;
    for (;;) {
        auto& self = in_left ? g.L : g.R;
        std::optional<Letter> below = self[r + 1];
        std::optional<Letter> side = in_left ? g.R[r] : std::nullopt;
        if (!below && !side) break;
        bool take_below;
        if (below && side)
            take_below = a.leq(*below, *side); // move the smaller; ties go below
        else
            take_below = below.has_value();
        if (take_below) {
            self[r] = below;
            self[r + 1].reset();
            ++r;
        } else {
            g.L[r] = side;
            g.R[r].reset();
            in_left = false;
        }
    }
    return g.collect();
}

TwoColumn normalize_pair(const Alphabet& a, const std::vector<Letter>& left,
                         const std::vector<Letter>& right) {
    int u = static_cast<int>(left.size());
    int v = static_cast<int>(right.size());
    for (int k = std::min(u, v); k >= 0; --k) {
        TwoColumn t;
        t.a = u - k;
        t.b = v - k;
        t.c = k;
        t.left = left;
        t.right = right;
        if (!two_col_violation(a, t)) return t;
    }
    throw std::invalid_argument("normalize_pair: columns are not both semistandard");
}

std::optional<std::pair<std::vector<Letter>, std::vector<Letter>>>
pair_raise(const Alphabet& a, const std::vector<Letter>& left, const std::vector<Letter>& right) {
    auto r = two_col_raise(a, normalize_pair(a, left, right));
    if (!r) return std::nullopt;
    return std::make_pair(r->left, r->right);
}

std::optional<std::pair<std::vector<Letter>, std::vector<Letter>>>
pair_lower(const Alphabet& a, const std::vector<Letter>& left, const std::vector<Letter>& right) {
    auto r = two_col_lower(a, normalize_pair(a, left, right));
    if (!r) return std::nullopt;
    return std::make_pair(r->left, r->right);
}

std::pair<std::vector<Letter>, std::vector<Letter>> fully_raised(const Alphabet& a, const TwoColumn& t) {
    TwoColumn cur = t;
    for (int k = 0; k < t.a; ++k) {
        auto nxt = two_col_raise(a, cur);
        if (!nxt) throw std::logic_error("fully_raised: raise ended early");
        cur = *nxt;
    }
    return {cur.left, cur.right};
}

std::pair<std::vector<Letter>, std::vector<Letter>> fully_raised_by_sliding(const Alphabet& a, const TwoColumn& t) {
    int rows = t.rows();
    std::vector<std::optional<Letter>> L(rows + 2), R(rows + 2);
    for (int g = 1; g <= rows; ++g) {
        if (auto x = t.left_at_row(g)) L[g] = *x;
        if (auto x = t.right_at_row(g)) R[g] = *x;
    }
    // Slide the right-column boxes down, bottom one first, each stopping above
    // the previous one and wherever the left neighbour would exceed it.
    int floor = rows + 1;
    for (int g0 = t.b + t.c; g0 >= 1; --g0) {
        if (!R[g0]) continue;
        Letter y = *R[g0];
        int r = g0;
        while (r + 1 < floor && L[r + 1] && a.leq(*L[r + 1], y)) ++r;
        if (r != g0) {
            R[g0].reset();
            R[r] = y;
        }
        floor = r;
    }
    // Move left boxes into empty right slots on the same row.
    int moved = 0;
    for (int g = 1; g <= rows; ++g) {
        if (L[g] && !R[g]) {
            R[g] = L[g];
            L[g].reset();
            ++moved;
        }
    }
    if (moved != t.a) throw std::logic_error("fully_raised_by_sliding: wrong number of transfers");
    std::vector<Letter> lt, rt;
    for (int g = 1; g <= rows; ++g) {
        if (L[g]) lt.push_back(*L[g]);
        if (R[g]) rt.push_back(*R[g]);
    }
    return {lt, rt};
}

} // namespace cryst
