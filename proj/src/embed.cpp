#include "cryst/embed.hpp"

#include <algorithm>
#include <stdexcept>

namespace cryst {

namespace {
Alphabet neg_alpha(int n) { return Alphabet{n, AlphabetKind::Neg}; }
} // namespace

std::string ColumnTuple::str() const {
    std::string s = "(";
    for (int k = size(); k >= 1; --k) {
        s += word_str(comps[k - 1]);
        if (k > 1) s += " | ";
    }
    return s + ")";
}

std::optional<ColumnTuple> tuple_raise(const ColumnTuple& t, int i) {
    if (i < 1 || i >= t.size()) throw std::invalid_argument("tuple_raise: index out of range");
    auto moved = pair_raise(neg_alpha(t.n), t.comps[i], t.comps[i - 1]);
    if (!moved) return std::nullopt;
    ColumnTuple out = t;
    out.comps[i] = moved->first;
    out.comps[i - 1] = moved->second;
    return out;
}

std::optional<ColumnTuple> tuple_lower(const ColumnTuple& t, int i) {
    if (i < 1 || i >= t.size()) throw std::invalid_argument("tuple_lower: index out of range");
    auto moved = pair_lower(neg_alpha(t.n), t.comps[i], t.comps[i - 1]);
    if (!moved) return std::nullopt;
    ColumnTuple out = t;
    out.comps[i] = moved->first;
    out.comps[i - 1] = moved->second;
    return out;
}

ColumnTuple tuple_of(const SpinorTuple& s) {
    ColumnTuple t;
    t.n = s.n;
    int ell = s.shape.columns();
    if (s.shape.spin) t.comps.push_back(s.spin);
    for (int j = 1; j <= ell; ++j) {
        const TwoColumn& block = s.cols[ell - j]; // T_j
        t.comps.push_back(block.right);
        t.comps.push_back(block.left);
    }
    return t;
}

Separated separate(const SpinorTuple& s) {
    if (auto v = spinor_violation(s)) throw std::invalid_argument("separate: " + *v);
    Separated out{tuple_of(s), s.type, s.n, s.shape, {}};
    int ell = s.shape.columns();
    int off = s.shape.spin ? 1 : 0; // spin factor occupies component 1
    auto tail_of = [&](int j) { return s.cols[ell - j].a; }; // tail of T_j
    for (int i = ell - 1; i >= 1; --i) {
        for (int m = 2 * i + off; m <= ell + i - 1 + off; ++m) {
            for (int k = 0; k < tail_of(i); ++k) {
                auto moved = tuple_lower(out.cols, m);
                if (!moved) throw std::logic_error("separate: box transfer failed");
                out.cols = *moved;
            }
        }
    }
    // expected body heights: component indexing from the right
    std::vector<int> b;
    if (s.shape.spin) b.push_back(static_cast<int>(s.spin.size()));
    for (int j = 1; j <= ell; ++j) {
        const TwoColumn& block = s.cols[ell - j];
        b.push_back(static_cast<int>(block.right.size()));
        b.push_back(static_cast<int>(block.left.size()) - block.a);
    }
    out.body_heights = b;
    for (int k = 0; k < out.cols.size(); ++k) {
        int expect = b[k];
        int comp_num = k + 1;
        int tail_owner = comp_num - ell - off; // j with all of T_j's tail, if any
        if (tail_owner >= 1) expect += tail_of(tail_owner);
        if (static_cast<int>(out.cols.comps[k].size()) != expect)
            throw std::logic_error("separate: unexpected component height");
    }
    return out;
}

std::optional<std::string> separated_violation(const Separated& s) {
    Alphabet a = neg_alpha(s.n);
    int m = s.cols.size();
    int top = 0, bot = 0;
    std::vector<int> tail(m, 0);
    for (int k = 0; k < m; ++k) {
        tail[k] = static_cast<int>(s.cols.comps[k].size()) - s.body_heights[k];
        top = std::max(top, s.body_heights[k]);
        bot = std::max(bot, tail[k]);
    }
    int height = top + bot;
    std::vector<std::vector<std::optional<Letter>>> grid(
        height, std::vector<std::optional<Letter>>(m));
    for (int k = 0; k < m; ++k) {
        int start = top - s.body_heights[k]; // 0-based global row of the component top
        for (size_t p = 0; p < s.cols.comps[k].size(); ++p)
            grid[start + p][m - 1 - k] = s.cols.comps[k][p]; // column m-1-k: right to left
    }
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < m; ++c) {
            if (!grid[r][c]) continue;
            Letter x = *grid[r][c];
            if (r + 1 < height && grid[r + 1][c] && !a.less(x, *grid[r + 1][c]))
                return "column not strictly increasing at row " + std::to_string(r + 1);
            if (c + 1 < m && grid[r][c + 1] && !a.leq(x, *grid[r][c + 1]))
                return "row not weakly increasing at row " + std::to_string(r + 1);
        }
    }
    return std::nullopt;
}

TailBody tail_body(const SpinorTuple& s) {
    Separated sep = separate(s);
    if (auto v = separated_violation(sep))
        throw std::logic_error("tail_body: separated tuple not semistandard: " + *v);
    int m = sep.cols.size();
    // tails live in the leftmost components, deepest first
    std::vector<std::vector<Letter>> tail_cols; // left to right
    for (int k = m - 1; k >= 0; --k) {
        int t = static_cast<int>(sep.cols.comps[k].size()) - sep.body_heights[k];
        if (t > 0)
            tail_cols.push_back({sep.cols.comps[k].begin() + sep.body_heights[k],
                                 sep.cols.comps[k].end()});
        else
            break;
    }
    std::vector<std::vector<Letter>> tail_rows;
    for (int r = 0;; ++r) {
        std::vector<Letter> row;
        for (auto& col : tail_cols)
            if (r < static_cast<int>(col.size())) row.push_back(col[r]);
        if (row.empty()) break;
        tail_rows.push_back(std::move(row));
    }
    TailBody out;
    out.tail = make_straight(neg_alpha(s.n), std::move(tail_rows));
    std::vector<std::vector<Letter>> body_cols;
    for (int k = 0; k < m; ++k)
        body_cols.push_back({sep.cols.comps[k].begin(),
                             sep.cols.comps[k].begin() + sep.body_heights[k]});
    while (!body_cols.empty() && body_cols.back().empty()) body_cols.pop_back();
    out.body = rotated_from_columns(neg_alpha(s.n), body_cols);
    out.body.rotated = true;
    return out;
}

int omega_n_units(const SpinorTuple& s) {
    int ell = s.shape.columns();
    if (s.type == LieType::C) return ell;
    return 2 * ell + (s.shape.spin ? 1 : 0);
}

VermaShifted spinor_to_verma(const SpinorTuple& s) {
    TailBody tb = tail_body(s);
    VermaShifted out;
    out.elem.type = s.type;
    out.elem.n = s.n;
    out.elem.shape = s.shape;
    out.elem.v2 = tb.tail;
    out.elem.v1 = tb.body;
    out.r = omega_n_units(s);
    if (auto v = verma_violation(out.elem))
        throw std::logic_error("spinor_to_verma: image invalid: " + *v);
    return out;
}

LusztigShifted kn_to_lusztig(const KnTableau& t) {
    SpinorTuple s = kn_to_spinor(t);
    VermaShifted v = spinor_to_verma(s);
    LusztigShifted out;
    out.datum = verma_to_lusztig(v.elem);
    out.shift = shape_weight(t.type, t.n, t.shape);
    return out;
}

} // namespace cryst
