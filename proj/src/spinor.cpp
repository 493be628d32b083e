#include "cryst/spinor.hpp"

#include <algorithm>
#include <stdexcept>

namespace cryst {

namespace {

Alphabet neg_alpha(int n) { return Alphabet{n, AlphabetKind::Neg}; }

bool has_letter(const std::vector<Letter>& col, Letter x) {
    return std::find(col.begin(), col.end(), x) != col.end();
}

} // namespace

std::string SpinorTuple::str() const {
    std::string s = "{";
    for (auto& c : cols) s += c.str();
    if (shape.spin) s += " sp=" + word_str(spin);
    return s + "}";
}

std::vector<int> tail_heights(int n, const Shape& shape) {
    auto conj = shape.conjugate();
    int ell = shape.columns();
    std::vector<int> tails(ell);
    for (int k = 0; k < ell; ++k) tails[k] = n - conj[ell - 1 - k]; // cols[k] is T_{ell-k}
    return tails;
}

TwoColumn two_col_highest(int n, int a) {
    if (a < 0 || a >= n) throw std::invalid_argument("two_col_highest: need 0 <= a < n");
    TwoColumn t;
    t.a = a;
    for (int i = a; i >= 1; --i) t.left.push_back(-(n - a + i));
    return t;
}

SpinorTuple spinor_highest(LieType t, int n, const Shape& shape) {
    SpinorTuple s;
    s.type = t;
    s.n = n;
    s.shape = shape;
    while (!s.shape.mu.empty() && s.shape.mu.back() == 0) s.shape.mu.pop_back();
    for (int a : tail_heights(n, shape)) s.cols.push_back(two_col_highest(n, a));
    return s; // spin factor of the highest element is the empty column
}

std::optional<std::string> block_violation(LieType t, int n, const TwoColumn& c) {
    if (c.a < 0 || c.a >= n) return "tail height out of range";
    if (t == LieType::C && c.b != 0) return "type C factors have b = 0";
    if (auto v = two_col_violation(neg_alpha(n), c)) return v;
    if (max_right_slide(neg_alpha(n), c) != 0) return "slide rank must be 0";
    return std::nullopt;
}

namespace {

std::optional<Letter> from_bottom(const std::vector<Letter>& col, int i) {
    int h = static_cast<int>(col.size());
    if (i < 1 || i > h) return std::nullopt;
    return col[h - i];
}

bool admissible_impl(int n, const TwoColumn& left, const std::vector<Letter>& rl,
                     const std::vector<Letter>& r_lt, int right_a, std::string* why) {
    // left = T_2, right data = (T_1^L, lifted left column of T_1, a_1)
    Alphabet a = neg_alpha(n);
    int a2 = left.a;
    if (a2 < right_a) {
        if (why) *why = "tail heights out of order";
        return false;
    }
    if (static_cast<int>(left.right.size()) > static_cast<int>(rl.size()) - right_a) {
        if (why) *why = "height condition fails";
        return false;
    }
    auto [l_lt, l_rt] = fully_raised(a, left);
    for (int i = 1;; ++i) {
        auto x = from_bottom(left.right, i);
        if (!x) break;
        auto y = from_bottom(r_lt, i);
        if (y && !a.leq(*x, *y)) {
            if (why) *why = "inner interleaving fails at height " + std::to_string(i);
            return false;
        }
    }
    for (int i = 1;; ++i) {
        auto y = from_bottom(rl, i);
        if (!y) break;
        auto x = from_bottom(l_rt, i + a2 - right_a);
        if (x && !a.leq(*x, *y)) {
            if (why) *why = "outer interleaving fails at height " + std::to_string(i);
            return false;
        }
    }
    return true;
}

} // namespace

bool admissible(LieType t, int n, const TwoColumn& left, const TwoColumn& right, std::string* why) {
    (void)t;
    auto r_lt = fully_raised(neg_alpha(n), right).first;
    return admissible_impl(n, left, right.left, r_lt, right.a, why);
}

bool admissible_spin(LieType t, int n, const TwoColumn& left, const std::vector<Letter>& spin,
                     std::string* why) {
    (void)t;
    return admissible_impl(n, left, spin, spin, 0, why);
}

std::optional<std::string> spinor_violation(const SpinorTuple& s) {
    if (auto v = shape_violation(s.type, s.n, s.shape)) return v;
    auto tails = tail_heights(s.n, s.shape);
    if (s.cols.size() != tails.size()) return "factor count does not match the shape";
    for (size_t k = 0; k < s.cols.size(); ++k) {
        if (s.cols[k].a != tails[k])
            return "factor " + std::to_string(k) + " has the wrong tail height";
        if (auto v = block_violation(s.type, s.n, s.cols[k])) return v;
    }
    if (!s.shape.spin && !s.spin.empty()) return "unexpected spin factor";
    if (s.shape.spin) {
        Alphabet a = neg_alpha(s.n);
        if (static_cast<int>(s.spin.size()) > s.n) return "spin factor too tall";
        for (size_t k = 0; k + 1 < s.spin.size(); ++k)
            if (!a.less(s.spin[k], s.spin[k + 1])) return "spin factor not strictly increasing";
        for (Letter x : s.spin)
            if (!a.contains(x)) return "spin factor letter outside the alphabet";
    }
    std::string why;
    for (size_t k = 0; k + 1 < s.cols.size(); ++k)
        if (!admissible(s.type, s.n, s.cols[k], s.cols[k + 1], &why))
            return "factors " + std::to_string(k) + "," + std::to_string(k + 1) +
                   " not admissible: " + why;
    if (s.shape.spin && !s.cols.empty())
        if (!admissible_spin(s.type, s.n, s.cols.back(), s.spin, &why))
            return "spin factor not admissible: " + why;
    return std::nullopt;
}

HalfWeight block_weight(LieType t, int n, const TwoColumn& c) {
    HalfWeight w = HalfWeight::fundamental(t, n, n);
    if (t == LieType::B) w += HalfWeight::fundamental(t, n, n);
    for (Letter x : c.left) add_letter_weight(w, x);
    for (Letter x : c.right) add_letter_weight(w, x);
    return w;
}

namespace {

// column word of a factor with cell back-references: the right column first,
// each top to bottom (the reading compatible with the operator bracketing)
struct BlockWord {
    std::vector<Letter> word;
    std::vector<std::pair<bool, int>> cell; // (is_left, index)
};

BlockWord block_word(const TwoColumn& c) {
    BlockWord w;
    for (size_t k = 0; k < c.right.size(); ++k) {
        w.word.push_back(c.right[k]);
        w.cell.emplace_back(false, static_cast<int>(k));
    }
    for (size_t k = 0; k < c.left.size(); ++k) {
        w.word.push_back(c.left[k]);
        w.cell.emplace_back(true, static_cast<int>(k));
    }
    return w;
}

// n-direction data of a bare column over the barred alphabet carrying one
// omega_n offset: <omega_n + wt_l, h_n> = 1 - 2*[contains n-bar].
FactorStat bare_col_stat_n(int n, const std::vector<Letter>& col) {
    FactorStat s{MInt(0), MInt(0), 0};
    bool top_nbar = !col.empty() && col.front() == -n;
    s.eps = top_nbar ? 1 : 0;
    s.phi = top_nbar ? 0 : 1;
    s.pair = 1 - (has_letter(col, -n) ? 2 : 0);
    return s;
}

} // namespace

FactorStat block_stat(LieType t, int n, const TwoColumn& c, int i) {
    FactorStat s{MInt(0), MInt(0), 0};
    s.pair = block_weight(t, n, c).pairing(t, i);
    if (i < n) {
        auto w = block_word(c);
        FoldResult f = fold_factors([&] {
            std::vector<FactorStat> fs;
            for (Letter x : w.word) fs.push_back(neg_letter_stat(n, x, i));
            return fs;
        }());
        s.eps = f.eps;
        s.phi = f.phi;
        return s;
    }
    if (t == LieType::C) {
        bool domino = c.c > 0 && c.left.front() == -n && c.right.front() == -n;
        s.eps = domino ? 1 : 0;
        s.phi = MInt(s.eps.value() + s.pair);
        if (s.phi.value() < 0 || s.phi.value() > 1)
            throw std::logic_error("block_stat: type C phi_n out of range");
        return s;
    }
    // type B: the two columns behave as spin factors, right one first
    std::vector<FactorStat> fs{bare_col_stat_n(n, c.right), bare_col_stat_n(n, c.left)};
    FoldResult f = fold_factors(fs);
    s.eps = f.eps;
    s.phi = f.phi;
    return s;
}

std::optional<TwoColumn> block_step(LieType t, int n, const TwoColumn& c, int i, Dir d) {
    if (i < n) {
        auto w = block_word(c);
        auto act = neg_word_step(n, w.word, i, d);
        if (!act) return std::nullopt;
        TwoColumn out = c;
        auto [is_left, idx] = w.cell[act->pos];
        (is_left ? out.left : out.right)[idx] = act->repl;
        return out;
    }
    FactorStat s = block_stat(t, n, c, i);
    if (d == Dir::E && !(s.eps > MInt(0))) return std::nullopt;
    if (d == Dir::F && !(s.phi > MInt(0))) return std::nullopt;
    TwoColumn out = c;
    if (t == LieType::C) {
        if (d == Dir::E) {
            out.left.erase(out.left.begin());
            out.right.erase(out.right.begin());
            out.c -= 1;
        } else {
            out.left.insert(out.left.begin(), -n);
            out.right.insert(out.right.begin(), -n);
            out.c += 1;
        }
        return out;
    }
    // type B: route between the two columns as spin factors
    std::vector<FactorStat> fs{bare_col_stat_n(n, c.right), bare_col_stat_n(n, c.left)};
    FoldResult f = fold_factors(fs);
    int target = d == Dir::E ? f.e_target : f.f_target;
    bool on_right = target == 0;
    if (d == Dir::E) {
        if (on_right) {
            out.right.erase(out.right.begin());
            out.b -= 1;
        } else {
            out.left.erase(out.left.begin());
            out.b += 1;
            out.c -= 1;
        }
    } else {
        if (on_right) {
            out.right.insert(out.right.begin(), -n);
            out.b += 1;
        } else {
            out.left.insert(out.left.begin(), -n);
            out.b -= 1;
            out.c += 1;
        }
    }
    if (out.a != c.a || out.b < 0 || out.c < 0)
        throw std::logic_error("block_step: shape left the family");
    return out;
}

HalfWeight spinor_weight(const SpinorTuple& s) {
    HalfWeight w(s.n);
    for (auto& c : s.cols) w += block_weight(s.type, s.n, c);
    if (s.shape.spin) {
        w += HalfWeight::fundamental(s.type, s.n, s.n);
        for (Letter x : s.spin) add_letter_weight(w, x);
    }
    return w;
}

namespace {

FactorStat spin_factor_stat(LieType t, int n, const std::vector<Letter>& col, int i) {
    FactorStat s{MInt(0), MInt(0), 0};
    HalfWeight w = HalfWeight::fundamental(t, n, n);
    for (Letter x : col) add_letter_weight(w, x);
    s.pair = w.pairing(t, i);
    if (i < n) {
        FoldResult f = fold_factors([&] {
            std::vector<FactorStat> fs;
            for (Letter x : col) fs.push_back(neg_letter_stat(n, x, i));
            return fs;
        }());
        s.eps = f.eps;
        s.phi = f.phi;
    } else {
        FactorStat b = bare_col_stat_n(n, col);
        s.eps = b.eps;
        s.phi = b.phi;
    }
    return s;
}

std::optional<std::vector<Letter>> spin_factor_step(int n, const std::vector<Letter>& col, int i,
                                                    Dir d) {
    if (i < n) {
        auto act = neg_word_step(n, col, i, d);
        if (!act) return std::nullopt;
        auto out = col;
        out[act->pos] = act->repl;
        return out;
    }
    auto out = col;
    if (d == Dir::E) {
        if (out.empty() || out.front() != -n) return std::nullopt;
        out.erase(out.begin());
    } else {
        if (!out.empty() && out.front() == -n) return std::nullopt;
        if (static_cast<int>(out.size()) >= n) return std::nullopt;
        out.insert(out.begin(), -n);
    }
    return out;
}

} // namespace

CrystalStats spinor_stats(const SpinorTuple& s) {
    CrystalStats st(s.n);
    st.wt = spinor_weight(s);
    for (int i = 1; i <= s.n; ++i) {
        std::vector<FactorStat> fs;
        if (s.shape.spin) fs.push_back(spin_factor_stat(s.type, s.n, s.spin, i));
        for (auto it = s.cols.rbegin(); it != s.cols.rend(); ++it)
            fs.push_back(block_stat(s.type, s.n, *it, i));
        FoldResult f = fold_factors(fs);
        st.eps[i - 1] = f.eps;
        st.phi[i - 1] = f.phi;
    }
    return st;
}

std::optional<SpinorTuple> spinor_step(const SpinorTuple& s, int i, Dir d) {
    if (i < 1 || i > s.n) throw std::invalid_argument("spinor_step: index out of range");
    std::vector<FactorStat> fs;
    if (s.shape.spin) fs.push_back(spin_factor_stat(s.type, s.n, s.spin, i));
    for (auto it = s.cols.rbegin(); it != s.cols.rend(); ++it)
        fs.push_back(block_stat(s.type, s.n, *it, i));
    FoldResult f = fold_factors(fs);
    int target;
    if (d == Dir::E) {
        if (!(f.eps > MInt(0))) return std::nullopt;
        target = f.e_target;
    } else {
        if (!(f.phi > MInt(0))) return std::nullopt;
        target = f.f_target;
    }
    SpinorTuple out = s;
    int offset = s.shape.spin ? 1 : 0;
    if (s.shape.spin && target == 0) {
        auto nc = spin_factor_step(s.n, s.spin, i, d);
        if (!nc) throw std::logic_error("spinor_step: routed to an inert spin factor");
        out.spin = *nc;
    } else {
        int k = static_cast<int>(s.cols.size()) - 1 - (target - offset); // tensor to storage
        auto nb = block_step(s.type, s.n, s.cols[k], i, d);
        if (!nb) throw std::logic_error("spinor_step: routed to an inert factor");
        out.cols[k] = *nb;
    }
    if (auto v = spinor_violation(out))
        throw std::logic_error("spinor_step: left the model: " + *v);
    return out;
}

TwoColumn kn_column_to_block(LieType t, int n, const std::vector<Letter>& col) {
    (void)t;
    Alphabet a = neg_alpha(n);
    std::vector<Letter> minus, tilde_plus;
    std::vector<bool> in_plus(n + 1, false);
    for (Letter x : col) {
        if (x > 0) in_plus[x] = true;
        else if (x < 0) minus.push_back(x);
    }
    for (int k = n; k >= 1; --k)
        if (!in_plus[k]) tilde_plus.push_back(-k);
    TwoColumn cur = normalize_pair(a, minus, tilde_plus);
    int steps = n - static_cast<int>(col.size());
    for (int k = 0; k < steps; ++k) {
        auto nxt = two_col_lower(a, cur);
        if (!nxt) throw std::invalid_argument("kn_column_to_block: column is not a valid KN column");
        cur = *nxt;
    }
    return cur;
}

std::vector<Letter> block_to_kn_column(LieType t, int n, const TwoColumn& c) {
    Alphabet a = neg_alpha(n);
    auto [lt, rt] = fully_raised(a, c);
    std::vector<Letter> out;
    std::vector<bool> in_rt(n + 1, false);
    for (Letter x : rt) in_rt[-x] = true;
    for (int k = 1; k <= n; ++k)
        if (!in_rt[k]) out.push_back(k);
    if (t == LieType::B) {
        int zeros = c.a + static_cast<int>(c.right.size()) - static_cast<int>(c.left.size());
        if (zeros < 0) throw std::logic_error("block_to_kn_column: negative zero count");
        for (int k = 0; k < zeros; ++k) out.push_back(0);
    }
    out.insert(out.end(), lt.begin(), lt.end());
    return out;
}

std::vector<Letter> kn_spin_to_block(int n, const std::vector<Letter>& spin_col) {
    if (auto v = spin_col_violation(n, spin_col))
        throw std::invalid_argument("kn_spin_to_block: " + *v);
    std::vector<Letter> out;
    for (Letter x : spin_col)
        if (x < 0) out.push_back(x);
    return out;
}

std::vector<Letter> block_to_kn_spin(int n, const std::vector<Letter>& spin) {
    Alphabet a{n, AlphabetKind::NoZero};
    std::vector<Letter> out = spin;
    for (int k = 1; k <= n; ++k)
        if (!has_letter(spin, -k)) out.push_back(k);
    std::sort(out.begin(), out.end(), [&](Letter x, Letter y) { return a.less(x, y); });
    return out;
}

SpinorTuple kn_to_spinor(const KnTableau& t) {
    if (auto v = kn_violation(t)) throw std::invalid_argument("kn_to_spinor: " + *v);
    SpinorTuple s;
    s.type = t.type;
    s.n = t.n;
    s.shape = t.shape;
    for (auto it = t.cols.rbegin(); it != t.cols.rend(); ++it)
        s.cols.push_back(kn_column_to_block(t.type, t.n, *it));
    if (t.shape.spin) s.spin = kn_spin_to_block(t.n, t.spin_col);
    if (auto v = spinor_violation(s))
        throw std::logic_error("kn_to_spinor: image invalid: " + *v);
    return s;
}

KnTableau spinor_to_kn(const SpinorTuple& s) {
    if (auto v = spinor_violation(s)) throw std::invalid_argument("spinor_to_kn: " + *v);
    KnTableau t;
    t.type = s.type;
    t.n = s.n;
    t.shape = s.shape;
    for (auto it = s.cols.rbegin(); it != s.cols.rend(); ++it)
        t.cols.push_back(block_to_kn_column(s.type, s.n, *it));
    if (s.shape.spin) t.spin_col = block_to_kn_spin(s.n, s.spin);
    if (auto v = kn_violation(t)) throw std::logic_error("spinor_to_kn: image invalid: " + *v);
    return t;
}

} // namespace cryst
