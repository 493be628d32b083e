#include "cryst/kn.hpp"

#include <algorithm>
#include <stdexcept>

namespace cryst {

std::vector<int> Shape::conjugate() const {
    std::vector<int> conj;
    int w = columns();
    for (int j = 1; j <= w; ++j) {
        int h = 0;
        for (int part : mu)
            if (part >= j) ++h;
        conj.push_back(h);
    }
    return conj;
}

std::string Shape::str() const {
    std::string s = "(";
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(mu[i]);
    }
    s += ")";
    if (spin) s += "+s";
    return s;
}

std::optional<std::string> shape_violation(LieType t, int n, const Shape& s) {
    if (static_cast<int>(s.mu.size()) > n) return "more than n rows";
    for (size_t i = 0; i + 1 < s.mu.size(); ++i)
        if (s.mu[i] < s.mu[i + 1]) return "parts not weakly decreasing";
    for (int part : s.mu)
        if (part < 0) return "negative part";
    if (s.spin && t != LieType::B) return "spin shapes exist only in type B";
    return std::nullopt;
}

HalfWeight shape_weight(LieType t, int n, const Shape& s) {
    (void)t;
    HalfWeight w(n);
    for (size_t i = 0; i < s.mu.size(); ++i) w.twice[i] = 2 * s.mu[i];
    if (s.spin)
        for (int i = 0; i < n; ++i) w.twice[i] += 1;
    return w;
}

std::string KnTableau::str() const {
    std::vector<std::vector<Letter>> all = cols;
    if (shape.spin) all.insert(all.begin(), spin_col);
    std::string s;
    for (auto& c : all) s += (s.empty() ? "" : " | ") + word_str(c);
    return "[" + s + "]";
}

namespace {

// i-th entry from the bottom (1-based), nullopt above the column top.
std::optional<Letter> from_bottom(const std::vector<Letter>& col, int i) {
    int h = static_cast<int>(col.size());
    if (i < 1 || i > h) return std::nullopt;
    return col[h - i];
}

// One-column condition shared by both types: a-bar at height i1 and a at
// height i2 force i1 + (h - i2 + 1) <= a.
std::optional<std::string> one_col_check(int n, const std::vector<Letter>& col) {
    int h = static_cast<int>(col.size());
    for (int a = 1; a <= n; ++a) {
        int i1 = -1, i2 = -1;
        for (int i = 1; i <= h; ++i) {
            Letter x = *from_bottom(col, i);
            if (x == -a) i1 = i;
            if (x == a) i2 = i;
        }
        if (i1 >= 0 && i2 >= 0 && i1 + (h - i2 + 1) > a)
            return "one-column condition fails for a=" + std::to_string(a);
    }
    return std::nullopt;
}

// Two-column conditions on an adjacent pair, R the inner (right) column.
std::optional<std::string> pair_check(LieType t, int n, const std::vector<Letter>& R,
                                      const std::vector<Letter>& L) {
    int hR = static_cast<int>(R.size());
    int hL = static_cast<int>(L.size());
    auto at = [&](bool right, int i) -> std::optional<Letter> {
        return from_bottom(right ? R : L, i);
    };
    int bmax = (t == LieType::C) ? n : n - 1;
    for (int a = 1; a <= bmax; ++a) {
        for (int b = a; b <= bmax; ++b) {
            for (int p = 1; p <= hR; ++p) {
                if (at(true, p) != Letter(-a)) continue;
                // config 1: a-bar, b-bar, b in the right column, a in the left
                for (int q = p; q <= hR; ++q) {
                    if (at(true, q) != Letter(-b)) continue;
                    for (int r = q + 1; r <= hR; ++r) {
                        if (at(true, r) != Letter(b)) continue;
                        for (int s = r; s <= hL; ++s) {
                            if (at(false, s) != Letter(a)) continue;
                            if ((q - p) + (s - r) >= b - a)
                                return "two-column condition fails (inner) a=" +
                                       std::to_string(a) + " b=" + std::to_string(b);
                        }
                    }
                }
                // config 2: b-bar, b, a all in the left column
                for (int q = p; q <= hL; ++q) {
                    if (at(false, q) != Letter(-b)) continue;
                    for (int r = q + 1; r <= hL; ++r) {
                        if (at(false, r) != Letter(b)) continue;
                        for (int s = r; s <= hL; ++s) {
                            if (at(false, s) != Letter(a)) continue;
                            if ((q - p) + (s - r) >= b - a)
                                return "two-column condition fails (outer) a=" +
                                       std::to_string(a) + " b=" + std::to_string(b);
                        }
                    }
                }
            }
        }
    }
    if (t == LieType::B) {
        auto middle = [&](std::optional<Letter> x) {
            return x && (*x == n || *x == 0 || *x == -n);
        };
        for (int a = 1; a <= n - 1; ++a) {
            for (int p = 1; p <= hR; ++p) {
                if (at(true, p) != Letter(-a)) continue;
                for (int s = p; s <= hL; ++s) {
                    if (at(false, s) != Letter(a)) continue;
                    for (int q = p; q + 1 <= s; ++q) {
                        int r = q + 1;
                        bool hit = (middle(at(true, q)) && middle(at(true, r))) ||
                                   (middle(at(false, q)) && middle(at(false, r)));
                        if (hit && (q - p) + (s - r) >= n - a)
                            return "middle-letter condition fails for a=" + std::to_string(a);
                    }
                }
            }
        }
        for (int p = 1; p <= hR; ++p) {
            Letter x = from_bottom(R, p).value_or(1);
            if (x != 0 && x != -n) continue;
            for (int q = p + 1; q <= hL; ++q) {
                Letter y = from_bottom(L, q).value_or(1);
                if (y == 0 || y == n)
                    return "zero-stack condition fails at heights " + std::to_string(p) + "," +
                           std::to_string(q);
            }
        }
    }
    return std::nullopt;
}

Alphabet body_alphabet(LieType t, int n) {
    return Alphabet{n, t == LieType::B ? AlphabetKind::Full : AlphabetKind::NoZero};
}

} // namespace

std::optional<std::string> spin_col_violation(int n, const std::vector<Letter>& col) {
    if (static_cast<int>(col.size()) != n) return "spin column must have height n";
    Alphabet a{n, AlphabetKind::NoZero};
    for (Letter x : col)
        if (!a.contains(x)) return "spin column letter outside the alphabet";
    for (size_t k = 0; k + 1 < col.size(); ++k)
        if (!a.less(col[k], col[k + 1])) return "spin column not strictly increasing";
    for (int k = 1; k <= n; ++k) {
        bool pos = std::find(col.begin(), col.end(), k) != col.end();
        bool neg = std::find(col.begin(), col.end(), -k) != col.end();
        if (pos && neg) return "spin column contains both " + std::to_string(k) + " and its bar";
        if (!pos && !neg) return "spin column misses " + std::to_string(k) + " entirely";
    }
    return std::nullopt;
}

HalfWeight spin_col_weight(int n, const std::vector<Letter>& col) {
    HalfWeight w(n);
    for (Letter x : col) w.twice[(x > 0 ? x : -x) - 1] = x > 0 ? 1 : -1;
    return w;
}

FactorStat spin_col_stat(int n, const std::vector<Letter>& col, int i) {
    auto has = [&](Letter x) { return std::find(col.begin(), col.end(), x) != col.end(); };
    FactorStat s{MInt(0), MInt(0), 0};
    if (i < n) {
        if (has(-i) && has(i + 1)) s.eps = 1;
        if (has(i) && has(-(i + 1))) s.phi = 1;
    } else {
        if (has(-n)) s.eps = 1;
        else s.phi = 1;
    }
    s.pair = spin_col_weight(n, col).pairing(LieType::B, i);
    return s;
}

std::optional<std::vector<Letter>> spin_col_step(int n, const std::vector<Letter>& col, int i, Dir d) {
    FactorStat s = spin_col_stat(n, col, i);
    if (d == Dir::E && !(s.eps > MInt(0))) return std::nullopt;
    if (d == Dir::F && !(s.phi > MInt(0))) return std::nullopt;
    std::vector<Letter> out;
    Alphabet a{n, AlphabetKind::NoZero};
    auto signs = col;
    auto flip = [&](Letter from, Letter to) {
        for (auto& x : signs)
            if (x == from) x = to;
    };
    if (i < n) {
        if (d == Dir::E) {
            flip(-i, i);
            flip(i + 1, -(i + 1));
        } else {
            flip(i, -i);
            flip(-(i + 1), i + 1);
        }
    } else {
        if (d == Dir::E) flip(-n, n);
        else flip(n, -n);
    }
    std::sort(signs.begin(), signs.end(), [&](Letter x, Letter y) { return a.less(x, y); });
    return signs;
}

std::optional<std::string> kn_violation(const KnTableau& t) {
    if (auto v = shape_violation(t.type, t.n, t.shape)) return v;
    auto conj = t.shape.conjugate();
    if (t.cols.size() != conj.size()) return "column count does not match the shape";
    for (size_t j = 0; j < conj.size(); ++j)
        if (static_cast<int>(t.cols[j].size()) != conj[j])
            return "column " + std::to_string(j + 1) + " height does not match the shape";
    if (t.shape.spin != !t.spin_col.empty())
        return t.shape.spin ? "spin column missing" : "unexpected spin column";

    Alphabet body_a = body_alphabet(t.type, t.n);
    std::vector<std::vector<Letter>> all = t.cols;
    if (t.shape.spin) {
        if (auto v = spin_col_violation(t.n, t.spin_col)) return v;
        all.insert(all.begin(), t.spin_col);
    }
    if (!all.empty()) {
        // whole-array semistandardness (the spin column, if any, is rightmost)
        if (auto v = sst_violation(rotated_from_columns(body_a, all))) return v;
    }
    for (auto& col : t.cols)
        if (auto v = one_col_check(t.n, col)) return v;
    for (size_t j = 0; j + 1 < t.cols.size(); ++j)
        if (auto v = pair_check(t.type, t.n, t.cols[j], t.cols[j + 1])) return v;
    if (t.shape.spin && !t.cols.empty())
        if (auto v = pair_check(t.type, t.n, t.spin_col, t.cols[0])) return v;
    return std::nullopt;
}

KnTableau kn_highest(LieType type, int n, const Shape& shape) {
    if (auto v = shape_violation(type, n, shape)) throw std::invalid_argument("kn_highest: " + *v);
    KnTableau t;
    t.type = type;
    t.n = n;
    t.shape = shape;
    while (!t.shape.mu.empty() && t.shape.mu.back() == 0) t.shape.mu.pop_back();
    for (int h : shape.conjugate()) {
        std::vector<Letter> col;
        for (int i = 1; i <= h; ++i) col.push_back(i);
        t.cols.push_back(std::move(col));
    }
    if (shape.spin)
        for (int i = 1; i <= n; ++i) t.spin_col.push_back(i);
    return t;
}

std::vector<Letter> kn_word(const KnTableau& t) {
    return reading_word(rotated_from_columns(body_alphabet(t.type, t.n), t.cols));
}

HalfWeight kn_weight(const KnTableau& t) {
    HalfWeight w(t.n);
    for (auto& col : t.cols)
        for (Letter x : col) add_letter_weight(w, x);
    if (t.shape.spin) w += spin_col_weight(t.n, t.spin_col);
    return w;
}

namespace {

// Tensor factors in operator order: the spin column (if any) first, then the
// body columns from the right, each top to bottom.  The column word, not the
// row word, is the reading compatible with positional bracketing on these
// rotated shapes.
struct KnFactors {
    std::vector<FactorStat> stats;
    std::vector<std::pair<int, int>> cell; // col index, entry index; (-1,-1) = spin
};

KnFactors kn_factors(const KnTableau& t, int i) {
    KnFactors f;
    if (t.shape.spin) {
        f.stats.push_back(spin_col_stat(t.n, t.spin_col, i));
        f.cell.emplace_back(-1, -1);
    }
    for (size_t j = 0; j < t.cols.size(); ++j) {
        for (size_t k = 0; k < t.cols[j].size(); ++k) {
            f.stats.push_back(letter_stat(t.type, t.n, t.cols[j][k], i));
            f.cell.emplace_back(static_cast<int>(j), static_cast<int>(k));
        }
    }
    return f;
}

} // namespace

CrystalStats kn_stats(const KnTableau& t) {
    CrystalStats s(t.n);
    s.wt = kn_weight(t);
    for (int i = 1; i <= t.n; ++i) {
        FoldResult f = fold_factors(kn_factors(t, i).stats);
        s.eps[i - 1] = f.eps;
        s.phi[i - 1] = f.phi;
    }
    return s;
}

std::optional<KnTableau> kn_step(const KnTableau& t, int i, Dir d) {
    if (i < 1 || i > t.n) throw std::invalid_argument("kn_step: index out of range");
    KnFactors f = kn_factors(t, i);
    FoldResult r = fold_factors(f.stats);
    int target;
    if (d == Dir::E) {
        if (!(r.eps > MInt(0))) return std::nullopt;
        target = r.e_target;
    } else {
        if (!(r.phi > MInt(0))) return std::nullopt;
        target = r.f_target;
    }
    KnTableau out = t;
    auto [cj, ck] = f.cell[target];
    if (cj < 0) {
        auto nc = spin_col_step(t.n, t.spin_col, i, d);
        if (!nc) throw std::logic_error("kn_step: routed to an inert spin column");
        out.spin_col = *nc;
    } else {
        auto nl = letter_step(t.type, t.n, t.cols[cj][ck], i, d);
        if (!nl) throw std::logic_error("kn_step: routed to an inert letter");
        out.cols[cj][ck] = *nl;
    }
    if (auto v = kn_violation(out))
        throw std::logic_error("kn_step: produced an invalid tableau: " + *v);
    return out;
}

} // namespace cryst
