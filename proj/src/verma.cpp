#include "cryst/verma.hpp"

#include "cryst/spinor.hpp"

#include <algorithm>
#include <stdexcept>

namespace cryst {

namespace {

Alphabet neg_alpha(int n) { return Alphabet{n, AlphabetKind::Neg}; }

int count_letter(const std::vector<Letter>& col, Letter x) {
    return static_cast<int>(std::count(col.begin(), col.end(), x));
}

// columns of v1 from the right, grouped into blocks: column pairs in type C,
// single columns in type B
std::vector<std::vector<Letter>> v1_columns(const SkewTableau& v1) {
    std::vector<std::vector<Letter>> cols;
    for (int j = 1; j <= v1.column_count(); ++j) cols.push_back(v1.column(j));
    return cols;
}

int block_count(LieType t, int ncols) { return t == LieType::C ? ncols / 2 : ncols; }

// n-direction data of block k (0-based from the right)
FactorStat v1_block_stat(LieType t, int n, const std::vector<std::vector<Letter>>& cols, int k) {
    FactorStat s{MInt(0), MInt(0), 0};
    if (t == LieType::C) {
        const auto& rcol = cols[2 * k];
        const auto& lcol = cols[2 * k + 1];
        bool domino = !rcol.empty() && rcol.front() == -n && lcol.front() == -n;
        s.eps = domino ? 1 : 0;
        s.pair = 1 - count_letter(rcol, -n) - count_letter(lcol, -n);
        s.phi = MInt(s.eps.value() + s.pair);
    } else {
        const auto& col = cols[k];
        bool top = !col.empty() && col.front() == -n;
        s.eps = top ? 1 : 0;
        s.phi = top ? 0 : 1;
        s.pair = 1 - 2 * count_letter(col, -n);
    }
    return s;
}

struct NFold {
    FoldResult fold;
    int blocks = 0; // real blocks, before padding
};

NFold v1_n_fold(LieType t, int n, const std::vector<std::vector<Letter>>& cols, int pads) {
    NFold out;
    out.blocks = block_count(t, static_cast<int>(cols.size()));
    std::vector<FactorStat> fs;
    for (int k = 0; k < out.blocks; ++k) fs.push_back(v1_block_stat(t, n, cols, k));
    for (int p = 0; p < pads; ++p) fs.push_back(FactorStat{MInt(0), MInt(1), 1}); // empty block
    // trailing t_{-K omega_n} with K = blocks + pads
    fs.push_back(FactorStat{MInt::minus_inf(), MInt::minus_inf(), -(out.blocks + pads)});
    out.fold = fold_factors(fs);
    return out;
}

std::vector<FactorStat> neg_word_factorstats(int n, const std::vector<Letter>& w, int i) {
    std::vector<FactorStat> fs;
    for (Letter x : w) fs.push_back(neg_letter_stat(n, x, i));
    return fs;
}

} // namespace

std::string VermaElement::str() const {
    return "V2:" + v2.str() + "V1:" + v1.str();
}

std::vector<int> nu_of(int n, const Shape& shape) {
    auto tails = tail_heights(n, shape); // weakly decreasing
    std::vector<int> nu;
    for (int j = 1; !tails.empty() && j <= tails.front(); ++j) {
        int cnt = 0;
        for (int a : tails)
            if (a >= j) ++cnt;
        nu.push_back(cnt);
    }
    return nu;
}

std::optional<std::string> v1_violation(LieType t, int n, const SkewTableau& v1) {
    if (!v1.empty() && !v1.rotated) return "V1 must be rotated";
    if (v1.alphabet.kind != AlphabetKind::Neg && !v1.empty()) return "V1 must use barred letters";
    if (auto v = sst_violation(v1)) return v;
    for (auto& row : v1.rows)
        if (t == LieType::C && row.size() % 2 != 0) return "type C row lengths must be even";
    if (!v1.rows.empty() && static_cast<int>(v1.column(1).size()) > n) return "column taller than n";
    return std::nullopt;
}

std::optional<std::string> verma_violation(const VermaElement& v) {
    if (auto s = shape_violation(v.type, v.n, v.shape)) return s;
    auto nu = nu_of(v.n, v.shape);
    if (v.v2.rotated && !v.v2.empty()) return "V2 must be straight";
    if (v.v2.shape() != nu && !(nu.empty() && v.v2.empty())) return "V2 shape must be nu";
    if (auto s = sst_violation(v.v2)) return s;
    for (auto& row : v.v2.rows)
        for (Letter x : row)
            if (x >= 0) return "V2 letters must be barred";
    return v1_violation(v.type, v.n, v.v1);
}

VermaElement verma_highest(LieType t, int n, const Shape& shape) {
    VermaElement v;
    v.type = t;
    v.n = n;
    v.shape = shape;
    while (!v.shape.mu.empty() && v.shape.mu.back() == 0) v.shape.mu.pop_back();
    auto nu = nu_of(n, shape);
    std::vector<std::vector<Letter>> rows;
    for (size_t i = 0; i < nu.size(); ++i)
        rows.push_back(std::vector<Letter>(nu[i], -(n - static_cast<int>(i))));
    v.v2 = make_straight(neg_alpha(n), std::move(rows));
    v.v1 = SkewTableau{neg_alpha(n), true, {}};
    return v;
}

CrystalStats v1_stats(LieType t, int n, const SkewTableau& v1) {
    CrystalStats s(n);
    for (auto& row : v1.rows)
        for (Letter x : row) add_letter_weight(s.wt, x);
    // column word, rightmost first: the operator-compatible reading
    std::vector<Letter> w;
    for (auto& col : v1_columns(v1)) w.insert(w.end(), col.begin(), col.end());
    for (int i = 1; i < n; ++i) {
        FoldResult f = fold_factors(neg_word_factorstats(n, w, i));
        s.eps[i - 1] = f.eps;
        s.phi[i - 1] = f.phi;
    }
    NFold nf = v1_n_fold(t, n, v1_columns(v1), 1);
    s.eps[n - 1] = nf.fold.eps;
    s.phi[n - 1] = nf.fold.phi;
    return s;
}

std::optional<SkewTableau> v1_step(LieType t, int n, const SkewTableau& v1, int i, Dir d,
                                   int extra_pads) {
    Alphabet a = neg_alpha(n);
    if (i < n) {
        auto cols = v1_columns(v1);
        std::vector<Letter> w;
        std::vector<std::pair<int, int>> cell; // column, entry
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t k = 0; k < cols[j].size(); ++k) {
                w.push_back(cols[j][k]);
                cell.emplace_back(static_cast<int>(j), static_cast<int>(k));
            }
        auto act = neg_word_step(n, w, i, d);
        if (!act) return std::nullopt;
        cols[cell[act->pos].first][cell[act->pos].second] = act->repl;
        SkewTableau out = rotated_from_columns(a, cols);
        out.rotated = true;
        if (auto viol = v1_violation(t, n, out))
            throw std::logic_error("v1_step: left the model: " + *viol);
        return out;
    }
    auto cols = v1_columns(v1);
    NFold nf = v1_n_fold(t, n, cols, extra_pads);
    int target;
    if (d == Dir::E) {
        if (!(nf.fold.eps > MInt(0))) return std::nullopt;
        target = nf.fold.e_target;
    } else {
        target = nf.fold.f_target; // always defined on this model
    }
    if (target >= nf.blocks + extra_pads) throw std::logic_error("v1_step: routed to the shift factor");
    if (target >= nf.blocks) {
        if (d == Dir::E) throw std::logic_error("v1_step: raising routed to a pad");
        if (target != nf.blocks) throw std::logic_error("v1_step: skipped a pad");
        if (t == LieType::C) {
            cols.push_back({-n});
            cols.push_back({-n});
        } else {
            cols.push_back({-n});
        }
    } else {
        int c0 = t == LieType::C ? 2 * target : target;
        int c1 = t == LieType::C ? 2 * target + 1 : target;
        if (d == Dir::E) {
            cols[c0].erase(cols[c0].begin());
            if (c1 != c0) cols[c1].erase(cols[c1].begin());
        } else {
            cols[c0].insert(cols[c0].begin(), -n);
            if (c1 != c0) cols[c1].insert(cols[c1].begin(), -n);
        }
        while (!cols.empty() && cols.back().empty()) cols.pop_back();
    }
    SkewTableau out = rotated_from_columns(a, cols);
    out.rotated = true;
    if (auto viol = v1_violation(t, n, out))
        throw std::logic_error("v1_step: left the model: " + *viol);
    return out;
}

HalfWeight verma_weight(const VermaElement& v) {
    HalfWeight w(v.n);
    for (auto& row : v.v2.rows)
        for (Letter x : row) add_letter_weight(w, x);
    for (auto& row : v.v1.rows)
        for (Letter x : row) add_letter_weight(w, x);
    return w;
}

namespace {

// stats of V2 as a factor: l-structure from the word, phi_n = -infinity
FactorStat v2_stat(const VermaElement& v, int i) {
    HalfWeight wt(v.n);
    for (auto& row : v.v2.rows)
        for (Letter x : row) add_letter_weight(wt, x);
    int pair = wt.pairing(v.type, i);
    if (i == v.n) return FactorStat{MInt::minus_inf(), MInt::minus_inf(), pair};
    std::vector<Letter> w;
    for (int j = v.v2.column_count(); j >= 1; --j) {
        auto col = v.v2.column(j);
        w.insert(w.end(), col.begin(), col.end());
    }
    FoldResult f = fold_factors(neg_word_factorstats(v.n, w, i));
    return FactorStat{f.eps, f.phi, pair};
}

} // namespace

CrystalStats verma_stats(const VermaElement& v) {
    CrystalStats s(v.n);
    s.wt = verma_weight(v);
    CrystalStats s1 = v1_stats(v.type, v.n, v.v1);
    for (int i = 1; i <= v.n; ++i) {
        FactorStat f1{s1.eps[i - 1], s1.phi[i - 1], s1.wt.pairing(v.type, i)};
        FactorStat f2 = v2_stat(v, i);
        FoldResult f = fold_factors({f1, f2});
        s.eps[i - 1] = f.eps;
        s.phi[i - 1] = f.phi;
    }
    return s;
}

std::optional<VermaElement> verma_step(const VermaElement& v, int i, Dir d, int extra_pads) {
    if (i < 1 || i > v.n) throw std::invalid_argument("verma_step: index out of range");
    CrystalStats s1 = v1_stats(v.type, v.n, v.v1);
    FactorStat f1{s1.eps[i - 1], s1.phi[i - 1], s1.wt.pairing(v.type, i)};
    FactorStat f2 = v2_stat(v, i);
    FoldResult f = fold_factors({f1, f2});
    bool on_v1;
    if (d == Dir::E) {
        if (i < v.n && !(f.eps > MInt(0))) return std::nullopt;
        on_v1 = f.e_target == 0;
    } else {
        if (i < v.n && !(f.phi > MInt(0))) return std::nullopt;
        on_v1 = f.f_target == 0;
    }
    VermaElement out = v;
    if (on_v1) {
        auto nv1 = v1_step(v.type, v.n, v.v1, i, d, extra_pads);
        if (!nv1) return std::nullopt;
        out.v1 = *nv1;
    } else {
        // V2 moves only in the Levi directions
        if (i == v.n) throw std::logic_error("verma_step: n-action routed to V2");
        std::vector<Letter> w;
        std::vector<std::pair<int, int>> cell; // row, column within the row
        for (int j = v.v2.column_count(); j >= 1; --j)
            for (size_t r = 0; r < v.v2.rows.size(); ++r)
                if (static_cast<int>(v.v2.rows[r].size()) >= j) {
                    w.push_back(v.v2.rows[r][j - 1]);
                    cell.emplace_back(static_cast<int>(r), j - 1);
                }
        auto act = neg_word_step(v.n, w, i, d);
        if (!act) return std::nullopt;
        out.v2.rows[cell[act->pos].first][cell[act->pos].second] = act->repl;
    }
    if (auto viol = verma_violation(out))
        throw std::logic_error("verma_step: left the model: " + *viol);
    return out;
}

} // namespace cryst
