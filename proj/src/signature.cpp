#include "cryst/signature.hpp"

#include <stdexcept>

namespace cryst {

TensorPair tensor_stats(MInt eps1, MInt phi1, int pair1, MInt eps2, MInt phi2, int pair2) {
    TensorPair r;
    r.eps = max(eps1, eps2 - pair1);
    r.phi = max(phi1 + pair2, phi2);
    r.e_left = phi1 >= eps2;
    r.f_left = phi1 > eps2;
    return r;
}

FoldResult fold_factors(const std::vector<FactorStat>& fs) {
    FoldResult out;
    if (fs.empty()) {
        out.eps = MInt(0);
        out.phi = MInt(0);
        return out;
    }
    // Prefix stats, then walk from the right: at each split B (x) b_j the
    // operator stays left iff phi(B) >= eps(b_j) (strict for f).
    size_t r = fs.size();
    std::vector<MInt> pre_eps(r), pre_phi(r);
    std::vector<int> pre_pair(r);
    pre_eps[0] = fs[0].eps;
    pre_phi[0] = fs[0].phi;
    pre_pair[0] = fs[0].pair;
    for (size_t k = 1; k < r; ++k) {
        TensorPair t = tensor_stats(pre_eps[k - 1], pre_phi[k - 1], pre_pair[k - 1],
                                    fs[k].eps, fs[k].phi, fs[k].pair);
        pre_eps[k] = t.eps;
        pre_phi[k] = t.phi;
        pre_pair[k] = pre_pair[k - 1] + fs[k].pair;
    }
    out.eps = pre_eps[r - 1];
    out.phi = pre_phi[r - 1];

    size_t j = r - 1;
    while (j >= 1 && pre_phi[j - 1] >= fs[j].eps) --j;
    out.e_target = static_cast<int>(j);

    j = r - 1;
    while (j >= 1 && pre_phi[j - 1] > fs[j].eps) --j;
    out.f_target = static_cast<int>(j);
    return out;
}

SignatureResult signature_reduce(const std::vector<char>& word) {
    SignatureResult res;
    // Scan left to right cancelling each '+' against the nearest surviving
    // '-' on its left; the reduced word has no '-' left of a '+'.
    std::vector<int> minus_stack; // positions of so-far-unmatched '-'
    std::vector<int> plus_pos;    // surviving '+'
    for (size_t p = 0; p < word.size(); ++p) {
        char c = word[p];
        if (c == '-') {
            minus_stack.push_back(static_cast<int>(p) + 1);
        } else if (c == '+') {
            if (!minus_stack.empty()) minus_stack.pop_back();
            else plus_pos.push_back(static_cast<int>(p) + 1);
        } else if (c != '.') {
            throw std::invalid_argument("signature_reduce: word letters must be +, -, .");
        }
    }
    res.eps = static_cast<int>(minus_stack.size());
    res.phi = static_cast<int>(plus_pos.size());
    if (!minus_stack.empty()) res.e_pos = minus_stack.front();
    if (!plus_pos.empty()) res.f_pos = plus_pos.back();
    return res;
}

FactorStat letter_stat(LieType t, int n, Letter x, int i) {
    FactorStat s{MInt(0), MInt(0), 0};
    if (x > 0) {
        if (i == x - 1) s.eps = 1;
        if (i == x && x < n) s.phi = 1;
        if (i == n && x == n) s.phi = (t == LieType::C) ? 1 : 2;
        if (i < n) s.pair = (x == i) - (x == i + 1);
        else s.pair = (x == n) ? (t == LieType::C ? 1 : 2) : 0;
    } else if (x < 0) {
        int k = -x;
        if (i == k && k < n) s.eps = 1;
        if (i == k - 1) s.phi = 1;
        if (i == n && k == n) s.eps = (t == LieType::C) ? 1 : 2;
        if (i < n) s.pair = (k == i + 1) - (k == i);
        else s.pair = (k == n) ? (t == LieType::C ? -1 : -2) : 0;
    } else {
        if (t != LieType::B) throw std::invalid_argument("letter 0 only exists in type B");
        if (i == n) {
            s.eps = 1;
            s.phi = 1;
        }
    }
    return s;
}

FactorStat neg_letter_stat(int n, Letter x, int i) {
    if (x >= 0 || i >= n) throw std::invalid_argument("neg_letter_stat: barred letter, i < n");
    FactorStat s{MInt(0), MInt(0), 0};
    int k = -x;
    if (k == i) s.eps = 1;
    if (k == i + 1) s.phi = 1;
    s.pair = (k == i + 1) - (k == i);
    return s;
}

std::optional<Letter> letter_step(LieType t, int n, Letter x, int i, Dir d) {
    // Walk the chain 1,...,n,(0),n~,...,1~ one step in the i-labelled places.
    auto fwd = [&](Letter y) -> std::optional<Letter> {
        if (y > 0 && y == i && y < n) return y + 1;
        if (i == n && y == n) return t == LieType::C ? Letter(-n) : Letter(0);
        if (i == n && y == 0) return -n;
        if (y < 0 && -y == i + 1) return -i;
        return std::nullopt;
    };
    auto bwd = [&](Letter y) -> std::optional<Letter> {
        if (y > 0 && y == i + 1) return y - 1;
        if (i == n && y == 0) return n;
        if (i == n && y == -n) return t == LieType::C ? Letter(n) : Letter(0);
        if (y < 0 && -y == i) return -(i + 1);
        return std::nullopt;
    };
    return d == Dir::F ? fwd(x) : bwd(x);
}

std::optional<Letter> neg_letter_step(int n, Letter x, int i, Dir d) {
    if (x >= 0 || i >= n) return std::nullopt;
    int k = -x;
    if (d == Dir::F && k == i + 1) return -i;
    if (d == Dir::E && k == i) return -(i + 1);
    return std::nullopt;
}

static std::vector<FactorStat> neg_word_stats(int n, const std::vector<Letter>& w, int i) {
    std::vector<FactorStat> fs;
    fs.reserve(w.size());
    for (Letter x : w) fs.push_back(neg_letter_stat(n, x, i));
    return fs;
}

std::optional<WordAction> neg_word_step(int n, const std::vector<Letter>& w, int i, Dir d) {
    if (w.empty()) return std::nullopt;
    FoldResult f = fold_factors(neg_word_stats(n, w, i));
    int pos;
    if (d == Dir::E) {
        if (!(f.eps > MInt(0))) return std::nullopt;
        pos = f.e_target;
    } else {
        if (!(f.phi > MInt(0))) return std::nullopt;
        pos = f.f_target;
    }
    auto repl = neg_letter_step(n, w[pos], i, d);
    if (!repl) throw std::logic_error("neg_word_step: routed to an inert letter");
    return WordAction{pos, *repl};
}

MInt neg_word_eps(int n, const std::vector<Letter>& w, int i) {
    return fold_factors(neg_word_stats(n, w, i)).eps;
}
MInt neg_word_phi(int n, const std::vector<Letter>& w, int i) {
    return fold_factors(neg_word_stats(n, w, i)).phi;
}

} // namespace cryst
