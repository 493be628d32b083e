#include "cryst/lusztig.hpp"

#include <algorithm>
#include <stdexcept>

namespace cryst {

size_t TypeAMatrix::idx(int n, int i, int j) {
    int m = 2 * n;
    if (i < 1 || i >= j || j > m) throw std::out_of_range("TypeAMatrix: bad root index");
    return static_cast<size_t>(i - 1) * m - static_cast<size_t>(i) * (i - 1) / 2 +
           static_cast<size_t>(j - i - 1);
}

std::string TypeAMatrix::str() const {
    std::string s;
    for (int i = 1; i < dim(); ++i)
        for (int j = i + 1; j <= dim(); ++j)
            if (at(i, j))
                s += "c(" + std::to_string(i) + "," + std::to_string(j) + ")=" +
                     std::to_string(at(i, j)) + " ";
    return s.empty() ? "0" : s;
}

TypeAMatrix sigma(const TypeAMatrix& c) {
    TypeAMatrix out(c.n);
    int m = c.dim();
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j <= m; ++j) out.at(i, j) = c.at(m - j + 1, m - i + 1);
    return out;
}

bool sigma_fixed(const TypeAMatrix& c) { return sigma(c) == c; }

std::vector<int> typeA_weight(const TypeAMatrix& c) {
    std::vector<int> w(c.dim(), 0);
    for (int i = 1; i < c.dim(); ++i)
        for (int j = i + 1; j <= c.dim(); ++j) {
            w[i - 1] -= c.at(i, j);
            w[j - 1] += c.at(i, j);
        }
    return w;
}

namespace {

// the running quantities whose maximum is eps_i, for 1 <= i <= n-1
std::vector<int> c_profile(const TypeAMatrix& c, int i) {
    int n = c.n;
    std::vector<int> ck(2 * n - i + 1, 0); // 1-based
    ck[1] = c.at(i, n + 1);
    for (int k = 2; k <= n; ++k) ck[k] = ck[k - 1] + c.at(i, n + k) - c.at(i + 1, n + k - 1);
    ck[n + 1] = ck[n] + c.at(i, n) - c.at(i + 1, 2 * n);
    for (int k = n + 2; k <= 2 * n - i; ++k) {
        int s = k - n - 1;
        ck[k] = ck[k - 1] + c.at(i, n - s) - c.at(i + 1, n - s + 1);
    }
    return ck;
}

void bump(TypeAMatrix& c, int i, int j, int delta) {
    c.at(i, j) += delta;
    if (c.at(i, j) < 0) throw std::logic_error("typeA_step: negative multiplicity");
}

} // namespace

int typeA_eps(const TypeAMatrix& c, int i) {
    int n = c.n;
    if (i < 1 || i > 2 * n - 1) throw std::invalid_argument("typeA_eps: index out of range");
    if (i == n) return c.at(n, n + 1);
    if (i > n) return typeA_eps(sigma(c), 2 * n - i);
    auto ck = c_profile(c, i);
    int best = 0;
    for (int k = 1; k <= 2 * n - i; ++k) best = std::max(best, ck[k]);
    return best;
}

int typeA_phi(const TypeAMatrix& c, int i) {
    auto w = typeA_weight(c);
    return typeA_eps(c, i) + w[i - 1] - w[i];
}

std::optional<TypeAMatrix> typeA_step(const TypeAMatrix& c, int i, Dir d) {
    int n = c.n;
    if (i < 1 || i > 2 * n - 1) throw std::invalid_argument("typeA_step: index out of range");
    if (i > n) {
        auto r = typeA_step(sigma(c), 2 * n - i, d);
        if (!r) return std::nullopt;
        return sigma(*r);
    }
    TypeAMatrix out = c;
    if (i == n) {
        if (d == Dir::E) {
            if (c.at(n, n + 1) == 0) return std::nullopt;
            bump(out, n, n + 1, -1);
        } else {
            bump(out, n, n + 1, +1);
        }
        return out;
    }
    auto ck = c_profile(c, i);
    int best = 0;
    for (int k = 1; k <= 2 * n - i; ++k) best = std::max(best, ck[k]);
    if (d == Dir::E) {
        if (best == 0) return std::nullopt;
        int k0 = 0;
        for (int k = 1; k <= 2 * n - i; ++k)
            if (ck[k] == best) {
                k0 = k;
                break;
            }
        if (k0 == 2 * n - i) {
            bump(out, i, i + 1, -1);
        } else if (k0 <= n) {
            bump(out, i, k0 + n, -1);
            bump(out, i + 1, k0 + n, +1);
        } else {
            bump(out, i, 2 * n - k0 + 1, -1);
            bump(out, i + 1, 2 * n - k0 + 1, +1);
        }
    } else {
        int k1 = 0;
        for (int k = 1; k <= 2 * n - i; ++k)
            if (ck[k] == best) k1 = k;
        if (k1 == 2 * n - i) {
            bump(out, i, i + 1, +1);
        } else if (k1 <= n) {
            bump(out, i, k1 + n, +1);
            bump(out, i + 1, k1 + n, -1);
        } else {
            bump(out, i, 2 * n - k1 + 1, +1);
            bump(out, i + 1, 2 * n - k1 + 1, -1);
        }
    }
    return out;
}

size_t FoldedDatum::pidx(int n, int i, int j) {
    if (i < 1 || i > j || j > n) throw std::out_of_range("FoldedDatum: bad plus index");
    // row i holds the n-i+1 entries (i,i),...,(i,n)
    return static_cast<size_t>(i - 1) * (n + 1) - static_cast<size_t>(i) * (i - 1) / 2 +
           static_cast<size_t>(j - i);
}

size_t FoldedDatum::midx(int n, int i, int j) {
    if (i < 1 || i >= j || j > n) throw std::out_of_range("FoldedDatum: bad minus index");
    // row i holds the n-i entries (i,i+1),...,(i,n)
    return static_cast<size_t>(i - 1) * n - static_cast<size_t>(i) * (i - 1) / 2 +
           static_cast<size_t>(j - i - 1);
}

std::string FoldedDatum::str() const {
    std::string s;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (plus(i, j))
                s += "d+(" + std::to_string(i) + "," + std::to_string(j) + ")=" +
                     std::to_string(plus(i, j)) + " ";
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (minus(i, j))
                s += "d-(" + std::to_string(i) + "," + std::to_string(j) + ")=" +
                     std::to_string(minus(i, j)) + " ";
    return s.empty() ? "0" : s;
}

TypeAMatrix chi(const FoldedDatum& d) {
    int n = d.n;
    int eps = epsilon_of(d.type);
    TypeAMatrix c(n);
    for (int i = 1; i <= n; ++i) c.at(i, 2 * n - i + 1) = eps * d.plus(i, i);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            c.at(i, 2 * n - j + 1) = d.plus(i, j);
            c.at(j, 2 * n - i + 1) = d.plus(i, j);
            c.at(i, j) = d.minus(i, j);
            c.at(2 * n - j + 1, 2 * n - i + 1) = d.minus(i, j);
        }
    }
    return c;
}

FoldedDatum chi_inv(LieType t, const TypeAMatrix& c) {
    int n = c.n;
    int eps = epsilon_of(t);
    if (!sigma_fixed(c)) throw std::invalid_argument("chi_inv: not sigma-fixed");
    FoldedDatum d(t, n);
    for (int i = 1; i <= n; ++i) {
        int v = c.at(i, 2 * n - i + 1);
        if (v % eps != 0) throw std::invalid_argument("chi_inv: antidiagonal not divisible");
        d.plus(i, i) = v / eps;
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            d.plus(i, j) = c.at(i, 2 * n - j + 1);
            d.minus(i, j) = c.at(i, j);
        }
    }
    return d;
}

HalfWeight folded_weight(const FoldedDatum& d) {
    HalfWeight w(d.n);
    int eps = epsilon_of(d.type);
    for (int i = 1; i <= d.n; ++i) {
        w.twice[i - 1] -= 2 * eps * d.plus(i, i);
        for (int j = i + 1; j <= d.n; ++j) {
            w.twice[i - 1] -= 2 * d.plus(i, j);
            w.twice[j - 1] -= 2 * d.plus(i, j);
            w.twice[i - 1] -= 2 * d.minus(i, j);
            w.twice[j - 1] += 2 * d.minus(i, j);
        }
    }
    return w;
}

CrystalStats folded_stats(const FoldedDatum& d) {
    CrystalStats s(d.n);
    s.wt = folded_weight(d);
    TypeAMatrix c = chi(d);
    int eps = epsilon_of(d.type);
    for (int i = 1; i <= d.n; ++i) {
        int e = typeA_eps(c, i);
        if (i == d.n) {
            if (e % eps != 0) throw std::logic_error("folded_stats: eps_n not divisible");
            e /= eps;
        }
        s.eps[i - 1] = e;
        s.phi[i - 1] = e + s.wt.pairing(d.type, i);
    }
    return s;
}

std::optional<FoldedDatum> folded_step(const FoldedDatum& d, int i, Dir dir) {
    if (i < 1 || i > d.n) throw std::invalid_argument("folded_step: index out of range");
    TypeAMatrix c = chi(d);
    std::optional<TypeAMatrix> cur = c;
    if (i == d.n) {
        for (int k = 0; k < epsilon_of(d.type) && cur; ++k) cur = typeA_step(*cur, d.n, dir);
    } else {
        cur = typeA_step(c, 2 * d.n - i, dir);
        if (cur) cur = typeA_step(*cur, i, dir);
    }
    if (!cur) return std::nullopt;
    return chi_inv(d.type, *cur); // throws if the folded image is left, which must not happen
}

DeltaRoute delta_route(const FoldedDatum& d, int i, Dir dir) {
    FoldedDatum dp = d, dm = d;
    std::fill(dp.dminus.begin(), dp.dminus.end(), 0);
    std::fill(dm.dplus.begin(), dm.dplus.end(), 0);
    CrystalStats sp = folded_stats(dp);
    CrystalStats sm = folded_stats(dm);
    MInt eps_m = i == d.n ? MInt::minus_inf() : sm.eps[i - 1];
    TensorPair t = tensor_stats(sp.eps[i - 1], sp.phi[i - 1], sp.wt.pairing(d.type, i), eps_m,
                                i == d.n ? MInt::minus_inf() : sm.phi[i - 1],
                                sm.wt.pairing(d.type, i));
    DeltaRoute route;
    route.plus_side = dir == Dir::E ? t.e_left : t.f_left;
    auto joint = folded_step(d, i, dir);
    if (!joint) {
        // nothing to compare; the move is undefined jointly
        route.consistent = true;
        return route;
    }
    bool plus_changed = joint->dplus != d.dplus;
    bool minus_changed = joint->dminus != d.dminus;
    route.consistent = (plus_changed != minus_changed) && (plus_changed == route.plus_side);
    return route;
}

FoldedDatum verma_to_lusztig(const VermaElement& v) {
    if (auto viol = verma_violation(v)) throw std::invalid_argument("verma_to_lusztig: " + *viol);
    int n = v.n;
    int eps = epsilon_of(v.type);
    FoldedDatum d(v.type, n);
    SymMatrix m = kappa_inv(v.v1.empty() ? SkewTableau{Alphabet{n, AlphabetKind::Neg}, true, {}}
                                         : v.v1);
    for (int i = 1; i <= n; ++i) {
        if (m.at(i, i) % eps != 0)
            throw std::invalid_argument("verma_to_lusztig: diagonal multiplicity not divisible");
        d.plus(i, i) = m.at(i, i) / eps;
        for (int j = i + 1; j <= n; ++j) d.plus(i, j) = m.at(i, j);
    }
    for (int j = 2; j <= n; ++j) {
        int row = n - j + 1; // 1-based from the top of V2
        if (row > static_cast<int>(v.v2.rows.size())) continue;
        for (int i = 1; i < j; ++i) {
            int cnt = 0;
            for (Letter x : v.v2.rows[row - 1])
                if (x == -i) ++cnt;
            d.minus(i, j) = cnt;
        }
    }
    return d;
}

} // namespace cryst
