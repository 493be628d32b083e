#include "cryst/weyl.hpp"

#include <numeric>
#include <stdexcept>

namespace cryst {

namespace {

struct Frac {
    __int128 num = 1, den = 1;
    void mul(long long a, long long b) {
        num *= a;
        den *= b;
        __int128 g = std::gcd(static_cast<long long>(num < 0 ? -num : num),
                              static_cast<long long>(den < 0 ? -den : den));
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

} // namespace

std::int64_t weyl_dim(LieType t, int n, const Shape& shape) {
    if (auto v = shape_violation(t, n, shape)) throw std::invalid_argument("weyl_dim: " + *v);
    // doubled coordinates of lambda + rho; rho_i = n-i+1 (C) or n-i+1/2 (B)
    std::vector<long long> l2(n), r2(n);
    HalfWeight lam = shape_weight(t, n, shape);
    for (int i = 0; i < n; ++i) {
        r2[i] = (t == LieType::C) ? 2 * (n - i) : 2 * (n - i) - 1;
        l2[i] = lam.twice[i] + r2[i];
    }
    Frac f;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            f.mul(l2[i] - l2[j], r2[i] - r2[j]); // root e_i - e_j
            f.mul(l2[i] + l2[j], r2[i] + r2[j]); // root e_i + e_j
        }
        // short/long root in the last coordinate: e_i (B) or 2e_i (C);
        // doubled pairings are proportional, the ratio cancels
        f.mul(l2[i], r2[i]);
    }
    if (f.den == 0 || f.num % f.den != 0) throw std::logic_error("weyl_dim: non-integral product");
    __int128 d = f.num / f.den;
    if (d <= 0 || d > INT64_MAX) throw std::logic_error("weyl_dim: out of range");
    return static_cast<std::int64_t>(d);
}

} // namespace cryst
