#pragma once

#include "cryst/alphabet.hpp"
#include "cryst/minf.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cryst {

// Weight in the epsilon basis, stored as doubled integers so that type-B spin
// weights (half-integral coordinates) stay exact.
struct HalfWeight {
    std::vector<int> twice; // twice[i] = 2 * coefficient of epsilon_{i+1}

    HalfWeight() = default;
    explicit HalfWeight(int n) : twice(n, 0) {}

    int rank() const { return static_cast<int>(twice.size()); }

    static HalfWeight zero(int n) { return HalfWeight(n); }

    // omega_k = e_1 + ... + e_k (k < n); omega_n is (e_1+...+e_n)/2 in type B.
    static HalfWeight fundamental(LieType t, int n, int k) {
        HalfWeight w(n);
        int unit = (k == n && t == LieType::B) ? 1 : 2;
        for (int i = 0; i < k; ++i) w.twice[i] = unit;
        return w;
    }

    HalfWeight& operator+=(const HalfWeight& o) {
        if (o.rank() != rank()) throw std::invalid_argument("HalfWeight: rank mismatch");
        for (int i = 0; i < rank(); ++i) twice[i] += o.twice[i];
        return *this;
    }
    friend HalfWeight operator+(HalfWeight a, const HalfWeight& b) { return a += b; }
    HalfWeight& operator-=(const HalfWeight& o) {
        if (o.rank() != rank()) throw std::invalid_argument("HalfWeight: rank mismatch");
        for (int i = 0; i < rank(); ++i) twice[i] -= o.twice[i];
        return *this;
    }
    friend HalfWeight operator-(HalfWeight a, const HalfWeight& b) { return a -= b; }
    friend bool operator==(const HalfWeight& a, const HalfWeight& b) { return a.twice == b.twice; }

    void add_epsilon(int i, int count2) { twice.at(i - 1) += count2; }

    // <wt, h_i>, always an integer for weights in the lattice.
    int pairing(LieType t, int i) const {
        int n = rank();
        long num;
        if (i < n) {
            num = twice[i - 1] - twice[i];
            if (num % 2 != 0) throw std::logic_error("HalfWeight: non-integral pairing");
            return static_cast<int>(num / 2);
        }
        if (i != n) throw std::invalid_argument("HalfWeight: index out of range");
        if (t == LieType::C) {
            num = twice[n - 1];
            if (num % 2 != 0) throw std::logic_error("HalfWeight: non-integral pairing");
            return static_cast<int>(num / 2);
        }
        return twice[n - 1]; // type B: <e_n, h_n> = 2
    }

    // Simple root alpha_i (doubled): i<n gives e_i - e_{i+1}; alpha_n is
    // 2e_n in type C and e_n in type B.
    static HalfWeight alpha(LieType t, int n, int i) {
        HalfWeight w(n);
        if (i < n) {
            w.twice[i - 1] = 2;
            w.twice[i] = -2;
        } else if (i == n) {
            w.twice[n - 1] = (t == LieType::C) ? 4 : 2;
        } else {
            throw std::invalid_argument("alpha: index out of range");
        }
        return w;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < rank(); ++i) {
            if (i) s += ',';
            int v = twice[i];
            if (v % 2 == 0) {
                s += std::to_string(v / 2);
            } else {
                s += std::to_string(v) + "/2";
            }
        }
        return s + ")";
    }
};

// Weight of a letter in a KN-style alphabet: wt(k)=e_k, wt(k-bar)=-e_k, wt(0)=0.
inline void add_letter_weight(HalfWeight& w, Letter x) {
    if (x > 0) w.add_epsilon(x, 2);
    else if (x < 0) w.add_epsilon(-x, -2);
}

// Full crystal data of one element: weight plus string lengths in each direction.
struct CrystalStats {
    HalfWeight wt;
    std::vector<MInt> eps, phi; // indexed by i-1 for i in 1..n

    CrystalStats() = default;
    CrystalStats(int n) : wt(n), eps(n, MInt(0)), phi(n, MInt(0)) {}

    int rank() const { return wt.rank(); }

    // Crystal axiom: phi_i = <wt,h_i> + eps_i whenever eps_i is finite.
    bool axiom_holds(LieType t) const {
        for (int i = 1; i <= rank(); ++i) {
            const MInt& e = eps[i - 1];
            const MInt& p = phi[i - 1];
            if (e.is_minus_inf() != p.is_minus_inf()) return false;
            if (!e.is_minus_inf() && p.value() != e.value() + wt.pairing(t, i)) return false;
        }
        return true;
    }
};

} // namespace cryst
