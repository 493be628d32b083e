#pragma once

#include "cryst/rsk.hpp"
#include "cryst/verma.hpp"
#include "cryst/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cryst {

// Multiplicity array over the positive roots e_i - e_j (1 <= i < j <= 2n) of
// the ambient type-A system.
struct TypeAMatrix {
    int n = 0; // rank parameter: ambient indices run over 1..2n
    std::vector<int> c; // indexed by pairs i<j

    explicit TypeAMatrix(int n_ = 0) : n(n_), c(static_cast<size_t>(n_) * (2 * n_ - 1), 0) {}
    int dim() const { return 2 * n; }
    static size_t idx(int n, int i, int j);
    int& at(int i, int j) { return c[idx(n, i, j)]; }
    int at(int i, int j) const { return c[idx(n, i, j)]; }
    bool operator==(const TypeAMatrix&) const = default;
    std::string str() const;
};

TypeAMatrix sigma(const TypeAMatrix& c); // c_ij -> c_{2n-j+1, 2n-i+1}
bool sigma_fixed(const TypeAMatrix& c);

// Weight, string data and operators of the ambient crystal in the orientation
// with the single middle sink; indices i run over 1..2n-1.
std::vector<int> typeA_weight(const TypeAMatrix& c); // coefficients of upepsilon
int typeA_eps(const TypeAMatrix& c, int i);
int typeA_phi(const TypeAMatrix& c, int i);
std::optional<TypeAMatrix> typeA_step(const TypeAMatrix& c, int i, Dir d);

// Folded datum: d+ over roots e_i + e_j (diagonal read as the long/short root
// epsilon * e_i) and d- over e_i - e_j, i,j <= n.
struct FoldedDatum {
    LieType type = LieType::C;
    int n = 0;
    std::vector<int> dplus;  // pairs i <= j
    std::vector<int> dminus; // pairs i < j

    FoldedDatum() = default;
    FoldedDatum(LieType t, int n_)
        : type(t), n(n_), dplus(static_cast<size_t>(n_) * (n_ + 1) / 2, 0),
          dminus(static_cast<size_t>(n_) * (n_ - 1) / 2, 0) {}
    static size_t pidx(int n, int i, int j); // i <= j
    static size_t midx(int n, int i, int j); // i < j
    int& plus(int i, int j) { return dplus[pidx(n, i, j)]; }
    int plus(int i, int j) const { return dplus[pidx(n, i, j)]; }
    int& minus(int i, int j) { return dminus[midx(n, i, j)]; }
    int minus(int i, int j) const { return dminus[midx(n, i, j)]; }
    bool operator==(const FoldedDatum&) const = default;
    std::string str() const;
};

inline int epsilon_of(LieType t) { return t == LieType::C ? 2 : 1; }

// Unfolding into the sigma-fixed, parity-constrained ambient data and back.
TypeAMatrix chi(const FoldedDatum& d);
FoldedDatum chi_inv(LieType t, const TypeAMatrix& c);

HalfWeight folded_weight(const FoldedDatum& d);
CrystalStats folded_stats(const FoldedDatum& d);
std::optional<FoldedDatum> folded_step(const FoldedDatum& d, int i, Dir d2);

// Tensor split d -> d+ (x) d-: which side an operator acts on, with the
// composite checked against the joint action.
struct DeltaRoute {
    bool plus_side = true;
    bool consistent = true; // routed action equals the joint action
};
DeltaRoute delta_route(const FoldedDatum& d, int i, Dir dir);

// Into the Lusztig datum: d+ from the symmetric-matrix preimage of V1 (only
// diagonal entries divided by epsilon), d- from the row counts of V2.
FoldedDatum verma_to_lusztig(const VermaElement& v);

} // namespace cryst
