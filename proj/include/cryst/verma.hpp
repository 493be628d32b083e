#pragma once

#include "cryst/kn.hpp"
#include "cryst/skew.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cryst {

// Pair (V2, V1): V2 a straight tableau of shape nu over the barred alphabet
// (phi_n treated as -infinity), V1 a rotated tableau whose column count is
// even in type C; the pair is read as the tensor V1 (x) V2.
struct VermaElement {
    LieType type = LieType::C;
    int n = 0;
    Shape shape; // of the ambient model; fixes nu
    SkewTableau v2;
    SkewTableau v1;

    bool operator==(const VermaElement&) const = default;
    std::string str() const;
};

std::vector<int> nu_of(int n, const Shape& shape); // (a_ell,...,a_1) conjugated

std::optional<std::string> verma_violation(const VermaElement& v);
inline bool verma_validate(const VermaElement& v) { return !verma_violation(v); }

VermaElement verma_highest(LieType t, int n, const Shape& shape); // (H_nu, empty)

// Action on the V1 half alone (the free part of the crystal).
std::optional<std::string> v1_violation(LieType t, int n, const SkewTableau& v1);
CrystalStats v1_stats(LieType t, int n, const SkewTableau& v1);
std::optional<SkewTableau> v1_step(LieType t, int n, const SkewTableau& v1, int i, Dir d,
                                   int extra_pads = 1);

HalfWeight verma_weight(const VermaElement& v);
CrystalStats verma_stats(const VermaElement& v);
std::optional<VermaElement> verma_step(const VermaElement& v, int i, Dir d, int extra_pads = 1);

} // namespace cryst
