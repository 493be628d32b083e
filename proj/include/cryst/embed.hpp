#pragma once

#include "cryst/lusztig.hpp"
#include "cryst/spinor.hpp"
#include "cryst/verma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cryst {

// Tuple of bare columns over the barred alphabet; component 1 is rightmost.
struct ColumnTuple {
    int n = 0;
    std::vector<std::vector<Letter>> comps; // comps[k] = component k+1

    int size() const { return static_cast<int>(comps.size()); }
    bool operator==(const ColumnTuple&) const = default;
    std::string str() const;
};

// Box moves between adjacent components: lower(i) sends one box from
// component i to component i+1, raise(i) the other way; 1 <= i <= size-1.
std::optional<ColumnTuple> tuple_raise(const ColumnTuple& t, int i);
std::optional<ColumnTuple> tuple_lower(const ColumnTuple& t, int i);

// Spreading a spinor tuple into bare columns and pulling all tails out.
ColumnTuple tuple_of(const SpinorTuple& s);
struct Separated {
    ColumnTuple cols;
    LieType type;
    int n;
    Shape shape;
    std::vector<int> body_heights; // per component, cells above the split line
};
Separated separate(const SpinorTuple& s);

// Assembled as one anchored tableau, the separated tuple must be semistandard.
std::optional<std::string> separated_violation(const Separated& s);

// Split at the line: the tails form a straight tableau of shape nu, the
// bodies a rotated one.
struct TailBody {
    SkewTableau tail; // straight, shape nu
    SkewTableau body; // rotated
};
TailBody tail_body(const SpinorTuple& s);

// Into the parabolic Verma crystal, with the number of omega_n units the
// tuple carries: ell for type C, 2*ell (+1 with a spin factor) for type B.
int omega_n_units(const SpinorTuple& s);
struct VermaShifted {
    VermaElement elem;
    int r;
};
VermaShifted spinor_to_verma(const SpinorTuple& s);

// Full composite from a KN tableau to a Lusztig datum shifted by omega_lambda.
struct LusztigShifted {
    FoldedDatum datum;
    HalfWeight shift; // omega_lambda
};
LusztigShifted kn_to_lusztig(const KnTableau& t);

} // namespace cryst
