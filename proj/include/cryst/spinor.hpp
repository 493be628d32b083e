#pragma once

#include "cryst/kn.hpp"
#include "cryst/twocol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cryst {

// Element of the spinor model: two-column tableaux over the barred alphabet,
// one per column of the underlying shape, listed leftmost first, plus an
// extra bare column for type-B spin shapes (the rightmost tensor factor).
// The tuple entry for shape column i has tail height a_i = n - mu'_i.
struct SpinorTuple {
    LieType type = LieType::C;
    int n = 0;
    Shape shape;
    std::vector<TwoColumn> cols; // index 0 = leftmost (largest tail)
    std::vector<Letter> spin;    // present iff shape.spin

    int blocks() const { return static_cast<int>(cols.size()); }
    bool operator==(const SpinorTuple&) const = default;
    std::string str() const;
};

// Tail heights a_ell >= ... >= a_1 determined by the shape.
std::vector<int> tail_heights(int n, const Shape& shape);

// Highest elements: H_a has an empty body and tail n-a+1-bar,...,n-bar read
// top to bottom; the spin factor of a highest tuple is the empty column.
TwoColumn two_col_highest(int n, int a);
SpinorTuple spinor_highest(LieType t, int n, const Shape& shape);

// Membership of a single factor: type C demands b = 0, type B slide rank 0.
std::optional<std::string> block_violation(LieType t, int n, const TwoColumn& c);

// The coupling between adjacent factors: the height bound plus the two
// interleaving inequalities, indexed from the common body/tail line.  A bare
// spin column couples as a right factor with tail height zero.
bool admissible(LieType t, int n, const TwoColumn& left, const TwoColumn& right,
                std::string* why = nullptr);
bool admissible_spin(LieType t, int n, const TwoColumn& left, const std::vector<Letter>& spin,
                     std::string* why = nullptr);

std::optional<std::string> spinor_violation(const SpinorTuple& s);
inline bool spinor_validate(const SpinorTuple& s) { return !spinor_violation(s); }

// Crystal data of a single factor.
HalfWeight block_weight(LieType t, int n, const TwoColumn& c);
FactorStat block_stat(LieType t, int n, const TwoColumn& c, int i);
std::optional<TwoColumn> block_step(LieType t, int n, const TwoColumn& c, int i, Dir d);

HalfWeight spinor_weight(const SpinorTuple& s);
CrystalStats spinor_stats(const SpinorTuple& s);
std::optional<SpinorTuple> spinor_step(const SpinorTuple& s, int i, Dir d);

// Column-wise correspondence with KN tableaux.
TwoColumn kn_column_to_block(LieType t, int n, const std::vector<Letter>& col);
std::vector<Letter> block_to_kn_column(LieType t, int n, const TwoColumn& c);
std::vector<Letter> kn_spin_to_block(int n, const std::vector<Letter>& spin_col);
std::vector<Letter> block_to_kn_spin(int n, const std::vector<Letter>& spin);

SpinorTuple kn_to_spinor(const KnTableau& t);
KnTableau spinor_to_kn(const SpinorTuple& s);

} // namespace cryst
