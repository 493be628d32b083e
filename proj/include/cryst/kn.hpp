#pragma once

#include "cryst/signature.hpp"
#include "cryst/skew.hpp"
#include "cryst/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cryst {

// Dominant shape, possibly with the half-box column of type B attached:
// lambda = mu (+ (1/2,...,1/2) when spin is set).
struct Shape {
    std::vector<int> mu; // integral part, weakly decreasing, at most n parts
    bool spin = false;

    int columns() const { return mu.empty() ? 0 : mu.front(); }
    std::vector<int> conjugate() const;
    bool operator==(const Shape&) const = default;
    std::string str() const;
};

std::optional<std::string> shape_violation(LieType t, int n, const Shape& s);
HalfWeight shape_weight(LieType t, int n, const Shape& s); // omega_lambda

// Kashiwara-Nakashima tableau.  Body columns are listed from the right,
// entries top to bottom, bottom-aligned; the type-B spin column (height n)
// sits to the right of all body columns.
struct KnTableau {
    LieType type = LieType::C;
    int n = 0;
    Shape shape;
    std::vector<std::vector<Letter>> cols;
    std::vector<Letter> spin_col;

    bool operator==(const KnTableau&) const = default;
    std::string str() const;
};

// One-column condition, two-column conditions (both types), the type-B
// zero-letter conditions, and the spin-column rules; reports the first
// violated clause with its witnesses.
std::optional<std::string> kn_violation(const KnTableau& t);
inline bool kn_validate(const KnTableau& t) { return !kn_violation(t); }

KnTableau kn_highest(LieType type, int n, const Shape& shape);

std::vector<Letter> kn_word(const KnTableau& t); // body reading word
HalfWeight kn_weight(const KnTableau& t);
CrystalStats kn_stats(const KnTableau& t);
std::optional<KnTableau> kn_step(const KnTableau& t, int i, Dir d);

// Spin column helpers (type B half-box column of height n).
std::optional<std::string> spin_col_violation(int n, const std::vector<Letter>& col);
HalfWeight spin_col_weight(int n, const std::vector<Letter>& col);
FactorStat spin_col_stat(int n, const std::vector<Letter>& col, int i);
std::optional<std::vector<Letter>> spin_col_step(int n, const std::vector<Letter>& col, int i, Dir d);

} // namespace cryst
