#pragma once

#include "cryst/alphabet.hpp"
#include "cryst/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cryst {

// Two-column skew tableau of shape (2^{b+c},1^a)/(1^b): the right column
// occupies global rows 1..b+c, the left column rows b+1..a+b+c, and the
// bottom a cells of the left column form the tail.  Entries top to bottom.
struct TwoColumn {
    int a = 0, b = 0, c = 0;
    std::vector<Letter> left, right;

    int rows() const { return a + b + c; }
    bool empty() const { return left.empty() && right.empty(); }

    // entry at 1-based global row, nullopt off-shape
    std::optional<Letter> left_at_row(int g) const {
        if (g <= b || g > rows()) return std::nullopt;
        return left[g - b - 1];
    }
    std::optional<Letter> right_at_row(int g) const {
        if (g < 1 || g > b + c) return std::nullopt;
        return right[g - 1];
    }

    std::vector<Letter> tail() const {
        return {left.begin() + c, left.end()};
    }

    bool operator==(const TwoColumn&) const = default;
    std::string str() const;
};

// Shape-consistency plus semistandardness over the given alphabet.
std::optional<std::string> two_col_violation(const Alphabet& a, const TwoColumn& t);

// Largest k such that sliding the right column down k rows stays semistandard.
int max_right_slide(const Alphabet& a, const TwoColumn& t);

// One jeu-de-taquin box transfer on a tableau with slide rank zero:
// raise moves a tail box into the right column (shape a-1,b+1,c), lower the
// other way (a+1,b-1,c).  nullopt at the string ends.
std::optional<TwoColumn> two_col_raise(const Alphabet& a, const TwoColumn& t);
std::optional<TwoColumn> two_col_lower(const Alphabet& a, const TwoColumn& t);

// The unique slide-rank-zero placement of a pair of columns, and the induced
// box moves on plain column pairs.
TwoColumn normalize_pair(const Alphabet& a, const std::vector<Letter>& left,
                         const std::vector<Letter>& right);
std::optional<std::pair<std::vector<Letter>, std::vector<Letter>>>
pair_raise(const Alphabet& a, const std::vector<Letter>& left, const std::vector<Letter>& right);
std::optional<std::pair<std::vector<Letter>, std::vector<Letter>>>
pair_lower(const Alphabet& a, const std::vector<Letter>& left, const std::vector<Letter>& right);

// Raising the tail away completely splits the tableau into two plain columns;
// the second routine does it by direct box sliding instead of repeated raises.
// Both return (inner column, outer column); they must agree.
std::pair<std::vector<Letter>, std::vector<Letter>> fully_raised(const Alphabet& a, const TwoColumn& t);
std::pair<std::vector<Letter>, std::vector<Letter>> fully_raised_by_sliding(const Alphabet& a, const TwoColumn& t);

} // namespace cryst
