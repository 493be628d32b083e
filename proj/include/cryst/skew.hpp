#pragma once

#include "cryst/alphabet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cryst {

// Semistandard filling of a straight shape or its 180-degree rotation.
// Rows are stored top to bottom.  Straight shapes are left-justified, rotated
// shapes right-justified (and bottom-justified: the widest row is the last).
// shape() always reports the underlying partition.
struct SkewTableau {
    Alphabet alphabet;
    bool rotated = false;
    std::vector<std::vector<Letter>> rows;

    bool empty() const { return rows.empty(); }
    int height() const { return static_cast<int>(rows.size()); }
    int cell_count() const {
        int c = 0;
        for (auto& r : rows) c += static_cast<int>(r.size());
        return c;
    }

    // Underlying partition: row lengths sorted the straight way.
    std::vector<int> shape() const;

    // Column j (1-based from the right for rotated shapes, from the left for
    // straight ones), entries top to bottom.
    std::vector<Letter> column(int j) const;
    int column_count() const;

    bool operator==(const SkewTableau&) const = default;
    std::string str() const;
};

SkewTableau make_straight(Alphabet a, std::vector<std::vector<Letter>> rows);
SkewTableau make_rotated(Alphabet a, std::vector<std::vector<Letter>> rows);
// Assemble a rotated tableau from bottom-aligned columns listed right to left.
SkewTableau rotated_from_columns(Alphabet a, const std::vector<std::vector<Letter>>& cols_from_right);

// Validation: weakly increasing rows and columns, even letters strict down
// columns, the odd letter strict along rows; plus shape sanity.  Returns an
// explanation for the first failure.
std::optional<std::string> sst_violation(const SkewTableau& t);
inline bool is_semistandard(const SkewTableau& t) { return !sst_violation(t); }

// Row word: rows top to bottom, right to left within each row.
std::vector<Letter> reading_word(const SkewTableau& t);

// Cell-level grid used for jeu de taquin on arbitrary skew anchors.
// Cells live at (row, col) with row increasing downward.
struct SkewGrid {
    Alphabet alphabet;
    std::vector<std::vector<std::optional<Letter>>> cells;

    bool occupied(int r, int c) const {
        return r >= 0 && c >= 0 && r < static_cast<int>(cells.size()) &&
               c < static_cast<int>(cells[r].size()) && cells[r][c].has_value();
    }
    Letter at(int r, int c) const { return *cells[r][c]; }
};

SkewGrid to_grid(const SkewTableau& t);

// Schuetzenberger rectification: inward slides until the shape is straight.
// Defined for all-even alphabets; the result is the unique straight-shape
// tableau Knuth-equivalent to the input.
SkewTableau jdt_rectify(const SkewTableau& t);
SkewTableau jdt_rectify(const SkewGrid& g);
// Same, resolving inner corners in a caller-supplied order (property tests).
SkewTableau jdt_rectify_seeded(const SkewGrid& g, unsigned long long seed);

// Column insertion of a word into the empty straight tableau; the classical
// oracle for rectification.
SkewTableau column_insert_word(Alphabet a, const std::vector<Letter>& w);

} // namespace cryst
