#include "doctest.h"

#include "cryst/skew.hpp"

#include <random>

using namespace cryst;

namespace {
const Alphabet neg5{5, AlphabetKind::Neg};
const Alphabet pos8{8, AlphabetKind::Pos};
} // namespace

TEST_CASE("reading word order") {
    // single column reads top to bottom
    Alphabet jx{5, AlphabetKind::NoZero};
    auto t = rotated_from_columns(jx, {{1, 5, -5, -2}});
    CHECK(reading_word(t) == std::vector<Letter>{1, 5, -5, -2});

    // empty tableau
    CHECK(reading_word(SkewTableau{}).empty());

    // the 4-column rank-5 tableau with 13 cells
    auto big = rotated_from_columns(jx, {{4, -4, -2, -1}, {1, 5, -5, -2}, {3, -5, -2}, {5, -3}});
    CHECK(reading_word(big) ==
          std::vector<Letter>{4, 1, -4, 5, 3, -2, -5, -5, 5, -1, -2, -2, -3});
}

TEST_CASE("semistandard validation rejects single swaps") {
    auto t = make_straight(pos8, {{1, 2, 4}, {3, 5}});
    REQUIRE(is_semistandard(t));
    // swapping any two unequal adjacent entries must break it
    struct Cell {
        int r, c;
    };
    std::vector<std::pair<Cell, Cell>> adj = {{{0, 0}, {0, 1}}, {{0, 1}, {0, 2}},
                                              {{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}};
    for (auto& [x, y] : adj) {
        auto bad = t;
        std::swap(bad.rows[x.r][x.c], bad.rows[y.r][y.c]);
        CAPTURE(x.r);
        CAPTURE(x.c);
        CHECK(!is_semistandard(bad));
    }
}

TEST_CASE("jdt_rectify leaves straight shapes alone") {
    auto t = make_straight(pos8, {{1, 1, 3}, {2, 4}});
    CHECK(jdt_rectify(t) == t);
}

TEST_CASE("jdt_rectify agrees with column insertion of the reading word") {
    // the two-column shape (2,1,3) tableau: left 2,4,5,6,7 / right 1,4,6,8
    SkewGrid g;
    g.alphabet = pos8;
    g.cells = {
        {std::nullopt, Letter(1)}, {Letter(2), Letter(4)}, {Letter(4), Letter(6)},
        {Letter(5), Letter(8)},    {Letter(6), std::nullopt}, {Letter(7), std::nullopt}};
    std::vector<Letter> word{1, 4, 2, 6, 4, 8, 5, 6, 7};
    auto rect = jdt_rectify(g);
    auto oracle = column_insert_word(pos8, word);
    CHECK(rect == oracle);
}

TEST_CASE("jdt_rectify matches the insertion oracle on random skew tableaux") {
    std::mt19937_64 rng(987654);
    for (int trial = 0; trial < 400; ++trial) {
        // random skew shape with <= 12 cells inside a 4x6 box
        int h = 1 + static_cast<int>(rng() % 4);
        std::vector<int> outer(h), inner(h);
        int prev = 6;
        for (int r = 0; r < h; ++r) {
            outer[r] = 1 + static_cast<int>(rng() % prev);
            prev = outer[r];
        }
        int prev_in = outer[0];
        for (int r = 0; r < h; ++r) {
            inner[r] = static_cast<int>(rng() % (std::min(prev_in, outer[r]) + 1));
            prev_in = inner[r];
        }
        for (int r = h - 1; r > 0; --r) inner[r - 1] = std::max(inner[r - 1], inner[r]);
        // fill columns strictly, rows weakly over 1..8
        SkewGrid g;
        g.alphabet = pos8;
        g.cells.assign(h, std::vector<std::optional<Letter>>(outer[0]));
        bool ok = true;
        for (int r = 0; r < h && ok; ++r) {
            for (int c = inner[r]; c < outer[r] && ok; ++c) {
                int lo = 1;
                if (r > 0 && g.occupied(r - 1, c)) lo = std::max(lo, g.at(r - 1, c) + 1);
                if (c > inner[r] && g.occupied(r, c - 1)) lo = std::max(lo, (int)g.at(r, c - 1));
                int hi = 8;
                if (lo > hi) {
                    ok = false;
                    break;
                }
                g.cells[r][c] = lo + static_cast<int>(rng() % (hi - lo + 1));
            }
        }
        if (!ok) continue;
        // reading word straight off the grid: rows top to bottom, right to left
        std::vector<Letter> word;
        for (auto& row : g.cells)
            for (auto it = row.rbegin(); it != row.rend(); ++it)
                if (*it) word.push_back(**it);
        auto rect = jdt_rectify(g);
        CHECK(is_semistandard(rect));
        CHECK(rect == column_insert_word(pos8, word));
        // confluence: resolution order does not matter
        CHECK(jdt_rectify_seeded(g, rng()) == rect);
    }
}

TEST_CASE("rotated columns round trip") {
    auto t = rotated_from_columns(neg5, {{-5, -3, -1}, {-4, -2}, {-2}});
    CHECK(t.rotated);
    CHECK(t.shape() == std::vector<int>{3, 2, 1});
    CHECK(t.column(1) == std::vector<Letter>{-5, -3, -1});
    CHECK(t.column(2) == std::vector<Letter>{-4, -2});
    CHECK(t.column(3) == std::vector<Letter>{-2});
    CHECK(is_semistandard(t));
}
