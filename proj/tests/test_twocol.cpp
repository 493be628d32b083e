#include "doctest.h"

#include "cryst/skew.hpp"
#include "cryst/twocol.hpp"

#include <functional>
#include <random>

using namespace cryst;

namespace {
const Alphabet pos8{8, AlphabetKind::Pos};
const Alphabet neg9{9, AlphabetKind::Neg};
const Alphabet neg3{3, AlphabetKind::Neg};

TwoColumn make(int a, int b, int c, std::vector<Letter> l, std::vector<Letter> r) {
    TwoColumn t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.left = std::move(l);
    t.right = std::move(r);
    return t;
}

// every semistandard filling of shape (a,b,c) over 1..n of the Neg alphabet
void enumerate_fillings(const Alphabet& al, int a, int b, int c,
                        const std::function<void(const TwoColumn&)>& fn) {
    int n = al.n;
    if (a + c > n || b + c > n) return; // strict columns cannot exist
    std::vector<Letter> letters;
    for (int k = n; k >= 1; --k) letters.push_back(-k);
    TwoColumn t = make(a, b, c, std::vector<Letter>(a + c, 0), std::vector<Letter>(b + c, 0));
    std::function<void(int)> rec_right = [&](int k) {
        if (k == b + c) {
            std::function<void(int)> rec_left = [&](int j) {
                if (j == a + c) {
                    if (!two_col_violation(al, t)) fn(t);
                    return;
                }
                for (Letter x : letters) {
                    if (j > 0 && !al.less(t.left[j - 1], x)) continue;
                    t.left[j] = x;
                    rec_left(j + 1);
                }
            };
            rec_left(0);
            return;
        }
        for (Letter x : letters) {
            if (k > 0 && !al.less(t.right[k - 1], x)) continue;
            t.right[k] = x;
            rec_right(k + 1);
        }
    };
    rec_right(0);
}

} // namespace

TEST_CASE("max_right_slide basics") {
    // a=0 or b=0 forces 0
    CHECK(max_right_slide(pos8, make(0, 2, 1, {5}, {1, 2, 4})) == 0);
    CHECK(max_right_slide(pos8, make(2, 0, 1, {1, 3, 4}, {2})) == 0);

    // the (2,1,3) example is already in normal position
    auto t = make(2, 1, 3, {2, 4, 5, 6, 7}, {1, 4, 6, 8});
    REQUIRE(!two_col_violation(pos8, t));
    CHECK(max_right_slide(pos8, t) == 0);

    // equal single letters can slide once
    Alphabet neg2{2, AlphabetKind::Neg};
    CHECK(max_right_slide(neg2, make(1, 1, 0, {-2}, {-2})) == 1);
}

TEST_CASE("lowering chain through shape (0,3,3)") {
    auto t0 = make(0, 3, 3, {4, 6, 7}, {1, 2, 4, 5, 6, 8});
    REQUIRE(!two_col_violation(pos8, t0));
    auto t1 = two_col_lower(pos8, t0);
    REQUIRE(t1);
    CHECK(*t1 == make(1, 2, 3, {4, 5, 6, 7}, {1, 2, 4, 6, 8}));
    auto t2 = two_col_lower(pos8, *t1);
    REQUIRE(t2);
    CHECK(*t2 == make(2, 1, 3, {2, 4, 5, 6, 7}, {1, 4, 6, 8}));
    auto t3 = two_col_lower(pos8, *t2);
    REQUIRE(t3);
    CHECK(*t3 == make(3, 0, 3, {1, 2, 4, 5, 6, 7}, {4, 6, 8}));
    CHECK(!two_col_lower(pos8, *t3)); // b = 0
    // raises walk back
    CHECK(*two_col_raise(pos8, *t3) == *t2);
    CHECK(*two_col_raise(pos8, *t2) == *t1);
    CHECK(*two_col_raise(pos8, *t1) == t0);
    CHECK(!two_col_raise(pos8, t0)); // a = 0
}

TEST_CASE("raising chain of the rank-9 example and the sliding algorithm") {
    auto t = make(3, 1, 2, {-8, -6, -4, -2, -1}, {-9, -7, -2});
    REQUIRE(!two_col_violation(neg9, t));
    auto e1 = two_col_raise(neg9, t);
    REQUIRE(e1);
    CHECK(*e1 == make(2, 2, 2, {-8, -4, -2, -1}, {-9, -7, -6, -2}));
    auto e2 = two_col_raise(neg9, *e1);
    REQUIRE(e2);
    CHECK(*e2 == make(1, 3, 2, {-8, -2, -1}, {-9, -7, -6, -4, -2}));
    auto e3 = two_col_raise(neg9, *e2);
    REQUIRE(e3);
    CHECK(*e3 == make(0, 4, 2, {-8, -2}, {-9, -7, -6, -4, -2, -1}));

    auto lr = fully_raised(neg9, t);
    CHECK(lr.first == std::vector<Letter>{-8, -2});
    CHECK(lr.second == std::vector<Letter>{-9, -7, -6, -4, -2, -1});
    CHECK(fully_raised_by_sliding(neg9, t) == lr);
}

TEST_CASE("all frames of a box-transfer string rectify alike") {
    auto grid_of = [](const TwoColumn& t) {
        SkewGrid g;
        g.alphabet = pos8;
        g.cells.assign(t.rows(), std::vector<std::optional<Letter>>(2));
        for (int r = 1; r <= t.rows(); ++r) {
            if (auto x = t.left_at_row(r)) g.cells[r - 1][0] = *x;
            if (auto x = t.right_at_row(r)) g.cells[r - 1][1] = *x;
        }
        return g;
    };
    TwoColumn cur = make(0, 3, 3, {4, 6, 7}, {1, 2, 4, 5, 6, 8});
    auto rect = jdt_rectify(grid_of(cur));
    for (int k = 0; k < 3; ++k) {
        cur = *two_col_lower(pos8, cur);
        CHECK(jdt_rectify(grid_of(cur)) == rect);
    }
}

TEST_CASE("fully_raised with empty tail is the identity") {
    auto t = make(0, 1, 2, {-3, -1}, {-3, -2, -1});
    REQUIRE(!two_col_violation(neg3, t));
    auto lr = fully_raised(neg3, t);
    CHECK(lr.first == t.left);
    CHECK(lr.second == t.right);
    CHECK(fully_raised_by_sliding(neg3, t) == lr);
}

TEST_CASE("pair moves split columns when the left one is empty") {
    auto moved = pair_lower(neg9, {}, {-5, -3, -2});
    REQUIRE(moved);
    CHECK(moved->first == std::vector<Letter>{-2});
    CHECK(moved->second == std::vector<Letter>{-5, -3});
    // raising undoes it
    auto back = pair_raise(neg9, moved->first, moved->second);
    REQUIRE(back);
    CHECK(back->first.empty());
    CHECK(back->second == std::vector<Letter>{-5, -3, -2});
}

TEST_CASE("sl2 strings: raise and lower invert, string length is a+b+1") {
    int checked = 0;
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; a + b <= 6; ++b) {
            for (int c = 0; a + b + c <= 6; ++c) {
                enumerate_fillings(neg3, a, b, c, [&](const TwoColumn& t) {
                    if (max_right_slide(neg3, t) != 0) return;
                    ++checked;
                    // raises: exactly a of them
                    TwoColumn cur = t;
                    for (int k = 0; k < a; ++k) {
                        auto up = two_col_raise(neg3, cur);
                        REQUIRE(up);
                        auto down = two_col_lower(neg3, *up);
                        REQUIRE(down);
                        CHECK(*down == cur);
                        cur = *up;
                    }
                    CHECK(!two_col_raise(neg3, cur));
                    // lowers: exactly b
                    cur = t;
                    for (int k = 0; k < b; ++k) {
                        auto down = two_col_lower(neg3, cur);
                        REQUIRE(down);
                        auto up = two_col_raise(neg3, *down);
                        REQUIRE(up);
                        CHECK(*up == cur);
                        cur = *down;
                    }
                    CHECK(!two_col_lower(neg3, cur));
                    // both routes to the split agree
                    CHECK(fully_raised(neg3, t) == fully_raised_by_sliding(neg3, t));
                });
            }
        }
    }
    CHECK(checked >= 50);
}
