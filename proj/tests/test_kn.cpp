#include "doctest.h"

#include "cryst/io.hpp"
#include "cryst/kn.hpp"
#include "cryst/weyl.hpp"

using namespace cryst;

namespace {

KnTableau c5_tableau() {
    KnTableau t;
    t.type = LieType::C;
    t.n = 5;
    t.shape.mu = {4, 4, 3, 2};
    t.cols = {{4, -4, -2, -1}, {1, 5, -5, -2}, {3, -5, -2}, {5, -3}};
    return t;
}

KnTableau b5_tableau() {
    KnTableau t;
    t.type = LieType::B;
    t.n = 5;
    t.shape.mu = {3, 3, 3, 2};
    t.shape.spin = true;
    t.cols = {{0, -5, -3, -1}, {2, 3, 0, -1}, {1, 4, -4}};
    t.spin_col = {3, -5, -4, -2, -1};
    return t;
}

} // namespace

TEST_CASE("validation accepts the worked tableaux") {
    auto v = kn_violation(c5_tableau());
    CAPTURE(v.value_or(""));
    CHECK(!v);
    v = kn_violation(b5_tableau());
    CAPTURE(v.value_or(""));
    CHECK(!v);
}

TEST_CASE("one-column condition rejects a tight pair") {
    KnTableau t;
    t.type = LieType::C;
    t.n = 2;
    t.shape.mu = {1, 1};
    t.cols = {{1, -1}};
    auto v = kn_violation(t);
    REQUIRE(v);
    CHECK(v->find("one-column") != std::string::npos);
    // while the wide pair passes
    t.cols = {{2, -2}};
    CHECK(!kn_violation(t));
}

TEST_CASE("multiple zeros stack in a column but not in a row") {
    KnTableau t;
    t.type = LieType::B;
    t.n = 5;
    t.shape.mu = {1, 1, 1, 1};
    t.cols = {{2, 0, 0, -1}};
    CHECK(!kn_violation(t));
    KnTableau row;
    row.type = LieType::B;
    row.n = 2;
    row.shape.mu = {2};
    row.cols = {{0}, {0}};
    CHECK(kn_violation(row));
}

TEST_CASE("highest elements") {
    auto h = kn_highest(LieType::C, 2, Shape{{1, 1}, false});
    CHECK(h.cols == std::vector<std::vector<Letter>>{{1, 2}});
    auto hs = kn_highest(LieType::B, 2, Shape{{}, true});
    CHECK(hs.spin_col == std::vector<Letter>{1, 2});
    auto h3 = kn_highest(LieType::C, 3, Shape{{2, 1}, false});
    auto st = kn_stats(h3);
    for (int i = 1; i <= 3; ++i) {
        CHECK(st.eps[i - 1] == MInt(0));
        CHECK(!kn_step(h3, i, Dir::E));
    }
}

TEST_CASE("letter chains at rank 2") {
    // type C: 1 -> 2 -> 2~ -> 1~
    auto t = kn_highest(LieType::C, 2, Shape{{1}, false});
    auto s1 = kn_step(t, 1, Dir::F);
    REQUIRE(s1);
    CHECK(s1->cols[0] == std::vector<Letter>{2});
    auto s2 = kn_step(*s1, 2, Dir::F);
    REQUIRE(s2);
    CHECK(s2->cols[0] == std::vector<Letter>{-2});
    auto s3 = kn_step(*s2, 1, Dir::F);
    REQUIRE(s3);
    CHECK(s3->cols[0] == std::vector<Letter>{-1});
    CHECK(!kn_step(*s3, 1, Dir::F));
    CHECK(!kn_step(*s3, 2, Dir::F));

    // type B inserts the zero letter: n -> 0 -> n~ under f_n twice
    auto b = kn_highest(LieType::B, 2, Shape{{1}, false});
    auto b1 = kn_step(b, 1, Dir::F);
    REQUIRE(b1);
    auto b2 = kn_step(*b1, 2, Dir::F);
    REQUIRE(b2);
    CHECK(b2->cols[0] == std::vector<Letter>{0});
    auto b3 = kn_step(*b2, 2, Dir::F);
    REQUIRE(b3);
    CHECK(b3->cols[0] == std::vector<Letter>{-2});
}

TEST_CASE("crystal axioms along edges") {
    for (auto [type, shape] : {std::pair{LieType::C, Shape{{2, 1}, false}},
                               std::pair{LieType::B, Shape{{1, 1}, true}}}) {
        int n = 3;
        auto g = generate_graph(kn_oracle(type, n), kn_json(kn_highest(type, n, shape)));
        for (auto& e : g.edges) {
            auto src = kn_of_json(g.nodes[e[0]]);
            auto tgt = kn_of_json(g.nodes[e[2]]);
            int i = e[1];
            auto ss = kn_stats(src), ts = kn_stats(tgt);
            CHECK(ts.eps[i - 1] == ss.eps[i - 1] + 1);
            CHECK(ts.phi[i - 1] == ss.phi[i - 1] - 1);
            CHECK(ts.wt + HalfWeight::alpha(type, n, i) == ss.wt);
            // partial inverses
            auto back = kn_step(tgt, i, Dir::E);
            REQUIRE(back);
            CHECK(*back == src);
        }
        for (auto& node : g.nodes) {
            auto t = kn_of_json(node);
            CHECK(kn_validate(t));
            CHECK(kn_stats(t).axiom_holds(type));
        }
    }
}

TEST_CASE("closure sizes match Weyl dimensions") {
    struct Case {
        LieType t;
        int n;
        Shape s;
        long dim;
    };
    std::vector<Case> cases = {
        {LieType::C, 2, Shape{{1}, false}, 4},
        {LieType::C, 2, Shape{{1, 1}, false}, 5},
        {LieType::B, 2, Shape{{}, true}, 4},
        {LieType::B, 2, Shape{{1}, false}, 5},
        {LieType::B, 2, Shape{{1, 1}, false}, 10},
        {LieType::C, 3, Shape{{1, 1}, false}, 14},
        {LieType::B, 3, Shape{{}, true}, 8},
    };
    for (auto& c : cases) {
        CAPTURE(lie_str(c.t) + std::to_string(c.n) + " " + c.s.str());
        CHECK(weyl_dim(c.t, c.n, c.s) == c.dim);
        auto g = generate_graph(kn_oracle(c.t, c.n), kn_json(kn_highest(c.t, c.n, c.s)));
        CHECK(static_cast<long>(g.nodes.size()) == c.dim);
        // unique source: exactly one node with all eps = 0
        int sources = 0;
        for (auto& node : g.nodes) {
            auto st = kn_stats(kn_of_json(node));
            bool src = true;
            for (int i = 1; i <= c.n; ++i) src = src && st.eps[i - 1] == MInt(0);
            sources += src;
        }
        CHECK(sources == 1);
    }
}

TEST_CASE("weyl_dim fixtures") {
    CHECK(weyl_dim(LieType::C, 2, Shape{{1, 1}, false}) == 5);
    CHECK(weyl_dim(LieType::B, 3, Shape{{}, true}) == 8);
    CHECK(weyl_dim(LieType::C, 4, Shape{{}, false}) == 1);
    CHECK(weyl_dim(LieType::B, 4, Shape{{}, false}) == 1);
}
