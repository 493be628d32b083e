#include "doctest.h"

#include "cryst/io.hpp"
#include "cryst/spinor.hpp"
#include "cryst/weyl.hpp"

using namespace cryst;

namespace {

TwoColumn tc(int a, int b, int c, std::vector<Letter> l, std::vector<Letter> r) {
    TwoColumn t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.left = std::move(l);
    t.right = std::move(r);
    return t;
}

} // namespace

TEST_CASE("highest factors") {
    auto h = two_col_highest(5, 3);
    CHECK(h.left == std::vector<Letter>{-5, -4, -3});
    CHECK(h.a == 3);
    CHECK(!block_violation(LieType::C, 5, h));
    CHECK(!block_violation(LieType::B, 5, h));
    // weight of H_a is the fundamental weight omega_{n-a}
    CHECK(block_weight(LieType::C, 5, h) == HalfWeight::fundamental(LieType::C, 5, 2));
}

TEST_CASE("type C factor operators in the last direction") {
    // a domino on top comes off under raising
    auto t = tc(0, 0, 2, {-5, -3}, {-5, -2});
    auto up = block_step(LieType::C, 5, t, 5, Dir::E);
    REQUIRE(up);
    CHECK(*up == tc(0, 0, 1, {-3}, {-2}));
    CHECK(!block_step(LieType::C, 5, *up, 5, Dir::E));
    // and lowering puts it back
    auto down = block_step(LieType::C, 5, *up, 5, Dir::F);
    REQUIRE(down);
    CHECK(*down == t);
    // the highest factor is killed by raising
    CHECK(!block_step(LieType::C, 5, two_col_highest(5, 2), 5, Dir::E));
}

TEST_CASE("admissibility of highest factors and failure modes") {
    std::string why;
    CHECK(admissible(LieType::C, 5, two_col_highest(5, 3), two_col_highest(5, 1), &why));
    CHECK(admissible(LieType::C, 5, two_col_highest(5, 2), two_col_highest(5, 2), &why));
    CHECK(!admissible(LieType::C, 5, two_col_highest(5, 1), two_col_highest(5, 3), &why));
}

TEST_CASE("spinor tuples match KN crystals") {
    for (auto [type, n, shape] : {std::tuple{LieType::C, 2, Shape{{1, 1}, false}},
                                  std::tuple{LieType::C, 3, Shape{{2}, false}},
                                  std::tuple{LieType::B, 2, Shape{{1, 1}, false}},
                                  std::tuple{LieType::B, 2, Shape{{1}, true}},
                                  std::tuple{LieType::B, 3, Shape{{}, true}}}) {
        CAPTURE(lie_str(type) + std::to_string(n) + " " + shape.str());
        auto kg = generate_graph(kn_oracle(type, n), kn_json(kn_highest(type, n, shape)));
        auto sg = generate_graph(spinor_oracle(type, n),
                                 spinor_json(spinor_highest(type, n, shape)));
        CHECK(kg.nodes.size() == sg.nodes.size());
        CHECK(static_cast<long>(sg.nodes.size()) == weyl_dim(type, n, shape));
        CHECK(graph_equal(kg, sg));
        // the column-wise map transports the highest element
        CHECK(kn_to_spinor(kn_highest(type, n, shape)) == spinor_highest(type, n, shape));
        for (auto& node : sg.nodes) {
            SpinorTuple s = spinor_of_json(node);
            CHECK(spinor_validate(s));
            CHECK(spinor_stats(s).axiom_holds(type));
            CHECK(kn_to_spinor(spinor_to_kn(s)) == s);
        }
    }
}

TEST_CASE("column map round trips on every rank-3 full column") {
    // every valid KN column of each height maps over and back
    for (LieType type : {LieType::C, LieType::B}) {
        for (int h = 1; h <= 3; ++h) {
            Shape s;
            s.mu = std::vector<int>(h, 1);
            auto g = generate_graph(kn_oracle(type, 3), kn_json(kn_highest(type, 3, s)));
            for (auto& node : g.nodes) {
                auto t = kn_of_json(node);
                auto blk = kn_column_to_block(type, 3, t.cols[0]);
                CHECK(!block_violation(type, 3, blk));
                CHECK(blk.a == 3 - h);
                CHECK(block_to_kn_column(type, 3, blk) == t.cols[0]);
            }
        }
    }
}

TEST_CASE("spin factor operators") {
    // the spin crystal B(omega_n) through the tuple wrapper has 2^n elements
    int n = 3;
    Shape s{{}, true};
    auto g = generate_graph(spinor_oracle(LieType::B, n),
                            spinor_json(spinor_highest(LieType::B, n, s)));
    CHECK(static_cast<long>(g.nodes.size()) == weyl_dim(LieType::B, n, s));
    CHECK(g.nodes.size() == 8);
}

TEST_CASE("split of a highest factor") {
    // raising away the tail of H_a empties the left column
    for (int a = 0; a < 5; ++a) {
        auto h = two_col_highest(5, a);
        auto [lt, rt] = fully_raised(Alphabet{5, AlphabetKind::Neg}, h);
        CHECK(lt.empty());
        CHECK(rt == h.left);
    }
}
