#include "doctest.h"

#include "cryst/io.hpp"
#include "cryst/kn.hpp"

using namespace cryst;

TEST_CASE("the rank-2 chain graph") {
    auto g = generate_graph(kn_oracle(LieType::C, 2), kn_json(kn_highest(LieType::C, 2, Shape{{1}, false})));
    REQUIRE(g.nodes.size() == 4);
    REQUIRE(g.edges.size() == 3);
    // chain 1 ->1 2 ->2 2~ ->1 1~ in discovery order
    CHECK(g.edges[0] == std::array<int, 3>{0, 1, 1});
    CHECK(g.edges[1] == std::array<int, 3>{1, 2, 2});
    CHECK(g.edges[2] == std::array<int, 3>{2, 1, 3});
}

TEST_CASE("depth cap makes a single node") {
    GraphLimits lim;
    lim.depth_cap = 0;
    auto g = generate_graph(kn_oracle(LieType::C, 2),
                            kn_json(kn_highest(LieType::C, 2, Shape{{1}, false})), lim);
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
}

TEST_CASE("node cap throws") {
    GraphLimits lim;
    lim.node_cap = 1;
    CHECK_THROWS_AS(generate_graph(kn_oracle(LieType::C, 2),
                                   kn_json(kn_highest(LieType::C, 2, Shape{{1}, false})), lim),
                    NodeCapExceeded);
}

TEST_CASE("morphism checker flags corruption") {
    auto oracle = kn_oracle(LieType::C, 2);
    auto g = generate_graph(oracle, kn_json(kn_highest(LieType::C, 2, Shape{{1, 1}, false})));
    auto identity = [](const std::string& s) { return s; };
    auto rep = check_morphism(oracle, g, identity, oracle);
    CHECK(rep.ok());
    CHECK(rep.nodes_checked == 5);
    // swap two nodes
    auto bad = [&](const std::string& s) {
        if (s == g.nodes[1]) return g.nodes[2];
        if (s == g.nodes[2]) return g.nodes[1];
        return s;
    };
    auto rep2 = check_morphism(oracle, g, bad, oracle);
    CHECK(!rep2.ok());
}

TEST_CASE("dot export mentions every node") {
    auto g = generate_graph(kn_oracle(LieType::C, 2),
                            kn_json(kn_highest(LieType::C, 2, Shape{{1}, false})));
    auto dot = graph_to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("n3") != std::string::npos);
}
