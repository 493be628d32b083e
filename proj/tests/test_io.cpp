#include "doctest.h"

#include "cryst/embed.hpp"
#include "cryst/io.hpp"

using namespace cryst;

namespace {

KnTableau sample_kn() {
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

TEST_CASE("round trips through JSON") {
    auto t = sample_kn();
    CHECK(kn_of_json(kn_json(t)) == t);

    auto s = kn_to_spinor(t);
    CHECK(spinor_of_json(spinor_json(s)) == s);

    auto v = spinor_to_verma(s);
    auto vr = verma_of_json(verma_json(v.elem, v.r));
    CHECK(vr.elem == v.elem);
    CHECK(vr.r == v.r);

    auto l = kn_to_lusztig(t);
    CHECK(lusztig_of_json(lusztig_json(l.datum)) == l.datum);
}

TEST_CASE("serialization is deterministic") {
    auto t = sample_kn();
    CHECK(kn_json(t) == kn_json(kn_of_json(kn_json(t))));
}

TEST_CASE("tableau JSON carries the documented fields") {
    auto s = kn_to_spinor(sample_kn());
    auto tb = tail_body(s);
    std::string j = tableau_json(tb.body);
    CHECK(j.find("\"alphabet\"") != std::string::npos);
    CHECK(j.find("\"rotated\":true") != std::string::npos);
    CHECK(tableau_of_json(j) == tb.body);
}

TEST_CASE("graph json names the root") {
    auto g = generate_graph(kn_oracle(LieType::C, 2),
                            kn_json(kn_highest(LieType::C, 2, Shape{{1}, false})));
    auto j = graph_to_json(g);
    CHECK(j.find("\"root\":0") != std::string::npos);
    CHECK(j.find("\"edges\"") != std::string::npos);
}
