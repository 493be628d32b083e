#include "doctest.h"

#include "cryst/io.hpp"
#include "cryst/spinor.hpp"

#include <functional>
#include <set>

using namespace cryst;

namespace {

// Every letter of the body alphabet, in order.
std::vector<Letter> letters_of(LieType t, int n) {
    std::vector<Letter> out;
    for (int k = 1; k <= n; ++k) out.push_back(k);
    if (t == LieType::B) out.push_back(0);
    for (int k = n; k >= 1; --k) out.push_back(-k);
    return out;
}

// All fillings of the shape that pass kn_validate, found without any crystal
// machinery: fill column by column, pruning only on column strictness.
std::set<std::string> brute_kn(LieType t, int n, const Shape& shape) {
    Alphabet a{n, t == LieType::B ? AlphabetKind::Full : AlphabetKind::NoZero};
    auto conj = shape.conjugate();
    std::set<std::string> found;
    KnTableau cur;
    cur.type = t;
    cur.n = n;
    cur.shape = shape;
    for (int h : conj) cur.cols.push_back(std::vector<Letter>(h, 0));
    auto alpha = letters_of(t, n);

    std::function<void(size_t, size_t)> fill = [&](size_t j, size_t k) {
        if (j == cur.cols.size()) {
            if (kn_validate(cur)) found.insert(kn_json(cur));
            return;
        }
        size_t nj = j, nk = k + 1;
        if (nk == cur.cols[j].size()) {
            nj = j + 1;
            nk = 0;
        }
        for (Letter x : alpha) {
            if (k > 0) {
                Letter above = cur.cols[j][k - 1];
                bool ok = a.leq(above, x) && !(x == above && !Alphabet::is_odd(x));
                if (!ok) continue;
            }
            cur.cols[j][k] = x;
            fill(nj, nk);
        }
    };
    if (cur.cols.empty()) {
        if (kn_validate(cur)) found.insert(kn_json(cur));
    } else {
        fill(0, 0);
    }
    return found;
}

// All spin columns appended to each brute body.
std::set<std::string> brute_kn_spin(int n, const Shape& shape) {
    Shape body_shape = shape;
    body_shape.spin = false;
    std::set<std::string> bodies = brute_kn(LieType::B, n, body_shape);
    std::set<std::string> found;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Letter> sc;
        Alphabet a{n, AlphabetKind::NoZero};
        for (int k = 1; k <= n; ++k) sc.push_back((mask >> (k - 1)) & 1 ? k : -k);
        std::sort(sc.begin(), sc.end(), [&](Letter x, Letter y) { return a.less(x, y); });
        for (const auto& body : bodies) {
            KnTableau t = kn_of_json(body);
            t.shape.spin = true;
            t.spin_col = sc;
            if (kn_validate(t)) found.insert(kn_json(t));
        }
    }
    return found;
}

std::set<std::string> bfs_kn(LieType t, int n, const Shape& shape) {
    auto g = generate_graph(kn_oracle(t, n), kn_json(kn_highest(t, n, shape)));
    return {g.nodes.begin(), g.nodes.end()};
}

} // namespace

TEST_CASE("validation characterizes the closure exactly") {
    // the validator must accept precisely the reachable set, so brute-force
    // filling and breadth-first closure agree
    for (auto [t, shape] : {std::pair{LieType::C, Shape{{1, 1}, false}},
                            std::pair{LieType::C, Shape{{2, 1}, false}},
                            std::pair{LieType::C, Shape{{2, 2}, false}},
                            std::pair{LieType::B, Shape{{1, 1}, false}},
                            std::pair{LieType::B, Shape{{2, 1}, false}},
                            std::pair{LieType::B, Shape{{2, 2}, false}}}) {
        int n = 2;
        CAPTURE(lie_str(t) + shape.str());
        CHECK(brute_kn(t, n, shape) == bfs_kn(t, n, shape));
    }
    CHECK(brute_kn(LieType::C, 3, Shape{{2, 1}, false}) ==
          bfs_kn(LieType::C, 3, Shape{{2, 1}, false}));
    CHECK(brute_kn(LieType::B, 3, Shape{{1, 1, 1}, false}) ==
          bfs_kn(LieType::B, 3, Shape{{1, 1, 1}, false}));
}

TEST_CASE("spin validation characterizes the closure exactly") {
    for (auto shape : {Shape{{}, true}, Shape{{1}, true}, Shape{{2, 1}, true}}) {
        CAPTURE(shape.str());
        CHECK(brute_kn_spin(2, shape) == bfs_kn(LieType::B, 2, shape));
    }
    CHECK(brute_kn_spin(3, Shape{{1, 1}, true}) == bfs_kn(LieType::B, 3, Shape{{1, 1}, true}));
}

TEST_CASE("admissibility characterizes the spinor closure exactly") {
    // all pairs of valid factors with the right tails, filtered by the
    // coupling conditions, versus the breadth-first set
    for (auto [t, shape] : {std::pair{LieType::C, Shape{{2, 2}, false}},
                            std::pair{LieType::C, Shape{{2, 1}, false}},
                            std::pair{LieType::B, Shape{{2, 2}, false}},
                            std::pair{LieType::B, Shape{{2}, false}}}) {
        int n = 2;
        CAPTURE(lie_str(t) + shape.str());
        auto g = generate_graph(spinor_oracle(t, n), spinor_json(spinor_highest(t, n, shape)));
        std::set<std::string> bfs{g.nodes.begin(), g.nodes.end()};
        // factors of each tail height, found by scanning small (b,c) windows
        auto factors = [&](int a_tail) {
            std::vector<TwoColumn> out;
            for (int b = 0; b <= n; ++b) {
                if (t == LieType::C && b != 0) continue;
                for (int c = 0; b + c <= n && a_tail + c <= n; ++c) {
                    TwoColumn tc;
                    tc.a = a_tail;
                    tc.b = b;
                    tc.c = c;
                    tc.left.assign(a_tail + c, 0);
                    tc.right.assign(b + c, 0);
                    std::function<void(int)> fill = [&](int cell) {
                        int lh = a_tail + c, rh = b + c;
                        if (cell == lh + rh) {
                            if (!block_violation(t, n, tc)) out.push_back(tc);
                            return;
                        }
                        bool on_left = cell < lh;
                        int idx = on_left ? cell : cell - lh;
                        auto& col = on_left ? tc.left : tc.right;
                        for (int k = n; k >= 1; --k) {
                            col[idx] = -k;
                            Alphabet al{n, AlphabetKind::Neg};
                            if (idx > 0 && !al.less(col[idx - 1], col[idx])) continue;
                            fill(cell + 1);
                        }
                    };
                    fill(0);
                }
            }
            return out;
        };
        auto tails = tail_heights(n, shape);
        REQUIRE(tails.size() == 2);
        std::set<std::string> brute;
        for (const auto& f2 : factors(tails[0])) {
            for (const auto& f1 : factors(tails[1])) {
                SpinorTuple s;
                s.type = t;
                s.n = n;
                s.shape = shape;
                s.cols = {f2, f1};
                if (spinor_validate(s)) brute.insert(spinor_json(s));
            }
        }
        CHECK(brute == bfs);
    }
}
