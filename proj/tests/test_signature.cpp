#include "doctest.h"

#include "cryst/signature.hpp"

#include <random>

using namespace cryst;

namespace {

// Brute-force oracle: literally delete adjacent (-,+) pairs until none remain.
struct BruteResult {
    int eps, phi;
    std::optional<int> e_pos, f_pos;
};

BruteResult brute_reduce(std::vector<char> w) {
    std::vector<int> pos(w.size());
    for (size_t k = 0; k < w.size(); ++k) pos[k] = static_cast<int>(k) + 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] == '-' && w[k + 1] == '+') {
                w.erase(w.begin() + k, w.begin() + k + 2);
                pos.erase(pos.begin() + k, pos.begin() + k + 2);
                changed = true;
                break;
            }
        }
        if (!changed) {
            // drop dots so adjacency is in the reduced order
            for (size_t k = 0; k < w.size(); ++k) {
                if (w[k] == '.') {
                    w.erase(w.begin() + k);
                    pos.erase(pos.begin() + k);
                    changed = true;
                    break;
                }
            }
        }
    }
    BruteResult r{0, 0, std::nullopt, std::nullopt};
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] == '-') {
            ++r.eps;
            if (!r.e_pos) r.e_pos = pos[k]; // leftmost surviving minus
        } else {
            ++r.phi;
            r.f_pos = pos[k]; // rightmost surviving plus
        }
    }
    return r;
}

// Independent oracle: expand the display word (descending tensor index) into
// factor stats and fold with the binary tensor rule.
BruteResult tensor_oracle(const std::vector<char>& w) {
    size_t m = w.size();
    std::vector<FactorStat> fs(m);
    for (size_t k = 0; k < m; ++k) {
        char c = w[m - 1 - k]; // factor k in tensor order is printed last
        fs[k] = FactorStat{MInt(c == '-' ? 1 : 0), MInt(c == '+' ? 1 : 0),
                           (c == '+') - (c == '-')};
    }
    FoldResult f = fold_factors(fs);
    BruteResult r{f.eps.value(), f.phi.value(), std::nullopt, std::nullopt};
    if (r.eps > 0) r.e_pos = static_cast<int>(m) - f.e_target; // back to word position
    if (r.phi > 0) r.f_pos = static_cast<int>(m) - f.f_target;
    return r;
}

std::vector<char> word_of(const std::string& s) { return {s.begin(), s.end()}; }

} // namespace

TEST_CASE("signature_reduce frozen examples") {
    // derived with the brute-force cancellation oracle
    auto r = signature_reduce(word_of("++-+"));
    CHECK(r.eps == 0);
    CHECK(r.phi == 2);
    CHECK(!r.e_pos);
    REQUIRE(r.f_pos);
    CHECK(*r.f_pos == 2);

    r = signature_reduce({});
    CHECK(r.eps == 0);
    CHECK(r.phi == 0);
    CHECK(!r.e_pos);
    CHECK(!r.f_pos);

    r = signature_reduce(word_of("--+"));
    CHECK(r.eps == 1);
    CHECK(r.phi == 0);
    REQUIRE(r.e_pos);
    CHECK(*r.e_pos == 1);
    CHECK(!r.f_pos);
}

TEST_CASE("signature_reduce matches both oracles on all short words") {
    std::vector<char> letters{'+', '-', '.'};
    for (int len = 0; len <= 8; ++len) {
        long total = 1;
        for (int k = 0; k < len; ++k) total *= 3;
        for (long code = 0; code < total; ++code) {
            std::vector<char> w;
            long c = code;
            for (int k = 0; k < len; ++k) {
                w.push_back(letters[c % 3]);
                c /= 3;
            }
            auto got = signature_reduce(w);
            auto brute = brute_reduce(w);
            auto tens = tensor_oracle(w);
            CAPTURE(std::string(w.begin(), w.end()));
            CHECK(got.eps == brute.eps);
            CHECK(got.phi == brute.phi);
            CHECK(got.e_pos == brute.e_pos);
            CHECK(got.f_pos == brute.f_pos);
            CHECK(got.eps == tens.eps);
            CHECK(got.phi == tens.phi);
            CHECK(got.e_pos == tens.e_pos);
            CHECK(got.f_pos == tens.f_pos);
        }
    }
}

TEST_CASE("signature_reduce vs tensor oracle on random length-10 words") {
    std::mt19937_64 rng(20240811);
    std::vector<char> letters{'+', '-', '.'};
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<char> w;
        for (int k = 0; k < 10; ++k) w.push_back(letters[rng() % 3]);
        auto got = signature_reduce(w);
        auto tens = tensor_oracle(w);
        CHECK(got.eps == tens.eps);
        CHECK(got.phi == tens.phi);
        CHECK(got.e_pos == tens.e_pos);
        CHECK(got.f_pos == tens.f_pos);
    }
}

TEST_CASE("tensor_stats routing rules") {
    // phi(b1) = eps(b2): e acts left, f acts right
    auto t = tensor_stats(MInt(0), MInt(1), 1, MInt(1), MInt(0), -1);
    CHECK(t.e_left);
    CHECK(!t.f_left);

    // right factor with phi = -inf absorbs nothing
    t = tensor_stats(MInt(2), MInt(1), -1, MInt::minus_inf(), MInt::minus_inf(), 0);
    CHECK(t.eps == MInt(2));
    CHECK(t.e_left);
    CHECK(t.f_left);
    CHECK(t.phi == MInt(1));

    // phi(b1)=0 < eps(b2)=2: both act right
    t = tensor_stats(MInt(0), MInt(0), 0, MInt(2), MInt(1), -1);
    CHECK(!t.e_left);
    CHECK(!t.f_left);
    CHECK(t.eps == MInt(2));
}

TEST_CASE("MInt arithmetic keeps -inf absorbing") {
    MInt m = MInt::minus_inf();
    CHECK((m + 5).is_minus_inf());
    CHECK((m + m).is_minus_inf());
    CHECK(m < MInt(-1000000));
    CHECK(max(m, MInt(3)) == MInt(3));
}
