#pragma once

#include "cryst/io.hpp"
#include "cryst/weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cryst {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;      // first counterexample or summary counts
    double seconds = 0.0;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool passed() const {
        for (auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    long failures() const {
        long f = 0;
        for (auto& c : checks) f += !c.passed;
        return f;
    }
};

struct SweepOptions {
    std::vector<LieType> types{LieType::C, LieType::B};
    std::vector<int> ranks{2, 3};
    int max_cols = 3;      // lambda_1 bound
    int spin_max_cols = 2; // mu_1 bound for spin shapes
    long node_cap = 1000000;
    std::uint64_t seed = 0x5eed;
};

// All dominant shapes with lambda_1 <= max_cols (plus type-B spin shapes).
std::vector<Shape> shape_family(LieType t, int n, int max_cols, int spin_max_cols);

// Fixture suite: the worked small-rank examples, exact.
SuiteReport paper_example_suite();

// Cardinalities: |BFS(KN)| = |BFS(spinor)| = Weyl dimension.
SuiteReport oracle_suite(const SweepOptions& opt);

// Morphism contracts for the column map, the separation map, the Lusztig map
// and the composite, on every enumerated crystal.
SuiteReport morphism_suite(const SweepOptions& opt);

// Random closure/axiom checks on folded Lusztig data, n <= 4.
SuiteReport lusztig_property_suite(std::uint64_t seed, int trials = 1000);

// sl2 strings, far commutation, separation semistandardness and letter
// conservation.
SuiteReport structural_suite(const SweepOptions& opt);

// The seed for randomized checks: CRYSTAL_EMBED_SEED when set, else fixed.
std::uint64_t default_seed();

} // namespace cryst
