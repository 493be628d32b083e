#pragma once

#include "cryst/signature.hpp"
#include "cryst/weight.hpp"

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cryst {

// Type-erased crystal element: a canonical serialization (node identity), the
// statistics, and the two partial operators.
struct ModelOracle {
    int n = 0;
    LieType type = LieType::C;
    std::function<CrystalStats(const std::string&)> stats;
    std::function<std::optional<std::string>(const std::string&, int, Dir)> step;
};

struct CrystalGraph {
    std::vector<std::string> nodes;               // BFS discovery order
    std::vector<std::array<int, 3>> edges;        // src, label, tgt; tgt = f_label(src)
    int root = 0;                                 // index of the seed node

    int find(const std::string& key) const;
};

struct GraphLimits {
    long node_cap = 1000000;
    int depth_cap = -1; // -1 = unbounded (finite closure expected)
};

// BFS closure of the seed under e_i and f_i, deterministic ordering: nodes are
// discovered scanning i = 1..n, f first.  Throws on node-cap breach.
struct NodeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
CrystalGraph generate_graph(const ModelOracle& m, const std::string& seed, GraphLimits lim = {});

// Traversal equality: same edge structure over the BFS indexing.
bool graph_equal(const CrystalGraph& a, const CrystalGraph& b);

// Morphism verification: weight and string data preserved, operators commute
// on every edge of the domain, map injective on nodes.  Violations are data.
struct MorphismReport {
    long nodes_checked = 0, edges_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
MorphismReport check_morphism(const ModelOracle& domain, const CrystalGraph& graph,
                              const std::function<std::string(const std::string&)>& map,
                              const ModelOracle& codomain);

std::string graph_to_dot(const CrystalGraph& g);
std::string graph_to_json(const CrystalGraph& g);

} // namespace cryst
