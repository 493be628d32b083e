#include "cryst/graph.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace cryst {

int CrystalGraph::find(const std::string& key) const {
    for (size_t k = 0; k < nodes.size(); ++k)
        if (nodes[k] == key) return static_cast<int>(k);
    return -1;
}

CrystalGraph generate_graph(const ModelOracle& m, const std::string& seed, GraphLimits lim) {
    CrystalGraph g;
    std::map<std::string, int> index;
    std::deque<std::pair<int, int>> frontier; // node, depth
    g.nodes.push_back(seed);
    index[seed] = 0;
    frontier.push_back({0, 0});
    std::vector<std::array<int, 3>> e_edges;
    while (!frontier.empty()) {
        auto [cur, depth] = frontier.front();
        frontier.pop_front();
        if (lim.depth_cap >= 0 && depth >= lim.depth_cap) continue;
        std::string key = g.nodes[cur];
        for (int i = 1; i <= m.n; ++i) {
            for (Dir d : {Dir::F, Dir::E}) {
                auto nxt = m.step(key, i, d);
                if (!nxt) continue;
                auto it = index.find(*nxt);
                int tgt;
                if (it == index.end()) {
                    tgt = static_cast<int>(g.nodes.size());
                    if (tgt >= lim.node_cap)
                        throw NodeCapExceeded("node cap " + std::to_string(lim.node_cap) + " exceeded");
                    g.nodes.push_back(*nxt);
                    index[*nxt] = tgt;
                    frontier.push_back({tgt, depth + 1});
                } else {
                    tgt = it->second;
                }
                if (d == Dir::F) g.edges.push_back({cur, i, tgt});
                else e_edges.push_back({tgt, i, cur});
            }
        }
    }
    // e-discovered arrows are f-arrows of the reverse pair; keep one copy
    std::set<std::array<int, 3>> seen(g.edges.begin(), g.edges.end());
    for (auto& e : e_edges)
        if (seen.insert(e).second) g.edges.push_back(e);
    return g;
}

bool graph_equal(const CrystalGraph& a, const CrystalGraph& b) {
    if (a.nodes.size() != b.nodes.size() || a.root != b.root) return false;
    std::set<std::array<int, 3>> ea(a.edges.begin(), a.edges.end());
    std::set<std::array<int, 3>> eb(b.edges.begin(), b.edges.end());
    return ea == eb;
}

MorphismReport check_morphism(const ModelOracle& domain, const CrystalGraph& graph,
                              const std::function<std::string(const std::string&)>& map,
                              const ModelOracle& codomain) {
    MorphismReport rep;
    std::map<std::string, std::string> images;
    for (auto& node : graph.nodes) {
        std::string img = map(node);
        for (auto& [other, oimg] : images) {
            if (oimg == img) {
                rep.violations.push_back("not injective: " + other + " and " + node);
                break;
            }
        }
        images[node] = img;
        CrystalStats ds = domain.stats(node);
        CrystalStats cs = codomain.stats(img);
        if (!(ds.wt == cs.wt))
            rep.violations.push_back("weight not preserved at " + node + ": " + ds.wt.str() +
                                     " vs " + cs.wt.str());
        for (int i = 1; i <= domain.n; ++i) {
            if (!(ds.eps[i - 1] == cs.eps[i - 1]))
                rep.violations.push_back("eps_" + std::to_string(i) + " not preserved at " + node);
            if (!(ds.phi[i - 1] == cs.phi[i - 1]))
                rep.violations.push_back("phi_" + std::to_string(i) + " not preserved at " + node);
        }
        ++rep.nodes_checked;
    }
    for (auto& e : graph.edges) {
        const std::string& src = graph.nodes[e[0]];
        const std::string& tgt = graph.nodes[e[2]];
        int i = e[1];
        auto f_img = codomain.step(images[src], i, Dir::F);
        if (!f_img || *f_img != images[tgt])
            rep.violations.push_back("f_" + std::to_string(i) + " does not commute at " + src);
        auto e_img = codomain.step(images[tgt], i, Dir::E);
        if (!e_img || *e_img != images[src])
            rep.violations.push_back("e_" + std::to_string(i) + " does not commute at " + tgt);
        ++rep.edges_checked;
    }
    return rep;
}

std::string graph_to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n  rankdir=TB;\n";
    for (size_t k = 0; k < g.nodes.size(); ++k) {
        out << "  n" << k << " [label=\"";
        for (char c : g.nodes[k]) {
            if (c == '"' || c == '\\') out << '\\';
            out << c;
        }
        out << "\"";
        if (static_cast<int>(k) == g.root) out << ", shape=doubleoctagon";
        out << "];\n";
    }
    for (auto& e : g.edges)
        out << "  n" << e[0] << " -> n" << e[2] << " [label=\"" << e[1] << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace cryst
