#include "CLI11.hpp"

#include "cryst/embed.hpp"
#include "cryst/io.hpp"
#include "cryst/suites.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cryst;

namespace {

Shape parse_shape(const std::string& lambda, bool spin) {
    Shape s;
    s.spin = spin;
    std::stringstream ss(lambda);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) s.mu.push_back(std::stoi(part));
    while (!s.mu.empty() && s.mu.back() == 0) s.mu.pop_back();
    return s;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void print_report(const std::string& title, const SuiteReport& rep) {
    std::cout << "== " << title << "\n";
    for (auto& c : rep.checks) {
        std::cout << (c.passed ? "  pass  " : "  FAIL  ") << c.name;
        if (!c.passed) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
    }
}

int run_enumerate(LieType type, int n, const Shape& shape, const std::string& model,
                  const std::string& out_path, const std::string& format, long cap, int depth) {
    GraphLimits lim;
    lim.node_cap = cap;
    lim.depth_cap = depth;
    ModelOracle oracle;
    std::string seed;
    if (depth == -2) lim.depth_cap = model == "verma" ? 3 : -1; // verma is infinite
    if (model == "kn") {
        oracle = kn_oracle(type, n);
        seed = kn_json(kn_highest(type, n, shape));
    } else if (model == "spinor") {
        oracle = spinor_oracle(type, n);
        seed = spinor_json(spinor_highest(type, n, shape));
    } else if (model == "verma") {
        oracle = verma_shifted_oracle(type, n);
        VermaElement h = verma_highest(type, n, shape);
        SpinorTuple hs = spinor_highest(type, n, shape);
        seed = verma_json(h, omega_n_units(hs));
    } else {
        std::cerr << "unknown model: " << model << "\n";
        return 2;
    }
    CrystalGraph g;
    try {
        g = generate_graph(oracle, seed, lim);
    } catch (const NodeCapExceeded& e) {
        std::cerr << "enumeration aborted: " << e.what() << "\n";
        return 3;
    }
    std::string text = format == "dot" ? graph_to_dot(g) : graph_to_json(g);
    if (out_path.empty() || out_path == "-") std::cout << text;
    else spill(out_path, text);
    std::cerr << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
    return 0;
}

int run_map(const std::string& which, const std::string& in_path, const std::string& out_path) {
    std::string text = slurp(in_path);
    std::string out;
    if (which == "psi") {
        out = spinor_json(kn_to_spinor(kn_of_json(text)));
    } else if (which == "theta") {
        auto v = spinor_to_verma(spinor_of_json(text));
        out = verma_json(v.elem, v.r);
    } else if (which == "phi") {
        auto v = verma_of_json(text);
        FoldedDatum d = verma_to_lusztig(v.elem);
        out = lusztig_json(d);
    } else if (which == "xi") {
        auto l = kn_to_lusztig(kn_of_json(text));
        out = lusztig_json(l.datum);
    } else {
        std::cerr << "unknown map: " << which << "\n";
        return 2;
    }
    if (out_path.empty() || out_path == "-") std::cout << out << "\n";
    else spill(out_path, out + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystal-embed: Kashiwara-Nakashima tableaux, their spinor and parabolic Verma "
                 "models, and Lusztig data, with an exhaustive verification harness"};
    app.require_subcommand(1);

    std::string type_str = "C", lambda, model = "kn", out_path, format = "json", which, in_path;
    std::string suite = "all";
    int n = 3, depth = -2, max_cols = 3;
    long cap = 1000000;
    bool spin = false;
    std::uint64_t seed = default_seed();

    auto* enumerate = app.add_subcommand("enumerate", "breadth-first closure of a model");
    enumerate->add_option("--type", type_str, "B or C")->check(CLI::IsMember({"B", "C"}));
    enumerate->add_option("--n", n, "rank")->required();
    enumerate->add_option("--lambda", lambda, "comma-separated shape, e.g. 2,1");
    enumerate->add_flag("--spin", spin, "add the half-box column (type B)");
    enumerate->add_option("--model", model, "kn | spinor | verma");
    enumerate->add_option("--out", out_path, "output file, - for stdout");
    enumerate->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
    enumerate->add_option("--cap", cap, "node cap");
    enumerate->add_option("--depth", depth, "depth cap; -1 = unbounded (default 3 for verma)");

    auto* map_cmd = app.add_subcommand("map", "apply one of the structure maps to a JSON element");
    map_cmd->add_option("--which", which, "psi | theta | phi | xi")->required();
    map_cmd->add_option("--in", in_path, "input file")->required();
    map_cmd->add_option("--out", out_path, "output file, - for stdout");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "paper-examples | morphism | oracle | all");
    verify->add_option("--type", type_str, "restrict to one type")->check(CLI::IsMember({"B", "C"}));
    verify->add_option("--n", n, "restrict to one rank");
    verify->add_option("--max-cols", max_cols, "bound on lambda_1");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--cap", cap, "node cap");

    auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension of the highest-weight module");
    dim_cmd->add_option("--type", type_str, "B or C")->check(CLI::IsMember({"B", "C"}));
    dim_cmd->add_option("--n", n, "rank")->required();
    dim_cmd->add_option("--lambda", lambda, "comma-separated shape");
    dim_cmd->add_flag("--spin", spin, "add the half-box column (type B)");

    CLI11_PARSE(app, argc, argv);

    try {
        LieType type = lie_of(type_str);
        if (enumerate->parsed())
            return run_enumerate(type, n, parse_shape(lambda, spin), model, out_path, format, cap,
                                 depth);
        if (map_cmd->parsed()) return run_map(which, in_path, out_path);
        if (dim_cmd->parsed()) {
            std::cout << weyl_dim(type, n, parse_shape(lambda, spin)) << "\n";
            return 0;
        }
        if (verify->parsed()) {
            SweepOptions opt;
            opt.max_cols = max_cols;
            opt.node_cap = cap;
            opt.seed = seed;
            if (verify->count("--type")) opt.types = {type};
            if (verify->count("--n")) opt.ranks = {n};
            bool ok = true;
            auto run = [&](const std::string& title, const SuiteReport& rep) {
                print_report(title, rep);
                ok = ok && rep.passed();
            };
            if (suite == "paper-examples" || suite == "all")
                run("paper examples", paper_example_suite());
            if (suite == "oracle" || suite == "all") run("cardinality oracle", oracle_suite(opt));
            if (suite == "morphism" || suite == "all") run("morphisms", morphism_suite(opt));
            if (suite == "all") {
                run("lusztig data properties", lusztig_property_suite(opt.seed));
                run("structural properties", structural_suite(opt));
            }
            std::cout << (ok ? "all checks passed" : "FAILURES present") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
