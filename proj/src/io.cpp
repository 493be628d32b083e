#include "cryst/io.hpp"

#include "json.hpp"

#include <stdexcept>

namespace cryst {

using nlohmann::json;

namespace {

Shape normalize_shape(Shape s) {
    while (!s.mu.empty() && s.mu.back() == 0) s.mu.pop_back();
    return s;
}

std::string variant_str(AlphabetKind k) {
    switch (k) {
        case AlphabetKind::Full: return "J";
        case AlphabetKind::NoZero: return "Jx";
        case AlphabetKind::Neg: return "neg";
        case AlphabetKind::Pos: return "pos";
    }
    throw std::logic_error("variant_str");
}

AlphabetKind variant_of(const std::string& s) {
    if (s == "J") return AlphabetKind::Full;
    if (s == "Jx") return AlphabetKind::NoZero;
    if (s == "neg") return AlphabetKind::Neg;
    if (s == "pos") return AlphabetKind::Pos;
    throw std::invalid_argument("unknown alphabet variant: " + s);
}

json tableau_obj(const SkewTableau& t) {
    json j;
    j["alphabet"] = {{"n", t.alphabet.n}, {"variant", variant_str(t.alphabet.kind)}};
    j["shape"] = t.shape();
    j["rotated"] = t.rotated;
    j["rows"] = t.rows;
    return j;
}

SkewTableau tableau_from(const json& j) {
    SkewTableau t;
    t.alphabet = Alphabet{j.at("alphabet").at("n").get<int>(),
                          variant_of(j.at("alphabet").at("variant").get<std::string>())};
    t.rotated = j.at("rotated").get<bool>();
    t.rows = j.at("rows").get<std::vector<std::vector<Letter>>>();
    return t;
}

json kn_obj(const KnTableau& t) {
    json j;
    j["model"] = "kn";
    j["type"] = lie_str(t.type);
    j["n"] = t.n;
    j["lambda"] = normalize_shape(t.shape).mu;
    j["spin"] = t.shape.spin;
    Alphabet a{t.n, t.type == LieType::B ? AlphabetKind::Full : AlphabetKind::NoZero};
    j["body"] = tableau_obj(rotated_from_columns(a, t.cols));
    j["spin_column"] = t.shape.spin ? json(t.spin_col) : json(nullptr);
    return j;
}

KnTableau kn_from(const json& j) {
    KnTableau t;
    t.type = lie_of(j.at("type").get<std::string>());
    t.n = j.at("n").get<int>();
    t.shape.mu = j.at("lambda").get<std::vector<int>>();
    t.shape.spin = j.at("spin").get<bool>();
    t.shape = normalize_shape(t.shape);
    SkewTableau body = tableau_from(j.at("body"));
    for (int c = 1; c <= body.column_count(); ++c) t.cols.push_back(body.column(c));
    if (!j.at("spin_column").is_null()) t.spin_col = j.at("spin_column").get<std::vector<Letter>>();
    return t;
}

json spinor_obj(const SpinorTuple& s) {
    json j;
    j["model"] = "spinor";
    j["type"] = lie_str(s.type);
    j["n"] = s.n;
    j["lambda"] = normalize_shape(s.shape).mu;
    j["spin"] = s.shape.spin;
    json cols = json::array();
    for (auto& c : s.cols)
        cols.push_back({{"a", c.a}, {"b", c.b}, {"c", c.c}, {"L", c.left}, {"R", c.right}});
    j["columns"] = cols;
    j["spin_column"] = s.shape.spin ? json(s.spin) : json(nullptr);
    return j;
}

SpinorTuple spinor_from(const json& j) {
    SpinorTuple s;
    s.type = lie_of(j.at("type").get<std::string>());
    s.n = j.at("n").get<int>();
    s.shape.mu = j.at("lambda").get<std::vector<int>>();
    s.shape.spin = j.at("spin").get<bool>();
    s.shape = normalize_shape(s.shape);
    for (auto& c : j.at("columns")) {
        TwoColumn t;
        t.a = c.at("a").get<int>();
        t.b = c.at("b").get<int>();
        t.c = c.at("c").get<int>();
        t.left = c.at("L").get<std::vector<Letter>>();
        t.right = c.at("R").get<std::vector<Letter>>();
        s.cols.push_back(std::move(t));
    }
    if (!j.at("spin_column").is_null()) s.spin = j.at("spin_column").get<std::vector<Letter>>();
    return s;
}

json verma_obj(const VermaElement& v, int r) {
    json j;
    j["model"] = "verma";
    j["type"] = lie_str(v.type);
    j["n"] = v.n;
    j["lambda"] = normalize_shape(v.shape).mu;
    j["spin"] = v.shape.spin;
    j["nu"] = nu_of(v.n, v.shape);
    j["V2"] = tableau_obj(v.v2);
    j["V1"] = {{"tau", v.v1.shape()}, {"rows", v.v1.rows}};
    j["r"] = r;
    return j;
}

VermaWithR verma_from(const json& j) {
    VermaWithR out;
    out.elem.type = lie_of(j.at("type").get<std::string>());
    out.elem.n = j.at("n").get<int>();
    out.elem.shape.mu = j.at("lambda").get<std::vector<int>>();
    out.elem.shape.spin = j.at("spin").get<bool>();
    out.elem.shape = normalize_shape(out.elem.shape);
    out.elem.v2 = tableau_from(j.at("V2"));
    out.elem.v1 = SkewTableau{Alphabet{out.elem.n, AlphabetKind::Neg}, true,
                              j.at("V1").at("rows").get<std::vector<std::vector<Letter>>>()};
    out.r = j.at("r").get<int>();
    return out;
}

json lusztig_obj(const FoldedDatum& d) {
    json j;
    j["model"] = "lusztig";
    j["type"] = lie_str(d.type);
    j["n"] = d.n;
    json dp = json::array(), dm = json::array();
    for (int i = 1; i <= d.n; ++i)
        for (int k = i; k <= d.n; ++k)
            if (d.plus(i, k)) dp.push_back({i, k, d.plus(i, k)});
    for (int i = 1; i < d.n; ++i)
        for (int k = i + 1; k <= d.n; ++k)
            if (d.minus(i, k)) dm.push_back({i, k, d.minus(i, k)});
    j["dplus"] = dp;
    j["dminus"] = dm;
    return j;
}

FoldedDatum lusztig_from(const json& j) {
    FoldedDatum d(lie_of(j.at("type").get<std::string>()), j.at("n").get<int>());
    for (auto& e : j.at("dplus")) d.plus(e.at(0).get<int>(), e.at(1).get<int>()) = e.at(2).get<int>();
    for (auto& e : j.at("dminus"))
        d.minus(e.at(0).get<int>(), e.at(1).get<int>()) = e.at(2).get<int>();
    return d;
}

} // namespace

std::string lie_str(LieType t) { return t == LieType::B ? "B" : "C"; }

LieType lie_of(const std::string& s) {
    if (s == "B") return LieType::B;
    if (s == "C") return LieType::C;
    throw std::invalid_argument("unknown type: " + s);
}

std::string tableau_json(const SkewTableau& t) { return tableau_obj(t).dump(); }
SkewTableau tableau_of_json(const std::string& s) { return tableau_from(json::parse(s)); }

std::string kn_json(const KnTableau& t) { return kn_obj(t).dump(); }
KnTableau kn_of_json(const std::string& s) { return kn_from(json::parse(s)); }

std::string spinor_json(const SpinorTuple& t) { return spinor_obj(t).dump(); }
SpinorTuple spinor_of_json(const std::string& s) { return spinor_from(json::parse(s)); }

std::string verma_json(const VermaElement& v, int r) { return verma_obj(v, r).dump(); }
VermaWithR verma_of_json(const std::string& s) { return verma_from(json::parse(s)); }

std::string lusztig_json(const FoldedDatum& d) { return lusztig_obj(d).dump(); }
FoldedDatum lusztig_of_json(const std::string& s) { return lusztig_from(json::parse(s)); }

std::string graph_to_json(const CrystalGraph& g) {
    json j;
    j["nodes"] = json::array();
    for (auto& nstr : g.nodes) {
        // nodes carrying JSON keep their structure in the export
        json parsed = json::parse(nstr, nullptr, false);
        if (parsed.is_discarded()) j["nodes"].push_back(nstr);
        else j["nodes"].push_back(parsed);
    }
    j["edges"] = json::array();
    for (auto& e : g.edges) j["edges"].push_back({e[0], e[1], e[2]});
    j["root"] = g.root;
    return j.dump();
}

ModelOracle kn_oracle(LieType t, int n) {
    ModelOracle m;
    m.n = n;
    m.type = t;
    m.stats = [](const std::string& key) { return kn_stats(kn_of_json(key)); };
    m.step = [](const std::string& key, int i, Dir d) -> std::optional<std::string> {
        auto next = kn_step(kn_of_json(key), i, d);
        if (!next) return std::nullopt;
        return kn_json(*next);
    };
    return m;
}

ModelOracle spinor_oracle(LieType t, int n) {
    ModelOracle m;
    m.n = n;
    m.type = t;
    m.stats = [](const std::string& key) { return spinor_stats(spinor_of_json(key)); };
    m.step = [](const std::string& key, int i, Dir d) -> std::optional<std::string> {
        auto next = spinor_step(spinor_of_json(key), i, d);
        if (!next) return std::nullopt;
        return spinor_json(*next);
    };
    return m;
}

ModelOracle verma_shifted_oracle(LieType t, int n) {
    ModelOracle m;
    m.n = n;
    m.type = t;
    m.stats = [t, n](const std::string& key) {
        VermaWithR v = verma_of_json(key);
        CrystalStats s = verma_stats(v.elem);
        HalfWeight omega_n = HalfWeight::fundamental(t, n, n);
        for (int k = 0; k < n; ++k) s.wt.twice[k] += v.r * omega_n.twice[k];
        for (int i = 1; i <= n; ++i)
            s.phi[i - 1] = s.phi[i - 1] + v.r * omega_n.pairing(t, i);
        return s;
    };
    m.step = [](const std::string& key, int i, Dir d) -> std::optional<std::string> {
        VermaWithR v = verma_of_json(key);
        auto next = verma_step(v.elem, i, d);
        if (!next) return std::nullopt;
        return verma_json(*next, v.r);
    };
    return m;
}

std::string lusztig_shifted_key(const FoldedDatum& d, const HalfWeight& shift) {
    json j;
    j["datum"] = lusztig_obj(d);
    j["shift"] = shift.twice;
    return j.dump();
}

ModelOracle lusztig_shifted_oracle(LieType t, int n) {
    ModelOracle m;
    m.n = n;
    m.type = t;
    m.stats = [t, n](const std::string& key) {
        json j = json::parse(key);
        FoldedDatum d = lusztig_from(j.at("datum"));
        HalfWeight shift(n);
        shift.twice = j.at("shift").get<std::vector<int>>();
        CrystalStats s = folded_stats(d);
        s.wt += shift;
        for (int i = 1; i <= n; ++i) s.phi[i - 1] = s.phi[i - 1] + shift.pairing(t, i);
        return s;
    };
    m.step = [](const std::string& key, int i, Dir dir) -> std::optional<std::string> {
        json j = json::parse(key);
        FoldedDatum d = lusztig_from(j.at("datum"));
        auto next = folded_step(d, i, dir);
        if (!next) return std::nullopt;
        json out;
        out["datum"] = lusztig_obj(*next);
        out["shift"] = j.at("shift");
        return out.dump();
    };
    return m;
}

} // namespace cryst
