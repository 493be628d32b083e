#pragma once

#include "cryst/embed.hpp"
#include "cryst/graph.hpp"

#include <string>

namespace cryst {

// Canonical JSON serializations; every key() output re-parses to an equal
// value, and each model's oracle uses the same encoding for node identity.
std::string lie_str(LieType t);
LieType lie_of(const std::string& s);

std::string tableau_json(const SkewTableau& t);
SkewTableau tableau_of_json(const std::string& s);

std::string kn_json(const KnTableau& t);
KnTableau kn_of_json(const std::string& s);

std::string spinor_json(const SpinorTuple& t);
SpinorTuple spinor_of_json(const std::string& s);

std::string verma_json(const VermaElement& v, int r);
struct VermaWithR {
    VermaElement elem;
    int r = 0;
};
VermaWithR verma_of_json(const std::string& s);

std::string lusztig_json(const FoldedDatum& d);
FoldedDatum lusztig_of_json(const std::string& s);

// Oracles backing generate_graph / check_morphism.
ModelOracle kn_oracle(LieType t, int n);
ModelOracle spinor_oracle(LieType t, int n);
// The Verma element together with its omega_n shift: stats are those of
// elem (x) t_{r omega_n}; steps act on elem.
ModelOracle verma_shifted_oracle(LieType t, int n);
// Lusztig datum shifted by t_{omega_lambda}; nodes pair the datum with the
// shift, built by lusztig_shifted_key.
ModelOracle lusztig_shifted_oracle(LieType t, int n);
std::string lusztig_shifted_key(const FoldedDatum& d, const HalfWeight& shift);

} // namespace cryst
