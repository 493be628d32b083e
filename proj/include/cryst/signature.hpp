#pragma once

#include "cryst/minf.hpp"
#include "cryst/weight.hpp"

#include <optional>
#include <vector>

namespace cryst {

// One tensor factor as seen in direction i.
struct FactorStat {
    MInt eps, phi;
    int pair = 0; // <wt(factor), h_i>; ignored when eps/phi are -inf
};

struct FoldResult {
    MInt eps, phi;
    // 0-based index of the factor the operator would act on, in tensor order
    // (factor 0 first).  e_target is meaningful only when eps > 0; f_target
    // names where f would go, which callers of non-normal crystals may use
    // even when phi <= 0.
    int e_target = -1;
    int f_target = -1;
};

// Tensor product rule folded over factors listed in tensor order b1, b2, ...:
//   eps(b1 x b2) = max(eps1, eps2 - <wt1,h>),  e acts left iff phi1 >= eps2,
//   phi(b1 x b2) = max(phi1 + <wt2,h>, phi2),  f acts left iff phi1 > eps2.
FoldResult fold_factors(const std::vector<FactorStat>& fs);

// Binary tensor statistics plus routing, exposed for direct use and as the
// oracle that the signature reduction is checked against.
struct TensorPair {
    MInt eps, phi;
    bool e_left = true;
    bool f_left = true;
};
TensorPair tensor_stats(MInt eps1, MInt phi1, int pair1, MInt eps2, MInt phi2, int pair2);

// Signature reduction on a word over {+,-,.}, listed with descending tensor
// index (the last tensor factor printed first).  Adjacent (-,+) pairs with the
// minus on the left cancel; e acts at the leftmost surviving minus, f at the
// rightmost surviving plus.  Positions are 1-based word positions, nullopt
// when no operator applies.
struct SignatureResult {
    int eps = 0, phi = 0;
    std::optional<int> e_pos, f_pos;
};
SignatureResult signature_reduce(const std::vector<char>& word);

// Per-letter crystal data in direction i for the letter chains
//   type C: 1 ->1 ... ->n-1 n ->n n~ ->n-1 ... ->1 1~
//   type B: the same with n ->n 0 ->n n~ in the middle.
FactorStat letter_stat(LieType t, int n, Letter x, int i);

// Restriction to the indices 1..n-1 acting on barred letters only:
// f_i sends (i+1)~ to i~.
FactorStat neg_letter_stat(int n, Letter x, int i);

// Apply e/f to a single letter of the full chain; nullopt when undefined.
enum class Dir { E, F };
std::optional<Letter> letter_step(LieType t, int n, Letter x, int i, Dir d);
std::optional<Letter> neg_letter_step(int n, Letter x, int i, Dir d);

// Word-level action for the restricted (barred-letter) structure: finds the
// acting position via fold_factors and returns (position, new letter).
struct WordAction {
    int pos; // 0-based index into the word
    Letter repl;
};
std::optional<WordAction> neg_word_step(int n, const std::vector<Letter>& w, int i, Dir d);
MInt neg_word_eps(int n, const std::vector<Letter>& w, int i);
MInt neg_word_phi(int n, const std::vector<Letter>& w, int i);

} // namespace cryst
