#pragma once

#include "spinsv/symfun.hpp"

#include <optional>

namespace spinsv {

// A function SP -> Q used as a bracket slot; covers p_{-1} insertions and
// products with Lambda elements.
using SPFunction = std::function<Rational(const Partition&)>;

inline SPFunction sp_from_symfunc(const SymFunc& f) {
    return [f](const Partition& lambda) { return eval_p(f, lambda); };
}
inline SPFunction sp_p_power(int k) {
    return [k](const Partition& lambda) { return p_power(k, lambda); };
}
inline SPFunction sp_product(SPFunction a, SPFunction b) {
    return [a, b](const Partition& lambda) { return a(lambda) * b(lambda); };
}

// Spin q-bracket by direct enumeration over strict partitions of size <= N:
// <f> = (sum_{SP} (-1)^{l} f(lambda) q^{|lambda|}) / prod (1-q^m).
QSeries bracket_direct(const SPFunction& f, int N);
inline QSeries bracket_direct(const SymFunc& f, int N) { return bracket_direct(sp_from_symfunc(f), N); }

// Closed form via the recursion <p_k f> = -sum <rho_{i,j}(f)> D^j G_{k+i+1}
// with base <1> = 1. Exact for any f in Lambda; result may mix graded pieces
// if f does.
QuasimodularForm bracket_closed(const SymFunc& f);

// One bracket slot: either the p_{-1} marker or an element of Lambda.
struct Slot {
    bool is_p_minus1 = false;
    SymFunc f; // ignored when is_p_minus1
    static Slot pminus1() { return Slot{true, SymFunc()}; }
    static Slot sym(SymFunc g) { return Slot{false, std::move(g)}; }
    int weight() const { return is_p_minus1 ? 0 : f.weight(); }
};

struct BracketResult {
    QSeries q_expansion;
    std::optional<QuasimodularForm> closed_form;
    int weight = 0; // top weight = sum of slot weights
};

// Connected bracket < f_1 | ... | f_n > over set partitions with Moebius
// weights. At most one p_{-1} slot is allowed (slot 0 by convention).
// Recognition is attempted up to the top weight (mixed-weight for p_{-1}).
BracketResult connected_bracket(const std::vector<Slot>& slots, int N = -1);

// Modified bracket <f>^* = sum_{i>=2, j>=0} <rho*_{i,j}(f)> D^j G_i,
// rho*_{i,j} = rho_{i,j} + delta_{i,2} rho_{0,j+1}.
QuasimodularForm modified_bracket(const SymFunc& f);

// ev applied to the recognized connected bracket.
GrowthPolynomial hbar_bracket(const std::vector<Slot>& slots);

// Leading term: coefficient of x^{k-r+1} in the hbar-bracket divided by
// (2 pi i)^{k-2r+2}, where k is the total weight and r counts the SymFunc
// slots only (a p_{-1} insertion is not counted in r). The result must be a
// plain rational; a pi^2 residue throws.
Rational L_bracket(const std::vector<Slot>& slots);

// Partial sum of q-coefficients a_1 + ... + a_N of the connected bracket.
Rational n_bracket(const std::vector<Slot>& slots, int N);

} // namespace spinsv
