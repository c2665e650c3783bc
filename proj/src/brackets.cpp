#include "spinsv/brackets.hpp"

namespace spinsv {

QSeries bracket_direct(const SPFunction& f, int N) {
    QSeries num(N);
    for (const auto& lambda : strict_partitions_up_to(N)) {
        Rational v = f(lambda);
        if (v.is_zero()) continue;
        if (lambda.length() % 2) v = -v;
        num[(int)lambda.size()] += v;
    }
    return num / euler_product(N);
}

namespace {

QuasimodularForm bracket_closed_monomial(const SymFunc::Monomial& mono) {
    static std::map<SymFunc::Monomial, QuasimodularForm> cache;
    auto it = cache.find(mono);
    if (it != cache.end()) return it->second;
    QuasimodularForm out;
    if (mono.empty()) {
        out = QuasimodularForm(Rational(1));
    } else {
        // Split off the largest generator: mono = p_k * rest.
        int k = mono.back();
        SymFunc::Monomial rest_m(mono.begin(), mono.end() - 1);
        SymFunc rest = SymFunc::monomial(rest_m, Rational(1));
        int wrest = SymFunc::monomial_weight(rest_m);
        // <p_k f> = -sum_{i even, j>=0} <rho_{i,j}(f)> D^j G_{k+i+1};
        // rho_{i,j} lowers the weight by i+2j, and rho_{i,0} = 0 for i > 0.
        for (int i = 0; i <= wrest; i += 2) {
            for (int j = 0; i + 2 * j <= wrest; ++j) {
                if (j == 0 && i != 0) continue;
                SymFunc g = rho_op(i, j, rest);
                if (g.is_zero()) continue;
                out -= bracket_closed(g) * D_form_pow(eisenstein_form(k + i + 1), j);
            }
        }
    }
    return cache.emplace(mono, std::move(out)).first->second;
}

} // namespace

QuasimodularForm bracket_closed(const SymFunc& f) {
    QuasimodularForm out;
    for (const auto& [m, c] : f.terms()) out += c * bracket_closed_monomial(m);
    return out;
}

namespace {

// Enough q-coefficients to recognize a mixed form of weight <= k with margin.
int recognition_order(int k) {
    int dim = 0;
    for (int w = 0; w <= k; w += 2) dim += (int)qmf_monomials_of_weight(w).size();
    return dim + 8;
}

SPFunction slot_product(const std::vector<Slot>& slots, const std::vector<int>& which) {
    // Product over the chosen slots; p_{-1} enters as the raw power sum.
    std::vector<Slot> chosen;
    for (int i : which) chosen.push_back(slots[i]);
    return [chosen](const Partition& lambda) {
        Rational v = 1;
        for (const auto& s : chosen) {
            if (s.is_p_minus1)
                v *= p_power(-1, lambda);
            else
                v *= eval_p(s.f, lambda);
        }
        return v;
    };
}

} // namespace

BracketResult connected_bracket(const std::vector<Slot>& slots, int N) {
    int n = (int)slots.size();
    if (n < 1) throw std::domain_error("connected_bracket: need at least one slot");
    int npm = 0;
    for (const auto& s : slots) npm += s.is_p_minus1 ? 1 : 0;
    if (npm > 1) throw std::domain_error("connected_bracket: at most one p_{-1} slot");
    if (npm == 1 && !slots[0].is_p_minus1)
        throw std::domain_error("connected_bracket: p_{-1} must be slot 0");

    int k = 0;
    for (const auto& s : slots) k += s.weight();
    int order = std::max(N, recognition_order(k));

    // Plain brackets of block products, memoized per block (as index sets).
    std::map<std::vector<int>, QSeries> block_cache;
    auto block_bracket = [&](std::vector<int> idx) -> const QSeries& {
        auto it = block_cache.find(idx);
        if (it != block_cache.end()) return it->second;
        QSeries b = bracket_direct(slot_product(slots, idx), order);
        return block_cache.emplace(std::move(idx), std::move(b)).first->second;
    };

    QSeries total(order);
    for (const auto& [sp, mu] : set_partitions_with_mobius(n)) {
        QSeries prod(order);
        prod[0] = 1;
        for (const auto& block : sp.blocks) prod *= block_bracket(block);
        total += Rational(mu) * prod;
    }

    BracketResult res;
    res.q_expansion = total;
    res.weight = k;
    if (npm == 0) {
        // Lambda slots: the closed-form route is available and exact.
        SymFunc prod{Rational(1)};
        for (const auto& s : slots) prod *= s.f;
        // Connected = Moebius combination of closed plain brackets.
        QuasimodularForm cf;
        for (const auto& [sp, mu] : set_partitions_with_mobius(n)) {
            QuasimodularForm term{Rational(Integer(mu))};
            for (const auto& block : sp.blocks) {
                SymFunc bf{Rational(1)};
                for (int i : block) bf *= slots[i].f;
                term *= bracket_closed(bf);
            }
            cf += term;
        }
        res.closed_form = cf;
    } else {
        try {
            res.closed_form = recognize_up_to_weight(total, k);
        } catch (const std::domain_error&) {
            throw std::domain_error("p_{-1} connected bracket not quasimodular");
        }
    }
    return res;
}

QuasimodularForm modified_bracket(const SymFunc& f) {
    int k = f.weight();
    QuasimodularForm out;
    for (int i = 2; i <= k + 2; i += 2) {
        for (int j = 0; i + 2 * j <= k + 2; ++j) {
            SymFunc g = rho_op(i, j, f);
            if (i == 2) g += rho_op(0, j + 1, f); // rho*_{2,j} = rho_{2,j} + rho_{0,j+1}
            if (g.is_zero()) continue;
            out += bracket_closed(g) * D_form_pow(eisenstein_form(i), j);
        }
    }
    return out;
}

GrowthPolynomial hbar_bracket(const std::vector<Slot>& slots) {
    BracketResult r = connected_bracket(slots);
    return ev(*r.closed_form);
}

Rational L_bracket(const std::vector<Slot>& slots) {
    int k = 0, r = 0;
    for (const auto& s : slots) {
        k += s.weight();
        if (!s.is_p_minus1) ++r;
    }
    GrowthPolynomial g = hbar_bracket(slots);
    int deg = k - r + 1;
    if (g.degree() > deg)
        throw std::domain_error("L_bracket: growth degree exceeds k-r+1");
    PiSquaredPoly lead = g.coeff(deg);
    if (lead.is_zero()) return Rational(0);
    int half = (k - 2 * r + 2) / 2;
    if ((k - 2 * r + 2) % 2) throw std::domain_error("L_bracket: odd power of 2 pi i");
    if (half >= 0) {
        if (!lead.is_monomial_of_degree(half))
            throw std::domain_error("L_bracket: pi^2 residue nonzero");
        return lead.coeff(half) / rat_pow(Rational(-4), half);
    }
    // Negative power: multiply by (-4 pi^2)^{-half}; pi-part must then vanish.
    PiSquaredPoly scaled = lead * PiSquaredPoly::pi2_power(-half, rat_pow(Rational(-4), -half));
    if (!scaled.is_monomial_of_degree(0))
        throw std::domain_error("L_bracket: pi^2 residue nonzero");
    return scaled.coeff(0);
}

Rational n_bracket(const std::vector<Slot>& slots, int N) {
    BracketResult r = connected_bracket(slots, N);
    Rational s = 0;
    for (int n = 1; n <= N; ++n) s += r.q_expansion[n];
    return s;
}

} // namespace spinsv
