#include "spinsv/symfun.hpp"

namespace spinsv {

Rational p_power(int k, const Partition& lambda) {
    Rational s = 0;
    for (int part : lambda.parts()) {
        if (k >= 0)
            s += Rational(int_pow(part, k));
        else
            s += Rational(Integer(1), int_pow(part, -k));
    }
    return s;
}

Rational eval_p(const SymFunc& f, const Partition& lambda) {
    Rational out = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational t = c;
        for (int i : m) t *= -zeta_neg(i) / Rational(2) + p_power(i, lambda);
        out += t;
    }
    return out;
}

Rational eval_p_at_empty(const SymFunc& f) { return eval_p(f, Partition{}); }

namespace {

// Truncated power series with SymFunc coefficients, for the u- and t-series
// defining h_l and f_l.
template <class Coeff>
std::vector<Coeff> series_mul(const std::vector<Coeff>& a, const std::vector<Coeff>& b, int ord) {
    std::vector<Coeff> r(ord + 1);
    for (int i = 0; i <= ord; ++i)
        for (int j = 0; i + j <= ord; ++j) r[i + j] += a[i] * b[j];
    return r;
}

template <class Coeff>
std::vector<Coeff> series_exp(const std::vector<Coeff>& x, int ord) {
    // x must have zero constant term.
    std::vector<Coeff> r(ord + 1), pw(ord + 1);
    r[0] = Coeff(Rational(1));
    pw[0] = Coeff(Rational(1));
    Rational fact = 1;
    for (int j = 1; j <= ord; ++j) {
        pw = series_mul(pw, x, ord);
        fact *= Rational(j);
        Rational inv = Rational(1) / fact;
        for (int i = 0; i <= ord; ++i) r[i] += inv * pw[i];
    }
    return r;
}

template <class Coeff>
std::vector<Coeff> series_pow(std::vector<Coeff> base, int e, int ord) {
    std::vector<Coeff> r(ord + 1);
    r[0] = Coeff(Rational(1));
    while (e > 0) {
        if (e & 1) r = series_mul(r, base, ord);
        base = series_mul(base, base, ord);
        e >>= 1;
    }
    return r;
}

} // namespace

const SymFunc& h_element(int l) {
    static std::map<int, SymFunc> cache;
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
    if (l < 1 || l % 2 == 0) throw std::domain_error("h_element: l must be odd >= 1");
    int ord = l + 1;
    // P(u) = exp(-sum_{k odd} 2 p_k u^{k+1})
    std::vector<SymFunc> x(ord + 1);
    for (int k = 1; k + 1 <= ord; k += 2) x[k + 1] = SymFunc::gen(k, Rational(-2));
    auto P = series_exp(x, ord);
    auto Pl = series_pow(P, l, ord);
    SymFunc h = Rat(-1, 2 * l) * Pl[l + 1];
    return cache.emplace(l, std::move(h)).first->second;
}

Rational f_element(int l, const Partition& lambda) {
    if (l < 1 || l % 2 == 0) throw std::domain_error("f_element: l must be odd >= 1");
    int ord = l + 1;
    // prod_{j=1}^{l-1} (1 - j t)
    std::vector<Rational> poly(ord + 1, Rational(0));
    poly[0] = 1;
    for (int j = 1; j <= l - 1; ++j) {
        std::vector<Rational> next(ord + 1, Rational(0));
        for (int i = 0; i <= ord; ++i) {
            next[i] += poly[i];
            if (i + 1 <= ord) next[i + 1] -= Rational(j) * poly[i];
        }
        poly = next;
    }
    // exp( sum_{k odd} (2/k) p_k(lambda) t^k (1 - (1 - l t)^{-k}) )
    std::vector<Rational> expo(ord + 1, Rational(0));
    for (int k = 1; k <= ord; k += 2) {
        Rational pk = p_power(k, lambda);
        if (pk.is_zero()) continue;
        // (1 - l t)^{-k} = sum_j C(k+j-1, j) l^j t^j
        for (int j = 1; k + j <= ord; ++j) {
            Rational coef = Rational(binomial(k + j - 1, j)) * Rational(int_pow(l, j));
            expo[k + j] -= Rat(2, 1) / Rational(k) * pk * coef;
        }
    }
    std::vector<Rational> expanded(ord + 1, Rational(0));
    {
        std::vector<Rational> r(ord + 1, Rational(0)), pw(ord + 1, Rational(0));
        r[0] = 1;
        pw[0] = 1;
        Rational fact = 1;
        for (int j = 1; j <= ord; ++j) {
            std::vector<Rational> npw(ord + 1, Rational(0));
            for (int a = 0; a <= ord; ++a)
                for (int b = 0; a + b <= ord; ++b) npw[a + b] += pw[a] * expo[b];
            pw = npw;
            fact *= Rational(j);
            for (int a = 0; a <= ord; ++a) r[a] += pw[a] / fact;
        }
        expanded = r;
    }
    Rational coeff = 0;
    for (int i = 0; i <= ord; ++i) coeff += poly[i] * expanded[ord - i];
    // l * f_l = -(1/2l) [t^{l+1}] (...)
    return Rat(-1, 2 * l) * coeff / Rational(l);
}

Rational alpha_const(int l) {
    static std::map<int, Rational> cache;
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
    return cache.emplace(l, eval_p_at_empty(h_element(l))).first->second;
}

SymFunc rho_op(int i, int j, const SymFunc& f) {
    if (i % 2) throw std::domain_error("rho_op: i must be even");
    if (i == 0 && j == 0) return f;
    if (j == 0) return SymFunc();
    SymFunc out;
    for (const auto& rho : enumerate_partitions(PartitionKind::Odd, i + j)) {
        if (rho.length() != j) continue;
        SymFunc g = f;
        for (int part : rho.parts()) g = g.partial(part);
        if (g.is_zero()) continue;
        out += (Rational(1) / Rational(rho.aut_factor())) * g;
    }
    return out;
}

SymFunc D_op(const SymFunc& f) {
    SymFunc out = f.partial(1);
    // sum over odd l1, l2 of (l1+l2) p_{l1+l2-1} d^2 f / dp_{l1} dp_{l2}
    int w = f.weight();
    for (int l1 = 1; l1 <= w; l1 += 2) {
        SymFunc d1 = f.partial(l1);
        if (d1.is_zero()) continue;
        for (int l2 = 1; l2 <= w; l2 += 2) {
            SymFunc d2 = d1.partial(l2);
            if (d2.is_zero()) continue;
            out += Rational(l1 + l2) * (SymFunc::gen(l1 + l2 - 1) * d2);
        }
    }
    return Rat(1, 2) * out;
}

GrowthPolynomial exp_D_at_empty(const SymFunc& f) {
    if (!f.is_homogeneous())
        throw std::domain_error("exp_D_at_empty: f must be homogeneous");
    int k = f.weight();
    if (k % 2) throw std::domain_error("exp_D_at_empty: odd weight");
    GrowthPolynomial out;
    SymFunc g = f;
    Rational jfact = 1;
    for (int j = 0; 2 * j <= k; ++j) {
        if (j > 0) {
            g = D_op(g);
            jfact *= Rational(j);
        }
        Rational v = eval_p_at_empty(g);
        if (!v.is_zero()) {
            // (2 pi i)^{k - 2j} = (-4 pi^2)^{(k-2j)/2}, exact power of pi^2
            int half = (k - 2 * j) / 2;
            Rational c = v / jfact * rat_pow(Rational(-4), half);
            out += GrowthPolynomial::term(k - j, PiSquaredPoly::pi2_power(half, c));
        }
        if (g.is_zero()) break;
    }
    return out;
}

namespace {
// p_l expressed in the h-basis, computed triangularly:
// p_l = h_l - (h_element(l) - p_l) with the correction converted recursively.
const SymFunc& p_gen_in_h(int l) {
    static std::map<int, SymFunc> cache;
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
    SymFunc corr = h_element(l) - SymFunc::gen(l); // products of p_j with j < l
    SymFunc res = SymFunc::gen(l);                 // key: h_l
    for (const auto& [m, c] : corr.terms()) {
        SymFunc t{c};
        for (int j : m) t *= p_gen_in_h(j);
        res -= t;
    }
    return cache.emplace(l, std::move(res)).first->second;
}
} // namespace

SymFunc p_to_h(const SymFunc& f_in_p) {
    SymFunc out;
    for (const auto& [m, c] : f_in_p.terms()) {
        SymFunc t{c};
        for (int i : m) t *= p_gen_in_h(i);
        out += t;
    }
    return out;
}

SymFunc h_to_p(const SymFunc& f_in_h) {
    SymFunc out;
    for (const auto& [m, c] : f_in_h.terms()) {
        SymFunc t{c};
        for (int i : m) t *= h_element(i);
        out += t;
    }
    return out;
}

Rational substitute_alpha(const SymFunc& f_in_h) {
    return f_in_h.substitute([](int l) { return alpha_const(l); });
}

} // namespace spinsv
