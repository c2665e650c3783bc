#pragma once

#include "spinsv/partitions.hpp"
#include "spinsv/qmf.hpp"

#include <functional>
#include <map>
#include <vector>

namespace spinsv {

// Sparse polynomial over generators indexed by odd positive integers.
// Used both for Lambda = Q[p1, p3, p5, ...] (generator i = bold p_i, weight
// i+1) and for the h-basis Q[h1, h3, ...] (generator i = h_i, same weights).
// Monomial key: sorted (ascending) list of odd generator indices.
class SymFunc {
  public:
    using Monomial = std::vector<int>;

    SymFunc() = default;
    SymFunc(Rational constant) { add({}, std::move(constant)); }
    static SymFunc gen(int i, Rational c = Rational(1)) {
        if (i < 1 || i % 2 == 0) throw std::domain_error("SymFunc: generator index must be odd >= 1");
        SymFunc f;
        f.add({i}, std::move(c));
        return f;
    }
    static SymFunc monomial(Monomial m, Rational c) {
        std::sort(m.begin(), m.end());
        SymFunc f;
        f.add(m, std::move(c));
        return f;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_term() const {
        auto it = terms_.find({});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational coeff(Monomial m) const {
        std::sort(m.begin(), m.end());
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    static int monomial_weight(const Monomial& m) {
        int w = 0;
        for (int i : m) w += i + 1;
        return w;
    }
    int weight() const {
        int w = 0;
        for (const auto& [m, c] : terms_) w = std::max(w, monomial_weight(m));
        return w;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int w = monomial_weight(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (monomial_weight(m) != w) return false;
        return true;
    }
    SymFunc weight_component(int w) const {
        SymFunc r;
        for (const auto& [m, c] : terms_)
            if (monomial_weight(m) == w) r.add(m, c);
        return r;
    }

    SymFunc& operator+=(const SymFunc& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    SymFunc operator-() const {
        SymFunc r;
        for (const auto& [m, c] : terms_) r.add(m, -c);
        return r;
    }
    SymFunc& operator-=(const SymFunc& o) { return *this += -o; }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        SymFunc r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                std::sort(m.begin(), m.end());
                r.add(m, ca * cb);
            }
        return r;
    }
    friend SymFunc operator*(const Rational& c, const SymFunc& a) {
        SymFunc r;
        for (const auto& [m, x] : a.terms_) r.add(m, c * x);
        return r;
    }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }
    friend bool operator<(const SymFunc& a, const SymFunc& b) {
        return a.terms_ < b.terms_; // arbitrary total order for use as map key
    }

    // d/d(gen_i).
    SymFunc partial(int i) const {
        SymFunc r;
        for (const auto& [m, c] : terms_) {
            int mult = (int)std::count(m.begin(), m.end(), i);
            if (!mult) continue;
            Monomial reduced = m;
            reduced.erase(std::find(reduced.begin(), reduced.end(), i));
            r.add(reduced, c * Rational(mult));
        }
        return r;
    }

    // Substitute each generator by a rational (ring morphism to Q).
    Rational substitute(const std::function<Rational(int)>& value) const {
        Rational out = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i : m) t *= value(i);
            out += t;
        }
        return out;
    }

    std::string str(const char* gname = "p") const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str();
            for (int i : m) s += "*" + std::string(gname) + std::to_string(i);
        }
        return s;
    }

  private:
    void add(const Monomial& m, Rational c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    std::map<Monomial, Rational> terms_;
};

// p_k(lambda) = sum lambda_i^k, valid for any integer k (negative k uses
// exact rational powers). Empty sum is 0.
Rational p_power(int k, const Partition& lambda);

// Evaluation of f in the p-basis at a strict partition:
// bold p_k |-> -zeta(-k)/2 + p_k(lambda).
Rational eval_p(const SymFunc& f, const Partition& lambda);
Rational eval_p_at_empty(const SymFunc& f);

// h_l = -(1/2l) [u^{l+1}] P(u)^l, P(u) = exp(-sum_{k odd} 2 p_k u^{k+1}).
// Homogeneous of weight l+1 (in the p-basis).
const SymFunc& h_element(int l);

// Central character f_l(lambda) for a single odd part l, by the truncated
// series formula; f_1 = p_1.
Rational f_element(int l, const Partition& lambda);

// alpha_l = h_l evaluated at the empty partition.
Rational alpha_const(int l);

// rho_{i,j} = sum over odd rho with l(rho)=j, |rho|=i+j of d^j/d p_rho / Aut(rho).
SymFunc rho_op(int i, int j, const SymFunc& f);

// The weight -2 operator with 2D = +d/dp1 + sum (l1+l2) p_{l1+l2-1} d^2/dp_{l1}dp_{l2}.
// (The +d/dp1 sign is forced by frak_d<f> = <D f> together with <p1> = -G2.)
SymFunc D_op(const SymFunc& f);

// <f>_hbar by evaluation at the empty partition:
// (2 pi i)^k / hbar^k * sum_j (D^j f)(empty) hbar^j / (j! (2 pi i)^{2j});
// f must be homogeneous of even weight k.
GrowthPolynomial exp_D_at_empty(const SymFunc& f);

// Conversions between the p-basis and the h-basis of Lambda.
SymFunc p_to_h(const SymFunc& f_in_p);
SymFunc h_to_p(const SymFunc& f_in_h);

// Substitution h_l -> alpha_l on an h-basis element.
Rational substitute_alpha(const SymFunc& f_in_h);

} // namespace spinsv
