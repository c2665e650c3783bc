#pragma once

#include "spinsv/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace spinsv {

// Bernoulli number B_k with the convention B_1 = -1/2, so that the constant
// term of the Eisenstein series G_k equals -B_k/2k.
inline const Rational& bernoulli(int k) {
    static std::vector<Rational> cache{Rational(1)};
    while ((int)cache.size() <= k) {
        int m = (int)cache.size();
        // sum_{j=0}^{m} C(m+1,j) B_j = 0  =>  B_m = -1/(m+1) * sum_{j<m} C(m+1,j) B_j
        Rational s = 0;
        for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-s / Rational(m + 1));
    }
    return cache[k];
}

// zeta(-k) = -B_{k+1}/(k+1) for k >= 1.
inline Rational zeta_neg(int k) {
    if (k < 1) throw std::domain_error("zeta_neg: k must be positive");
    return -bernoulli(k + 1) / Rational(k + 1);
}

// Polynomial in the formal symbol pi^2 with rational coefficients.
// coeff[j] multiplies (pi^2)^j. Trailing zeros stripped.
class PiSquaredPoly {
  public:
    PiSquaredPoly() = default;
    PiSquaredPoly(Rational constant) {
        if (!constant.is_zero()) coeff_ = {std::move(constant)};
    }
    static PiSquaredPoly pi2_power(int j, Rational c = Rational(1)) {
        PiSquaredPoly p;
        if (!c.is_zero()) {
            p.coeff_.assign(j + 1, Rational(0));
            p.coeff_[j] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return (int)coeff_.size() - 1; }
    Rational coeff(int j) const {
        return j >= 0 && j < (int)coeff_.size() ? coeff_[j] : Rational(0);
    }

    // True if the only nonzero coefficient sits at (pi^2)^j.
    bool is_monomial_of_degree(int j) const {
        if (is_zero()) return j == 0 ? false : false;
        if (degree() != j) return false;
        for (int i = 0; i < j; ++i)
            if (!coeff_[i].is_zero()) return false;
        return true;
    }

    PiSquaredPoly& operator+=(const PiSquaredPoly& o) {
        if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), Rational(0));
        for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
        strip();
        return *this;
    }
    PiSquaredPoly operator-() const {
        PiSquaredPoly r = *this;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }
    PiSquaredPoly& operator-=(const PiSquaredPoly& o) { return *this += -o; }
    friend PiSquaredPoly operator+(PiSquaredPoly a, const PiSquaredPoly& b) { return a += b; }
    friend PiSquaredPoly operator-(PiSquaredPoly a, const PiSquaredPoly& b) { return a -= b; }
    friend PiSquaredPoly operator*(const PiSquaredPoly& a, const PiSquaredPoly& b) {
        PiSquaredPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i)
            for (size_t j = 0; j < b.coeff_.size(); ++j)
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
        r.strip();
        return r;
    }
    PiSquaredPoly& operator*=(const PiSquaredPoly& o) { return *this = *this * o; }

    friend bool operator==(const PiSquaredPoly& a, const PiSquaredPoly& b) {
        return a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const PiSquaredPoly& a, const PiSquaredPoly& b) { return !(a == b); }

    double to_double(double pi2) const {
        double v = 0, p = 1;
        for (const auto& c : coeff_) {
            v += c.to_double() * p;
            p *= pi2;
        }
        return v;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int j = 0; j <= degree(); ++j) {
            if (coeff_[j].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += coeff_[j].str();
            if (j == 1) s += "*pi^2";
            if (j > 1) s += "*pi^" + std::to_string(2 * j);
        }
        return s;
    }

  private:
    void strip() {
        while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
    }
    std::vector<Rational> coeff_;
};

// Element of the ring Q[sqrt(m), i*sqrt(m) : m squarefree].
// terms maps (imaginary?, squarefree radicand m) to the rational coefficient;
// the represented value is sum re_q*sqrt(m) + i * sum im_q*sqrt(m).
// (false,1) is the plain rational part.
class AlgebraicValue {
  public:
    using Key = std::pair<bool, long>; // (imaginary, radicand)

    AlgebraicValue() = default;
    AlgebraicValue(Rational r) { add_term(false, 1, std::move(r)); }
    static AlgebraicValue sqrt_term(long radicand, Rational c = Rational(1)) {
        AlgebraicValue v;
        v.add_root(false, radicand, std::move(c));
        return v;
    }
    static AlgebraicValue i_sqrt_term(long radicand, Rational c = Rational(1)) {
        AlgebraicValue v;
        v.add_root(true, radicand, std::move(c));
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{false, 1});
    }
    Rational rational_part() const {
        auto it = terms_.find(Key{false, 1});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    const std::map<Key, Rational>& terms() const { return terms_; }

    AlgebraicValue conj() const {
        AlgebraicValue r;
        for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, k.first ? -c : c);
        return r;
    }

    AlgebraicValue& operator+=(const AlgebraicValue& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    AlgebraicValue operator-() const {
        AlgebraicValue r;
        for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    AlgebraicValue& operator-=(const AlgebraicValue& o) { return *this += -o; }
    friend AlgebraicValue operator+(AlgebraicValue a, const AlgebraicValue& b) { return a += b; }
    friend AlgebraicValue operator-(AlgebraicValue a, const AlgebraicValue& b) { return a -= b; }

    // sqrt(a)sqrt(b) = sqrt(ab) reduced to squarefree form; i^2 = -1.
    friend AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b) {
        AlgebraicValue r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                bool im = ka.first != kb.first;
                Rational c = ca * cb;
                if (ka.first && kb.first) c = -c;
                r.add_root(im, ka.second * kb.second, std::move(c));
            }
        return r;
    }
    AlgebraicValue& operator*=(const AlgebraicValue& o) { return *this = *this * o; }

    friend bool operator==(const AlgebraicValue& a, const AlgebraicValue& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraicValue& a, const AlgebraicValue& b) { return !(a == b); }

    // Renders like "1", "-2", "+i*sqrt(3)", "1/2+1/2*i*sqrt(3)", "2*i".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            std::string piece;
            Rational a = c;
            bool neg = a.is_negative();
            if (neg) a = -a;
            bool unit = (a == Rational(1));
            std::string root;
            if (k.first) root = "i";
            if (k.second != 1) {
                if (!root.empty()) root += "*";
                root += "sqrt(" + std::to_string(k.second) + ")";
            }
            if (root.empty()) {
                piece = a.str();
            } else if (unit) {
                piece = root;
            } else {
                piece = a.str() + "*" + root;
            }
            if (s.empty())
                s = (neg ? "-" : "") + piece;
            else
                s += (neg ? "-" : "+") + piece;
        }
        return s;
    }

  private:
    void add_term(bool im, long radicand, Rational c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(Key{im, radicand}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    // Reduce the radicand to squarefree form by trial division (radicands stay tiny).
    void add_root(bool im, long radicand, Rational c) {
        if (radicand <= 0) throw std::domain_error("AlgebraicValue: radicand must be positive");
        long sq = 1, rad = radicand;
        for (long p = 2; p * p <= rad; ++p) {
            while (rad % (p * p) == 0) {
                rad /= p * p;
                sq *= p;
            }
        }
        add_term(im, rad, c * Rational(sq));
    }

    std::map<Key, Rational> terms_;
};

} // namespace spinsv
