#pragma once

#include "spinsv/qseries.hpp"

#include <array>
#include <map>
#include <vector>

namespace spinsv {

// Polynomial in 1/h over Q[pi^2]: maps degree j (power of 1/h) to a PiSquaredPoly.
class GrowthPolynomial {
  public:
    GrowthPolynomial() = default;
    GrowthPolynomial(PiSquaredPoly constant) {
        if (!constant.is_zero()) coeff_[0] = std::move(constant);
    }
    static GrowthPolynomial term(int j, PiSquaredPoly c) {
        GrowthPolynomial g;
        if (!c.is_zero()) g.coeff_[j] = std::move(c);
        return g;
    }

    const std::map<int, PiSquaredPoly>& coeffs() const { return coeff_; }
    PiSquaredPoly coeff(int j) const {
        auto it = coeff_.find(j);
        return it == coeff_.end() ? PiSquaredPoly() : it->second;
    }
    int degree() const { return coeff_.empty() ? 0 : coeff_.rbegin()->first; }
    bool is_zero() const { return coeff_.empty(); }

    GrowthPolynomial& operator+=(const GrowthPolynomial& o) {
        for (const auto& [j, c] : o.coeff_) add(j, c);
        return *this;
    }
    GrowthPolynomial operator-() const {
        GrowthPolynomial r;
        for (const auto& [j, c] : coeff_) r.coeff_[j] = -c;
        return r;
    }
    GrowthPolynomial& operator-=(const GrowthPolynomial& o) { return *this += -o; }
    friend GrowthPolynomial operator+(GrowthPolynomial a, const GrowthPolynomial& b) { return a += b; }
    friend GrowthPolynomial operator-(GrowthPolynomial a, const GrowthPolynomial& b) { return a -= b; }
    friend GrowthPolynomial operator*(const GrowthPolynomial& a, const GrowthPolynomial& b) {
        GrowthPolynomial r;
        for (const auto& [i, ci] : a.coeff_)
            for (const auto& [j, cj] : b.coeff_) r.add(i + j, ci * cj);
        return r;
    }
    GrowthPolynomial& operator*=(const GrowthPolynomial& o) { return *this = *this * o; }

    // ev[DF] = -d/dh ev[F]; on x^j (x = 1/h) this is j * x^{j+1}.
    GrowthPolynomial minus_dh() const {
        GrowthPolynomial r;
        for (const auto& [j, c] : coeff_) {
            PiSquaredPoly scaled = c * PiSquaredPoly(Rational(j));
            r.add(j + 1, scaled);
        }
        return r;
    }

    friend bool operator==(const GrowthPolynomial& a, const GrowthPolynomial& b) {
        return a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const GrowthPolynomial& a, const GrowthPolynomial& b) { return !(a == b); }

    // Numeric evaluation at h (diagnostics only).
    double to_double(double h, double pi2) const {
        double v = 0;
        for (const auto& [j, c] : coeff_) {
            double x = 1;
            for (int t = 0; t < j; ++t) x /= h;
            v += c.to_double(pi2) * x;
        }
        return v;
    }

    std::string str() const {
        if (coeff_.empty()) return "0";
        std::string s;
        for (const auto& [j, c] : coeff_) {
            if (!s.empty()) s += "  +  ";
            s += "(" + c.str() + ")";
            if (j > 0) s += "*x^" + std::to_string(j);
        }
        return s;
    }

  private:
    void add(int j, const PiSquaredPoly& c) {
        auto [it, inserted] = coeff_.emplace(j, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeff_.erase(it);
        }
    }
    std::map<int, PiSquaredPoly> coeff_;
};

// Element of Q[G2,G4,G6]. Monomial key (a,b,c) means G2^a G4^b G6^c of
// weight 2a+4b+6c. Mixed weights are allowed (p_{-1} brackets produce them);
// weight() reports the top weight.
class QuasimodularForm {
  public:
    using Monomial = std::array<int, 3>;

    QuasimodularForm() = default;
    QuasimodularForm(Rational constant) { add({0, 0, 0}, std::move(constant)); }
    static QuasimodularForm generator(int k) {
        QuasimodularForm f;
        if (k == 2) f.add({1, 0, 0}, 1);
        else if (k == 4) f.add({0, 1, 0}, 1);
        else if (k == 6) f.add({0, 0, 1}, 1);
        else throw std::domain_error("QuasimodularForm: generator weight must be 2, 4 or 6");
        return f;
    }
    static QuasimodularForm monomial(Monomial m, Rational c) {
        QuasimodularForm f;
        f.add(m, std::move(c));
        return f;
    }

    static int monomial_weight(const Monomial& m) { return 2 * m[0] + 4 * m[1] + 6 * m[2]; }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int weight() const {
        int w = 0;
        for (const auto& [m, c] : terms_) w = std::max(w, monomial_weight(m));
        return w;
    }
    bool is_pure_weight() const {
        if (terms_.empty()) return true;
        int w = monomial_weight(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (monomial_weight(m) != w) return false;
        return true;
    }
    QuasimodularForm weight_component(int w) const {
        QuasimodularForm r;
        for (const auto& [m, c] : terms_)
            if (monomial_weight(m) == w) r.add(m, c);
        return r;
    }
    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    QuasimodularForm& operator+=(const QuasimodularForm& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    QuasimodularForm operator-() const {
        QuasimodularForm r;
        for (const auto& [m, c] : terms_) r.add(m, -c);
        return r;
    }
    QuasimodularForm& operator-=(const QuasimodularForm& o) { return *this += -o; }
    friend QuasimodularForm operator+(QuasimodularForm a, const QuasimodularForm& b) { return a += b; }
    friend QuasimodularForm operator-(QuasimodularForm a, const QuasimodularForm& b) { return a -= b; }
    friend QuasimodularForm operator*(const QuasimodularForm& a, const QuasimodularForm& b) {
        QuasimodularForm r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
        return r;
    }
    friend QuasimodularForm operator*(const Rational& c, const QuasimodularForm& a) {
        QuasimodularForm r;
        for (const auto& [m, x] : a.terms_) r.add(m, c * x);
        return r;
    }
    QuasimodularForm& operator*=(const QuasimodularForm& o) { return *this = *this * o; }

    friend bool operator==(const QuasimodularForm& a, const QuasimodularForm& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QuasimodularForm& a, const QuasimodularForm& b) { return !(a == b); }

    QSeries expand(int N) const;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str();
            if (m[0]) s += "*G2" + (m[0] > 1 ? "^" + std::to_string(m[0]) : "");
            if (m[1]) s += "*G4" + (m[1] > 1 ? "^" + std::to_string(m[1]) : "");
            if (m[2]) s += "*G6" + (m[2] > 1 ? "^" + std::to_string(m[2]) : "");
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

namespace detail {
inline const QSeries& generator_series(int idx /*0,1,2 for G2,G4,G6*/, int N) {
    static std::map<std::pair<int, int>, QSeries> cache;
    auto key = std::make_pair(idx, N);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, eisenstein(2 * idx + 2, N)).first;
    return it->second;
}
} // namespace detail

inline QSeries QuasimodularForm::expand(int N) const {
    QSeries out(N);
    for (const auto& [m, c] : terms_) {
        QSeries t(N);
        t[0] = c;
        for (int g = 0; g < 3; ++g)
            for (int e = 0; e < m[g]; ++e) t *= detail::generator_series(g, N);
        out += t;
    }
    return out;
}

// All monomials (a,b,c) with 2a+4b+6c = k.
inline std::vector<QuasimodularForm::Monomial> qmf_monomials_of_weight(int k) {
    std::vector<QuasimodularForm::Monomial> out;
    if (k < 0 || k % 2) return out;
    for (int c = 0; 6 * c <= k; ++c)
        for (int b = 0; 4 * b + 6 * c <= k; ++b) {
            int rem = k - 4 * b - 6 * c;
            out.push_back({rem / 2, b, c});
        }
    return out;
}

// Inverts the q-expansion map on the span of the given monomials by exact
// Gaussian elimination; requires order >= #monomials + margin and checks
// every remaining coefficient. Returns false if the series is not in the span.
bool recognize_in_span(const QSeries& f, const std::vector<QuasimodularForm::Monomial>& basis,
                       QuasimodularForm& out);

// Recognition at pure weight k (margin 8 enforced by the caller's series length).
QuasimodularForm recognize(const QSeries& f, int k);

// Recognition allowing every even weight <= k (p_{-1} brackets are mixed-weight).
QuasimodularForm recognize_up_to_weight(const QSeries& f, int k);

// Eisenstein series of arbitrary even weight k >= 2 as an element of
// Q[G2,G4,G6] (recognized once and cached).
const QuasimodularForm& eisenstein_form(int k);

// D = q d/dq on forms, via the Ramanujan-type derivations of the generators.
QuasimodularForm D_form(const QuasimodularForm& f);
QuasimodularForm D_form_pow(const QuasimodularForm& f, int j);

// The derivation with frak_d(G2) = -1/2 and frak_d = 0 on G4, G6.
QuasimodularForm frak_d(const QuasimodularForm& f);

// Growth polynomial ev[F](h) as a polynomial in x = 1/h over Q[pi^2].
// ev[G2] = (pi^2/6) x^2 - x/2, ev[G_k] = a_0(G_k) (-4 pi^2)^{k/2} x^k for k = 4, 6.
GrowthPolynomial ev(const QuasimodularForm& f);

// (-d/dh)^j applied to ev[G_i].
GrowthPolynomial ev_of_DjGi(int i, int j);

} // namespace spinsv
