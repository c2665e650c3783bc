#include "spinsv/qmf.hpp"

#include <algorithm>

namespace spinsv {

bool recognize_in_span(const QSeries& f, const std::vector<QuasimodularForm::Monomial>& basis,
                       QuasimodularForm& out) {
    const int n = (int)basis.size();
    const int rows = f.order() + 1;
    if (rows < n) throw std::domain_error("recognize: truncation order too small for the basis");

    // Column j = q-expansion of basis monomial j.
    std::vector<QSeries> cols;
    cols.reserve(n);
    for (const auto& m : basis)
        cols.push_back(QuasimodularForm::monomial(m, Rational(1)).expand(f.order()));

    // Exact Gaussian elimination on the augmented (rows x n | 1) system.
    std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(n + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < n; ++j) A[i][j] = cols[j][i];
        A[i][n] = f[i];
    }
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int c = 0; c < n && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!A[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(A[r], A[p]);
        Rational inv = Rational(1) / A[r][c];
        for (int j = c; j <= n; ++j) A[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            Rational factor = A[i][c];
            for (int j = c; j <= n; ++j) A[i][j] -= factor * A[r][j];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    // Any nonzero residual row means the series is outside the span.
    for (int i = r; i < rows; ++i)
        if (!A[i][n].is_zero()) return false;
    // Free columns get coefficient zero; with a q-expansion basis the columns
    // are independent, so this does not occur in practice.
    std::vector<Rational> x(n, Rational(0));
    for (int i = 0; i < r; ++i) x[pivot_col_of_row[i]] = A[i][n];

    QuasimodularForm g;
    for (int j = 0; j < n; ++j)
        if (!x[j].is_zero()) g += QuasimodularForm::monomial(basis[j], x[j]);
    // Safety: re-expand and compare through the full truncation order.
    if (g.expand(f.order()) != f) return false;
    out = g;
    return true;
}

QuasimodularForm recognize(const QSeries& f, int k) {
    auto basis = qmf_monomials_of_weight(k);
    QuasimodularForm out;
    if (!recognize_in_span(f, basis, out))
        throw std::domain_error("recognize: not quasimodular of weight " + std::to_string(k));
    return out;
}

QuasimodularForm recognize_up_to_weight(const QSeries& f, int k) {
    std::vector<QuasimodularForm::Monomial> basis;
    for (int w = 0; w <= k; w += 2)
        for (const auto& m : qmf_monomials_of_weight(w)) basis.push_back(m);
    QuasimodularForm out;
    if (!recognize_in_span(f, basis, out))
        throw std::domain_error("recognize: not quasimodular of weight <= " + std::to_string(k));
    return out;
}

const QuasimodularForm& eisenstein_form(int k) {
    static std::map<int, QuasimodularForm> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    QuasimodularForm f;
    if (k == 2 || k == 4 || k == 6) {
        f = QuasimodularForm::generator(k);
    } else {
        int dim = (int)qmf_monomials_of_weight(k).size();
        f = recognize(eisenstein(k, dim + 8), k);
    }
    return cache.emplace(k, std::move(f)).first->second;
}

namespace {
// DG2 = -2 G2^2 + 5/6 G4, DG4 = -8 G2 G4 + 7/10 G6, DG6 = -12 G2 G6 + 400/7 G4^2.
const QuasimodularForm& D_of_generator(int idx) {
    static std::vector<QuasimodularForm> d = [] {
        std::vector<QuasimodularForm> v(3);
        QuasimodularForm G2 = QuasimodularForm::generator(2);
        QuasimodularForm G4 = QuasimodularForm::generator(4);
        QuasimodularForm G6 = QuasimodularForm::generator(6);
        v[0] = Rat(-2, 1) * (G2 * G2) + Rat(5, 6) * G4;
        v[1] = Rat(-8, 1) * (G2 * G4) + Rat(7, 10) * G6;
        v[2] = Rat(-12, 1) * (G2 * G6) + Rat(400, 7) * (G4 * G4);
        return v;
    }();
    return d[idx];
}
} // namespace

QuasimodularForm D_form(const QuasimodularForm& f) {
    QuasimodularForm out;
    for (const auto& [m, c] : f.terms()) {
        for (int g = 0; g < 3; ++g) {
            if (m[g] == 0) continue;
            auto reduced = m;
            reduced[g] -= 1;
            out += (c * Rational(m[g])) *
                   (QuasimodularForm::monomial(reduced, Rational(1)) * D_of_generator(g));
        }
    }
    return out;
}

QuasimodularForm D_form_pow(const QuasimodularForm& f, int j) {
    QuasimodularForm r = f;
    while (j-- > 0) r = D_form(r);
    return r;
}

QuasimodularForm frak_d(const QuasimodularForm& f) {
    QuasimodularForm out;
    for (const auto& [m, c] : f.terms()) {
        if (m[0] == 0) continue;
        auto reduced = m;
        reduced[0] -= 1;
        out += QuasimodularForm::monomial(reduced, c * Rational(m[0]) * Rat(-1, 2));
    }
    return out;
}

namespace {
const GrowthPolynomial& ev_of_generator(int idx) {
    static std::vector<GrowthPolynomial> e = [] {
        std::vector<GrowthPolynomial> v(3);
        // ev[G2] = (pi^2/6) x^2 - (1/2) x
        v[0] = GrowthPolynomial::term(2, PiSquaredPoly::pi2_power(1, Rat(1, 6))) +
               GrowthPolynomial::term(1, PiSquaredPoly(Rat(-1, 2)));
        // ev[G_k] = a_0(G_k) (2 pi i)^k x^k with (2 pi i)^k = (-4 pi^2)^{k/2}
        auto modular = [](int k) {
            Rational a0 = -bernoulli(k) / Rational(2 * k);
            Rational scale = rat_pow(Rational(-4), k / 2);
            return GrowthPolynomial::term(k, PiSquaredPoly::pi2_power(k / 2, a0 * scale));
        };
        v[1] = modular(4);
        v[2] = modular(6);
        return v;
    }();
    return e[idx];
}
} // namespace

GrowthPolynomial ev(const QuasimodularForm& f) {
    GrowthPolynomial out;
    for (const auto& [m, c] : f.terms()) {
        GrowthPolynomial t{PiSquaredPoly(c)};
        for (int g = 0; g < 3; ++g)
            for (int e = 0; e < m[g]; ++e) t *= ev_of_generator(g);
        out += t;
    }
    return out;
}

GrowthPolynomial ev_of_DjGi(int i, int j) {
    GrowthPolynomial g = ev(eisenstein_form(i));
    while (j-- > 0) g = g.minus_dh();
    return g;
}

} // namespace spinsv
