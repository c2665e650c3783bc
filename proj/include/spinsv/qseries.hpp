#pragma once

#include "spinsv/exact.hpp"

#include <vector>

namespace spinsv {

// Truncated q-expansion with exact rational coefficients, indexed 0..order.
class QSeries {
  public:
    QSeries() : coeff_(1, Rational(0)) {}
    explicit QSeries(int order) : coeff_(order + 1, Rational(0)) {}
    QSeries(std::vector<Rational> c) : coeff_(std::move(c)) {
        if (coeff_.empty()) coeff_.push_back(Rational(0));
    }

    int order() const { return (int)coeff_.size() - 1; }
    const Rational& operator[](int n) const { return coeff_[n]; }
    Rational& operator[](int n) { return coeff_[n]; }
    const std::vector<Rational>& coeffs() const { return coeff_; }

    bool is_zero() const {
        for (const auto& c : coeff_)
            if (!c.is_zero()) return false;
        return true;
    }

    QSeries truncated(int order) const {
        std::vector<Rational> c(coeff_.begin(), coeff_.begin() + std::min(order + 1, (int)coeff_.size()));
        c.resize(order + 1, Rational(0)); // only extends with zeros if shorter; callers keep orders consistent
        return QSeries(std::move(c));
    }

    // Arithmetic truncates to the smaller order.
    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        int n = std::min(a.order(), b.order());
        QSeries r(n);
        for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        int n = std::min(a.order(), b.order());
        QSeries r(n);
        for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
        return r;
    }
    QSeries operator-() const {
        QSeries r = *this;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        int n = std::min(a.order(), b.order());
        QSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j + i <= n; ++j)
                if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
        }
        return r;
    }
    friend QSeries operator*(const Rational& c, const QSeries& a) {
        QSeries r = a;
        for (auto& x : r.coeff_) x *= c;
        return r;
    }
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    // Division; divisor must have nonzero constant term.
    friend QSeries operator/(const QSeries& a, const QSeries& b) {
        if (b[0].is_zero()) throw std::domain_error("QSeries: division by series with zero constant term");
        int n = std::min(a.order(), b.order());
        QSeries r(n);
        for (int i = 0; i <= n; ++i) {
            Rational s = a[i];
            for (int j = 0; j < i; ++j)
                if (!r[j].is_zero()) s -= r[j] * b[i - j];
            r[i] = s / b[0];
        }
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        int n = std::max(a.order(), b.order());
        for (int i = 0; i <= n; ++i) {
            Rational ca = i <= a.order() ? a[i] : Rational(0);
            Rational cb = i <= b.order() ? b[i] : Rational(0);
            if (ca != cb) return false;
        }
        return true;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    bool agrees_with(const QSeries& o, int through) const {
        for (int i = 0; i <= through; ++i)
            if ((*this)[i] != o[i]) return false;
        return true;
    }

  private:
    std::vector<Rational> coeff_;
};

// D = q d/dq.
inline QSeries q_derivative(const QSeries& f) {
    QSeries r(f.order());
    for (int n = 0; n <= f.order(); ++n) r[n] = Rational(n) * f[n];
    return r;
}

// Eisenstein series G_k = -B_k/2k + sum_{m,r>=1} m^{k-1} q^{mr}, truncated at q^N.
inline QSeries eisenstein(int k, int N) {
    if (k < 2 || k % 2) throw std::domain_error("eisenstein: weight must be even and >= 2");
    QSeries g(N);
    g[0] = -bernoulli(k) / Rational(2 * k);
    for (int m = 1; m <= N; ++m) {
        Integer mk = int_pow(m, k - 1);
        for (int r = 1; m * r <= N; ++r) g[m * r] += Rational(mk);
    }
    return g;
}

// prod_{m>=1} (1 - q^m), truncated at q^N.
inline QSeries euler_product(int N) {
    QSeries p(N);
    p[0] = 1;
    for (int m = 1; m <= N; ++m) {
        QSeries f(N);
        f[0] = 1;
        f[m] = -1;
        p *= f;
    }
    return p;
}

} // namespace spinsv
