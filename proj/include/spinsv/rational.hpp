#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinsv {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms, denominator > 0.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rational parse(const std::string& s);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Serialized as "num/den", with "/den" omitted for integers.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Integer value; throws unless denominator is 1.
    Integer to_integer() const {
        if (den_ != 1) throw std::domain_error("Rational: not an integer: " + str());
        return num_;
    }

  private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(num_ < 0 ? Integer(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

inline Rational Rat(long long n, long long d) { return Rational(Integer(n), Integer(d)); }

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer n(s.substr(0, slash));
    Integer d(s.substr(slash + 1));
    if (d == 0) throw std::domain_error("Rational: parse: zero denominator in '" + s + "'");
    return Rational(n, d);
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Integer factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer int_pow(Integer base, long e) {
    Integer r = 1;
    while (e-- > 0) r *= base;
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e < 0) return Rational(1) / rat_pow(base, -e);
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace spinsv
