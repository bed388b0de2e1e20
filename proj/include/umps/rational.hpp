#pragma once
// Exact rational scalars on top of GMP. The wrapper keeps gmpxx expression
// templates out of generic code: every operator returns a plain Rational.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace umps {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}
    // Exact: every finite double is a dyadic rational.
    static Rational from_double_exact(double x) {
        Rational r;
        r.v_ = mpq_class(x);
        return r;
    }
    static Rational parse(const std::string& s) {
        Rational r;
        size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                r.v_ = mpq_class(mpz_class(s));
            } else {
                mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
                if (den == 0) throw std::domain_error("Rational::parse: zero denominator");
                r.v_ = mpq_class(num, den);
                r.v_.canonicalize();
            }
        } catch (const std::invalid_argument&) {
            throw std::domain_error("Rational::parse: bad literal '" + s + "'");
        }
        return r;
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }
    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

    double to_double() const { return v_.get_d(); }
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_str();
    }

private:
    mpq_class v_;
};

inline mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace umps
