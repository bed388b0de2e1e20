#pragma once
// The quadratic extension Q(sqrt 2), stored structurally as a + b*sqrt2.

#include "umps/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace umps {

class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int n) : a_(n) {}
    QuadExt(const Rational& a) : a_(a) {}
    QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
    static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    // Canonical sign used by text writers (not a field order).
    int sign() const { return !a_.is_zero() ? a_.sign() : b_.sign(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_); }
    QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadExt& operator*=(const QuadExt& o) {
        Rational na = a_ * o.a_ + Rational(2) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QuadExt inv() const {
        Rational n = a_ * a_ - Rational(2) * b_ * b_;
        if (n.is_zero()) throw std::domain_error("QuadExt: inverse of zero (a^2 = 2b^2)");
        return QuadExt(a_ / n, -b_ / n);
    }
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inv(); }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { x += y; return x; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { x -= y; return x; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { x *= y; return x; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { x /= y; return x; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt conj() const { return QuadExt(a_, -b_); }

    double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(2.0); }

    // Canonical forms: "a", "b*sqrt2", "a+b*sqrt2", "a-b*sqrt2".
    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string bs = b_.abs().is_one() ? "sqrt2" : b_.abs().str() + "*sqrt2";
        if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + bs;
        return a_.str() + (b_.sign() < 0 ? "-" : "+") + bs;
    }
    static QuadExt parse(const std::string& s);

private:
    Rational a_, b_;
};

inline QuadExt QuadExt::parse(const std::string& s) {
    // Grammar: [rat] | [rat? *? ] with one optional "sqrt2" part.
    // Accepted: "3", "-5/2", "sqrt2", "-sqrt2", "3*sqrt2", "1+2*sqrt2",
    //           "1/2-3/4*sqrt2", "2+sqrt2".
    if (s.empty()) throw std::domain_error("QuadExt::parse: empty literal");
    // Find a '+'/'-' separating the two parts (not at position 0).
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*' &&
            s[i - 1] != '+' && s[i - 1] != '-') {
            split = i;
            break;
        }
    }
    auto parse_part = [](const std::string& part, Rational& ra, Rational& rb) {
        size_t pos = part.find("sqrt2");
        if (pos == std::string::npos) {
            ra += Rational::parse(part);
            return;
        }
        std::string coef = part.substr(0, pos);
        if (!coef.empty() && coef.back() == '*') coef.pop_back();
        Rational c;
        if (coef.empty() || coef == "+") c = Rational(1);
        else if (coef == "-") c = Rational(-1);
        else c = Rational::parse(coef);
        if (pos + 5 != part.size()) throw std::domain_error("QuadExt::parse: trailing junk in '" + part + "'");
        rb += c;
    };
    Rational ra, rb;
    if (split == std::string::npos) {
        parse_part(s, ra, rb);
    } else {
        parse_part(s.substr(0, split), ra, rb);
        std::string second = s.substr(split + 1);
        Rational sa, sb;
        parse_part(second, sa, sb);
        if (s[split] == '-') { sa = -sa; sb = -sb; }
        ra += sa;
        rb += sb;
    }
    return QuadExt(ra, rb);
}

} // namespace umps
