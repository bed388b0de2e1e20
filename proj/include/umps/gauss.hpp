#pragma once
// Gaussian extension K[i] of a real scalar ring K: a + b*i with i^2 = -1.
// Used to evaluate limit families exactly when the phase lives in K(i).

#include <string>
#include <utility>

namespace umps {

template <class K>
class GaussExt {
public:
    GaussExt() = default;
    GaussExt(int n) : re_(n) {}
    GaussExt(K re) : re_(std::move(re)) {}
    GaussExt(K re, K im) : re_(std::move(re)), im_(std::move(im)) {}
    static GaussExt i() { return GaussExt(K(0), K(1)); }

    const K& re() const { return re_; }
    const K& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussExt operator-() const { return GaussExt(-re_, -im_); }
    GaussExt& operator+=(const GaussExt& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussExt& operator-=(const GaussExt& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussExt& operator*=(const GaussExt& o) {
        K nre = re_ * o.re_ - im_ * o.im_;
        K nim = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(nre);
        im_ = std::move(nim);
        return *this;
    }
    // Defined when K is a field and norm2() != 0.
    GaussExt inv() const {
        K n = norm2();
        return GaussExt(re_ / n, -(im_ / n));
    }
    GaussExt& operator/=(const GaussExt& o) { return *this *= o.inv(); }

    friend GaussExt operator+(GaussExt a, const GaussExt& b) { a += b; return a; }
    friend GaussExt operator-(GaussExt a, const GaussExt& b) { a -= b; return a; }
    friend GaussExt operator*(GaussExt a, const GaussExt& b) { a *= b; return a; }
    friend GaussExt operator/(GaussExt a, const GaussExt& b) { a /= b; return a; }
    friend bool operator==(const GaussExt& a, const GaussExt& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussExt& a, const GaussExt& b) { return !(a == b); }

    K norm2() const { return re_ * re_ + im_ * im_; }

    std::string str() const { return "(" + re_.str() + ")+(" + im_.str() + ")i"; }

private:
    K re_{0};
    K im_{0};
};

} // namespace umps
