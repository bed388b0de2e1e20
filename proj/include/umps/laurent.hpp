#pragma once
// Univariate Laurent polynomials K[t, t^-1]: the scalar ring for symbolic
// lambda evaluation of limit families (only ring ops are needed there).

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace umps {

template <class K>
class Laurent {
public:
    Laurent() = default;
    Laurent(int n) { if (n != 0) { lo_ = 0; c_ = {K(n)}; } }
    Laurent(const K& k) { if (!k.is_zero()) { lo_ = 0; c_ = {k}; } }
    // c * t^e
    static Laurent term(const K& c, int e) {
        Laurent r;
        if (!c.is_zero()) { r.lo_ = e; r.c_ = {c}; }
        return r;
    }
    static Laurent t(int e = 1) { return term(K(1), e); }

    bool is_zero() const { return c_.empty(); }
    int lowest_degree() const {
        if (is_zero()) throw std::logic_error("Laurent: lowest_degree of zero");
        return lo_;
    }
    int highest_degree() const {
        if (is_zero()) throw std::logic_error("Laurent: highest_degree of zero");
        return lo_ + static_cast<int>(c_.size()) - 1;
    }
    K coeff(int e) const {
        if (is_zero() || e < lo_ || e > highest_degree()) return K(0);
        return c_[static_cast<size_t>(e - lo_)];
    }

    // Substitute a concrete scalar for t; x must be invertible if lo_ < 0.
    K eval(const K& x) const {
        if (is_zero()) return K(0);
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        if (lo_ > 0) {
            for (int k = 0; k < lo_; ++k) acc = acc * x;
        } else if (lo_ < 0) {
            K xi = x.inv();
            for (int k = 0; k < -lo_; ++k) acc = acc * xi;
        }
        return acc;
    }

    Laurent operator-() const {
        Laurent r = *this;
        for (K& k : r.c_) k = -k;
        return r;
    }
    Laurent& operator+=(const Laurent& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { *this = o; return *this; }
        int nlo = std::min(lo_, o.lo_);
        int nhi = std::max(highest_degree(), o.highest_degree());
        std::vector<K> nc(static_cast<size_t>(nhi - nlo + 1), K(0));
        for (size_t i = 0; i < c_.size(); ++i) nc[static_cast<size_t>(lo_ - nlo) + i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) nc[static_cast<size_t>(o.lo_ - nlo) + i] += o.c_[i];
        lo_ = nlo;
        c_ = std::move(nc);
        trim();
        return *this;
    }
    Laurent& operator-=(const Laurent& o) { return *this += -o; }
    Laurent& operator*=(const Laurent& o) {
        if (is_zero() || o.is_zero()) { c_.clear(); lo_ = 0; return *this; }
        std::vector<K> nc(c_.size() + o.c_.size() - 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) nc[i + j] += c_[i] * o.c_[j];
        lo_ += o.lo_;
        c_ = std::move(nc);
        trim();
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    friend Laurent operator*(Laurent a, const Laurent& b) { a *= b; return a; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            int e = lo_ + static_cast<int>(i);
            s += c_[i].str();
            if (e != 0) s += "*t^" + std::to_string(e);
        }
        return s;
    }

private:
    void trim() {
        size_t front = 0;
        while (front < c_.size() && c_[front].is_zero()) ++front;
        if (front == c_.size()) { c_.clear(); lo_ = 0; return; }
        size_t back = c_.size();
        while (back > front && c_[back - 1].is_zero()) --back;
        if (front > 0 || back < c_.size()) {
            std::vector<K> nc(c_.begin() + static_cast<long>(front), c_.begin() + static_cast<long>(back));
            lo_ += static_cast<int>(front);
            c_ = std::move(nc);
        }
    }

    int lo_ = 0;
    std::vector<K> c_;
};

} // namespace umps
