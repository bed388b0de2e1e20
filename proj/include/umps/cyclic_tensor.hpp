#pragma once
// Coordinate vectors over the necklace basis of Cyc^N(K^d).

#include "umps/necklace.hpp"
#include "umps/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace umps {

template <class K>
class CyclicTensor {
public:
    CyclicTensor(int N, int d)
        : N_(N), d_(d), table_(&NecklaceTable::get(N, d)),
          coords_(static_cast<size_t>(table_->size()), K(0)) {}

    int N() const { return N_; }
    int d() const { return d_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    const NecklaceTable& table() const { return *table_; }

    const std::vector<K>& coords() const { return coords_; }
    std::vector<K>& coords() { return coords_; }

    const K& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    K& operator[](int i) { return coords_[static_cast<size_t>(i)]; }

    const K& at_word(const Word& w) const { return coords_[static_cast<size_t>(table_->index_of_word(w))]; }
    K& at_word(const Word& w) { return coords_[static_cast<size_t>(table_->index_of_word(w))]; }
    const K& at(const std::string& necklace) const { return at_word(word_from_string(necklace)); }
    K& at(const std::string& necklace) { return at_word(word_from_string(necklace)); }

    bool is_zero() const {
        for (const K& c : coords_)
            if (!ScalarTraits<K>::is_zero(c)) return false;
        return true;
    }

    CyclicTensor operator-() const {
        CyclicTensor r(N_, d_);
        for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = -coords_[i];
        return r;
    }
    CyclicTensor& operator+=(const CyclicTensor& o) {
        check_shape(o);
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    CyclicTensor& operator-=(const CyclicTensor& o) {
        check_shape(o);
        for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    CyclicTensor& operator*=(const K& c) {
        for (K& x : coords_) x *= c;
        return *this;
    }
    friend CyclicTensor operator+(CyclicTensor a, const CyclicTensor& b) { a += b; return a; }
    friend CyclicTensor operator-(CyclicTensor a, const CyclicTensor& b) { a -= b; return a; }
    friend CyclicTensor operator*(const K& c, CyclicTensor t) { t *= c; return t; }
    friend bool operator==(const CyclicTensor& a, const CyclicTensor& b) {
        return a.N_ == b.N_ && a.d_ == b.d_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const CyclicTensor& a, const CyclicTensor& b) { return !(a == b); }

    // Euclidean norm squared, as a double (residual metric for limits).
    double norm2_d() const {
        double s = 0;
        for (const K& c : coords_) s += abs2_as_double(c);
        return s;
    }

    // Basis tensor e_w.
    static CyclicTensor basis(int N, int d, const std::string& necklace) {
        CyclicTensor t(N, d);
        t.at(necklace) = K(1);
        return t;
    }

private:
    void check_shape(const CyclicTensor& o) const {
        if (N_ != o.N_ || d_ != o.d_) throw std::invalid_argument("CyclicTensor: shape mismatch");
    }

    int N_, d_;
    const NecklaceTable* table_;
    std::vector<K> coords_;
};

// W_N = e_{0...01} in Cyc^N(K^2).
template <class K>
CyclicTensor<K> w_state(int N) {
    if (N < 1) throw std::invalid_argument("w_state: N >= 1 required");
    CyclicTensor<K> t(N, 2);
    Word w(static_cast<size_t>(N), 0);
    w.back() = 1;
    t.at_word(w) = K(1);
    return t;
}

} // namespace umps
