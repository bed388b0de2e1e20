#pragma once
// Dense square/rectangular matrices over an arbitrary commutative scalar ring,
// plus the uMPS parameter tuple (M_0, ..., M_{d-1}).

#include <stdexcept>
#include <vector>

namespace umps {

template <class K>
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), K(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    K& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const K& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Matrix operator-() const {
        Matrix m(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
        return m;
    }
    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix& operator*=(const K& s) {
        for (K& x : a_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
    friend Matrix operator*(const K& s, Matrix m) { m *= s; return m; }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("Matrix: size mismatch in product");
        Matrix z(x.r_, y.c_);
        for (int i = 0; i < x.r_; ++i) {
            for (int k = 0; k < x.c_; ++k) {
                const K& xik = x(i, k);
                for (int j = 0; j < y.c_; ++j) z(i, j) += xik * y(k, j);
            }
        }
        return z;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    K trace() const {
        if (r_ != c_) throw std::invalid_argument("Matrix: trace of non-square");
        K t(0);
        for (int i = 0; i < r_; ++i) t += (*this)(i, i);
        return t;
    }

    std::vector<K> flatten() const { return a_; }

private:
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    int r_, c_;
    std::vector<K> a_;
};

template <class K>
struct MatrixTuple {
    int D = 0;
    int d = 0;
    std::vector<Matrix<K>> mats;

    MatrixTuple() = default;
    MatrixTuple(int D_, int d_) : D(D_), d(d_), mats(static_cast<size_t>(d_), Matrix<K>(D_, D_)) {}

    Matrix<K>& operator[](int i) { return mats[static_cast<size_t>(i)]; }
    const Matrix<K>& operator[](int i) const { return mats[static_cast<size_t>(i)]; }

    void validate() const {
        if (d < 1 || static_cast<int>(mats.size()) != d) throw std::invalid_argument("MatrixTuple: d mismatch");
        for (const auto& m : mats) {
            if (m.rows() != D || m.cols() != D) throw std::invalid_argument("MatrixTuple: non-square or size mismatch");
        }
    }
};

} // namespace umps
