#pragma once
// Exact dense linear algebra over a field: reduced row echelon, rank, kernel,
// solving, inverse. K needs +,-,*,/ and is_zero via ScalarTraits.

#include "umps/matrix.hpp"
#include "umps/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace umps {

template <class K>
using RowVec = std::vector<K>;

// In-place reduced row echelon form; returns pivot column per pivot row.
template <class K>
std::vector<int> rref_inplace(std::vector<RowVec<K>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t ncols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && ScalarTraits<K>::is_zero(m[sel][col])) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        K inv = K(1) / m[row][col];
        for (size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i != row && !ScalarTraits<K>::is_zero(m[i][col])) {
                K f = m[i][col];
                for (size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
            }
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(pivots.size());  // drop zero rows
    return pivots;
}

template <class K>
int rank_of_rows(std::vector<RowVec<K>> m) {
    return static_cast<int>(rref_inplace(m).size());
}

// Basis of { x : A x = 0 } for A given by rows.
template <class K>
std::vector<RowVec<K>> kernel_basis(std::vector<RowVec<K>> a, size_t ncols) {
    if (!a.empty() && a[0].size() != ncols) throw std::invalid_argument("kernel_basis: ncols mismatch");
    std::vector<int> pivots = rref_inplace(a);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<RowVec<K>> basis;
    for (size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RowVec<K> v(ncols, K(0));
        v[free_col] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<size_t>(pivots[r])] = -a[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve A x = b (A by rows). Returns nullopt if inconsistent; picks the
// solution with free variables set to 0.
template <class K>
std::optional<RowVec<K>> solve_linear(std::vector<RowVec<K>> a, const RowVec<K>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: row mismatch");
    if (a.empty()) return RowVec<K>{};
    const size_t n = a[0].size();
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref_inplace(a);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (static_cast<size_t>(pivots[r]) == n) return std::nullopt;  // 0 = 1 row
    }
    RowVec<K> x(n, K(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[static_cast<size_t>(pivots[r])] = a[r][n];
    return x;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
    const int n = m.rows();
    std::vector<RowVec<K>> aug(static_cast<size_t>(n), RowVec<K>(static_cast<size_t>(2 * n), K(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);
        aug[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = K(1);
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (static_cast<int>(pivots.size()) != n || pivots[static_cast<size_t>(n - 1)] != n - 1)
        throw std::domain_error("inverse: singular matrix");
    Matrix<K> r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
    return r;
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
    if (m.rows() != m.cols()) return false;
    std::vector<RowVec<K>> rows(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        rows[static_cast<size_t>(i)].reserve(static_cast<size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) rows[static_cast<size_t>(i)].push_back(m(i, j));
    }
    return rank_of_rows(std::move(rows)) == m.rows();
}

// Incremental reduced echelon accumulator: maintains a reduced basis of the
// row space; insert() reports whether the row enlarged the space.
template <class K>
class EchelonBasis {
public:
    explicit EchelonBasis(size_t ncols) : ncols_(ncols) {}

    bool insert(RowVec<K> v) {
        if (v.size() != ncols_) throw std::invalid_argument("EchelonBasis: width mismatch");
        for (size_t r = 0; r < rows_.size(); ++r) {
            const size_t p = static_cast<size_t>(pivots_[r]);
            if (!ScalarTraits<K>::is_zero(v[p])) {
                K f = v[p];
                const RowVec<K>& br = rows_[r];
                for (size_t j = p; j < ncols_; ++j) {
                    if (!ScalarTraits<K>::is_zero(br[j])) v[j] -= f * br[j];
                }
            }
        }
        size_t p = 0;
        while (p < ncols_ && ScalarTraits<K>::is_zero(v[p])) ++p;
        if (p == ncols_) return false;
        K inv = K(1) / v[p];
        for (size_t j = p; j < ncols_; ++j) v[j] *= inv;
        // Back-substitute into existing rows to stay fully reduced.
        for (size_t r = 0; r < rows_.size(); ++r) {
            K f = rows_[r][p];
            if (!ScalarTraits<K>::is_zero(f)) {
                for (size_t j = p; j < ncols_; ++j) rows_[r][j] -= f * v[j];
            }
        }
        // Keep rows ordered by pivot column.
        size_t pos = 0;
        while (pos < pivots_.size() && static_cast<size_t>(pivots_[pos]) < p) ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), static_cast<int>(p));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    size_t ncols() const { return ncols_; }
    const std::vector<RowVec<K>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Kernel of the accumulated row space (as linear functionals on K^ncols).
    std::vector<RowVec<K>> kernel() const {
        std::vector<bool> is_pivot(ncols_, false);
        for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
        std::vector<RowVec<K>> basis;
        for (size_t free_col = 0; free_col < ncols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            RowVec<K> v(ncols_, K(0));
            v[free_col] = K(1);
            for (size_t r = 0; r < rows_.size(); ++r)
                v[static_cast<size_t>(pivots_[r])] = -rows_[r][free_col];
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    size_t ncols_;
    std::vector<RowVec<K>> rows_;
    std::vector<int> pivots_;
};

} // namespace umps
