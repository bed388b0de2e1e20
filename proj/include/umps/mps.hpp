#pragma once
// The uMPS evaluation map and its structural operations: joins, the GL_d
// action on the physical index, bond-space conjugation, physical embeddings,
// matrix-space span growth, and the Jacobian of the evaluation map.

#include "umps/cyclic_tensor.hpp"
#include "umps/linalg.hpp"
#include "umps/matrix.hpp"
#include "umps/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace umps {

// tr(M_{w_1} ... M_{w_N}) by sequential multiplication.
template <class K>
K trace_of_word(const MatrixTuple<K>& t, const Word& w) {
    if (w.empty()) throw std::invalid_argument("trace_of_word: empty word");
    Matrix<K> p = t[w[0]];
    for (size_t j = 1; j < w.size(); ++j) p = p * t[w[j]];
    return p.trace();
}

// T_N(M_0,...,M_{d-1}) in necklace coordinates.
template <class K>
CyclicTensor<K> evaluate_umps(const MatrixTuple<K>& t, int N) {
    if (N < 1) throw std::invalid_argument("evaluate_umps: N >= 1 required");
    CyclicTensor<K> out(N, t.d);
    const auto& list = out.table().list();
    for (size_t i = 0; i < list.size(); ++i) out[static_cast<int>(i)] = trace_of_word(t, list[i].word);
    return out;
}

// Block-diagonal join; T_N(join) = sum of the component evaluations.
template <class K>
MatrixTuple<K> join_tuples(const std::vector<MatrixTuple<K>>& parts) {
    if (parts.empty()) throw std::invalid_argument("join_tuples: no parts");
    const int d = parts[0].d;
    int D = 0;
    for (const auto& p : parts) {
        if (p.d != d) throw std::invalid_argument("join_tuples: physical dimensions differ");
        D += p.D;
    }
    MatrixTuple<K> out(D, d);
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < d; ++i)
            for (int r = 0; r < p.D; ++r)
                for (int c = 0; c < p.D; ++c) out[i](off + r, off + c) = p[i](r, c);
        off += p.D;
    }
    return out;
}

template <class K>
MatrixTuple<K> join_tuples(std::initializer_list<MatrixTuple<K>> parts) {
    return join_tuples(std::vector<MatrixTuple<K>>(parts));
}

// M'_i = sum_j A(i,j) M_j  (the GL_d action on the physical index).
template <class K>
MatrixTuple<K> act_gl(const Matrix<K>& A, const MatrixTuple<K>& t) {
    if (A.rows() != t.d || A.cols() != t.d) throw std::invalid_argument("act_gl: A must be d x d");
    if (!is_invertible(A)) throw std::domain_error("act_gl: singular matrix");
    MatrixTuple<K> out(t.D, t.d);
    for (int i = 0; i < t.d; ++i) {
        Matrix<K> m(t.D, t.D);
        for (int j = 0; j < t.d; ++j) {
            if (!ScalarTraits<K>::is_zero(A(i, j))) m += A(i, j) * t[j];
        }
        out[i] = std::move(m);
    }
    return out;
}

// Diagonal action of A on (K^d)^{tensor N}, in necklace coordinates:
// expand each necklace into its word orbit, transform, re-collect.
template <class K>
CyclicTensor<K> act_cyclic_tensor(const Matrix<K>& A, const CyclicTensor<K>& T) {
    const int N = T.N(), d = T.d();
    if (A.rows() != d || A.cols() != d) throw std::invalid_argument("act_cyclic_tensor: A must be d x d");
    const NecklaceTable& table = T.table();
    // Coefficient of the full tensor at word u is T[canonical(u)]; the image
    // coefficient at word y is sum_u prod_k A(y_k, u_k) * coeff(u), and it is
    // again constant on rotation orbits, so evaluating at each canonical y
    // determines the result.
    CyclicTensor<K> out(N, d);
    Word u(static_cast<size_t>(N), 0);
    std::vector<int> canon_of_word;  // enumeration order of the odometer
    std::vector<Word> words;
    for (;;) {
        words.push_back(u);
        canon_of_word.push_back(table.index_of_word(u));
        int pos = N - 1;
        while (pos >= 0 && u[static_cast<size_t>(pos)] == d - 1) u[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++u[static_cast<size_t>(pos)];
    }
    const auto& list = table.list();
    for (size_t yi = 0; yi < list.size(); ++yi) {
        const Word& y = list[yi].word;
        K acc(0);
        for (size_t wi = 0; wi < words.size(); ++wi) {
            const K& c = T[canon_of_word[wi]];
            if (ScalarTraits<K>::is_zero(c)) continue;
            const Word& w = words[wi];
            K prod(1);
            bool dead = false;
            for (int k = 0; k < N; ++k) {
                const K& a = A(y[static_cast<size_t>(k)], w[static_cast<size_t>(k)]);
                if (ScalarTraits<K>::is_zero(a)) { dead = true; break; }
                prod *= a;
            }
            if (!dead) acc += prod * c;
        }
        out[static_cast<int>(yi)] = std::move(acc);
    }
    return out;
}

// (P^{-1} M_0 P, ..., P^{-1} M_{d-1} P); evaluation invariant for every N.
template <class K>
MatrixTuple<K> conjugate(const MatrixTuple<K>& t, const Matrix<K>& P) {
    if (P.rows() != t.D || P.cols() != t.D) throw std::invalid_argument("conjugate: P must be D x D");
    Matrix<K> Pi = inverse(P);  // throws std::domain_error if singular
    MatrixTuple<K> out(t.D, t.d);
    for (int i = 0; i < t.d; ++i) out[i] = Pi * t[i] * P;
    return out;
}

// Append d'-d zero matrices; Cyc^N(K^d) embeds into Cyc^N(K^{d'}).
template <class K>
MatrixTuple<K> embed_physical(const MatrixTuple<K>& t, int dp) {
    if (dp < t.d) throw std::invalid_argument("embed_physical: d' >= d required");
    MatrixTuple<K> out(t.D, dp);
    for (int i = 0; i < t.d; ++i) out[i] = t[i];
    return out;
}

// Restrict a tensor on d' symbols to the sub-alphabet {0,...,d-1}.
template <class K>
CyclicTensor<K> restrict_physical(const CyclicTensor<K>& T, int d) {
    if (d > T.d()) throw std::invalid_argument("restrict_physical: d <= d(T) required");
    CyclicTensor<K> out(T.N(), d);
    const auto& list = out.table().list();
    for (size_t i = 0; i < list.size(); ++i) out[static_cast<int>(i)] = T.at_word(list[i].word);
    return out;
}

// A linear space of D x D matrices with a verified basis.
template <class K>
class MatrixSpace {
public:
    MatrixSpace(int D, std::vector<Matrix<K>> basis) : D_(D), basis_(std::move(basis)) {
        std::vector<RowVec<K>> rows;
        rows.reserve(basis_.size());
        for (const auto& m : basis_) {
            if (m.rows() != D_ || m.cols() != D_) throw std::invalid_argument("MatrixSpace: wrong matrix size");
            rows.push_back(m.flatten());
        }
        if (rank_of_rows(std::move(rows)) != static_cast<int>(basis_.size()))
            throw std::invalid_argument("MatrixSpace: basis is linearly dependent");
    }

    // Build from a spanning set, discarding dependent members.
    static MatrixSpace span_of(int D, const std::vector<Matrix<K>>& gens) {
        EchelonBasis<K> ech(static_cast<size_t>(D) * static_cast<size_t>(D));
        std::vector<Matrix<K>> basis;
        for (const auto& m : gens) {
            if (m.rows() != D || m.cols() != D) throw std::invalid_argument("MatrixSpace: wrong matrix size");
            if (ech.insert(m.flatten())) basis.push_back(m);
        }
        return MatrixSpace(D, std::move(basis));
    }

    int D() const { return D_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Matrix<K>>& basis() const { return basis_; }

private:
    int D_;
    std::vector<Matrix<K>> basis_;
};

// dim span{ B_{i_1} ... B_{i_k} : B_j in basis(L) }, exact.
template <class K>
int span_growth(const MatrixSpace<K>& L, int k) {
    if (k < 1) throw std::invalid_argument("span_growth: k >= 1 required");
    const int D = L.D();
    const int full = D * D;
    EchelonBasis<K> ech(static_cast<size_t>(full));
    // Depth-first over words of length k with prefix products.
    std::vector<const Matrix<K>*> gen;
    for (const auto& b : L.basis()) gen.push_back(&b);
    if (gen.empty()) return 0;
    bool saturated = false;
    auto rec = [&](auto&& self, const Matrix<K>& prefix, int depth) -> void {
        if (saturated) return;
        if (depth == k) {
            ech.insert(prefix.flatten());
            if (ech.rank() == full) saturated = true;
            return;
        }
        for (const Matrix<K>* g : gen) {
            self(self, depth == 0 ? *g : prefix * *g, depth + 1);
            if (saturated) return;
        }
    };
    rec(rec, Matrix<K>(), 0);
    return ech.rank();
}

// Random tuple with entries from RandomScalar<K>.
template <class K>
MatrixTuple<K> random_tuple(Rng& rng, int D, int d, int64_t height = 100) {
    MatrixTuple<K> t(D, d);
    for (int i = 0; i < d; ++i)
        for (int r = 0; r < D; ++r)
            for (int c = 0; c < D; ++c) t[i](r, c) = RandomScalar<K>::get(rng, height);
    return t;
}

// Smallest k <= D^2 such that length-k words of every sampled tuple span the
// full matrix space; -1 if some sample never saturates.
int generic_injectivity_estimate(int D, int d, int trials, uint64_t seed);

// Jacobian of T_N at a tuple: rows indexed by necklaces, columns by matrix
// entries (i, r, c) -> i*D^2 + r*D + c.  d tr(M_w) / d (M_i)_{rc} equals the
// sum over positions j with w_j = i of the cyclic product
// (M_{w_{j+1}} ... M_{w_{j+N-1}})_{c,r}.
template <class K>
Matrix<K> umps_jacobian(const MatrixTuple<K>& t, int N) {
    const int D = t.D, d = t.d;
    const NecklaceTable& table = NecklaceTable::get(N, d);
    const auto& list = table.list();
    Matrix<K> jac(static_cast<int>(list.size()), d * D * D);
    for (size_t row = 0; row < list.size(); ++row) {
        const Word& w = list[row].word;
        const int n = static_cast<int>(w.size());
        for (int j = 0; j < n; ++j) {
            Matrix<K> p = Matrix<K>::identity(D);
            for (int s = 1; s < n; ++s) p = p * t[w[static_cast<size_t>((j + s) % n)]];
            const int i = w[static_cast<size_t>(j)];
            for (int r = 0; r < D; ++r)
                for (int c = 0; c < D; ++c)
                    jac(static_cast<int>(row), i * D * D + r * D + c) += p(c, r);
        }
    }
    return jac;
}

// The d x d symmetric matrix (tr(M_i M_j))_{ij}; its rank is at most D^2.
template <class K>
Matrix<K> t2_gram(const MatrixTuple<K>& t) {
    Matrix<K> g(t.d, t.d);
    for (int i = 0; i < t.d; ++i)
        for (int j = i; j < t.d; ++j) {
            K v = (t[i] * t[j]).trace();
            g(i, j) = v;
            g(j, i) = v;
        }
    return g;
}

} // namespace umps
