#pragma once
// The trace algebra of pairs of 2x2 matrices: five free generators
//   t1 = tr M0, t2 = tr M1, t3 = tr M0^2, t4 = tr M0 M1, t5 = tr M1^2,
// reduction of arbitrary trace words to polynomials in them, and the induced
// polynomial parametrization of cyclic tensor coordinates.

#include "umps/matrix.hpp"
#include "umps/necklace.hpp"
#include "umps/poly.hpp"
#include "umps/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umps {

template <class K>
struct TraceInvariants {
    std::array<K, 5> t;  // tr M0, tr M1, tr M0^2, tr M0 M1, tr M1^2

    std::vector<K> as_vector() const { return {t[0], t[1], t[2], t[3], t[4]}; }
};

template <class K>
TraceInvariants<K> invariants_of(const MatrixTuple<K>& m) {
    if (m.D != 2 || m.d != 2) throw std::invalid_argument("invariants_of: requires D = 2, d = 2");
    const Matrix<K>& A = m.mats[0];
    const Matrix<K>& B = m.mats[1];
    return {{A.trace(), B.trace(), (A * A).trace(), (A * B).trace(), (B * B).trace()}};
}

// The shared ambient ring QQ[t1..t5], graded reverse lex.
RingPtr trace_ring();

// Bidegree of a monomial in t1..t5 under deg t1 = (1,0), t2 = (0,1),
// t3 = (2,0), t4 = (1,1), t5 = (0,2): the letter counts of the trace words
// the monomial can represent.
inline std::pair<unsigned, unsigned> trace_multidegree(const Monomial& m) {
    if (m.nvars() != 5) throw std::invalid_argument("trace_multidegree: expected 5 exponents");
    unsigned a = m.e[0] + 2u * m.e[2] + m.e[3];
    unsigned b = m.e[1] + m.e[3] + 2u * m.e[4];
    return {a, b};
}

struct TraceWordPoly {
    std::string word;           // canonical rotation of the input word
    MultiPoly<Rational> poly;   // in trace_ring()
};

// The unique polynomial p with tr(M_{w1}...M_{wk}) = p(t1..t5) for every
// pair of 2x2 matrices. Cached per rotation class; all words of length <= 8
// are fitted on first use. Throws std::logic_error if the fit fails to
// verify over the rationals under both working primes (a bug, not a
// mathematical possibility).
TraceWordPoly reduce_trace_word(const std::string& word);

// Coordinates of the length-N evaluation as polynomials in t1..t5, aligned
// with the (N,2) necklace table.
std::vector<MultiPoly<Rational>> trace_parametrization(int N);

// True iff the two words have equal traces for all pairs of 2x2 matrices.
bool verify_word_identity(const std::string& w1, const std::string& w2);

} // namespace umps
