#include "umps/trace_algebra.hpp"

#include "umps/linalg.hpp"
#include "umps/mps.hpp"
#include "umps/numeric.hpp"
#include "umps/primefield.hpp"
#include "umps/rng.hpp"
#include "umps/scalar.hpp"

#include <map>
#include <mutex>

namespace umps {

RingPtr trace_ring() {
    static RingPtr ring = PolyRing::make({"t1", "t2", "t3", "t4", "t5"});
    return ring;
}

namespace {

// All monomials t1^e1 .. t5^e5 of bidegree exactly (a, b).
std::vector<Monomial> bidegree_monomials(unsigned a, unsigned b) {
    std::vector<Monomial> out;
    for (unsigned g = 0; 2 * g <= a; ++g) {               // t3 exponent
        for (unsigned dl = 0; dl <= a - 2 * g && dl <= b; ++dl) {  // t4 exponent
            unsigned al = a - 2 * g - dl;                  // t1 exponent
            for (unsigned ep = 0; 2 * ep <= b - dl; ++ep) {  // t5 exponent
                unsigned be = b - dl - 2 * ep;             // t2 exponent
                out.push_back(Monomial({static_cast<uint16_t>(al), static_cast<uint16_t>(be),
                                        static_cast<uint16_t>(g), static_cast<uint16_t>(dl),
                                        static_cast<uint16_t>(ep)}));
            }
        }
    }
    return out;
}

uint64_t word_seed(const Word& w) {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint8_t c : w) h = h * 1000003ull + c + 1;
    return h;
}

template <class K>
K eval_monomial(const Monomial& m, const std::array<K, 5>& point) {
    K v(1);
    for (size_t i = 0; i < 5; ++i)
        for (uint16_t k = 0; k < m.e[i]; ++k) v *= point[i];
    return v;
}

MatrixTuple<Fp> random_fp_pair(Rng& rng) {
    MatrixTuple<Fp> t(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) t.mats[static_cast<size_t>(i)](r, c) = rng.fp();
    return t;
}

// One fitting attempt under the active prime. Returns the lifted rational
// polynomial; throws std::runtime_error when sampling or lifting misbehaves.
MultiPoly<Rational> fit_word_mod_active(const Word& w, uint64_t seed) {
    unsigned a = 0, b = 0;
    for (uint8_t c : w) (c == 0 ? a : b)++;
    std::vector<Monomial> monos = bidegree_monomials(a, b);
    const size_t m = monos.size();

    Rng rng(seed);
    std::vector<RowVec<Fp>> rows;
    size_t target = m + 8;
    for (int round = 0; round < 4; ++round) {
        while (rows.size() < target) {
            MatrixTuple<Fp> t = random_fp_pair(rng);
            std::array<Fp, 5> point = invariants_of(t).t;
            RowVec<Fp> row(m + 1, Fp(0));
            for (size_t j = 0; j < m; ++j) row[j] = eval_monomial(monos[j], point);
            row[m] = trace_of_word(t, w);
            rows.push_back(std::move(row));
        }
        std::vector<RowVec<Fp>> rr = rows;
        std::vector<int> pivots = rref_inplace(rr);
        for (int p : pivots)
            if (p == static_cast<int>(m))
                throw std::runtime_error("trace fit: inconsistent sample system");
        if (pivots.size() == m) {
            // Unique solution: pivot rows are fully reduced, so the augmented
            // column holds the coefficients directly.
            std::vector<typename MultiPoly<Rational>::Term> terms;
            for (size_t r = 0; r < rr.size(); ++r) {
                size_t j = static_cast<size_t>(pivots[r]);
                if (rr[r][m].is_zero()) continue;
                // Coefficients of reduced trace words are dyadic with small
                // numerators; 10^8 is far beyond any occurring height.
                auto q = rational_reconstruct(rr[r][m], 100000000ull);
                if (!q) throw std::runtime_error("trace fit: coefficient failed rational lift");
                terms.push_back({monos[j], *q});
            }
            return MultiPoly<Rational>::from_terms(trace_ring(), std::move(terms));
        }
        target += m + 8;  // unlucky sample: widen and retry
    }
    throw std::runtime_error("trace fit: sample matrix never reached full column rank");
}

bool verify_over_q(const Word& w, const MultiPoly<Rational>& poly, uint64_t seed) {
    Rng rng(seed);
    for (int trial = 0; trial < 3; ++trial) {
        MatrixTuple<Rational> t(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) t.mats[static_cast<size_t>(i)](r, c) = rng.rational(20);
        std::vector<Rational> point = invariants_of(t).as_vector();
        if (poly.evaluate(point) != trace_of_word(t, w)) return false;
    }
    return true;
}

MultiPoly<Rational> fit_and_verify(const Word& canon) {
    uint64_t seed = word_seed(canon);
    std::string what;
    for (uint64_t p : {kDefaultPrime, kCrossCheckPrime}) {
        try {
            FpScope scope(p);
            MultiPoly<Rational> cand = fit_word_mod_active(canon, seed ^ p);
            if (verify_over_q(canon, cand, seed + 1)) return cand;
            what = "lifted polynomial failed rational verification";
        } catch (const std::runtime_error& e) {
            what = e.what();
        }
    }
    throw std::logic_error("reduce_trace_word: fit failed under both primes (" + what + ")");
}

std::map<Word, MultiPoly<Rational>>& cache() {
    static std::map<Word, MultiPoly<Rational>> c;
    return c;
}
std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

void precompute_short_words_locked() {
    static bool done = false;
    if (done) return;
    for (int N = 1; N <= 8; ++N) {
        for (const Necklace& n : NecklaceTable::get(N, 2).list()) {
            if (cache().find(n.word) == cache().end()) cache().emplace(n.word, fit_and_verify(n.word));
        }
    }
    done = true;
}

} // namespace

TraceWordPoly reduce_trace_word(const std::string& word) {
    Word w = word_from_string(word);
    if (w.empty()) throw std::invalid_argument("reduce_trace_word: empty word");
    Necklace canon = canonicalize(w, 2);

    std::lock_guard<std::mutex> lock(cache_mutex());
    precompute_short_words_locked();
    auto it = cache().find(canon.word);
    if (it == cache().end()) it = cache().emplace(canon.word, fit_and_verify(canon.word)).first;
    return {canon.str(), it->second};
}

std::vector<MultiPoly<Rational>> trace_parametrization(int N) {
    if (N < 1) throw std::invalid_argument("trace_parametrization: N >= 1 required");
    const NecklaceTable& table = NecklaceTable::get(N, 2);
    std::vector<MultiPoly<Rational>> out;
    out.reserve(static_cast<size_t>(table.size()));
    for (const Necklace& n : table.list()) out.push_back(reduce_trace_word(n.str()).poly);
    return out;
}

bool verify_word_identity(const std::string& w1, const std::string& w2) {
    return reduce_trace_word(w1).poly == reduce_trace_word(w2).poly;
}

} // namespace umps
