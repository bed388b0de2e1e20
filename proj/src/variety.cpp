#include "umps/variety.hpp"

#include "umps/numeric.hpp"
#include "umps/primefield.hpp"
#include "umps/rng.hpp"
#include "umps/trace_algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>

namespace umps {

int expected_dimension(int D, int d, int N) {
    if (D < 1 || d < 1 || N < 1)
        throw std::invalid_argument("expected_dimension: parameters >= 1 required");
    uint64_t formula = static_cast<uint64_t>(d - 1) * static_cast<uint64_t>(D) * static_cast<uint64_t>(D) + 1;
    uint64_t ambient = cyc_dim(N, d);
    return static_cast<int>(std::min(formula, ambient));
}

namespace {

std::vector<RowVec<Rational>> matrix_rows(const Matrix<Rational>& m) {
    std::vector<RowVec<Rational>> rows(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        rows[static_cast<size_t>(i)].reserve(static_cast<size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) rows[static_cast<size_t>(i)].push_back(m(i, j));
    }
    return rows;
}

} // namespace

DimensionReport jacobian_dimension(int D, int d, int N, int trials, uint64_t seed) {
    if (D < 1 || d < 1 || N < 1 || trials < 1)
        throw std::invalid_argument("jacobian_dimension: parameters >= 1 required");
    DimensionReport rep;
    rep.D = D;
    rep.d = d;
    rep.N = N;
    rep.seed = seed;
    rep.points_sampled = trials;
    rep.ambient = static_cast<int>(cyc_dim(N, d));
    rep.expected = expected_dimension(D, d, N);
    Rng rng(seed);
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        MatrixTuple<Rational> m = random_tuple<Rational>(rng, D, d, 10);
        best = std::max(best, rank_of_rows(matrix_rows(umps_jacobian(m, N))));
    }
    rep.jacobian_rank = best;
    rep.fills_ambient = (best == rep.ambient);
    return rep;
}

int linear_span_dimension(int D, int d, int N, int samples, uint64_t seed) {
    if (D < 1 || d < 1 || N < 1) throw std::invalid_argument("linear_span_dimension: parameters >= 1 required");
    if (samples < static_cast<int>(cyc_dim(N, d)))
        throw std::invalid_argument("linear_span_dimension: need at least cyc_dim(N,d) samples");
    Rng rng(seed);
    std::vector<RowVec<Rational>> rows;
    rows.reserve(static_cast<size_t>(samples));
    for (int s = 0; s < samples; ++s) {
        MatrixTuple<Rational> m = random_tuple<Rational>(rng, D, d, 10);
        rows.push_back(evaluate_umps(m, N).coords());
    }
    const int rank_q = rank_of_rows(rows);
    for (uint64_t p : {kDefaultPrime, kCrossCheckPrime}) {
        FpScope scope(p);
        std::vector<RowVec<Fp>> fr;
        fr.reserve(rows.size());
        for (const auto& r : rows) {
            RowVec<Fp> fv;
            fv.reserve(r.size());
            for (const Rational& q : r) fv.push_back(to_fp(q));
            fr.push_back(std::move(fv));
        }
        if (rank_of_rows(std::move(fr)) != rank_q)
            throw std::logic_error("linear_span_dimension: modular rank disagrees with the rational rank");
    }
    return rank_q;
}

std::vector<RowVec<Rational>> span_linear_relations(int N) {
    const std::vector<MultiPoly<Rational>> phi = trace_parametrization(N);
    const size_t n = phi.size();
    std::map<std::vector<uint16_t>, size_t> midx;
    for (const auto& f : phi)
        for (const auto& t : f.terms()) midx.emplace(t.first.e, 0);
    size_t next = 0;
    for (auto& kv : midx) kv.second = next++;
    std::vector<RowVec<Rational>> rows(midx.size(), RowVec<Rational>(n, Rational(0)));
    for (size_t w = 0; w < n; ++w)
        for (const auto& t : phi[w].terms()) rows[midx.at(t.first.e)][w] = t.second;
    return kernel_basis(std::move(rows), n);
}

uint64_t binomial_u64(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // numerator of i consecutive factors is divisible by i!
        if (r > std::numeric_limits<uint64_t>::max()) throw std::overflow_error("binomial_u64: overflow");
    }
    return static_cast<uint64_t>(r);
}

bool strict_subspace_predictor(int D, int N0, int N1) {
    if (D < 1 || N0 < 0 || N1 < 0 || N0 + N1 < 1)
        throw std::invalid_argument("strict_subspace_predictor: D >= 1 and N0+N1 >= 1 required");
    const uint64_t lhs = count_binary_necklaces(N0, N1);
    const unsigned dd = static_cast<unsigned>(D) * static_cast<unsigned>(D);
    const unsigned __int128 rhs =
        static_cast<unsigned __int128>(binomial_u64(static_cast<unsigned>(N0 + D - 1), static_cast<unsigned>(D - 1))) *
        binomial_u64(static_cast<unsigned>(N1) + dd - static_cast<unsigned>(D), dd - static_cast<unsigned>(D));
    return static_cast<unsigned __int128>(lhs) > rhs;
}

RingPtr necklace_ring(int N, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, RingPtr> cache;
    std::lock_guard<std::mutex> lk(mu);
    const auto key = std::make_pair(N, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::string> vars;
    for (const auto& nk : NecklaceTable::get(N, d).list()) vars.push_back("x" + nk.str());
    RingPtr R = PolyRing::make(std::move(vars));
    cache.emplace(key, R);
    return R;
}

// ---- implicitization by sampled linear algebra -----------------------------

namespace {

void enum_monomials_rec(int nvars, int deg, int var, std::vector<uint16_t>& cur, std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur[static_cast<size_t>(var)] = static_cast<uint16_t>(deg);
        out.push_back(Monomial(cur));
        cur[static_cast<size_t>(var)] = 0;
        return;
    }
    for (int e = deg; e >= 0; --e) {
        cur[static_cast<size_t>(var)] = static_cast<uint16_t>(e);
        enum_monomials_rec(nvars, deg - e, var + 1, cur, out);
    }
    cur[static_cast<size_t>(var)] = 0;
}

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
    if (nvars < 1 || deg < 0) throw std::invalid_argument("monomials_of_degree: bad arguments");
    std::vector<Monomial> out;
    std::vector<uint16_t> cur(static_cast<size_t>(nvars), 0);
    enum_monomials_rec(nvars, deg, 0, cur, out);
    return out;
}

// Fully reduce v against an echelon basis and normalize the lead to 1;
// returns an empty vector when v lies in the accumulated row space.
RowVec<Fp> reduce_against(const EchelonBasis<Fp>& eb, RowVec<Fp> v) {
    const auto& rows = eb.rows();
    const auto& piv = eb.pivots();
    for (size_t r = 0; r < rows.size(); ++r) {
        const size_t p = static_cast<size_t>(piv[r]);
        if (!v[p].is_zero()) {
            Fp f = v[p];
            const RowVec<Fp>& br = rows[r];
            for (size_t j = p; j < v.size(); ++j)
                if (!br[j].is_zero()) v[j] -= f * br[j];
        }
    }
    size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return {};
    Fp inv = Fp(1) / v[p];
    for (size_t j = p; j < v.size(); ++j) v[j] *= inv;
    return v;
}

struct SweepResult {
    std::vector<DegreeRow> rows;
    std::map<int, std::vector<std::vector<Rational>>> lifted;  // degree -> coefficient vectors
};

SweepResult implicitize_sweep(uint64_t prime, bool lift, int N, int degree_bound, uint64_t seed,
                              const std::vector<std::vector<Monomial>>& monos,
                              const std::vector<std::map<std::vector<uint16_t>, size_t>>& midx) {
    FpScope scope(prime);
    Rng rng(seed);
    std::vector<MultiPoly<Fp>> phi = polys_mod_active(trace_parametrization(N));
    const size_t n = phi.size();
    SweepResult res;
    std::vector<RowVec<Fp>> prev_kernel;
    for (int k = 1; k <= degree_bound; ++k) {
        const std::vector<Monomial>& mk = monos[static_cast<size_t>(k)];
        EchelonBasis<Fp> eb(mk.size());
        int since = 0, samples = 0;
        const int cap = 4 * static_cast<int>(mk.size()) + 512;
        while (since < 32 && eb.rank() < static_cast<int>(mk.size())) {
            if (samples >= cap)
                throw std::runtime_error("implicitize_by_degree: sample rank failed to stabilize");
            std::vector<Fp> t(5, Fp(0));
            for (Fp& x : t) x = rng.fp();
            std::vector<Fp> pt;
            pt.reserve(n);
            for (const auto& f : phi) pt.push_back(f.evaluate(t));
            // Power table per coordinate up to exponent k.
            std::vector<std::vector<Fp>> pw(n, std::vector<Fp>(static_cast<size_t>(k) + 1, Fp(1)));
            for (size_t v = 0; v < n; ++v)
                for (int e = 1; e <= k; ++e) pw[v][static_cast<size_t>(e)] = pw[v][static_cast<size_t>(e - 1)] * pt[v];
            RowVec<Fp> row;
            row.reserve(mk.size());
            for (const Monomial& m : mk) {
                Fp prod(1);
                for (size_t v = 0; v < n; ++v)
                    if (m.e[v]) prod *= pw[v][m.e[v]];
                row.push_back(prod);
            }
            ++samples;
            since = eb.insert(std::move(row)) ? 0 : since + 1;
        }
        const int dimV = static_cast<int>(mk.size()) - eb.rank();
        std::vector<RowVec<Fp>> kerV = eb.kernel();

        // Degree-k slice of the ideal generated below degree k: spanned by all
        // single-variable shifts of the degree-(k-1) vanishing forms.
        EchelonBasis<Fp> wb(mk.size());
        if (k >= 2) {
            const std::vector<Monomial>& mprev = monos[static_cast<size_t>(k - 1)];
            const auto& idxk = midx[static_cast<size_t>(k)];
            for (const auto& f : prev_kernel) {
                for (size_t v = 0; v < n; ++v) {
                    RowVec<Fp> g(mk.size(), Fp(0));
                    bool nonzero = false;
                    for (size_t j = 0; j < mprev.size(); ++j) {
                        if (f[j].is_zero()) continue;
                        std::vector<uint16_t> e = mprev[j].e;
                        ++e[v];
                        g[idxk.at(e)] += f[j];
                        nonzero = true;
                    }
                    if (nonzero) wb.insert(std::move(g));
                }
            }
        }
        const int newg = dimV - wb.rank();
        res.rows.push_back(DegreeRow{k, dimV, newg, samples});

        if (lift && newg >= 1 && newg <= 3) {
            EchelonBasis<Fp> cb = wb;
            std::vector<std::vector<Rational>> lifts;
            for (const auto& v : kerV) {
                RowVec<Fp> red = reduce_against(cb, v);
                if (red.empty()) continue;
                std::vector<Rational> qv;
                qv.reserve(red.size());
                for (const Fp& x : red) {
                    std::optional<Rational> q = rational_reconstruct(x, 1000000ull);
                    if (!q)
                        throw std::runtime_error("implicitize_by_degree: rational reconstruction of a generator failed");
                    qv.push_back(std::move(*q));
                }
                lifts.push_back(std::move(qv));
                cb.insert(std::move(red));
                if (static_cast<int>(lifts.size()) == newg) break;
            }
            if (static_cast<int>(lifts.size()) != newg)
                throw std::logic_error("implicitize_by_degree: generator count does not match the kernel quotient");
            res.lifted.emplace(k, std::move(lifts));
        }
        prev_kernel = std::move(kerV);
    }
    return res;
}

} // namespace

GeneratorCountReport implicitize_by_degree(int D, int d, int N, int degree_bound, uint64_t seed) {
    if (D != 2 || d != 2)
        throw std::invalid_argument("implicitize_by_degree: only D = d = 2 is supported (five-invariant parametrization)");
    if (N < 1 || degree_bound < 1)
        throw std::invalid_argument("implicitize_by_degree: N >= 1 and degree_bound >= 1 required");
    GeneratorCountReport rep;
    rep.D = D;
    rep.d = d;
    rep.N = N;
    rep.degree_bound = degree_bound;
    rep.seed = seed;
    rep.primes[0] = kDefaultPrime;
    rep.primes[1] = kCrossCheckPrime;

    RingPtr R = necklace_ring(N, 2);
    const int n = static_cast<int>(R->nvars());
    std::vector<std::vector<Monomial>> monos(static_cast<size_t>(degree_bound) + 1);
    std::vector<std::map<std::vector<uint16_t>, size_t>> midx(static_cast<size_t>(degree_bound) + 1);
    for (int k = 1; k <= degree_bound; ++k) {
        monos[static_cast<size_t>(k)] = monomials_of_degree(n, k);
        for (size_t j = 0; j < monos[static_cast<size_t>(k)].size(); ++j)
            midx[static_cast<size_t>(k)].emplace(monos[static_cast<size_t>(k)][j].e, j);
    }

    SweepResult a = implicitize_sweep(kDefaultPrime, true, N, degree_bound, seed, monos, midx);
    SweepResult b = implicitize_sweep(kCrossCheckPrime, false, N, degree_bound, seed, monos, midx);
    for (size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].vanishing_dim != b.rows[i].vanishing_dim ||
            a.rows[i].new_generators != b.rows[i].new_generators)
            throw std::runtime_error("implicitize_by_degree: the two working primes disagree");
    }
    rep.rows = a.rows;

    if (!a.lifted.empty()) {
        // Mandatory exact verification of every lifted generator.
        Rng vrng(seed ^ 0x9e3779b97f4a7c15ull);
        std::vector<std::vector<Rational>> points;
        for (int s = 0; s < 25; ++s) {
            MatrixTuple<Rational> m = random_tuple<Rational>(vrng, 2, 2, 10);
            points.push_back(evaluate_umps(m, N).coords());
        }
        for (auto& [k, vecs] : a.lifted) {
            const std::vector<Monomial>& mk = monos[static_cast<size_t>(k)];
            std::vector<MultiPoly<Rational>> polys;
            for (auto& cv : vecs) {
                std::vector<MultiPoly<Rational>::Term> terms;
                for (size_t j = 0; j < cv.size(); ++j)
                    if (!cv[j].is_zero()) terms.push_back({mk[j], cv[j]});
                MultiPoly<Rational> f = MultiPoly<Rational>::from_terms(R, std::move(terms));
                for (const auto& pt : points)
                    if (!f.evaluate(pt).is_zero())
                        throw std::logic_error("implicitize_by_degree: a lifted generator failed exact verification");
                polys.push_back(std::move(f));
            }
            rep.lifted.emplace(k, std::move(polys));
        }
    }
    return rep;
}

// ---- surjectivity of linearly parametrized families -------------------------

SubspaceSpec subspace_from_polys(RingPtr params, int D, int d, const std::vector<MultiPoly<Rational>>& forms) {
    if (!params) throw std::invalid_argument("subspace_from_polys: null parameter ring");
    if (D < 1 || d < 1) throw std::invalid_argument("subspace_from_polys: D, d >= 1 required");
    if (static_cast<int>(forms.size()) != d * D * D)
        throw std::invalid_argument("subspace_from_polys: need exactly d*D*D entry forms");
    SubspaceSpec S;
    S.params = params;
    S.D = D;
    S.d = d;
    S.mats.resize(static_cast<size_t>(d));
    size_t idx = 0;
    for (int i = 0; i < d; ++i) {
        S.mats[static_cast<size_t>(i)].resize(static_cast<size_t>(D));
        for (int r = 0; r < D; ++r) {
            for (int c = 0; c < D; ++c) {
                const MultiPoly<Rational>& f = forms[idx++];
                if (f.ring() != params && !(*f.ring() == *params))
                    throw std::invalid_argument("subspace_from_polys: entry ring mismatch");
                for (const auto& t : f.terms())
                    if (t.first.deg() != 1)
                        throw std::invalid_argument("subspace_from_polys: entries must be homogeneous linear forms");
                S.mats[static_cast<size_t>(i)][static_cast<size_t>(r)].push_back(f);
            }
        }
    }
    return S;
}

SurjectivityReport surjectivity_check(const SubspaceSpec& S, int N, uint64_t seed,
                                      uint64_t exact_budget, uint64_t modular_budget) {
    if (!S.params) throw std::invalid_argument("surjectivity_check: null parameter ring");
    if (S.D < 1 || S.d < 1 || N < 1) throw std::invalid_argument("surjectivity_check: parameters >= 1 required");
    if (static_cast<int>(S.mats.size()) != S.d)
        throw std::invalid_argument("surjectivity_check: malformed subspace");
    const int m = static_cast<int>(S.params->nvars());
    const size_t Dz = static_cast<size_t>(S.D);

    using PMat = std::vector<std::vector<MultiPoly<Rational>>>;
    auto pm_mul = [&](const PMat& A, const PMat& B) {
        PMat C(Dz, std::vector<MultiPoly<Rational>>(Dz, MultiPoly<Rational>::zero(S.params)));
        for (size_t i = 0; i < Dz; ++i)
            for (size_t l = 0; l < Dz; ++l) {
                if (A[i][l].is_zero()) continue;
                for (size_t j = 0; j < Dz; ++j) C[i][j] += A[i][l] * B[l][j];
            }
        return C;
    };

    std::vector<MultiPoly<Rational>> gens;
    for (const auto& nk : NecklaceTable::get(N, S.d).list()) {
        const Word& w = nk.word;
        PMat P = S.mats[w[0]];
        for (size_t j = 1; j < w.size(); ++j) P = pm_mul(P, S.mats[w[j]]);
        MultiPoly<Rational> tr = MultiPoly<Rational>::zero(S.params);
        for (size_t i = 0; i < Dz; ++i) tr += P[i][i];
        gens.push_back(std::move(tr));
    }

    SurjectivityReport rep;
    rep.D = S.D;
    rep.d = S.d;
    rep.N = N;
    rep.m = m;
    CertifiedLt clt = certified_lt_ideal(gens, exact_budget, modular_budget);
    rep.ideal_dim = dimension_from_lt(clt.lms, static_cast<size_t>(m), clt.unit);
    rep.modular = clt.modular;
    DimensionReport jd = jacobian_dimension(S.D, S.d, N, 3, seed);
    rep.fills_ambient = jd.fills_ambient;
    rep.precondition_ok = (m >= jd.jacobian_rank);
    if (!rep.precondition_ok)
        rep.verdict = "precondition violated";
    else if (rep.ideal_dim == 0 && rep.fills_ambient)
        rep.verdict = "image closed and fills";
    else
        rep.verdict = "no conclusion";
    return rep;
}

// ---- fiber counting ---------------------------------------------------------

namespace {

// nullopt when t* is degenerate (the parametrization Jacobian drops rank).
std::optional<FiberReport> try_fiber(int N, const std::vector<Rational>& tstar, uint64_t seed,
                                     uint64_t exact_budget, uint64_t modular_budget) {
    const std::vector<MultiPoly<Rational>> phi = trace_parametrization(N);
    std::vector<RowVec<Rational>> jrows;
    jrows.reserve(phi.size());
    for (const auto& f : phi) {
        RowVec<Rational> r;
        r.reserve(5);
        for (int j = 0; j < 5; ++j) r.push_back(partial_derivative(f, j).evaluate(tstar));
        jrows.push_back(std::move(r));
    }
    if (rank_of_rows(std::move(jrows)) < 5) return std::nullopt;

    FiberReport rep;
    rep.N = N;
    rep.seed = seed;
    rep.target_invariants = tstar;
    rep.target_coords.reserve(phi.size());
    for (const auto& f : phi) rep.target_coords.push_back(f.evaluate(tstar));

    std::vector<MultiPoly<Rational>> gens;
    gens.reserve(phi.size());
    for (size_t i = 0; i < phi.size(); ++i)
        gens.push_back(phi[i] - MultiPoly<Rational>::constant(trace_ring(), rep.target_coords[i]));

    CertifiedLt clt = certified_lt_ideal(gens, exact_budget, modular_budget);
    rep.modular = clt.modular;
    rep.ideal_dim = dimension_from_lt(clt.lms, 5, clt.unit);
    rep.degree = rep.ideal_dim == 0 ? degree_from_lt(clt.lms, 5, clt.unit) : 0;
    rep.matches_N = (rep.ideal_dim == 0 && rep.degree == static_cast<uint64_t>(N));
    return rep;
}

} // namespace

FiberReport fiber_count(int N, uint64_t seed, uint64_t exact_budget, uint64_t modular_budget) {
    if (N < 5) throw std::invalid_argument("fiber_count: N >= 5 required");
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Rational> t;
        t.reserve(5);
        for (int j = 0; j < 5; ++j) t.push_back(rng.rational(20));
        std::optional<FiberReport> rep = try_fiber(N, t, seed, exact_budget, modular_budget);
        if (rep) return std::move(*rep);
    }
    throw std::runtime_error("fiber_count: failed to sample a generic target");
}

FiberReport fiber_count_at(int N, const std::vector<Rational>& t_star,
                           uint64_t exact_budget, uint64_t modular_budget) {
    if (N < 5) throw std::invalid_argument("fiber_count: N >= 5 required");
    if (t_star.size() != 5) throw std::invalid_argument("fiber_count: five invariant coordinates required");
    std::optional<FiberReport> rep = try_fiber(N, t_star, 0, exact_budget, modular_budget);
    if (!rep)
        throw std::invalid_argument("fiber_count: degenerate target (the parametrization Jacobian drops rank)");
    return std::move(*rep);
}

} // namespace umps
