#pragma once
// Ideals, Buchberger's algorithm (normal selection, both elimination
// criteria), normal forms, and leading-term queries: Krull dimension of the
// vanishing set and quotient degree for zero-dimensional ideals.
//
// Exactness policy: unit-ideal certificates (basis = {1}) are only ever
// produced by computation over the exact coefficient field. Modular runs are
// used for counting queries, and only accepted when two independent primes
// agree on the full leading-term ideal.

#include "umps/poly.hpp"
#include "umps/primefield.hpp"
#include "umps/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace umps {

inline constexpr uint64_t kDefaultGroebnerBudget = 4000000;

// Coefficient-size cap applied to the exact attempt of certified runs: a
// reduction whose rationals legitimately stay handleable never reaches it,
// while an exploding one trips it within a few thousand steps.
inline constexpr uint64_t kExactCoeffBitLimit = 2048;

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(uint64_t steps_)
        : std::runtime_error("groebner: step budget exceeded after " + std::to_string(steps_) + " reductions"),
          steps(steps_) {}
    BudgetExceeded(uint64_t steps_, uint64_t bits_)
        : std::runtime_error("groebner: coefficient size exceeded " + std::to_string(bits_) +
                             " bits after " + std::to_string(steps_) + " reductions"),
          steps(steps_) {}
    uint64_t steps;
};

// Canonical representative of the scalar ray: monic over a general field,
// primitive integer with positive leading coefficient over the rationals.
template <class K>
void canonical_scale(MultiPoly<K>& f) {
    if (f.is_zero()) return;
    f *= K(1) / f.leading_coeff();
}

inline void canonical_scale(MultiPoly<Rational>& f) {
    if (f.is_zero()) return;
    mpz_class L = 1;
    for (const auto& t : f.terms()) L = lcm_z(L, t.second.den());
    mpz_class G = 0;
    for (const auto& t : f.terms()) G = gcd_z(G, t.second.num() * (L / t.second.den()));
    Rational s = Rational(L) / Rational(G);
    if (f.leading_coeff().sign() < 0) s = -s;
    f *= s;
}

namespace detail {
struct StepBudget {
    uint64_t used = 0;
    uint64_t limit = kDefaultGroebnerBudget;
    // Optional cap on exact-coefficient size (0 = off). Rational reductions
    // that start exploding blow past any such bound almost immediately, so
    // this turns hopeless exact runs into a fast, deterministic bail-out
    // while leaving tame ones untouched.
    uint64_t coeff_bit_limit = 0;
    void tick() {
        if (++used > limit) throw BudgetExceeded(used);
    }
    void check_coeff(uint64_t bits) const {
        if (coeff_bit_limit && bits > coeff_bit_limit) throw BudgetExceeded(used, bits);
    }
};

// Bit size of an exact scalar, used by the optional explosion guard; scalar
// types without unbounded representations report zero.
template <class K>
inline uint64_t coeff_bits(const K&) {
    return 0;
}
inline uint64_t coeff_bits(const Rational& x) {
    return mpz_sizeinbase(x.num().get_mpz_t(), 2) + mpz_sizeinbase(x.den().get_mpz_t(), 2);
}
inline uint64_t coeff_bits(const QuadExt& x) {
    return std::max(coeff_bits(x.a()), coeff_bits(x.b()));
}

// Flat row-major cache of a reducer list's leading monomials (total degree
// plus exponent row per member), index-aligned with the backing vector. The
// lowest-index divisor of a monomial is exactly the first-match reducer the
// definition of normal_form calls for, found here without pointer-chasing
// into each polynomial. Zero members get an infinite degree so they are
// never selected.
struct LeadIndex {
    static constexpr size_t npos = static_cast<size_t>(-1);
    size_t nvars;
    std::vector<uint32_t> deg;
    std::vector<uint16_t> exps;

    explicit LeadIndex(size_t nv) : nvars(nv) {}

    void append_zero() {
        deg.push_back(UINT32_MAX);
        exps.resize(exps.size() + nvars, uint16_t(0));
    }
    void append(const Monomial& m) {
        deg.push_back(m.deg());
        exps.insert(exps.end(), m.e.begin(), m.e.end());
    }
    size_t size() const { return deg.size(); }

    size_t min_divisor(const Monomial& m, uint32_t mdeg) const {
        const size_t n = deg.size();
        for (size_t k = 0; k < n; ++k) {
            if (deg[k] > mdeg) continue;
            const uint16_t* a = exps.data() + k * nvars;
            bool ok = true;
            for (size_t v = 0; v < nvars; ++v)
                if (a[v] > m.e[v]) {
                    ok = false;
                    break;
                }
            if (ok) return k;
        }
        return npos;
    }
    bool divides(size_t k, const Monomial& m, uint32_t mdeg) const {
        if (deg[k] > mdeg) return false;
        const uint16_t* a = exps.data() + k * nvars;
        for (size_t v = 0; v < nvars; ++v)
            if (a[v] > m.e[v]) return false;
        return true;
    }
};

// Order-isomorphic integer keys for graded reverse lexicographic rings with
// few variables: the top bits hold the total degree and each variable, last
// to first, contributes a complemented exponent field, so unsigned
// comparison of keys agrees with the monomial order. Because the order is
// graded, no monomial produced by the division algorithm exceeds the
// dividend's leading degree, so a single bound check at entry covers the
// whole run.
struct GrevlexKeys {
    size_t nvars = 0;
    unsigned bits = 0;
    uint64_t mask = 0;

    static std::optional<GrevlexKeys> make(const PolyRing& ring) {
        if (ring.order != MonomialOrder::grevlex()) return std::nullopt;
        const size_t n = ring.nvars();
        if (n == 0 || n > 15) return std::nullopt;
        GrevlexKeys g;
        g.nvars = n;
        g.bits = static_cast<unsigned>(64 / (n + 1));
        g.mask = (uint64_t(1) << g.bits) - 1;
        return g;
    }
    // Keys are exact for every monomial of total degree within the bound
    // (each exponent is then within it too).
    bool fits(uint32_t degree) const { return degree <= mask; }
    uint64_t pack(const Monomial& m) const {
        uint64_t k = uint64_t(m.deg()) << (bits * nvars);
        for (size_t v = 0; v < nvars; ++v)
            k |= (mask - m.e[v]) << (bits * v);
        return k;
    }
    Monomial unpack(uint64_t k) const {
        Monomial m(nvars);
        for (size_t v = 0; v < nvars; ++v)
            m.e[v] = static_cast<uint16_t>(mask - ((k >> (bits * v)) & mask));
        return m;
    }
    // key(t * q) = key(t) + shift(q) whenever t * q stays within the degree
    // bound (two's-complement wraparound in the intermediate is harmless).
    uint64_t shift(const Monomial& q) const {
        uint64_t s = uint64_t(q.deg()) << (bits * nvars);
        for (size_t v = 0; v < nvars; ++v)
            s -= uint64_t(q.e[v]) << (bits * v);
        return s;
    }
};

// Packed-key companion of LeadIndex for a growing reducer list: every
// member's term keys are cached once. Usable while every member's leading
// degree fits the key fields; the first overflow disables it for good.
template <class K>
struct PackedBasis {
    GrevlexKeys gk;
    std::vector<std::vector<uint64_t>> term_keys;
    bool ok = true;

    explicit PackedBasis(const GrevlexKeys& g) : gk(g) {}
    void append(const MultiPoly<K>& g) {
        if (!ok) return;
        if (g.is_zero()) {
            term_keys.emplace_back();
            return;
        }
        if (!gk.fits(g.leading_monomial().deg())) {
            ok = false;
            return;
        }
        std::vector<uint64_t> ks;
        ks.reserve(g.terms().size());
        for (const auto& t : g.terms()) ks.push_back(gk.pack(t.first));
        term_keys.push_back(std::move(ks));
    }
};
} // namespace detail

namespace detail {
// Division algorithm over packed integer keys: one elimination step is a
// key-plus-shift map update per reducer term, with no monomial arithmetic.
template <class K>
MultiPoly<K> normal_form_packed(const MultiPoly<K>& f, const std::vector<MultiPoly<K>>& G,
                                const LeadIndex& idx, const PackedBasis<K>& pb,
                                StepBudget* budget) {
    const GrevlexKeys& gk = pb.gk;
    std::map<uint64_t, K, std::greater<uint64_t>> work;
    for (const auto& t : f.terms()) work.emplace(gk.pack(t.first), t.second);
    std::vector<typename MultiPoly<K>::Term> rem;
    while (!work.empty()) {
        if (budget) budget->tick();
        auto lead = work.begin();
        const Monomial lm = gk.unpack(lead->first);
        const uint32_t ldeg = static_cast<uint32_t>(lead->first >> (gk.bits * gk.nvars));
        size_t k = idx.min_divisor(lm, ldeg);
        if (k == LeadIndex::npos) {
            rem.push_back({lm, lead->second});
            work.erase(lead);
            continue;
        }
        const MultiPoly<K>& g = G[k];
        const uint64_t delta = gk.shift(mono_div(lm, g.leading_monomial()));
        const K c = lead->second / g.leading_coeff();
        if (budget) budget->check_coeff(coeff_bits(c));
        const auto& gts = g.terms();
        const auto& gks = pb.term_keys[k];
        for (size_t i = 0; i < gts.size(); ++i) {
            const uint64_t m = gks[i] + delta;
            K d = c * gts[i].second;
            auto it = work.find(m);
            if (it == work.end()) {
                if (!ScalarTraits<K>::is_zero(d)) work.emplace(m, -d);
            } else {
                it->second -= d;
                if (ScalarTraits<K>::is_zero(it->second)) work.erase(it);
            }
        }
    }
    return MultiPoly<K>::from_terms(f.ring(), std::move(rem));
}

// Core of the division algorithm: idx caches G's leading monomials and is
// index-aligned with G; pb (optional) additionally caches packed term keys.
// The working tail lives in an ordered map so one elimination step touches
// only the reducer's terms, not the whole polynomial. The reducer for each
// term is the lowest-index member of G whose leading monomial divides it.
template <class K>
MultiPoly<K> normal_form_indexed(MultiPoly<K> f, const std::vector<MultiPoly<K>>& G,
                                 const LeadIndex& idx, const PackedBasis<K>* pb,
                                 StepBudget* budget) {
    if (f.is_zero()) return f;
    if (pb && pb->ok && pb->gk.fits(f.leading_monomial().deg()))
        return normal_form_packed(f, G, idx, *pb, budget);
    const MonomialOrder& ord = f.ring()->order;
    auto desc = [&ord](const Monomial& x, const Monomial& y) { return ord.compare(x, y) > 0; };
    std::map<Monomial, K, decltype(desc)> work(desc);
    for (const auto& t : f.terms()) work.emplace(t.first, t.second);
    std::vector<typename MultiPoly<K>::Term> rem;
    while (!work.empty()) {
        if (budget) budget->tick();
        auto lead = work.begin();
        size_t k = idx.min_divisor(lead->first, lead->first.deg());
        if (k == LeadIndex::npos) {
            rem.push_back({lead->first, lead->second});
            work.erase(lead);
            continue;
        }
        const MultiPoly<K>& reducer = G[k];
        const Monomial q = mono_div(lead->first, reducer.leading_monomial());
        const K c = lead->second / reducer.leading_coeff();
        if (budget) budget->check_coeff(coeff_bits(c));
        for (const auto& t : reducer.terms()) {
            Monomial m = mono_mul(t.first, q);
            K delta = c * t.second;
            auto it = work.find(m);
            if (it == work.end()) {
                if (!ScalarTraits<K>::is_zero(delta)) work.emplace(std::move(m), -delta);
            } else {
                it->second -= delta;
                if (ScalarTraits<K>::is_zero(it->second)) work.erase(it);
            }
        }
    }
    return MultiPoly<K>::from_terms(f.ring(), std::move(rem));
}
} // namespace detail

// Full normal form of f modulo G (every term reduced). The reducer for each
// term is the first member of G (in the given order) whose leading monomial
// divides it.
template <class K>
MultiPoly<K> normal_form(MultiPoly<K> f, const std::vector<MultiPoly<K>>& G,
                         detail::StepBudget* budget = nullptr) {
    if (f.is_zero()) return f;
    detail::LeadIndex idx(f.ring()->nvars());
    for (const auto& g : G) {
        if (g.is_zero())
            idx.append_zero();
        else
            idx.append(g.leading_monomial());
    }
    std::optional<detail::PackedBasis<K>> pb;
    if (auto gk = detail::GrevlexKeys::make(*f.ring())) {
        pb.emplace(*gk);
        for (const auto& g : G) pb->append(g);
    }
    return detail::normal_form_indexed(std::move(f), G, idx, pb ? &*pb : nullptr, budget);
}

template <class K>
MultiPoly<K> s_poly(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    MultiPoly<K> a = f.times_term(mono_div(l, f.leading_monomial()), K(1) / f.leading_coeff());
    MultiPoly<K> b = g.times_term(mono_div(l, g.leading_monomial()), K(1) / g.leading_coeff());
    return a - b;
}

// Reduced Groebner basis of the input generators, in the generators' ring
// order. Unit ideals come back as the single constant 1; the zero ideal as
// an empty basis. Throws BudgetExceeded when the step budget runs out.
template <class K>
std::vector<MultiPoly<K>> buchberger(const std::vector<MultiPoly<K>>& gens,
                                     uint64_t budget_limit = kDefaultGroebnerBudget,
                                     uint64_t coeff_bit_limit = 0) {
    detail::StepBudget budget{0, budget_limit, coeff_bit_limit};
    RingPtr ring;
    std::vector<MultiPoly<K>> G;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!ring) ring = g.ring();
        MultiPoly<K> h = g;
        canonical_scale(h);
        G.push_back(std::move(h));
    }
    if (G.empty()) return {};

    auto make_unit = [&]() {
        return std::vector<MultiPoly<K>>{MultiPoly<K>::constant(ring, K(1))};
    };
    for (const auto& g : G) {
        if (g.is_constant()) return make_unit();
    }

    const MonomialOrder& ord = ring->order;
    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    // Normal selection: smallest lcm in the ring order, ties by (i, j). The
    // comparator says "a comes after b", making the priority queue a min-heap
    // under that total order; (i, j) is unique per pair, so selection is
    // deterministic. Leading monomials of basis members never change once
    // pushed, so the lcm snapshots stay valid.
    struct PairAfter {
        const MonomialOrder* ord;
        bool operator()(const Pair& a, const Pair& b) const {
            int c = ord->compare(a.lcm, b.lcm);
            if (c != 0) return c > 0;
            if (a.i != b.i) return a.i > b.i;
            return a.j > b.j;
        }
    };
    std::priority_queue<Pair, std::vector<Pair>, PairAfter> queue{PairAfter{&ord}};
    std::set<std::pair<size_t, size_t>> pending;
    detail::LeadIndex lidx(ring->nvars());
    for (const auto& g : G) lidx.append(g.leading_monomial());
    std::optional<detail::PackedBasis<K>> pbasis;
    if (auto gk = detail::GrevlexKeys::make(*ring)) {
        pbasis.emplace(*gk);
        for (const auto& g : G) pbasis->append(g);
    }
    auto push_pairs = [&](size_t jnew) {
        for (size_t i = 0; i < jnew; ++i) {
            queue.push({i, jnew, mono_lcm(G[i].leading_monomial(), G[jnew].leading_monomial())});
            pending.insert({i, jnew});
        }
    };
    for (size_t j = 1; j < G.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        Pair pr = queue.top();
        queue.pop();
        pending.erase({pr.i, pr.j});

        const Monomial& li = G[pr.i].leading_monomial();
        const Monomial& lj = G[pr.j].leading_monomial();
        // First criterion: coprime leading monomials.
        if (mono_coprime(li, lj)) continue;
        // Chain criterion: some k divides the lcm and both cross pairs are
        // already handled.
        bool chained = false;
        const uint32_t lcm_deg = pr.lcm.deg();
        for (size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lidx.divides(k, pr.lcm, lcm_deg)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (pending.count({key_ik.first, key_ik.second}) == 0 &&
                pending.count({key_jk.first, key_jk.second}) == 0)
                chained = true;
        }
        if (chained) continue;

        MultiPoly<K> h = detail::normal_form_indexed(s_poly(G[pr.i], G[pr.j]), G, lidx,
                                                     pbasis ? &*pbasis : nullptr, &budget);
        if (h.is_zero()) continue;
        canonical_scale(h);
        if (h.is_constant()) return make_unit();
        lidx.append(h.leading_monomial());
        if (pbasis) pbasis->append(h);
        G.push_back(std::move(h));
        push_pairs(G.size() - 1);
    }

    // Minimalize: drop members whose leading monomial is divisible by another's.
    std::vector<bool> keep(G.size(), true);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (mono_divides(G[j].leading_monomial(), G[i].leading_monomial())) {
                // Break ties (equal LMs) deterministically: keep the earlier.
                if (G[j].leading_monomial() == G[i].leading_monomial() && j > i) continue;
                keep[i] = false;
            }
        }
    }
    std::vector<MultiPoly<K>> minimal;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(G[i]));

    // Reduce each member's tail against the full minimal set. The member
    // itself can never act as a reducer here: its tail terms (and everything
    // they rewrite to) lie strictly below its leading monomial, while any
    // multiple of that leading monomial would be at least as large; and in a
    // minimal basis no other leading monomial divides it either.
    std::vector<MultiPoly<K>> reduced;
    reduced.reserve(minimal.size());
    detail::LeadIndex midx(ring->nvars());
    for (const auto& g : minimal) midx.append(g.leading_monomial());
    std::optional<detail::PackedBasis<K>> mpb;
    if (auto gk = detail::GrevlexKeys::make(*ring)) {
        mpb.emplace(*gk);
        for (const auto& g : minimal) mpb->append(g);
    }
    for (size_t i = 0; i < minimal.size(); ++i) {
        const auto& ts = minimal[i].terms();
        std::vector<typename MultiPoly<K>::Term> tail(ts.begin() + 1, ts.end());
        MultiPoly<K> nf = detail::normal_form_indexed(
            MultiPoly<K>::from_terms(ring, std::move(tail)), minimal, midx,
            mpb ? &*mpb : nullptr, &budget);
        std::vector<typename MultiPoly<K>::Term> full;
        full.reserve(nf.terms().size() + 1);
        full.push_back(ts.front());
        for (const auto& t : nf.terms()) full.push_back(t);
        MultiPoly<K> r = MultiPoly<K>::from_terms(ring, std::move(full));
        canonical_scale(r);
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&ord](const MultiPoly<K>& a, const MultiPoly<K>& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

template <class K>
struct Ideal {
    RingPtr ring;
    std::vector<MultiPoly<K>> gens;  // zero generators dropped on construction
    std::optional<std::vector<MultiPoly<K>>> basis;  // reduced basis in ring->order

    Ideal() = default;
    Ideal(RingPtr r, std::vector<MultiPoly<K>> gs) : ring(std::move(r)) {
        for (auto& g : gs) {
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    }

    bool has_basis() const { return basis.has_value(); }
    bool is_unit() const {
        if (!basis) throw std::logic_error("Ideal: no cached basis");
        return basis->size() == 1 && (*basis)[0].is_constant();
    }
};

// Groebner basis in the requested order (re-sorting generators into a fresh
// ring when the order differs).
template <class K>
Ideal<K> groebner(const Ideal<K>& I, const MonomialOrder& order,
                  uint64_t budget = kDefaultGroebnerBudget) {
    RingPtr ring = I.ring;
    std::vector<MultiPoly<K>> gens;
    if (!(ring->order == order)) {
        ring = PolyRing::make(I.ring->vars, order);
        for (const auto& g : I.gens) {
            std::vector<typename MultiPoly<K>::Term> ts(g.terms().begin(), g.terms().end());
            gens.push_back(MultiPoly<K>::from_terms(ring, std::move(ts)));
        }
    } else {
        gens = I.gens;
    }
    Ideal<K> out(ring, gens);
    out.basis = buchberger(out.gens, budget);
    return out;
}

template <class K>
Ideal<K> groebner(const Ideal<K>& I, uint64_t budget = kDefaultGroebnerBudget) {
    return groebner(I, I.ring->order, budget);
}

// Normal form against the cached basis; zero iff f is in the ideal.
template <class K>
MultiPoly<K> reduce(const MultiPoly<K>& f, const Ideal<K>& I) {
    if (!I.basis) throw std::logic_error("reduce: ideal has no cached basis");
    if (f.ring() && I.ring && f.ring() != I.ring && !(*f.ring() == *I.ring))
        throw std::invalid_argument("reduce: ring mismatch");
    return normal_form(f, *I.basis);
}

// ---- Leading-term queries ------------------------------------------------

// Krull dimension of V(I) from the leading-term ideal: the size of the
// largest variable subset S such that no leading monomial is supported
// entirely inside S. Unit ideal: -1. Zero ideal: nvars.
inline int dimension_from_lt(const std::vector<Monomial>& lms, size_t nvars, bool unit) {
    if (unit) return -1;
    if (lms.empty()) return static_cast<int>(nvars);
    if (nvars > 24) throw std::invalid_argument("dimension_from_lt: too many variables");
    std::vector<uint32_t> support;
    support.reserve(lms.size());
    for (const auto& m : lms) {
        uint32_t s = 0;
        for (size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i]) s |= (1u << i);
        support.push_back(s);
    }
    int best = 0;
    const uint32_t full = (nvars == 32) ? ~0u : ((1u << nvars) - 1);
    for (uint32_t mask = 0; mask <= full; ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc <= best) continue;
        bool independent = true;
        for (uint32_t s : support) {
            if ((s & ~mask) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = pc;
    }
    return best;
}

// Number of standard monomials (monomials outside the leading-term ideal);
// finite iff the ideal is zero-dimensional, else throws.
inline uint64_t degree_from_lt(const std::vector<Monomial>& lms, size_t nvars, bool unit) {
    if (unit) return 0;
    // Pure-power bound per variable; absence of one means positive dimension.
    std::vector<uint32_t> bound(nvars, 0);
    for (const auto& m : lms) {
        int var = -1;
        bool pure = true;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i]) {
                if (var >= 0) { pure = false; break; }
                var = static_cast<int>(i);
            }
        }
        if (pure && var >= 0) {
            uint32_t e = m.e[static_cast<size_t>(var)];
            if (bound[static_cast<size_t>(var)] == 0 || e < bound[static_cast<size_t>(var)])
                bound[static_cast<size_t>(var)] = e;
        }
    }
    for (size_t i = 0; i < nvars; ++i)
        if (bound[i] == 0) throw std::logic_error("degree_from_lt: ideal is not zero-dimensional");

    uint64_t count = 0;
    Monomial m(nvars);
    auto rec = [&](auto&& self, size_t var) -> void {
        if (var == nvars) {
            for (const auto& lm : lms) {
                if (mono_divides(lm, m)) return;
            }
            ++count;
            return;
        }
        for (uint32_t e = 0; e < bound[var]; ++e) {
            m.e[var] = static_cast<uint16_t>(e);
            self(self, var + 1);
        }
        m.e[var] = 0;
    };
    rec(rec, 0);
    return count;
}

template <class K>
std::vector<Monomial> leading_monomials(const std::vector<MultiPoly<K>>& basis) {
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) lms.push_back(g.leading_monomial());
    return lms;
}

template <class K>
int ideal_dimension(const Ideal<K>& I) {
    if (!I.basis) throw std::logic_error("ideal_dimension: no cached basis");
    return dimension_from_lt(leading_monomials(*I.basis), I.ring->nvars(), I.is_unit());
}

template <class K>
uint64_t quotient_degree(const Ideal<K>& I) {
    if (!I.basis) throw std::logic_error("quotient_degree: no cached basis");
    return degree_from_lt(leading_monomials(*I.basis), I.ring->nvars(), I.is_unit());
}

template <class K>
bool vanishes_at(const Ideal<K>& I, const std::vector<K>& point) {
    for (const auto& g : I.gens) {
        if (!ScalarTraits<K>::is_zero(g.evaluate(point))) return false;
    }
    return true;
}

// ---- Modular fallback ------------------------------------------------------

// Reduce rational generators modulo the active prime.
inline std::vector<MultiPoly<Fp>> polys_mod_active(const std::vector<MultiPoly<Rational>>& gens) {
    std::vector<MultiPoly<Fp>> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(map_coefficients<Fp>(g, [](const Rational& q) { return to_fp(q); }));
    return out;
}

struct CertifiedLt {
    std::vector<Monomial> lms;  // leading-term ideal generators (reduced basis LMs)
    bool unit = false;
    bool modular = false;       // true: two-prime agreement; false: exact field run
    uint64_t primes[2] = {0, 0};
};

// Leading-term ideal of a rational ideal: exact run first; on budget
// exhaustion fall back to two independent primes and require identical
// leading-term data. Disagreement (an unlucky prime) raises.
inline CertifiedLt certified_lt_ideal(const std::vector<MultiPoly<Rational>>& gens,
                                      uint64_t exact_budget,
                                      uint64_t modular_budget = kDefaultGroebnerBudget,
                                      uint64_t p1 = kDefaultPrime,
                                      uint64_t p2 = kCrossCheckPrime) {
    CertifiedLt out;
    try {
        auto basis = buchberger(gens, exact_budget, kExactCoeffBitLimit);
        out.lms = leading_monomials(basis);
        out.unit = basis.size() == 1 && basis[0].is_constant();
        return out;
    } catch (const BudgetExceeded&) {
        // fall through to the modular path
    }
    auto run = [&](uint64_t p) {
        FpScope scope(p);
        auto basis = buchberger(polys_mod_active(gens), modular_budget);
        bool unit = basis.size() == 1 && basis[0].is_constant();
        return std::make_pair(leading_monomials(basis), unit);
    };
    auto [lt1, unit1] = run(p1);
    auto [lt2, unit2] = run(p2);
    if (unit1 != unit2 || !(lt1 == lt2))
        throw std::runtime_error("certified_lt_ideal: primes disagree on the leading-term ideal");
    out.lms = std::move(lt1);
    out.unit = unit1;
    out.modular = true;
    out.primes[0] = p1;
    out.primes[1] = p2;
    return out;
}

} // namespace umps
