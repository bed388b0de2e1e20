#pragma once
// Exact multivariate polynomials: monomials, term orders, rings, arithmetic.

#include "umps/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umps {

struct Monomial {
    std::vector<uint16_t> e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<uint16_t> exps) : e(std::move(exps)) {}

    size_t nvars() const { return e.size(); }
    unsigned deg() const {
        unsigned s = 0;
        for (uint16_t x : e) s += x;
        return s;
    }
    bool is_one() const {
        for (uint16_t x : e)
            if (x) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = static_cast<uint16_t>(r.e[i] + b.e[i]);
    return r;
}

// Does a divide b?
inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a, defined when a | b.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = static_cast<uint16_t>(r.e[i] - a.e[i]);
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Elim };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    // Block order eliminating the first `split` variables: compare that block
    // by grevlex first, ties by grevlex on the remaining block.
    static MonomialOrder elim(int split) {
        if (split < 1) throw std::invalid_argument("MonomialOrder::elim: split >= 1 required");
        return MonomialOrder(Kind::Elim, split);
    }

    Kind kind() const { return kind_; }
    int split() const { return split_; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string str() const;
    static MonomialOrder parse(const std::string& s);

    friend bool operator==(const MonomialOrder& x, const MonomialOrder& y) {
        return x.kind_ == y.kind_ && x.split_ == y.split_;
    }
    friend bool operator!=(const MonomialOrder& x, const MonomialOrder& y) { return !(x == y); }

private:
    MonomialOrder(Kind k, int s) : kind_(k), split_(s) {}
    static int grevlex_block(const Monomial& a, const Monomial& b, size_t lo, size_t hi);

    Kind kind_;
    int split_;
};

struct PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

struct PolyRing {
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::grevlex();

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.vars == b.vars && a.order == b.order;
    }
    friend bool operator!=(const PolyRing& a, const PolyRing& b) { return !(a == b); }

    static RingPtr make(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex());
};

// Terms are kept sorted in strictly descending monomial order, no zeros.
template <class K>
class MultiPoly {
public:
    using Term = std::pair<Monomial, K>;

    MultiPoly() = default;  // zero over a null ring; usable only as a placeholder
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
    static MultiPoly constant(RingPtr ring, const K& c) {
        MultiPoly f(std::move(ring));
        if (!ScalarTraits<K>::is_zero(c)) f.t_.push_back({Monomial(f.ring_->nvars()), c});
        return f;
    }
    static MultiPoly variable(RingPtr ring, int idx) {
        MultiPoly f(std::move(ring));
        if (idx < 0 || static_cast<size_t>(idx) >= f.ring_->nvars())
            throw std::out_of_range("MultiPoly::variable: index out of range");
        Monomial m(f.ring_->nvars());
        m.e[static_cast<size_t>(idx)] = 1;
        f.t_.push_back({std::move(m), K(1)});
        return f;
    }
    static MultiPoly monomial(RingPtr ring, Monomial m, const K& c) {
        MultiPoly f(std::move(ring));
        if (m.nvars() != f.ring_->nvars()) throw std::invalid_argument("MultiPoly::monomial: arity mismatch");
        if (!ScalarTraits<K>::is_zero(c)) f.t_.push_back({std::move(m), c});
        return f;
    }
    static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms) {
        MultiPoly f(std::move(ring));
        f.t_ = std::move(terms);
        f.normalize();
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t nterms() const { return t_.size(); }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw std::logic_error("MultiPoly: leading term of zero");
        return t_.front().first;
    }
    const K& leading_coeff() const {
        if (is_zero()) throw std::logic_error("MultiPoly: leading term of zero");
        return t_.front().second;
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (const Term& t : t_) d = std::max(d, t.first.deg());
        return d;
    }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
    K constant_value() const {
        if (t_.empty()) return K(0);
        if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
        return t_[0].second;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (Term& t : r.t_) t.second = -t.second;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_ring(o);
        *this = merged(*this, o, false);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_ring(o);
        *this = merged(*this, o, true);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

    MultiPoly& operator*=(const K& c) {
        if (ScalarTraits<K>::is_zero(c)) {
            t_.clear();
        } else {
            for (Term& t : t_) t.second *= c;
            drop_zeros();
        }
        return *this;
    }
    friend MultiPoly operator*(const K& c, MultiPoly f) { f *= c; return f; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_ring(b);
        MultiPoly r(a.ring_ ? a.ring_ : b.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        const MonomialOrder& ord = r.ring_->order;
        auto desc = [&ord](const Monomial& x, const Monomial& y) { return ord.compare(x, y) > 0; };
        std::map<Monomial, K, decltype(desc)> acc(desc);
        for (const Term& s : a.t_)
            for (const Term& t : b.t_) {
                Monomial m = mono_mul(s.first, t.first);
                K c = s.second * t.second;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
                else it->second += c;
            }
        for (auto& kv : acc)
            if (!ScalarTraits<K>::is_zero(kv.second)) r.t_.push_back({kv.first, kv.second});
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) {
        *this = *this * o;
        return *this;
    }

    // f * c*m, the work-horse of division.
    MultiPoly times_term(const Monomial& m, const K& c) const {
        MultiPoly r(ring_);
        if (ScalarTraits<K>::is_zero(c)) return r;
        r.t_.reserve(t_.size());
        for (const Term& t : t_) r.t_.push_back({mono_mul(t.first, m), t.second * c});
        r.drop_zeros();
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        if (a.t_.size() != b.t_.size()) return false;
        for (size_t i = 0; i < a.t_.size(); ++i)
            if (a.t_[i].first != b.t_[i].first || !(a.t_[i].second == b.t_[i].second)) return false;
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    K coeff(const Monomial& m) const {
        for (const Term& t : t_)
            if (t.first == m) return t.second;
        return K(0);
    }

    K evaluate(const std::vector<K>& point) const {
        if (ring_ && point.size() != ring_->nvars())
            throw std::invalid_argument("MultiPoly::evaluate: point arity mismatch");
        K acc(0);
        for (const Term& t : t_) {
            K v = t.second;
            for (size_t i = 0; i < t.first.e.size(); ++i)
                for (uint16_t k = 0; k < t.first.e[i]; ++k) v *= point[i];
            acc += v;
        }
        return acc;
    }

    MultiPoly pow(unsigned n) const {
        MultiPoly r = constant(ring_, K(1));
        for (unsigned i = 0; i < n; ++i) r *= *this;
        return r;
    }

private:
    void normalize() {
        const MonomialOrder& ord = ring_->order;
        std::sort(t_.begin(), t_.end(), [&ord](const Term& x, const Term& y) {
            return ord.compare(x.first, y.first) > 0;
        });
        std::vector<Term> out;
        out.reserve(t_.size());
        for (Term& t : t_) {
            if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
            else out.push_back(std::move(t));
        }
        t_ = std::move(out);
        drop_zeros();
    }
    void drop_zeros() {
        size_t w = 0;
        for (size_t i = 0; i < t_.size(); ++i) {
            if (!ScalarTraits<K>::is_zero(t_[i].second)) {
                if (w != i) t_[w] = std::move(t_[i]);
                ++w;
            }
        }
        t_.resize(w);
    }
    // Linear-time ordered merge of two sorted term lists.
    static MultiPoly merged(const MultiPoly& a, const MultiPoly& b, bool subtract) {
        MultiPoly r(a.ring_ ? a.ring_ : b.ring_);
        if (!r.ring_) return r;
        const MonomialOrder& ord = r.ring_->order;
        size_t i = 0, j = 0;
        r.t_.reserve(a.t_.size() + b.t_.size());
        while (i < a.t_.size() || j < b.t_.size()) {
            int c;
            if (i == a.t_.size()) c = -1;
            else if (j == b.t_.size()) c = 1;
            else c = ord.compare(a.t_[i].first, b.t_[j].first);
            if (c > 0) {
                r.t_.push_back(a.t_[i++]);
            } else if (c < 0) {
                const Term& t = b.t_[j++];
                r.t_.push_back({t.first, subtract ? -t.second : t.second});
            } else {
                K v = subtract ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
                if (!ScalarTraits<K>::is_zero(v)) r.t_.push_back({a.t_[i].first, std::move(v)});
                ++i;
                ++j;
            }
        }
        return r;
    }
    void check_ring(const MultiPoly& o) const {
        if (ring_ && o.ring_ && ring_ != o.ring_ && !(*ring_ == *o.ring_))
            throw std::invalid_argument("MultiPoly: mixed rings");
    }

    RingPtr ring_;
    std::vector<Term> t_;
};

template <class K>
MultiPoly<K> partial_derivative(const MultiPoly<K>& f, int var) {
    if (!f.ring()) return f;
    if (var < 0 || static_cast<size_t>(var) >= f.ring()->nvars())
        throw std::out_of_range("partial_derivative: variable out of range");
    std::vector<typename MultiPoly<K>::Term> terms;
    for (const auto& t : f.terms()) {
        uint16_t e = t.first.e[static_cast<size_t>(var)];
        if (e == 0) continue;
        Monomial m = t.first;
        m.e[static_cast<size_t>(var)] = static_cast<uint16_t>(e - 1);
        terms.push_back({std::move(m), t.second * K(static_cast<int>(e))});
    }
    return MultiPoly<K>::from_terms(f.ring(), std::move(terms));
}

// Apply a scalar map coefficient-wise (e.g. reduce mod p, lift, promote).
template <class K2, class K, class F>
MultiPoly<K2> map_coefficients(const MultiPoly<K>& f, F&& fn) {
    std::vector<typename MultiPoly<K2>::Term> terms;
    terms.reserve(f.nterms());
    for (const auto& t : f.terms()) terms.push_back({t.first, fn(t.second)});
    return MultiPoly<K2>::from_terms(f.ring(), std::move(terms));
}

} // namespace umps
