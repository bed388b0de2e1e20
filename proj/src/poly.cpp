#include "umps/poly.hpp"

#include <algorithm>

namespace umps {

int MonomialOrder::grevlex_block(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    long da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // Ties: the last variable where they differ decides, smaller exponent wins.
    for (size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("MonomialOrder: arity mismatch");
    const size_t n = a.e.size();
    switch (kind_) {
        case Kind::Grevlex:
            return grevlex_block(a, b, 0, n);
        case Kind::Lex:
            for (size_t i = 0; i < n; ++i) {
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            }
            return 0;
        case Kind::Elim: {
            size_t s = std::min(static_cast<size_t>(split_), n);
            int c = grevlex_block(a, b, 0, s);
            if (c != 0) return c;
            return grevlex_block(a, b, s, n);
        }
    }
    return 0;
}

std::string MonomialOrder::str() const {
    switch (kind_) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::Elim: return "elim" + std::to_string(split_);
    }
    return "grevlex";
}

MonomialOrder MonomialOrder::parse(const std::string& s) {
    if (s == "grevlex") return grevlex();
    if (s == "lex") return lex();
    if (s.rfind("elim", 0) == 0) {
        int split = std::stoi(s.substr(4));
        return elim(split);
    }
    throw std::invalid_argument("MonomialOrder::parse: unknown order '" + s + "'");
}

RingPtr PolyRing::make(std::vector<std::string> vars, MonomialOrder order) {
    if (vars.empty()) throw std::invalid_argument("PolyRing: at least one variable required");
    for (const auto& v : vars) {
        if (v.empty()) throw std::invalid_argument("PolyRing: empty variable name");
    }
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("PolyRing: duplicate variable '" + vars[i] + "'");
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    r->order = order;
    return r;
}

} // namespace umps
