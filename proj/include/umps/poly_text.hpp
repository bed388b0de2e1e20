#pragma once
// Plain-text serialization of polynomial systems.
//
// File layout:
//   # comment lines and blank lines are skipped
//   ring: x y z over QQ order grevlex
//   x^2 + 2*x*y - z
//   ...one polynomial per line...
//
// Writer conventions (the canonical form; the parser is more tolerant):
//   * terms in descending ring order, joined by " + " / " - ",
//   * a leading minus is written as "-" glued to the first term,
//   * coefficients of absolute value 1 are omitted next to a monomial,
//   * exponent 1 is written bare ("x", not "x^1"),
//   * composite coefficient literals (containing '+', '*', or an interior
//     '-') are parenthesized: "(1/2-3/4*sqrt2)*x*y".

#include "umps/poly.hpp"
#include "umps/scalar.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umps {

namespace detail {

inline std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline bool coeff_literal_is_composite(const std::string& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '+' || c == '*') return true;
        if (c == '-' && i > 0) return true;
    }
    return false;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

inline std::string monomial_text(const PolyRing& ring, const Monomial& m) {
    std::string out;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (!out.empty()) out += '*';
        out += ring.vars[i];
        if (m.e[i] != 1) out += '^' + std::to_string(m.e[i]);
    }
    return out;
}

template <class K>
std::string poly_text(const MultiPoly<K>& f) {
    if (f.is_zero()) return "0";
    const PolyRing& ring = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        bool neg = ScalarTraits<K>::sign(t.second) < 0;
        K a = ScalarTraits<K>::abs(t.second);
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ms = monomial_text(ring, t.first);
        if (ms.empty()) {
            std::string cs = ScalarTraits<K>::str(a);
            out += detail::coeff_literal_is_composite(cs) ? "(" + cs + ")" : cs;
        } else if (a == K(1)) {
            out += ms;
        } else {
            std::string cs = ScalarTraits<K>::str(a);
            if (detail::coeff_literal_is_composite(cs)) cs = "(" + cs + ")";
            out += cs + '*' + ms;
        }
    }
    return out;
}

namespace detail {

// Either "name" or "name^e" where name is a ring variable.
inline bool parse_var_power(const PolyRing& ring, const std::string& tok, int& var, uint16_t& exp) {
    size_t caret = tok.find('^');
    std::string base = caret == std::string::npos ? tok : tok.substr(0, caret);
    int idx = ring.var_index(base);
    if (idx < 0) return false;
    var = idx;
    if (caret == std::string::npos) {
        exp = 1;
    } else {
        std::string es = tok.substr(caret + 1);
        if (es.empty() || es.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parse_poly: bad exponent in '" + tok + "'");
        long v = std::stol(es);
        if (v < 0 || v > 0xFFFF) throw std::invalid_argument("parse_poly: exponent out of range in '" + tok + "'");
        exp = static_cast<uint16_t>(v);
    }
    return true;
}

template <class K>
std::pair<Monomial, K> parse_term(const RingPtr& ring, std::string t) {
    t = trim(t);
    if (t.empty()) throw std::invalid_argument("parse_poly: empty term");
    std::string coeff_str;
    std::string mono_str;
    if (t[0] == '(') {
        size_t close = t.find(')');
        if (close == std::string::npos) throw std::invalid_argument("parse_poly: unbalanced '(' in '" + t + "'");
        coeff_str = t.substr(1, close - 1);
        std::string rest = trim(t.substr(close + 1));
        if (!rest.empty()) {
            if (rest[0] != '*') throw std::invalid_argument("parse_poly: expected '*' after ')' in '" + t + "'");
            mono_str = trim(rest.substr(1));
        }
    } else {
        std::vector<std::string> toks = split_on(t, '*');
        size_t first_var = toks.size();
        for (size_t i = 0; i < toks.size(); ++i) {
            std::string tok = trim(toks[i]);
            size_t caret = tok.find('^');
            if (ring->var_index(caret == std::string::npos ? tok : tok.substr(0, caret)) >= 0) {
                first_var = i;
                break;
            }
        }
        for (size_t i = 0; i < first_var; ++i) {
            if (!coeff_str.empty()) coeff_str += '*';
            coeff_str += trim(toks[i]);
        }
        for (size_t i = first_var; i < toks.size(); ++i) {
            if (!mono_str.empty()) mono_str += '*';
            mono_str += trim(toks[i]);
        }
    }

    Monomial m(ring->nvars());
    if (!mono_str.empty()) {
        for (const std::string& tok : split_on(mono_str, '*')) {
            int var = -1;
            uint16_t exp = 0;
            if (!parse_var_power(*ring, trim(tok), var, exp))
                throw std::invalid_argument("parse_poly: unknown variable in '" + tok + "'");
            m.e[static_cast<size_t>(var)] = static_cast<uint16_t>(m.e[static_cast<size_t>(var)] + exp);
        }
    }
    K c = coeff_str.empty() ? K(1) : ScalarTraits<K>::parse(coeff_str);
    return {std::move(m), std::move(c)};
}

} // namespace detail

template <class K>
MultiPoly<K> parse_poly(const RingPtr& ring, const std::string& src) {
    std::string s = detail::trim(src);
    if (s.empty()) throw std::invalid_argument("parse_poly: empty input");
    if (s == "0") return MultiPoly<K>::zero(ring);
    std::vector<typename MultiPoly<K>::Term> terms;
    bool neg = false;
    size_t pos = 0;
    if (s[0] == '-') {
        neg = true;
        pos = 1;
    } else if (s[0] == '+') {
        pos = 1;
    }
    while (pos < s.size()) {
        size_t next = std::string::npos;
        bool next_neg = false;
        for (size_t i = pos; i + 2 < s.size(); ++i) {
            if (s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
                next = i;
                next_neg = s[i + 1] == '-';
                break;
            }
        }
        std::string chunk = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        auto [m, c] = detail::parse_term<K>(ring, chunk);
        terms.push_back({std::move(m), neg ? -c : c});
        if (next == std::string::npos) break;
        neg = next_neg;
        pos = next + 3;
    }
    return MultiPoly<K>::from_terms(ring, std::move(terms));
}

inline std::string ring_header(const PolyRing& ring, const std::string& scalar_name) {
    std::string out = "ring:";
    for (const auto& v : ring.vars) out += ' ' + v;
    out += " over " + scalar_name + " order " + ring.order.str();
    return out;
}

template <class K>
RingPtr parse_ring_header(const std::string& line) {
    std::istringstream in(detail::trim(line));
    std::string tok;
    in >> tok;
    if (tok != "ring:") throw std::invalid_argument("poly file: expected 'ring:' header, got '" + line + "'");
    std::vector<std::string> vars;
    while (in >> tok && tok != "over") vars.push_back(tok);
    if (tok != "over") throw std::invalid_argument("poly file: header missing 'over'");
    std::string scalar;
    in >> scalar;
    if (scalar != ScalarTraits<K>::name)
        throw std::invalid_argument("poly file: coefficient field '" + scalar + "' does not match requested '" +
                                    ScalarTraits<K>::name + "'");
    in >> tok;
    if (tok != "order") throw std::invalid_argument("poly file: header missing 'order'");
    std::string order_str;
    in >> order_str;
    return PolyRing::make(std::move(vars), MonomialOrder::parse(order_str));
}

template <class K>
struct PolyFile {
    RingPtr ring;
    std::vector<MultiPoly<K>> polys;
};

template <class K>
PolyFile<K> parse_polyset(const std::string& text) {
    PolyFile<K> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string s = detail::trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (!out.ring) {
            out.ring = parse_ring_header<K>(s);
            continue;
        }
        out.polys.push_back(parse_poly<K>(out.ring, s));
    }
    if (!out.ring) throw std::invalid_argument("poly file: missing ring header");
    return out;
}

template <class K>
std::string polyset_text(const RingPtr& ring, const std::vector<MultiPoly<K>>& polys) {
    std::string out = ring_header(*ring, ScalarTraits<K>::name) + '\n';
    for (const auto& f : polys) out += poly_text(f) + '\n';
    return out;
}

template <class K>
PolyFile<K> read_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_poly_file: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polyset<K>(buf.str());
}

template <class K>
void write_poly_file(const std::string& path, const RingPtr& ring, const std::vector<MultiPoly<K>>& polys) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_poly_file: cannot open '" + path + "'");
    out << polyset_text(ring, polys);
}

} // namespace umps
