#pragma once
// Prime-field scalars for modular sampling. The modulus is per-thread session
// state (set with FpScope); values are only meaningful under the modulus that
// created them. Every modulus is re-checked prime on installation.

#include "umps/numeric.hpp"
#include "umps/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace umps {

namespace detail {
inline thread_local uint64_t fp_modulus = 0;
}

class Fp {
public:
    Fp() : v_(0) {}
    Fp(uint64_t v) : v_(v % p()) {}
    Fp(int64_t v) {
        int64_t m = static_cast<int64_t>(p());
        int64_t r = v % m;
        if (r < 0) r += m;
        v_ = static_cast<uint64_t>(r);
    }
    Fp(int v) : Fp(static_cast<int64_t>(v)) {}

    static uint64_t p() {
        if (detail::fp_modulus == 0) throw std::logic_error("Fp: no modulus installed (use FpScope)");
        return detail::fp_modulus;
    }
    static bool has_modulus() { return detail::fp_modulus != 0; }

    uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return from_raw(v_ == 0 ? 0 : p() - v_); }
    Fp& operator+=(const Fp& o) { v_ = addmod(v_, o.v_, p()); return *this; }
    Fp& operator-=(const Fp& o) { v_ = submod(v_, o.v_, p()); return *this; }
    Fp& operator*=(const Fp& o) { v_ = mulmod(v_, o.v_, p()); return *this; }
    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        return from_raw(invmod(v_, p()));
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp& b) { a += b; return a; }
    friend Fp operator-(Fp a, const Fp& b) { a -= b; return a; }
    friend Fp operator*(Fp a, const Fp& b) { a *= b; return a; }
    friend Fp operator/(Fp a, const Fp& b) { a /= b; return a; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    Fp pow(uint64_t e) const { return from_raw(powmod(v_, e, p())); }

    std::string str() const { return std::to_string(v_); }
    static Fp parse(const std::string& s) { return Fp(static_cast<uint64_t>(std::stoull(s))); }

    static Fp from_raw(uint64_t v) { Fp f; f.v_ = v; return f; }

private:
    uint64_t v_;
};

class FpScope {
public:
    explicit FpScope(uint64_t prime) : saved_(detail::fp_modulus) {
        if (!is_prime_u64(prime)) throw std::invalid_argument("FpScope: modulus fails primality check");
        if (prime >> 62) throw std::invalid_argument("FpScope: modulus must be < 2^62");
        detail::fp_modulus = prime;
    }
    ~FpScope() { detail::fp_modulus = saved_; }
    FpScope(const FpScope&) = delete;
    FpScope& operator=(const FpScope&) = delete;

private:
    uint64_t saved_;
};

// Reduce n/d mod the active prime. Throws BadPrime if d ≡ 0 (caller retries
// with another prime).
struct BadPrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Fp to_fp(const Rational& q) {
    const uint64_t p = Fp::p();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = q.num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.den() % pz;
    if (den == 0) throw BadPrime("to_fp: denominator divisible by modulus");
    uint64_t n = num.get_ui();
    uint64_t d = den.get_ui();
    return Fp::from_raw(mulmod(n, invmod(d, p), p));
}

// Unique n/d with |n|, d ≤ bound and n ≡ residue·d (mod p), when one exists.
// Pre: 2·bound² < p.
inline std::optional<Rational> rational_reconstruct(const Fp& residue, uint64_t bound) {
    const uint64_t p = Fp::p();
    if (bound == 0 || static_cast<unsigned __int128>(bound) * bound * 2 >= p)
        throw std::invalid_argument("rational_reconstruct: need 2*bound^2 < p");
    // Half-extended Euclid on (p, residue); invariant r_i ≡ t_i*residue (mod p).
    __int128 r0 = p, r1 = residue.value();
    __int128 t0 = 0, t1 = 1;
    while (r1 > static_cast<__int128>(bound)) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        __int128 t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    __int128 n = r1, d = t1;
    if (d == 0) return std::nullopt;
    if (d < 0) { n = -n; d = -d; }
    if (d > static_cast<__int128>(bound)) return std::nullopt;
    long long nn = static_cast<long long>(n), dd = static_cast<long long>(d);
    Rational cand(nn, dd);
    // gcd(n,d) must be 1 for the congruence to survive canonicalization.
    if (to_fp(cand) != residue) return std::nullopt;
    return cand;
}

// Exact N-th root of unity in the active field, of order exactly N.
// Requires N | p-1 (the session primes are ≡ 1 mod 840, covering N ≤ 8).
inline Fp root_of_unity(uint64_t N) {
    const uint64_t p = Fp::p();
    if (N == 0 || (p - 1) % N != 0) throw std::invalid_argument("root_of_unity: N must divide p-1");
    if (N == 1) return Fp(1);
    uint64_t m = N;
    uint64_t prime_divs[16];
    int nprimes = 0;
    for (uint64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            prime_divs[nprimes++] = q;
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) prime_divs[nprimes++] = m;
    for (uint64_t g = 2; g < 300; ++g) {
        Fp z = Fp(g).pow((p - 1) / N);
        bool exact_order = true;
        for (int i = 0; i < nprimes; ++i) {
            if (z.pow(N / prime_divs[i]).is_one()) { exact_order = false; break; }
        }
        if (exact_order) return z;
    }
    throw std::runtime_error("root_of_unity: no element of exact order found");
}

} // namespace umps
