#pragma once
// 64-bit modular arithmetic primitives and deterministic primality testing.

#include <cstdint>
#include <complex>
#include <stdexcept>

namespace umps {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
    // a, b < m < 2^63, so the sum never wraps.
    uint64_t s = a + b;
    if (s >= m) s -= m;
    return s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Extended gcd on signed 128-bit intermediates; returns g = gcd(a,b) and x with
// a*x ≡ g (mod b). Inputs a < b.
inline uint64_t invmod(uint64_t a, uint64_t m) {
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("invmod: not invertible");
    if (t < 0) t += m;
    return static_cast<uint64_t>(t);
}

// Deterministic Miller-Rabin for all 64-bit inputs (12-base certificate).
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Session primes: both just below 2^62 (so __int128 products are safe) and
// ≡ 1 (mod 840), so F_p contains exact N-th roots of unity for all N ≤ 8.
inline constexpr uint64_t kDefaultPrime = 4611686018427385801ull;
inline constexpr uint64_t kCrossCheckPrime = 4611686018427379081ull;

// Largest prime ≤ hint usable as an independent cross-check against `avoid`.
inline uint64_t companion_prime(uint64_t hint, uint64_t avoid) {
    uint64_t q = hint | 1;
    while (q == avoid || !is_prime_u64(q)) q -= 2;
    return q;
}

// exp(iπ/N): the principal N-th root of -1.
inline std::complex<double> nth_root_of_minus_one(int N) {
    if (N < 1) throw std::invalid_argument("nth_root_of_minus_one: N >= 1 required");
    const double pi = 3.14159265358979323846264338327950288;
    if (N == 1) return {-1.0, 0.0};
    if (N == 2) return {0.0, 1.0};
    return std::polar(1.0, pi / N);
}

} // namespace umps
