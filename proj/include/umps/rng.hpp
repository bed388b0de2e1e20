#pragma once
// Seeded sampling. Every randomized analysis takes an explicit 64-bit seed
// that is echoed into its report; mt19937_64 makes streams portable.

#include "umps/primefield.hpp"
#include "umps/quadext.hpp"
#include "umps/rational.hpp"

#include <cstdint>
#include <random>

namespace umps {

class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t u64() { return gen_(); }

    int64_t int_in(int64_t lo, int64_t hi) {
        return std::uniform_int_distribution<int64_t>(lo, hi)(gen_);
    }

    // Rational with |numerator| ≤ h and 1 ≤ denominator ≤ h (default h=100).
    Rational rational(int64_t h = 100) {
        return Rational(int_in(-h, h), int_in(1, h));
    }

    Rational nonzero_rational(int64_t h = 100) {
        for (;;) {
            Rational r = rational(h);
            if (!r.is_zero()) return r;
        }
    }

    QuadExt quadext(int64_t h = 100) { return QuadExt(rational(h), rational(h)); }

    Fp fp() {
        return Fp(std::uniform_int_distribution<uint64_t>(0, Fp::p() - 1)(gen_));
    }

    Fp nonzero_fp() {
        for (;;) {
            Fp x = fp();
            if (!x.is_zero()) return x;
        }
    }

    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

template <class K>
struct RandomScalar;

template <>
struct RandomScalar<Rational> {
    static Rational get(Rng& rng, int64_t h = 100) { return rng.rational(h); }
};
template <>
struct RandomScalar<QuadExt> {
    static QuadExt get(Rng& rng, int64_t h = 100) { return rng.quadext(h); }
};
template <>
struct RandomScalar<Fp> {
    static Fp get(Rng& rng, int64_t = 0) { return rng.fp(); }
};

} // namespace umps
