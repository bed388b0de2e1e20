#pragma once
// Uniform hooks generic code uses on scalar rings: zero/one, zero test,
// canonical string form, parsing, and a field label for file headers.

#include "umps/gauss.hpp"
#include "umps/laurent.hpp"
#include "umps/primefield.hpp"
#include "umps/quadext.hpp"
#include "umps/rational.hpp"

#include <complex>
#include <cstdio>
#include <string>

namespace umps {

template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr const char* name = "QQ";
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static std::string str(const Rational& x) { return x.str(); }
    static Rational parse(const std::string& s) { return Rational::parse(s); }
    static double to_double(const Rational& x) { return x.to_double(); }
    // Canonical writer sign for " + " / " - " joins.
    static int sign(const Rational& x) { return x.sign(); }
    static Rational abs(const Rational& x) { return x.abs(); }
};

template <>
struct ScalarTraits<QuadExt> {
    static constexpr const char* name = "QQ(sqrt2)";
    static QuadExt zero() { return QuadExt(); }
    static QuadExt one() { return QuadExt(1); }
    static bool is_zero(const QuadExt& x) { return x.is_zero(); }
    static std::string str(const QuadExt& x) { return x.str(); }
    static QuadExt parse(const std::string& s) { return QuadExt::parse(s); }
    static double to_double(const QuadExt& x) { return x.to_double(); }
    static int sign(const QuadExt& x) { return x.sign(); }
    static QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }
};

template <>
struct ScalarTraits<Fp> {
    static constexpr const char* name = "Fp";
    static Fp zero() { return Fp(); }
    static Fp one() { return Fp(1); }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
    static std::string str(const Fp& x) { return x.str(); }
    static Fp parse(const std::string& s) { return Fp::parse(s); }
    static int sign(const Fp& x) { return x.is_zero() ? 0 : 1; }
    static Fp abs(const Fp& x) { return x; }
};

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
}

template <>
struct ScalarTraits<double> {
    static constexpr const char* name = "RR";
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double x) { return x == 0.0; }
    static std::string str(double x) { return format_double(x); }
    static double parse(const std::string& s) { return std::stod(s); }
    static double to_double(double x) { return x; }
    static int sign(double x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }
    static double abs(double x) { return x < 0 ? -x : x; }
};

template <>
struct ScalarTraits<std::complex<double>> {
    static constexpr const char* name = "CC";
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }
    static std::string str(const std::complex<double>& x) {
        return format_double(x.real()) + (x.imag() < 0 ? "" : "+") + format_double(x.imag()) + "i";
    }
    static double to_double(const std::complex<double>& x) { return x.real(); }
};

template <class K>
struct ScalarTraits<GaussExt<K>> {
    static constexpr const char* name = "K(i)";
    static GaussExt<K> zero() { return GaussExt<K>(); }
    static GaussExt<K> one() { return GaussExt<K>(1); }
    static bool is_zero(const GaussExt<K>& x) { return x.is_zero(); }
    static std::string str(const GaussExt<K>& x) { return x.str(); }
};

template <class K>
struct ScalarTraits<Laurent<K>> {
    static constexpr const char* name = "Laurent";
    static Laurent<K> zero() { return Laurent<K>(); }
    static Laurent<K> one() { return Laurent<K>(1); }
    static bool is_zero(const Laurent<K>& x) { return x.is_zero(); }
    static std::string str(const Laurent<K>& x) { return x.str(); }
};

// |x|^2 as a double, for residual norms.
inline double abs2_as_double(const Rational& x) { double d = x.to_double(); return d * d; }
inline double abs2_as_double(const QuadExt& x) { double d = x.to_double(); return d * d; }
inline double abs2_as_double(double x) { return x * x; }
inline double abs2_as_double(const std::complex<double>& x) { return std::norm(x); }
template <class K>
double abs2_as_double(const GaussExt<K>& x) {
    return ScalarTraits<K>::to_double(x.norm2());
}

} // namespace umps
