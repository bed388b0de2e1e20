#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "umps/groebner.hpp"
#include "umps/mps.hpp"
#include "umps/poly_text.hpp"
#include "umps/rng.hpp"
#include "umps/trace_algebra.hpp"

#include <string>
#include <vector>

using namespace umps;

namespace {

MatrixTuple<Rational> random_pair(Rng& rng, int64_t height = 20) {
    MatrixTuple<Rational> t(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) t.mats[static_cast<size_t>(i)](r, c) = rng.rational(height);
    return t;
}

std::string random_word(Rng& rng, int len) {
    std::string w;
    for (int i = 0; i < len; ++i) w.push_back(rng.u64() % 2 ? '1' : '0');
    return w;
}

} // namespace

TEST_CASE("five invariants of simple pairs") {
    MatrixTuple<Rational> t(2, 2);
    t.mats[0](0, 0) = Rational(1);  // M0 = E11
    t.mats[1](0, 1) = Rational(1);  // M1 = E12
    auto inv = invariants_of(t);
    CHECK(inv.t == std::array<Rational, 5>{Rational(1), Rational(0), Rational(1), Rational(0), Rational(0)});

    MatrixTuple<Rational> id(2, 2);
    id.mats[0] = Matrix<Rational>::identity(2);
    id.mats[1] = Matrix<Rational>::identity(2);
    auto inv2 = invariants_of(id);
    for (const auto& v : inv2.t) CHECK(v == Rational(2));

    MatrixTuple<Rational> wrong(3, 2);
    CHECK_THROWS_AS(invariants_of(wrong), std::invalid_argument);
    MatrixTuple<Rational> wrong2(2, 3);
    CHECK_THROWS_AS(invariants_of(wrong2), std::invalid_argument);
}

TEST_CASE("invariants are conjugation invariant") {
    Rng rng(991);
    for (int trial = 0; trial < 12; ++trial) {
        MatrixTuple<Rational> t = random_pair(rng);
        Matrix<Rational> P(2, 2);
        do {
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) P(r, c) = rng.rational(10);
        } while (!is_invertible(P));
        auto a = invariants_of(t);
        auto b = invariants_of(conjugate(t, P));
        CHECK(a.t == b.t);
    }
}

TEST_CASE("generator words reduce to themselves") {
    RingPtr R = trace_ring();
    const char* words[] = {"0", "1", "00", "01", "11"};
    int var_of[] = {0, 1, 2, 3, 4};
    for (int i = 0; i < 5; ++i) {
        TraceWordPoly r = reduce_trace_word(words[i]);
        CHECK(r.poly == MultiPoly<Rational>::variable(R, var_of[i]));
    }
    // The mixed length-2 word is reported in canonical rotation.
    CHECK(reduce_trace_word("10").word == "01");
    CHECK(reduce_trace_word("10").poly == MultiPoly<Rational>::variable(R, 3));
    CHECK_THROWS_AS(reduce_trace_word(""), std::invalid_argument);
    CHECK_THROWS_AS(reduce_trace_word("012"), std::out_of_range);
}

TEST_CASE("the cubed-matrix trace follows from the characteristic polynomial") {
    // tr M^3 = (3 tr(M) tr(M^2) - tr(M)^3) / 2 for any 2x2 matrix.
    RingPtr R = trace_ring();
    using P = MultiPoly<Rational>;
    P t1 = P::variable(R, 0), t3 = P::variable(R, 2);
    P expected = Rational::parse("3/2") * (t1 * t3) - Rational::parse("1/2") * t1.pow(3);
    CHECK(reduce_trace_word("000").poly == expected);

    // Same shape in the other letter.
    P t2 = P::variable(R, 1), t5 = P::variable(R, 4);
    CHECK(reduce_trace_word("111").poly ==
          Rational::parse("3/2") * (t2 * t5) - Rational::parse("1/2") * t2.pow(3));
}

TEST_CASE("reduced polynomials carry the word's letter counts") {
    for (int N = 1; N <= 6; ++N) {
        for (const Necklace& n : NecklaceTable::get(N, 2).list()) {
            unsigned a = 0, b = 0;
            for (uint8_t c : n.word) (c == 0 ? a : b)++;
            TraceWordPoly r = reduce_trace_word(n.str());
            CHECK(r.word == n.str());
            CHECK_FALSE(r.poly.is_zero());
            for (const auto& term : r.poly.terms()) {
                auto [da, db] = trace_multidegree(term.first);
                CHECK(da == a);
                CHECK(db == b);
            }
        }
    }
}

TEST_CASE("word traces match their reductions on random pairs") {
    Rng rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        int len = 1 + static_cast<int>(rng.u64() % 8);
        std::string w = random_word(rng, len);
        TraceWordPoly r = reduce_trace_word(w);
        MatrixTuple<Rational> t = random_pair(rng, 12);
        Rational direct = trace_of_word(t, word_from_string(w));
        CHECK(r.poly.evaluate(invariants_of(t).as_vector()) == direct);
    }
}

TEST_CASE("trace word identities") {
    // tr(M1 M1 M0 M0 M1 M0) = tr(M1 M1 M0 M1 M0 M0): a genuinely nontrivial
    // equality of degree-6 words that are not rotations of each other.
    CHECK(word_from_string("110010") != canonicalize(word_from_string("110100"), 2).word);
    CHECK(canonicalize(word_from_string("110010"), 2).word !=
          canonicalize(word_from_string("110100"), 2).word);
    CHECK(verify_word_identity("110010", "110100"));

    // Rotations always agree.
    Rng rng(7210);
    for (int trial = 0; trial < 10; ++trial) {
        std::string w = random_word(rng, 2 + static_cast<int>(rng.u64() % 6));
        size_t rot = rng.u64() % w.size();
        std::string rotated = w.substr(rot) + w.substr(0, rot);
        CHECK(verify_word_identity(w, rotated));
    }

    // Equal letter counts are not sufficient.
    CHECK_FALSE(verify_word_identity("0011", "0101"));
    CHECK_FALSE(verify_word_identity("0", "1"));
}

TEST_CASE("parametrization components for tiny lengths") {
    RingPtr R = trace_ring();
    using P = MultiPoly<Rational>;
    auto p1 = trace_parametrization(1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0] == P::variable(R, 0));
    CHECK(p1[1] == P::variable(R, 1));

    auto p2 = trace_parametrization(2);
    REQUIRE(p2.size() == 3);
    CHECK(p2[0] == P::variable(R, 2));  // necklace 00
    CHECK(p2[1] == P::variable(R, 3));  // necklace 01
    CHECK(p2[2] == P::variable(R, 4));  // necklace 11

    CHECK_THROWS_AS(trace_parametrization(0), std::invalid_argument);
}

TEST_CASE("parametrization commutes with evaluation on a thousand tuples") {
    std::vector<std::vector<MultiPoly<Rational>>> phi;
    for (int N = 3; N <= 6; ++N) phi.push_back(trace_parametrization(N));

    Rng rng(31415);
    for (int sample = 0; sample < 1000; ++sample) {
        MatrixTuple<Rational> t = random_pair(rng, 6);
        std::vector<Rational> point = invariants_of(t).as_vector();
        for (int N = 3; N <= 6; ++N) {
            CyclicTensor<Rational> direct = evaluate_umps(t, N);
            const auto& polys = phi[static_cast<size_t>(N - 3)];
            const NecklaceTable& table = NecklaceTable::get(N, 2);
            for (int i = 0; i < table.size(); ++i) {
                CHECK(polys[static_cast<size_t>(i)].evaluate(point) == direct.coords()[static_cast<size_t>(i)]);
            }
        }
    }
}

TEST_CASE("long words fit on demand") {
    // Length 9 is beyond the precomputed table.
    std::string w = "000000001";
    TraceWordPoly r = reduce_trace_word(w);
    Rng rng(88);
    for (int trial = 0; trial < 5; ++trial) {
        MatrixTuple<Rational> t = random_pair(rng, 8);
        CHECK(r.poly.evaluate(invariants_of(t).as_vector()) == trace_of_word(t, word_from_string(w)));
    }
}

TEST_CASE("reduced words export in the shared text format") {
    std::string text = polyset_text<Rational>(trace_ring(), {reduce_trace_word("000").poly});
    CHECK(text.rfind("ring: t1 t2 t3 t4 t5 over QQ order grevlex\n", 0) == 0);
    PolyFile<Rational> back = parse_polyset<Rational>(text);
    REQUIRE(back.polys.size() == 1);
    CHECK(back.polys[0] == reduce_trace_word("000").poly);
}
