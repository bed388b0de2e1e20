#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "umps/necklace.hpp"
#include "umps/poly_text.hpp"
#include "umps/rng.hpp"
#include "umps/variety.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

using namespace umps;

namespace {

std::string data_path(const std::string& name) {
    return std::string(UMPS_DATA_DIR) + "/" + name;
}

MultiPoly<Rational> var_of(const RingPtr& R, const char* name) {
    const int idx = R->var_index(name);
    REQUIRE(idx >= 0);
    return MultiPoly<Rational>::variable(R, static_cast<size_t>(idx));
}

} // namespace

TEST_CASE("expected closure dimension") {
    // min{(d-1)D^2 + 1, ambient}; the parameter-count bound saturates once
    // the bond dimension is large enough for the window.
    CHECK(expected_dimension(1, 2, 3) == 2);
    CHECK(expected_dimension(2, 2, 4) == 5);
    CHECK(expected_dimension(2, 2, 5) == 5);
    CHECK(expected_dimension(2, 2, 6) == 5);
    CHECK(expected_dimension(3, 2, 4) == 6);
    CHECK(expected_dimension(3, 2, 6) == 10);
    CHECK(expected_dimension(2, 3, 3) == 9);
    CHECK(expected_dimension(4, 2, 6) == 14);
    // D >= N: evaluations already span everything.
    CHECK(expected_dimension(3, 2, 3) == static_cast<int>(cyc_dim(3, 2)));
    CHECK(expected_dimension(8, 2, 3) == 4);
    CHECK_THROWS_AS((void)expected_dimension(0, 2, 3), std::invalid_argument);
}

TEST_CASE("jacobian rank equals the expected dimension across the probe grid") {
    for (int D = 1; D <= 3; ++D) {
        for (int N = 3; N <= 6; ++N) {
            CAPTURE(D);
            CAPTURE(N);
            DimensionReport r = jacobian_dimension(D, 2, N, 3, 12345);
            CHECK(r.jacobian_rank == r.expected);
            CHECK(r.expected == expected_dimension(D, 2, N));
            CHECK(r.ambient == static_cast<int>(cyc_dim(N, 2)));
            CHECK(r.jacobian_rank <= r.ambient);
            CHECK(r.fills_ambient == (r.jacobian_rank == r.ambient));
            CHECK(r.points_sampled == 3);
            CHECK(r.seed == 12345);
        }
    }
    DimensionReport q = jacobian_dimension(2, 3, 3, 3, 12345);
    CHECK(q.jacobian_rank == 9);
    CHECK(q.ambient == 11);
    CHECK_FALSE(q.fills_ambient);
    // a one-dimensional bond never fills a window longer than 2
    CHECK(jacobian_dimension(1, 2, 5, 2, 7).jacobian_rank == 2);
    CHECK(jacobian_dimension(3, 2, 3, 3, 99).fills_ambient);
    CHECK_THROWS_AS((void)jacobian_dimension(2, 2, 4, 0, 1), std::invalid_argument);
}

TEST_CASE("sampled linear span dimensions with two-prime cross-check") {
    CHECK(linear_span_dimension(2, 2, 6, 20, 5) == 13);
    CHECK(linear_span_dimension(2, 2, 5, 12, 5) == 8);
    CHECK(linear_span_dimension(3, 2, 3, 8, 5) == 4);
    CHECK(linear_span_dimension(1, 2, 3, 6, 5) == 4);
    // too few samples cannot witness the span
    CHECK_THROWS_AS((void)linear_span_dimension(2, 2, 6, 10, 5), std::invalid_argument);
}

TEST_CASE("exact linear relations of the five-invariant coordinates") {
    CHECK(span_linear_relations(4).empty());
    CHECK(span_linear_relations(5).empty());
    auto rel6 = span_linear_relations(6);
    REQUIRE(rel6.size() == 1);
    REQUIRE(rel6[0].size() == cyc_dim(6, 2));
    // the relation annihilates every length-6 evaluation, not just the
    // parametrized ones: check both on random bond-2 tuples
    Rng rng(2024);
    for (int s = 0; s < 50; ++s) {
        auto m = random_tuple<Rational>(rng, 2, 2, 10);
        auto coords = evaluate_umps(m, 6).coords();
        Rational acc(0);
        for (size_t j = 0; j < coords.size(); ++j) acc += rel6[0][j] * coords[j];
        CHECK(acc.is_zero());
    }
    // consistency with the sampled span: one relation, codimension one
    CHECK(static_cast<int>(cyc_dim(6, 2)) - 1 == 13);
}

TEST_CASE("strict subspace predictor and binomials") {
    CHECK_FALSE(strict_subspace_predictor(2, 3, 3));
    CHECK(strict_subspace_predictor(1, 6, 6));
    CHECK_FALSE(strict_subspace_predictor(2, 0, 1));
    CHECK_THROWS_AS((void)strict_subspace_predictor(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)strict_subspace_predictor(2, 0, 0), std::invalid_argument);

    CHECK(binomial_u64(6, 3) == 20);
    CHECK(binomial_u64(20, 10) == 184756);
    CHECK(binomial_u64(5, 7) == 0);
    CHECK(binomial_u64(7, 0) == 1);
    CHECK_THROWS_AS((void)binomial_u64(70, 35), std::overflow_error);
}

TEST_CASE("necklace coordinate ring: naming and caching") {
    RingPtr R = necklace_ring(4);
    REQUIRE(R->nvars() == 6);
    CHECK(R->vars == std::vector<std::string>{"x0000", "x0001", "x0011", "x0101", "x0111", "x1111"});
    CHECK(R->order == MonomialOrder::grevlex());
    CHECK(necklace_ring(4).get() == R.get()); // cached
    CHECK(necklace_ring(3, 3)->nvars() == 11);
}

TEST_CASE("implicitization: one sextic cuts out the length-4 variety") {
    GeneratorCountReport rep = implicitize_by_degree(2, 2, 4, 6, 42);
    REQUIRE(rep.rows.size() == 6);
    for (int k = 0; k < 5; ++k) {
        CHECK(rep.rows[static_cast<size_t>(k)].degree == k + 1);
        CHECK(rep.rows[static_cast<size_t>(k)].vanishing_dim == 0);
        CHECK(rep.rows[static_cast<size_t>(k)].new_generators == 0);
    }
    CHECK(rep.rows[5].vanishing_dim == 1);
    CHECK(rep.rows[5].new_generators == 1);
    CHECK(rep.primes[0] != 0);
    CHECK(rep.primes[1] != 0);
    CHECK(rep.primes[0] != rep.primes[1]);

    REQUIRE(rep.lifted.count(6) == 1);
    REQUIRE(rep.lifted.at(6).size() == 1);
    const MultiPoly<Rational>& f = rep.lifted.at(6)[0];
    CHECK(f.nterms() == 30);
    CHECK(f.total_degree() == 6);
    CHECK(f.ring()->nvars() == 6);

    // the lifted sextic vanishes identically on evaluations of random
    // bond-2 tuples (fresh randomness, exact arithmetic)
    Rng rng(777);
    for (int s = 0; s < 1000; ++s) {
        auto m = random_tuple<Rational>(rng, 2, 2, 10);
        auto coords = evaluate_umps(m, 4).coords();
        CHECK(f.evaluate(coords).is_zero());
    }
}

TEST_CASE("implicitization: length-5 degree profile has quartic generators") {
    GeneratorCountReport rep = implicitize_by_degree(2, 2, 5, 6, 5);
    REQUIRE(rep.rows.size() == 6);
    // no relations below degree 4; three minimal quartics; nothing new in
    // degree 5; twenty-seven new sextics
    CHECK(rep.rows[0].new_generators == 0);
    CHECK(rep.rows[1].new_generators == 0);
    CHECK(rep.rows[2].new_generators == 0);
    CHECK(rep.rows[3].vanishing_dim == 3);
    CHECK(rep.rows[3].new_generators == 3);
    CHECK(rep.rows[4].new_generators == 0);
    CHECK(rep.rows[5].new_generators == 27);
    REQUIRE(rep.lifted.count(4) == 1);
    REQUIRE(rep.lifted.at(4).size() == 3);
    for (const auto& g : rep.lifted.at(4)) CHECK(g.total_degree() == 4);
}

TEST_CASE("implicitization: length-6 degree profile up to cubics") {
    GeneratorCountReport rep = implicitize_by_degree(2, 2, 6, 3, 7);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].vanishing_dim == 1);
    CHECK(rep.rows[0].new_generators == 1);
    CHECK(rep.rows[1].vanishing_dim == 20);
    CHECK(rep.rows[1].new_generators == 6);
    CHECK(rep.rows[2].vanishing_dim == 200);
    CHECK(rep.rows[2].new_generators == 17);
    REQUIRE(rep.lifted.count(1) == 1);
    CHECK(rep.lifted.at(1)[0].total_degree() == 1);
}

TEST_CASE("implicitization rejects unsupported shapes") {
    CHECK_THROWS_AS((void)implicitize_by_degree(3, 2, 4, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)implicitize_by_degree(2, 2, 4, 0, 1), std::invalid_argument);
}

TEST_CASE("surjectivity: certified full-rank bond-3 family") {
    auto file = read_poly_file<Rational>(data_path("subspace_324.txt"));
    SubspaceSpec S = subspace_from_polys(file.ring, 3, 2, file.polys);
    REQUIRE(S.mats.size() == 2);
    SurjectivityReport r = surjectivity_check(S, 4, 5);
    CHECK(r.m == 6);
    CHECK(r.ideal_dim == 0);
    CHECK(r.fills_ambient);
    CHECK(r.precondition_ok);
    CHECK(r.modular); // exact run bails out, two primes certify
    CHECK(r.verdict == "image closed and fills");
}

TEST_CASE("surjectivity: nilpotent family is inconclusive") {
    RingPtr P = PolyRing::make({"u1", "u2", "u3", "u4", "u5", "u6"});
    auto Z = MultiPoly<Rational>::zero(P);
    // two strictly upper-triangular matrices: every word trace vanishes
    std::vector<MultiPoly<Rational>> forms = {
        Z, var_of(P, "u1"), var_of(P, "u2"), Z, Z, var_of(P, "u3"), Z, Z, Z,
        Z, var_of(P, "u4"), var_of(P, "u5"), Z, Z, var_of(P, "u6"), Z, Z, Z,
    };
    SurjectivityReport r = surjectivity_check(subspace_from_polys(P, 3, 2, forms), 4, 11);
    CHECK(r.m == 6);
    CHECK(r.ideal_dim == 6); // the zero ideal: the whole parameter space maps to 0
    CHECK(r.fills_ambient);
    CHECK(r.precondition_ok);
    CHECK_FALSE(r.modular);
    CHECK(r.verdict == "no conclusion");
}

TEST_CASE("surjectivity: scalar family fails the parameter-count precondition") {
    RingPtr P = PolyRing::make({"t"});
    auto T = MultiPoly<Rational>::variable(P, 0);
    auto Z = MultiPoly<Rational>::zero(P);
    std::vector<MultiPoly<Rational>> forms = {
        T, Z, Z, Z, T, Z, Z, Z, T,
        T, Z, Z, Z, T, Z, Z, Z, T,
    };
    SurjectivityReport r = surjectivity_check(subspace_from_polys(P, 3, 2, forms), 3, 11);
    CHECK(r.m == 1);
    CHECK_FALSE(r.precondition_ok);
    CHECK(r.verdict == "precondition violated");
}

TEST_CASE("subspace construction validates its input") {
    RingPtr P = PolyRing::make({"a", "b"});
    auto A = MultiPoly<Rational>::variable(P, 0);
    CHECK_THROWS_AS((void)subspace_from_polys(P, 2, 2, {A}), std::invalid_argument);
    std::vector<MultiPoly<Rational>> bad(8, A);
    bad[3] = A * A; // quadratic entry
    CHECK_THROWS_AS((void)subspace_from_polys(P, 2, 2, bad), std::invalid_argument);
    std::vector<MultiPoly<Rational>> affine(8, A);
    affine[0] = A + MultiPoly<Rational>::constant(P, Rational(1)); // inhomogeneous
    CHECK_THROWS_AS((void)subspace_from_polys(P, 2, 2, affine), std::invalid_argument);
}

TEST_CASE("fiber of the five-invariant parametrization is a full cyclic orbit") {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        CAPTURE(seed);
        FiberReport r = fiber_count(5, seed);
        CHECK(r.ideal_dim == 0);
        CHECK(r.degree == 5);
        CHECK(r.matches_N);
        CHECK_FALSE(r.modular); // exact arithmetic suffices
        CHECK(r.target_invariants.size() == 5);
        CHECK(r.target_coords.size() == cyc_dim(5, 2));
    }
    FiberReport r6 = fiber_count(6, 1);
    CHECK(r6.ideal_dim == 0);
    CHECK(r6.degree == 6);
    CHECK(r6.matches_N);

    // deterministic target point
    std::vector<Rational> t = {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)};
    FiberReport ra = fiber_count_at(5, t);
    CHECK(ra.ideal_dim == 0);
    CHECK(ra.degree == 5);
    FiberReport rb = fiber_count_at(6, t);
    CHECK(rb.degree == 6);

    // the origin is a degenerate target: every partial derivative vanishes
    std::vector<Rational> zero(5, Rational(0));
    CHECK_THROWS_AS((void)fiber_count_at(5, zero), std::invalid_argument);
    CHECK_THROWS_AS((void)fiber_count(4, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)fiber_count_at(5, {Rational(1)}), std::invalid_argument);
}
