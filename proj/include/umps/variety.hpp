#pragma once
// Geometry probes for the cyclic evaluation varieties: exact Jacobian
// dimension, linear span, degree-by-degree implicitization with minimal
// generator counts, surjectivity of linearly parametrized families, and
// fiber counting for the five-invariant parametrization.

#include "umps/groebner.hpp"
#include "umps/linalg.hpp"
#include "umps/mps.hpp"
#include "umps/necklace.hpp"
#include "umps/poly.hpp"
#include "umps/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace umps {

// min{(d-1)D^2 + 1, cyc_dim(N,d)}: the expected dimension of the closure.
int expected_dimension(int D, int d, int N);

// Reasonable default for "try the rational Groebner run this long before
// certifying leading terms modulo two primes instead".
inline constexpr uint64_t kDefaultExactAttempt = 400000;

struct DimensionReport {
    int D = 0, d = 0, N = 0;
    int jacobian_rank = 0;   // max exact rank over the sampled points
    int expected = 0;        // expected_dimension(D, d, N)
    int ambient = 0;         // cyc_dim(N, d)
    bool fills_ambient = false;
    int points_sampled = 0;
    uint64_t seed = 0;
};

// Exact rank of the evaluation Jacobian at `trials` random rational tuples;
// the max over trials equals the closure dimension with probability 1.
DimensionReport jacobian_dimension(int D, int d, int N, int trials, uint64_t seed);

// Rank of the matrix of sampled evaluations (rows = random tuples). Exact
// over the rationals and cross-checked modulo two primes.
int linear_span_dimension(int D, int d, int N, int samples, uint64_t seed);

// Exact linear relations satisfied identically by the length-N coordinate
// polynomials of the five-invariant parametrization (D = d = 2): a basis of
// the left kernel, each vector indexed by the (N,2) necklace table. The
// number of independent relations is a proven upper-bound certificate for
// the span codimension.
std::vector<RowVec<Rational>> span_linear_relations(int N);

uint64_t binomial_u64(unsigned n, unsigned k);

// True iff the necklace count C(N0,N1) exceeds
// binom(N0+D-1, D-1) * binom(N1+D^2-D, D^2-D), which forces the closure of
// the joint-content slice into a strict linear subspace.
bool strict_subspace_predictor(int D, int N0, int N1);

// Coordinate ring of Cyc^N(K^d): one variable per necklace, named "x"+word.
RingPtr necklace_ring(int N, int d = 2);

struct DegreeRow {
    int degree = 0;
    int vanishing_dim = 0;    // dim of degree-k forms vanishing on the image
    int new_generators = 0;   // minimal generators appearing in this degree
    int samples = 0;          // sample points used until rank stabilized
};

struct GeneratorCountReport {
    int D = 0, d = 0, N = 0;
    int degree_bound = 0;
    uint64_t seed = 0;
    uint64_t primes[2] = {0, 0};
    std::vector<DegreeRow> rows;
    // Lifted rational generators per degree, present when a degree
    // contributes between 1 and 3 new generators; each verified to vanish
    // on fresh rational sample points.
    std::map<int, std::vector<MultiPoly<Rational>>> lifted;
};

// Vanishing forms of each degree k <= degree_bound on the image of the
// length-N evaluation (D = d = 2), by modular sampling with rank
// stabilization, independently on two primes (dimensions must agree).
GeneratorCountReport implicitize_by_degree(int D, int d, int N, int degree_bound, uint64_t seed);

// A linear family of matrix tuples: every entry of every matrix is a linear
// form in the parameter ring.
struct SubspaceSpec {
    RingPtr params;  // QQ[p1..pm]
    int D = 0, d = 0;
    // mats[i][r][c]: entry (r,c) of the i-th matrix, a linear form.
    std::vector<std::vector<std::vector<MultiPoly<Rational>>>> mats;
};

// Interpret a flat list of d*D*D linear forms (matrix-major, then
// row-major) as a linear family of matrix tuples.
SubspaceSpec subspace_from_polys(RingPtr params, int D, int d, const std::vector<MultiPoly<Rational>>& forms);

struct SurjectivityReport {
    int D = 0, d = 0, N = 0;
    int m = 0;               // number of parameters
    int ideal_dim = 0;       // affine dimension of the restricted coordinate ideal
    bool fills_ambient = false;
    bool precondition_ok = false;  // m >= closure dimension
    bool modular = false;          // leading terms certified via two primes
    std::string verdict;     // "image closed and fills" | "no conclusion" | "precondition violated"
};

SurjectivityReport surjectivity_check(const SubspaceSpec& S, int N, uint64_t seed,
                                      uint64_t exact_budget = kDefaultExactAttempt,
                                      uint64_t modular_budget = kDefaultGroebnerBudget);

struct FiberReport {
    int N = 0;
    std::vector<Rational> target_invariants;  // the generic parameter point t*
    std::vector<Rational> target_coords;      // its image, necklace-table aligned
    int ideal_dim = 0;
    uint64_t degree = 0;       // standard-monomial count of the fiber ideal
    bool matches_N = false;    // ideal_dim == 0 and degree == N
    bool modular = false;
    uint64_t seed = 0;
};

// Fiber of the five-invariant parametrization over the image of a random
// generic parameter point (D = d = 2, N >= 5).
FiberReport fiber_count(int N, uint64_t seed,
                        uint64_t exact_budget = kDefaultExactAttempt,
                        uint64_t modular_budget = kDefaultGroebnerBudget);

// Same at a caller-supplied parameter point; rejects degenerate points
// (where the parametrization Jacobian drops rank).
FiberReport fiber_count_at(int N, const std::vector<Rational>& t_star,
                           uint64_t exact_budget = kDefaultExactAttempt,
                           uint64_t modular_budget = kDefaultGroebnerBudget);

} // namespace umps
