#pragma once
// Closedness and membership experiments for small uMPS varieties:
//   * one-parameter limit families whose evaluations approach a boundary
//     tensor, with measured log-log convergence rates;
//   * Groebner infeasibility certificates showing specific boundary tensors
//     are not themselves evaluations at fixed small length;
//   * the exact constructible-set membership decision for length-4 bond-2
//     tensors over Q(sqrt2).

#include "umps/cyclic_tensor.hpp"
#include "umps/mps.hpp"
#include "umps/poly.hpp"
#include "umps/quadext.hpp"
#include "umps/rational.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace umps {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Limit families
// ---------------------------------------------------------------------------

// A one-parameter family of matrix tuples whose evaluations converge (or are
// claimed to converge) to a designated target tensor as the parameter tends
// to zero, at a claimed rate: ||T_N(tuple(l)) - target|| = O(l^claimed_rate).
struct LimitFamily {
    std::string label;
    int D = 2, d = 2, N = 0;
    int claimed_rate = 0;
    CyclicTensor<Complex> target{1, 2};
    // Defined for every l != 0 (throws std::domain_error at l = 0).
    std::function<MatrixTuple<Complex>(double)> builder;
    // Exact residual ||T_N(tuple(l)) - target||, evaluated in exact arithmetic
    // and rounded once at the end; null when the family has no exact form.
    // Exact evaluation matters because the tuples carry entries of order
    // l^{-1} whose contributions cancel only exactly: floating evaluation
    // drowns the true residual in cancellation noise on fine grids.
    std::function<double(double)> exact_residual;
};

// Built-in families by label:
//   "e012"          bond 2, three 2x2 matrices, length 3; target is the
//                   necklace basis tensor at 012; exact rational family.
//   "wstate(N)"     N >= 3; complex diagonal pair converging to twice the
//                   single-excitation tensor W_N; exact evaluation available
//                   when N is not a multiple of 8 (the phase then lies in
//                   Q(i, sqrt2)).
//   "wstate_real(N)" N >= 3; the real-matrix variant as printed in the source
//                   construction; its all-zeros coordinate grows like l^{-N},
//                   so the experiment reports divergence.
// Throws std::invalid_argument for an unknown name or out-of-range N.
LimitFamily builtin_family(const std::string& name);

struct LimitRow {
    double lambda = 0;
    double residual = 0;
};

struct LimitReport {
    std::string label;
    int claimed_rate = 0;
    std::vector<LimitRow> rows;
    bool exact_zero = false;  // every residual below 1e-14: nothing to fit
    double slope = 0.0;       // least-squares slope of log residual vs log lambda
    bool pass = false;        // exact_zero, or |slope - claimed_rate| <= 0.1
    bool converges = false;   // exact_zero, or residuals strictly decreasing
};

// Evaluates the family on a strictly decreasing positive grid (>= 3 points)
// and fits the convergence exponent.  Uses the family's exact residual when
// available, floating evaluation otherwise.
LimitReport limit_experiment(const LimitFamily& family, const std::vector<double>& grid);

// {1e-1, 1e-1.5, 1e-2, 1e-2.5, 1e-3}
std::vector<double> default_lambda_grid();

// ---------------------------------------------------------------------------
// Infeasibility certificates
// ---------------------------------------------------------------------------

// One polynomial system: all necklace coordinates of a symbolic evaluation
// equated to a fixed target tensor, with the leading matrix constrained to
// one normal-form shape (conjugation invariance justifies the case split).
struct GeneratedSystem {
    std::string name;  // "jordan" or "diagonal"
    RingPtr ring;
    std::vector<MultiPoly<Rational>> equations;
};

// The two full necklace systems for "W_N = T_N(M0, M1)": M0 = [[a,1],[0,a]]
// (jordan) or M0 = diag(a,d) (diagonal), M1 arbitrary.  3 <= N <= 8.
std::vector<GeneratedSystem> wstate_membership_systems(int N);

// The two full necklace systems for "e_012 = T_3(M0, M1, M2)" with three
// 2x2 matrices.  When drop_unit_equation is set, the single inhomogeneous
// equation (the coordinate at necklace 012) is removed from both systems,
// leaving homogeneous systems with the zero solution (a feasibility control).
std::vector<GeneratedSystem> e012_membership_systems(bool drop_unit_equation = false);

struct SystemVerdict {
    std::string name;
    size_t equations = 0;
    size_t vars = 0;
    size_t basis_size = 0;  // size of the reduced Groebner basis
    bool infeasible = false;  // basis == {1}: no solutions over any field extension
};

struct CertificateReport {
    std::string claim;
    std::vector<SystemVerdict> systems;
    bool certified = false;  // every case system is infeasible
};

// Certifies W_N not expressible as a bond-2 evaluation of length N, for
// 4 <= N <= 8.  N = 3 is accepted as a control: its diagonal system is
// feasible (the length-3 set fills the ambient space), so the report comes
// back uncertified with the feasible case identified.
// Throws std::invalid_argument outside 3 <= N <= 8; propagates
// BudgetExceeded if a Groebner run exceeds its step budget.
CertificateReport certify_not_member_wstate(int N);

// Certifies the necklace basis tensor at 012 not expressible with three 2x2
// matrices at length 3.  With drop_unit_equation the inhomogeneous equation
// is removed and the report documents feasibility instead (control).
CertificateReport certify_not_member_e012(bool drop_unit_equation = false);

// The non-closedness conjunction at length N: the limit experiment shows the
// target is reachable from the evaluation set, the certificate shows it is
// not in the set.  Both together witness that the set is not closed.
struct NonClosednessReport {
    int N = 0;
    LimitReport limit;
    CertificateReport certificate;
    bool not_closed = false;  // limit.converges && certificate.certified
};
NonClosednessReport closedness_experiment(int N);

// ---------------------------------------------------------------------------
// Constructible-set membership at (D, d, N) = (2, 2, 4)
// ---------------------------------------------------------------------------

enum class Tristate { no, yes, unknown };

struct MembershipVerdict {
    CyclicTensor<QuadExt> point{4, 2};
    bool in_closure = false;            // the degree-6 hypersurface vanishes
    Tristate in_set = Tristate::unknown;
    std::string certificate;            // which ideal checks fired
};

// The defining data of the constructible description of the length-4 bond-2
// evaluation set: one sextic hypersurface, three excluded orbit-closure
// ideals, and the ideal of the symmetric rank-one locus.  Loaded from the
// data directory once and cached.
struct Constructible224 {
    RingPtr ring;  // necklace variables over Q(sqrt2), grevlex
    MultiPoly<QuadExt> hypersurface;
    std::vector<std::vector<MultiPoly<QuadExt>>> excluded;  // three ideals
    std::vector<MultiPoly<QuadExt>> symmetric_locus;
};
const Constructible224& constructible_224();

// Membership of a length-4 bond-2 cyclic tensor in the evaluation set:
//   member  iff  (hypersurface vanishes and no excluded ideal vanishes)
//           or   the symmetric-locus ideal vanishes.
// in_closure iff the hypersurface vanishes.  Exact over Q(sqrt2).
MembershipVerdict decide_membership_224(const CyclicTensor<QuadExt>& point);
MembershipVerdict decide_membership_224(const CyclicTensor<Rational>& point);

// ---------------------------------------------------------------------------
// Trivial closedness classification
// ---------------------------------------------------------------------------

// The uMPS set is closed for trivial reasons when D = 1 (a Veronese variety),
// d = 1 or N = 1 (it fills the ambient space), or N = 2 (symmetric matrices
// of rank at most D^2).  Returns the classification with the reason branch:
//   "closed (trivial): Veronese variety"
//   "closed (trivial): fills the ambient space"
//   "closed (trivial): bounded-rank symmetric matrices"
//   "nontrivial"
std::string trivial_case_check(int D, int d, int N);

} // namespace umps
