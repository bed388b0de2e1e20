#include "umps/membership.hpp"

#include "umps/gauss.hpp"
#include "umps/groebner.hpp"
#include "umps/necklace.hpp"
#include "umps/poly_text.hpp"
#include "umps/variety.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace umps {

namespace {

// ---------------------------------------------------------------------------
// Built-in limit families
// ---------------------------------------------------------------------------

Rational rational_pow(const Rational& x, int e) {
    Rational r(1);
    Rational b = e >= 0 ? x : Rational(1) / x;
    for (int i = std::abs(e); i > 0; --i) r *= b;
    return r;
}

Rational exact_lambda(double l) {
    Rational lq = Rational::from_double_exact(l);
    if (lq.is_zero()) throw std::domain_error("limit family: parameter must be nonzero");
    return lq;
}

LimitFamily make_e012_family() {
    LimitFamily f;
    f.label = "e012";
    f.D = 2;
    f.d = 3;
    f.N = 3;
    f.claimed_rate = 6;
    f.target = CyclicTensor<Complex>::basis(3, 3, "012");
    f.builder = [](double l) {
        if (l == 0.0) throw std::domain_error("limit family: parameter must be nonzero");
        MatrixTuple<Complex> t(2, 3);
        t[0](0, 0) = l * l;
        t[1](0, 1) = 1.0 / l;
        t[2](1, 0) = 1.0 / l;
        return t;
    };
    f.exact_residual = [](double l) {
        const Rational lq = exact_lambda(l);
        MatrixTuple<Rational> t(2, 3);
        t[0](0, 0) = lq * lq;
        t[1](0, 1) = Rational(1) / lq;
        t[2](1, 0) = Rational(1) / lq;
        auto diff = evaluate_umps(t, 3) - CyclicTensor<Rational>::basis(3, 3, "012");
        return std::sqrt(diff.norm2_d());
    };
    return f;
}

// A phase z with z^N = -1 inside Q(i, sqrt2), when one exists:
//   N odd          -> -1
//   N = 2 (mod 4)  -> i
//   N = 4 (mod 8)  -> (1+i)*sqrt2/2
// For N = 0 (mod 8) the smallest such phase generates a larger field.
bool exact_phase(int N, GaussExt<QuadExt>& zeta) {
    using GQ = GaussExt<QuadExt>;
    if (N % 2 == 1) {
        zeta = GQ(QuadExt(-1));
        return true;
    }
    if (N % 4 == 2) {
        zeta = GQ::i();
        return true;
    }
    if (N % 8 == 4) {
        const QuadExt half_sqrt2(Rational(0), Rational(1, 2));
        zeta = GQ(half_sqrt2, half_sqrt2);
        return true;
    }
    return false;
}

LimitFamily make_wstate_family(int N) {
    LimitFamily f;
    f.label = "wstate(" + std::to_string(N) + ")";
    f.D = 2;
    f.d = 2;
    f.N = N;
    f.claimed_rate = N;
    f.target = w_state<Complex>(N);
    f.target *= Complex(2.0);
    const Complex zeta = std::polar(1.0, M_PI / N);
    f.builder = [N, zeta](double l) {
        if (l == 0.0) throw std::domain_error("limit family: parameter must be nonzero");
        MatrixTuple<Complex> t(2, 2);
        t[0](0, 0) = 1.0 / l;
        t[0](1, 1) = zeta / l;
        const double lp = std::pow(l, N - 1);
        t[1](0, 0) = lp;
        t[1](1, 1) = -zeta * lp;
        return t;
    };
    GaussExt<QuadExt> zx;
    if (exact_phase(N, zx)) {
        f.exact_residual = [N, zx](double l) {
            using GQ = GaussExt<QuadExt>;
            const Rational lq = exact_lambda(l);
            const QuadExt inv_l(Rational(1) / lq);
            const QuadExt lpow(rational_pow(lq, N - 1));
            MatrixTuple<GQ> t(2, 2);
            t[0](0, 0) = GQ(inv_l);
            t[0](1, 1) = GQ(inv_l) * zx;
            t[1](0, 0) = GQ(lpow);
            t[1](1, 1) = -(GQ(lpow) * zx);
            CyclicTensor<GQ> target(N, 2);
            Word w(static_cast<size_t>(N), 0);
            w[static_cast<size_t>(N) - 1] = 1;
            target.at_word(w) = GQ(QuadExt(2));
            auto diff = evaluate_umps(t, N) - target;
            return std::sqrt(diff.norm2_d());
        };
    }
    return f;
}

LimitFamily make_wstate_real_family(int N) {
    LimitFamily f;
    f.label = "wstate_real(" + std::to_string(N) + ")";
    f.D = 2;
    f.d = 2;
    f.N = N;
    f.claimed_rate = N;
    f.target = w_state<Complex>(N);
    f.target *= Complex(2.0);
    const double c = 2.0 * std::cos(M_PI / N);
    f.builder = [N, c](double l) {
        if (l == 0.0) throw std::domain_error("limit family: parameter must be nonzero");
        MatrixTuple<Complex> t(2, 2);
        t[0](0, 0) = c / l;
        t[0](0, 1) = 1.0 / l;
        t[0](1, 0) = -1.0 / l;
        const double lp = std::pow(l, N - 1);
        t[1](0, 0) = lp;
        t[1](1, 1) = lp;
        return t;
    };
    return f;
}

int parse_family_N(const std::string& name, const std::string& prefix) {
    // name == prefix "(" digits ")"
    if (name.size() <= prefix.size() + 2 || name.compare(0, prefix.size() + 1, prefix + "(") != 0 ||
        name.back() != ')')
        return -1;
    const std::string digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    if (digits.empty()) return -1;
    for (char ch : digits)
        if (ch < '0' || ch > '9') return -1;
    return std::atoi(digits.c_str());
}

// ---------------------------------------------------------------------------
// Symbolic system generation
// ---------------------------------------------------------------------------

using PolyQ = MultiPoly<Rational>;

PolyQ var(const RingPtr& ring, int idx) { return PolyQ::variable(ring, idx); }

Matrix<PolyQ> poly_matrix(const PolyQ& e00, const PolyQ& e01,
                          const PolyQ& e10, const PolyQ& e11) {
    Matrix<PolyQ> m(2, 2);
    m(0, 0) = e00;
    m(0, 1) = e01;
    m(1, 0) = e10;
    m(1, 1) = e11;
    return m;
}

// All necklace coordinates of the symbolic evaluation equated to the target
// (coordinate 1 at target_index, 0 elsewhere).  With drop_target the target
// coordinate's row is omitted entirely, leaving a homogeneous system.
std::vector<PolyQ> necklace_equations(const MatrixTuple<PolyQ>& tuple, int N,
                                      int target_index, const RingPtr& ring,
                                      bool drop_target = false) {
    const NecklaceTable& table = NecklaceTable::get(N, tuple.d);
    std::vector<PolyQ> eqs;
    eqs.reserve(table.list().size());
    for (size_t i = 0; i < table.list().size(); ++i) {
        if (drop_target && static_cast<int>(i) == target_index) continue;
        PolyQ eq = trace_of_word(tuple, table.list()[i].word);
        if (static_cast<int>(i) == target_index) eq -= PolyQ::constant(ring, Rational(1));
        if (!eq.is_zero()) eqs.push_back(std::move(eq));
    }
    return eqs;
}

SystemVerdict run_system(const GeneratedSystem& sys) {
    SystemVerdict v;
    v.name = sys.name;
    v.equations = sys.equations.size();
    v.vars = sys.ring->nvars();
    auto basis = buchberger(sys.equations);
    v.basis_size = basis.size();
    v.infeasible = basis.size() == 1 && basis[0].is_constant();
    return v;
}

// ---------------------------------------------------------------------------
// Constructible-set data
// ---------------------------------------------------------------------------

std::vector<MultiPoly<QuadExt>> lift_ideal(const std::vector<PolyQ>& polys, const RingPtr& ring) {
    std::vector<MultiPoly<QuadExt>> out;
    out.reserve(polys.size());
    for (const PolyQ& p : polys) {
        std::vector<MultiPoly<QuadExt>::Term> terms;
        terms.reserve(p.nterms());
        for (const auto& t : p.terms()) terms.push_back({t.first, QuadExt(t.second)});
        out.push_back(MultiPoly<QuadExt>::from_terms(ring, std::move(terms)));
    }
    return out;
}

Constructible224 load_constructible_224() {
    const std::string dir = std::string(UMPS_DATA_DIR) + "/";
    auto f = read_poly_file<Rational>(dir + "f224.txt");
    auto i1 = read_poly_file<Rational>(dir + "I1.txt");
    auto i2 = read_poly_file<QuadExt>(dir + "I2.txt");
    auto i3 = read_poly_file<QuadExt>(dir + "I3.txt");
    auto j = read_poly_file<Rational>(dir + "J.txt");

    const RingPtr& ring = i2.ring;
    const RingPtr neck = necklace_ring(4, 2);
    for (const RingPtr& r : {f.ring, i1.ring, i3.ring, j.ring})
        if (r->vars != ring->vars)
            throw std::runtime_error("constructible data: variable sets disagree across files");
    if (ring->vars != neck->vars)
        throw std::runtime_error("constructible data: variables do not match the length-4 necklace ring");
    if (f.polys.size() != 1)
        throw std::runtime_error("constructible data: expected a single hypersurface equation");

    Constructible224 data;
    data.ring = ring;
    data.hypersurface = lift_ideal(f.polys, ring)[0];
    data.excluded.push_back(lift_ideal(i1.polys, ring));
    data.excluded.push_back(i2.polys);
    data.excluded.push_back(i3.polys);
    data.symmetric_locus = lift_ideal(j.polys, ring);
    return data;
}

bool ideal_vanishes(const std::vector<MultiPoly<QuadExt>>& gens, const std::vector<QuadExt>& p) {
    for (const auto& g : gens)
        if (!g.evaluate(p).is_zero()) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Limit families
// ---------------------------------------------------------------------------

LimitFamily builtin_family(const std::string& name) {
    if (name == "e012") return make_e012_family();
    if (int N = parse_family_N(name, "wstate"); N >= 0) {
        if (N < 3) throw std::invalid_argument("builtin_family: wstate requires N >= 3");
        return make_wstate_family(N);
    }
    if (int N = parse_family_N(name, "wstate_real"); N >= 0) {
        if (N < 3) throw std::invalid_argument("builtin_family: wstate_real requires N >= 3");
        return make_wstate_real_family(N);
    }
    throw std::invalid_argument("builtin_family: unknown family '" + name + "'");
}

std::vector<double> default_lambda_grid() {
    return {1e-1, std::pow(10.0, -1.5), 1e-2, std::pow(10.0, -2.5), 1e-3};
}

LimitReport limit_experiment(const LimitFamily& family, const std::vector<double>& grid) {
    if (grid.size() < 3)
        throw std::invalid_argument("limit_experiment: need at least 3 grid points");
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0))
            throw std::invalid_argument("limit_experiment: grid values must be positive");
        if (i > 0 && !(grid[i] < grid[i - 1]))
            throw std::invalid_argument("limit_experiment: grid must be strictly decreasing");
    }

    LimitReport rep;
    rep.label = family.label;
    rep.claimed_rate = family.claimed_rate;
    for (double l : grid) {
        double res;
        if (family.exact_residual) {
            res = family.exact_residual(l);
        } else {
            auto diff = evaluate_umps(family.builder(l), family.N) - family.target;
            res = std::sqrt(diff.norm2_d());
        }
        rep.rows.push_back({l, res});
    }

    rep.exact_zero = true;
    for (const LimitRow& r : rep.rows)
        if (r.residual >= 1e-14) rep.exact_zero = false;
    if (rep.exact_zero) {
        rep.slope = 0.0;
        rep.pass = true;
        rep.converges = true;
        return rep;
    }

    // Least-squares slope of log residual against log lambda.  Exact zeros
    // cannot occur for a family with any nonzero residual row; floor the
    // argument anyway so a stray zero cannot produce -inf.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(rep.rows.size());
    for (const LimitRow& r : rep.rows) {
        const double x = std::log(r.lambda);
        const double y = std::log(std::max(r.residual, 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.pass = std::abs(rep.slope - static_cast<double>(rep.claimed_rate)) <= 0.1;
    rep.converges = true;
    for (size_t i = 1; i < rep.rows.size(); ++i)
        if (!(rep.rows[i].residual < rep.rows[i - 1].residual)) rep.converges = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Infeasibility certificates
// ---------------------------------------------------------------------------

std::vector<GeneratedSystem> wstate_membership_systems(int N) {
    if (N < 3 || N > 8)
        throw std::invalid_argument("wstate_membership_systems: 3 <= N <= 8 required");
    const NecklaceTable& table = NecklaceTable::get(N, 2);
    Word w1(static_cast<size_t>(N), 0);
    w1.back() = 1;
    const int target = table.index_of_word(w1);

    std::vector<GeneratedSystem> out;
    {
        GeneratedSystem sys;
        sys.name = "jordan";
        sys.ring = PolyRing::make({"a", "A", "B", "C", "D"});
        const auto& R = sys.ring;
        MatrixTuple<PolyQ> t(2, 2);
        t[0] = poly_matrix(var(R, 0), PolyQ::constant(R, Rational(1)), PolyQ::zero(R), var(R, 0));
        t[1] = poly_matrix(var(R, 1), var(R, 2), var(R, 3), var(R, 4));
        sys.equations = necklace_equations(t, N, target, R);
        out.push_back(std::move(sys));
    }
    {
        GeneratedSystem sys;
        sys.name = "diagonal";
        sys.ring = PolyRing::make({"a", "d", "A", "B", "C", "D"});
        const auto& R = sys.ring;
        MatrixTuple<PolyQ> t(2, 2);
        t[0] = poly_matrix(var(R, 0), PolyQ::zero(R), PolyQ::zero(R), var(R, 1));
        t[1] = poly_matrix(var(R, 2), var(R, 3), var(R, 4), var(R, 5));
        sys.equations = necklace_equations(t, N, target, R);
        out.push_back(std::move(sys));
    }
    return out;
}

std::vector<GeneratedSystem> e012_membership_systems(bool drop_unit_equation) {
    const NecklaceTable& table = NecklaceTable::get(3, 3);
    const int target = table.index_of_word({0, 1, 2});

    std::vector<GeneratedSystem> out;
    {
        GeneratedSystem sys;
        sys.name = "jordan";
        sys.ring = PolyRing::make({"a", "a2", "b2", "c2", "d2", "a3", "b3", "c3", "d3"});
        const auto& R = sys.ring;
        MatrixTuple<PolyQ> t(2, 3);
        t[0] = poly_matrix(var(R, 0), PolyQ::constant(R, Rational(1)), PolyQ::zero(R), var(R, 0));
        t[1] = poly_matrix(var(R, 1), var(R, 2), var(R, 3), var(R, 4));
        t[2] = poly_matrix(var(R, 5), var(R, 6), var(R, 7), var(R, 8));
        sys.equations = necklace_equations(t, 3, target, R, drop_unit_equation);
        out.push_back(std::move(sys));
    }
    {
        GeneratedSystem sys;
        sys.name = "diagonal";
        sys.ring = PolyRing::make({"a1", "d1", "a2", "b2", "c2", "d2", "a3", "b3", "c3", "d3"});
        const auto& R = sys.ring;
        MatrixTuple<PolyQ> t(2, 3);
        t[0] = poly_matrix(var(R, 0), PolyQ::zero(R), PolyQ::zero(R), var(R, 1));
        t[1] = poly_matrix(var(R, 2), var(R, 3), var(R, 4), var(R, 5));
        t[2] = poly_matrix(var(R, 6), var(R, 7), var(R, 8), var(R, 9));
        sys.equations = necklace_equations(t, 3, target, R, drop_unit_equation);
        out.push_back(std::move(sys));
    }
    if (drop_unit_equation) {
        // The generated systems are then homogeneous: drop the inhomogeneous
        // coordinate equation and the all-zero tuple solves what remains.
        for (auto& sys : out) sys.name += " (unit equation dropped)";
    }
    return out;
}

CertificateReport certify_not_member_wstate(int N) {
    CertificateReport rep;
    rep.claim = "W_" + std::to_string(N) + " is not a length-" + std::to_string(N) +
                " evaluation of a 2x2 matrix pair";
    rep.certified = true;
    for (const auto& sys : wstate_membership_systems(N)) {
        rep.systems.push_back(run_system(sys));
        if (!rep.systems.back().infeasible) rep.certified = false;
    }
    return rep;
}

CertificateReport certify_not_member_e012(bool drop_unit_equation) {
    CertificateReport rep;
    rep.claim = "the necklace basis tensor at 012 is not a length-3 evaluation of three 2x2 matrices";
    if (drop_unit_equation) rep.claim += " (control: inhomogeneous equation removed)";
    rep.certified = true;
    for (const auto& sys : e012_membership_systems(drop_unit_equation)) {
        rep.systems.push_back(run_system(sys));
        if (!rep.systems.back().infeasible) rep.certified = false;
    }
    return rep;
}

NonClosednessReport closedness_experiment(int N) {
    NonClosednessReport rep;
    rep.N = N;
    rep.limit = limit_experiment(builtin_family("wstate(" + std::to_string(N) + ")"),
                                 default_lambda_grid());
    rep.certificate = certify_not_member_wstate(N);
    rep.not_closed = rep.limit.converges && rep.certificate.certified;
    return rep;
}

// ---------------------------------------------------------------------------
// Constructible-set membership
// ---------------------------------------------------------------------------

const Constructible224& constructible_224() {
    static const Constructible224 data = load_constructible_224();
    return data;
}

MembershipVerdict decide_membership_224(const CyclicTensor<QuadExt>& point) {
    if (point.N() != 4 || point.d() != 2)
        throw std::invalid_argument("decide_membership_224: length-4 binary tensor required");
    const Constructible224& data = constructible_224();
    const std::vector<QuadExt>& p = point.coords();

    MembershipVerdict v;
    v.point = point;
    v.in_closure = data.hypersurface.evaluate(p).is_zero();

    if (ideal_vanishes(data.symmetric_locus, p)) {
        // Contained in the hypersurface, so in_closure holds automatically.
        v.in_set = Tristate::yes;
        v.certificate = "symmetric-locus ideal vanishes: rank-one symmetric evaluation";
        return v;
    }
    if (!v.in_closure) {
        v.in_set = Tristate::no;
        v.certificate = "hypersurface nonzero: outside the closure";
        return v;
    }
    for (size_t i = 0; i < data.excluded.size(); ++i) {
        if (ideal_vanishes(data.excluded[i], p)) {
            v.in_set = Tristate::no;
            v.certificate = "on the hypersurface but excluded orbit-closure ideal " +
                            std::to_string(i + 1) + " vanishes: boundary point";
            return v;
        }
    }
    v.in_set = Tristate::yes;
    v.certificate = "on the hypersurface and every excluded orbit-closure ideal is nonzero";
    return v;
}

MembershipVerdict decide_membership_224(const CyclicTensor<Rational>& point) {
    if (point.N() != 4 || point.d() != 2)
        throw std::invalid_argument("decide_membership_224: length-4 binary tensor required");
    CyclicTensor<QuadExt> lifted(4, 2);
    for (int i = 0; i < point.dim(); ++i) lifted[i] = QuadExt(point[i]);
    return decide_membership_224(lifted);
}

// ---------------------------------------------------------------------------
// Trivial closedness classification
// ---------------------------------------------------------------------------

std::string trivial_case_check(int D, int d, int N) {
    if (D < 1 || d < 1 || N < 1)
        throw std::invalid_argument("trivial_case_check: D, d, N >= 1 required");
    if (D == 1) return "closed (trivial): Veronese variety";
    if (d == 1 || N == 1) return "closed (trivial): fills the ambient space";
    if (N == 2) return "closed (trivial): bounded-rank symmetric matrices";
    return "nontrivial";
}

} // namespace umps
