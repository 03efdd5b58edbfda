#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscq/pbw.hpp"
#include "oscq/wedge.hpp"

namespace oscq {

// Cocommutator g -> g ^ g: one wedge element per basis generator.
struct Cocommutator {
    std::vector<Wedge2> delta;

    Cocommutator() = default;
    explicit Cocommutator(const LieAlgebra& L) : delta(L.dim(), Wedge2(L.dim())) {}
    bool is_zero() const {
        for (auto& w : delta)
            if (!w.is_zero()) return false;
        return true;
    }
    bool operator==(const Cocommutator& o) const { return delta == o.delta; }

    Cocommutator with_substitution(const std::vector<std::pair<int, Poly>>& subs) const {
        Cocommutator r = *this;
        for (auto& w : r.delta) w = w.with_substitution(subs);
        return r;
    }
};

// Parametric family of cocommutators; coefficients are Poly in the free
// parameter symbols, linear by construction.
struct CocommutatorFamily {
    Cocommutator map;
    std::vector<int> params;  // symbol ids

    CocommutatorFamily(const LieAlgebra& L, std::vector<int> params)
        : map(L), params(std::move(params)) {}
};

// Residual of the 1-cocycle condition on the pair (x, y):
// delta([x,y]) - [delta(x), 1(x)y + y(x)1] - [1(x)x + x(x)1, delta(y)].
Wedge2 cocycle_residual(const LieAlgebra& L, const Cocommutator& d, int x, int y);

// Solve the cocycle condition on the generic skew ansatz; returns the exact
// nullspace as a parametric family with freshly named parameters.
CocommutatorFamily solve_cocycle(const LieAlgebra& L, const std::string& param_prefix = "p");

// Generators of the co-Jacobi ideal: nonzero coefficients of the cyclic sum
// of (delta (x) id) o delta, deduplicated up to nonzero rational scalars.
std::vector<Poly> cojacobi_ideal(const LieAlgebra& L, const Cocommutator& d);

// delta(x) = [1(x)x + x(x)1, r].
Cocommutator delta_from_r(const LieAlgebra& L, const Wedge2& r);

// Inverse problem: solve delta(x) = [1(x)x + x(x)1, r] for r in g ^ g.
// nullopt = no generic solution (a non-coboundary cocommutator).
struct RMatrixSolution {
    Wedge2 particular;
    std::vector<Wedge2> kernel;  // ad-invariant skew elements
    std::vector<Poly> pivot_assumptions;
};
std::optional<RMatrixSolution> r_from_delta(const LieAlgebra& L, const Cocommutator& d);

// Is w = particular + span(kernel) for polynomial coefficients?
bool solution_contains(const LieAlgebra& L, const RMatrixSolution& sol, const Wedge2& w);

struct ReductionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// h4 specifics

namespace h4 {

// Free parameters a1..a6 of the six-parameter family.
std::vector<int> family_params();

// The six-parameter cocommutator family on h4:
//   delta(N)  = a1 N^A+ + a2 N^A- + a5 A+^M + a6 A-^M
//   delta(A+) = a2 N^M + a2 A+^A- + a3 A+^M
//   delta(A-) = a1 N^M - a1 A+^A- + a4 A-^M
//   delta(M)  = 0
CocommutatorFamily six_parameter_family();

// Classical r-matrices of the three branches (coefficients in a1..a6).
Wedge2 r_type_a();
Wedge2 r_type_b();
Wedge2 r_type_c();

// Jordanian r-matrix z N^A+ and its cocommutator.
Wedge2 r_jordanian();
Cocommutator delta_jordanian();

// Standard (Type C) data: the full tensor r of the standard deformation,
// its skew part z A-^A+, and the bialgebra it generates.
Tensor2 standard_r_tensor();
Wedge2 r_standard_skew();
Cocommutator delta_standard();

// Triangularity condition polynomial per branch ("A", "B", "C").
Poly triangularity_poly(const std::string& branch);

// Candidate swap automorphism N -> -N, A+ -> A-, A- -> A+, M -> -M
// (machine-verified before use).
Automorphism swap_automorphism();

}  // namespace h4

// ---------------------------------------------------------------------------
// Classification report

struct IdentificationReport {
    std::string branch;
    std::vector<std::pair<std::string, Poly>> substitution;  // a_i -> expression
    bool verified = false;
};

struct BranchReport {
    std::string name;
    std::vector<std::string> zero_params;
    std::vector<std::string> nonzero_params;
    Cocommutator family;                 // restricted to the branch
    std::vector<int> free_params;
    RMatrixSolution r_solution;
    bool r_recovers_family = false;      // delta_from_r(particular) == family
    bool reference_r_in_solution_set = false;
    Wedge3 schouten_value;
    Poly triangularity;
    std::vector<Poly> schouten_quotients;
    bool schouten_ad_invariant = false;
    bool delta_central_zero = false;     // delta(M) = 0
    bool delta_aplus_zero = false;       // Type A
    bool delta_aminus_zero = false;      // Type B
    IdentificationReport identification;
};

struct SwapEquivalenceReport {
    bool automorphism_verified = false;
    // Induced parameter correspondence: Type A parameter -> polynomial in the
    // Type B parameters, found by exact linear matching.
    std::vector<std::pair<std::string, Poly>> correspondence;
    bool matched = false;
};

struct A5EliminationReport {
    bool automorphism_verified = false;
    bool eliminated = false;
    std::vector<Poly> assumptions;  // a1 != 0
};

struct H4Classification {
    CocommutatorFamily raw_family;        // nullspace parameters p1..p6
    CocommutatorFamily renamed_family;    // the standard parameter names a1..a6
    MatR renaming;                        // column m: a_m in terms of p-basis
    bool renaming_invertible = false;
    std::vector<Poly> cojacobi;           // monic generators
    bool branch_split_exhaustive = false;
    std::vector<BranchReport> branches;
    A5EliminationReport a5_elimination;
    SwapEquivalenceReport swap_equivalence;
    bool all_coboundary = false;

    // Location of the standard bialgebra inside the classification.
    std::vector<std::pair<std::string, Poly>> standard_parameters;  // a_i values
    std::string standard_branch;
    bool standard_r_matches_skew_part = false;
};

H4Classification classify_h4();

// Generic classification for user-supplied algebras: family, ideal, and the
// coboundary inverse problem on the full family.
struct GenericClassification {
    CocommutatorFamily family;
    std::vector<Poly> cojacobi;
    std::optional<RMatrixSolution> r_solution;  // nullopt: non-coboundary family
    bool cocycle_verified = false;
};
GenericClassification classify_generic(const LieAlgebra& L);

// ---------------------------------------------------------------------------
// First-order cocommutator extraction (Delta_z - sigma o Delta_z) mod z^2.

struct FirstOrderNotLieWedge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Extract the order-z term of Delta - sigma o Delta per generator and read it
// as an element of g ^ g, keeping z as a multiplicative factor. The mapping
// between PBW generators and Lie basis indices is by name.
Cocommutator first_order_cocommutator(const pbw::Context& ctx, const LieAlgebra& L);

}  // namespace oscq
