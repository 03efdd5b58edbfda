#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscq/poly.hpp"
#include "oscq/series.hpp"

namespace Eigen {

template <>
struct NumTraits<oscq::Rat> : GenericNumTraits<oscq::Rat> {
    typedef oscq::Rat Real;
    typedef oscq::Rat NonInteger;
    typedef oscq::Rat Nested;
    typedef oscq::Rat Literal;
    static inline Real epsilon() { return oscq::Rat(0); }
    static inline Real dummy_precision() { return oscq::Rat(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
};

template <>
struct NumTraits<oscq::Poly> : GenericNumTraits<oscq::Poly> {
    typedef oscq::Poly Real;
    typedef oscq::Poly NonInteger;
    typedef oscq::Poly Nested;
    typedef oscq::Poly Literal;
    static inline Real epsilon() { return oscq::Poly(); }
    static inline Real dummy_precision() { return oscq::Poly(); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 500,
        MulCost = 500
    };
};

}  // namespace Eigen

namespace oscq {

using MatR = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecR = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatP = Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic>;
using VecP = Eigen::Matrix<Poly, Eigen::Dynamic, 1>;

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> zero_matrix(Eigen::Index r, Eigen::Index c) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Scalar(0);
    return m;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> identity_matrix(Eigen::Index n) {
    auto m = zero_matrix<Scalar>(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

// Kronecker product with (row-major) pair index (i,k) -> i*rowsB + k.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
    auto r = zero_matrix<Scalar>(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

// Matrix product that multiplies entries in left-to-right order; safe for
// noncommutative scalar rings where Eigen's own product is not.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> nc_mul(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
    if (a.cols() != b.rows()) throw std::domain_error("nc_mul: shape mismatch");
    auto r = zero_matrix<Scalar>(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            for (Eigen::Index k = 0; k < a.cols(); ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
}

// Affine solution set of a linear system: particular + span(kernel), together
// with the pivot polynomials assumed nonzero during elimination.
template <typename Scalar>
struct SolutionSet {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> particular;
    std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> kernel;
    std::vector<Poly> pivot_assumptions;

    int kernel_dimension() const { return static_cast<int>(kernel.size()); }
};

// Exact nullspace basis over the rationals (reduced row echelon form with a
// unit entry at each free variable). Deterministic.
SolutionSet<Rat> nullspace(const MatR& m);

// Solve A x = b over the rationals; nullopt when inconsistent. Free
// variables are fixed at zero; kernel reported alongside.
std::optional<SolutionSet<Rat>> rat_solve(const MatR& a, const VecR& b);

// Fraction-free (single-step Bareiss/Jordan) elimination over the polynomial
// ring. Returns the affine solution set valid for generic parameter values
// plus the list of pivot polynomials assumed nonzero; nullopt when the system
// is generically inconsistent. Kernel vectors are polynomial by construction
// (scaled by the final pivot); the particular solution requires the final
// exact divisions to succeed, which they do whenever the generic solution is
// polynomial.
std::optional<SolutionSet<Poly>> solve_affine(const MatP& a, const VecP& b);

namespace detail {
void eliminate_fraction_free(MatP& m, Eigen::Index coeff_cols,
                             std::vector<Eigen::Index>& pivot_rows,
                             std::vector<Eigen::Index>& pivot_cols,
                             std::vector<Poly>& assumptions, Poly& last_pivot);
}

}  // namespace oscq
