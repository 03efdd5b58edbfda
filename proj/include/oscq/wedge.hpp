#pragma once

#include <stdexcept>
#include <vector>

#include "oscq/lie.hpp"

namespace oscq {

// Index of X_i ^ X_j (i < j) in the canonical wedge basis.
inline int wedge2_index(int dim, int i, int j) {
    if (i >= j) throw std::domain_error("wedge2_index: need i < j");
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    return i * dim - i * (i + 1) / 2 + (j - i - 1);
}
inline int wedge2_count(int dim) { return dim * (dim - 1) / 2; }

inline int wedge3_count(int dim) { return dim * (dim - 1) * (dim - 2) / 6; }

// Element of g (x) g with Poly coefficients: entry (i,j) is the coefficient
// of X_i (x) X_j.
using Tensor2 = MatP;

// Element of g (x) g (x) g, flattened.
struct Tensor3 {
    int dim = 0;
    std::vector<Poly> c;

    explicit Tensor3(int d = 0) : dim(d), c(static_cast<std::size_t>(d) * d * d) {}
    Poly& at(int i, int j, int k) { return c[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
    const Poly& at(int i, int j, int k) const {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    bool is_zero() const {
        for (auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }
};

// Skew element of g ^ g over the canonical basis {X_i ^ X_j : i < j}, where
// x ^ y stands for x (x) y - y (x) x when expanded to tensor form.
struct Wedge2 {
    int dim = 0;
    VecP c;

    explicit Wedge2(int d = 0) : dim(d), c(wedge2_count(d)) {
        for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = Poly();
    }

    Poly& at(int i, int j) { return c(wedge2_index(dim, i, j)); }
    const Poly& at(int i, int j) const { return c(wedge2_index(dim, i, j)); }

    void add(int i, int j, const Poly& coeff) {
        if (i == j) return;
        if (i < j) c(wedge2_index(dim, i, j)) += coeff;
        else c(wedge2_index(dim, j, i)) -= coeff;
    }

    bool is_zero() const {
        for (Eigen::Index k = 0; k < c.size(); ++k)
            if (!c(k).is_zero()) return false;
        return true;
    }

    Wedge2& operator+=(const Wedge2& o) { c += o.c; return *this; }
    Wedge2& operator-=(const Wedge2& o) { c -= o.c; return *this; }
    friend Wedge2 operator+(Wedge2 a, const Wedge2& b) { a += b; return a; }
    friend Wedge2 operator-(Wedge2 a, const Wedge2& b) { a -= b; return a; }
    Wedge2 scaled(const Poly& f) const {
        Wedge2 r(dim);
        for (Eigen::Index k = 0; k < c.size(); ++k) r.c(k) = c(k) * f;
        return r;
    }
    bool operator==(const Wedge2& o) const {
        if (dim != o.dim) return false;
        for (Eigen::Index k = 0; k < c.size(); ++k)
            if (c(k) != o.c(k)) return false;
        return true;
    }

    Tensor2 to_tensor() const {
        Tensor2 t = zero_matrix<Poly>(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) {
                const Poly& v = at(i, j);
                if (v.is_zero()) continue;
                t(i, j) += v;
                t(j, i) -= v;
            }
        return t;
    }

    Wedge2 with_substitution(const std::vector<std::pair<int, Poly>>& subs) const {
        Wedge2 r(dim);
        for (Eigen::Index k = 0; k < c.size(); ++k) r.c(k) = c(k).substituted(subs);
        return r;
    }

    std::string str(const LieAlgebra& L) const;
};

struct Wedge3 {
    int dim = 0;
    VecP c;

    explicit Wedge3(int d = 0) : dim(d), c(wedge3_count(d)) {
        for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = Poly();
    }

    static int index(int dim, int i, int j, int k) {
        int idx = 0;
        for (int a = 0; a < dim; ++a)
            for (int b = a + 1; b < dim; ++b)
                for (int cc = b + 1; cc < dim; ++cc) {
                    if (a == i && b == j && cc == k) return idx;
                    ++idx;
                }
        throw std::domain_error("wedge3 index: need i < j < k in range");
    }

    const Poly& at(int i, int j, int k) const { return c(index(dim, i, j, k)); }
    Poly& at(int i, int j, int k) { return c(index(dim, i, j, k)); }

    bool is_zero() const {
        for (Eigen::Index k = 0; k < c.size(); ++k)
            if (!c(k).is_zero()) return false;
        return true;
    }
    std::string str(const LieAlgebra& L) const;
};

// Slotwise adjoint action of the basis element X_x: sum over slots of ad_x.
Tensor2 adjoint_action(const LieAlgebra& L, int x, const Tensor2& t);
Tensor3 adjoint_action(const LieAlgebra& L, int x, const Tensor3& t);

Tensor3 to_tensor(const Wedge3& w);
bool ad_invariant(const LieAlgebra& L, const Wedge3& w);

inline Wedge2 adjoint_action(const LieAlgebra& L, int x, const Wedge2& w) {
    Tensor2 t = adjoint_action(L, x, w.to_tensor());
    Wedge2 r(L.dim());
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) r.at(i, j) = t(i, j);
    return r;
}

// (t - sigma(t)) / 2 in canonical wedge coordinates.
inline Wedge2 skew_part(const LieAlgebra& L, const Tensor2& t) {
    Wedge2 r(L.dim());
    Rat half(1, 2);
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) r.at(i, j) = half * (t(i, j) - t(j, i));
    return r;
}

struct SchoutenNotAlternating : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Schouten bracket [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23], expanded via
// structure constants and canonicalized into the third wedge power.
Wedge3 schouten(const LieAlgebra& L, const Wedge2& r);

// Invertible linear map on the basis, verified to preserve all brackets.
// Entries may be polynomials in classification parameters; declared
// nonvanishing assumptions travel with the map (e.g. a1 != 0 when an entry
// stands for a quotient by a1).
struct NotAutomorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Automorphism {
    MatP mat;  // column j = coefficients of the image of X_j
    std::vector<Poly> assumptions;

    static Automorphism identity(const LieAlgebra& L) {
        return Automorphism{identity_matrix<Poly>(L.dim()), {}};
    }

    // Throws NotAutomorphism unless every bracket is preserved.
    void verify(const LieAlgebra& L) const;

    // Inverse with polynomial entries (adjugate over determinant, exact).
    MatP inverse() const;

    Wedge2 apply(const Wedge2& w) const;  // (O (x) O) w
};

}  // namespace oscq
