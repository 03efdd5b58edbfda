#include "oscq/wedge.hpp"

#include <functional>
#include <sstream>

namespace oscq {

Tensor2 adjoint_action(const LieAlgebra& L, int x, const Tensor2& t) {
    const int n = L.dim();
    if (x < 0 || x >= n) throw std::out_of_range("adjoint_action: basis index");
    Tensor2 r = zero_matrix<Poly>(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const Poly& v = t(k, l);
            if (v.is_zero()) continue;
            for (int a = 0; a < n; ++a) {
                const Rat& c1 = L.c(x, k, a);
                if (!c1.is_zero()) r(a, l) += c1 * v;
                const Rat& c2 = L.c(x, l, a);
                if (!c2.is_zero()) r(k, a) += c2 * v;
            }
        }
    return r;
}

Tensor3 adjoint_action(const LieAlgebra& L, int x, const Tensor3& t) {
    const int n = L.dim();
    if (x < 0 || x >= n) throw std::out_of_range("adjoint_action: basis index");
    Tensor3 r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Poly& v = t.at(i, j, k);
                if (v.is_zero()) continue;
                for (int a = 0; a < n; ++a) {
                    const Rat& c1 = L.c(x, i, a);
                    if (!c1.is_zero()) r.at(a, j, k) += c1 * v;
                    const Rat& c2 = L.c(x, j, a);
                    if (!c2.is_zero()) r.at(i, a, k) += c2 * v;
                    const Rat& c3 = L.c(x, k, a);
                    if (!c3.is_zero()) r.at(i, j, a) += c3 * v;
                }
            }
    return r;
}

Wedge3 schouten(const LieAlgebra& L, const Wedge2& r) {
    const int n = L.dim();
    Tensor2 rt = r.to_tensor();
    Tensor3 s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Poly& rij = rt(i, j);
            if (rij.is_zero()) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Poly& rkl = rt(k, l);
                    if (rkl.is_zero()) continue;
                    Poly f = rij * rkl;
                    for (int a = 0; a < n; ++a) {
                        // [r12, r13] = sum r^{ij} r^{kl} [X_i, X_k] (x) X_j (x) X_l
                        const Rat& c1 = L.c(i, k, a);
                        if (!c1.is_zero()) s.at(a, j, l) += c1 * f;
                        // [r12, r23] = sum r^{ij} r^{kl} X_i (x) [X_j, X_k] (x) X_l
                        const Rat& c2 = L.c(j, k, a);
                        if (!c2.is_zero()) s.at(i, a, l) += c2 * f;
                        // [r13, r23] = sum r^{ij} r^{kl} X_i (x) X_k (x) [X_j, X_l]
                        const Rat& c3 = L.c(j, l, a);
                        if (!c3.is_zero()) s.at(i, k, a) += c3 * f;
                    }
                }
        }

    // The result of the Schouten bracket of a skew element is totally
    // antisymmetric; verify before reading off wedge coordinates.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) {
                    if (!s.at(i, j, k).is_zero())
                        throw SchoutenNotAlternating("repeated-index component (" +
                                                     std::to_string(i) + "," + std::to_string(j) +
                                                     "," + std::to_string(k) + ") nonzero: " +
                                                     s.at(i, j, k).str());
                    continue;
                }
                if (s.at(i, j, k) != -s.at(j, i, k) || s.at(i, j, k) != -s.at(i, k, j))
                    throw SchoutenNotAlternating("tensor not alternating at (" + std::to_string(i) +
                                                 "," + std::to_string(j) + "," + std::to_string(k) +
                                                 ")");
            }

    Wedge3 w(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) w.at(i, j, k) = s.at(i, j, k);
    return w;
}

Tensor3 to_tensor(const Wedge3& w) {
    const int n = w.dim;
    Tensor3 t(n);
    static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    static const int sign[6] = {1, 1, 1, -1, -1, -1};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Poly& v = w.at(i, j, k);
                if (v.is_zero()) continue;
                int idx[3] = {i, j, k};
                for (int p = 0; p < 6; ++p) {
                    Poly& slot = t.at(idx[perm[p][0]], idx[perm[p][1]], idx[perm[p][2]]);
                    if (sign[p] > 0) slot += v;
                    else slot -= v;
                }
            }
    return t;
}

bool ad_invariant(const LieAlgebra& L, const Wedge3& w) {
    Tensor3 t = to_tensor(w);
    for (int x = 0; x < L.dim(); ++x)
        if (!adjoint_action(L, x, t).is_zero()) return false;
    return true;
}

void Automorphism::verify(const LieAlgebra& L) const {
    const int n = L.dim();
    if (mat.rows() != n || mat.cols() != n) throw std::domain_error("Automorphism: shape");
    // Invertibility comes with inverse(); bracket preservation checked here:
    // O([Xi,Xj]) = [O(Xi), O(Xj)] for all pairs.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            VecP lhs(n), rhs(n);
            for (int a = 0; a < n; ++a) { lhs(a) = Poly(); rhs(a) = Poly(); }
            for (int k = 0; k < n; ++k) {
                const Rat& ck = L.c(i, j, k);
                if (ck.is_zero()) continue;
                for (int a = 0; a < n; ++a) lhs(a) += ck * mat(a, k);
            }
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    Poly f = mat(a, i) * mat(b, j);
                    if (f.is_zero()) continue;
                    for (int m = 0; m < n; ++m) {
                        const Rat& cm = L.c(a, b, m);
                        if (!cm.is_zero()) rhs(m) += cm * f;
                    }
                }
            for (int a = 0; a < n; ++a)
                if (lhs(a) != rhs(a))
                    throw NotAutomorphism("bracket [" + L.name(i) + ", " + L.name(j) +
                                          "] not preserved (component " + L.name(a) + ": " +
                                          lhs(a).str() + " vs " + rhs(a).str() + ")");
        }
}

MatP Automorphism::inverse() const {
    const int n = static_cast<int>(mat.rows());
    // Cofactor expansion determinant; matrices here are tiny (n <= 6).
    std::function<Poly(const MatP&)> det = [&](const MatP& m) -> Poly {
        const int k = static_cast<int>(m.rows());
        if (k == 1) return m(0, 0);
        Poly d;
        for (int i = 0; i < k; ++i) {
            if (m(i, 0).is_zero()) continue;
            MatP minor = zero_matrix<Poly>(k - 1, k - 1);
            for (int r = 0, rr = 0; r < k; ++r) {
                if (r == i) continue;
                for (int c = 1; c < k; ++c) minor(rr, c - 1) = m(r, c);
                ++rr;
            }
            Poly term = m(i, 0) * det(minor);
            if (i % 2) d -= term;
            else d += term;
        }
        return d;
    };
    Poly d = det(mat);
    if (d.is_zero()) throw NotAutomorphism("matrix is singular");
    MatP inv = zero_matrix<Poly>(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MatP minor = zero_matrix<Poly>(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = mat(r, c);
                }
                ++rr;
            }
            Poly cof = det(minor);
            if ((i + j) % 2) cof = -cof;
            auto q = reduce_by(cof, d);
            if (!q)
                throw NotAutomorphism("inverse is not polynomial (determinant " + d.str() + ")");
            inv(i, j) = std::move(*q);
        }
    return inv;
}

Wedge2 Automorphism::apply(const Wedge2& w) const {
    const int n = w.dim;
    Tensor2 t = w.to_tensor();
    Tensor2 out = zero_matrix<Poly>(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const Poly& v = t(p, q);
            if (v.is_zero()) continue;
            for (int a = 0; a < n; ++a) {
                if (mat(a, p).is_zero()) continue;
                for (int b = 0; b < n; ++b) {
                    if (mat(b, q).is_zero()) continue;
                    out(a, b) += mat(a, p) * mat(b, q) * v;
                }
            }
        }
    Wedge2 r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r.at(i, j) = out(i, j);
    return r;
}

std::string Wedge2::str(const LieAlgebra& L) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            const Poly& v = at(i, j);
            if (v.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << v << ") " << L.name(i) << "^" << L.name(j);
        }
    return first ? "0" : os.str();
}

std::string Wedge3::str(const LieAlgebra& L) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                const Poly& v = at(i, j, k);
                if (v.is_zero()) continue;
                if (!first) os << " + ";
                first = false;
                os << "(" << v << ") " << L.name(i) << "^" << L.name(j) << "^" << L.name(k);
            }
    return first ? "0" : os.str();
}

}  // namespace oscq
