#include "oscq/linalg.hpp"

#include <algorithm>

namespace oscq {

SolutionSet<Rat> nullspace(const MatR& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    MatR w = m;

    std::vector<Eigen::Index> pivot_col_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < rows; ++r)
            if (!w(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (Eigen::Index j = 0; j < cols; ++j) std::swap(w(row, j), w(piv, j));
        Rat p = w(row, col);
        for (Eigen::Index j = 0; j < cols; ++j) w(row, j) /= p;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == row || w(r, col).is_zero()) continue;
            Rat f = w(r, col);
            for (Eigen::Index j = 0; j < cols; ++j) w(r, j) -= f * w(row, j);
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[col] = true;
        ++row;
    }

    SolutionSet<Rat> out;
    out.particular = VecR(cols);
    for (Eigen::Index j = 0; j < cols; ++j) out.particular(j) = Rat(0);
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        VecR v(cols);
        for (Eigen::Index j = 0; j < cols; ++j) v(j) = Rat(0);
        v(free_col) = Rat(1);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v(pivot_col_of_row[r]) = -w(static_cast<Eigen::Index>(r), free_col);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::optional<SolutionSet<Rat>> rat_solve(const MatR& a, const VecR& b) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    MatR w(rows, cols + 1);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) w(i, j) = a(i, j);
        w(i, cols) = b(i);
    }

    std::vector<Eigen::Index> pivot_col_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < rows; ++r)
            if (!w(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (Eigen::Index j = 0; j <= cols; ++j) std::swap(w(row, j), w(piv, j));
        Rat p = w(row, col);
        for (Eigen::Index j = 0; j <= cols; ++j) w(row, j) /= p;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == row || w(r, col).is_zero()) continue;
            Rat f = w(r, col);
            for (Eigen::Index j = 0; j <= cols; ++j) w(r, j) -= f * w(row, j);
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[col] = true;
        ++row;
    }
    for (Eigen::Index r = row; r < rows; ++r)
        if (!w(r, cols).is_zero()) return std::nullopt;

    SolutionSet<Rat> out;
    out.particular = VecR(cols);
    for (Eigen::Index j = 0; j < cols; ++j) out.particular(j) = Rat(0);
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        out.particular(pivot_col_of_row[r]) = w(static_cast<Eigen::Index>(r), cols);
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        VecR v(cols);
        for (Eigen::Index j = 0; j < cols; ++j) v(j) = Rat(0);
        v(free_col) = Rat(1);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v(pivot_col_of_row[r]) = -w(static_cast<Eigen::Index>(r), free_col);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

namespace detail {

// Single-step fraction-free Gauss-Jordan. All divisions by the previous pivot
// are exact (entries stay bordered minors of the input); we verify each exact
// division rather than assuming it.
void eliminate_fraction_free(MatP& m, Eigen::Index coeff_cols,
                             std::vector<Eigen::Index>& pivot_rows,
                             std::vector<Eigen::Index>& pivot_cols,
                             std::vector<Poly>& assumptions, Poly& last_pivot) {
    const Eigen::Index rows = m.rows(), total_cols = m.cols();
    Poly prev(1);
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < coeff_cols && row < rows; ++col) {
        // Prefer constant pivots, then fewer terms: keeps the assumption list
        // minimal and the growth of entries small.
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < rows; ++r) {
            const Poly& e = m(r, col);
            if (e.is_zero()) continue;
            if (piv < 0) { piv = r; continue; }
            const Poly& best = m(piv, col);
            if (!best.is_constant() &&
                (e.is_constant() || e.term_count() < best.term_count()))
                piv = r;
        }
        if (piv < 0) continue;
        if (piv != row)
            for (Eigen::Index j = 0; j < total_cols; ++j) std::swap(m(row, j), m(piv, j));

        const Poly p = m(row, col);
        if (!p.is_constant()) {
            Poly canon = p.monic();
            bool seen = false;
            for (auto& a : assumptions)
                if (a == canon) { seen = true; break; }
            if (!seen) assumptions.push_back(canon);
        }
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == row) continue;
            const Poly f = m(r, col);
            for (Eigen::Index j = 0; j < total_cols; ++j) {
                if (j == col) continue;
                Poly num = p * m(r, j) - f * m(row, j);
                auto q = reduce_by(num, prev);
                if (!q)
                    throw std::logic_error("fraction-free elimination: inexact division");
                m(r, j) = std::move(*q);
            }
            m(r, col) = Poly();
        }
        prev = p;
        pivot_rows.push_back(row);
        pivot_cols.push_back(col);
        ++row;
    }
    last_pivot = prev;
}

}  // namespace detail

std::optional<SolutionSet<Poly>> solve_affine(const MatP& a, const VecP& b) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    if (b.rows() != rows) throw std::domain_error("solve_affine: shape mismatch");
    MatP m(rows, cols + 1);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = a(i, j);
        m(i, cols) = b(i);
    }

    std::vector<Eigen::Index> pivot_rows, pivot_cols;
    std::vector<Poly> assumptions;
    Poly d(1);
    detail::eliminate_fraction_free(m, cols, pivot_rows, pivot_cols, assumptions, d);

    // Rows with no pivot must have zero right-hand side, generically.
    std::vector<bool> row_has_pivot(rows, false);
    for (auto r : pivot_rows) row_has_pivot[r] = true;
    for (Eigen::Index r = 0; r < rows; ++r)
        if (!row_has_pivot[r] && !m(r, cols).is_zero()) return std::nullopt;

    std::vector<bool> is_pivot_col(cols, false);
    for (auto c : pivot_cols) is_pivot_col[c] = true;

    SolutionSet<Poly> out;
    out.pivot_assumptions = assumptions;

    // After Jordan elimination every pivot entry equals the last pivot d, so
    // rows read d*x_p + sum_{free f} m(r,f) x_f = rhs_r.
    out.particular = VecP(cols);
    for (Eigen::Index j = 0; j < cols; ++j) out.particular(j) = Poly();
    for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
        auto q = reduce_by(m(pivot_rows[k], cols), d);
        if (!q)
            throw std::domain_error(
                "solve_affine: generic solution is not polynomial (entry " +
                m(pivot_rows[k], cols).str() + " over pivot " + d.str() + ")");
        out.particular(pivot_cols[k]) = std::move(*q);
    }

    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        VecP v(cols);
        for (Eigen::Index j = 0; j < cols; ++j) v(j) = Poly();
        v(free_col) = d;
        for (std::size_t k = 0; k < pivot_rows.size(); ++k)
            v(pivot_cols[k]) = -m(pivot_rows[k], free_col);
        // Normalize when the scale divides out (always over constants).
        bool exact = true;
        VecP norm(cols);
        for (Eigen::Index j = 0; j < cols; ++j) {
            auto q = reduce_by(v(j), d);
            if (!q) { exact = false; break; }
            norm(j) = std::move(*q);
        }
        out.kernel.push_back(exact ? std::move(norm) : std::move(v));
    }
    return out;
}

}  // namespace oscq
