#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscq/linalg.hpp"

namespace oscq {

struct JacobiViolation : std::runtime_error {
    JacobiViolation(int i, int j, int k, std::string names)
        : std::runtime_error("Jacobi identity fails on triple (" + names + ")"),
          i(i), j(j), k(k) {}
    int i, j, k;
};

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line(line), column(column) {}
    int line, column;
};

// Finite-dimensional Lie algebra given by an ordered basis and rational
// structure constants c_{ij}^k, antisymmetric in i,j and Jacobi-validated
// exactly at construction.
class LieAlgebra {
public:
    // brackets[{i,j}] (i < j) is the coefficient vector of [X_i, X_j].
    static LieAlgebra make(std::vector<std::string> basis_names,
                           const std::map<std::pair<int, int>, std::vector<Rat>>& brackets);

    // Input file format (see docs/lie_algebra_format.md):
    //   basis: N A+ A- M
    //   bracket: N A+ -> 1 A+
    //   bracket: A- A+ -> 1 M, rationals allowed (e.g. -1/2)
    static LieAlgebra parse(const std::string& text);
    static LieAlgebra from_file(const std::string& path);

    // The harmonic oscillator algebra h4: basis (N, A+, A-, M) with
    // [N,A+] = A+, [N,A-] = -A-, [A-,A+] = M, M central.
    static const LieAlgebra& h4();

    int dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }
    int index_of(const std::string& name) const;

    const Rat& c(int i, int j, int k) const { return c_.at(((i * dim_) + j) * dim_ + k); }

    // Coefficients of [X_i, X_j].
    VecR bracket(int i, int j) const;

private:
    LieAlgebra() = default;
    void validate() const;

    int dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Rat> c_;  // dense dim^3 table
};

}  // namespace oscq
