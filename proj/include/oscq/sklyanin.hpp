#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oscq/linalg.hpp"

namespace oscq {

// Candidate Poisson structure on the oscillator group coordinates: the
// z-linear parts of the quantum coordinate relations, extended as a
// biderivation to polynomials in n, e (= e^n, invertible), a-, a+, m.
class PoissonCandidate {
public:
    PoissonCandidate();

    const std::vector<int>& generators() const { return gens_; }

    // {p, q} via the generator table and the Leibniz rule.
    Poly bracket(const Poly& p, const Poly& q) const;

    // Antisymmetry of the generator table (including zero diagonal).
    bool antisymmetric() const;
    // Jacobi identity on all generator triples.
    bool jacobi_holds() const;

private:
    Poly table(int s1, int s2) const;
    std::vector<int> gens_;
};

struct SklyaninReport {
    bool brackets_antisymmetric = false;
    bool brackets_jacobi = false;
    // {T1, T2} = sign * [rho, T (x) T] entrywise with one global sign.
    bool matrix_identity_holds = false;
    int global_sign = 0;  // +1 or -1 when matrix_identity_holds
    // z-linear parts of the quantum commutators equal the candidate brackets.
    bool quantization_consistent = false;
    std::vector<std::string> failures;
};

SklyaninReport sklyanin_check();

}  // namespace oscq
