#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "oscq/linalg.hpp"
#include "oscq/rewrite.hpp"

namespace oscq::qcoord {

// Quantum coordinate generators, canonical monomial order m^a a-^b a+^c e^d
// with d ranging over all integers (e stands for e^{n}, group-like).
enum Gen : int { Mh = 0, Amh = 1, Aph = 2, Eh = 3 };

inline const char* gen_name(int g) {
    static const char* names[4] = {"m", "a-", "a+", "e"};
    return names[g];
}

using Engine = RewriteEngine<Poly, 4>;
using El = Engine::Element;
using Mono = Engine::Mono;
using T2 = TensorAlgebra<Poly, 4, 2>;
using T3 = TensorAlgebra<Poly, 4, 3>;
using T2El = T2::Element;
using T3El = T3::Element;

// Exact quantum coordinate algebra of the Jordanian oscillator group:
// relations polynomial in z, no truncation. The e-relations are the
// conjugation forms derived from the primitive n-relations (all second
// nested commutators vanish).
class Algebra {
public:
    Algebra();

    const Engine& engine() const { return engine_; }
    const Engine& commutative() const { return commutative_; }
    const T2& tensor2() const { return t2_; }
    const T3& tensor3() const { return t3_; }

    El one() const { return engine_.scalar(Poly(1)); }
    El gen(Gen g, int pow = 1) const { return engine_.monomial(Engine::gen_mono(g, pow), Poly(1)); }

    // The defining rewrite rules as (name, hi, pow_hi, lo, pow_lo, rhs).
    struct Rule {
        std::string name;
        int hi, pow_hi, lo, pow_lo;
        El rhs;  // [hi^pow, lo^pow]
    };
    const std::vector<Rule>& rules() const { return rules_; }

    // Quantum group coproduct on generator powers (+1, and -1 for e).
    const T2El& coproduct(int gen, int pow = 1) const;
    T2El coproduct_apply(const El& x) const;
    T3El coproduct_slot1(const T2El& x) const;
    T3El coproduct_slot2(const T2El& x) const;

    // Counit eps(a+) = eps(a-) = eps(m) = 0, eps(e^{+-1}) = 1.
    Poly counit(const El& x) const;
    El counit_slot1(const T2El& x) const;

    std::string str(const El& x) const;

private:
    T2El coproduct_of_mono(const Mono& m) const;

    Engine engine_;
    Engine commutative_;
    T2 t2_;
    T3 t3_;
    std::vector<Rule> rules_;
    T2El cop_m_, cop_am_, cop_ap_, cop_e_, cop_einv_;
    mutable std::map<Mono, T2El> cop_memo_;
};

// Upper-triangular quantum matrix [[1, a- e, m + a- a+], [0, e, a+], [0, 0, 1]].
std::array<El, 9> quantum_group_element(const Algebra& alg);

// All 81 entries of D(R) T1 T2 - T2 T1 D(R), reduced to normal form with the
// given engine (the algebra's own, or the commutative negative control).
std::array<El, 81> rtt_residual(const Algebra& alg, const Engine& engine);

struct CoproductCheckReport {
    bool relations_respected = false;  // Delta of every rule holds exactly
    bool coassociative = false;        // exact, on all generator powers
    bool counit_ok = false;
    std::vector<std::string> failures;
};
CoproductCheckReport qgroup_coproduct_check(const Algebra& alg);

}  // namespace oscq::qcoord
