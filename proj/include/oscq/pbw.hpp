#pragma once

#include <array>
#include <map>
#include <string>

#include "oscq/rewrite.hpp"
#include "oscq/series.hpp"

namespace oscq::pbw {

// PBW generator order: monomials M^a A-^b A+^c N^d.
enum Gen : int { M = 0, Am = 1, Ap = 2, N = 3 };

inline const char* gen_name(int g) {
    static const char* names[4] = {"M", "A-", "A+", "N"};
    return names[g];
}

using Engine = RewriteEngine<Series, 4>;
using El = Engine::Element;
using Mono = Engine::Mono;
using T2 = TensorAlgebra<Series, 4, 2>;
using T3 = TensorAlgebra<Series, 4, 3>;
using T2El = T2::Element;
using T3El = T3::Element;

// Oscillator enveloping algebra over truncated series in z, classical and
// Jordanian-deformed. The deformation parameter is scale*z with scale an
// optional extra symbol (used to check covariance under z -> lambda z).
//
// The deformed algebra is handled purely as a z-truncated series algebra.
// An exact mode adjoining E = e^{zA+} as a group-like generator (derived
// relations [N, E] = E^2 - E and [A-, E] = z M E^2) would also work, the way
// the quantum coordinate algebra adjoins e^{n}; truncated series keep the
// coefficients polynomial and are enough for every check here.
class Context {
public:
    explicit Context(int order, Poly scale = Poly(1));

    int order() const { return order_; }
    const Poly& scale() const { return scale_; }
    const Engine& classical() const { return classical_; }
    const Engine& deformed() const { return deformed_; }
    const T2& tensor2() const { return t2_; }
    const T3& tensor3() const { return t3_; }

    Series zero_series() const { return Series(order_); }
    Series one_series() const { return Series(order_, Rat(1)); }
    // (scale*z)^k, optionally times a rational.
    Series w_power(int k, const Rat& c = Rat(1)) const;

    El gen(Gen g) const { return deformed_.generator(g); }
    El one() const { return deformed_.scalar(one_series()); }

    // e^{sign * w A+} truncated at the context order.
    El exp_w_aplus(int sign) const;
    // (e^{sign * w A+} - 1) / w, exact through z^order.
    El exp_w_aplus_minus1_over_w(int sign) const;

    // Deformed commutation rule [X, Y] for the generator pair (as elements).
    El relation(Gen hi, Gen lo) const;

    // Quantum Casimir 2NM + ((e^{-wA+}-1)/w) A- + A- ((e^{-wA+}-1)/w).
    El casimir() const;
    // Classical Casimir 2NM - A+A- - A-A+ (normal-ordered, classical rules).
    El casimir_classical() const;

    // Jordanian coproduct on the generators.
    const T2El& coproduct(Gen g) const { return coproduct_[g]; }

    // Algebra-map extension of the coproduct, memoized per monomial.
    T2El coproduct_apply(const El& x) const;
    // (Delta (x) id) and (id (x) Delta) on 2-tensors.
    T3El coproduct_slot1(const T2El& x) const;
    T3El coproduct_slot2(const T2El& x) const;

    static T2El sigma(const T2& t2, const T2El& x) { return t2.permuted(x, {1, 0}); }

    // Order-z^0 part.
    static std::map<Mono, Poly> classical_limit(const El& x);
    static std::map<std::array<Mono, 2>, Poly> classical_limit(const T2El& x);

    std::string str(const El& x) const;
    std::string str(const T2El& x) const;

private:
    T2El coproduct_of_mono(const Mono& m) const;

    int order_;
    Poly scale_;
    Engine classical_;
    Engine deformed_;
    T2 t2_;
    T3 t3_;
    std::array<T2El, 4> coproduct_;
    mutable std::map<Mono, T2El> coproduct_memo_;
};

// exp of an element all of whose coefficients have z-valuation >= 1.
El exp_element(const Engine& engine, const El& x, int order);
T2El exp_tensor(const T2& t2, const T2El& x, int order);

struct ValuationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace oscq::pbw
