#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "oscq/rewrite.hpp"
#include "oscq/series.hpp"

namespace oscq::weyl {

// Boson (Weyl) algebra: canonical order a+^i a-^j with [a-, a+] = 1.
enum Gen : int { Bp = 0, Bm = 1 };  // a+ before a- in the monomial order

using Engine = RewriteEngine<Series, 2>;
using El = Engine::Element;
using Mono = Engine::Mono;

class Context {
public:
    explicit Context(int order);

    int order() const { return order_; }
    const Engine& engine() const { return engine_; }

    Series one_series() const { return Series(order_, Rat(1)); }
    El one() const { return engine_.scalar(one_series()); }
    El aplus() const { return engine_.generator(Bp); }
    El aminus() const { return engine_.generator(Bm); }

    // e^{sign z a+} and (e^{sign z a+} - 1)/z (exact through z^order).
    El exp_z_aplus(int sign) const;
    El exp_z_aplus_minus1_over_z(int sign) const;

    // Boson images of the deformed oscillator generators, with beta and
    // delta symbolic:
    //   A+ -> a+                        M -> delta 1
    //   A- -> delta e^{za+} a- + delta beta (z/2) e^{za+}
    //   N  -> ((e^{za+}-1)/z) a- + beta (e^{za+}+1)/2
    struct Images {
        El n, ap, am, m;
    };
    Images realization() const;

    std::string str(const El& x) const;

private:
    int order_;
    Engine engine_;
};

struct RealizationReport {
    // residuals of the four deformed relations under the boson images
    std::vector<std::pair<std::string, El>> residuals;
    bool all_zero = false;
    // classical specialization z -> 0, beta -> 0, delta -> 1 satisfies the
    // oscillator brackets
    bool classical_specialization_ok = false;
};
RealizationReport realization_check(int order);

struct CasimirValueReport {
    El value;
    bool is_scalar = false;
    bool equals_delta_2beta_minus_1 = false;
};
CasimirValueReport casimir_value(int order);

}  // namespace oscq::weyl
