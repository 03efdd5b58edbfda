#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "oscq/pbw.hpp"

namespace oscq {

struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Counit and antipode on the generators; the counit takes scalar (series)
// values, the antipode PBW-element values.
struct HopfMaps {
    std::array<Series, 4> counit;
    std::array<pbw::El, 4> antipode;
};

// Hopf-axiom verification for the deformed oscillator algebra: residuals are
// returned as full tensor elements so a convention mismatch stays diagnosable.
class HopfVerifier {
public:
    explicit HopfVerifier(const pbw::Context& ctx) : ctx_(&ctx) {}

    const pbw::Context& ctx() const { return *ctx_; }

    // Delta([X,Y]) - [Delta(X), Delta(Y)] for every generator pair.
    std::vector<std::pair<std::string, pbw::T2El>> check_hom() const;

    // (Delta (x) id) Delta(X) - (id (x) Delta) Delta(X) per generator.
    std::vector<std::pair<std::string, pbw::T3El>> check_coassoc() const;

    // Solve the counit axiom for eps and the antipode axiom order-by-order
    // in z for S; verify both axioms and the antialgebra-map property.
    HopfMaps derive_antipode_counit() const;

    // eps extended as an algebra map, applied to the first/second slot.
    pbw::El counit_slot1(const HopfMaps& maps, const pbw::T2El& x) const;
    pbw::El counit_slot2(const HopfMaps& maps, const pbw::T2El& x) const;

    // Linear anti-homomorphic extension of the antipode.
    pbw::El antipode_of(const HopfMaps& maps, const pbw::El& x) const;

    // m(S (x) id) Delta(x) and m(id (x) S) Delta(x).
    pbw::El antipode_convolution_left(const HopfMaps& maps, const pbw::T2El& x) const;
    pbw::El antipode_convolution_right(const HopfMaps& maps, const pbw::T2El& x) const;

    bool counit_axiom_holds(const HopfMaps& maps) const;
    bool antipode_axioms_hold(const HopfMaps& maps) const;
    bool antipode_antihom_holds(const HopfMaps& maps) const;

    // S^2 per generator (reported, not asserted).
    std::array<pbw::El, 4> antipode_squared(const HopfMaps& maps) const;

    // [C, X] for X in {N, A+, A-, M} under the deformed rules.
    std::vector<std::pair<std::string, pbw::El>> casimir_centrality() const;
    std::vector<std::pair<std::string, pbw::El>> casimir_centrality(const pbw::El& c) const;

private:
    Series counit_of_mono(const HopfMaps& maps, const pbw::Mono& m) const;

    const pbw::Context* ctx_;
};

}  // namespace oscq
