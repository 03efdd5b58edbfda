#include "oscq/hopf.hpp"

namespace oscq {

using namespace pbw;

std::vector<std::pair<std::string, T2El>> HopfVerifier::check_hom() const {
    const auto& ctx = *ctx_;
    const T2& t2 = ctx.tensor2();
    std::vector<std::pair<std::string, T2El>> out;
    static const Gen order_hi[6] = {Am, Ap, N, Ap, N, N};
    static const Gen order_lo[6] = {M, M, M, Am, Am, Ap};
    for (int k = 0; k < 6; ++k) {
        Gen hi = order_hi[k], lo = order_lo[k];
        T2El lhs = ctx.coproduct_apply(ctx.relation(hi, lo));
        T2El rhs = t2.commutator(ctx.coproduct(hi), ctx.coproduct(lo));
        T2::sub_into(lhs, rhs);
        out.emplace_back(std::string("[") + gen_name(hi) + ", " + gen_name(lo) + "]",
                         std::move(lhs));
    }
    return out;
}

std::vector<std::pair<std::string, T3El>> HopfVerifier::check_coassoc() const {
    const auto& ctx = *ctx_;
    std::vector<std::pair<std::string, T3El>> out;
    for (Gen g : {M, Am, Ap, N}) {
        T3El lhs = ctx.coproduct_slot1(ctx.coproduct(g));
        T3El rhs = ctx.coproduct_slot2(ctx.coproduct(g));
        T3::sub_into(lhs, rhs);
        out.emplace_back(gen_name(g), std::move(lhs));
    }
    return out;
}

Series HopfVerifier::counit_of_mono(const HopfMaps& maps, const pbw::Mono& m) const {
    Series v = ctx_->one_series();
    for (int g = 0; g < 4; ++g)
        for (int k = 0; k < m[g]; ++k) v *= maps.counit[g];
    return v;
}

pbw::El HopfVerifier::counit_slot1(const HopfMaps& maps, const T2El& x) const {
    El out;
    for (auto& [key, c] : x) {
        Series e = counit_of_mono(maps, key[0]);
        Engine::add_term(out, key[1], c * e);
    }
    return out;
}

pbw::El HopfVerifier::counit_slot2(const HopfMaps& maps, const T2El& x) const {
    El out;
    for (auto& [key, c] : x) {
        Series e = counit_of_mono(maps, key[1]);
        Engine::add_term(out, key[0], c * e);
    }
    return out;
}

pbw::El HopfVerifier::antipode_of(const HopfMaps& maps, const El& x) const {
    const Engine& eng = ctx_->deformed();
    El out;
    for (auto& [m, c] : x) {
        // anti-homomorphism: reverse the PBW order N, A+, A-, M
        El img = eng.scalar(ctx_->one_series());
        for (int g = 3; g >= 0; --g)
            for (int k = 0; k < m[g]; ++k) img = eng.multiply(img, maps.antipode[g]);
        Engine::add_into(out, Engine::scaled(img, c));
    }
    return out;
}

pbw::El HopfVerifier::antipode_convolution_left(const HopfMaps& maps, const T2El& x) const {
    const Engine& eng = ctx_->deformed();
    El out;
    for (auto& [key, c] : x) {
        El s = antipode_of(maps, eng.monomial(key[0], ctx_->one_series()));
        El prod = eng.multiply(s, eng.monomial(key[1], c));
        Engine::add_into(out, prod);
    }
    return out;
}

pbw::El HopfVerifier::antipode_convolution_right(const HopfMaps& maps, const T2El& x) const {
    const Engine& eng = ctx_->deformed();
    El out;
    for (auto& [key, c] : x) {
        El s = antipode_of(maps, eng.monomial(key[1], ctx_->one_series()));
        El prod = eng.multiply(eng.monomial(key[0], c), s);
        Engine::add_into(out, prod);
    }
    return out;
}

HopfMaps HopfVerifier::derive_antipode_counit() const {
    const auto& ctx = *ctx_;
    const Engine& eng = ctx.deformed();
    const int order = ctx.order();

    HopfMaps maps;
    for (int g = 0; g < 4; ++g) {
        maps.counit[g] = ctx.zero_series();
        maps.antipode[g] = Engine::negated(eng.generator(g));
    }

    // Counit: z-adic sweeps of (eps (x) id) Delta(g) = g; each sweep corrects
    // eps(g) by the unit-monomial part of the residual.
    for (int sweep = 0; sweep <= order + 1; ++sweep) {
        bool clean = true;
        for (int g = 0; g < 4; ++g) {
            El res = counit_slot1(maps, ctx.coproduct(static_cast<Gen>(g)));
            Engine::sub_into(res, eng.generator(g));
            auto it = res.find(Engine::unit_mono());
            if (it != res.end()) {
                maps.counit[g] -= it->second;
                clean = false;
            }
        }
        if (clean) break;
    }
    if (!counit_axiom_holds(maps))
        throw NoSolution("counit axiom has no solution for this coproduct table");

    // Antipode: z-adic sweeps of m(S (x) id) Delta(g) = eps(g) 1.
    for (int sweep = 0; sweep <= order + 1; ++sweep) {
        bool clean = true;
        for (int g = 0; g < 4; ++g) {
            El res = antipode_convolution_left(maps, ctx.coproduct(static_cast<Gen>(g)));
            Engine::add_term(res, Engine::unit_mono(), -maps.counit[g]);
            if (!res.empty()) {
                Engine::sub_into(maps.antipode[g], res);
                clean = false;
            }
        }
        if (clean) break;
    }
    if (!antipode_axioms_hold(maps))
        throw NoSolution("antipode axiom has no order-by-order solution");
    if (!antipode_antihom_holds(maps))
        throw NoSolution("derived antipode is not an antialgebra map");
    return maps;
}

bool HopfVerifier::counit_axiom_holds(const HopfMaps& maps) const {
    const auto& ctx = *ctx_;
    const Engine& eng = ctx.deformed();
    for (int g = 0; g < 4; ++g) {
        El left = counit_slot1(maps, ctx.coproduct(static_cast<Gen>(g)));
        Engine::sub_into(left, eng.generator(g));
        if (!left.empty()) return false;
        El right = counit_slot2(maps, ctx.coproduct(static_cast<Gen>(g)));
        Engine::sub_into(right, eng.generator(g));
        if (!right.empty()) return false;
    }
    return true;
}

bool HopfVerifier::antipode_axioms_hold(const HopfMaps& maps) const {
    const auto& ctx = *ctx_;
    for (int g = 0; g < 4; ++g) {
        El left = antipode_convolution_left(maps, ctx.coproduct(static_cast<Gen>(g)));
        Engine::add_term(left, Engine::unit_mono(), -maps.counit[g]);
        if (!left.empty()) return false;
        El right = antipode_convolution_right(maps, ctx.coproduct(static_cast<Gen>(g)));
        Engine::add_term(right, Engine::unit_mono(), -maps.counit[g]);
        if (!right.empty()) return false;
    }
    return true;
}

bool HopfVerifier::antipode_antihom_holds(const HopfMaps& maps) const {
    const auto& ctx = *ctx_;
    const Engine& eng = ctx.deformed();
    static const Gen order_hi[6] = {Am, Ap, N, Ap, N, N};
    static const Gen order_lo[6] = {M, M, M, Am, Am, Ap};
    for (int k = 0; k < 6; ++k) {
        Gen hi = order_hi[k], lo = order_lo[k];
        El lhs = antipode_of(maps, ctx.relation(hi, lo));
        El rhs = eng.commutator(maps.antipode[lo], maps.antipode[hi]);
        Engine::sub_into(lhs, rhs);
        if (!lhs.empty()) return false;
    }
    return true;
}

std::array<pbw::El, 4> HopfVerifier::antipode_squared(const HopfMaps& maps) const {
    std::array<El, 4> out;
    for (int g = 0; g < 4; ++g) out[g] = antipode_of(maps, maps.antipode[g]);
    return out;
}

std::vector<std::pair<std::string, pbw::El>> HopfVerifier::casimir_centrality() const {
    return casimir_centrality(ctx_->casimir());
}

std::vector<std::pair<std::string, pbw::El>> HopfVerifier::casimir_centrality(
    const pbw::El& c) const {
    const Engine& eng = ctx_->deformed();
    std::vector<std::pair<std::string, El>> out;
    for (Gen g : {N, Ap, Am, M})
        out.emplace_back(gen_name(g), eng.commutator(c, eng.generator(g)));
    return out;
}

}  // namespace oscq
