#include "oscq/weyl.hpp"

#include <sstream>

namespace oscq::weyl {

Context::Context(int order) : order_(order), engine_(Series(order, Rat(1))) {
    El unit;
    Engine::add_term(unit, Engine::unit_mono(), one_series());
    engine_.set_commutator(Bm, 1, Bp, 1, unit);  // [a-, a+] = 1
}

El Context::exp_z_aplus(int sign) const {
    El r;
    for (int k = 0; k <= order_; ++k) {
        Rat c = inv_factorial(k);
        if (sign < 0 && (k % 2)) c = -c;
        Engine::add_term(r, Engine::gen_mono(Bp, k), Series::z_power(order_, k, c));
    }
    return r;
}

El Context::exp_z_aplus_minus1_over_z(int sign) const {
    El r;
    for (int k = 1; k <= order_ + 1; ++k) {
        Rat c = inv_factorial(k);
        if (sign < 0 && (k % 2)) c = -c;
        Engine::add_term(r, Engine::gen_mono(Bp, k), Series::z_power(order_, k - 1, c));
    }
    return r;
}

Context::Images Context::realization() const {
    Poly beta = Poly::var("beta"), delta = Poly::var("delta");
    Images img;
    img.ap = aplus();
    img.m = engine_.scalar(Series(order_, delta));

    // A- = delta e^{za+} a- + delta beta (z/2) e^{za+}
    {
        El e = exp_z_aplus(+1);
        El first = engine_.multiply(e, aminus());
        El out = Engine::scaled(first, Series(order_, delta));
        Series half_z_db = Series::z_power(order_, 1, Rat(1, 2) * (delta * beta));
        Engine::add_into(out, Engine::scaled(e, half_z_db));
        img.am = std::move(out);
    }
    // N = ((e^{za+}-1)/z) a- + beta (e^{za+}+1)/2
    {
        El g = exp_z_aplus_minus1_over_z(+1);
        El out = engine_.multiply(g, aminus());
        El e = exp_z_aplus(+1);
        Engine::add_term(e, Engine::unit_mono(), one_series());
        Engine::add_into(out, Engine::scaled(e, Series(order_, Rat(1, 2) * beta)));
        img.n = std::move(out);
    }
    return img;
}

std::string Context::str(const El& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        if (m[Bp]) os << " a+^" << m[Bp];
        if (m[Bm]) os << " a-^" << m[Bm];
    }
    return os.str();
}

RealizationReport realization_check(int order) {
    Context ctx(order);
    const Engine& eng = ctx.engine();
    Context::Images img = ctx.realization();

    RealizationReport report;
    // [N, A+] = (e^{zA+}-1)/z -> (e^{za+}-1)/z
    {
        El res = eng.commutator(img.n, img.ap);
        Engine::sub_into(res, ctx.exp_z_aplus_minus1_over_z(+1));
        report.residuals.emplace_back("[N, A+] - (e^{zA+}-1)/z", std::move(res));
    }
    // [N, A-] = -A-
    {
        El res = eng.commutator(img.n, img.am);
        Engine::add_into(res, img.am);
        report.residuals.emplace_back("[N, A-] + A-", std::move(res));
    }
    // [A-, A+] = M e^{zA+} -> delta e^{za+}
    {
        El res = eng.commutator(img.am, img.ap);
        Engine::sub_into(res, eng.multiply(img.m, ctx.exp_z_aplus(+1)));
        report.residuals.emplace_back("[A-, A+] - M e^{zA+}", std::move(res));
    }
    // [M, X] = 0 for all images
    {
        El res = eng.commutator(img.m, img.n);
        Engine::add_into(res, eng.commutator(img.m, img.ap));
        Engine::add_into(res, eng.commutator(img.m, img.am));
        report.residuals.emplace_back("[M, N] + [M, A+] + [M, A-]", std::move(res));
    }
    report.all_zero = true;
    for (auto& [name, r] : report.residuals)
        if (!r.empty()) report.all_zero = false;

    // classical specialization: z -> 0, beta -> 0, delta -> 1
    {
        auto specialize = [&](const El& x) {
            std::map<Mono, Rat> out;
            for (auto& [m, c] : x) {
                Poly p = c.at(0).substituted({{sym("beta"), Poly()}, {sym("delta"), Poly(1)}});
                if (!p.is_zero()) out.emplace(m, p.constant_value());
            }
            return out;
        };
        auto comm0 = [&](const El& a, const El& b) { return specialize(eng.commutator(a, b)); };
        auto eq = [](const std::map<Mono, Rat>& a, const std::map<Mono, Rat>& b) {
            return a == b;
        };
        std::map<Mono, Rat> apam = comm0(img.am, img.ap);   // expect 1 (M -> 1)
        std::map<Mono, Rat> nap = comm0(img.n, img.ap);     // expect a+
        std::map<Mono, Rat> nam = comm0(img.n, img.am);     // expect -a-
        std::map<Mono, Rat> one{{Engine::unit_mono(), Rat(1)}};
        std::map<Mono, Rat> apv{{Engine::gen_mono(Bp), Rat(1)}};
        std::map<Mono, Rat> amneg{{Engine::gen_mono(Bm), Rat(-1)}};
        report.classical_specialization_ok = eq(apam, one) && eq(nap, apv) && eq(nam, amneg);
    }
    return report;
}

CasimirValueReport casimir_value(int order) {
    Context ctx(order);
    const Engine& eng = ctx.engine();
    Context::Images img = ctx.realization();

    // C = 2 N M + F A- + A- F with F = (e^{-zA+}-1)/z
    El f = ctx.exp_z_aplus_minus1_over_z(-1);
    El c = Engine::scaled(eng.multiply(img.n, img.m), Series(order, Rat(2)));
    Engine::add_into(c, eng.multiply(f, img.am));
    Engine::add_into(c, eng.multiply(img.am, f));

    CasimirValueReport report;
    report.value = c;
    report.is_scalar = true;
    for (auto& [m, coeff] : c)
        if (m != Engine::unit_mono()) report.is_scalar = false;

    Poly beta = Poly::var("beta"), delta = Poly::var("delta");
    El expected = eng.scalar(Series(order, delta * (Rat(2) * beta - Poly(1))));
    El diff = c;
    Engine::sub_into(diff, expected);
    report.equals_delta_2beta_minus_1 = diff.empty();
    return report;
}

}  // namespace oscq::weyl
