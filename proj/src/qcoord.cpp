#include "oscq/qcoord.hpp"

#include <sstream>

namespace oscq::qcoord {

namespace {

Poly zv() { return Poly::var(z_symbol()); }

Mono mono(int m, int am, int ap, int e) {
    Mono x{};
    x[Mh] = m;
    x[Amh] = am;
    x[Aph] = ap;
    x[Eh] = e;
    return x;
}

}  // namespace

Algebra::Algebra()
    : engine_(Poly(1), {false, false, false, true}),
      commutative_(Poly(1), {false, false, false, true}),
      t2_(engine_),
      t3_(engine_) {
    auto rule = [this](std::string name, int hi, int ph, int lo, int pl, El rhs) {
        engine_.set_commutator(hi, ph, lo, pl, rhs);
        rules_.push_back({std::move(name), hi, ph, lo, pl, std::move(rhs)});
    };
    // [e, m] = z a- e   and   [e^{-1}, m] = -z a- e^{-1}
    {
        El r;
        Engine::add_term(r, mono(0, 1, 0, 1), zv());
        rule("[e, m] = z a- e", Eh, 1, Mh, 1, r);
    }
    {
        El r;
        Engine::add_term(r, mono(0, 1, 0, -1), -zv());
        rule("[e^-1, m] = -z a- e^-1", Eh, -1, Mh, 1, r);
    }
    // [e^{+-1}, a-] = 0 (recorded so the coproduct check covers them)
    rules_.push_back({"[e, a-] = 0", Eh, 1, Amh, 1, El{}});
    rules_.push_back({"[e^-1, a-] = 0", Eh, -1, Amh, 1, El{}});
    // [e, a+] = z e^2 - z e   and   [e^{-1}, a+] = -z + z e^{-1}
    {
        El r;
        Engine::add_term(r, mono(0, 0, 0, 2), zv());
        Engine::add_term(r, mono(0, 0, 0, 1), -zv());
        rule("[e, a+] = z e^2 - z e", Eh, 1, Aph, 1, r);
    }
    {
        El r;
        Engine::add_term(r, Engine::unit_mono(), -zv());
        Engine::add_term(r, mono(0, 0, 0, -1), zv());
        rule("[e^-1, a+] = -z + z e^-1", Eh, -1, Aph, 1, r);
    }
    // [a+, a-] = -z a-  (equivalently [a-, a+] = z a-)
    {
        El r;
        Engine::add_term(r, mono(0, 1, 0, 0), -zv());
        rule("[a+, a-] = -z a-", Aph, 1, Amh, 1, r);
    }
    // [a+, m] = z a- a+
    {
        El r;
        Engine::add_term(r, mono(0, 1, 1, 0), zv());
        rule("[a+, m] = z a- a+", Aph, 1, Mh, 1, r);
    }
    // [a-, m] = -z a-^2
    {
        El r;
        Engine::add_term(r, mono(0, 2, 0, 0), -zv());
        rule("[a-, m] = -z a-^2", Amh, 1, Mh, 1, r);
    }

    // Coproduct: Delta(e^{+-1}) = e^{+-1} (x) e^{+-1},
    // Delta(a+) = e (x) a+ + a+ (x) 1,
    // Delta(a-) = e^{-1} (x) a- + a- (x) 1,
    // Delta(m)  = 1 (x) m + m (x) 1 - e^{-1} a+ (x) a-.
    {
        T2El d;
        T2::add_term(d, {mono(0, 0, 0, 1), mono(0, 0, 0, 1)}, Poly(1));
        cop_e_ = std::move(d);
    }
    {
        T2El d;
        T2::add_term(d, {mono(0, 0, 0, -1), mono(0, 0, 0, -1)}, Poly(1));
        cop_einv_ = std::move(d);
    }
    {
        T2El d;
        T2::add_term(d, {mono(0, 0, 0, 1), mono(0, 0, 1, 0)}, Poly(1));
        T2::add_term(d, {mono(0, 0, 1, 0), Engine::unit_mono()}, Poly(1));
        cop_ap_ = std::move(d);
    }
    {
        T2El d;
        T2::add_term(d, {mono(0, 0, 0, -1), mono(0, 1, 0, 0)}, Poly(1));
        T2::add_term(d, {mono(0, 1, 0, 0), Engine::unit_mono()}, Poly(1));
        cop_am_ = std::move(d);
    }
    {
        T2El d;
        T2::add_term(d, {Engine::unit_mono(), mono(1, 0, 0, 0)}, Poly(1));
        T2::add_term(d, {mono(1, 0, 0, 0), Engine::unit_mono()}, Poly(1));
        // e^{-1} a+ in normal order: a+ e^{-1} - z + z e^{-1}
        El einv_ap = engine_.normal_form({{Eh, -1}, {Aph, 1}}, Poly(1));
        for (auto& [mn, c] : einv_ap) T2::add_term(d, {mn, mono(0, 1, 0, 0)}, -c);
        cop_m_ = std::move(d);
    }
}

const T2El& Algebra::coproduct(int gen, int pow) const {
    if (gen == Eh) return pow > 0 ? cop_e_ : cop_einv_;
    if (pow != 1) throw std::domain_error("coproduct: negative power of a non-Laurent generator");
    switch (gen) {
        case Mh: return cop_m_;
        case Amh: return cop_am_;
        case Aph: return cop_ap_;
    }
    throw std::out_of_range("coproduct: bad generator");
}

T2El Algebra::coproduct_of_mono(const Mono& m) const {
    auto it = cop_memo_.find(m);
    if (it != cop_memo_.end()) return it->second;
    T2El r = t2_.one();
    for (int g = 0; g < 4; ++g) {
        int e = m[g];
        if (e == 0) continue;
        const T2El& img = coproduct(g, e > 0 ? 1 : -1);
        for (int k = 0; k < (e > 0 ? e : -e); ++k) r = t2_.multiply(r, img);
    }
    cop_memo_.emplace(m, r);
    return r;
}

T2El Algebra::coproduct_apply(const El& x) const {
    T2El r;
    for (auto& [m, c] : x) T2::add_into(r, T2::scaled(coproduct_of_mono(m), c));
    return r;
}

T3El Algebra::coproduct_slot1(const T2El& x) const {
    T3El r;
    for (auto& [k, c] : x) {
        T2El d = coproduct_of_mono(k[0]);
        for (auto& [dk, dc] : d) T3::add_term(r, {dk[0], dk[1], k[1]}, c * dc);
    }
    return r;
}

T3El Algebra::coproduct_slot2(const T2El& x) const {
    T3El r;
    for (auto& [k, c] : x) {
        T2El d = coproduct_of_mono(k[1]);
        for (auto& [dk, dc] : d) T3::add_term(r, {k[0], dk[0], dk[1]}, c * dc);
    }
    return r;
}

Poly Algebra::counit(const El& x) const {
    Poly r;
    for (auto& [m, c] : x)
        if (m[Mh] == 0 && m[Amh] == 0 && m[Aph] == 0) r += c;  // eps(e^d) = 1
    return r;
}

El Algebra::counit_slot1(const T2El& x) const {
    El r;
    for (auto& [k, c] : x) {
        if (k[0][Mh] == 0 && k[0][Amh] == 0 && k[0][Aph] == 0)
            Engine::add_term(r, k[1], c);
    }
    return r;
}

std::string Algebra::str(const El& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int g = 0; g < 4; ++g) {
            if (m[g] == 0) continue;
            os << " " << gen_name(g);
            if (m[g] != 1) os << "^" << m[g];
        }
    }
    return os.str();
}

std::array<El, 9> quantum_group_element(const Algebra& alg) {
    std::array<El, 9> t;
    for (auto& e : t) e = El{};
    t[0 * 3 + 0] = alg.one();
    {
        El e;
        Engine::add_term(e, mono(0, 1, 0, 1), Poly(1));  // a- e (normal order)
        t[0 * 3 + 1] = e;
    }
    {
        El e;
        Engine::add_term(e, mono(1, 0, 0, 0), Poly(1));
        Engine::add_term(e, mono(0, 1, 1, 0), Poly(1));  // m + a- a+
        t[0 * 3 + 2] = e;
    }
    t[1 * 3 + 1] = alg.gen(Eh);
    t[1 * 3 + 2] = alg.gen(Aph);
    t[2 * 3 + 2] = alg.one();
    return t;
}

std::array<El, 81> rtt_residual(const Algebra& alg, const Engine& engine) {
    // D(R) = I(x)I + z (D(N)(x)D(A+) - D(A+)(x)D(N)) with the 3x3 oscillator
    // representation: D(N) = E22, D(A+) = E23.
    Poly z = zv();
    auto dr = zero_matrix<Poly>(9, 9);
    for (int i = 0; i < 9; ++i) dr(i, i) = Poly(1);
    // E22 (x) E23: row (1,1), col (1,2); E23 (x) E22: row (1,1), col (2,1).
    dr(1 * 3 + 1, 1 * 3 + 2) += z;
    dr(1 * 3 + 1, 2 * 3 + 1) -= z;

    std::array<El, 9> t = quantum_group_element(alg);
    auto tt = [&](int i, int j, int k, int l) {  // T_{ij} T_{kl}
        return engine.multiply(t[i * 3 + j], t[k * 3 + l]);
    };

    std::array<El, 81> out;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l) {
                    El acc;
                    // (D(R) T1 T2)_{(ik),(jl)} = sum_{mn} DR_{(ik),(mn)} T_{mj} T_{nl}
                    for (int m = 0; m < 3; ++m)
                        for (int n = 0; n < 3; ++n) {
                            const Poly& c = dr(i * 3 + k, m * 3 + n);
                            if (c.is_zero()) continue;
                            Engine::add_into(acc, Engine::scaled(tt(m, j, n, l), c));
                        }
                    // minus (T2 T1 D(R))_{(ik),(jl)} = sum_{mn} T_{km} T_{in} DR_{(mn)...}
                    // with (T2 T1)_{(ik),(mn)} = T_{kn} T_{im}.
                    for (int m = 0; m < 3; ++m)
                        for (int n = 0; n < 3; ++n) {
                            const Poly& c = dr(m * 3 + n, j * 3 + l);
                            if (c.is_zero()) continue;
                            Engine::add_into(acc, Engine::scaled(Engine::negated(tt(k, n, i, m)), c));
                        }
                    out[(i * 3 + k) * 9 + (j * 3 + l)] = std::move(acc);
                }
    return out;
}

CoproductCheckReport qgroup_coproduct_check(const Algebra& alg) {
    CoproductCheckReport report;
    const T2& t2 = alg.tensor2();
    const Engine& eng = alg.engine();

    report.relations_respected = true;
    for (auto& rule : alg.rules()) {
        T2El lhs = t2.commutator(alg.coproduct(rule.hi, rule.pow_hi),
                                 alg.coproduct(rule.lo, rule.pow_lo));
        T2::sub_into(lhs, alg.coproduct_apply(rule.rhs));
        if (!lhs.empty()) {
            report.relations_respected = false;
            report.failures.push_back("coproduct does not respect " + rule.name);
        }
    }
    // e e^{-1} = 1 is respected as well.
    {
        T2El prod = t2.multiply(alg.coproduct(Eh, 1), alg.coproduct(Eh, -1));
        T2::sub_into(prod, t2.one());
        if (!prod.empty()) {
            report.relations_respected = false;
            report.failures.push_back("coproduct does not respect e e^-1 = 1");
        }
    }

    report.coassociative = true;
    for (auto [g, p] : std::vector<std::pair<int, int>>{
             {Mh, 1}, {Amh, 1}, {Aph, 1}, {Eh, 1}, {Eh, -1}}) {
        T3El lhs = alg.coproduct_slot1(alg.coproduct(g, p));
        T3El rhs = alg.coproduct_slot2(alg.coproduct(g, p));
        T3::sub_into(lhs, rhs);
        if (!lhs.empty()) {
            report.coassociative = false;
            report.failures.push_back(std::string("coassociativity fails on ") + gen_name(g));
        }
    }

    report.counit_ok = true;
    for (auto [g, p] : std::vector<std::pair<int, int>>{
             {Mh, 1}, {Amh, 1}, {Aph, 1}, {Eh, 1}, {Eh, -1}}) {
        El lhs = alg.counit_slot1(alg.coproduct(g, p));
        El expected = eng.monomial(Engine::gen_mono(g, p), Poly(1));
        Engine::sub_into(lhs, expected);
        if (!lhs.empty()) {
            report.counit_ok = false;
            report.failures.push_back(std::string("counit axiom fails on ") + gen_name(g));
        }
    }
    return report;
}

}  // namespace oscq::qcoord
