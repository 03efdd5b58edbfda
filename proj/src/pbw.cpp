#include "oscq/pbw.hpp"

#include <sstream>

namespace oscq::pbw {

namespace {

Poly poly_pow(const Poly& p, int k) {
    Poly r(1);
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

}  // namespace

Context::Context(int order, Poly scale)
    : order_(order),
      scale_(std::move(scale)),
      classical_(Series(order, Rat(1))),
      deformed_(Series(order, Rat(1))),
      t2_(deformed_),
      t3_(deformed_) {
    // Classical rules: [N,A+] = A+, [N,A-] = -A-, [A+,A-] = -M; M central.
    {
        El c;
        Engine::add_term(c, Engine::gen_mono(Ap), one_series());
        classical_.set_commutator(N, 1, Ap, 1, c);
    }
    {
        El c;
        Engine::add_term(c, Engine::gen_mono(Am), Series(order_, Rat(-1)));
        classical_.set_commutator(N, 1, Am, 1, c);
    }
    {
        El c;
        Engine::add_term(c, Engine::gen_mono(M), Series(order_, Rat(-1)));
        classical_.set_commutator(Ap, 1, Am, 1, c);
    }

    // Deformed rules: [N,A+] = (e^{wA+}-1)/w, [N,A-] = -A-,
    // [A+,A-] = -M e^{wA+}; M central. w = scale*z.
    deformed_.set_commutator(N, 1, Ap, 1, exp_w_aplus_minus1_over_w(+1));
    {
        El c;
        Engine::add_term(c, Engine::gen_mono(Am), Series(order_, Rat(-1)));
        deformed_.set_commutator(N, 1, Am, 1, c);
    }
    {
        El c;
        for (int k = 0; k <= order_; ++k) {
            Mono m = Engine::unit_mono();
            m[M] = 1;
            m[Ap] = k;
            Engine::add_term(c, m, w_power(k, -inv_factorial(k)));
        }
        deformed_.set_commutator(Ap, 1, Am, 1, c);
    }

    // Coproduct table (Jordanian): M and A+ primitive,
    // Delta(N) = 1(x)N + N(x)e^{wA+},
    // Delta(A-) = 1(x)A- + A-(x)e^{wA+} + w N(x)M e^{wA+}.
    auto primitive = [this](Gen g) {
        T2El d;
        T2::Key k1 = T2::unit_key();
        k1[1] = Engine::gen_mono(g);
        T2::add_term(d, k1, one_series());
        T2::Key k2 = T2::unit_key();
        k2[0] = Engine::gen_mono(g);
        T2::add_term(d, k2, one_series());
        return d;
    };
    coproduct_[M] = primitive(M);
    coproduct_[Ap] = primitive(Ap);
    {
        T2El d;
        T2::Key k1 = T2::unit_key();
        k1[1] = Engine::gen_mono(N);
        T2::add_term(d, k1, one_series());
        for (int k = 0; k <= order_; ++k) {
            T2::Key kk = T2::unit_key();
            kk[0] = Engine::gen_mono(N);
            kk[1] = Engine::gen_mono(Ap, k);
            T2::add_term(d, kk, w_power(k, inv_factorial(k)));
        }
        coproduct_[N] = std::move(d);
    }
    {
        T2El d;
        T2::Key k1 = T2::unit_key();
        k1[1] = Engine::gen_mono(Am);
        T2::add_term(d, k1, one_series());
        for (int k = 0; k <= order_; ++k) {
            T2::Key kk = T2::unit_key();
            kk[0] = Engine::gen_mono(Am);
            kk[1] = Engine::gen_mono(Ap, k);
            T2::add_term(d, kk, w_power(k, inv_factorial(k)));
        }
        for (int k = 0; k + 1 <= order_; ++k) {
            T2::Key kk = T2::unit_key();
            kk[0] = Engine::gen_mono(N);
            kk[1] = Engine::gen_mono(M);
            kk[1][Ap] = k;
            T2::add_term(d, kk, w_power(k + 1, inv_factorial(k)));
        }
        coproduct_[Am] = std::move(d);
    }
}

Series Context::w_power(int k, const Rat& c) const {
    if (k > order_) return Series(order_);
    return Series::z_power(order_, k, c * poly_pow(scale_, k));
}

El Context::exp_w_aplus(int sign) const {
    El r;
    for (int k = 0; k <= order_; ++k) {
        Rat c = inv_factorial(k);
        if (sign < 0 && (k % 2)) c = -c;
        Engine::add_term(r, Engine::gen_mono(Ap, k), w_power(k, c));
    }
    return r;
}

El Context::exp_w_aplus_minus1_over_w(int sign) const {
    // sum_{k>=1} sign^k w^{k-1} A+^k / k!, exact through z^order.
    El r;
    for (int k = 1; k <= order_ + 1; ++k) {
        Rat c = inv_factorial(k);
        if (sign < 0 && (k % 2)) c = -c;
        Engine::add_term(r, Engine::gen_mono(Ap, k), w_power(k - 1, c));
    }
    return r;
}

El Context::relation(Gen hi, Gen lo) const {
    if (hi == N && lo == Ap) return exp_w_aplus_minus1_over_w(+1);
    if (hi == N && lo == Am) {
        El c;
        Engine::add_term(c, Engine::gen_mono(Am), Series(order_, Rat(-1)));
        return c;
    }
    if (hi == Ap && lo == Am) {
        El c;
        for (int k = 0; k <= order_; ++k) {
            Mono m = Engine::unit_mono();
            m[M] = 1;
            m[Ap] = k;
            Engine::add_term(c, m, w_power(k, -inv_factorial(k)));
        }
        return c;
    }
    // pairs with M commute
    return El{};
}

El Context::casimir() const {
    El c;
    {
        Mono m = Engine::unit_mono();
        m[M] = 1;
        m[N] = 1;
        Engine::add_term(c, m, Series(order_, Rat(2)));
    }
    El f = exp_w_aplus_minus1_over_w(-1);
    El am = deformed_.generator(Am);
    Engine::add_into(c, deformed_.multiply(f, am));
    Engine::add_into(c, deformed_.multiply(am, f));
    return c;
}

El Context::casimir_classical() const {
    El c;
    {
        Mono m = Engine::unit_mono();
        m[M] = 1;
        m[N] = 1;
        Engine::add_term(c, m, Series(order_, Rat(2)));
    }
    El ap = classical_.generator(Ap);
    El am = classical_.generator(Am);
    Engine::sub_into(c, classical_.multiply(ap, am));
    Engine::sub_into(c, classical_.multiply(am, ap));
    return c;
}

T2El Context::coproduct_of_mono(const Mono& m) const {
    auto it = coproduct_memo_.find(m);
    if (it != coproduct_memo_.end()) return it->second;
    T2El r = t2_.one();
    for (int g = 0; g < 4; ++g)
        for (int k = 0; k < m[g]; ++k) r = t2_.multiply(r, coproduct_[g]);
    coproduct_memo_.emplace(m, r);
    return r;
}

T2El Context::coproduct_apply(const El& x) const {
    T2El r;
    for (auto& [m, c] : x) T2::add_into(r, T2::scaled(coproduct_of_mono(m), c));
    return r;
}

T3El Context::coproduct_slot1(const T2El& x) const {
    T3El r;
    for (auto& [k, c] : x) {
        T2El d = coproduct_of_mono(k[0]);
        for (auto& [dk, dc] : d) {
            T3::Key key{dk[0], dk[1], k[1]};
            T3::add_term(r, key, c * dc);
        }
    }
    return r;
}

T3El Context::coproduct_slot2(const T2El& x) const {
    T3El r;
    for (auto& [k, c] : x) {
        T2El d = coproduct_of_mono(k[1]);
        for (auto& [dk, dc] : d) {
            T3::Key key{k[0], dk[0], dk[1]};
            T3::add_term(r, key, c * dc);
        }
    }
    return r;
}

std::map<Mono, Poly> Context::classical_limit(const El& x) {
    std::map<Mono, Poly> r;
    for (auto& [m, c] : x)
        if (!c.at(0).is_zero()) r.emplace(m, c.at(0));
    return r;
}

std::map<std::array<Mono, 2>, Poly> Context::classical_limit(const T2El& x) {
    std::map<std::array<Mono, 2>, Poly> r;
    for (auto& [k, c] : x)
        if (!c.at(0).is_zero()) r.emplace(k, c.at(0));
    return r;
}

El exp_element(const Engine& engine, const El& x, int order) {
    for (auto& [m, c] : x) {
        auto v = c.valuation();
        if (v.has_value() && *v == 0)
            throw ValuationError("exp_element: argument has z-valuation 0");
    }
    El r = engine.scalar(Series(order, Rat(1)));
    El pw = r;
    for (int k = 1; k <= order; ++k) {
        pw = engine.multiply(pw, x);
        Engine::add_into(r, Engine::scaled(pw, Series(order, inv_factorial(k))));
    }
    return r;
}

T2El exp_tensor(const T2& t2, const T2El& x, int order) {
    for (auto& [m, c] : x) {
        auto v = c.valuation();
        if (v.has_value() && *v == 0)
            throw ValuationError("exp_tensor: argument has z-valuation 0");
    }
    T2El r = t2.scalar(Series(order, Rat(1)));
    T2El pw = r;
    for (int k = 1; k <= order; ++k) {
        pw = t2.multiply(pw, x);
        T2::add_into(r, T2::scaled(pw, Series(order, inv_factorial(k))));
    }
    return r;
}

namespace {

std::string mono_str(const Mono& m) {
    std::ostringstream os;
    bool any = false;
    for (int g = 0; g < 4; ++g) {
        if (m[g] == 0) continue;
        if (any) os << " ";
        any = true;
        os << gen_name(g);
        if (m[g] != 1) os << "^" << m[g];
    }
    return any ? os.str() : std::string("1");
}

}  // namespace

std::string Context::str(const El& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "] " << mono_str(m);
    }
    return os.str();
}

std::string Context::str(const T2El& x) const {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "] " << mono_str(k[0]) << " (x) " << mono_str(k[1]);
    }
    return os.str();
}

}  // namespace oscq::pbw
