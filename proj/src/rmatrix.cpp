#include "oscq/rmatrix.hpp"

namespace oscq {

using namespace pbw;

namespace {

T2El tensor_gen_pair(const Context& ctx, Gen a, Gen b, int sign) {
    T2El t;
    T2::Key k = T2::unit_key();
    k[0] = Engine::gen_mono(a);
    k[1] = Engine::gen_mono(b);
    T2::add_term(t, k, ctx.w_power(1, Rat(sign)));
    return t;
}

}  // namespace

UniversalR build_R(const Context& ctx) {
    const T2& t2 = ctx.tensor2();
    const int order = ctx.order();
    T2El f1 = exp_tensor(t2, tensor_gen_pair(ctx, Ap, N, -1), order);
    T2El f2 = exp_tensor(t2, tensor_gen_pair(ctx, N, Ap, +1), order);
    T2El g1 = exp_tensor(t2, tensor_gen_pair(ctx, N, Ap, -1), order);
    T2El g2 = exp_tensor(t2, tensor_gen_pair(ctx, Ap, N, +1), order);

    UniversalR r;
    r.value = t2.multiply(f1, f2);
    r.inverse = t2.multiply(g1, g2);
    T2El prod = t2.multiply(r.value, r.inverse);
    T2::sub_into(prod, t2.one());
    T2El prod2 = t2.multiply(r.inverse, r.value);
    T2::sub_into(prod2, t2.one());
    r.inverse_verified = prod.empty() && prod2.empty();
    return r;
}

T2El swapped_factor_variant(const Context& ctx) {
    const T2& t2 = ctx.tensor2();
    const int order = ctx.order();
    T2El f1 = exp_tensor(t2, tensor_gen_pair(ctx, N, Ap, +1), order);
    T2El f2 = exp_tensor(t2, tensor_gen_pair(ctx, Ap, N, -1), order);
    return t2.multiply(f1, f2);
}

T3El qybe_residual(const Context& ctx, const T2El& r) {
    const T3& t3 = ctx.tensor3();
    T3El r12, r13, r23;
    for (auto& [k, c] : r) {
        T3::add_term(r12, {k[0], k[1], Engine::unit_mono()}, c);
        T3::add_term(r13, {k[0], Engine::unit_mono(), k[1]}, c);
        T3::add_term(r23, {Engine::unit_mono(), k[0], k[1]}, c);
    }
    T3El lhs = t3.multiply(t3.multiply(r12, r13), r23);
    T3El rhs = t3.multiply(t3.multiply(r23, r13), r12);
    T3::sub_into(lhs, rhs);
    return lhs;
}

std::vector<std::pair<std::string, T2El>> intertwine_residual(const Context& ctx, const T2El& r) {
    const T2& t2 = ctx.tensor2();
    std::vector<std::pair<std::string, T2El>> out;
    for (Gen g : {N, Ap, Am, M}) {
        T2El d = ctx.coproduct(g);
        T2El res = t2.multiply(Context::sigma(t2, d), r);
        T2::sub_into(res, t2.multiply(r, d));
        out.emplace_back(gen_name(g), std::move(res));
    }
    return out;
}

// ---------------------------------------------------------------------------

MatrixRep MatrixRep::oscillator() {
    MatrixRep rep;
    rep.n = zero_matrix<Rat>(3, 3);
    rep.ap = zero_matrix<Rat>(3, 3);
    rep.am = zero_matrix<Rat>(3, 3);
    rep.m = zero_matrix<Rat>(3, 3);
    rep.n(1, 1) = Rat(1);
    rep.ap(1, 2) = Rat(1);
    rep.am(0, 1) = Rat(1);
    rep.m(0, 2) = Rat(1);
    return rep;
}

const MatR& MatrixRep::of_gen(int g) const {
    switch (g) {
        case M: return m;
        case Am: return am;
        case Ap: return ap;
        case N: return n;
    }
    throw std::out_of_range("MatrixRep: bad generator");
}

MatR MatrixRep::image(const pbw::Mono& mono) const {
    MatR out = identity_matrix<Rat>(3);
    for (int g = 0; g < 4; ++g)
        for (int k = 0; k < mono[g]; ++k) out = nc_mul(out, of_gen(g));
    return out;
}

MatP rep_tensor_image(const MatrixRep& rep, const T2El& x) {
    MatP out = zero_matrix<Poly>(9, 9);
    for (auto& [key, c] : x) {
        MatR m1 = rep.image(key[0]);
        MatR m2 = rep.image(key[1]);
        Poly coeff = c.to_poly();
        if (coeff.is_zero()) continue;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (m1(i, j).is_zero()) continue;
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) {
                        if (m2(k, l).is_zero()) continue;
                        out(i * 3 + k, j * 3 + l) += m1(i, j) * m2(k, l) * coeff;
                    }
            }
    }
    return out;
}

MatP rep_r_closed_form(const MatrixRep& rep) {
    Poly z = Poly::var(z_symbol());
    MatP np = zero_matrix<Poly>(3, 3), app = zero_matrix<Poly>(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            np(i, j) = Poly(rep.n(i, j));
            app(i, j) = Poly(rep.ap(i, j));
        }
    MatP out = identity_matrix<Poly>(9);
    MatP t1 = kron(np, app), t2 = kron(app, np);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) out(i, j) += z * (t1(i, j) - t2(i, j));
    return out;
}

MatP classical_group_element() {
    Poly en = Poly::var("en"), am = Poly::var("am"), ap = Poly::var("ap"), m = Poly::var("m");
    MatP t = zero_matrix<Poly>(3, 3);
    t(0, 0) = Poly(1);
    t(0, 1) = am * en;
    t(0, 2) = m + am * ap;
    t(1, 1) = en;
    t(1, 2) = ap;
    t(2, 2) = Poly(1);
    return t;
}

MatP embed12(const MatP& r9) {
    MatP out = zero_matrix<Poly>(27, 27);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    for (int e = 0; e < 3; ++e)
                        out((a * 3 + b) * 3 + c, (d * 3 + e) * 3 + c) = r9(a * 3 + b, d * 3 + e);
    return out;
}

MatP embed23(const MatP& r9) {
    MatP out = zero_matrix<Poly>(27, 27);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int e = 0; e < 3; ++e)
                    for (int f = 0; f < 3; ++f)
                        out((a * 3 + b) * 3 + c, (a * 3 + e) * 3 + f) = r9(b * 3 + c, e * 3 + f);
    return out;
}

MatP embed13(const MatP& r9) {
    MatP out = zero_matrix<Poly>(27, 27);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    for (int f = 0; f < 3; ++f)
                        out((a * 3 + b) * 3 + c, (d * 3 + b) * 3 + f) = r9(a * 3 + c, d * 3 + f);
    return out;
}

RepCheckReport rep_checks(const UniversalR& r) {
    RepCheckReport rep_report;
    MatrixRep rep = MatrixRep::oscillator();

    auto comm = [](const MatR& a, const MatR& b) {
        MatR ab = nc_mul(a, b), ba = nc_mul(b, a);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) ab(i, j) -= ba(i, j);
        return ab;
    };
    auto eq = [](const MatR& a, const MatR& b) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (a(i, j) != b(i, j)) return false;
        return true;
    };
    auto zero = [](const MatR& a) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!a(i, j).is_zero()) return false;
        return true;
    };

    MatR neg_am = rep.am;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) neg_am(i, j) = -neg_am(i, j);
    rep_report.classical_relations = eq(comm(rep.n, rep.ap), rep.ap) &&
                                     eq(comm(rep.n, rep.am), neg_am) &&
                                     eq(comm(rep.am, rep.ap), rep.m) &&
                                     zero(comm(rep.m, rep.n)) && zero(comm(rep.m, rep.ap)) &&
                                     zero(comm(rep.m, rep.am));

    rep_report.aplus_square_zero = zero(nc_mul(rep.ap, rep.ap));

    // Deformed relations with z symbolic. With D(A+)^2 = 0:
    //   (e^{zD(A+)}-1)/z = D(A+),  e^{zD(A+)} = I + zD(A+).
    {
        Poly z = Poly::var(z_symbol());
        auto lift = [](const MatR& a) {
            MatP p = zero_matrix<Poly>(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) p(i, j) = Poly(a(i, j));
            return p;
        };
        MatP dn = lift(rep.n), dap = lift(rep.ap), dam = lift(rep.am), dm = lift(rep.m);
        auto commp = [](const MatP& a, const MatP& b) {
            MatP ab = nc_mul(a, b), ba = nc_mul(b, a);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) ab(i, j) -= ba(i, j);
            return ab;
        };
        auto eqp = [](const MatP& a, const MatP& b) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (a(i, j) != b(i, j)) return false;
            return true;
        };
        MatP exp_zap = identity_matrix<Poly>(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) exp_zap(i, j) += z * dap(i, j);
        MatP m_exp = nc_mul(dm, exp_zap);
        MatP neg_dam = zero_matrix<Poly>(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) neg_dam(i, j) = -dam(i, j);
        rep_report.deformed_relations = eqp(commp(dn, dap), dap) &&
                                        eqp(commp(dn, dam), neg_dam) &&
                                        eqp(commp(dam, dap), m_exp);
    }

    // Image of the abstract R equals the closed form.
    {
        MatP image = rep_tensor_image(rep, r.value);
        MatP closed = rep_r_closed_form(rep);
        bool ok = true;
        for (int i = 0; i < 9 && ok; ++i)
            for (int j = 0; j < 9; ++j)
                if (image(i, j) != closed(i, j)) { ok = false; break; }
        rep_report.r_image_matches_closed_form = ok;
    }

    // 27x27 quantum Yang-Baxter equation, z symbolic.
    {
        MatP r9 = rep_r_closed_form(rep);
        MatP r12 = embed12(r9), r13 = embed13(r9), r23 = embed23(r9);
        MatP lhs = nc_mul(nc_mul(r12, r13), r23);
        MatP rhs = nc_mul(nc_mul(r23, r13), r12);
        bool ok = true;
        for (int i = 0; i < 27 && ok; ++i)
            for (int j = 0; j < 27; ++j)
                if (lhs(i, j) != rhs(i, j)) { ok = false; break; }
        rep_report.matrix_qybe_zero = ok;
    }

    return rep_report;
}

}  // namespace oscq
