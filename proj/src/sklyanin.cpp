#include "oscq/sklyanin.hpp"

#include "oscq/qcoord.hpp"
#include "oscq/rmatrix.hpp"

namespace oscq {

namespace {

Poly zv() { return Poly::var(z_symbol()); }

int s_n() { return sym("n"); }
int s_en() { return sym("en"); }
int s_am() { return sym("am"); }
int s_ap() { return sym("ap"); }
int s_m() { return sym("m"); }

}  // namespace

PoissonCandidate::PoissonCandidate() : gens_{s_n(), s_en(), s_am(), s_ap(), s_m()} {}

// Generator table: z-linear parts of the quantum commutators, with the rows
// for e^n induced by the Leibniz rule {e^n, x} = e^n {n, x}.
Poly PoissonCandidate::table(int s1, int s2) const {
    auto val = [&](int a, int b) -> Poly {
        Poly en = Poly::var(s_en()), am = Poly::var(s_am()), ap = Poly::var(s_ap());
        if (a == s_n() && b == s_ap()) return en - Poly(1);
        if (a == s_n() && b == s_am()) return Poly();
        if (a == s_n() && b == s_m()) return am;
        if (a == s_n() && b == s_en()) return Poly();
        if (a == s_en() && b == s_ap()) return en * en - en;
        if (a == s_en() && b == s_am()) return Poly();
        if (a == s_en() && b == s_m()) return en * am;
        if (a == s_am() && b == s_ap()) return am;
        if (a == s_am() && b == s_m()) return -(am * am);
        if (a == s_ap() && b == s_m()) return am * ap;
        return Poly();
    };
    Poly direct = val(s1, s2);
    if (!direct.is_zero()) return direct;
    Poly flipped = val(s2, s1);
    if (!flipped.is_zero()) return -flipped;
    return Poly();
}

Poly PoissonCandidate::bracket(const Poly& p, const Poly& q) const {
    Poly out;
    for (int s1 : gens_) {
        Poly dp = p.derivative(s1);
        if (dp.is_zero()) continue;
        for (int s2 : gens_) {
            if (s1 == s2) continue;
            Poly dq = q.derivative(s2);
            if (dq.is_zero()) continue;
            Poly t = table(s1, s2);
            if (t.is_zero()) continue;
            out += dp * dq * t;
        }
    }
    return out;
}

bool PoissonCandidate::antisymmetric() const {
    for (int a : gens_)
        for (int b : gens_) {
            if (a == b) {
                if (!table(a, b).is_zero()) return false;
            } else if (table(a, b) != -table(b, a)) {
                return false;
            }
        }
    return true;
}

bool PoissonCandidate::jacobi_holds() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            for (std::size_t k = j + 1; k < gens_.size(); ++k) {
                Poly x = Poly::var(gens_[i]), y = Poly::var(gens_[j]), z = Poly::var(gens_[k]);
                Poly total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                             bracket(z, bracket(x, y));
                if (!total.is_zero()) return false;
            }
    return true;
}

SklyaninReport sklyanin_check() {
    SklyaninReport report;
    PoissonCandidate pb;
    report.brackets_antisymmetric = pb.antisymmetric();
    if (!report.brackets_antisymmetric) report.failures.push_back("bracket table not antisymmetric");
    report.brackets_jacobi = pb.jacobi_holds();
    if (!report.brackets_jacobi) report.failures.push_back("Jacobi identity fails");

    // Entrywise {T1, T2} against [rho, T (x) T] with rho = DN (x) DA+ -
    // DA+ (x) DN in the 3x3 representation.
    {
        MatP t = classical_group_element();
        MatrixRep rep = MatrixRep::oscillator();
        MatP rho = zero_matrix<Poly>(9, 9);
        {
            MatP dn = zero_matrix<Poly>(3, 3), dap = zero_matrix<Poly>(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    dn(i, j) = Poly(rep.n(i, j));
                    dap(i, j) = Poly(rep.ap(i, j));
                }
            MatP t1 = kron(dn, dap), t2 = kron(dap, dn);
            for (int i = 0; i < 9; ++i)
                for (int j = 0; j < 9; ++j) rho(i, j) = t1(i, j) - t2(i, j);
        }
        MatP tt = kron(t, t);
        MatP rhs = nc_mul(rho, tt);
        MatP rhs2 = nc_mul(tt, rho);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) rhs(i, j) -= rhs2(i, j);

        bool plus_ok = true, minus_ok = true;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < 3; ++j)
                    for (int l = 0; l < 3; ++l) {
                        Poly lhs = pb.bracket(t(i, j), t(k, l));
                        const Poly& r = rhs(i * 3 + k, j * 3 + l);
                        if (lhs != r) plus_ok = false;
                        if (lhs != -r) minus_ok = false;
                    }
        if (plus_ok) {
            report.matrix_identity_holds = true;
            report.global_sign = +1;
        } else if (minus_ok) {
            report.matrix_identity_holds = true;
            report.global_sign = -1;
            report.failures.push_back(
                "sign convention: {T1,T2} = -[rho, T(x)T]; recorded, not an error");
        } else {
            report.failures.push_back("matrix Sklyanin identity fails beyond a global sign");
        }
    }

    // Quantization consistency: the z-linear part of every commutator of
    // hatted generators equals z times the candidate bracket.
    {
        qcoord::Algebra alg;
        const auto& eng = alg.engine();
        struct Pair {
            qcoord::Gen a, b;
            int pa, pb;
            int sa, sb;  // classical symbols
        };
        std::vector<Pair> pairs = {
            {qcoord::Eh, qcoord::Aph, 1, 1, s_en(), s_ap()},
            {qcoord::Eh, qcoord::Amh, 1, 1, s_en(), s_am()},
            {qcoord::Eh, qcoord::Mh, 1, 1, s_en(), s_m()},
            {qcoord::Amh, qcoord::Aph, 1, 1, s_am(), s_ap()},
            {qcoord::Amh, qcoord::Mh, 1, 1, s_am(), s_m()},
            {qcoord::Aph, qcoord::Mh, 1, 1, s_ap(), s_m()},
        };
        report.quantization_consistent = true;
        for (auto& p : pairs) {
            qcoord::El comm = eng.commutator(
                eng.monomial(qcoord::Engine::gen_mono(p.a, p.pa), Poly(1)),
                eng.monomial(qcoord::Engine::gen_mono(p.b, p.pb), Poly(1)));
            // translate the commutator into the commutative coordinates and
            // compare with z * {a, b}
            Poly translated;
            bool translatable = true;
            for (auto& [m, c] : comm) {
                if (m[qcoord::Eh] < 0) { translatable = false; break; }
                Poly mono = c;
                mono = mono * Poly::var(s_m(), m[qcoord::Mh]);
                mono = mono * Poly::var(s_am(), m[qcoord::Amh]);
                mono = mono * Poly::var(s_ap(), m[qcoord::Aph]);
                mono = mono * Poly::var(s_en(), m[qcoord::Eh]);
                translated += mono;
            }
            Poly expected = zv() * pb.bracket(Poly::var(p.sa), Poly::var(p.sb));
            if (!translatable || translated != expected) {
                report.quantization_consistent = false;
                report.failures.push_back(std::string("z-linear part mismatch on [") +
                                          qcoord::gen_name(p.a) + ", " + qcoord::gen_name(p.b) +
                                          "]");
            }
        }
    }
    return report;
}

}  // namespace oscq
