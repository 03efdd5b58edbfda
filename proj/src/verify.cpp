#include "oscq/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "oscq/bialgebra.hpp"
#include "oscq/hopf.hpp"
#include "oscq/qcoord.hpp"
#include "oscq/rmatrix.hpp"
#include "oscq/sklyanin.hpp"
#include "oscq/weyl.hpp"

namespace oscq {

using nlohmann::ordered_json;

void Report::absorb(const Report& sub) {
    for (auto& c : sub.checks) checks.push_back({sub.command + ": " + c.name, c.pass, c.detail});
    for (auto& [k, v] : sub.derived) derived.emplace_back(sub.command + ": " + k, v);
    seconds += sub.seconds;
}

std::string Report::to_json(bool include_timing) const {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command;
    ordered_json in = ordered_json::object();
    for (auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = in;
    j["status"] = all_pass() ? "PASS" : "FAIL";
    ordered_json cs = ordered_json::array();
    for (auto& c : checks) {
        ordered_json e;
        e["name"] = c.name;
        e["status"] = c.pass ? "PASS" : "FAIL";
        if (!c.detail.empty()) e["detail"] = c.detail;
        cs.push_back(e);
    }
    j["checks"] = cs;
    ordered_json d = ordered_json::object();
    for (auto& [k, v] : derived) d[k] = v;
    j["derived"] = d;
    if (include_timing) j["timing_seconds"] = seconds;
    return j.dump(2);
}

std::string Report::human() const {
    std::ostringstream os;
    os << "== " << command;
    for (auto& [k, v] : inputs) os << "  [" << k << "=" << v << "]";
    os << " ==\n";
    for (auto& c : checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    if (!derived.empty()) {
        os << "-- derived --\n";
        for (auto& [k, v] : derived) os << k << ": " << v << "\n";
    }
    os << (all_pass() ? "RESULT: PASS" : "RESULT: FAIL") << "  ("
       << static_cast<long>(seconds * 1000) << " ms)\n";
    return os.str();
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string poly_list(const std::vector<Poly>& ps) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) os << ", ";
        os << ps[i];
    }
    return os.str();
}

Report classify_preset_h4() {
    Timer timer;
    Report rep;
    rep.command = "classify";
    rep.input("algebra", "h4 (preset)");

    H4Classification cls = classify_h4();

    rep.check("cocycle kernel has dimension 6", cls.raw_family.params.size() == 6);
    rep.check("parameter renaming to the six-parameter family is invertible",
              cls.renaming_invertible);
    {
        std::ostringstream os;
        for (int m = 0; m < 6; ++m) {
            if (m) os << "; ";
            os << "a" << (m + 1) << " = ";
            bool first = true;
            for (int k = 0; k < 6; ++k) {
                const Rat& c = cls.renaming(k, m);
                if (c.is_zero()) continue;
                if (!first) os << " + ";
                first = false;
                if (!c.is_one()) os << c.str() << "*";
                os << "p" << (k + 1);
            }
            if (first) os << "0";
        }
        rep.derive("parameter renaming", os.str());
    }
    {
        std::vector<Poly> expected = {(Poly::var("a1") * Poly::var("a2")).monic(),
                                      (Poly::var("a1") * Poly::var("a3")).monic(),
                                      (Poly::var("a2") * Poly::var("a4")).monic()};
        bool ok = cls.cojacobi.size() == 3;
        for (auto& e : expected)
            ok = ok && std::find(cls.cojacobi.begin(), cls.cojacobi.end(), e) != cls.cojacobi.end();
        rep.check("co-Jacobi ideal is {a1 a2, a1 a3, a2 a4} up to scalars", ok,
                  poly_list(cls.cojacobi));
    }
    rep.check("branch case split on (a1, a2) is exhaustive", cls.branch_split_exhaustive);
    rep.check("all branches are coboundary", cls.all_coboundary);

    for (auto& br : cls.branches) {
        std::string p = "branch " + br.name + ": ";
        rep.check(p + "r-matrix solution recovers the family", br.r_recovers_family);
        rep.check(p + "reference r-matrix lies in the solution set", br.reference_r_in_solution_set);
        rep.check(p + "delta(M) = 0", br.delta_central_zero);
        if (br.name == "A") rep.check(p + "delta(A+) = 0", br.delta_aplus_zero);
        if (br.name == "B") rep.check(p + "delta(A-) = 0", br.delta_aminus_zero);
        rep.check(p + "Schouten coefficients reduce by " + br.triangularity.str(),
                  br.schouten_quotients.size() == static_cast<std::size_t>(wedge3_count(4)));
        rep.check(p + "Schouten bracket is ad-invariant", br.schouten_ad_invariant);
        rep.check(p + "parameter identification verified", br.identification.verified);
        std::ostringstream os;
        for (std::size_t i = 0; i < br.identification.substitution.size(); ++i) {
            if (i) os << ", ";
            os << br.identification.substitution[i].first << " = "
               << br.identification.substitution[i].second;
        }
        rep.derive(p + "identification", os.str());
        if (!br.r_solution.pivot_assumptions.empty())
            rep.derive(p + "pivot assumptions", poly_list(br.r_solution.pivot_assumptions));
    }

    rep.check("automorphism N -> N - (a5/a1) M eliminates a5 from branch A",
              cls.a5_elimination.automorphism_verified && cls.a5_elimination.eliminated,
              "assumes " + poly_list(cls.a5_elimination.assumptions) + " nonzero");
    rep.check("swap automorphism maps branch B into branch A",
              cls.swap_equivalence.automorphism_verified && cls.swap_equivalence.matched);
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < cls.swap_equivalence.correspondence.size(); ++i) {
            if (i) os << ", ";
            os << cls.swap_equivalence.correspondence[i].first << " -> "
               << cls.swap_equivalence.correspondence[i].second;
        }
        rep.derive("swap-induced parameter correspondence", os.str());
    }
    {
        bool ok = cls.standard_branch == "C";
        Poly z = Poly::var(z_symbol());
        std::ostringstream os;
        for (auto& [name, value] : cls.standard_parameters) {
            os << name << " = " << value << "; ";
            if (name == "a3" || name == "a4") ok = ok && value == z;
            else ok = ok && value.is_zero();
        }
        rep.check("standard deformation sits in branch C at a3 = a4 = z", ok, os.str());
        rep.check("standard r-matrix equals the skew part of the standard tensor",
                  cls.standard_r_matches_skew_part);
    }

    rep.seconds = timer.seconds();
    return rep;
}

Report classify_from_file(const std::string& path) {
    Timer timer;
    Report rep;
    rep.command = "classify";
    rep.input("algebra", path);

    LieAlgebra L = LieAlgebra::from_file(path);
    rep.derive("dimension", std::to_string(L.dim()));

    GenericClassification g = classify_generic(L);
    rep.check("structure constants satisfy the Jacobi identity", true);
    rep.check("cocycle family re-substitutes to zero residuals", g.cocycle_verified);
    rep.derive("cocycle family dimension", std::to_string(g.family.params.size()));
    rep.derive("co-Jacobi generators", g.cojacobi.empty() ? "none" : poly_list(g.cojacobi));
    if (g.r_solution) {
        rep.derive("coboundary inverse problem", "solvable for generic parameters");
        if (!g.r_solution->pivot_assumptions.empty())
            rep.derive("pivot assumptions", poly_list(g.r_solution->pivot_assumptions));
        rep.derive("r-matrix particular solution", g.r_solution->particular.str(L));
        rep.derive("ad-invariant kernel dimension",
                   std::to_string(g.r_solution->kernel.size()));
    } else {
        rep.derive("coboundary inverse problem",
                   "unsolvable: the generic family is non-coboundary");
    }

    rep.seconds = timer.seconds();
    return rep;
}

}  // namespace

Report run_classify(const std::optional<std::string>& algebra_file) {
    if (algebra_file) return classify_from_file(*algebra_file);
    return classify_preset_h4();
}

Report run_verify_hopf(int order) {
    Timer timer;
    Report rep;
    rep.command = "verify-hopf";
    rep.input("order", std::to_string(order));

    pbw::Context ctx(order);
    HopfVerifier hv(ctx);

    for (auto& [name, r] : hv.check_hom())
        rep.check("coproduct respects " + name, r.empty(), r.empty() ? "" : ctx.str(r));
    for (auto& [name, r] : hv.check_coassoc())
        rep.check("coassociativity on " + name, r.empty());

    HopfMaps maps = hv.derive_antipode_counit();
    rep.check("derived counit satisfies both counit axioms", hv.counit_axiom_holds(maps));
    rep.check("derived antipode satisfies both antipode axioms", hv.antipode_axioms_hold(maps));
    rep.check("antipode is an antialgebra map", hv.antipode_antihom_holds(maps));
    for (int g = 0; g < 4; ++g) {
        rep.derive(std::string("counit(") + pbw::gen_name(g) + ")", maps.counit[g].str());
        rep.derive(std::string("antipode(") + pbw::gen_name(g) + ")", ctx.str(maps.antipode[g]));
    }
    {
        auto s2 = hv.antipode_squared(maps);
        for (int g = 0; g < 4; ++g)
            rep.derive(std::string("antipode^2(") + pbw::gen_name(g) + ")", ctx.str(s2[g]));
    }

    for (auto& [name, r] : hv.casimir_centrality())
        rep.check("casimir commutes with " + name, r.empty());
    {
        auto lim = pbw::Context::classical_limit(ctx.casimir());
        auto cls = pbw::Context::classical_limit(ctx.casimir_classical());
        rep.check("classical limit of the casimir is 2NM - A+A- - A-A+", lim == cls);
        bool central = true;
        pbw::El c0 = ctx.casimir_classical();
        for (int g = 0; g < 4; ++g)
            if (!ctx.classical().commutator(c0, ctx.classical().generator(g)).empty())
                central = false;
        rep.check("classical casimir is central for the classical brackets", central);
    }

    rep.seconds = timer.seconds();
    return rep;
}

Report run_verify_rmatrix(int order) {
    Timer timer;
    Report rep;
    rep.command = "verify-rmatrix";
    rep.input("order", std::to_string(order));

    pbw::Context ctx(order);
    UniversalR r = build_R(ctx);

    rep.check("R inverse verified by multiplication", r.inverse_verified);
    {
        bool z0_ok = true, z1_ok = true;
        pbw::T2::Key k1 = pbw::T2::unit_key();
        k1[0] = pbw::Engine::gen_mono(pbw::N);
        k1[1] = pbw::Engine::gen_mono(pbw::Ap);
        pbw::T2::Key k2 = pbw::T2::unit_key();
        k2[0] = pbw::Engine::gen_mono(pbw::Ap);
        k2[1] = pbw::Engine::gen_mono(pbw::N);
        for (auto& [key, c] : r.value) {
            if (key == pbw::T2::unit_key()) {
                if (c.at(0) != Poly(1)) z0_ok = false;
                if (!c.at(1).is_zero()) z1_ok = false;
            } else if (key == k1) {
                if (c.at(1) != Poly(1)) z1_ok = false;
                if (!c.at(0).is_zero()) z0_ok = false;
            } else if (key == k2) {
                if (c.at(1) != Poly(-1)) z1_ok = false;
                if (!c.at(0).is_zero()) z0_ok = false;
            } else {
                if (!c.at(0).is_zero()) z0_ok = false;
                if (!c.at(1).is_zero()) z1_ok = false;
            }
        }
        rep.check("order z^0 of R is 1 (x) 1", z0_ok);
        rep.check("order z^1 of R is N (x) A+ - A+ (x) N (the classical r-matrix)", z1_ok);
    }
    rep.check("quantum Yang-Baxter residual vanishes", qybe_residual(ctx, r.value).empty());
    for (auto& [name, t] : intertwine_residual(ctx, r.value))
        rep.check("intertwining holds for " + name, t.empty());
    {
        pbw::Context ctrl(std::min(order, 3));
        pbw::T3El res = qybe_residual(ctrl, swapped_factor_variant(ctrl));
        rep.check("factor-swapped control violates QYBE (expected nonzero)", !res.empty());
    }
    {
        RepCheckReport rc = rep_checks(r);
        rep.check("3x3 representation satisfies the classical brackets exactly",
                  rc.classical_relations);
        rep.check("D(A+)^2 = 0", rc.aplus_square_zero);
        rep.check("3x3 representation satisfies the deformed relations exactly",
                  rc.deformed_relations);
        rep.check("D(x)D image of R equals I(x)I + z(DN(x)DA+ - DA+(x)DN)",
                  rc.r_image_matches_closed_form);
        rep.check("27x27 matrix QYBE residual is the zero polynomial in z", rc.matrix_qybe_zero);
    }

    rep.seconds = timer.seconds();
    return rep;
}

Report run_verify_frt() {
    Timer timer;
    Report rep;
    rep.command = "verify-frt";

    qcoord::Algebra alg;
    {
        auto res = rtt_residual(alg, alg.engine());
        bool all_zero = true;
        for (auto& e : res)
            if (!e.empty()) all_zero = false;
        rep.check("all 81 RTT residual entries vanish exactly", all_zero);
    }
    {
        auto res = rtt_residual(alg, alg.commutative());
        bool some_nonzero = false, all_oz = true;
        for (auto& e : res) {
            if (!e.empty()) some_nonzero = true;
            for (auto& [m, c] : e)
                if (!c.substituted(z_symbol(), Poly()).is_zero()) all_oz = false;
        }
        rep.check("commuting-coordinates control is nonzero and O(z)", some_nonzero && all_oz);
    }
    {
        auto report = qgroup_coproduct_check(alg);
        rep.check("coproduct respects every defining relation", report.relations_respected);
        rep.check("coproduct is exactly coassociative", report.coassociative);
        rep.check("counit axiom holds", report.counit_ok);
        for (auto& f : report.failures) rep.derive("failure", f);
    }

    rep.seconds = timer.seconds();
    return rep;
}

Report run_verify_sklyanin() {
    Timer timer;
    Report rep;
    rep.command = "verify-sklyanin";

    SklyaninReport sk = sklyanin_check();
    rep.check("candidate brackets are antisymmetric", sk.brackets_antisymmetric);
    rep.check("candidate brackets satisfy the Jacobi identity", sk.brackets_jacobi);
    rep.check("matrix Poisson identity holds entrywise up to one global sign",
              sk.matrix_identity_holds);
    rep.derive("global sign", sk.global_sign == 0 ? "n/a" : std::to_string(sk.global_sign));
    if (sk.global_sign == -1)
        rep.derive("sign convention", "{T1, T2} = [rho', T (x) T] with rho' = (D(x)D)(A+^N)");
    rep.check("z-linear parts of the quantum relations match the brackets",
              sk.quantization_consistent);

    rep.seconds = timer.seconds();
    return rep;
}

Report run_verify_boson(int order) {
    Timer timer;
    Report rep;
    rep.command = "verify-boson";
    rep.input("order", std::to_string(order));

    weyl::RealizationReport rr = weyl::realization_check(order);
    for (auto& [name, r] : rr.residuals) rep.check("residual of " + name + " vanishes", r.empty());
    rep.check("classical specialization (z=0, beta=0, delta=1) satisfies the oscillator brackets",
              rr.classical_specialization_ok);

    weyl::CasimirValueReport cv = weyl::casimir_value(order);
    rep.check("casimir image is a scalar", cv.is_scalar);
    rep.check("casimir image equals delta (2 beta - 1)", cv.equals_delta_2beta_minus_1);

    rep.seconds = timer.seconds();
    return rep;
}

Report run_verify_all(int order) {
    Timer timer;
    Report rep;
    rep.command = "verify-all";
    rep.input("order", std::to_string(order));

    rep.absorb(run_classify(std::nullopt));
    rep.absorb(run_verify_hopf(order));
    rep.absorb(run_verify_rmatrix(order));
    rep.absorb(run_verify_frt());
    rep.absorb(run_verify_sklyanin());
    rep.absorb(run_verify_boson(order));

    rep.seconds = timer.seconds();
    return rep;
}

}  // namespace oscq
