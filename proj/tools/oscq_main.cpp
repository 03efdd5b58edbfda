// oscq: exact verification workbench for the oscillator Lie bialgebra
// classification and its Jordanian quantum deformation.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "oscq/report.hpp"

namespace {

int default_order() {
    if (const char* env = std::getenv("OSCQ_ORDER")) {
        try {
            int v = std::stoi(env);
            if (v >= 1 && v <= 12) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid OSCQ_ORDER value\n";
    }
    return 6;
}

int emit(const oscq::Report& rep, const std::string& json_path) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
        out << rep.to_json(true) << "\n";
    }
    std::cout << rep.human();
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for oscillator Lie bialgebras and the Jordanian quantum oscillator"};
    app.require_subcommand(1);

    std::string json_path;
    app.add_option("--json", json_path, "also write the machine-readable report to this file");

    int order = default_order();

    std::string algebra_file, preset;
    auto* classify =
        app.add_subcommand("classify", "classify the Lie bialgebra structures of an algebra");
    auto* opt_algebra =
        classify->add_option("--algebra", algebra_file, "structure-constant input file");
    classify->add_option("--preset", preset, "named preset algebra (h4)")->excludes(opt_algebra);

    auto* hopf = app.add_subcommand("verify-hopf", "Hopf axioms for the Jordanian deformation");
    hopf->add_option("--order", order, "series truncation order");

    auto* rmat = app.add_subcommand("verify-rmatrix", "universal R-matrix checks");
    rmat->add_option("--order", order, "series truncation order");

    auto* frt = app.add_subcommand("verify-frt", "FRT quantum group checks (exact)");
    auto* skl = app.add_subcommand("verify-sklyanin", "Sklyanin bracket consistency checks (exact)");

    auto* boson = app.add_subcommand("verify-boson", "boson realization checks");
    boson->add_option("--order", order, "series truncation order");

    auto* all = app.add_subcommand("verify-all", "run every verification");
    all->add_option("--order", order, "series truncation order");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) {
            if (!preset.empty() && preset != "h4") {
                std::cerr << "error: unknown preset '" << preset << "' (available: h4)\n";
                return 2;
            }
            std::optional<std::string> file;
            if (!algebra_file.empty()) file = algebra_file;
            return emit(oscq::run_classify(file), json_path);
        }
        if (hopf->parsed()) return emit(oscq::run_verify_hopf(order), json_path);
        if (rmat->parsed()) return emit(oscq::run_verify_rmatrix(order), json_path);
        if (frt->parsed()) return emit(oscq::run_verify_frt(), json_path);
        if (skl->parsed()) return emit(oscq::run_verify_sklyanin(), json_path);
        if (boson->parsed()) return emit(oscq::run_verify_boson(order), json_path);
        if (all->parsed()) return emit(oscq::run_verify_all(order), json_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
