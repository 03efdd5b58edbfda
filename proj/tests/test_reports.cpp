#include <doctest.h>

#include <json.hpp>

#include "oscq/report.hpp"

using namespace oscq;

TEST_CASE("report structure round trip") {
    Report rep;
    rep.command = "demo";
    rep.input("order", "6");
    rep.check("first", true);
    rep.check("second", false, "residual nonzero");
    rep.derive("table", "x -> y");
    rep.seconds = 0.25;

    CHECK_FALSE(rep.all_pass());

    auto j = nlohmann::json::parse(rep.to_json(true));
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "demo");
    CHECK(j["status"] == "FAIL");
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["status"] == "PASS");
    CHECK(j["checks"][1]["detail"] == "residual nonzero");
    CHECK(j["derived"]["table"] == "x -> y");
    CHECK(j.contains("timing_seconds"));

    auto j2 = nlohmann::json::parse(rep.to_json(false));
    CHECK_FALSE(j2.contains("timing_seconds"));

    // human text derives from the same data
    std::string h = rep.human();
    CHECK(h.find("FAIL  second") != std::string::npos);
    CHECK(h.find("RESULT: FAIL") != std::string::npos);
}

TEST_CASE("absorb prefixes subreport names") {
    Report outer;
    outer.command = "verify-all";
    Report inner;
    inner.command = "verify-x";
    inner.check("thing", true);
    inner.derive("k", "v");
    outer.absorb(inner);
    REQUIRE(outer.checks.size() == 1);
    CHECK(outer.checks[0].name == "verify-x: thing");
    CHECK(outer.derived[0].first == "verify-x: k");
}

TEST_CASE("reports are deterministic modulo timing") {
    std::string a = run_verify_sklyanin().to_json(false);
    std::string b = run_verify_sklyanin().to_json(false);
    CHECK(a == b);

    std::string c = run_classify(std::nullopt).to_json(false);
    std::string d = run_classify(std::nullopt).to_json(false);
    CHECK(c == d);

    std::string e = run_verify_boson(4).to_json(false);
    std::string f = run_verify_boson(4).to_json(false);
    CHECK(e == f);
}

TEST_CASE("verification drivers pass at a small order") {
    CHECK(run_verify_hopf(3).all_pass());
    CHECK(run_verify_rmatrix(3).all_pass());
    CHECK(run_verify_frt().all_pass());
    CHECK(run_verify_sklyanin().all_pass());
    CHECK(run_verify_boson(3).all_pass());
    CHECK(run_classify(std::nullopt).all_pass());
}
