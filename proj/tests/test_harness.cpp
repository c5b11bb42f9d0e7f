#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qfock/report.hpp"

using namespace qfock;

TEST_CASE("small full suite passes and renders deterministically") {
    CheckConfig cfg;
    cfg.max_size = 3;
    SuiteReport rep = run_suite("all", cfg);
    for (auto& r : rep.records) {
        INFO(r.id << ": " << r.witness);
        CHECK(r.pass);
        CHECK(!r.anchor.empty());
    }
    CHECK(rep.all_pass());

    // anchors are unique
    std::set<std::string> ids, anchors;
    for (auto& r : rep.records) {
        CHECK(ids.insert(r.id).second);
        CHECK(anchors.insert(r.anchor).second);
    }

    // a second run gives a byte-identical JSON report
    SuiteReport rep2 = run_suite("all", cfg);
    CHECK(report_to_json(rep).dump(2) == report_to_json(rep2).dump(2));

    // text rendering lists every check with a PASS marker
    std::string text = report_to_text(rep);
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(text.find(std::to_string(rep.records.size()) + "/" +
                    std::to_string(rep.records.size()) + " checks passed") != std::string::npos);
}

TEST_CASE("sampled mode agrees with exact mode on a passing suite") {
    CheckConfig cfg;
    cfg.max_size = 2;
    cfg.sampled = true;
    cfg.seed = 20240817;
    SuiteReport rep = run_suite("relations", cfg);
    for (auto& r : rep.records) {
        INFO(r.id << ": " << r.witness);
        CHECK(r.pass);
    }
}

TEST_CASE("worker pool assembles records in the same order as sequential runs") {
    CheckConfig seq, par;
    seq.max_size = par.max_size = 2;
    par.jobs = 4;
    SuiteReport a = run_suite("macdonald", seq), b = run_suite("macdonald", par);
    CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));
}

TEST_CASE("suite names are validated") {
    CheckConfig cfg;
    CHECK_THROWS_AS(run_suite("nonsense", cfg), std::invalid_argument);
    cfg.max_size = 0;
    CHECK_THROWS_AS(run_suite("all", cfg), std::invalid_argument);
}

TEST_CASE("report schema and failure surfacing") {
    CheckConfig cfg;
    cfg.max_size = 2;
    SuiteReport rep = run_suite("macdonald", cfg);
    OrderedJson j = report_to_json(rep);
    CHECK(j["schema"] == 1);
    CHECK(j["suite"] == "macdonald");
    CHECK(j["parameters"]["mode"] == "exact");
    CHECK(j["total"] == rep.records.size());
    CHECK(j["passed"] == rep.records.size());
    for (auto& c : j["checks"]) {
        CHECK(c["status"] == "PASS");
        CHECK(!c.contains("witness"));
        CHECK(!c.contains("wall_ms"));  // timings are opt-in
    }
    CHECK(report_to_json(rep, true)["checks"][0].contains("wall_ms"));
}

TEST_CASE("dumps: pinned contents") {
    OrderedJson cn = dump_c_norms(3);
    CHECK(cn["values"]["[]"] == "1");
    CHECK(cn["values"]["[1]"] == "1");

    OrderedJson mac = dump_macdonald(2);
    bool found = false;
    for (auto& entry : mac["polynomials"])
        if (entry["partition"] == "[1,1]") {
            found = true;
            CHECK(entry["basis"] == "m");
            CHECK(entry["coeffs"].size() == 1);
            CHECK(entry["coeffs"]["[1,1]"] == "1");  // P_(1,1) = m_(1,1)
        }
    CHECK(found);

    OrderedJson em = dump_e_matrix(0, 0);
    CHECK(em["entries"]["[1]"]["[]"] == RatFun2(Laurent2::one(),
                                                one_minus(1, 0) * one_minus(0, 1)).str());

    OrderedJson psi = dump_psi(Partition{1}, 3);
    CHECK(psi["plus"].size() == psi["minus"].size());
    CHECK(psi["plus"].size() == 4);
}
