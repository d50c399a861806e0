#include <doctest.h>

#include "sincbounds/report.hpp"

using namespace sincbounds;

TEST_CASE("parse_suite") {
    CHECK(parse_suite("all") == Suite::all);
    CHECK(parse_suite("core") == Suite::core);
    CHECK(parse_suite("applications") == Suite::applications);
    CHECK(parse_suite("sharpness") == Suite::sharpness);
    CHECK_THROWS_AS(parse_suite("everything"), DomainError);
}

TEST_CASE("sharpness report meets expectations") {
    const ReportDocument doc = run_report(Suite::sharpness, 64);
    CHECK(doc.cases.size() >= 5);
    CHECK(doc.all_expectations_met());
    for (const CaseRecord& r : doc.cases) {
        INFO(r.id);
        CHECK(r.status == "violated"); // perturbed sharp constants must fail
    }
}

TEST_CASE("applications report meets expectations") {
    const ReportDocument doc = run_report(Suite::applications, 64);
    CHECK(doc.all_expectations_met());
    bool saw_a1 = false, saw_means = false;
    for (const CaseRecord& r : doc.cases) {
        if (r.id.rfind("integral-enclosure", 0) == 0) saw_a1 = true;
        if (r.id == "seiffert-margin-pairs") saw_means = true;
    }
    CHECK(saw_a1);
    CHECK(saw_means);
}

TEST_CASE("machine document round-trips and is deterministic") {
    const ReportDocument doc = run_report(Suite::applications, 64);
    const std::string text = emit_machine(doc);
    CHECK(text == emit_machine(doc));

    const ReportDocument back = parse_machine(text);
    CHECK(back.tool_version == doc.tool_version);
    CHECK(back.precision_mode == doc.precision_mode);
    REQUIRE(back.cases.size() == doc.cases.size());
    for (size_t i = 0; i < doc.cases.size(); ++i) {
        CHECK(back.cases[i].id == doc.cases[i].id);
        CHECK(back.cases[i].claim == doc.cases[i].claim);
        CHECK(back.cases[i].status == doc.cases[i].status);
        CHECK(back.cases[i].min_margin == doc.cases[i].min_margin);
        CHECK(back.cases[i].evaluations == doc.cases[i].evaluations);
        CHECK(back.cases[i].expected_met == doc.cases[i].expected_met);
    }
    // Emit of the parsed document is byte-identical too.
    CHECK(emit_machine(back) == text);
}

TEST_CASE("text rendering carries the summary verdict") {
    const ReportDocument doc = run_report(Suite::sharpness, 64);
    const std::string text = emit_text(doc);
    CHECK(text.find("RESULT: all expectations met") != std::string::npos);
    CHECK(text.find("constants:") != std::string::npos);
}

TEST_CASE("full report meets every expectation") {
    const ReportDocument doc = run_report(Suite::all, 64);
    CHECK(doc.cases.size() > 30);
    for (const CaseRecord& r : doc.cases) {
        INFO(r.id << " status " << r.status << " margin " << r.min_margin);
        CHECK(r.expected_met);
    }
}
