#include <doctest.h>

#include <json.hpp>

#include "fanocert/suites.hpp"

using namespace fanocert;

namespace {

std::vector<std::pair<std::string, CheckStatus>> outline(const AggregateReport& r) {
    std::vector<std::pair<std::string, CheckStatus>> out;
    for (const auto& s : r.suites)
        for (const auto& c : s.checks) out.emplace_back(s.suite + "/" + c.id, c.status);
    return out;
}

}  // namespace

TEST_CASE("suite names") {
    CHECK(suite_names().size() == 10);
    CHECK(suite_names().front() == "w-module");
    CHECK(suite_names().back() == "reparam");
    CHECK(is_suite_name("stabilizers"));
    CHECK_FALSE(is_suite_name("bogus"));
    CHECK_THROWS_AS((void)run_suite("bogus"), UsageError);
    CHECK_THROWS_AS((void)run_suites({"reparam", "bogus"}), UsageError);
}

TEST_CASE("every suite passes with the default configuration") {
    auto all = run_all();
    REQUIRE(all.suites.size() == 10);
    for (const auto& s : all.suites) {
        CAPTURE(s.suite);
        CHECK_FALSE(s.checks.empty());
        for (const auto& c : s.checks) {
            CAPTURE(c.id);
            CAPTURE(c.witness.value_or(""));
            CHECK(c.status == CheckStatus::pass);
        }
    }
    CHECK(all.failed() == 0);
}

TEST_CASE("individual suites") {
    auto stab = run_suite("stabilizers");
    CHECK(stab.all_passed());
    CHECK(stab.find("upsilon-T.principal"));
    CHECK(stab.find("upsilon-T.v=2"));
    CHECK(stab.find("upsilon-T.v=-4.full"));
    CHECK(stab.find("upsilon-a.v=0.full"));

    SuiteConfig degenerate;
    degenerate.extra_v = {Rational(-4), Rational(0)};
    auto deg = run_suite("stabilizers", degenerate);
    CHECK(deg.all_passed());
    CHECK(deg.find("upsilon-T.v=-4"));
    CHECK(deg.find("upsilon-a.v=0"));

    auto rp = run_suite("reparam");
    CHECK(rp.all_passed());
    for (const char* id : {"boundary.0", "boundary.1", "boundary.inf", "boundary.-4"}) CHECK(rp.find(id));
}

TEST_CASE("extra specializations add checks") {
    SuiteConfig cfg;
    cfg.extra_v = {Rational(7, 3)};
    auto base = run_suite("stabilizers");
    auto more = run_suite("stabilizers", cfg);
    CHECK(more.all_passed());
    CHECK(more.checks.size() > base.checks.size());
    CHECK(more.find("upsilon-T.v=7/3"));
    for (const auto& c : base.checks) CHECK(more.find(c.id));
}

TEST_CASE("empty filter gives an empty report") {
    auto r = run_suites({});
    CHECK(r.suites.empty());
    CHECK(r.passed() == 0);
    CHECK(r.all_passed());
}

TEST_CASE("reports are reproducible and independent of scheduling") {
    auto a = run_all();
    auto b = run_all();
    SuiteConfig par;
    par.parallel = true;
    auto c = run_all(par);
    CHECK(outline(a) == outline(b));
    CHECK(outline(a) == outline(c));
}

TEST_CASE("filtered runs keep the fixed order") {
    auto r = run_suites({"reparam", "w-module"});
    REQUIRE(r.suites.size() == 2);
    CHECK(r.suites[0].suite == "w-module");
    CHECK(r.suites[1].suite == "reparam");
}

TEST_CASE("json report shape") {
    auto r = run_suites({"borel-line", "pencils"});
    auto j = nlohmann::json::parse(to_json(r));
    REQUIRE(j.contains("suites"));
    CHECK(j["suites"].size() == 2);
    CHECK(j["passed"] == r.passed());
    CHECK(j["failed"] == 0);
    for (const auto& s : j["suites"]) {
        CHECK(s["suite"].is_string());
        for (const auto& c : s["checks"]) {
            CHECK(c["id"].is_string());
            CHECK(c["status"] == "pass");
            CHECK(c["statement"].is_string());
            CHECK(c["ms"].is_number());
        }
    }
    auto one = nlohmann::json::parse(to_json(r.suites[0]));
    CHECK(one["suite"] == "borel-line");
}

TEST_CASE("text report") {
    CheckReport r{"demo", {{"a", CheckStatus::pass, "first", std::nullopt, 0.5},
                           {"b", CheckStatus::fail, "second", std::string("x0 - 1"), 1.0},
                           {"c", CheckStatus::error, "third", std::string("boom"), 0.0}}};
    CHECK(r.passed() == 1);
    CHECK(r.failed() == 2);
    auto text = to_text(r);
    CHECK(text.find("PASS  demo/a  first") != std::string::npos);
    CHECK(text.find("FAIL  demo/b  second") != std::string::npos);
    CHECK(text.find("witness: x0 - 1") != std::string::npos);
    CHECK(text.find("ERROR demo/c") != std::string::npos);
    CHECK(text.find("1 passed, 2 failed") != std::string::npos);
    auto j = nlohmann::json::parse(to_json(r));
    CHECK_FALSE(j["checks"][0].contains("witness"));
    CHECK(j["checks"][1]["witness"] == "x0 - 1");
    CHECK(j["checks"][2]["status"] == "error");
}

TEST_CASE("a broken catalog entry surfaces as failures, not crashes") {
    auto cat = Catalog::standard();
    cat.set_text("e3", "x1^2*y1^3*x2");
    auto r = run_suite("w-module", {}, cat);
    CHECK_FALSE(r.all_passed());
    cat = Catalog::standard();
    cat.set_text("action.x0", "x0");
    CHECK_FALSE(run_suite("g-action", {}, cat).all_passed());
    cat = Catalog::standard();
    cat.set_text("upsilon_p", "4*x0*y1 - x1^4*y0 +");
    auto broken = run_suite("semi-invariants-11", {}, cat);
    CHECK_FALSE(broken.all_passed());
}

TEST_CASE("mutations are detected") {
    const auto base = Catalog::standard();
    for (std::uint64_t seed = 100; seed < 105; ++seed) {
        auto m = mutate(base, seed);
        CAPTURE(m.entry);
        CAPTURE(m.added);
        CHECK(m.catalog.entry(m.entry).text != base.entry(m.entry).text);
        CHECK_FALSE(run_all({}, m.catalog).all_passed());
    }
    auto a = mutate(base, 42), b = mutate(base, 42);
    CHECK(a.entry == b.entry);
    CHECK(a.added == b.added);
}

TEST_CASE("catalog") {
    auto cat = Catalog::standard();
    CHECK_THROWS_AS((void)cat.entry("nope"), UsageError);
    CHECK_THROWS_AS(cat.set_text("nope", "0"), UsageError);
    for (const auto& e : cat.entries()) {
        CAPTURE(e.name);
        CHECK_NOTHROW((void)cat.get(e.name, make_registry(e.world)));
    }
}
