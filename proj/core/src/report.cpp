#include "fanocert/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace fanocert {

namespace {

nlohmann::ordered_json suite_json(const CheckReport& r) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json j;
        j["id"] = c.id;
        j["status"] = std::string(to_string(c.status));
        j["statement"] = c.statement;
        if (c.witness) j["witness"] = *c.witness;
        j["ms"] = c.ms;
        checks.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["suite"] = r.suite;
    out["checks"] = std::move(checks);
    return out;
}

void text_lines(std::ostringstream& os, const CheckReport& r) {
    for (const auto& c : r.checks) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.2f ms", c.ms);
        const char* tag = c.status == CheckStatus::pass ? "PASS " : c.status == CheckStatus::fail ? "FAIL " : "ERROR";
        os << tag << ' ' << r.suite << '/' << c.id << "  " << c.statement << "  (" << ms << ')';
        if (c.witness && c.status != CheckStatus::pass) os << "\n      witness: " << *c.witness;
        os << '\n';
    }
}

}  // namespace

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::error: return "error";
    }
    return "error";
}

std::size_t CheckReport::passed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == CheckStatus::pass;
    return n;
}

std::size_t CheckReport::failed() const { return checks.size() - passed(); }

const CheckRecord* CheckReport::find(std::string_view id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::size_t AggregateReport::passed() const {
    std::size_t n = 0;
    for (const auto& s : suites) n += s.passed();
    return n;
}

std::size_t AggregateReport::failed() const {
    std::size_t n = 0;
    for (const auto& s : suites) n += s.failed();
    return n;
}

std::string to_json(const CheckReport& r, int indent) { return suite_json(r).dump(indent); }

std::string to_json(const AggregateReport& r, int indent) {
    nlohmann::ordered_json out;
    out["suites"] = nlohmann::ordered_json::array();
    for (const auto& s : r.suites) out["suites"].push_back(suite_json(s));
    out["passed"] = r.passed();
    out["failed"] = r.failed();
    return out.dump(indent);
}

std::string to_text(const CheckReport& r) {
    std::ostringstream os;
    text_lines(os, r);
    os << r.passed() << " passed, " << r.failed() << " failed\n";
    return os.str();
}

std::string to_text(const AggregateReport& r) {
    std::ostringstream os;
    for (const auto& s : r.suites) text_lines(os, s);
    os << r.passed() << " passed, " << r.failed() << " failed\n";
    return os.str();
}

}  // namespace fanocert
