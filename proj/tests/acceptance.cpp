// Acceptance run: one PASS/FAIL line per criterion with its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fanocert/suites.hpp"
#include "property_checks.hpp"

using namespace fanocert;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_s;
    std::function<bool(std::string&)> body;
};

std::function<bool(std::string&)> suite_passes(const std::string& name) {
    return [name](std::string& note) {
        auto r = run_suite(name);
        note = std::to_string(r.passed()) + "/" + std::to_string(r.checks.size()) + " checks";
        for (const auto& c : r.checks) {
            if (c.status != CheckStatus::pass) {
                note += "; first failure " + c.id + ": " + c.witness.value_or("");
                return false;
            }
        }
        return !r.checks.empty();
    };
}

bool mutations(std::string& note) {
    const auto base = Catalog::standard();
    int caught = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto m = mutate(base, seed);
        if (!run_all({}, m.catalog).all_passed()) {
            ++caught;
        } else if (note.empty()) {
            note = "undetected: " + m.entry + " += " + m.added;
        }
    }
    note = std::to_string(caught) + "/20 mutations detected" + (note.empty() ? "" : "; " + note);
    return caught == 20;
}

bool properties(std::string& note) {
    std::size_t total = 0;
    bool ok = true;
    for (const auto& r : testing::run_properties(777, 1000)) {
        total += r.instances;
        if (r.failures != 0 || r.instances < 1000) {
            ok = false;
            note += r.name + " failed: " + r.first_failure + "; ";
        }
    }
    note += std::to_string(total) + " instances";
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "weight basis and sl2 action", 1.0, suite_passes("w-module")},
        {2, "unique Borel-stable line", 1.0, suite_passes("borel-line")},
        {3, "group law of the F3 action", 1.0, suite_passes("g-action")},
        {4, "semi-invariant lines in O(1,1)", 1.0, suite_passes("semi-invariants-11")},
        {5, "stabilizer condition ideals", 2.0, suite_passes("stabilizers")},
        {6, "normalization map and W'", 2.0, suite_passes("normalization")},
        {7, "tangent directions at p", 1.0, suite_passes("tangent-directions")},
        {8, "pencils and surface classes", 1.0, suite_passes("pencils")},
        {9, "quadric involution identities", 5.0, suite_passes("quadric-involution")},
        {10, "Mobius boundary table", 1.0, suite_passes("reparam")},
        {11, "mutation robustness", 60.0, mutations},
        {12, "randomized library properties", 30.0, properties},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::string note;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_s;
        if (!in_time) note += "; over budget";
        const bool pass = ok && in_time;
        if (!pass) ++failed;
        std::printf("%s  %2d  %-32s %8.3f s / %.0f s  %s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                    c.budget_s, note.c_str());
    }
    std::printf("%d passed, %d failed\n", static_cast<int>(criteria.size()) - failed, failed);
    return failed == 0 ? 0 : 1;
}
