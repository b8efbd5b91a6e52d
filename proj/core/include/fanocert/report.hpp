#ifndef FANOCERT_REPORT_HPP
#define FANOCERT_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fanocert {

enum class CheckStatus { pass, fail, error };

[[nodiscard]] std::string_view to_string(CheckStatus s);

struct CheckRecord {
    std::string id;
    CheckStatus status = CheckStatus::error;
    std::string statement;
    std::optional<std::string> witness;
    double ms = 0.0;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    [[nodiscard]] std::size_t passed() const;
    [[nodiscard]] std::size_t failed() const;  // fail and error
    [[nodiscard]] bool all_passed() const { return failed() == 0; }
    [[nodiscard]] const CheckRecord* find(std::string_view id) const;
};

struct AggregateReport {
    std::vector<CheckReport> suites;

    [[nodiscard]] std::size_t passed() const;
    [[nodiscard]] std::size_t failed() const;
    [[nodiscard]] bool all_passed() const { return failed() == 0; }
};

// {suite, checks: [{id, status, statement, witness?, ms}]}
[[nodiscard]] std::string to_json(const CheckReport& r, int indent = 2);
// {suites: [...], passed, failed}
[[nodiscard]] std::string to_json(const AggregateReport& r, int indent = 2);

// One line per check followed by "N passed, M failed".
[[nodiscard]] std::string to_text(const CheckReport& r);
[[nodiscard]] std::string to_text(const AggregateReport& r);

}  // namespace fanocert

#endif  // FANOCERT_REPORT_HPP
