#ifndef FANOCERT_SUITES_HPP
#define FANOCERT_SUITES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fanocert/catalog.hpp"
#include "fanocert/rational.hpp"
#include "fanocert/report.hpp"

namespace fanocert {

struct SuiteConfig {
    // Added to the built-in specializations {2, 3, -1} of the family parameter.
    std::vector<Rational> extra_v;
    // Run suites on worker threads; output order is unaffected.
    bool parallel = false;
};

[[nodiscard]] const std::vector<Rational>& default_specializations();

// Suite names in their fixed run order.
[[nodiscard]] const std::vector<std::string>& suite_names();
[[nodiscard]] bool is_suite_name(std::string_view name);

// Throws UsageError for an unknown suite name.
[[nodiscard]] CheckReport run_suite(std::string_view name, const SuiteConfig& config = {},
                                    const Catalog& catalog = Catalog::standard());

// Reports in the order of suite_names(), restricted to the requested names.
[[nodiscard]] AggregateReport run_suites(const std::vector<std::string>& names, const SuiteConfig& config = {},
                                         const Catalog& catalog = Catalog::standard());
[[nodiscard]] AggregateReport run_all(const SuiteConfig& config = {},
                                      const Catalog& catalog = Catalog::standard());

}  // namespace fanocert

#endif  // FANOCERT_SUITES_HPP
