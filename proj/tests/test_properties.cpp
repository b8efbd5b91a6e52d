#include <doctest.h>

#include "property_checks.hpp"

TEST_CASE("randomized algebraic properties") {
    for (const auto& r : fanocert::testing::run_properties(20240901, 1000)) {
        CAPTURE(r.name);
        CAPTURE(r.first_failure);
        CHECK(r.instances >= 1000);
        CHECK(r.failures == 0);
    }
}
