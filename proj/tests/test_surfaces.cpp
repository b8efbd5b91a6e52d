#include <doctest.h>

#include "fanocert/registry.hpp"
#include "fanocert/surfaces.hpp"

using namespace fanocert;

TEST_CASE("intersect") {
    const DivisorClass H{3, 1, 4};
    CHECK(intersect(H, H) == 5);
    for (long e = 0; e <= 5; ++e) CHECK(intersect(negative_section(e), negative_section(e)) == -e);
    CHECK(intersect(H, DivisorClass{3, 1, 3}) == 4);
    CHECK(intersect(fiber(2), fiber(2)) == 0);
    CHECK(intersect(fiber(2), negative_section(2)) == 1);
    CHECK_THROWS_AS((void)intersect(fiber(1), fiber(3)), UsageError);
}

TEST_CASE("intersect is symmetric and bilinear") {
    for (long e = 0; e <= 4; ++e) {
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 3; ++b)
                for (long c = -1; c <= 2; ++c)
                    for (long d = -2; d <= 2; ++d) {
                        DivisorClass x{e, a, b}, y{e, c, d}, z{e, b, a};
                        CHECK(intersect(x, y) == intersect(y, x));
                        CHECK(intersect(x + z, y) == intersect(x, y) + intersect(z, y));
                        CHECK(intersect(3 * x, y) == 3 * intersect(x, y));
                    }
    }
}

TEST_CASE("canonical class") {
    CHECK(canonical_class(3) == DivisorClass{3, -2, -5});
    CHECK(canonical_class(1) == DivisorClass{1, -2, -3});
    CHECK(-canonical_class(3) - DivisorClass{3, 1, 1} == DivisorClass{3, 1, 4});
}

TEST_CASE("adjunction genus") {
    CHECK(adjunction_genus(DivisorClass{3, 1, 4}) == Rational(0));
    CHECK(adjunction_genus(DivisorClass{3, 2, 8}) == Rational(4));
    for (long e = 0; e <= 5; ++e) {
        CHECK(adjunction_genus(fiber(e)) == Rational(0));
        CHECK(adjunction_genus(negative_section(e)) == Rational(0));
    }
    for (long e = 0; e <= 5; ++e)
        for (long a = -3; a <= 4; ++a)
            for (long b = -3; b <= 9; ++b) {
                DivisorClass D{e, a, b};
                auto K = canonical_class(e);
                CHECK(Rational(2) * (adjunction_genus(D) - Rational(1)) == Rational(intersect(D, D) + intersect(D, K)));
            }
}

TEST_CASE("degree pairing and class elimination") {
    CHECK(degree_pairing_check(1, 4) == 5);
    CHECK(degree_pairing_check(0, 5) == 5);
    CHECK(degree_pairing_check(5, 0) == 5);
    CHECK(is_irreducible_class(DivisorClass{3, 1, 4}));
    CHECK(is_irreducible_class(negative_section(3)));
    CHECK(is_irreducible_class(fiber(3)));
    CHECK_FALSE(is_irreducible_class(DivisorClass{3, 5, 0}));
    CHECK_FALSE(is_irreducible_class(DivisorClass{3, 0, 5}));
    CHECK_FALSE(is_irreducible_class(DivisorClass{3, 1, 2}));
    auto found = rational_classes_of_degree(3, DivisorClass{3, 1, 4}, 5);
    CHECK(found == std::vector<std::pair<long, long>>{{1, 4}});
    CHECK(DivisorClass{3, 1, 4}.to_string() == "1s + 4f on F_3");
}
