#include <doctest.h>

#include "fanocert/catalog.hpp"
#include "fanocert/parser.hpp"
#include "fanocert/polynomial.hpp"

using namespace fanocert;

namespace {

RegistryPtr f3() { return make_registry(World::hirzebruch); }
RegistryPtr quad() { return make_registry(World::quadric); }
RegistryPtr pair() { return make_registry(World::lines_pair); }

Polynomial P(const RegistryPtr& reg, std::string_view text) { return parse_polynomial(text, reg); }

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.to_string() == "-3/2");
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational::from_string("-10/4") == Rational(-5, 2));
    CHECK_THROWS(Rational::from_string("1/0"));
    CHECK_THROWS(Rational::from_string("abc"));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("registry lookups") {
    auto reg = f3();
    CHECK(reg->index("x0") == 0);
    CHECK(reg->contains("eps"));
    CHECK_FALSE(reg->contains("zz"));
    CHECK(reg->at(reg->index("lam")).role == VarRole::group_parameter);
    CHECK_THROWS_AS((void)reg->index("zz"), UsageError);
}

TEST_CASE("difference of squares") {
    auto reg = f3();
    CHECK((P(reg, "x0 + x1") * P(reg, "x0 - x1")) == P(reg, "x0^2 - x1^2"));
}

TEST_CASE("binomial fourth power") {
    auto reg = f3();
    auto got = power(P(reg, "x1 + a*x0"), 4);
    CHECK(got == P(reg, "x1^4 + 4*a*x0*x1^3 + 6*a^2*x0^2*x1^2 + 4*a^3*x0^3*x1 + a^4*x0^4"));
    CHECK(power(P(reg, "x1"), 0) == Polynomial(reg, Rational(1)));
}

TEST_CASE("key cancellation leaves -x1^4") {
    auto reg = f3();
    auto Pa = P(reg, "a*x1^3 + (3/2)*a^2*x0*x1^2 + a^3*x0^2*x1 + (1/4)*a^4*x0^3");
    auto r = P(reg, "4*x0") * Pa - power(P(reg, "x1 + a*x0"), 4);
    CHECK(r == P(reg, "-x1^4"));
    CHECK(r.to_string() == "-x1^4");
}

TEST_CASE("registry mismatch is a usage error") {
    auto a = P(f3(), "x0");
    auto b = P(f3(), "x0");
    CHECK_THROWS_AS((void)(a + b), UsageError);
    CHECK_THROWS_AS((void)(a * b), UsageError);
}

TEST_CASE("substitute") {
    SUBCASE("f2 vanishes on the quartic") {
        auto reg = quad();
        Substitution s(reg);
        s.set("w0", P(reg, "t1^4")).set("w1", P(reg, "t1^3*t0")).set("w2", P(reg, "t1^2*t0^2"));
        CHECK(substitute(P(reg, "w0*w2 - w1^2"), s).is_zero());
    }
    SUBCASE("identity assignment") {
        auto reg = f3();
        auto f = P(reg, "4*x0*y1 - x1^4*y0 + v*x0^4*y0");
        CHECK(substitute(f, Substitution(reg)) == f);
        Substitution id(reg);
        for (std::size_t i = 0; i < reg->size(); ++i) id.set(i, Polynomial::variable(reg, i));
        CHECK(substitute(f, id) == f);
    }
    SUBCASE("torus and unipotent images") {
        auto reg = f3();
        Substitution s(reg);
        s.set("x1", P(reg, "x1 + a*x0")).set("y0", P(reg, "lam*y0"));
        CHECK(substitute(P(reg, "x1^4*y0"), s) == P(reg, "lam*(x1 + a*x0)^4*y0"));
    }
    SUBCASE("simultaneous, not sequential") {
        auto reg = f3();
        Substitution s(reg);
        s.set("x0", P(reg, "x1")).set("x1", P(reg, "x0"));
        CHECK(substitute(P(reg, "x0^2*x1"), s) == P(reg, "x1^2*x0"));
    }
}

TEST_CASE("exact_divide") {
    auto reg = quad();
    auto f2 = P(reg, "w0*w2 - w1^2");
    auto q = exact_divide(f2 * P(reg, "w3"), f2);
    REQUIRE(q);
    CHECK(*q == P(reg, "w3"));
    CHECK_FALSE(exact_divide(f2, P(reg, "w0")));
    CHECK_THROWS_AS((void)exact_divide(f2, Polynomial(reg)), UsageError);
    CHECK(exact_divide(Polynomial(reg), f2) == Polynomial(reg));
    auto r = exact_divide(P(reg, "3*w0"), P(reg, "2"));
    REQUIRE(r);
    CHECK(*r == P(reg, "3/2*w0"));
}

TEST_CASE("quadric image of j_Q is divisible by f_c") {
    auto reg = quad();
    auto cat = Catalog::standard();
    auto fc = cat.get("fc", reg);
    Substitution s(reg);
    for (int k = 0; k < 5; ++k) s.set("w" + std::to_string(k), cat.get("jq." + std::to_string(k), reg));
    auto img = substitute(fc, s);
    auto q = exact_divide(img, fc);
    REQUIRE(q);
    CHECK(*q * fc == img);
}

TEST_CASE("sl2 derivations on the weight basis") {
    auto reg = pair();
    Derivation F(reg), E(reg);
    F.set("x1", P(reg, "y1")).set("x2", P(reg, "y2"));
    E.set("y1", P(reg, "x1")).set("y2", P(reg, "x2"));
    auto e0 = P(reg, "x1^5*x2");
    auto e1 = P(reg, "x1^4*y1*x2 + 1/5*x1^5*y2");
    auto e6 = P(reg, "y1^5*y2");
    CHECK(apply_derivation(F, e0) == e1.scaled(Rational(5)));
    CHECK(apply_derivation(E, e0).is_zero());
    CHECK(apply_derivation(F, e6).is_zero());
    CHECK(apply_derivation(Derivation(reg), e0).is_zero());
}

TEST_CASE("partial derivatives") {
    auto reg = f3();
    CHECK(partial_derivative(P(reg, "x0^3*y1 + x1"), reg->index("x0")) == P(reg, "3*x0^2*y1"));
    CHECK(partial_derivative(P(reg, "7"), reg->index("x0")).is_zero());
}

TEST_CASE("coefficient_extract") {
    auto reg = f3();
    CHECK(coefficient_extract(P(reg, "y1 + eps*x1^3*y0"), "eps", 1) == P(reg, "x1^3*y0"));
    auto f = P(reg, "x0*y1 + a^2");
    CHECK(coefficient_extract(f, "eps", 0) == f);
    CHECK(coefficient_extract(P(reg, "(1 + eps)^4*w0"), "eps", 1) == P(reg, "4*w0"));
    CHECK(coefficient_extract(f, "eps", 3).is_zero());
}

TEST_CASE("monomial content") {
    auto reg = f3();
    std::vector<std::size_t> lam{reg->index("lam")};
    auto f = P(reg, "lam^3*a - lam^2*v");
    auto m = monomial_content(f, lam);
    CHECK(m[reg->index("lam")] == 2);
    CHECK(divide_by_monomial(f, m) == P(reg, "lam*a - v"));
}

TEST_CASE("parse and format") {
    auto reg = f3();
    SUBCASE("canonical form") {
        auto up = P(reg, "4*x0*y1 - x1^4*y0");
        CHECK(up == Polynomial::variable(reg, "x0") * Polynomial::variable(reg, "y1") * Polynomial(reg, Rational(4)) -
                        power(Polynomial::variable(reg, "x1"), 4) * Polynomial::variable(reg, "y0"));
        CHECK(P(reg, up.to_string()) == up);
    }
    SUBCASE("zero") {
        CHECK(P(reg, "0").is_zero());
        CHECK(P(reg, "0").to_string() == "0");
        CHECK(P(reg, "x0 - x0").to_string() == "0");
    }
    SUBCASE("rational coefficient") {
        auto t = P(reg, "(3/2)*a^2*x0*x1^2");
        CHECK(t.num_terms() == 1);
        CHECK(t.leading_coefficient() == Rational(3, 2));
        CHECK(t.to_string() == "3/2*x0*x1^2*a^2");
    }
    SUBCASE("whitespace and unary minus") {
        CHECK(P(reg, " - ( x0 +x1 ) ^2 ") == P(reg, "-x0^2 - 2*x0*x1 - x1^2"));
        CHECK(P(reg, "-3/4") == Polynomial(reg, Rational(-3, 4)));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(P(reg, "x0^"), ParseError);
        CHECK_THROWS_AS(P(reg, "x0 +"), ParseError);
        CHECK_THROWS_AS(P(reg, "(x0"), ParseError);
        CHECK_THROWS_AS(P(reg, "x0 $ x1"), ParseError);
        CHECK_THROWS_AS(P(reg, "1/0"), ParseError);
        CHECK_THROWS_AS(P(reg, "unknown_var"), ParseError);
        try {
            (void)P(reg, "x0 + ^");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position() == 5);
        }
    }
    SUBCASE("identifier scan") {
        auto ids = scan_identifiers("4*x0*P - (x1+a*x0)^4");
        CHECK(ids == std::vector<std::string>{"x0", "P", "x1", "a"});
    }
}

TEST_CASE("degrees and homogeneity") {
    auto reg = f3();
    auto f = P(reg, "x0^2*y1 + x1^3");
    CHECK(f.total_degree() == 3);
    CHECK(f.is_homogeneous());
    CHECK(f.degree_in(reg->index("x0")) == 2);
    CHECK_FALSE(P(reg, "x0 + 1").is_homogeneous());
    CHECK(P(reg, "3*x0 - 6*x1").monic() == P(reg, "x0 - 2*x1"));
}
