#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "fanocert/sections.hpp"

using namespace fanocert;
using namespace fanocert::testing;

TEST_CASE("monomial_basis") {
    Hirzebruch h;
    auto g = hirzebruch_grading(h.reg);
    SUBCASE("bidegree (1,1) on F3") {
        auto basis = monomial_basis(g, {1, 1});
        REQUIRE(basis.size() == 7);
        std::set<std::string> got;
        for (const auto& m : basis) got.insert(Polynomial::term(h.reg, m, Rational(1)).to_string());
        std::set<std::string> want;
        for (const char* t : {"x0*y1", "x1*y1", "x0^4*y0", "x0^3*x1*y0", "x0^2*x1^2*y0", "x0*x1^3*y0", "x1^4*y0"})
            want.insert(h.P(t).to_string());
        CHECK(got == want);
        for (const auto& m : basis) CHECK(g.degree(m) == Multidegree{1, 1});
    }
    SUBCASE("bidegree (0,0)") {
        auto basis = monomial_basis(g, {0, 0});
        REQUIRE(basis.size() == 1);
        CHECK(basis[0].is_one());
    }
    SUBCASE("binary quintics") {
        Grading binary(h.reg, {{"t0", {1}}, {"t1", {1}}});
        auto basis = monomial_basis(binary, {5});
        CHECK(basis.size() == 6);
        for (const auto& m : basis) CHECK(m.total_degree() == 5);
    }
    SUBCASE("unbounded cone") {
        Grading bad(h.reg, {{"x0", {1}}, {"x1", {-1}}});
        CHECK_THROWS_AS((void)monomial_basis(bad, {0}), UsageError);
    }
    SUBCASE("no extra monomials in a bounding box") {
        for (const Multidegree& d : {Multidegree{1, 1}, Multidegree{2, 1}, Multidegree{0, 2}, Multidegree{5, 1}}) {
            auto basis = monomial_basis(g, d);
            std::size_t brute = 0;
            const auto vars = g.variables();
            std::vector<std::uint32_t> e(h.reg->size(), 0);
            for (e[vars[0]] = 0; e[vars[0]] <= 12; ++e[vars[0]])
                for (e[vars[1]] = 0; e[vars[1]] <= 12; ++e[vars[1]])
                    for (e[vars[2]] = 0; e[vars[2]] <= 4; ++e[vars[2]])
                        for (e[vars[3]] = 0; e[vars[3]] <= 4; ++e[vars[3]])
                            if (g.degree(Monomial(e)) == d) ++brute;
            CHECK(brute == basis.size());
        }
    }
}

TEST_CASE("torus_weight") {
    auto reg = make_registry(World::lines_pair);
    auto w = torus_weights(reg, {{"x1", 1}, {"x2", 1}});
    CHECK(torus_weight(parse_polynomial("x1^5*x2", reg).leading_term().first, w) == 6);
    CHECK(torus_weight(Monomial(reg->size()), w) == 0);
    CHECK(torus_weight(parse_polynomial("x1*y1 + x2*y2", reg), w) == 1);
    CHECK_FALSE(torus_weight(parse_polynomial("x1 + y1", reg), w));

    Hirzebruch h;
    auto wh = torus_weights(h.reg, {{"x0", 1}, {"y0", 1}});
    CHECK(torus_weight(h.P("x0^4*y0").leading_term().first, wh) == 5);
}

TEST_CASE("weight_decompose") {
    SUBCASE("the 7-dimensional module") {
        auto cat = Catalog::standard();
        auto reg = make_registry(World::lines_pair);
        SectionSpace W(reg, cat.get_all(names("e", 7), reg));
        auto parts = weight_decompose(W, torus_weights(reg, {{"x1", 1}, {"x2", 1}}));
        REQUIRE(parts.size() == 7);
        for (long k = 0; k <= 6; ++k) {
            REQUIRE(parts.count(k) == 1);
            CHECK(parts.at(k).dimension() == 1);
            CHECK(parts.at(k)[0] == W[static_cast<std::size_t>(6 - k)]);
        }
    }
    SUBCASE("sections of O(1,1) on F3") {
        Hirzebruch h;
        auto S = h.sections();
        auto parts = weight_decompose(S, torus_weights(h.reg, {{"x0", 1}, {"y0", 1}}));
        REQUIRE(parts.count(1) == 1);
        CHECK(parts.at(1).dimension() == 2);
        SectionSpace expected(h.reg, {h.P("x0*y1"), h.P("x1^4*y0")});
        CHECK(same_span(parts.at(1), expected));
        std::size_t total = 0;
        for (const auto& [k, part] : parts) total += part.dimension();
        CHECK(total == S.dimension());
    }
    SUBCASE("single monomial") {
        Hirzebruch h;
        SectionSpace one(h.reg, {h.P("x0^4*y0")});
        CHECK(weight_decompose(one, torus_weights(h.reg, {{"x0", 1}})).size() == 1);
    }
    SUBCASE("mixed weight element") {
        Hirzebruch h;
        SectionSpace mixed(h.reg, {h.P("x0*y1 + x1*y1")});
        CHECK_THROWS_AS((void)weight_decompose(mixed, torus_weights(h.reg, {{"x0", 1}})), UsageError);
    }
}

TEST_CASE("section spaces check independence and degree") {
    Hirzebruch h;
    CHECK_THROWS_AS(SectionSpace(h.reg, {h.P("x0*y1"), h.P("2*x0*y1")}), UsageError);
    CHECK_THROWS_AS(SectionSpace::graded(hirzebruch_grading(h.reg), {h.P("x0*y1 + x0")}, {1, 1}), UsageError);
    CHECK(h.wprime().dimension() == 6);
    CHECK(contained_in(h.wprime(), h.sections()));
    CHECK_FALSE(contained_in(h.sections(), h.wprime()));
}

TEST_CASE("kernel and rank") {
    Hirzebruch h;
    SUBCASE("identity") {
        ExactMatrix m(h.reg, 3, 3);
        for (std::size_t i = 0; i < 3; ++i) m(i, i) = Polynomial(h.reg, Rational(1));
        auto k = kernel(m);
        CHECK(k.rank == 3);
        CHECK(k.basis.empty());
        CHECK(rank(m) == 3);
    }
    SUBCASE("zero matrix") {
        ExactMatrix m(h.reg, 2, 4);
        CHECK(kernel(m).basis.size() == 4);
    }
    SUBCASE("parameter entries are generic") {
        ExactMatrix m(h.reg, 2, 2);
        m(0, 0) = h.P("v");
        m(0, 1) = h.P("1");
        m(1, 0) = h.P("1");
        m(1, 1) = h.P("1");
        auto k = kernel(m);
        CHECK(k.rank == 2);
        CHECK(k.generic_only());
    }
    SUBCASE("restriction difference on O(1,1)") {
        // both s0 and f0 are identified with the line [w0 : w1]
        auto S = h.sections();
        Substitution on_s0(h.reg), on_f0(h.reg);
        on_s0.set("y0", Rational(0)).set("y1", Rational(1)).set("x0", h.P("w0")).set("x1", h.P("w1"));
        on_f0.set("x0", Rational(0)).set("x1", Rational(1)).set("y0", h.P("w0")).set("y1", h.P("w1"));
        std::vector<Polynomial> cols;
        for (const auto& b : S.basis()) cols.push_back(substitute(b, on_s0) - substitute(b, on_f0));
        auto cm = coefficient_matrix(h.reg, cols);
        auto k = kernel(cm.matrix);
        REQUIRE(k.basis.size() == 6);
        std::vector<Polynomial> polys;
        for (const auto& v : k.basis) polys.push_back(S.combine(v));
        CHECK(same_span(SectionSpace(h.reg, polys), h.wprime()));
    }
}

TEST_CASE("coords_in_space") {
    Hirzebruch h;
    auto S = h.sections();
    auto c = coords_in_space(h.get("upsilon_p"), S);
    REQUIRE(c);
    CHECK(S.combine(*c) == h.get("upsilon_p"));
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < S.dimension(); ++i) {
        if ((*c)[i].is_zero()) continue;
        ++nonzero;
        if (S[i] == h.P("x0*y1")) CHECK((*c)[i] == Polynomial(h.reg, Rational(4)));
        if (S[i] == h.P("x1^4*y0")) CHECK((*c)[i] == Polynomial(h.reg, Rational(-1)));
    }
    CHECK(nonzero == 2);

    auto w = coords_in_space(h.P("x0*y1 + x1^4*y0"), h.wprime());
    REQUIRE(w);
    CHECK((*w)[1] == Polynomial(h.reg, Rational(1)));
    for (std::size_t i : {0u, 2u, 3u, 4u, 5u}) CHECK((*w)[i].is_zero());

    CHECK_FALSE(coords_in_space(h.P("x0*y1 + x0^2"), S));
    CHECK_FALSE(coords_in_space(h.P("x1^4*y0"), h.wprime()));

    auto t = coords_in_space(h.get("upsilon_T"), S);
    REQUIRE(t);
    CHECK(S.combine(*t) == h.get("upsilon_T"));
}

TEST_CASE("restricted_order_subspace") {
    Hirzebruch h;
    auto S = h.sections();
    auto curve = h.curve("upsilon_p");
    const auto inf = P1Point::infinity();
    const auto zero = P1Point::affine(0);

    SUBCASE("order 4 at r and 1 at p") {
        auto V = restricted_order_subspace(S, curve, {{inf, 4}, {zero, 1}});
        CHECK(V.dimension() == 2);
        CHECK(coords_in_space(h.get("upsilon_p"), V));
        CHECK(coords_in_space(h.P("x0*y1"), V));
        CHECK(contained_in(V, S));
        auto W = restricted_order_subspace(S, curve, {{zero, 1}, {inf, 4}});
        CHECK(same_span(V, W));
    }
    SUBCASE("order 5 at p") {
        auto V = restricted_order_subspace(S, curve, {{zero, 5}});
        CHECK(V.dimension() == 2);
        CHECK(coords_in_space(h.get("upsilon_p"), V));
        CHECK(coords_in_space(h.P("x0^4*y0"), V));
    }
    SUBCASE("order beyond the degree") {
        auto V = restricted_order_subspace(S, curve, {{zero, 6}});
        CHECK(V.dimension() == 1);
        CHECK(coords_in_space(h.get("upsilon_p"), V));
    }
    SUBCASE("general point") {
        auto V = restricted_order_subspace(S, curve, {{P1Point::affine(1), 2}});
        CHECK(V.dimension() == S.dimension() - 2);
        CHECK(contained_in(V, S));
    }
}

TEST_CASE("vanishing order") {
    Hirzebruch h;
    auto t0 = h.reg->index("t0"), t1 = h.reg->index("t1");
    CHECK(vanishing_order(h.P("t0^2*t1^3"), t0, t1, P1Point::affine(0)) == 2u);
    CHECK(vanishing_order(h.P("t0^2*t1^3"), t0, t1, P1Point::infinity()) == 3u);
    CHECK(vanishing_order(h.P("(t0 - 2*t1)^3*t1"), t0, t1, P1Point::affine(2)) == 3u);
    CHECK_FALSE(vanishing_order(Polynomial(h.reg), t0, t1, P1Point::affine(0)));
}
