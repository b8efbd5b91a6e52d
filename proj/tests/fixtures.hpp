#ifndef FANOCERT_TESTS_FIXTURES_HPP
#define FANOCERT_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "fanocert/actions.hpp"
#include "fanocert/catalog.hpp"
#include "fanocert/maps.hpp"
#include "fanocert/parser.hpp"

namespace fanocert::testing {

inline std::vector<std::string> names(const std::string& stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

struct Hirzebruch {
    Catalog cat = Catalog::standard();
    RegistryPtr reg = make_registry(World::hirzebruch);

    Polynomial P(const std::string& text) const { return parse_polynomial(text, reg); }
    Polynomial get(const std::string& name) const { return cat.get(name, reg); }

    ParametricAction action() const {
        ParametricAction::Spec spec;
        spec.params = {"a", "lam"};
        spec.identity = {Rational(0), Rational(1)};
        spec.units = {"lam"};
        spec.factors = {{"x0", "x1"}, {"y0", "y1"}};
        for (const char* c : {"x0", "x1", "y0", "y1"}) spec.images.emplace_back(c, get(std::string("action.") + c));
        return ParametricAction(reg, spec);
    }

    ParametricAction torus() const {
        Substitution s(reg);
        s.set("a", Rational(0));
        return action().specialized(s);
    }

    SectionSpace sections() const { return SectionSpace::complete(hirzebruch_grading(reg), {1, 1}); }

    SectionSpace wprime() const {
        return SectionSpace::graded(hirzebruch_grading(reg), cat.get_all(names("wprime.", 6), reg), {1, 1});
    }

    RationalMap psi() const {
        return RationalMap(reg, hirzebruch_grading(reg), names("w", 6), cat.get_all(names("psi.", 6), reg));
    }

    Substitution param(const std::string& which) const {
        Substitution s(reg);
        s.set("x0", P("t0")).set("x1", P("t1"));
        s.set("y0", get(which + ".param.y0")).set("y1", get(which + ".param.y1"));
        return s;
    }

    BinaryCurve curve(const std::string& which) const {
        return {param(which), reg->index("t0"), reg->index("t1")};
    }

    AffineChart chart() const {
        Substitution s(reg);
        s.set("x1", Rational(1)).set("y1", Rational(1));
        return {s, reg->index("x0"), reg->index("y0")};
    }
};

struct Quadric {
    Catalog cat = Catalog::standard();
    RegistryPtr reg = make_registry(World::quadric);

    Polynomial P(const std::string& text) const { return parse_polynomial(text, reg); }
    Polynomial get(const std::string& name) const { return cat.get(name, reg); }
    Polynomial fc() const { return get("fc"); }

    RationalMap map(const std::string& stem, bool modulo = true) const {
        return RationalMap(reg, {names("w", 5)}, names("w", 5), cat.get_all(names(stem, 5), reg),
                           modulo ? std::optional<Polynomial>(fc()) : std::nullopt);
    }

    ParametricAction torus() const {
        ParametricAction::Spec spec;
        spec.params = {"lam"};
        spec.identity = {Rational(1)};
        spec.units = {"lam"};
        spec.factors = {names("w", 5)};
        for (int k = 0; k < 5; ++k) spec.images.emplace_back("w" + std::to_string(k), get("torus.w" + std::to_string(k)));
        return ParametricAction(reg, spec);
    }
};

}  // namespace fanocert::testing

#endif  // FANOCERT_TESTS_FIXTURES_HPP
