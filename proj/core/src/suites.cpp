#include "fanocert/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "fanocert/actions.hpp"
#include "fanocert/maps.hpp"
#include "fanocert/parser.hpp"
#include "fanocert/sections.hpp"
#include "fanocert/surfaces.hpp"

namespace fanocert {

namespace {

struct Outcome {
    bool ok = false;
    std::optional<std::string> witness;
};

Outcome pass() { return {true, std::nullopt}; }
Outcome fail(std::string witness) { return {false, std::move(witness)}; }
Outcome expect(bool cond, const std::string& witness) { return cond ? pass() : fail(witness); }

Outcome from_verdict(const Verdict& v) {
    if (v.holds) return pass();
    std::string w = v.witness ? v.witness->to_string() : std::string("(no polynomial witness)");
    if (!v.detail.empty()) w += " [" + v.detail + "]";
    return fail(w);
}

Outcome equal_polys(const Polynomial& got, const Polynomial& want) {
    auto diff = got - want;
    return expect(diff.is_zero(), diff.to_string());
}

Outcome vanishes(const Polynomial& p) { return expect(p.is_zero(), p.to_string()); }

bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
}

class Runner {
public:
    explicit Runner(std::string suite) { report_.suite = std::move(suite); }

    void check(std::string id, std::string statement, const std::function<Outcome()>& body) {
        CheckRecord rec;
        rec.id = std::move(id);
        rec.statement = std::move(statement);
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = body();
            rec.status = o.ok ? CheckStatus::pass : CheckStatus::fail;
            rec.witness = std::move(o.witness);
            if (!o.ok && !rec.witness) rec.witness = "(none)";
        } catch (const std::exception& e) {
            rec.status = CheckStatus::error;
            rec.witness = e.what();
        }
        rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report_.checks.push_back(std::move(rec));
    }

    CheckReport take() { return std::move(report_); }

private:
    CheckReport report_;
};

std::string idx(const char* stem, std::size_t i) { return stem + std::to_string(i); }

std::vector<std::string> names(const char* stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(idx(stem, i));
    return out;
}

std::vector<Rational> specializations(const SuiteConfig& cfg) {
    std::vector<Rational> out = default_specializations();
    for (const auto& v : cfg.extra_v)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

Polynomial at_v(const Polynomial& f, const Rational& v) {
    Substitution s(f.registry());
    s.set("v", v);
    return substitute(f, s);
}

// ---- the 7-dimensional module on P^1 x P^1 --------------------------------

ParametricAction borel_on_pair(const Catalog& cat, const RegistryPtr& reg) {
    ParametricAction::Spec spec;
    spec.params = {"a", "lam"};
    spec.identity = {Rational(0), Rational(1)};
    spec.units = {"lam"};
    spec.factors = {{"x1", "y1"}, {"x2", "y2"}};
    for (const char* c : {"x1", "y1", "x2", "y2"}) spec.images.emplace_back(c, cat.get(std::string("borel.") + c, reg));
    return ParametricAction(reg, spec);
}

ParametricAction opposite_on_pair(const Catalog& cat, const RegistryPtr& reg) {
    ParametricAction::Spec spec;
    spec.params = {"b"};
    spec.identity = {Rational(0)};
    spec.factors = {{"x1", "y1"}, {"x2", "y2"}};
    for (const char* c : {"x1", "y1", "x2", "y2"})
        spec.images.emplace_back(c, cat.get(std::string("opposite.") + c, reg));
    return ParametricAction(reg, spec);
}

// c with d(f) = c * f, if f is an eigenvector of d.
std::optional<Rational> eigenvalue(const Derivation& d, const Polynomial& f) {
    auto df = apply_derivation(d, f);
    const auto [m, lc] = f.leading_term();
    Rational c = df.coefficient(m) / lc;
    if (!(df - f.scaled(c)).is_zero()) return std::nullopt;
    return c;
}

CheckReport w_module(const Catalog& cat, const SuiteConfig&) {
    Runner run("w-module");
    auto reg = make_registry(World::lines_pair);
    auto grading = lines_pair_grading(reg);
    const auto e = cat.get_all(names("e", 7), reg);

    run.check("basis.bidegree", "each e_i is bihomogeneous of bidegree (5,1)", [&] {
        for (std::size_t i = 0; i < 7; ++i) {
            auto d = grading.degree(e[i]);
            if (!d || *d != Multidegree{5, 1}) return fail(idx("e", i) + " = " + e[i].to_string());
        }
        return pass();
    });
    run.check("basis.independent", "e_0, ..., e_6 are linearly independent", [&] {
        auto r = rank(coefficient_matrix(reg, e).matrix);
        return expect(r == 7, "rank " + std::to_string(r));
    });
    run.check("borel.identity", "the Borel substitutions act trivially at a = 0, lam = 1", [&] {
        (void)borel_on_pair(cat, reg);
        (void)opposite_on_pair(cat, reg);
        return pass();
    });

    std::vector<Rational> weights;
    run.check("weights.eigenvectors", "each e_i is an eigenvector of the torus generator H", [&] {
        const auto H = lie_derivation(borel_on_pair(cat, reg), "lam");
        for (std::size_t i = 0; i < 7; ++i) {
            auto w = eigenvalue(H, e[i]);
            if (!w) return fail("H(" + idx("e", i) + ") = " + apply_derivation(H, e[i]).to_string());
            weights.push_back(*w);
        }
        return pass();
    });
    run.check("weights.consecutive", "the weights are 7 consecutive integers, strictly monotone in i", [&] {
        if (weights.size() != 7) return fail("weights unavailable");
        std::string list;
        for (const auto& w : weights) list += w.to_string() + " ";
        const Rational step = weights[1] - weights[0];
        if (step != Rational(1) && step != Rational(-1)) return fail(list);
        for (std::size_t i = 0; i + 1 < 7; ++i)
            if (weights[i + 1] - weights[i] != step || !weights[i].is_integer()) return fail(list);
        return pass();
    });
    run.check("weights.convention", "with H = x1 d/dx1 + x2 d/dx2 the weight of e_i is 6 - i", [&] {
        if (weights.size() != 7) return fail("weights unavailable");
        for (std::size_t i = 0; i < 7; ++i)
            if (weights[i] != Rational(6 - static_cast<long>(i)))
                return fail(idx("e", i) + " has weight " + weights[i].to_string());
        return pass();
    });

    static const Rational lower[6] = {Rational(5), Rational(4), Rational(3), Rational(4), Rational(5, 2), Rational(6, 5)};
    static const Rational raise[6] = {Rational(6, 5), Rational(5, 2), Rational(4), Rational(3), Rational(4), Rational(5)};

    run.check("sl2.E-kills-e0", "E e_0 = 0", [&] {
        return vanishes(apply_derivation(lie_derivation(borel_on_pair(cat, reg), "a"), e[0]));
    });
    run.check("sl2.F-kills-e6", "F e_6 = 0", [&] {
        return vanishes(apply_derivation(lie_derivation(opposite_on_pair(cat, reg), "b"), e[6]));
    });
    run.check("sl2.F-lowers", "F e_i = c_i e_(i+1) with (c_i) = (5, 4, 3, 4, 5/2, 6/5)", [&] {
        const auto F = lie_derivation(opposite_on_pair(cat, reg), "b");
        for (std::size_t i = 0; i < 6; ++i) {
            auto r = apply_derivation(F, e[i]) - e[i + 1].scaled(lower[i]);
            if (!r.is_zero()) return fail("F " + idx("e", i) + ": " + r.to_string());
        }
        return pass();
    });
    run.check("sl2.E-raises", "E e_i = d_i e_(i-1) with (d_i) = (6/5, 5/2, 4, 3, 4, 5)", [&] {
        const auto E = lie_derivation(borel_on_pair(cat, reg), "a");
        for (std::size_t i = 1; i < 7; ++i) {
            auto r = apply_derivation(E, e[i]) - e[i - 1].scaled(raise[i - 1]);
            if (!r.is_zero()) return fail("E " + idx("e", i) + ": " + r.to_string());
        }
        return pass();
    });
    run.check("sl2.closed", "span(e_i) is stable under E, F and H", [&] {
        SectionSpace W(reg, e);
        const auto borel = borel_on_pair(cat, reg);
        for (const auto& d : {lie_derivation(borel, "a"), lie_derivation(borel, "lam"),
                              lie_derivation(opposite_on_pair(cat, reg), "b")})
            if (!derivation_preserves_space(d, W).preserved) return fail(d.to_string());
        return pass();
    });
    return run.take();
}

CheckReport borel_line(const Catalog& cat, const SuiteConfig&) {
    Runner run("borel-line");
    auto reg = make_registry(World::lines_pair);
    const auto e = cat.get_all(names("e", 7), reg);

    run.check("lines.unique", "the only Borel-semi-invariant line of W is <e_0>", [&] {
        const auto borel = borel_on_pair(cat, reg);
        SectionSpace W(reg, e);
        auto lines = semi_invariant_lines(W, lie_derivation(borel, "lam"), lie_derivation(borel, "a"));
        std::string found;
        for (const auto& l : lines) found += "<" + l.to_string() + "> ";
        return expect(lines.size() == 1 && proportional(lines[0], e[0]), found.empty() ? "none" : found);
    });
    run.check("e0.factor", "g.e_0 = lam^6 e_0 for the Borel subgroup", [&] {
        auto s = semi_invariance_factor(borel_on_pair(cat, reg), e[0]);
        if (!s) return fail("e0 is not semi-invariant");
        return equal_polys(*s, power(Polynomial::variable(reg, "lam"), 6));
    });
    run.check("others.not-semi-invariant", "e_1, ..., e_6 are not Borel-semi-invariant", [&] {
        const auto borel = borel_on_pair(cat, reg);
        for (std::size_t i = 1; i < 7; ++i)
            if (semi_invariance_factor(borel, e[i])) return fail(idx("e", i) + " is semi-invariant");
        return pass();
    });
    return run.take();
}

// ---- F_3 ------------------------------------------------------------------

ParametricAction hirzebruch_action(const Catalog& cat, const RegistryPtr& reg) {
    ParametricAction::Spec spec;
    spec.params = {"a", "lam"};
    spec.identity = {Rational(0), Rational(1)};
    spec.units = {"lam"};
    spec.factors = {{"x0", "x1"}, {"y0", "y1"}};
    for (const char* c : {"x0", "x1", "y0", "y1"}) spec.images.emplace_back(c, cat.get(std::string("action.") + c, reg));
    return ParametricAction(reg, spec);
}

ParametricAction torus_of(const ParametricAction& g) {
    Substitution s(g.registry());
    s.set("a", Rational(0));
    return g.specialized(s);
}

SectionSpace sections_11(const RegistryPtr& reg) {
    return SectionSpace::complete(hirzebruch_grading(reg), {1, 1});
}

Substitution upsilon_param(const Catalog& cat, const RegistryPtr& reg, const std::string& which) {
    Substitution s(reg);
    s.set("x0", Polynomial::variable(reg, "t0"));
    s.set("x1", Polynomial::variable(reg, "t1"));
    s.set("y0", cat.get(which + ".param.y0", reg));
    s.set("y1", cat.get(which + ".param.y1", reg));
    return s;
}

RationalMap psi_map(const Catalog& cat, const RegistryPtr& reg) {
    return RationalMap(reg, hirzebruch_grading(reg), names("w", 6), cat.get_all(names("psi.", 6), reg));
}

CheckReport g_action(const Catalog& cat, const SuiteConfig&) {
    Runner run("g-action");
    auto reg = make_registry(World::hirzebruch);
    auto var = [&](const char* n) { return Polynomial::variable(reg, n); };

    run.check("action.identity", "the action is trivial at a = 0, lam = 1", [&] {
        (void)hirzebruch_action(cat, reg);
        return pass();
    });
    run.check("law.holds", "(a', lam').((a, lam).x) = (a + lam a', lam' lam).x with all parameters formal", [&] {
        GroupLaw law{{"ap", "lamp"}, {cat.get("law.a", reg), cat.get("law.lam", reg)}};
        return from_verdict(verify_group_law(hirzebruch_action(cat, reg), law));
    });
    std::string wrong_witness;
    run.check("law.wrong-fails", "the law (a + a', lam' lam) is rejected with a nonzero witness", [&] {
        GroupLaw law{{"ap", "lamp"}, {var("a") + var("ap"), var("lamp") * var("lam")}};
        auto v = verify_group_law(hirzebruch_action(cat, reg), law);
        if (v.holds) return fail("wrong law accepted");
        if (!v.witness || v.witness->is_zero()) return fail("no witness");
        return pass();
    });
    run.check("law.key-cancellation", "4 x0 P - (x1 + a x0)^4 = -x1^4 for the y0-coefficient P of the y1 image", [&] {
        const auto action = hirzebruch_action(cat, reg);
        auto P = coefficient_extract(action.image(reg->index("y1")), "y0", 1);
        auto lhs = Polynomial(reg, Rational(4)) * var("x0") * P - power(var("x1") + var("a") * var("x0"), 4);
        return equal_polys(lhs, -power(var("x1"), 4));
    });
    run.check("s0.stable", "s0 = {y0 = 0} is G-stable", [&] {
        return expect(semi_invariance_factor(hirzebruch_action(cat, reg), var("y0")).has_value(), "y0");
    });
    run.check("f0.stable", "f0 = {x0 = 0} is G-stable", [&] {
        return expect(semi_invariance_factor(hirzebruch_action(cat, reg), var("x0")).has_value(), "x0");
    });
    for (const char* c : {"y1", "x1"}) {
        const std::string name = std::string(c) == "y1" ? "s-inf" : "f-inf";
        run.check(name + ".torus-only", std::string("{") + c + " = 0} is T-stable but not Ga-stable", [&, c] {
            const auto g = hirzebruch_action(cat, reg);
            if (!semi_invariance_factor(torus_of(g), var(c))) return fail(std::string(c) + " not T-stable");
            return expect(!semi_invariance_factor(g, var(c)), act_on_section(g, var(c)).to_string());
        });
    }
    return run.take();
}

CheckReport semi_invariants_11(const Catalog& cat, const SuiteConfig&) {
    Runner run("semi-invariants-11");
    auto reg = make_registry(World::hirzebruch);
    auto var = [&](const char* n) { return Polynomial::variable(reg, n); };
    const auto up = cat.get("upsilon_p", reg);
    const auto x04y0 = power(var("x0"), 4) * var("y0");

    run.check("sections.dimension", "H0(O(s0 + 4f0)) has the 7 monomials of bidegree (1,1)", [&] {
        auto n = monomial_basis(hirzebruch_grading(reg), {1, 1}).size();
        return expect(n == 7, std::to_string(n) + " monomials");
    });
    run.check("upsilon-p.bidegree", "Upsilon_p has bidegree (1,1)", [&] {
        return expect(hirzebruch_grading(reg).degree(up) == Multidegree{1, 1}, up.to_string());
    });
    run.check("lines.exact", "the semi-invariant lines are exactly <x0^4 y0> and <4 x0 y1 - x1^4 y0>", [&] {
        const auto g = hirzebruch_action(cat, reg);
        auto lines = semi_invariant_lines(sections_11(reg), lie_derivation(g, "lam"), lie_derivation(g, "a"));
        std::string found;
        for (const auto& l : lines) found += "<" + l.to_string() + "> ";
        bool ok = lines.size() == 2;
        for (const auto& want : {x04y0, up}) {
            ok = ok && std::any_of(lines.begin(), lines.end(), [&](const Polynomial& l) { return proportional(l, want); });
        }
        return expect(ok, found);
    });
    run.check("upsilon-p.factor", "g.Upsilon_p = lam Upsilon_p", [&] {
        auto s = semi_invariance_factor(hirzebruch_action(cat, reg), up);
        if (!s) return fail(act_on_section(hirzebruch_action(cat, reg), up).to_string());
        return equal_polys(*s, var("lam"));
    });
    run.check("x0^4y0.factor", "g.(x0^4 y0) = lam^5 x0^4 y0", [&] {
        auto s = semi_invariance_factor(hirzebruch_action(cat, reg), x04y0);
        if (!s) return fail("not semi-invariant");
        return equal_polys(*s, power(var("lam"), 5));
    });
    run.check("upsilon-p.irreducible", "Upsilon_p is irreducible: its y0 and y1 coefficients are coprime", [&] {
        auto A = coefficient_extract(up, "y1", 1);
        auto B = coefficient_extract(up, "y0", 1);
        if (!(up - A * var("y1") - B * var("y0")).is_zero()) return fail(up.to_string());
        return expect(binary_forms_coprime({A, B}, reg->index("x0"), reg->index("x1")),
                      A.to_string() + ", " + B.to_string());
    });
    run.check("x0^4y0.reducible", "x0^4 y0 is the reducible member s0 + 4 f0", [&] {
        return expect(exact_divide(x04y0, power(var("x0"), 4)) == std::optional<Polynomial>(var("y0")), x04y0.to_string());
    });
    return run.take();
}

CheckReport stabilizers(const Catalog& cat, const SuiteConfig& cfg) {
    Runner run("stabilizers");
    auto reg = make_registry(World::hirzebruch);
    auto var = [&](const char* n) { return Polynomial::variable(reg, n); };
    const auto up = cat.get("upsilon_p", reg);
    const auto uT = cat.get("upsilon_T", reg);
    const auto ua = cat.get("upsilon_a", reg);
    const auto a = var("a");
    const auto lam4m1 = power(var("lam"), 4) - Rational(1);

    auto conds = [&](const Polynomial& f) {
        return stabilizer_conditions(f, hirzebruch_action(cat, reg), sections_11(reg));
    };
    auto principal = [&](const Polynomial& f, const Polynomial& gen) {
        auto c = conds(f);
        std::string list;
        for (const auto& g : c.generators) list += "(" + g.to_string() + ") ";
        return expect(conditions_equal_principal(c, gen, hirzebruch_action(cat, reg).units()),
                      list.empty() ? "no conditions" : list);
    };
    auto trivial = [&](const Polynomial& f) {
        auto c = conds(f);
        return expect(c.trivial(), c.trivial() ? "" : c.generators.front().to_string());
    };

    run.check("upsilon-T.principal", "stabilizer conditions of Upsilon^T(v) are generated by a (v + 4)",
              [&] { return principal(uT, a * (var("v") + Rational(4))); });
    run.check("upsilon-a.principal", "stabilizer conditions of Upsilon^a(v) are generated by v (lam^4 - 1)",
              [&] { return principal(ua, var("v") * lam4m1); });
    run.check("upsilon-a.not-lam-minus-1", "the generator v (lam - 1) is rejected for Upsilon^a(v)", [&] {
        return expect(!conditions_equal_principal(conds(ua), var("v") * (var("lam") - Rational(1)),
                                                  hirzebruch_action(cat, reg).units()),
                      "accepted");
    });
    run.check("upsilon-T.torus-stable", "every Upsilon^T(v) is stable under the torus a = 0", [&] {
        Substitution s(reg);
        s.set("a", Rational(0));
        for (const auto& g : conds(uT).generators)
            if (!substitute(g, s).is_zero()) return fail(g.to_string());
        return pass();
    });

    for (const auto& v : specializations(cfg)) {
        const std::string vs = v.to_string();
        if (v == Rational(-4)) {
            run.check("upsilon-T.v=" + vs, "Upsilon^T(-4) is G-stable", [&, v] { return trivial(at_v(uT, v)); });
        } else {
            run.check("upsilon-T.v=" + vs, "stabilizer of Upsilon^T(" + vs + ") is cut out by a = 0",
                      [&, v] { return principal(at_v(uT, v), a); });
        }
        if (v == Rational(0)) {
            run.check("upsilon-a.v=" + vs, "Upsilon^a(0) is G-stable", [&, v] { return trivial(at_v(ua, v)); });
        } else {
            run.check("upsilon-a.v=" + vs, "stabilizer of Upsilon^a(" + vs + ") is cut out by lam^4 = 1",
                      [&, v] { return principal(at_v(ua, v), lam4m1); });
        }
    }

    run.check("upsilon-T.v=-4.full", "Upsilon^T(-4) has zero stabilizer conditions",
              [&] { return trivial(at_v(uT, Rational(-4))); });
    run.check("upsilon-a.v=0.full", "Upsilon^a(0) has zero stabilizer conditions",
              [&] { return trivial(at_v(ua, Rational(0))); });
    run.check("upsilon-T.v=-4.is-upsilon-p", "Upsilon^T(-4) and Upsilon_p define the same curve", [&] {
        auto f = at_v(uT, Rational(-4));
        return expect(proportional(f, up), f.to_string());
    });
    run.check("upsilon-a.v=0.is-upsilon-p", "Upsilon^a(0) = Upsilon_p",
              [&] { return equal_polys(at_v(ua, Rational(0)), up); });
    run.check("upsilon-a.direction", "d/dv Upsilon^a(v) = x0^4 y0",
              [&] { return equal_polys(partial_derivative(ua, reg->index("v")), power(var("x0"), 4) * var("y0")); });
    return run.take();
}

CheckReport normalization(const Catalog& cat, const SuiteConfig&) {
    Runner run("normalization");
    auto reg = make_registry(World::hirzebruch);
    auto var = [&](const char* n) { return Polynomial::variable(reg, n); };
    const auto grading = hirzebruch_grading(reg);
    const auto wprime = cat.get_all(names("wprime.", 6), reg);
    const auto psi = cat.get_all(names("psi.", 6), reg);

    run.check("wprime.bidegree", "the W' basis and the psi components have bidegree (1,1)", [&] {
        for (const auto* family : {&wprime, &psi})
            for (const auto& f : *family)
                if (grading.degree(f) != Multidegree{1, 1}) return fail(f.to_string());
        return pass();
    });

    // res_s0 - res_f0 on H0(O(1,1)), valued in the linear forms in w0, w1.
    auto equalizer = [&] {
        const auto full = sections_11(reg);
        Substitution on_s0(reg), on_f0(reg);
        on_s0.set("y0", Rational(0)).set("y1", Rational(1)).set("x0", var("w0")).set("x1", var("w1"));
        on_f0.set("x0", Rational(0)).set("x1", Rational(1)).set("y0", var("w0")).set("y1", var("w1"));
        ExactMatrix m(reg, 2, full.dimension());
        for (std::size_t j = 0; j < full.dimension(); ++j) {
            auto d = substitute(full[j], on_s0) - substitute(full[j], on_f0);
            for (std::size_t r = 0; r < 2; ++r) {
                auto w = Monomial::variable(reg->size(), reg->index(r == 0 ? "w0" : "w1"));
                m(r, j) = Polynomial(reg, d.coefficient(w));
                d -= Polynomial::term(reg, w, d.coefficient(w));
            }
            if (!d.is_zero()) throw UsageError("restriction is not linear in w0, w1: " + d.to_string());
        }
        std::vector<Polynomial> kernel_polys;
        for (const auto& vec : kernel(m).basis) kernel_polys.push_back(full.combine(vec));
        return kernel_polys;
    };
    run.check("equalizer.dimension", "the kernel of res_s0 - res_f0 on H0(O(s0 + 4f0)) has dimension 6", [&] {
        auto k = equalizer();
        return expect(k.size() == 6, "dimension " + std::to_string(k.size()));
    });
    run.check("equalizer.is-wprime", "that kernel equals span(W')", [&] {
        return expect(same_span(SectionSpace(reg, equalizer()), SectionSpace(reg, wprime)), "spans differ");
    });
    run.check("wprime.stable", "W' is stable under G", [&] {
        return expect(action_preserves_space(hirzebruch_action(cat, reg), SectionSpace(reg, wprime)).preserved,
                      "not preserved");
    });
    run.check("psi.spans-wprime", "psi components are the W' basis scaled by (1, 4/5, 1, 1, 1, 1)", [&] {
        SectionSpace W(reg, wprime);
        for (std::size_t k = 0; k < 6; ++k) {
            auto c = coords_in_space(psi[k], W);
            if (!c) return fail(idx("psi.", k) + " outside W'");
            for (std::size_t j = 0; j < 6; ++j) {
                Rational want = j != k ? Rational(0) : (k == 1 ? Rational(4, 5) : Rational(1));
                if ((*c)[j] != Polynomial(reg, want)) return fail(idx("psi.", k) + " coordinate " + std::to_string(j));
            }
        }
        return pass();
    });
    run.check("psi.equivariant", "psi intertwines G with the induced linear action on P(W')", [&] {
        const auto g = hirzebruch_action(cat, reg);
        auto induced = action_preserves_space(g, SectionSpace(reg, psi));
        if (!induced.preserved || !induced.matrix) return fail("psi span not preserved");
        auto target = linear_action(g, names("w", 6), *induced.matrix);
        return from_verdict(equivariance_up_to_scalar(psi_map(cat, reg), g, target));
    });
    for (const auto& [id, chart_name] : {std::pair{"psi.s0-onto-line", "s0"}, std::pair{"psi.f0-onto-line", "f0"}}) {
        const bool s0 = std::string(chart_name) == "s0";
        run.check(id, std::string("psi maps ") + chart_name + " isomorphically onto {w2 = ... = w5 = 0}", [&, s0] {
            Substitution r(reg);
            if (s0)
                r.set("y0", Rational(0)).set("y1", Rational(1));
            else
                r.set("x0", Rational(0)).set("x1", Rational(1));
            std::vector<Polynomial> comps;
            for (const auto& p : psi) comps.push_back(substitute(p, r));
            for (std::size_t k = 2; k < 6; ++k)
                if (!comps[k].is_zero()) return fail(idx("w", k) + " = " + comps[k].to_string());
            auto rk = rank(coefficient_matrix(reg, {comps[0], comps[1]}).matrix);
            return expect(rk == 2, "rank " + std::to_string(rk));
        });
    }
    run.check("psi.point-p", "psi([0:1],[0:1]) = [1:0:0:0:0:0]", [&] {
        Substitution pt(reg);
        pt.set("x0", Rational(0)).set("x1", Rational(1)).set("y0", Rational(0)).set("y1", Rational(1));
        for (std::size_t k = 0; k < 6; ++k) {
            auto val = substitute(psi[k], pt);
            if (val != Polynomial(reg, Rational(k == 0 ? 1 : 0))) return fail(idx("w", k) + " = " + val.to_string());
        }
        return pass();
    });
    run.check("upsilon-p.param", "Upsilon_p vanishes on [t0:t1] -> ([t0:t1],[4 t0 : t1^4])",
              [&] { return vanishes(substitute(cat.get("upsilon_p", reg), upsilon_param(cat, reg, "upsilon_p"))); });
    run.check("upsilon-p.restriction-kernel", "restriction of H0(O(s0 + 4f0)) to Upsilon_p has kernel <Upsilon_p>", [&] {
        const auto full = sections_11(reg);
        const auto param = upsilon_param(cat, reg, "upsilon_p");
        std::vector<Polynomial> restricted;
        for (const auto& f : full.basis()) restricted.push_back(restrict_to_curve(f, param));
        auto k = kernel(coefficient_matrix(reg, restricted).matrix);
        if (k.basis.size() != 1) return fail("kernel dimension " + std::to_string(k.basis.size()));
        auto f = full.combine(k.basis[0]);
        return expect(proportional(f, cat.get("upsilon_p", reg)), f.to_string());
    });
    run.check("psi.upsilon-p.c5", "psi restricted to Upsilon_p is diag(1, 4, 4, 4, 4, 4) times the standard quintic", [&] {
        auto comps = restrict_to_curve(psi_map(cat, reg), upsilon_param(cat, reg, "upsilon_p"));
        const auto c5 = cat.get_all(names("c5.", 6), reg);
        for (std::size_t k = 0; k < 6; ++k) {
            auto r = comps[k] - c5[k].scaled(Rational(k == 0 ? 1 : 4));
            if (!r.is_zero()) return fail(idx("w", k) + ": " + r.to_string());
        }
        return pass();
    });
    run.check("psi.upsilon-p.rnc", "psi maps Upsilon_p onto a rational normal quintic", [&] {
        auto comps = restrict_to_curve(psi_map(cat, reg), upsilon_param(cat, reg, "upsilon_p"));
        return expect(is_rational_normal_curve(param_curve(reg, "t0", "t1", names("w", 6), comps)), "degenerate image");
    });
    return run.take();
}

AffineChart chart_at_p(const RegistryPtr& reg) {
    Substitution s(reg);
    s.set("x1", Rational(1)).set("y1", Rational(1));
    return {s, reg->index("x0"), reg->index("y0")};
}

Outcome tangent_is(const ProjectiveValue& got, const P1Point& want) {
    return expect(got.equals(want), got.to_string());
}

CheckReport tangent_directions(const Catalog& cat, const SuiteConfig& cfg) {
    Runner run("tangent-directions");
    auto reg = make_registry(World::hirzebruch);
    auto var = [&](const char* n) { return Polynomial::variable(reg, n); };
    const auto chart = chart_at_p(reg);
    const auto up = cat.get("upsilon_p", reg);
    const auto uT = cat.get("upsilon_T", reg);
    const auto ua = cat.get("upsilon_a", reg);

    run.check("quadruple.s0", "s0 has tangent parameter 0",
              [&] { return tangent_is(tangent_parameter(var("y0"), chart), P1Point::affine(Rational(0))); });
    run.check("quadruple.f0", "f0 has tangent parameter infinity",
              [&] { return tangent_is(tangent_parameter(var("x0"), chart), P1Point::infinity()); });
    run.check("quadruple.delta", "the kernel of d psi at p has parameter 1",
              [&] { return tangent_is(differential_kernel_parameter(psi_map(cat, reg), chart), P1Point::affine(Rational(1))); });
    run.check("quadruple.upsilon-p", "Upsilon_p has tangent parameter -4",
              [&] { return tangent_is(tangent_parameter(up, chart), P1Point::affine(Rational(-4))); });
    run.check("upsilon-T.tangent", "Upsilon^T(v) has tangent parameter v", [&] {
        auto t = tangent_parameter(uT, chart);
        return expect(t.equals(ProjectiveValue{var("v"), Polynomial(reg, Rational(1))}), t.to_string());
    });
    run.check("upsilon-a.tangent", "Upsilon^a(v) has tangent parameter -4 for formal v",
              [&] { return tangent_is(tangent_parameter(ua, chart), P1Point::affine(Rational(-4))); });
    for (long v : {0L, 1L, 2L}) {
        run.check("upsilon-a.tangent.v=" + std::to_string(v), "Upsilon^a(" + std::to_string(v) + ") has tangent parameter -4",
                  [&, v] { return tangent_is(tangent_parameter(at_v(ua, Rational(v)), chart), P1Point::affine(Rational(-4))); });
    }
    run.check("upsilon-T.param", "Upsilon^T(v) vanishes on [t0:t1] -> ([t0:t1],[-v t0 : t1^4])",
              [&] { return vanishes(substitute(uT, upsilon_param(cat, reg, "upsilon_T"))); });

    std::vector<Rational> vs = specializations(cfg);
    if (std::find(vs.begin(), vs.end(), Rational(1)) == vs.end()) vs.push_back(Rational(1));
    for (const auto& v : vs) {
        const std::string s = v.to_string();
        const bool expect_rnc = v != Rational(0) && v != Rational(1);
        run.check("delta.v=" + s,
                  "psi(Upsilon^T(" + s + ")) is " + (expect_rnc ? "a rational normal quintic" : "degenerate") +
                      " and its tangent parameter is " + s,
                  [&, v, expect_rnc] {
                      auto f = at_v(uT, v);
                      auto t = tangent_parameter(f, chart);
                      if (!t.equals(P1Point::affine(v))) return fail("tangent " + t.to_string());
                      Substitution param = upsilon_param(cat, reg, "upsilon_T");
                      Substitution sv(reg);
                      sv.set("v", v);
                      std::vector<Polynomial> comps;
                      for (auto c : restrict_to_curve(psi_map(cat, reg), param)) comps.push_back(substitute(c, sv));
                      bool all_zero = std::all_of(comps.begin(), comps.end(), [](const Polynomial& p) { return p.is_zero(); });
                      bool rnc = !all_zero && is_rational_normal_curve(param_curve(reg, "t0", "t1", names("w", 6), comps));
                      return expect(rnc == expect_rnc, rnc ? "rational normal quintic" : "degenerate");
                  });
    }
    return run.take();
}

CheckReport pencils(const Catalog& cat, const SuiteConfig&) {
    Runner run("pencils");
    auto reg = make_registry(World::hirzebruch);
    auto var = [&](const char* n) { return Polynomial::variable(reg, n); };
    const auto up = cat.get("upsilon_p", reg);

    auto subspace = [&](const std::vector<OrderCondition>& conds) {
        BinaryCurve curve{upsilon_param(cat, reg, "upsilon_p"), reg->index("t0"), reg->index("t1")};
        return restricted_order_subspace(sections_11(reg), curve, conds);
    };
    const P1Point p = P1Point::affine(Rational(0));  // t0 = 0, i.e. the point p
    const P1Point r = P1Point::infinity();           // t1 = 0, the second torus-fixed point

    auto pencil = [&](const std::vector<OrderCondition>& conds, const Polynomial& other) {
        auto V = subspace(conds);
        if (V.dimension() != 2) return fail("dimension " + std::to_string(V.dimension()));
        return expect(same_span(V, SectionSpace(reg, {up, other})), V[0].to_string() + ", " + V[1].to_string());
    };
    run.check("pencil.4r+p", "sections meeting Upsilon_p in 4r + p form the pencil <Upsilon_p, x0 y1>",
              [&] { return pencil({{r, 4}, {p, 1}}, var("x0") * var("y1")); });
    run.check("pencil.4r+p.reordered", "the same pencil is obtained with the conditions listed in the other order",
              [&] { return pencil({{p, 1}, {r, 4}}, var("x0") * var("y1")); });
    run.check("pencil.5p", "sections meeting Upsilon_p in 5p form the pencil <Upsilon_p, x0^4 y0>",
              [&] { return pencil({{p, 5}}, power(var("x0"), 4) * var("y0")); });
    run.check("pencil.6p", "only Upsilon_p meets itself to order 6 at p", [&] {
        auto V = subspace({{p, 6}});
        return expect(V.dimension() == 1 && proportional(V[0], up), "dimension " + std::to_string(V.dimension()));
    });

    const auto H = DivisorClass{3, 1, 4};
    run.check("surface.self-intersection", "(s + 4f)^2 = 5 on F_3",
              [&] { return expect(intersect(H, H) == 5, std::to_string(intersect(H, H))); });
    run.check("surface.genus", "s + 4f has arithmetic genus 0",
              [&] { return expect(adjunction_genus(H) == Rational(0), adjunction_genus(H).to_string()); });
    run.check("surface.contact", "(s + 4f).(s + 3f) = 4", [&] {
        auto n = intersect(H, DivisorClass{3, 1, 3});
        return expect(n == 4, std::to_string(n));
    });
    run.check("surface.anticanonical", "-K - (s + f) = s + 4f", [&] {
        auto d = -canonical_class(3) - DivisorClass{3, 1, 1};
        return expect(d == H, d.to_string());
    });
    run.check("surface.class-elimination", "the only irreducible rational class of degree 5 is s + 4f", [&] {
        auto found = rational_classes_of_degree(3, H, 5);
        std::string list;
        for (auto [a, b] : found) list += "(" + std::to_string(a) + "," + std::to_string(b) + ") ";
        return expect(found == std::vector<std::pair<long, long>>{{1, 4}}, list.empty() ? "none" : list);
    });
    return run.take();
}

// ---- quadrics through the rational normal quartic --------------------------

CheckReport quadric_involution(const Catalog& cat, const SuiteConfig&) {
    Runner run("quadric-involution");
    auto reg = make_registry(World::quadric);
    auto var = [&](const char* n) { return Polynomial::variable(reg, n); };
    const auto w = names("w", 5);
    const std::vector<std::string> gen_names = {"f2", "f3", "f40", "f41", "f5", "f6"};
    const auto gens = cat.get_all(gen_names, reg);
    const auto fc = cat.get("fc", reg);
    const auto c = var("c");

    auto jq = [&] { return RationalMap(reg, {w}, w, cat.get_all(names("jq.", 5), reg), fc); };
    auto inv = [&] { return RationalMap(reg, {w}, w, cat.get_all(names("i.", 5), reg), fc); };
    auto torus = [&] {
        ParametricAction::Spec spec;
        spec.params = {"lam"};
        spec.identity = {Rational(1)};
        spec.units = {"lam"};
        spec.factors = {w};
        for (const auto& n : w) spec.images.emplace_back(n, cat.get("torus." + n, reg));
        return ParametricAction(reg, spec);
    };
    auto alpha = [&] { return param_curve(reg, "u0", "u1", w, cat.get_all(names("alpha.", 5), reg)); };
    auto identity_comps = [&] {
        std::vector<Polynomial> out;
        for (const auto& n : w) out.push_back(Polynomial::variable(reg, n));
        return out;
    };

    std::vector<std::pair<std::string, std::vector<long>>> unit_weights;
    for (const auto& n : w) unit_weights.push_back({n, {1}});
    const Grading by_degree(reg, unit_weights);
    auto degree = [&](const Polynomial& f) {
        auto d = by_degree.degree(f);
        if (!d) throw UsageError("not a form in w: " + f.to_string());
        return d->front();
    };

    run.check("generators.degree", "f2, ..., f6 and f_c are quadratic forms in w", [&] {
        for (auto f : gens)
            if (by_degree.degree(f) != Multidegree{2}) return fail(f.to_string());
        return expect(by_degree.degree(fc) == Multidegree{2}, fc.to_string());
    });
    run.check("catalog.fc", "f_c = c^2 f40 - f41", [&] { return equal_polys(fc, c * c * gens[2] - gens[3]); });
    run.check("catalog.jq", "j_Q = [f2 : c f3 : c^2 f40 : c f5 : f6]", [&] {
        const std::vector<Polynomial> want = {gens[0], c * gens[1], c * c * gens[2], c * gens[4], gens[5]};
        const auto got = cat.get_all(names("jq.", 5), reg);
        for (std::size_t k = 0; k < 5; ++k)
            if (got[k] != want[k]) return fail(idx("jq.", k) + ": " + (got[k] - want[k]).to_string());
        return pass();
    });
    run.check("gamma4.rnc", "the quartic parametrization is a rational normal curve", [&] {
        return expect(is_rational_normal_curve(param_curve(reg, "t0", "t1", w, cat.get_all(names("gamma4.", 5), reg))),
                      "degenerate");
    });
    run.check("generators.vanish-on-gamma4", "all six generators vanish on the quartic", [&] {
        Substitution s(reg);
        for (std::size_t k = 0; k < 5; ++k) s.set(w[k], cat.get(idx("gamma4.", k), reg));
        for (std::size_t k = 0; k < gens.size(); ++k) {
            auto r = substitute(gens[k], s);
            if (!r.is_zero()) return fail(gen_names[k] + ": " + r.to_string());
        }
        return vanishes(substitute(fc, s));
    });
    run.check("jq.image-in-quadric", "f_c(j_Q) vanishes modulo f_c",
              [&] { return expect(image_in_hypersurface(jq(), fc), substitute(fc, jq().as_substitution()).to_string()); });
    run.check("jq.involution", "j_Q o j_Q is proportional to the identity modulo f_c",
              [&] { return from_verdict(proportional_mod(compose(jq(), jq()).components(), identity_comps(), fc)); });
    run.check("i.involution", "i o i = id", [&] {
        auto comps = compose(inv(), inv()).components();
        auto id = identity_comps();
        for (std::size_t k = 0; k < 5; ++k)
            if (comps[k] != id[k]) return fail(comps[k].to_string());
        return pass();
    });
    run.check("i.preserves-quadric", "f_c o i = f_c", [&] { return equal_polys(substitute(fc, inv().as_substitution()), fc); });
    run.check("i.commutes-with-jq", "i o j_Q = j_Q o i modulo f_c",
              [&] { return from_verdict(proportional_mod(compose(inv(), jq()).components(), compose(jq(), inv()).components(), fc)); });
    run.check("jq.torus-equivariant", "j_Q(lam.w) = lam^2 lam.j_Q(w)", [&] {
        auto v = equivariance_up_to_scalar(jq(), torus(), torus());
        if (!v.holds) return from_verdict(v);
        if (v.scalars.empty()) return fail("no scalar");
        return equal_polys(v.scalars.front(), power(var("lam"), 2));
    });
    run.check("i.semi-commutes", "i(lam.w) = lam^-1.i(w) up to a monomial in lam", [&] {
        return from_verdict(equivariance_up_to_scalar(inv(), torus(), torus(), Inversion{"lam", "lam_inv"}));
    });
    run.check("iota.semi-commutes", "iota_Q = i o j_Q satisfies iota_Q(lam.w) = lam^2 lam^-1.iota_Q(w) after clearing lam^-1", [&] {
        auto iota = compose(inv(), jq());
        auto v = equivariance_up_to_scalar(iota, torus(), torus(), Inversion{"lam", "lam_inv"});
        if (!v.holds) return from_verdict(v);
        if (v.scalars.empty()) return fail("no scalar");
        return equal_polys(v.scalars.front(), power(var("lam"), 2));
    });
    run.check("alpha.in-quadric", "f_c(alpha(u)) = 0", [&] { return vanishes(substitute(fc, alpha().as_substitution())); });
    run.check("alpha.iota-c", "iota_Q o alpha is proportional to alpha o iota_c", [&] {
        auto iota_c = RationalMap(reg, {{"u0", "u1"}}, {"u0", "u1"}, cat.get_all(names("iota_c.", 2), reg));
        auto lhs = compose(compose(inv(), jq()).with_modulus(std::nullopt), alpha()).components();
        auto rhs = compose(alpha(), iota_c).components();
        return from_verdict(proportional_mod(lhs, rhs, std::nullopt));
    });
    run.check("line.containment", "f_c, w0 w2 - w1^2 and w4 vanish on {w1 = w2 = w4 = 0}", [&] {
        Substitution s(reg);
        s.set("w1", Rational(0)).set("w2", Rational(0)).set("w4", Rational(0));
        for (const auto& f : {fc, gens[0], var("w4")})
            if (!substitute(f, s).is_zero()) return fail(substitute(f, s).to_string());
        return pass();
    });
    run.check("alpha.in-sections", "alpha lies in {w4 = 0} and {w0 w2 - w1^2 = 0}", [&] {
        auto s = alpha().as_substitution();
        for (const auto& f : {var("w4"), gens[0]})
            if (!substitute(f, s).is_zero()) return fail(substitute(f, s).to_string());
        return pass();
    });
    run.check("alpha.cubic", "alpha is a twisted cubic in {w4 = 0}", [&] {
        auto comps = cat.get_all(names("alpha.", 4), reg);
        return expect(is_rational_normal_curve(param_curve(reg, "u0", "u1", names("w", 4), comps)), "degenerate");
    });
    run.check("degree.bookkeeping", "deg(line) + deg(alpha) = 1 + 3 = deg Q . deg H . deg(w0 w2 - w1^2) = 4", [&] {
        const long cubic = cat.get("alpha.0", reg).total_degree();
        const long total = degree(fc) * degree(var("w4")) * degree(gens[0]);
        return expect(1 + cubic == total, std::to_string(1 + cubic) + " vs " + std::to_string(total));
    });
    return run.take();
}

// ---- reparametrization of the family ---------------------------------------

CheckReport reparam(const Catalog& cat, const SuiteConfig&) {
    Runner run("reparam");
    auto reg = make_registry(World::line);
    const auto num = cat.get("mobius.num", reg);
    const auto den = cat.get("mobius.den", reg);

    auto apply = [&](const P1Point& pt) {
        Substitution s(reg);
        s.set("v0", pt.x0()).set("v1", pt.x1());
        return P1Point(substitute(num, s).constant_term(), substitute(den, s).constant_term());
    };
    const std::vector<std::pair<P1Point, P1Point>> table = {
        {P1Point::affine(Rational(0)), P1Point::affine(Rational(0))},
        {P1Point::affine(Rational(1)), P1Point::affine(Rational(1, 5))},
        {P1Point::infinity(), P1Point::affine(Rational(1))},
        {P1Point::affine(Rational(-4)), P1Point::infinity()},
    };
    for (const auto& [src, dst] : table) {
        run.check("boundary." + src.to_string(), "v -> v/(v + 4) sends " + src.to_string() + " to " + dst.to_string(),
                  [&, src, dst] {
                      auto got = apply(src);
                      return expect(got == dst, got.to_string());
                  });
    }
    run.check("injective", "v -> v/(v + 4) is injective on 10 random rational points", [&] {
        std::mt19937_64 rng(20240517);
        std::uniform_int_distribution<long> n(-50, 50), d(1, 13);
        std::set<std::string> seen_src;
        std::map<std::string, std::string> image_of;
        while (seen_src.size() < 10) {
            P1Point pt = P1Point::affine(Rational(n(rng), d(rng)));
            if (!seen_src.insert(pt.to_string()).second) continue;
            auto img = apply(pt).to_string();
            auto [it, fresh] = image_of.emplace(img, pt.to_string());
            if (!fresh) return fail(it->second + " and " + pt.to_string() + " both map to " + img);
        }
        return pass();
    });
    run.check("invertible", "the map has nonzero determinant", [&] {
        auto coef = [&](const Polynomial& p, const char* v) {
            return p.coefficient(Monomial::variable(reg->size(), reg->index(v)));
        };
        Mobius m{coef(num, "v0"), coef(num, "v1"), coef(den, "v0"), coef(den, "v1")};
        if (!num.is_homogeneous() || !den.is_homogeneous() || num.total_degree() > 1 || den.total_degree() > 1)
            return fail(num.to_string() + " : " + den.to_string());
        return expect(!m.determinant().is_zero(), m.determinant().to_string());
    });
    return run.take();
}

using SuiteFn = CheckReport (*)(const Catalog&, const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry_of_suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"w-module", &w_module},
        {"borel-line", &borel_line},
        {"g-action", &g_action},
        {"semi-invariants-11", &semi_invariants_11},
        {"stabilizers", &stabilizers},
        {"normalization", &normalization},
        {"tangent-directions", &tangent_directions},
        {"pencils", &pencils},
        {"quadric-involution", &quadric_involution},
        {"reparam", &reparam},
    };
    return table;
}

}  // namespace

const std::vector<Rational>& default_specializations() {
    static const std::vector<Rational> v = {Rational(2), Rational(3), Rational(-1)};
    return v;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> out = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry_of_suites()) n.push_back(name);
        return n;
    }();
    return out;
}

bool is_suite_name(std::string_view name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

CheckReport run_suite(std::string_view name, const SuiteConfig& config, const Catalog& catalog) {
    for (const auto& [n, fn] : registry_of_suites()) {
        if (n != name) continue;
        try {
            return fn(catalog, config);
        } catch (const std::exception& e) {
            CheckReport r{n, {}};
            r.checks.push_back({"setup", CheckStatus::error, "suite inputs could be built", std::string(e.what()), 0.0});
            return r;
        }
    }
    throw UsageError("unknown suite: " + std::string(name));
}

AggregateReport run_suites(const std::vector<std::string>& names, const SuiteConfig& config, const Catalog& catalog) {
    for (const auto& n : names)
        if (!is_suite_name(n)) throw UsageError("unknown suite: " + n);
    std::vector<std::string> ordered;
    for (const auto& n : suite_names())
        if (std::find(names.begin(), names.end(), n) != names.end()) ordered.push_back(n);

    AggregateReport out;
    if (config.parallel) {
        std::vector<std::future<CheckReport>> jobs;
        for (const auto& n : ordered)
            jobs.push_back(std::async(std::launch::async, [&config, &catalog, n] { return run_suite(n, config, catalog); }));
        for (auto& j : jobs) out.suites.push_back(j.get());
    } else {
        for (const auto& n : ordered) out.suites.push_back(run_suite(n, config, catalog));
    }
    return out;
}

AggregateReport run_all(const SuiteConfig& config, const Catalog& catalog) {
    return run_suites(suite_names(), config, catalog);
}

}  // namespace fanocert
