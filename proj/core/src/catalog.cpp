#include "fanocert/catalog.hpp"

#include <random>
#include <stdexcept>

#include "fanocert/parser.hpp"

namespace fanocert {

namespace {

std::vector<Variable> coords(std::initializer_list<const char*> names, VarRole role = VarRole::coordinate) {
    std::vector<Variable> out;
    for (const char* n : names) out.push_back({n, role});
    return out;
}

void append(std::vector<Variable>& into, std::vector<Variable> more) {
    for (auto& v : more) into.push_back(std::move(v));
}

}  // namespace

RegistryPtr make_registry(World w) {
    std::vector<Variable> vars;
    switch (w) {
        case World::lines_pair:
            vars = coords({"x1", "y1", "x2", "y2"});
            append(vars, coords({"a", "b", "lam"}, VarRole::group_parameter));
            append(vars, coords({"eps"}, VarRole::infinitesimal));
            break;
        case World::hirzebruch:
            vars = coords({"x0", "x1", "y0", "y1"});
            append(vars, coords({"a", "lam", "ap", "lamp"}, VarRole::group_parameter));
            append(vars, coords({"v"}, VarRole::family_parameter));
            append(vars, coords({"eps"}, VarRole::infinitesimal));
            append(vars, coords({"t0", "t1"}, VarRole::curve_parameter));
            append(vars, coords({"w0", "w1", "w2", "w3", "w4", "w5"}));
            break;
        case World::quadric:
            vars = coords({"w0", "w1", "w2", "w3", "w4"});
            append(vars, coords({"t0", "t1", "u0", "u1"}, VarRole::curve_parameter));
            append(vars, coords({"c"}, VarRole::family_parameter));
            append(vars, coords({"lam", "lam_inv"}, VarRole::group_parameter));
            append(vars, coords({"eps"}, VarRole::infinitesimal));
            break;
        case World::line:
            vars = coords({"v0", "v1"});
            break;
    }
    return VariableRegistry::make(std::move(vars));
}

std::string_view to_string(World w) {
    switch (w) {
        case World::lines_pair: return "lines-pair";
        case World::hirzebruch: return "hirzebruch";
        case World::quadric: return "quadric";
        case World::line: return "line";
    }
    return "?";
}

Catalog Catalog::standard() {
    Catalog c;
    auto add = [&c](std::string name, World w, std::string text, std::string note = {}) {
        c.entries_.push_back({std::move(name), w, std::move(text), std::move(note)});
    };
    const World L = World::lines_pair;
    const World H = World::hirzebruch;
    const World Q = World::quadric;

    // weight basis of the 7-dimensional module, bidegree (5,1)
    add("e0", L, "x1^5*x2");
    add("e1", L, "x1^4*y1*x2 + 1/5*x1^5*y2");
    add("e2", L, "x1^3*y1^2*x2 + 1/2*x1^4*y1*y2");
    add("e3", L, "x1^2*y1^3*x2 + x1^3*y1^2*y2");
    add("e4", L, "1/2*x1*y1^4*x2 + x1^2*y1^3*y2");
    add("e5", L, "1/5*y1^5*x2 + x1*y1^4*y2");
    add("e6", L, "y1^5*y2");

    // upper and lower unipotent and diagonal substitutions on both factors
    add("borel.x1", L, "lam*x1");
    add("borel.y1", L, "y1 + a*x1");
    add("borel.x2", L, "lam*x2");
    add("borel.y2", L, "y2 + a*x2");
    add("opposite.x1", L, "x1 + b*y1");
    add("opposite.y1", L, "y1");
    add("opposite.x2", L, "x2 + b*y2");
    add("opposite.y2", L, "y2");

    // G = Ga x| Gm acting on F_3
    add("action.x0", H, "lam*x0");
    add("action.x1", H, "x1 + a*x0");
    add("action.y0", H, "lam*y0");
    add("action.y1", H, "y1 + (a*x1^3 + 3/2*a^2*x0*x1^2 + a^3*x0^2*x1 + 1/4*a^4*x0^3)*y0");
    add("law.a", H, "a + lam*ap", "(ap, lamp).(a, lam)");
    add("law.lam", H, "lamp*lam");

    add("upsilon_p", H, "4*x0*y1 - x1^4*y0");
    add("upsilon_T", H, "v*x0*y1 + x1^4*y0");
    add("upsilon_a", H, "4*x0*y1 - x1^4*y0 + v*x0^4*y0");

    add("wprime.0", H, "x1*y1");
    add("wprime.1", H, "x0*y1 + x1^4*y0");
    add("wprime.2", H, "x0*x1^3*y0");
    add("wprime.3", H, "x0^2*x1^2*y0");
    add("wprime.4", H, "x0^3*x1*y0");
    add("wprime.5", H, "x0^4*y0");

    add("psi.0", H, "x1*y1");
    add("psi.1", H, "4/5*(x0*y1 + x1^4*y0)");
    add("psi.2", H, "x0*x1^3*y0");
    add("psi.3", H, "x0^2*x1^2*y0");
    add("psi.4", H, "x0^3*x1*y0");
    add("psi.5", H, "x0^4*y0");

    // parametrizations with x0 = t0, x1 = t1
    add("upsilon_p.param.y0", H, "4*t0");
    add("upsilon_p.param.y1", H, "t1^4");
    add("upsilon_T.param.y0", H, "-v*t0");
    add("upsilon_T.param.y1", H, "t1^4");

    add("c5.0", H, "t1^5");
    add("c5.1", H, "t1^4*t0");
    add("c5.2", H, "t1^3*t0^2");
    add("c5.3", H, "t1^2*t0^3");
    add("c5.4", H, "t1*t0^4");
    add("c5.5", H, "t0^5");

    // quadrics through the rational normal quartic
    add("f2", Q, "w0*w2 - w1^2");
    add("f3", Q, "w0*w3 - w1*w2");
    add("f40", Q, "w0*w4 - w2^2");
    add("f41", Q, "w1*w3 - w2^2");
    add("f5", Q, "w1*w4 - w2*w3");
    add("f6", Q, "w2*w4 - w3^2");
    add("fc", Q, "c^2*(w0*w4 - w2^2) - (w1*w3 - w2^2)", "c^2 f40 - f41");

    add("gamma4.0", Q, "t1^4");
    add("gamma4.1", Q, "t1^3*t0");
    add("gamma4.2", Q, "t1^2*t0^2");
    add("gamma4.3", Q, "t1*t0^3");
    add("gamma4.4", Q, "t0^4");

    add("jq.0", Q, "w0*w2 - w1^2");
    add("jq.1", Q, "c*(w0*w3 - w1*w2)");
    add("jq.2", Q, "c^2*(w0*w4 - w2^2)");
    add("jq.3", Q, "c*(w1*w4 - w2*w3)");
    add("jq.4", Q, "w2*w4 - w3^2");

    add("i.0", Q, "w4");
    add("i.1", Q, "w3");
    add("i.2", Q, "w2");
    add("i.3", Q, "w1");
    add("i.4", Q, "w0");

    add("alpha.0", Q, "u0^3");
    add("alpha.1", Q, "u0^2*u1");
    add("alpha.2", Q, "u0*u1^2");
    add("alpha.3", Q, "(1 - c^2)*u1^3");
    add("alpha.4", Q, "0");

    // [u0 : u1] -> [u1 : c/(1-c^2) u0] with the denominator cleared
    add("iota_c.0", Q, "(1 - c^2)*u1");
    add("iota_c.1", Q, "c*u0");

    add("torus.w0", Q, "w0");
    add("torus.w1", Q, "lam*w1");
    add("torus.w2", Q, "lam^2*w2");
    add("torus.w3", Q, "lam^3*w3");
    add("torus.w4", Q, "lam^4*w4");

    // [v0 : v1] -> [v0 : v0 + 4 v1], i.e. v -> v / (v + 4)
    add("mobius.num", World::line, "v0");
    add("mobius.den", World::line, "v0 + 4*v1");
    return c;
}

const CatalogEntry& Catalog::entry(std::string_view name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw UsageError("unknown catalog entry: " + std::string(name));
}

Polynomial Catalog::get(std::string_view name, const RegistryPtr& reg) const {
    return parse_polynomial(entry(name).text, reg);
}

std::vector<Polynomial> Catalog::get_all(const std::vector<std::string>& names, const RegistryPtr& reg) const {
    std::vector<Polynomial> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(get(n, reg));
    return out;
}

void Catalog::set_text(std::string_view name, std::string text) {
    for (auto& e : entries_) {
        if (e.name == name) {
            e.text = std::move(text);
            return;
        }
    }
    throw UsageError("unknown catalog entry: " + std::string(name));
}

Grading lines_pair_grading(const RegistryPtr& reg) {
    return Grading(reg, {{"x1", {1, 0}}, {"y1", {1, 0}}, {"x2", {0, 1}}, {"y2", {0, 1}}});
}

Grading hirzebruch_grading(const RegistryPtr& reg) {
    return Grading(reg, {{"x0", {1, 0}}, {"x1", {1, 0}}, {"y0", {-3, 1}}, {"y1", {0, 1}}});
}

Mutation mutate(const Catalog& base, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto& entries = base.entries();
    const auto& target = entries[std::uniform_int_distribution<std::size_t>(0, entries.size() - 1)(rng)];

    auto reg = make_registry(target.world);
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < reg->size(); ++i)
        if (reg->at(i).role != VarRole::infinitesimal) pool.push_back(i);

    std::vector<std::uint32_t> exps(reg->size(), 0);
    const int degree = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int k = 0; k < degree; ++k)
        ++exps[pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]];

    long num = 0;
    while (num == 0) num = std::uniform_int_distribution<long>(-9, 9)(rng);
    const long den = std::uniform_int_distribution<long>(1, 7)(rng);
    auto added = Polynomial::term(reg, Monomial(exps), Rational(num, den));

    auto perturbed = parse_polynomial(target.text, reg) + added;
    Mutation m{base, target.name, added.to_string()};
    m.catalog.set_text(target.name, perturbed.to_string());
    return m;
}

}  // namespace fanocert
