#include "fanocert/maps.hpp"

#include <algorithm>
#include <sstream>

#include "fanocert/sections.hpp"

namespace fanocert {

namespace {

std::vector<std::size_t> lookup(const RegistryPtr& reg, const std::vector<std::string>& names) {
    std::vector<std::size_t> out;
    for (const auto& n : names) out.push_back(reg->index(n));
    return out;
}

std::optional<long> factor_degree(const Polynomial& p, const std::vector<std::size_t>& vars) {
    std::optional<long> d;
    for (const auto& [m, c] : p.terms()) {
        long k = 0;
        for (auto v : vars) k += m[v];
        if (d && *d != k) return std::nullopt;
        d = k;
    }
    return d;
}

// Dense univariate polynomial over Q, coefficient i for x^i.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense dense_remainder(Dense a, const Dense& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        trim(a);
    }
    return a;
}

Dense dense_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = dense_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Polynomial scalar_coefficient(const Polynomial& p, std::size_t x, unsigned kx, std::size_t y, unsigned ky) {
    return coefficient_extract(coefficient_extract(p, x, kx), y, ky);
}

}  // namespace

// ---- RationalMap ----------------------------------------------------------

RationalMap::RationalMap(RegistryPtr reg, const std::vector<std::vector<std::string>>& source_factors,
                         const std::vector<std::string>& target, std::vector<Polynomial> components,
                         std::optional<Polynomial> modulus)
    : reg_(std::move(reg)), target_(lookup(reg_, target)), components_(std::move(components)),
      modulus_(std::move(modulus)) {
    for (const auto& f : source_factors) {
        factors_.push_back(lookup(reg_, f));
        source_.insert(source_.end(), factors_.back().begin(), factors_.back().end());
    }
    validate_common();
    for (const auto& fac : factors_) {
        std::optional<long> common;
        for (const auto& p : components_) {
            if (p.is_zero()) continue;
            auto d = factor_degree(p, fac);
            if (!d) throw UsageError("component " + p.to_string() + " is not homogeneous in a source factor");
            if (common && *common != *d) throw UsageError("components have different degrees");
            common = d;
        }
    }
}

RationalMap::RationalMap(RegistryPtr reg, const Grading& source_grading, const std::vector<std::string>& target,
                         std::vector<Polynomial> components, std::optional<Polynomial> modulus)
    : reg_(std::move(reg)), factors_{source_grading.variables()}, source_(source_grading.variables()),
      target_(lookup(reg_, target)), components_(std::move(components)), modulus_(std::move(modulus)),
      grading_(source_grading) {
    if (source_grading.registry() != reg_) throw UsageError("grading over a different registry");
    validate_common();
    std::optional<Multidegree> common;
    for (const auto& p : components_) {
        if (p.is_zero()) continue;
        auto d = grading_->degree(p);
        if (!d) throw UsageError("component " + p.to_string() + " is not homogeneous for the source grading");
        if (common && *common != *d) throw UsageError("components have different degrees");
        common = d;
    }
}

void RationalMap::validate_common() const {
    if (components_.size() != target_.size())
        throw UsageError("component count does not match the target coordinates");
    if (std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); }))
        throw UsageError("all components of the map vanish");
    for (const auto& p : components_)
        if (p.registry() != reg_) throw UsageError("component over a different registry");
    if (modulus_ && (modulus_->registry() != reg_ || modulus_->is_zero()))
        throw UsageError("invalid modulus");
}

RationalMap RationalMap::identity(RegistryPtr reg, const std::vector<std::string>& coords,
                                  std::optional<Polynomial> modulus) {
    std::vector<Polynomial> comps;
    for (const auto& c : coords) comps.push_back(Polynomial::variable(reg, c));
    return {std::move(reg), {coords}, coords, std::move(comps), std::move(modulus)};
}

Substitution RationalMap::as_substitution() const {
    Substitution s(reg_);
    for (std::size_t i = 0; i < target_.size(); ++i) s.set(target_[i], components_[i]);
    return s;
}

RationalMap RationalMap::with_modulus(std::optional<Polynomial> modulus) const {
    RationalMap out = *this;
    out.modulus_ = std::move(modulus);
    return out;
}

RationalMap param_curve(RegistryPtr reg, const std::string& t0, const std::string& t1,
                        const std::vector<std::string>& target, std::vector<Polynomial> components) {
    return {std::move(reg), {{t0, t1}}, target, std::move(components)};
}

RationalMap compose(const RationalMap& g, const RationalMap& f) {
    if (g.source().size() != f.components().size())
        throw UsageError("cannot compose: target of the inner map does not match the outer source");
    if (g.registry() != f.registry()) throw UsageError("maps over different registries");
    const auto& reg = f.registry();
    Substitution s(reg);
    for (std::size_t i = 0; i < g.source().size(); ++i) s.set(g.source()[i], f.components()[i]);
    std::vector<Polynomial> comps;
    for (const auto& c : g.components()) comps.push_back(substitute(c, s));

    std::vector<std::vector<std::string>> factors;
    for (const auto& fac : f.source_factors()) {
        factors.emplace_back();
        for (auto v : fac) factors.back().push_back(reg->at(v).name);
    }
    std::vector<std::string> target;
    for (auto v : g.target()) target.push_back(reg->at(v).name);
    if (f.source_grading()) return {reg, *f.source_grading(), target, std::move(comps), f.modulus()};
    return {reg, factors, target, std::move(comps), f.modulus()};
}

Verdict proportional_mod(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                         const std::optional<Polynomial>& modulus) {
    if (a.size() != b.size()) throw UsageError("tuples of different lengths");
    Verdict v;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            Polynomial d = a[i] * b[j] - a[j] * b[i];
            if (d.is_zero()) continue;
            if (modulus && exact_divide(d, *modulus)) continue;
            v.witness = std::move(d);
            v.detail = "cross difference (" + std::to_string(i) + ", " + std::to_string(j) + ") survives";
            return v;
        }
    v.holds = true;
    return v;
}

bool image_in_hypersurface(const RationalMap& map, const Polynomial& equation) {
    const Polynomial pulled = substitute(equation, map.as_substitution());
    if (pulled.is_zero()) return true;
    return map.modulus() && exact_divide(pulled, *map.modulus()).has_value();
}

Polynomial restrict_to_curve(const Polynomial& f, const Substitution& curve) { return substitute(f, curve); }

std::vector<Polynomial> restrict_to_curve(const RationalMap& map, const Substitution& curve) {
    std::vector<Polynomial> out;
    for (const auto& c : map.components()) out.push_back(substitute(c, curve));
    return out;
}

bool binary_forms_coprime(const std::vector<Polynomial>& forms, std::size_t t0, std::size_t t1) {
    for (const auto& p : forms)
        for (const auto& [m, c] : p.terms())
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0 && i != t0 && i != t1) throw UsageError("binary form involves other variables: " + p.to_string());
    bool t1_divides_all = true;
    bool any = false;
    Dense g;
    for (const auto& p : forms) {
        if (p.is_zero()) continue;
        any = true;
        Dense d(static_cast<std::size_t>(p.total_degree() + 1));
        bool has_pure_t0 = false;
        for (const auto& [m, c] : p.terms()) {
            d[m[t0]] += c;
            has_pure_t0 = has_pure_t0 || m[t1] == 0;
        }
        t1_divides_all = t1_divides_all && !has_pure_t0;
        g = dense_gcd(g, d);
    }
    return any && !t1_divides_all && g.size() <= 1;
}

bool is_rational_normal_curve(const RationalMap& curve) {
    if (curve.source_factors().size() != 1 || curve.source_factors()[0].size() != 2) return false;
    const auto t0 = curve.source_factors()[0][0];
    const auto t1 = curve.source_factors()[0][1];
    const auto& reg = curve.registry();

    std::optional<long> degree;
    for (const auto& p : curve.components())
        if (!p.is_zero()) degree = factor_degree(p, {t0, t1});
    if (!degree || static_cast<std::size_t>(*degree + 1) != curve.components().size()) return false;

    if (rank(coefficient_matrix(reg, curve.components()).matrix) != curve.components().size()) return false;

    // Common factor test; only meaningful for rational coefficients, and
    // implied by the rank condition otherwise.
    const bool rational = std::all_of(curve.components().begin(), curve.components().end(), [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms())
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0 && i != t0 && i != t1) return false;
        return true;
    });
    if (!rational) return true;

    return binary_forms_coprime(curve.components(), t0, t1);
}

std::vector<Polynomial> clear_inverse(const std::vector<Polynomial>& polys, std::size_t inv, std::size_t var) {
    long n = 0;
    for (const auto& p : polys) n = std::max(n, p.degree_in(inv));
    std::vector<Polynomial> out;
    for (const auto& p : polys) {
        Polynomial q(p.registry());
        for (const auto& [m, c] : p.terms()) {
            const auto k = m[inv];
            q.add_term(m.with_exponent(inv, 0).with_exponent(var, m[var] + static_cast<std::uint32_t>(n) - k), c);
        }
        out.push_back(std::move(q));
    }
    return out;
}

Verdict equivariance_up_to_scalar(const RationalMap& map, const ParametricAction& src, const ParametricAction& tgt,
                                  const std::optional<Inversion>& inversion) {
    const auto& reg = map.registry();
    std::vector<Polynomial> lhs;
    for (const auto& c : map.components()) lhs.push_back(act_on_section(src, c));

    Substitution tgt_images(reg);
    for (auto c : tgt.coordinates()) tgt_images.set(c, tgt.image(c));
    if (inversion) {
        Substitution inv(reg);
        inv.set(inversion->param, Polynomial::variable(reg, inversion->inverse));
        for (auto c : tgt.coordinates()) tgt_images.set(c, substitute(tgt.image(c), inv));
    }
    std::vector<Polynomial> rhs;
    const Substitution into_map = map.as_substitution();
    for (auto t : map.target()) rhs.push_back(substitute(tgt_images.image(t), into_map));
    if (inversion) rhs = clear_inverse(rhs, reg->index(inversion->inverse), reg->index(inversion->param));

    Verdict v = proportional_mod(lhs, rhs, map.modulus());
    if (!v.holds) return v;
    std::vector<std::size_t> params = src.params();
    for (auto p : tgt.params()) params.push_back(p);
    for (std::size_t k = 0; k < rhs.size(); ++k) {
        if (rhs[k].is_zero()) continue;
        auto s = exact_divide(lhs[k], rhs[k]);
        if (!s) break;
        bool monomial = s->num_terms() == 1;
        if (monomial) {
            const auto& m = s->terms().begin()->first;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0 && std::find(params.begin(), params.end(), i) == params.end()) monomial = false;
        }
        if (!monomial) {
            v.holds = false;
            v.witness = *s;
            v.detail = "proportionality factor is not a monomial in the group parameters";
            return v;
        }
        v.scalars.push_back(std::move(*s));
        break;
    }
    return v;
}

// ---- tangent directions ---------------------------------------------------

bool ProjectiveValue::equals(const P1Point& p) const {
    return (num.scaled(p.x1()) - den.scaled(p.x0())).is_zero();
}

std::optional<P1Point> ProjectiveValue::as_point() const {
    if (!num.is_constant() || !den.is_constant()) return std::nullopt;
    return P1Point(num.constant_term(), den.constant_term());
}

std::string ProjectiveValue::to_string() const {
    if (auto p = as_point()) return p->to_string();
    if (den.is_zero()) return "inf";
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

ProjectiveValue tangent_parameter(const Polynomial& f, const AffineChart& chart) {
    const Polynomial g = substitute(f, chart.chart);
    if (!scalar_coefficient(g, chart.x, 0, chart.y, 0).is_zero())
        throw UsageError(f.to_string() + " does not vanish at the chart origin");
    ProjectiveValue out{scalar_coefficient(g, chart.x, 1, chart.y, 0), scalar_coefficient(g, chart.x, 0, chart.y, 1)};
    if (out.num.is_zero() && out.den.is_zero())
        throw UsageError(f.to_string() + " has vanishing linear part at the chart origin");
    return out;
}

ProjectiveValue differential_kernel_parameter(const RationalMap& map, const AffineChart& chart) {
    const auto& reg = map.registry();
    std::vector<Polynomial> local;
    for (const auto& c : map.components()) local.push_back(substitute(c, chart.chart));

    std::optional<std::size_t> base;
    std::vector<Polynomial> values;
    for (std::size_t k = 0; k < local.size(); ++k) {
        values.push_back(scalar_coefficient(local[k], chart.x, 0, chart.y, 0));
        if (!base && !values.back().is_zero()) base = k;
    }
    if (!base) throw UsageError("chart origin lies in the base locus of the map");

    // Linear parts of the affine coordinates F_k / F_base.
    ExactMatrix jac(reg, local.size(), 2);
    for (std::size_t k = 0; k < local.size(); ++k) {
        const Polynomial n = local[k] * values[*base] - local[*base] * values[k];
        jac(k, 0) = scalar_coefficient(n, chart.x, 1, chart.y, 0);
        jac(k, 1) = scalar_coefficient(n, chart.x, 0, chart.y, 1);
    }
    const auto ker = kernel(jac);
    if (ker.basis.size() != 1) throw UsageError("differential kernel is not one-dimensional");
    const auto& dir = ker.basis.front();
    // The line through direction (p, q) is q x - p y = 0.
    return {dir[1], -dir[0]};
}

}  // namespace fanocert
