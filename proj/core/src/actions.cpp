#include "fanocert/actions.hpp"

#include <algorithm>
#include <map>

namespace fanocert {

namespace {

bool is_monomial_in(const Polynomial& p, const std::vector<std::size_t>& vars) {
    if (p.num_terms() != 1) return false;
    const auto& m = p.terms().begin()->first;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
    return true;
}

bool free_of(const Polynomial& p, const std::vector<std::size_t>& vars) {
    return std::none_of(vars.begin(), vars.end(), [&](std::size_t v) { return p.involves(v); });
}

// Cross differences a_i b_j - a_j b_i over the listed indices.
std::optional<Polynomial> first_cross_difference(const std::vector<Polynomial>& a,
                                                 const std::vector<Polynomial>& b,
                                                 const std::vector<std::size_t>& idx) {
    for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = x + 1; y < idx.size(); ++y) {
            const auto i = idx[x];
            const auto j = idx[y];
            Polynomial d = a[i] * b[j] - a[j] * b[i];
            if (!d.is_zero()) return d;
        }
    return std::nullopt;
}

}  // namespace

// ---- ParametricAction -----------------------------------------------------

ParametricAction::ParametricAction(RegistryPtr reg, const Spec& spec) : reg_(std::move(reg)), images_(reg_) {
    if (spec.params.size() != spec.identity.size())
        throw UsageError("one identity value per group parameter is required");
    for (const auto& p : spec.params) {
        const auto idx = reg_->index(p);
        if (reg_->at(idx).role != VarRole::group_parameter)
            throw UsageError("'" + p + "' is not a group parameter");
        params_.push_back(idx);
    }
    identity_ = spec.identity;
    for (const auto& u : spec.units) {
        const auto idx = reg_->index(u);
        if (std::find(params_.begin(), params_.end(), idx) == params_.end())
            throw UsageError("unit '" + u + "' is not an action parameter");
        units_.push_back(idx);
    }
    for (const auto& f : spec.factors) {
        std::vector<std::size_t> fac;
        for (const auto& name : f) {
            const auto idx = reg_->index(name);
            if (std::find(coords_.begin(), coords_.end(), idx) != coords_.end())
                throw UsageError("coordinate '" + name + "' listed twice");
            fac.push_back(idx);
            coords_.push_back(idx);
        }
        factors_.push_back(std::move(fac));
    }
    for (const auto& [name, image] : spec.images) {
        const auto idx = reg_->index(name);
        if (std::find(coords_.begin(), coords_.end(), idx) == coords_.end())
            throw UsageError("image given for non-coordinate '" + name + "'");
        images_.set(idx, image);
    }

    const auto id = identity_substitution();
    for (auto c : coords_) {
        if (substitute(image(c), id) != Polynomial::variable(reg_, c))
            throw UsageError("identity parameters do not act trivially on '" + reg_->at(c).name + "'");
    }
}

Substitution ParametricAction::identity_substitution() const {
    Substitution s(reg_);
    for (std::size_t i = 0; i < params_.size(); ++i) s.set(params_[i], Polynomial(reg_, identity_[i]));
    return s;
}

ParametricAction ParametricAction::specialized(const Substitution& params) const {
    ParametricAction out = *this;
    Substitution images(reg_);
    for (auto c : coords_) images.set(c, substitute(image(c), params));
    out.images_ = std::move(images);
    return out;
}

// ---- operations -----------------------------------------------------------

Polynomial act_on_section(const ParametricAction& action, const Polynomial& f) {
    for (auto p : action.params())
        if (f.involves(p))
            throw UsageError("section involves group parameter '" + action.registry()->at(p).name + "'");
    return substitute(f, action.images());
}

std::optional<Polynomial> semi_invariance_factor(const ParametricAction& action, const Polynomial& f) {
    if (f.is_zero()) return std::nullopt;
    auto q = exact_divide(act_on_section(action, f), f);
    if (!q || !free_of(*q, action.coordinates())) return std::nullopt;
    return q;
}

Verdict verify_group_law(const ParametricAction& action, const GroupLaw& law) {
    const auto& reg = action.registry();
    const auto& params = action.params();
    if (law.primed.size() != params.size() || law.composed.size() != params.size())
        throw UsageError("group law does not match the action's parameters");

    Substitution to_primed(reg);
    Substitution to_composed(reg);
    for (std::size_t i = 0; i < params.size(); ++i) {
        to_primed.set(params[i], Polynomial::variable(reg, law.primed[i]));
        to_composed.set(params[i], law.composed[i]);
    }

    Verdict v;
    // Two-sided identity of the law.
    {
        Substitution left(reg);
        Substitution right(reg);
        for (std::size_t i = 0; i < params.size(); ++i) {
            left.set(law.primed[i], action.identity()[i]);
            right.set(params[i], action.identity()[i]);
        }
        for (std::size_t i = 0; i < params.size(); ++i) {
            const auto p = Polynomial::variable(reg, params[i]);
            const auto pp = Polynomial::variable(reg, law.primed[i]);
            Polynomial d1 = substitute(law.composed[i], left) - p;
            Polynomial d2 = substitute(law.composed[i], right) - pp;
            if (!d1.is_zero() || !d2.is_zero()) {
                v.witness = d1.is_zero() ? d2 : d1;
                v.detail = "identity is not two-sided for the law";
                return v;
            }
        }
    }

    // g'.(g.x): substitute g.x into the primed action.
    Substitution inner(reg);
    for (auto c : action.coordinates()) inner.set(c, action.image(c));

    std::vector<Polynomial> lhs(reg->size(), Polynomial(reg));
    std::vector<Polynomial> rhs(reg->size(), Polynomial(reg));
    for (auto c : action.coordinates()) {
        lhs[c] = substitute(substitute(action.image(c), to_primed), inner);
        rhs[c] = substitute(action.image(c), to_composed);
    }

    for (const auto& factor : action.factors()) {
        if (auto w = first_cross_difference(lhs, rhs, factor)) {
            v.witness = std::move(*w);
            v.detail = "composed substitution is not proportional to the law-composed one";
            return v;
        }
        for (auto c : factor) {
            if (rhs[c].is_zero()) continue;
            auto s = exact_divide(lhs[c], rhs[c]);
            if (s) v.scalars.push_back(std::move(*s));
            break;
        }
    }
    v.holds = true;
    return v;
}

Derivation lie_derivation(const ParametricAction& action, std::string_view param) {
    const auto& reg = action.registry();
    const auto dir = reg->index(param);
    const auto& params = action.params();
    auto it = std::find(params.begin(), params.end(), dir);
    if (it == params.end()) throw UsageError("'" + std::string(param) + "' is not an action parameter");
    const auto eps_vars = reg->indices_with_role(VarRole::infinitesimal);
    if (eps_vars.empty()) throw UsageError("registry has no infinitesimal variable");
    const auto eps = eps_vars.front();

    Substitution at(reg);
    for (std::size_t i = 0; i < params.size(); ++i) {
        Polynomial value(reg, action.identity()[i]);
        if (params[i] == dir) value += Polynomial::variable(reg, eps);
        at.set(params[i], value);
    }
    Derivation d(reg);
    for (auto c : action.coordinates())
        d.set(c, coefficient_extract(substitute(action.image(c), at), eps, 1));
    return d;
}

std::vector<Polynomial> semi_invariant_lines(const SectionSpace& space, const Derivation& torus,
                                             const Derivation& nilpotent) {
    const auto& reg = space.registry();
    std::map<Rational, std::vector<Polynomial>> eigen;
    for (const auto& b : space.basis()) {
        const Polynomial tb = apply_derivation(torus, b);
        Rational mu(0);
        if (!tb.is_zero()) {
            auto q = exact_divide(tb, b);
            if (!q || !q->is_constant())
                throw UsageError("torus derivation is not diagonal on basis element " + b.to_string());
            mu = q->constant_term();
        }
        eigen[mu].push_back(b);
    }

    std::vector<Polynomial> lines;
    for (auto it = eigen.rbegin(); it != eigen.rend(); ++it) {
        const SectionSpace sub(reg, it->second);
        std::vector<Polynomial> images;
        for (const auto& b : sub.basis()) images.push_back(apply_derivation(nilpotent, b));
        const auto ker = kernel(coefficient_matrix(reg, images).matrix);
        if (ker.basis.size() > 1)
            throw UsageError("eigenvalue " + it->first.to_string() +
                             " carries a positive-dimensional family of semi-invariant lines");
        for (const auto& v : ker.basis) lines.push_back(sub.combine(v).monic());
    }
    return lines;
}

StabilizerConditions stabilizer_conditions(const Polynomial& f, const ParametricAction& action,
                                           const SectionSpace& space) {
    const auto cf = coords_in_space(f, space);
    if (!cf) throw UsageError(f.to_string() + " is outside the section space");
    const Polynomial g = act_on_section(action, f);
    const auto cg = coords_in_space(g, space);
    if (!cg) throw UsageError("the transform of " + f.to_string() + " is outside the section space");

    StabilizerConditions out;
    for (std::size_t i = 0; i < cf->size(); ++i)
        for (std::size_t j = i + 1; j < cf->size(); ++j) {
            Polynomial minor = (*cf)[i] * (*cg)[j] - (*cf)[j] * (*cg)[i];
            if (minor.is_zero()) continue;
            minor = divide_by_monomial(minor, monomial_content(minor, action.units())).monic();
            if (std::find(out.generators.begin(), out.generators.end(), minor) == out.generators.end())
                out.generators.push_back(std::move(minor));
        }
    std::sort(out.generators.begin(), out.generators.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.num_terms() != b.num_terms()) return a.num_terms() < b.num_terms();
        return a.to_string() < b.to_string();
    });
    return out;
}

bool conditions_equal_principal(const StabilizerConditions& conds, const Polynomial& candidate,
                                const std::vector<std::size_t>& units) {
    if (candidate.is_zero()) throw UsageError("candidate generator must be nonzero");
    if (conds.generators.empty()) return false;
    bool attained = false;
    for (const auto& g : conds.generators) {
        auto q = exact_divide(g, candidate);
        if (!q) return false;
        if (q->is_constant() || is_monomial_in(*q, units)) attained = true;
    }
    return attained;
}

InducedAction action_preserves_space(const ParametricAction& action, const SectionSpace& space) {
    InducedAction out;
    ExactMatrix m(space.registry(), space.dimension(), space.dimension());
    for (std::size_t j = 0; j < space.dimension(); ++j) {
        auto c = coords_in_space(act_on_section(action, space[j]), space);
        if (!c) return out;
        for (std::size_t i = 0; i < space.dimension(); ++i) m(i, j) = (*c)[i];
    }
    out.preserved = true;
    out.matrix = std::move(m);
    return out;
}

InducedAction derivation_preserves_space(const Derivation& d, const SectionSpace& space) {
    InducedAction out;
    ExactMatrix m(space.registry(), space.dimension(), space.dimension());
    for (std::size_t j = 0; j < space.dimension(); ++j) {
        auto c = coords_in_space(apply_derivation(d, space[j]), space);
        if (!c) return out;
        for (std::size_t i = 0; i < space.dimension(); ++i) m(i, j) = (*c)[i];
    }
    out.preserved = true;
    out.matrix = std::move(m);
    return out;
}

ParametricAction linear_action(const ParametricAction& source, const std::vector<std::string>& target_coords,
                               const ExactMatrix& induced) {
    const auto& reg = source.registry();
    if (induced.rows() != target_coords.size() || induced.cols() != target_coords.size())
        throw UsageError("induced matrix does not match the target coordinates");
    ParametricAction::Spec spec;
    for (auto p : source.params()) spec.params.push_back(reg->at(p).name);
    spec.identity = source.identity();
    for (auto u : source.units()) spec.units.push_back(reg->at(u).name);
    spec.factors.push_back(target_coords);
    for (std::size_t j = 0; j < target_coords.size(); ++j) {
        Polynomial image(reg);
        for (std::size_t i = 0; i < target_coords.size(); ++i)
            if (!induced(i, j).is_zero()) image += induced(i, j) * Polynomial::variable(reg, target_coords[i]);
        spec.images.emplace_back(target_coords[j], std::move(image));
    }
    return ParametricAction(reg, spec);
}

}  // namespace fanocert
