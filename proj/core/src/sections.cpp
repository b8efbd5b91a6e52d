#include "fanocert/sections.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace fanocert {

// ---- Grading --------------------------------------------------------------

Grading::Grading(RegistryPtr reg,
                 const std::vector<std::pair<std::string, std::vector<long>>>& weights)
    : reg_(std::move(reg)) {
    for (const auto& [name, w] : weights) {
        const auto idx = reg_->index(name);
        if (std::find(vars_.begin(), vars_.end(), idx) != vars_.end())
            throw UsageError("variable '" + name + "' graded twice");
        if (vars_.empty())
            ncomp_ = w.size();
        else if (w.size() != ncomp_)
            throw UsageError("weight vector of '" + name + "' has the wrong length");
        vars_.push_back(idx);
        weights_.push_back(w);
    }
    if (vars_.empty()) throw UsageError("empty grading");
}

Multidegree Grading::degree(const Monomial& m) const {
    Multidegree d(ncomp_, 0);
    for (std::size_t s = 0; s < vars_.size(); ++s) {
        const long e = m[vars_[s]];
        for (std::size_t c = 0; c < ncomp_; ++c) d[c] += e * weights_[s][c];
    }
    return d;
}

std::optional<Multidegree> Grading::degree(const Polynomial& f) const {
    if (f.is_zero()) return std::nullopt;
    std::optional<Multidegree> d;
    for (const auto& [m, c] : f.terms()) {
        auto dm = degree(m);
        if (d && *d != dm) return std::nullopt;
        d = std::move(dm);
    }
    return d;
}

namespace {

// Searches a small box of integer functionals for one that is positive on
// every graded variable.
std::optional<std::vector<long>> positive_functional(const Grading& g) {
    constexpr long kBound = 8;
    const std::size_t n = g.components();
    std::vector<long> u(n, -kBound);
    for (;;) {
        bool ok = true;
        for (std::size_t s = 0; s < g.variables().size() && ok; ++s) {
            long h = 0;
            for (std::size_t c = 0; c < n; ++c) h += u[c] * g.weight(s)[c];
            ok = h > 0;
        }
        if (ok) return u;
        std::size_t c = 0;
        while (c < n && u[c] == kBound) u[c++] = -kBound;
        if (c == n) return std::nullopt;
        ++u[c];
    }
}

}  // namespace

std::vector<Monomial> monomial_basis(const Grading& grading, const Multidegree& degree) {
    if (degree.size() != grading.components())
        throw UsageError("multidegree length does not match the grading");
    auto u = positive_functional(grading);
    if (!u) throw UsageError("grading has an unbounded degree cone");

    const auto& vars = grading.variables();
    std::vector<long> height(vars.size());
    for (std::size_t s = 0; s < vars.size(); ++s)
        height[s] = std::inner_product(u->begin(), u->end(), grading.weight(s).begin(), 0L);
    const long target = std::inner_product(u->begin(), u->end(), degree.begin(), 0L);

    const std::size_t nreg = grading.registry()->size();
    std::vector<Monomial> out;
    std::vector<std::uint32_t> exps(nreg, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t s, long remaining) {
        if (s == vars.size()) {
            if (remaining != 0) return;
            Monomial m(exps);
            if (grading.degree(m) == degree) out.push_back(std::move(m));
            return;
        }
        for (long e = 0; e * height[s] <= remaining; ++e) {
            exps[vars[s]] = static_cast<std::uint32_t>(e);
            rec(s + 1, remaining - e * height[s]);
        }
        exps[vars[s]] = 0;
    };
    if (target >= 0) rec(0, target);
    std::sort(out.begin(), out.end(), GrlexDescending{});
    return out;
}

// ---- torus weights --------------------------------------------------------

TorusWeights torus_weights(const RegistryPtr& reg, const std::vector<std::pair<std::string, long>>& w) {
    TorusWeights out;
    for (const auto& [name, weight] : w) out[reg->index(name)] = weight;
    return out;
}

long torus_weight(const Monomial& m, const TorusWeights& w) {
    long total = 0;
    for (const auto& [var, weight] : w) total += static_cast<long>(m[var]) * weight;
    return total;
}

std::optional<long> torus_weight(const Polynomial& f, const TorusWeights& w) {
    std::optional<long> out;
    for (const auto& [m, c] : split_scalars(f)) {
        const long k = torus_weight(m, w);
        if (out && *out != k) return std::nullopt;
        out = k;
    }
    return out;
}

// ---- coefficient matrices -------------------------------------------------

std::map<Monomial, Polynomial, GrlexDescending> split_scalars(const Polynomial& f) {
    const auto& reg = f.registry();
    std::vector<bool> scalar(reg->size());
    for (std::size_t i = 0; i < reg->size(); ++i) scalar[i] = is_scalar_role(reg->at(i).role);

    std::map<Monomial, Polynomial, GrlexDescending> out;
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::uint32_t> geo(reg->size(), 0);
        std::vector<std::uint32_t> sca(reg->size(), 0);
        for (std::size_t i = 0; i < reg->size(); ++i) (scalar[i] ? sca : geo)[i] = m[i];
        auto [it, inserted] = out.try_emplace(Monomial(std::move(geo)), reg);
        it->second.add_term(Monomial(std::move(sca)), c);
    }
    return out;
}

CoefficientMatrix coefficient_matrix(const RegistryPtr& reg, const std::vector<Polynomial>& polys) {
    std::vector<std::map<Monomial, Polynomial, GrlexDescending>> parts;
    std::set<Monomial, GrlexDescending> rows;
    for (const auto& p : polys) {
        if (p.registry() != reg) throw UsageError("polynomial over a different registry");
        parts.push_back(split_scalars(p));
        for (const auto& [m, c] : parts.back()) rows.insert(m);
    }
    CoefficientMatrix out{ExactMatrix(reg, rows.size(), polys.size()), {rows.begin(), rows.end()}};
    for (std::size_t r = 0; r < out.monomials.size(); ++r)
        for (std::size_t c = 0; c < polys.size(); ++c) {
            auto it = parts[c].find(out.monomials[r]);
            if (it != parts[c].end()) out.matrix(r, c) = it->second;
        }
    return out;
}

// ---- SectionSpace ---------------------------------------------------------

SectionSpace::SectionSpace(RegistryPtr reg, std::vector<Polynomial> basis, Multidegree label)
    : reg_(std::move(reg)), basis_(std::move(basis)), label_(std::move(label)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].registry() != reg_) throw UsageError("basis element over a different registry");
        if (basis_[i].is_zero()) throw UsageError("basis element " + std::to_string(i) + " is zero");
    }
    if (!basis_.empty() && rank(coefficient_matrix(reg_, basis_).matrix) != basis_.size())
        throw UsageError("basis elements are linearly dependent");
}

SectionSpace SectionSpace::graded(const Grading& grading, std::vector<Polynomial> basis,
                                  const Multidegree& degree) {
    for (const auto& b : basis) {
        // Only the graded variables contribute to the degree.
        if (grading.degree(b) != std::optional<Multidegree>(degree))
            throw UsageError("basis element " + b.to_string() + " is not homogeneous of the label");
    }
    return SectionSpace(grading.registry(), std::move(basis), degree);
}

SectionSpace SectionSpace::complete(const Grading& grading, const Multidegree& degree) {
    std::vector<Polynomial> basis;
    for (auto& m : monomial_basis(grading, degree))
        basis.push_back(Polynomial::term(grading.registry(), std::move(m), Rational(1)));
    return SectionSpace(grading.registry(), std::move(basis), degree);
}

Polynomial SectionSpace::combine(const std::vector<Polynomial>& coefficients) const {
    if (coefficients.size() != basis_.size()) throw UsageError("coefficient count mismatch");
    Polynomial out(reg_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!coefficients[i].is_zero()) out += coefficients[i] * basis_[i];
    return out;
}

std::optional<std::vector<Polynomial>> coords_in_space(const Polynomial& f, const SectionSpace& space) {
    const auto& reg = space.registry();
    if (f.registry() != reg) throw UsageError("polynomial over a different registry");
    const std::size_t n = space.dimension();
    std::vector<Polynomial> zero(n, Polynomial(reg));
    if (f.is_zero()) return zero;
    if (n == 0) return std::nullopt;

    auto polys = space.basis();
    polys.push_back(f);
    const auto ker = kernel(coefficient_matrix(reg, polys).matrix);
    for (const auto& v : ker.basis) {
        const Polynomial& d = v[n];
        if (d.is_zero()) continue;
        std::vector<Polynomial> coords;
        for (std::size_t i = 0; i < n; ++i) {
            auto q = exact_divide(-v[i], d);
            if (!q) return std::nullopt;  // coordinates would be rational functions
            coords.push_back(std::move(*q));
        }
        return coords;
    }
    return std::nullopt;
}

bool contained_in(const SectionSpace& sub, const SectionSpace& space) {
    return std::all_of(sub.basis().begin(), sub.basis().end(),
                       [&](const Polynomial& b) { return coords_in_space(b, space).has_value(); });
}

bool same_span(const SectionSpace& a, const SectionSpace& b) {
    return a.dimension() == b.dimension() && contained_in(a, b);
}

std::map<long, SectionSpace> weight_decompose(const SectionSpace& space, const TorusWeights& weights) {
    std::map<long, std::vector<Polynomial>> classes;
    for (const auto& b : space.basis()) {
        auto w = torus_weight(b, weights);
        if (!w) throw UsageError("basis element " + b.to_string() + " is not a weight vector");
        classes[*w].push_back(b);
    }
    std::map<long, SectionSpace> out;
    for (auto& [w, basis] : classes)
        out.emplace(w, SectionSpace(space.registry(), std::move(basis), space.label()));
    return out;
}

// ---- restriction to curves ------------------------------------------------

namespace {

// Moves the point to [1 : 0] so that the order there is the t1-adic order.
// Returns the transformed form and the variable whose order matters.
std::pair<Polynomial, std::size_t> localize(const Polynomial& form, std::size_t t0, std::size_t t1,
                                            const P1Point& point) {
    const auto& reg = form.registry();
    if (point.x0().is_zero()) return {form, t0};
    if (point.x1().is_zero()) return {form, t1};
    Substitution s(reg);
    const auto T0 = Polynomial::variable(reg, t0);
    const auto T1 = Polynomial::variable(reg, t1);
    s.set(t0, T0.scaled(point.x0()));
    s.set(t1, T0.scaled(point.x1()) + T1);
    return {substitute(form, s), t1};
}

}  // namespace

std::optional<unsigned> vanishing_order(const Polynomial& form, std::size_t t0, std::size_t t1,
                                        const P1Point& point) {
    if (form.is_zero()) return std::nullopt;
    const auto [g, var] = localize(form, t0, t1, point);
    unsigned order = ~0U;
    for (const auto& [m, c] : g.terms()) order = std::min<unsigned>(order, m[var]);
    return order;
}

SectionSpace restricted_order_subspace(const SectionSpace& space, const BinaryCurve& curve,
                                       const std::vector<OrderCondition>& conditions) {
    const auto& reg = space.registry();
    if (curve.map.registry() != reg) throw UsageError("curve over a different registry");

    std::vector<Polynomial> restricted;
    std::optional<long> degree;
    for (const auto& b : space.basis()) {
        Polynomial r = substitute(b, curve.map);
        if (!r.is_zero()) {
            for (const auto& [m, c] : split_scalars(r)) {
                const long d = static_cast<long>(m[curve.t0]) + static_cast<long>(m[curve.t1]);
                if (m.total_degree() != static_cast<std::uint64_t>(d))
                    throw UsageError("restriction of " + b.to_string() + " is not a binary form");
                if (degree && *degree != d)
                    throw UsageError("restricted sections have inconsistent degrees");
                degree = d;
            }
        }
        restricted.push_back(std::move(r));
    }

    // One linear equation per (condition, low-order coefficient, monomial).
    std::vector<std::vector<Polynomial>> equations;
    for (const auto& cond : conditions) {
        std::vector<Polynomial> local;
        std::size_t var = curve.t1;
        for (const auto& r : restricted) {
            auto [g, v] = localize(r, curve.t0, curve.t1, cond.point);
            local.push_back(std::move(g));
            var = v;
        }
        for (unsigned k = 0; k < cond.order; ++k) {
            if (degree && static_cast<long>(k) > *degree) break;
            std::vector<Polynomial> coeffs;
            for (const auto& g : local) coeffs.push_back(coefficient_extract(g, var, k));
            auto cm = coefficient_matrix(reg, coeffs);
            for (std::size_t row = 0; row < cm.matrix.rows(); ++row) {
                std::vector<Polynomial> eq;
                for (std::size_t c = 0; c < cm.matrix.cols(); ++c) eq.push_back(cm.matrix(row, c));
                equations.push_back(std::move(eq));
            }
        }
    }

    if (equations.empty()) return space;
    ExactMatrix m(reg, equations.size(), space.dimension());
    for (std::size_t r = 0; r < equations.size(); ++r)
        for (std::size_t c = 0; c < space.dimension(); ++c) m(r, c) = equations[r][c];

    std::vector<Polynomial> basis;
    for (const auto& v : kernel(m).basis) basis.push_back(space.combine(v).monic());
    return SectionSpace(reg, std::move(basis), space.label());
}

}  // namespace fanocert
