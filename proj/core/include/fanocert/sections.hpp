#ifndef FANOCERT_SECTIONS_HPP
#define FANOCERT_SECTIONS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanocert/matrix.hpp"
#include "fanocert/polynomial.hpp"
#include "fanocert/projective.hpp"

namespace fanocert {

using Multidegree = std::vector<long>;

// Integer weight vectors on a subset of the registry's variables. Variables
// outside the grading (parameters) have degree zero.
class Grading {
public:
    Grading(RegistryPtr reg, const std::vector<std::pair<std::string, std::vector<long>>>& weights);

    [[nodiscard]] const RegistryPtr& registry() const { return reg_; }
    [[nodiscard]] std::size_t components() const { return ncomp_; }
    [[nodiscard]] const std::vector<std::size_t>& variables() const { return vars_; }
    [[nodiscard]] const std::vector<long>& weight(std::size_t slot) const { return weights_[slot]; }

    [[nodiscard]] Multidegree degree(const Monomial& m) const;
    // Degree shared by every term, or nullopt if f is not homogeneous (zero
    // has no degree either).
    [[nodiscard]] std::optional<Multidegree> degree(const Polynomial& f) const;

private:
    RegistryPtr reg_;
    std::vector<std::size_t> vars_;
    std::vector<std::vector<long>> weights_;
    std::size_t ncomp_ = 0;
};

// All monomials in the graded variables of exactly the given multidegree,
// in descending graded-lex order. Throws UsageError if the grading admits
// no positive linear functional on its variables (unbounded degree cone).
[[nodiscard]] std::vector<Monomial> monomial_basis(const Grading& grading, const Multidegree& degree);

// Integer torus weight per variable; unlisted variables have weight 0.
using TorusWeights = std::map<std::size_t, long>;
[[nodiscard]] TorusWeights torus_weights(const RegistryPtr& reg,
                                         const std::vector<std::pair<std::string, long>>& w);
[[nodiscard]] long torus_weight(const Monomial& m, const TorusWeights& w);
// Weight shared by all terms, nullopt for mixed weights.
[[nodiscard]] std::optional<long> torus_weight(const Polynomial& f, const TorusWeights& w);

// Finite linearly independent family of polynomials, read as vectors whose
// coordinates are indexed by monomials in the non-scalar variables.
class SectionSpace {
public:
    explicit SectionSpace(RegistryPtr reg, std::vector<Polynomial> basis = {},
                          Multidegree label = {});

    // Checks that every element is homogeneous of the given multidegree.
    static SectionSpace graded(const Grading& grading, std::vector<Polynomial> basis,
                               const Multidegree& degree);
    // Span of all monomials of a multidegree.
    static SectionSpace complete(const Grading& grading, const Multidegree& degree);

    [[nodiscard]] const RegistryPtr& registry() const { return reg_; }
    [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
    [[nodiscard]] const std::vector<Polynomial>& basis() const { return basis_; }
    [[nodiscard]] const Polynomial& operator[](std::size_t i) const { return basis_.at(i); }
    [[nodiscard]] const Multidegree& label() const { return label_; }

    [[nodiscard]] Polynomial combine(const std::vector<Polynomial>& coefficients) const;

private:
    RegistryPtr reg_;
    std::vector<Polynomial> basis_;
    Multidegree label_;
};

// Splits f by monomials in the non-scalar variables; the values are the
// scalar-variable coefficients.
[[nodiscard]] std::map<Monomial, Polynomial, GrlexDescending> split_scalars(const Polynomial& f);

// Column i of the result holds the coefficients of polys[i]; rows follow
// the returned monomial list.
struct CoefficientMatrix {
    ExactMatrix matrix;
    std::vector<Monomial> monomials;
};
[[nodiscard]] CoefficientMatrix coefficient_matrix(const RegistryPtr& reg,
                                                   const std::vector<Polynomial>& polys);

// Exact coordinates of f in the basis, or nullopt if f is outside the span.
// Coordinates may be polynomials in the scalar variables.
[[nodiscard]] std::optional<std::vector<Polynomial>> coords_in_space(const Polynomial& f,
                                                                     const SectionSpace& space);

[[nodiscard]] bool contained_in(const SectionSpace& sub, const SectionSpace& space);
[[nodiscard]] bool same_span(const SectionSpace& a, const SectionSpace& b);

// Partition of the basis by torus weight. Throws UsageError naming the
// first basis element that is not a weight vector.
[[nodiscard]] std::map<long, SectionSpace> weight_decompose(const SectionSpace& space,
                                                            const TorusWeights& weights);

// Restriction of sections along a map P^1 -> X given by substituting binary
// forms in (t0, t1) for the coordinates.
struct BinaryCurve {
    Substitution map;
    std::size_t t0;
    std::size_t t1;
};

struct OrderCondition {
    P1Point point;  // [t0 : t1]
    unsigned order;
};

// Order of vanishing of a binary form at a point; the zero form returns nullopt.
[[nodiscard]] std::optional<unsigned> vanishing_order(const Polynomial& form, std::size_t t0,
                                                      std::size_t t1, const P1Point& point);

// Sections whose restriction along the curve vanishes to at least the
// requested orders. Throws UsageError when restricted degrees disagree.
[[nodiscard]] SectionSpace restricted_order_subspace(const SectionSpace& space,
                                                     const BinaryCurve& curve,
                                                     const std::vector<OrderCondition>& conditions);

}  // namespace fanocert

#endif  // FANOCERT_SECTIONS_HPP
