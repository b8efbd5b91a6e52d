#ifndef FANOCERT_MAPS_HPP
#define FANOCERT_MAPS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fanocert/actions.hpp"
#include "fanocert/polynomial.hpp"
#include "fanocert/projective.hpp"
#include "fanocert/sections.hpp"

namespace fanocert {

// Map between (multi)projective spaces given by a tuple of polynomials in
// the source coordinates, optionally read modulo a source hypersurface.
class RationalMap {
public:
    RationalMap(RegistryPtr reg, const std::vector<std::vector<std::string>>& source_factors,
                const std::vector<std::string>& target, std::vector<Polynomial> components,
                std::optional<Polynomial> modulus = std::nullopt);

    // Source with a multigrading (e.g. the Cox ring of a Hirzebruch
    // surface): components must share one multidegree.
    RationalMap(RegistryPtr reg, const Grading& source_grading, const std::vector<std::string>& target,
                std::vector<Polynomial> components, std::optional<Polynomial> modulus = std::nullopt);

    static RationalMap identity(RegistryPtr reg, const std::vector<std::string>& coords,
                                std::optional<Polynomial> modulus = std::nullopt);

    [[nodiscard]] const RegistryPtr& registry() const { return reg_; }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& source_factors() const { return factors_; }
    [[nodiscard]] const std::vector<std::size_t>& source() const { return source_; }
    [[nodiscard]] const std::vector<std::size_t>& target() const { return target_; }
    [[nodiscard]] const std::vector<Polynomial>& components() const { return components_; }
    [[nodiscard]] const std::optional<Polynomial>& modulus() const { return modulus_; }
    [[nodiscard]] const std::optional<Grading>& source_grading() const { return grading_; }

    // Substitution target coordinate -> component.
    [[nodiscard]] Substitution as_substitution() const;
    [[nodiscard]] RationalMap with_modulus(std::optional<Polynomial> modulus) const;

private:
    RegistryPtr reg_;
    std::vector<std::vector<std::size_t>> factors_;
    std::vector<std::size_t> source_;
    std::vector<std::size_t> target_;
    std::vector<Polynomial> components_;
    std::optional<Polynomial> modulus_;
    std::optional<Grading> grading_;

    void validate_common() const;
};

// Parametrized curve P^1 -> P^n: a map with a single binary source factor.
[[nodiscard]] RationalMap param_curve(RegistryPtr reg, const std::string& t0, const std::string& t1,
                                      const std::vector<std::string>& target,
                                      std::vector<Polynomial> components);

// g o f by substitution; no common factors are cancelled.
[[nodiscard]] RationalMap compose(const RationalMap& g, const RationalMap& f);

// Every cross difference A_i B_j - A_j B_i divisible by the modulus (or zero
// without one). The witness is the first offending cross difference.
[[nodiscard]] Verdict proportional_mod(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                       const std::optional<Polynomial>& modulus);

[[nodiscard]] bool image_in_hypersurface(const RationalMap& map, const Polynomial& equation);

[[nodiscard]] Polynomial restrict_to_curve(const Polynomial& f, const Substitution& curve);
[[nodiscard]] std::vector<Polynomial> restrict_to_curve(const RationalMap& map, const Substitution& curve);

// True iff the nonzero binary forms in (t0, t1) have no common factor of
// positive degree. Throws UsageError if a form involves other variables.
[[nodiscard]] bool binary_forms_coprime(const std::vector<Polynomial>& forms, std::size_t t0, std::size_t t1);

// Degree-d parametrization by d + 1 linearly independent binary forms with
// no common factor.
[[nodiscard]] bool is_rational_normal_curve(const RationalMap& curve);

struct Inversion {
    std::string param;    // e.g. "lam"
    std::string inverse;  // variable standing for param^-1
};

// Compares map(src.x) with tgt.map(x). With an inversion the target action
// is taken at the inverse parameter and denominators are cleared by a power
// of the parameter. The scalar witness (src side over tgt side) must be a
// monomial in the group parameters when it can be computed exactly.
[[nodiscard]] Verdict equivariance_up_to_scalar(const RationalMap& map, const ParametricAction& src,
                                                const ParametricAction& tgt,
                                                const std::optional<Inversion>& inversion = std::nullopt);

// Replaces inv^k by var^(N-k) after multiplying through by var^N, N the
// largest power of inv occurring in any of the polynomials.
[[nodiscard]] std::vector<Polynomial> clear_inverse(const std::vector<Polynomial>& polys, std::size_t inv,
                                                    std::size_t var);

// Point [num : den] of P^1 over the scalar polynomial ring; equality is
// cross-multiplication.
struct ProjectiveValue {
    Polynomial num;
    Polynomial den;

    [[nodiscard]] bool is_infinity() const { return den.is_zero(); }
    [[nodiscard]] bool equals(const ProjectiveValue& other) const {
        return num * other.den - den * other.num == Polynomial(num.registry());
    }
    [[nodiscard]] bool equals(const P1Point& p) const;
    [[nodiscard]] std::optional<P1Point> as_point() const;
    [[nodiscard]] std::string to_string() const;
};

// Affine chart around a point: substituting `chart` sends the point to the
// origin of the (x, y) plane.
struct AffineChart {
    Substitution chart;
    std::size_t x;
    std::size_t y;
};

// Tangent direction at the chart origin of the curve {f = 0}: writing
// f = alpha x + beta y + ..., returns alpha / beta. Throws UsageError when f
// does not vanish at the origin or its linear part vanishes.
[[nodiscard]] ProjectiveValue tangent_parameter(const Polynomial& f, const AffineChart& chart);

// Direction (in the same alpha/beta normalization) of the kernel of the
// differential of the map at the chart origin. Throws UsageError unless the
// kernel is exactly one-dimensional.
[[nodiscard]] ProjectiveValue differential_kernel_parameter(const RationalMap& map, const AffineChart& chart);

}  // namespace fanocert

#endif  // FANOCERT_MAPS_HPP
