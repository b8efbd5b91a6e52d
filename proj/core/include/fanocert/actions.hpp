#ifndef FANOCERT_ACTIONS_HPP
#define FANOCERT_ACTIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanocert/matrix.hpp"
#include "fanocert/polynomial.hpp"
#include "fanocert/sections.hpp"

namespace fanocert {

// Outcome of an identity check: on failure `witness` holds the first
// polynomial that should have vanished; on success `scalars` may carry the
// proportionality factors that were found.
struct Verdict {
    bool holds = false;
    std::optional<Polynomial> witness;
    std::vector<Polynomial> scalars;
    std::string detail;

    explicit operator bool() const { return holds; }
};

// Algebraic group acting on a product of projective spaces by substituting
// polynomials in the coordinates and the group parameters.
class ParametricAction {
public:
    struct Spec {
        std::vector<std::string> params;
        std::vector<Rational> identity;  // one value per parameter
        std::vector<std::string> units;  // parameters that are invertible on the group
        std::vector<std::vector<std::string>> factors;
        std::vector<std::pair<std::string, Polynomial>> images;  // coordinate -> image
    };

    // Validates that the identity parameters act trivially.
    ParametricAction(RegistryPtr reg, const Spec& spec);

    [[nodiscard]] const RegistryPtr& registry() const { return reg_; }
    [[nodiscard]] const std::vector<std::size_t>& params() const { return params_; }
    [[nodiscard]] const std::vector<Rational>& identity() const { return identity_; }
    [[nodiscard]] const std::vector<std::size_t>& units() const { return units_; }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& factors() const { return factors_; }
    [[nodiscard]] const std::vector<std::size_t>& coordinates() const { return coords_; }
    [[nodiscard]] const Substitution& images() const { return images_; }
    [[nodiscard]] Polynomial image(std::size_t coord) const { return images_.image(coord); }

    [[nodiscard]] Substitution identity_substitution() const;

    // Fixes some parameters (e.g. a = 0 for the torus); the fixed parameters
    // stay in the parameter list with their images frozen.
    [[nodiscard]] ParametricAction specialized(const Substitution& params) const;

private:
    ParametricAction() = default;

    RegistryPtr reg_;
    std::vector<std::size_t> params_;
    std::vector<Rational> identity_;
    std::vector<std::size_t> units_;
    std::vector<std::vector<std::size_t>> factors_;
    std::vector<std::size_t> coords_;
    Substitution images_{nullptr};
};

// Composition law (g', g) -> g' * g expressed in the primed and unprimed
// parameters.
struct GroupLaw {
    std::vector<std::string> primed;           // parallel to the action's params
    std::vector<Polynomial> composed;          // parallel to the action's params
};

// Pullback of a section: f with every coordinate replaced by its image.
[[nodiscard]] Polynomial act_on_section(const ParametricAction& action, const Polynomial& f);

// s with act(f) = s * f and s free of coordinates, when it exists.
[[nodiscard]] std::optional<Polynomial> semi_invariance_factor(const ParametricAction& action,
                                                               const Polynomial& f);

// Checks g'.(g.x) ~ (g' g).x factor by factor with all parameters formal.
[[nodiscard]] Verdict verify_group_law(const ParametricAction& action, const GroupLaw& law);

// Infinitesimal generator along one parameter direction, computed as the
// eps-linear part of the action at identity + eps.
[[nodiscard]] Derivation lie_derivation(const ParametricAction& action, std::string_view param);

// Lines of the space spanned by eigenvectors of the torus derivation that
// the nilpotent derivation kills. Throws UsageError if a basis element is
// not an eigenvector, or if some eigenspace contains a pencil of such lines.
[[nodiscard]] std::vector<Polynomial> semi_invariant_lines(const SectionSpace& space,
                                                           const Derivation& torus,
                                                           const Derivation& nilpotent);

struct StabilizerConditions {
    std::vector<Polynomial> generators;
    [[nodiscard]] bool trivial() const { return generators.empty(); }
};

// 2x2 minors of the coordinate rows of f and act(f), with unit-parameter
// monomials and rational content stripped. Throws UsageError when f or
// act(f) is outside the space.
[[nodiscard]] StabilizerConditions stabilizer_conditions(const Polynomial& f,
                                                         const ParametricAction& action,
                                                         const SectionSpace& space);

// True iff the candidate divides every generator and equals one of them up
// to a rational factor and a monomial in the unit parameters.
[[nodiscard]] bool conditions_equal_principal(const StabilizerConditions& conds,
                                              const Polynomial& candidate,
                                              const std::vector<std::size_t>& units);

struct InducedAction {
    bool preserved = false;
    // Column j holds the coordinates of the image of basis element j.
    std::optional<ExactMatrix> matrix;
};

[[nodiscard]] InducedAction action_preserves_space(const ParametricAction& action,
                                                   const SectionSpace& space);
[[nodiscard]] InducedAction derivation_preserves_space(const Derivation& d,
                                                       const SectionSpace& space);

// Linear action on target coordinates induced by a matrix on a space of
// sections: w_j -> sum_i M(i, j) w_i.
[[nodiscard]] ParametricAction linear_action(const ParametricAction& source,
                                             const std::vector<std::string>& target_coords,
                                             const ExactMatrix& induced);

}  // namespace fanocert

#endif  // FANOCERT_ACTIONS_HPP
