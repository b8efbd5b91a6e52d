#ifndef FANOCERT_REGISTRY_HPP
#define FANOCERT_REGISTRY_HPP

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fanocert {

// Raised when the caller violates an operation's preconditions
// (registry mismatch, zero divisor, unknown variable, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class VarRole { coordinate, group_parameter, family_parameter, curve_parameter, infinitesimal };

// Group, family and infinitesimal variables play the role of scalars when a
// polynomial is read as a vector in a space of sections.
[[nodiscard]] constexpr bool is_scalar_role(VarRole r) {
    return r == VarRole::group_parameter || r == VarRole::family_parameter ||
           r == VarRole::infinitesimal;
}

[[nodiscard]] std::string_view to_string(VarRole r);

struct Variable {
    std::string name;
    VarRole role = VarRole::coordinate;
};

// Ordered, immutable set of named variables. The order fixes the monomial
// order of every polynomial built over the registry.
class VariableRegistry {
public:
    explicit VariableRegistry(std::vector<Variable> vars);

    static std::shared_ptr<const VariableRegistry> make(std::vector<Variable> vars) {
        return std::make_shared<const VariableRegistry>(std::move(vars));
    }

    [[nodiscard]] std::size_t size() const { return vars_.size(); }
    [[nodiscard]] const Variable& at(std::size_t i) const { return vars_.at(i); }
    [[nodiscard]] const std::vector<Variable>& variables() const { return vars_; }

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
    // Throws UsageError for unknown names.
    [[nodiscard]] std::size_t index(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const { return find(name).has_value(); }

    [[nodiscard]] std::vector<std::size_t> indices_with_role(VarRole role) const;

private:
    std::vector<Variable> vars_;
    std::unordered_map<std::string, std::size_t> by_name_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

}  // namespace fanocert

#endif  // FANOCERT_REGISTRY_HPP
