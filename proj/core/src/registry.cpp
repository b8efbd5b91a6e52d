#include "fanocert/registry.hpp"

#include <cctype>

namespace fanocert {

std::string_view to_string(VarRole r) {
    switch (r) {
        case VarRole::coordinate: return "coordinate";
        case VarRole::group_parameter: return "group-parameter";
        case VarRole::family_parameter: return "family-parameter";
        case VarRole::curve_parameter: return "curve-parameter";
        case VarRole::infinitesimal: return "infinitesimal";
    }
    return "?";
}

namespace {

bool valid_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

}  // namespace

VariableRegistry::VariableRegistry(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!valid_name(vars_[i].name))
            throw UsageError("invalid variable name '" + vars_[i].name + "'");
        if (!by_name_.emplace(vars_[i].name, i).second)
            throw UsageError("duplicate variable name '" + vars_[i].name + "'");
    }
}

std::optional<std::size_t> VariableRegistry::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::size_t VariableRegistry::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UsageError("unknown variable '" + std::string(name) + "'");
}

std::vector<std::size_t> VariableRegistry::indices_with_role(VarRole role) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].role == role) out.push_back(i);
    return out;
}

}  // namespace fanocert
