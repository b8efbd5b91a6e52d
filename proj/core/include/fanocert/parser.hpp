#ifndef FANOCERT_PARSER_HPP
#define FANOCERT_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fanocert/polynomial.hpp"

namespace fanocert {

// Syntax error or unknown variable; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    [[nodiscard]] std::size_t position() const { return position_; }
    [[nodiscard]] const std::string& detail() const { return detail_; }

private:
    std::string detail_;
    std::size_t position_;
};

// Grammar (whitespace-insensitive):
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := base ("^" uint)?
//   base   := rational | var | "(" expr ")"
//   rational := int ("/" uint)?
//   var    := letter (letter | digit | "_")*
[[nodiscard]] Polynomial parse_polynomial(std::string_view text, const RegistryPtr& reg);

// Variable names in order of first appearance; throws ParseError on
// characters outside the grammar's alphabet.
[[nodiscard]] std::vector<std::string> scan_identifiers(std::string_view text);

// Inverse of parse_polynomial on normalized polynomials.
[[nodiscard]] inline std::string format_polynomial(const Polynomial& f) { return f.to_string(); }

}  // namespace fanocert

#endif  // FANOCERT_PARSER_HPP
