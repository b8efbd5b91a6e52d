#include "fanocert/parser.hpp"

#include <cctype>
#include <limits>

namespace fanocert {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      detail_(message),
      position_(position) {}

namespace {

bool is_ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; }
bool is_ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_';
}
bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

class Parser {
public:
    Parser(std::string_view text, const RegistryPtr& reg) : text_(text), reg_(reg) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        const bool negate = accept('-');
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            skip_ws();
            const auto e = uint_literal();
            if (e > std::numeric_limits<unsigned>::max())
                fail("exponent too large");
            b = power(b, static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (is_digit(ch)) return Polynomial(reg_, rational_literal());
        if (is_ident_start(ch)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            auto idx = reg_->find(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(reg_, *idx);
        }
        fail(std::string("unexpected '") + ch + "'");
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned long long uint_literal() {
        const std::size_t start = pos_;
        const std::string d = digits();
        if (d.size() > 9) throw ParseError("exponent too large", start);
        return std::stoull(d);
    }

    Rational rational_literal() {
        const mpz_class num(digits(), 10);
        // A '/' only continues the literal when a denominator follows.
        std::size_t save = pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            const std::size_t den_pos = pos_;
            const mpz_class den(digits(), 10);
            if (den == 0) throw ParseError("zero denominator", den_pos);
            return {num, den};
        }
        pos_ = save;
        return Rational(num);
    }

    std::string_view text_;
    const RegistryPtr& reg_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RegistryPtr& reg) {
    if (!reg) throw UsageError("parse_polynomial needs a registry");
    return Parser(text, reg).parse();
}

std::vector<std::string> scan_identifiers(std::string_view text) {
    std::vector<std::string> names;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (is_ident_start(ch)) {
            const std::size_t start = i;
            while (i < text.size() && is_ident_char(text[i])) ++i;
            std::string name(text.substr(start, i - start));
            bool seen = false;
            for (const auto& n : names) seen = seen || n == name;
            if (!seen) names.push_back(std::move(name));
        } else {
            ++i;
        }
    }
    return names;
}

}  // namespace fanocert
