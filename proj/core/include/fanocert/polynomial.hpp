#ifndef FANOCERT_POLYNOMIAL_HPP
#define FANOCERT_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fanocert/rational.hpp"
#include "fanocert/registry.hpp"

namespace fanocert {

// Dense exponent vector over a registry; slot i is the exponent of
// variable i. Absent variables simply carry exponent 0.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t exponent = 1);

    [[nodiscard]] std::size_t size() const { return exps_.size(); }
    [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    [[nodiscard]] std::span<const std::uint32_t> exponents() const { return exps_; }
    [[nodiscard]] std::uint64_t total_degree() const { return degree_; }
    [[nodiscard]] bool is_one() const { return degree_ == 0; }

    [[nodiscard]] bool divides(const Monomial& other) const;
    [[nodiscard]] std::optional<Monomial> divide(const Monomial& divisor) const;
    [[nodiscard]] Monomial with_exponent(std::size_t i, std::uint32_t e) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    // Graded lexicographic: total degree first, then the first differing
    // exponent in registry order decides.
    friend std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_compare(a, b) == std::strong_ordering::greater;
    }
};

// Sparse polynomial with exact rational coefficients. Terms are kept in
// descending graded-lex order; zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    explicit Polynomial(RegistryPtr reg);
    Polynomial(RegistryPtr reg, const Rational& constant);

    static Polynomial variable(const RegistryPtr& reg, std::string_view name);
    static Polynomial variable(const RegistryPtr& reg, std::size_t index);
    static Polynomial term(const RegistryPtr& reg, Monomial m, const Rational& coefficient);

    [[nodiscard]] const RegistryPtr& registry() const { return reg_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t num_terms() const { return terms_.size(); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    // Constant term; for non-constant polynomials this is the coefficient of 1.
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] Rational coefficient(const Monomial& m) const;

    // Throws UsageError on the zero polynomial.
    [[nodiscard]] std::pair<Monomial, Rational> leading_term() const;
    [[nodiscard]] Rational leading_coefficient() const { return leading_term().second; }

    // Total degree; -1 for the zero polynomial.
    [[nodiscard]] long total_degree() const;
    [[nodiscard]] long degree_in(std::size_t var) const;
    [[nodiscard]] bool involves(std::size_t var) const { return degree_in(var) > 0; }
    [[nodiscard]] bool is_homogeneous() const;

    [[nodiscard]] Polynomial scaled(const Rational& r) const;
    [[nodiscard]] Polynomial monic() const;

    [[nodiscard]] std::string to_string() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }

    friend Polynomial operator*(const Rational& r, const Polynomial& p) { return p.scaled(r); }
    friend Polynomial operator+(Polynomial a, const Rational& r);
    friend Polynomial operator-(Polynomial a, const Rational& r) { return std::move(a) + (-r); }

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

    // Adds coefficient * m without the registry check; internal helper for
    // algorithms that build terms one by one.
    void add_term(const Monomial& m, const Rational& coefficient);

private:
    void require_same_registry(const Polynomial& o) const;

    RegistryPtr reg_;
    TermMap terms_;
};

[[nodiscard]] Polynomial power(const Polynomial& f, unsigned n);

// Simultaneous replacement of variables by polynomials over the same registry.
class Substitution {
public:
    explicit Substitution(RegistryPtr reg) : reg_(std::move(reg)) {}

    Substitution& set(std::size_t var, Polynomial image);
    Substitution& set(std::string_view var, Polynomial image);
    Substitution& set(std::string_view var, const Rational& value);
    Substitution& set(std::size_t var, const Rational& value);

    [[nodiscard]] const RegistryPtr& registry() const { return reg_; }
    [[nodiscard]] const std::map<std::size_t, Polynomial>& images() const { return images_; }
    [[nodiscard]] const Polynomial* find(std::size_t var) const;
    // The image of a variable; unassigned variables map to themselves.
    [[nodiscard]] Polynomial image(std::size_t var) const;

private:
    RegistryPtr reg_;
    std::map<std::size_t, Polynomial> images_;
};

[[nodiscard]] Polynomial substitute(const Polynomial& f, const Substitution& s);

// Quotient q with f = q*g if g divides f, nullopt otherwise. Throws
// UsageError when g is zero.
[[nodiscard]] std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

[[nodiscard]] Polynomial partial_derivative(const Polynomial& f, std::size_t var);

// Coefficient of var^k in f, viewed as a polynomial in var over the other variables.
[[nodiscard]] Polynomial coefficient_extract(const Polynomial& f, std::size_t var, unsigned k);
[[nodiscard]] Polynomial coefficient_extract(const Polynomial& f, std::string_view var, unsigned k);

// Largest monomial in the given variables dividing every term of f
// (the one-monomial for zero).
[[nodiscard]] Monomial monomial_content(const Polynomial& f, std::span<const std::size_t> vars);
[[nodiscard]] Polynomial divide_by_monomial(const Polynomial& f, const Monomial& m);

// Derivation of the polynomial ring determined by the images of the
// variables; unlisted variables map to zero.
class Derivation {
public:
    explicit Derivation(RegistryPtr reg) : reg_(std::move(reg)) {}

    Derivation& set(std::size_t var, Polynomial image);
    Derivation& set(std::string_view var, Polynomial image);

    [[nodiscard]] const RegistryPtr& registry() const { return reg_; }
    [[nodiscard]] const std::map<std::size_t, Polynomial>& images() const { return images_; }
    [[nodiscard]] bool is_zero() const { return images_.empty(); }

    [[nodiscard]] std::string to_string() const;

private:
    RegistryPtr reg_;
    std::map<std::size_t, Polynomial> images_;
};

[[nodiscard]] Polynomial apply_derivation(const Derivation& d, const Polynomial& f);

}  // namespace fanocert

#endif  // FANOCERT_POLYNOMIAL_HPP
