#include "fanocert/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace fanocert {

// ---- Monomial -------------------------------------------------------------

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t exponent) {
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(index) = exponent;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
    if (!divisor.divides(*this)) return std::nullopt;
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - divisor.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(std::size_t i, std::uint32_t e) const {
    auto copy = exps_;
    copy.at(i) = e;
    return Monomial(std::move(copy));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
    return Monomial(std::move(e));
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
    return std::strong_ordering::equal;
}

// ---- Polynomial -----------------------------------------------------------

Polynomial::Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {
    if (!reg_) throw UsageError("polynomial needs a registry");
}

Polynomial::Polynomial(RegistryPtr reg, const Rational& constant) : Polynomial(std::move(reg)) {
    if (!constant.is_zero()) terms_.emplace(Monomial(reg_->size()), constant);
}

Polynomial Polynomial::variable(const RegistryPtr& reg, std::string_view name) {
    return variable(reg, reg->index(name));
}

Polynomial Polynomial::variable(const RegistryPtr& reg, std::size_t index) {
    if (index >= reg->size()) throw UsageError("variable index out of range");
    return term(reg, Monomial::variable(reg->size(), index), Rational(1));
}

Polynomial Polynomial::term(const RegistryPtr& reg, Monomial m, const Rational& coefficient) {
    Polynomial p(reg);
    if (m.size() != reg->size()) throw UsageError("monomial does not match registry size");
    if (!coefficient.is_zero()) p.terms_.emplace(std::move(m), coefficient);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(reg_->size())); }

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> Polynomial::leading_term() const {
    if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
    return *terms_.begin();
}

long Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(terms_.begin()->first.total_degree());
}

long Polynomial::degree_in(std::size_t var) const {
    long d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, m[var]);
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.total_degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.total_degree() == d; });
}

Polynomial Polynomial::scaled(const Rational& r) const {
    Polynomial out(reg_);
    if (r.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * r);
    return out;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
}

void Polynomial::require_same_registry(const Polynomial& o) const {
    if (reg_ != o.reg_) throw UsageError("polynomials belong to different registries");
}

void Polynomial::add_term(const Monomial& m, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_registry(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_registry(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_registry(b);
    Polynomial out(a.reg_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial operator+(Polynomial a, const Rational& r) {
    a.add_term(Monomial(a.reg_->size()), r);
    return a;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    a.require_same_registry(b);
    return a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        const Rational mag = c.abs();
        bool wrote = false;
        if (!mag.is_one() || m.is_one()) {
            os << mag.to_string();
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) os << '*';
            os << reg_->at(i).name;
            if (m[i] > 1) os << '^' << m[i];
            wrote = true;
        }
    }
    return os.str();
}

Polynomial power(const Polynomial& f, unsigned n) {
    Polynomial result(f.registry(), Rational(1));
    Polynomial base = f;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

// ---- Substitution ---------------------------------------------------------

Substitution& Substitution::set(std::size_t var, Polynomial image) {
    if (var >= reg_->size()) throw UsageError("substitution variable out of range");
    if (image.registry() != reg_) throw UsageError("substitution image over a different registry");
    images_.insert_or_assign(var, std::move(image));
    return *this;
}

Substitution& Substitution::set(std::string_view var, Polynomial image) {
    return set(reg_->index(var), std::move(image));
}

Substitution& Substitution::set(std::string_view var, const Rational& value) {
    return set(reg_->index(var), Polynomial(reg_, value));
}

Substitution& Substitution::set(std::size_t var, const Rational& value) {
    return set(var, Polynomial(reg_, value));
}

const Polynomial* Substitution::find(std::size_t var) const {
    auto it = images_.find(var);
    return it == images_.end() ? nullptr : &it->second;
}

Polynomial Substitution::image(std::size_t var) const {
    if (const auto* p = find(var)) return *p;
    return Polynomial::variable(reg_, var);
}

Polynomial substitute(const Polynomial& f, const Substitution& s) {
    if (f.registry() != s.registry()) throw UsageError("substitution over a different registry");
    const auto& reg = f.registry();
    const std::size_t n = reg->size();

    // powers[var][k] = image(var)^k, filled lazily.
    std::vector<std::vector<Polynomial>> powers(n);
    auto power_of = [&](std::size_t var, std::uint32_t k) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) {
            cache.emplace_back(reg, Rational(1));
            cache.push_back(s.image(var));
        }
        while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
        return cache[k];
    };

    Polynomial out(reg);
    for (const auto& [m, c] : f.terms()) {
        // Variables left alone stay in a residual monomial.
        std::vector<std::uint32_t> kept(n, 0);
        Polynomial t(reg, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0) continue;
            if (s.find(i) == nullptr)
                kept[i] = m[i];
            else
                t = t * power_of(i, m[i]);
        }
        Monomial residual(std::move(kept));
        if (!residual.is_one()) t = t * Polynomial::term(reg, residual, Rational(1));
        out += t;
    }
    return out;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw UsageError("exact_divide by the zero polynomial");
    if (f.registry() != g.registry()) throw UsageError("polynomials belong to different registries");
    const auto [lm_g, lc_g] = g.leading_term();
    Polynomial remainder = f;
    Polynomial quotient(f.registry());
    while (!remainder.is_zero()) {
        const auto [lm_r, lc_r] = remainder.leading_term();
        auto q_m = lm_r.divide(lm_g);
        if (!q_m) return std::nullopt;
        const Polynomial t = Polynomial::term(f.registry(), *q_m, lc_r / lc_g);
        quotient += t;
        remainder -= t * g;
    }
    return quotient;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
    Polynomial out(f.registry());
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        out.add_term(m.with_exponent(var, m[var] - 1), c * Rational(static_cast<long>(m[var])));
    }
    return out;
}

Polynomial coefficient_extract(const Polynomial& f, std::size_t var, unsigned k) {
    Polynomial out(f.registry());
    for (const auto& [m, c] : f.terms())
        if (m[var] == k) out.add_term(m.with_exponent(var, 0), c);
    return out;
}

Polynomial coefficient_extract(const Polynomial& f, std::string_view var, unsigned k) {
    return coefficient_extract(f, f.registry()->index(var), k);
}

Monomial monomial_content(const Polynomial& f, std::span<const std::size_t> vars) {
    const std::size_t n = f.registry()->size();
    std::vector<std::uint32_t> e(n, 0);
    if (f.is_zero()) return Monomial(std::move(e));
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        for (auto v : vars) e[v] = first ? m[v] : std::min(e[v], m[v]);
        first = false;
    }
    return Monomial(std::move(e));
}

Polynomial divide_by_monomial(const Polynomial& f, const Monomial& m) {
    Polynomial out(f.registry());
    for (const auto& [t, c] : f.terms()) {
        auto q = t.divide(m);
        if (!q) throw UsageError("monomial does not divide every term");
        out.add_term(*q, c);
    }
    return out;
}

// ---- Derivation -----------------------------------------------------------

Derivation& Derivation::set(std::size_t var, Polynomial image) {
    if (var >= reg_->size()) throw UsageError("derivation variable out of range");
    if (image.registry() != reg_) throw UsageError("derivation image over a different registry");
    if (image.is_zero())
        images_.erase(var);
    else
        images_.insert_or_assign(var, std::move(image));
    return *this;
}

Derivation& Derivation::set(std::string_view var, Polynomial image) {
    return set(reg_->index(var), std::move(image));
}

std::string Derivation::to_string() const {
    if (images_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, p] : images_) {
        if (!first) os << ", ";
        first = false;
        os << reg_->at(v).name << " -> " << p.to_string();
    }
    return os.str();
}

Polynomial apply_derivation(const Derivation& d, const Polynomial& f) {
    if (d.registry() != f.registry()) throw UsageError("derivation over a different registry");
    Polynomial out(f.registry());
    for (const auto& [v, image] : d.images()) {
        if (!f.involves(v)) continue;
        out += image * partial_derivative(f, v);
    }
    return out;
}

}  // namespace fanocert
