#include "fanocert/surfaces.hpp"

#include "fanocert/registry.hpp"

namespace fanocert {

namespace {

void require_same_surface(const DivisorClass& x, const DivisorClass& y) {
    if (x.e != y.e)
        throw UsageError("divisor classes live on F_" + std::to_string(x.e) + " and F_" + std::to_string(y.e));
}

}  // namespace

std::string DivisorClass::to_string() const {
    return std::to_string(a) + "s + " + std::to_string(b) + "f on F_" + std::to_string(e);
}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    require_same_surface(x, y);
    return {x.e, x.a + y.a, x.b + y.b};
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    require_same_surface(x, y);
    return {x.e, x.a - y.a, x.b - y.b};
}

DivisorClass operator*(long k, const DivisorClass& x) { return {x.e, k * x.a, k * x.b}; }

long intersect(const DivisorClass& x, const DivisorClass& y) {
    require_same_surface(x, y);
    // s^2 = -e, s.f = 1, f^2 = 0
    return -x.e * x.a * y.a + x.a * y.b + x.b * y.a;
}

DivisorClass canonical_class(long e) { return {e, -2, -(e + 2)}; }

Rational adjunction_genus(const DivisorClass& d) {
    const long twice = intersect(d, d) + intersect(d, canonical_class(d.e));
    return Rational(1) + Rational(twice, 2);
}

bool is_irreducible_class(const DivisorClass& d) {
    if (d.a < 0 || d.b < 0) return false;
    if (d.a == 0) return d.b == 1;
    if (d.a == 1 && d.b == 0) return true;
    return d.b >= d.a * d.e;
}

long degree_pairing_check(long a, long b) {
    constexpr long e = 3;
    return intersect({e, a, b}, {e, 1, 4});
}

std::vector<std::pair<long, long>> rational_classes_of_degree(long e, const DivisorClass& polarization,
                                                              long degree) {
    std::vector<std::pair<long, long>> out;
    if (polarization.e != e) throw UsageError("polarization lives on a different surface");
    // Both s and f pair positively with an ample class, so a, b <= degree.
    for (long a = 0; a <= degree; ++a)
        for (long b = 0; b <= degree; ++b) {
            const DivisorClass d{e, a, b};
            if (intersect(d, polarization) != degree) continue;
            if (!is_irreducible_class(d)) continue;
            if (adjunction_genus(d) != Rational(0)) continue;
            out.emplace_back(a, b);
        }
    return out;
}

}  // namespace fanocert
