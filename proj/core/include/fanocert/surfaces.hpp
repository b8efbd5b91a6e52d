#ifndef FANOCERT_SURFACES_HPP
#define FANOCERT_SURFACES_HPP

#include <string>
#include <utility>
#include <vector>

#include "fanocert/rational.hpp"

namespace fanocert {

// Class a*s + b*f on the Hirzebruch surface F_e, where s is the negative
// section (s^2 = -e) and f a fiber.
struct DivisorClass {
    long e = 0;
    long a = 0;
    long b = 0;

    [[nodiscard]] std::string to_string() const;

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
    friend DivisorClass operator*(long k, const DivisorClass& x);
    friend DivisorClass operator-(const DivisorClass& x) { return -1 * x; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

[[nodiscard]] inline DivisorClass negative_section(long e) { return {e, 1, 0}; }
[[nodiscard]] inline DivisorClass fiber(long e) { return {e, 0, 1}; }

// Throws UsageError for classes on different surfaces.
[[nodiscard]] long intersect(const DivisorClass& x, const DivisorClass& y);
[[nodiscard]] DivisorClass canonical_class(long e);
[[nodiscard]] Rational adjunction_genus(const DivisorClass& d);

// Classes of irreducible curves: f itself, s itself, and a*s + b*f with
// a >= 1, b >= a*e.
[[nodiscard]] bool is_irreducible_class(const DivisorClass& d);

// (a s + b f).(s + 4f) on F_3.
[[nodiscard]] long degree_pairing_check(long a, long b);

// Pairs (a, b), a, b >= 0, of irreducible genus-0 classes on F_e whose
// intersection with the given class equals the given degree.
[[nodiscard]] std::vector<std::pair<long, long>> rational_classes_of_degree(long e, const DivisorClass& polarization,
                                                                           long degree);

}  // namespace fanocert

#endif  // FANOCERT_SURFACES_HPP
