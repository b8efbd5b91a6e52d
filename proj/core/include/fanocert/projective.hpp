#ifndef FANOCERT_PROJECTIVE_HPP
#define FANOCERT_PROJECTIVE_HPP

#include <string>

#include "fanocert/rational.hpp"

namespace fanocert {

// Rational point [x0 : x1] of the projective line, normalized so that
// equal points compare equal: [v : 1] for finite points, [1 : 0] for infinity.
class P1Point {
public:
    P1Point(const Rational& x0, const Rational& x1);

    static P1Point affine(const Rational& v) { return {v, Rational(1)}; }
    static P1Point infinity() { return {Rational(1), Rational(0)}; }

    [[nodiscard]] const Rational& x0() const { return x0_; }
    [[nodiscard]] const Rational& x1() const { return x1_; }
    [[nodiscard]] bool is_infinity() const { return x1_.is_zero(); }
    // x0/x1; throws on infinity.
    [[nodiscard]] Rational value() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const P1Point&, const P1Point&) = default;

private:
    Rational x0_;
    Rational x1_;
};

// v -> (p*v + q) / (r*v + s), acting on [v0 : v1] as [p v0 + q v1 : r v0 + s v1].
struct Mobius {
    Rational p, q, r, s;

    [[nodiscard]] P1Point operator()(const P1Point& pt) const;
    [[nodiscard]] Rational determinant() const { return p * s - q * r; }
    [[nodiscard]] Mobius inverse() const { return {s, -q, -r, p}; }
};

}  // namespace fanocert

#endif  // FANOCERT_PROJECTIVE_HPP
