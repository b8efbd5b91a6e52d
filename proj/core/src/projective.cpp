#include "fanocert/projective.hpp"

#include "fanocert/registry.hpp"

namespace fanocert {

P1Point::P1Point(const Rational& x0, const Rational& x1) {
    if (x0.is_zero() && x1.is_zero()) throw UsageError("[0 : 0] is not a point of P^1");
    if (x1.is_zero()) {
        x0_ = Rational(1);
        x1_ = Rational(0);
    } else {
        x0_ = x0 / x1;
        x1_ = Rational(1);
    }
}

Rational P1Point::value() const {
    if (is_infinity()) throw UsageError("value() of the point at infinity");
    return x0_;
}

std::string P1Point::to_string() const { return is_infinity() ? "inf" : x0_.to_string(); }

P1Point Mobius::operator()(const P1Point& pt) const {
    if (determinant().is_zero()) throw UsageError("degenerate Mobius transformation");
    return {p * pt.x0() + q * pt.x1(), r * pt.x0() + s * pt.x1()};
}

}  // namespace fanocert
