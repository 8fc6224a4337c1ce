#include "collatz/affine.hpp"

namespace collatz {

BigInt AffineMap::multiplier() const { return boost::multiprecision::pow(BigInt(3), a); }

BigInt AffineMap::denominator() const { return BigInt(1) << d; }

AffineMap AffineMap::followed_by(const AffineMap& then) const {
    AffineMap out;
    out.a = a + then.a;
    out.r = then.multiplier() * r + (BigInt(then.r) << d);
    out.d = d + then.d;
    return out;
}

AffineMap affine_of_vector(const ParityVector& w) {
    AffineMap m;
    const bool t_map = w.map() == MapKind::T;
    for (auto bit : w.bits()) {
        if (bit) {
            // 3 * (3^a x + r)/2^d + 1 = (3^{a+1} x + 3r + 2^d) / 2^d
            m.r = 3 * m.r + (BigInt(1) << m.d);
            ++m.a;
            if (t_map) ++m.d;
        } else {
            ++m.d;
        }
    }
    return m;
}

AffineValue affine_apply(const AffineMap& m, const BigInt& x) {
    return {Rational(m.multiplier() * x + m.r, m.denominator())};
}

Rational affine_preimage(const AffineMap& m, const BigInt& y) {
    return Rational(m.denominator() * y - m.r, m.multiplier());
}

std::string to_string(const AffineMap& m) {
    return "x -> (3^" + std::to_string(m.a) + " x + " + m.r.str() + ") / 2^" + std::to_string(m.d);
}

}  // namespace collatz
