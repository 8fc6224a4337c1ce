#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "collatz/parity.hpp"

namespace collatz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// x -> (3^a x + r) / 2^d
struct AffineMap {
    std::uint32_t a = 0;
    BigInt r = 0;
    std::uint32_t d = 0;

    static AffineMap identity() { return {}; }

    BigInt multiplier() const;   // 3^a
    BigInt denominator() const;  // 2^d

    // (then ∘ *this): apply *this first, then `then`.
    AffineMap followed_by(const AffineMap& then) const;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// Exact value of an affine map at an integer point.
struct AffineValue {
    Rational value;
    bool integral() const { return denominator(value) == 1; }
};

AffineMap affine_of_vector(const ParityVector& w);

AffineValue affine_apply(const AffineMap& m, const BigInt& x);

// The x with m(x) = y, as a rational: (2^d y - r) / 3^a.
Rational affine_preimage(const AffineMap& m, const BigInt& y);

std::string to_string(const AffineMap& m);

}  // namespace collatz
