#include "doctest.h"

#include <random>

#include "collatz/affine.hpp"
#include "collatz/parity.hpp"
#include "oracles.hpp"

using namespace collatz;

namespace {

ParityVector T(const char* s) { return ParityVector::parse(s, MapKind::T); }
ParityVector C(const char* s) { return ParityVector::parse(s, MapKind::C); }

ParityVector from_code(std::uint64_t code, std::size_t len, MapKind map) {
    return ParityVector(oracle::bits_of(code, len), map);
}

}  // namespace

TEST_SUITE("parity") {

TEST_CASE("full-trajectory vectors end in the terminal 1") {
    CHECK(parity_vector(3, MapKind::C) == C("10100001"));
    CHECK(parity_vector(3, MapKind::T) == T("110001"));
    CHECK(parity_vector(1, MapKind::C) == C("1"));
}

TEST_CASE("prefixes iterate the total map") {
    CHECK(parity_prefix(4, 3, MapKind::T) == T("001"));
    CHECK(parity_prefix(5, 3, MapKind::T) == T("100"));
    CHECK(parity_prefix(7, 0, MapKind::C).empty());
    // Past 1: 1 -> 2 -> 1 -> 2 under T.
    CHECK(parity_prefix(1, 5, MapKind::T) == T("10101"));
    CHECK(parity_prefix(1, 4, MapKind::C) == C("1001"));
    CHECK_THROWS_AS(parity_prefix(u128_max, 2, MapKind::C), OverflowError);
}

TEST_CASE("C structure is enforced") {
    CHECK_THROWS_AS(C("110"), StructureError);
    CHECK_NOTHROW(C("1"));
    CHECK_NOTHROW(C("0101"));
    CHECK_NOTHROW(T("11"));
    CHECK_THROWS_AS(T("012"), StructureError);
    CHECK(ParityVector::parse("C:1010", MapKind::T).map() == MapKind::C);
    CHECK(C("10100001").tagged() == "C:10100001");
}

TEST_CASE("expand and compress") {
    CHECK(expand_t_to_c(T("1")) == C("10"));
    CHECK(expand_t_to_c(T("0")) == C("0"));
    CHECK(expand_t_to_c(T("110001")) == C("101000010"));
    CHECK(compress_c_to_t(C("10")) == T("1"));
    CHECK(compress_c_to_t(C("00")) == T("00"));
    CHECK(compress_c_to_t(C("0010")) == T("001"));
    CHECK(compress_c_to_t(C("10100001")) == T("110001"));
    CHECK_THROWS_AS(expand_t_to_c(C("0")), PreconditionError);
}

TEST_CASE("expand/compress are mutually inverse, exhaustive to length 14") {
    for (std::size_t len = 0; len <= 14; ++len) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
            const ParityVector t = from_code(code, len, MapKind::T);
            REQUIRE(compress_c_to_t(expand_t_to_c(t)) == t);
            const auto bits = oracle::bits_of(code, len);
            bool valid_c = true;
            for (std::size_t i = 0; i + 1 < len; ++i)
                if (bits[i] && bits[i + 1]) valid_c = false;
            if (!valid_c) {
                REQUIRE_THROWS_AS(ParityVector(bits, MapKind::C), StructureError);
                continue;
            }
            const ParityVector c(bits, MapKind::C);
            const ParityVector back = expand_t_to_c(compress_c_to_t(c));
            // A trailing lone 1 comes back with its forced 0.
            if (len > 0 && bits.back() == 1)
                REQUIRE(back == c.concat(ParityVector({0}, MapKind::C)));
            else
                REQUIRE(back == c);
        }
    }
}

TEST_CASE("terras encode / decode") {
    CHECK(terras_encode(T("001")) == 4);
    CHECK(terras_encode(T("100")) == 5);
    CHECK(oracle::terras_search({1, 1, 0, 0, 0, 1}) == 3);
    CHECK(terras_encode(T("110001")) == 3);
    CHECK(terras_decode(4, 3) == T("001"));
    CHECK(terras_decode(5, 3) == T("100"));
    CHECK(terras_decode(0, 4) == parity_prefix(16, 4, MapKind::T));
    CHECK_THROWS_AS(terras_decode(8, 3), PreconditionError);
    CHECK_THROWS_AS(terras_encode(T("")), PreconditionError);
}

TEST_CASE("terras bijection, exhaustive to k = 12") {
    for (std::size_t k = 1; k <= 12; ++k) {
        const u128 mod = u128{1} << k;
        for (u128 x = 0; x < mod; ++x) {
            const ParityVector w = terras_decode(x, k);
            REQUIRE(w == parity_prefix(x == 0 ? mod : x, k, MapKind::T));
            REQUIRE(terras_encode(w) == x);
        }
    }
    // Independent search oracle on a smaller range.
    for (std::size_t k = 1; k <= 8; ++k)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code)
            REQUIRE(terras_encode(from_code(code, k, MapKind::T)) == oracle::terras_search(oracle::bits_of(code, k)));
}

TEST_CASE("terras bijection, sampled to k = 24 and long vectors") {
    std::mt19937_64 rng(20150101);
    for (int trial = 0; trial < 20'000; ++trial) {
        const std::size_t k = 13 + rng() % 12;
        const u128 x = rng() & ((u128{1} << k) - 1);
        REQUIRE(terras_encode(terras_decode(x, k)) == x);
    }
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 25 + rng() % 100;
        ParityVector::Bits bits(k);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
        const ParityVector w(bits, MapKind::T);
        REQUIRE(terras_decode(terras_encode(w), k) == w);
    }
}

TEST_CASE("affine forms of single steps and stems") {
    CHECK(affine_of_vector(T("1")) == AffineMap{1, 1, 1});
    CHECK(affine_of_vector(C("001")) == AffineMap{1, 4, 2});
    CHECK(affine_of_vector(C("100")) == AffineMap{1, 1, 2});
    CHECK(affine_of_vector(T("")) == AffineMap::identity());
    // Preimages at j: (4j-1)/3 - 1 and (4j-1)/3.
    for (int j : {10, 16, 22, 1384}) {
        CHECK(affine_preimage(affine_of_vector(C("001")), j) == Rational(4 * j - 1, 3) - 1);
        CHECK(affine_preimage(affine_of_vector(C("100")), j) == Rational(4 * j - 1, 3));
    }
    CHECK(affine_preimage(affine_of_vector(C("001")), 10) == 12);
    CHECK(affine_preimage(affine_of_vector(C("100")), 10) == 13);
}

TEST_CASE("affine evaluation") {
    const AffineMap m{1, 4, 2};
    const AffineValue v = affine_apply(m, 10);
    CHECK_FALSE(v.integral());
    CHECK(v.value == Rational(34, 4));
    CHECK(affine_apply(m, 4).value == 4);
    CHECK(affine_apply(m, 4).integral());
    CHECK(affine_apply(AffineMap::identity(), 12345).value == 12345);
}

TEST_CASE("affine counts match vector shape") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t len = rng() % 40;
        const ParityVector w(oracle::bits_of(rng(), len), MapKind::T);
        const AffineMap m = affine_of_vector(w);
        REQUIRE(m.a == w.ones());
        REQUIRE(m.d == w.size());
        const ParityVector c = expand_t_to_c(w);
        const AffineMap mc = affine_of_vector(c);
        REQUIRE(mc.a == c.ones());
        REQUIRE(mc.d == c.size() - c.ones());
        // Expanding a T-vector leaves its action unchanged.
        REQUIRE(mc == m);
    }
}

TEST_CASE("affine form reproduces stepwise iteration, n <= 1e4, k <= 30") {
    for (u128 n = 1; n <= 10'000; ++n) {
        for (MapKind map : {MapKind::T, MapKind::C}) {
            u128 v = n;
            AffineMap m;
            const ParityVector full = parity_prefix(n, 30, map);
            for (std::size_t k = 0; k <= 30; ++k) {
                if (k == 30 || k % 7 == 0) {
                    m = affine_of_vector(full.prefix(k));
                    const AffineValue got = affine_apply(m, static_cast<std::uint64_t>(n));
                    REQUIRE(got.integral());
                    REQUIRE(got.value == Rational(BigInt(to_string(v))));
                }
                if (k < 30) v = step(v, map);
            }
        }
    }
}

TEST_CASE("composition over random splits") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 3000; ++trial) {
        const MapKind map = trial % 2 ? MapKind::T : MapKind::C;
        const std::size_t len = 1 + rng() % 48;
        ParityVector::Bits bits(len);
        for (std::size_t i = 0; i < len; ++i) {
            bits[i] = static_cast<std::uint8_t>(rng() & 1);
            if (map == MapKind::C && i > 0 && bits[i - 1]) bits[i] = 0;
        }
        const ParityVector w(bits, map);
        std::size_t cut = rng() % (len + 1);
        if (map == MapKind::C && cut > 0 && cut < len && bits[cut - 1]) --cut;
        const ParityVector head = w.prefix(cut);
        const ParityVector tail(ParityVector::Bits(bits.begin() + static_cast<std::ptrdiff_t>(cut), bits.end()), map);
        REQUIRE(affine_of_vector(head).followed_by(affine_of_vector(tail)) == affine_of_vector(w));
    }
}

TEST_CASE("C affine form agrees with a raw dyadic evaluation") {
    for (std::size_t len = 1; len <= 10; ++len) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
            const auto bits = oracle::bits_of(code, len);
            bool ok = true;
            for (std::size_t i = 0; i + 1 < len; ++i) ok = ok && !(bits[i] && bits[i + 1]);
            if (!ok) continue;
            const AffineMap m = affine_of_vector(ParityVector(bits, MapKind::C));
            for (std::int64_t x : {-7, 0, 3, 1000}) {
                const auto d = oracle::apply_c_bits(bits, x);
                REQUIRE(affine_apply(m, x).value == Rational(d.num, BigInt(1) << d.shift));
            }
        }
    }
}

}
