#include "collatz/parity.hpp"

#include <algorithm>

namespace collatz {

ParityVector::ParityVector(Bits bits, MapKind map) : bits_(std::move(bits)), map_(map) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1) throw StructureError("parity bits must be 0 or 1");
        if (map_ == MapKind::C && bits_[i] == 1 && i + 1 < bits_.size() && bits_[i + 1] != 0)
            throw StructureError("malformed C-vector: 1 at position " + std::to_string(i) +
                                 " is not followed by 0");
    }
}

ParityVector ParityVector::parse(std::string_view text, MapKind map) {
    if (text.size() >= 2 && text[1] == ':') {
        map = parse_map_kind(text.substr(0, 1));
        text.remove_prefix(2);
    }
    Bits bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw StructureError("parity vector '" + std::string(text) + "' may contain only 0 and 1");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return ParityVector(std::move(bits), map);
}

std::size_t ParityVector::ones() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

bool ParityVector::ends_with(const ParityVector& suffix) const noexcept {
    return suffix.size() <= size() && std::equal(suffix.bits_.rbegin(), suffix.bits_.rend(), bits_.rbegin());
}

ParityVector ParityVector::prefix(std::size_t len) const {
    if (len > size()) throw PreconditionError("prefix longer than vector");
    ParityVector out;
    out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(len));
    out.map_ = map_;
    return out;
}

ParityVector ParityVector::concat(const ParityVector& tail) const {
    if (tail.map_ != map_) throw PreconditionError("cannot concatenate vectors of different maps");
    Bits joined = bits_;
    joined.insert(joined.end(), tail.bits_.begin(), tail.bits_.end());
    return ParityVector(std::move(joined), map_);
}

std::string ParityVector::bit_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

std::string ParityVector::tagged() const { return std::string(to_string(map_)) + ":" + bit_string(); }

ParityVector parity_vector(u128 n, MapKind map, std::uint64_t step_cap) {
    const Trajectory t = trajectory(n, map, step_cap);
    ParityVector::Bits bits;
    bits.reserve(t.size());
    for (u128 v : t.values()) bits.push_back(static_cast<std::uint8_t>(v & 1));
    return ParityVector(std::move(bits), map);
}

ParityVector parity_prefix(u128 n, std::size_t k, MapKind map) {
    if (n == 0) throw PreconditionError("parity_prefix: n must be positive");
    ParityVector::Bits bits;
    bits.reserve(k);
    u128 v = n;
    for (std::size_t i = 0; i < k; ++i) {
        bits.push_back(static_cast<std::uint8_t>(v & 1));
        if (i + 1 < k) v = step(v, map);
    }
    return ParityVector(std::move(bits), map);
}

ParityVector expand_t_to_c(const ParityVector& w) {
    if (w.map() != MapKind::T) throw PreconditionError("expand_t_to_c expects a T-vector");
    ParityVector::Bits out;
    out.reserve(w.size() + w.ones());
    for (auto b : w.bits()) {
        out.push_back(b);
        if (b) out.push_back(0);
    }
    return ParityVector(std::move(out), MapKind::C);
}

ParityVector compress_c_to_t(const ParityVector& w) {
    if (w.map() != MapKind::C) throw PreconditionError("compress_c_to_t expects a C-vector");
    // The constructor already rejected any non-final 1 without a following 0.
    ParityVector::Bits out;
    out.reserve(w.size());
    const auto& bits = w.bits();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out.push_back(bits[i]);
        if (bits[i]) ++i;
    }
    return ParityVector(std::move(out), MapKind::T);
}

// All arithmetic below is mod 2^128. After j steps the low 128-j bits of an
// iterate are still exact, which is all the parity of step j < 128 needs.

u128 terras_encode(const ParityVector& w) {
    if (w.map() != MapKind::T) throw PreconditionError("terras_encode expects a T-vector");
    if (w.empty() || w.size() > 127) throw PreconditionError("terras_encode: length must be in [1, 127]");
    // Invariant: for x = residue + 2^j * y, T^j(x) = base + scale * y.
    u128 residue = 0;
    u128 base = 0;
    u128 scale = 1;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const u128 y0 = (base & 1) ^ w[j];
        residue |= y0 << j;
        base += scale * y0;
        if (w[j]) {
            base = (3 * base + 1) >> 1;
            scale *= 3;
        } else {
            base >>= 1;
        }
    }
    return residue;
}

ParityVector terras_decode(u128 residue, std::size_t k) {
    if (k == 0 || k > 127) throw PreconditionError("terras_decode: k must be in [1, 127]");
    const u128 modulus = static_cast<u128>(1) << k;
    if (residue >= modulus) throw PreconditionError("terras_decode: residue must be below 2^k");
    u128 v = residue == 0 ? modulus : residue;
    ParityVector::Bits bits;
    bits.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        bits.push_back(static_cast<std::uint8_t>(v & 1));
        v = (v & 1) ? (3 * v + 1) >> 1 : v >> 1;
    }
    return ParityVector(std::move(bits), MapKind::T);
}

}  // namespace collatz
