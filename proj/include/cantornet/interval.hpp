#pragma once

#include "cantornet/coordinates.hpp"
#include "cantornet/rational.hpp"

namespace cantornet {

/// Closed dyadic interval [lo, lo + 2^-depth].
struct DyadicInterval {
    Rational lo;
    unsigned depth = 0;

    Rational hi() const { return lo + width(); }
    Rational width() const { return Rational(1, pow2(depth)); }
    bool contains(const Rational& x) const { return lo <= x && x <= hi(); }
    bool contains(const DyadicInterval& other) const {
        return lo <= other.lo && other.hi() <= hi();
    }

    bool operator==(const DyadicInterval&) const = default;
};

/// Interval addressed by a binary code: [0.a1...an, 0.a1...an + 2^-n].
/// The empty code addresses [0, 1].
inline DyadicInterval interval_for_code(const Bits& bits) {
    require_bits(bits);
    Integer p = 0;
    for (Bit b : bits) p = (p << 1) | b;
    const unsigned n = static_cast<unsigned>(bits.size());
    return DyadicInterval{Rational(p, pow2(n)), n};
}

}  // namespace cantornet
