#pragma once

#include "cantornet/coordinates.hpp"
#include "cantornet/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cantornet {

/// Eventually periodic binary sequence in canonical form: the cycle is
/// primitive (not a power of a shorter word) and the prefix is minimal
/// (its last bit cannot be absorbed into a rotation of the cycle).
/// Every exact binary expansion of a rational in [0,1] has exactly one
/// canonical form, so equality of sequences is structural equality.
struct BitStream {
    Bits prefix;
    Bits cycle;

    bool operator==(const BitStream&) const = default;

    /// 1-based bit of the unrolled sequence.
    Bit at(std::size_t i) const {
        if (i == 0) throw std::out_of_range("bit positions are 1-based");
        if (i <= prefix.size()) return prefix[i - 1];
        return cycle[(i - 1 - prefix.size()) % cycle.size()];
    }
};

namespace detail {

inline Bits primitive_root(Bits cycle) {
    const std::size_t k = cycle.size();
    for (std::size_t d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < k && repeats; ++i)
            repeats = cycle[i] == cycle[i - d];
        if (repeats) {
            cycle.resize(d);
            return cycle;
        }
    }
    return cycle;
}

}  // namespace detail

/// Builds the canonical form of prefix + cycle^inf.
inline BitStream canonical_stream(Bits prefix, Bits cycle) {
    if (cycle.empty()) throw std::invalid_argument("cycle must be non-empty");
    require_bits(prefix);
    require_bits(cycle);
    cycle = detail::primitive_root(std::move(cycle));
    // prefix.back() == cycle.back() means the sequence also reads as the
    // shorter prefix followed by the right-rotated cycle.
    while (!prefix.empty() && prefix.back() == cycle.back()) {
        prefix.pop_back();
        std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
    }
    return BitStream{std::move(prefix), std::move(cycle)};
}

inline BitStream all_zeros_stream() { return BitStream{{}, {0}}; }
inline BitStream all_ones_stream() { return BitStream{{}, {1}}; }

/// Exact value sum a_i / 2^i of the sequence.
inline Rational value_of(const BitStream& s) {
    Integer p = 0;
    for (Bit b : s.prefix) p = (p << 1) | b;
    Integer c = 0;
    for (Bit b : s.cycle) c = (c << 1) | b;
    const unsigned m = static_cast<unsigned>(s.prefix.size());
    const unsigned k = static_cast<unsigned>(s.cycle.size());
    return Rational(p, pow2(m)) + Rational(c, (pow2(k) - 1) * pow2(m));
}

/// First n bits of the unrolled sequence.
inline Bits truncate(const BitStream& s, std::size_t n) {
    Bits out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(s.at(i));
    return out;
}

/// All exact binary expansions of y in [0,1]: two for interior dyadic
/// rationals (terminating first, then the tail-of-ones form), one
/// otherwise. Long division with remainder tracking finds the cycle.
inline std::vector<BitStream> expansions(const Rational& y) {
    if (y < 0 || y > 1) throw std::domain_error("expansions: y outside [0,1]");
    if (y == 0) return {all_zeros_stream()};
    if (y == 1) return {all_ones_stream()};

    const Integer den = denominator(y);
    Integer r = numerator(y);
    Bits digits;
    std::map<Integer, std::size_t> seen;
    std::size_t cycle_start = 0;
    for (;;) {
        auto [it, fresh] = seen.emplace(r, digits.size());
        if (!fresh) {
            cycle_start = it->second;
            break;
        }
        r <<= 1;
        Bit b = 0;
        if (r >= den) {
            b = 1;
            r -= den;
        }
        digits.push_back(b);
    }
    Bits prefix(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(cycle_start));
    Bits cycle(digits.begin() + static_cast<std::ptrdiff_t>(cycle_start), digits.end());
    std::vector<BitStream> out;
    out.push_back(canonical_stream(std::move(prefix), std::move(cycle)));

    if (is_dyadic_interior(y)) {
        // The canonical terminating form ends its prefix with a 1; flipping
        // it to 0 and appending an all-ones tail gives the second expansion.
        Bits alt = out.front().prefix;
        alt.back() = 0;
        out.push_back(canonical_stream(std::move(alt), {1}));
    }
    return out;
}

}  // namespace cantornet
