#pragma once

#include "cantornet/bitstream.hpp"
#include "cantornet/coordinates.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cantornet {

/// A coordinate family instance hosting an infinite tail: all positions
/// (family, scope, 1), (family, scope, 2), ...
struct TailFamily {
    Family family;
    std::vector<int> scope;

    auto operator<=>(const TailFamily&) const = default;

    CoordinateId coordinate(int pos) const { return CoordinateId{family, scope, pos}; }
    bool covers(const CoordinateId& c) const {
        return c.family == family && c.scope == scope;
    }
};

struct TailConstraint {
    TailFamily family;
    BitStream stream;

    bool operator==(const TailConstraint&) const = default;
};

/// Symbolic cylinder subset of {0,1}^Lambda: finitely many fixed bits plus
/// at most one tail-constrained coordinate family; free everywhere else.
struct CylinderPart {
    std::map<CoordinateId, Bit> fixed;
    std::optional<TailConstraint> tail;

    bool operator==(const CylinderPart&) const = default;

    void validate() const {
        for (const auto& [coord, bit] : fixed) {
            require_bit(bit);
            if (coord.pos < 1) throw std::invalid_argument("coordinate position must be >= 1");
            if (tail && tail->family.covers(coord))
                throw std::invalid_argument("fixed coordinate " + to_string(coord) +
                                            " collides with the tail family");
        }
    }
};

/// Finite disjoint union of cylinder parts; houses f^-1(point).
struct Fiber {
    std::vector<CylinderPart> parts;

    bool operator==(const Fiber&) const = default;
};

/// Outcome of the disjointness decision: a witness coordinate constrained
/// to different bits by the two parts, or none (the parts intersect).
struct Disjointness {
    std::optional<CoordinateId> witness;

    bool disjoint() const { return witness.has_value(); }
};

namespace detail {

inline std::optional<CoordinateId> fixed_vs_tail(const CylinderPart& fixed_side,
                                                 const CylinderPart& tail_side) {
    if (!tail_side.tail) return std::nullopt;
    for (const auto& [coord, bit] : fixed_side.fixed) {
        if (!tail_side.tail->family.covers(coord)) continue;
        if (tail_side.tail->stream.at(static_cast<std::size_t>(coord.pos)) != bit)
            return coord;
    }
    return std::nullopt;
}

}  // namespace detail

/// Decides whether two cylinder parts are disjoint. They are disjoint iff
/// some coordinate is constrained by both with different bits; two
/// canonical streams over the same tail family either coincide or differ
/// within max(prefix lengths) + lcm(cycle lengths) positions.
inline Disjointness parts_disjoint(const CylinderPart& a, const CylinderPart& b) {
    a.validate();
    b.validate();

    for (const auto& [coord, bit] : a.fixed) {
        auto it = b.fixed.find(coord);
        if (it != b.fixed.end() && it->second != bit) return {coord};
    }
    if (auto w = detail::fixed_vs_tail(a, b)) return {*w};
    if (auto w = detail::fixed_vs_tail(b, a)) return {*w};

    if (a.tail && b.tail && a.tail->family == b.tail->family &&
        a.tail->stream != b.tail->stream) {
        const auto& sa = a.tail->stream;
        const auto& sb = b.tail->stream;
        const std::size_t bound = std::max(sa.prefix.size(), sb.prefix.size()) +
                                  std::lcm(sa.cycle.size(), sb.cycle.size());
        for (std::size_t i = 1; i <= bound; ++i)
            if (sa.at(i) != sb.at(i))
                return {a.tail->family.coordinate(static_cast<int>(i))};
        throw std::logic_error("distinct canonical streams must differ within the bound");
    }
    return {};
}

/// Two fibers are disjoint iff every pair of parts is; returns a witness
/// from the first decided pair coordinate-wise, or none on intersection.
inline Disjointness fibers_disjoint(const Fiber& a, const Fiber& b) {
    std::optional<CoordinateId> first;
    for (const auto& pa : a.parts)
        for (const auto& pb : b.parts) {
            auto d = parts_disjoint(pa, pb);
            if (!d.disjoint()) return {};
            if (!first) first = d.witness;
        }
    return {first};
}

}  // namespace cantornet
