#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cantornet {

using Bit = std::uint8_t;  // 0 or 1
using Bits = std::vector<Bit>;

inline void require_bit(Bit b) {
    if (b > 1) throw std::invalid_argument("bit must be 0 or 1");
}

inline void require_bits(const Bits& bits) {
    for (Bit b : bits) require_bit(b);
}

/// Coordinate families of the index set. Lambda and Sigma are global;
/// Mu is scoped per cluster, Nu per (cluster, edge), Xi per edge.
enum class Family : std::uint8_t { Lambda, Mu, Nu, Sigma, Xi };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Lambda: return "lambda";
        case Family::Mu: return "mu";
        case Family::Nu: return "nu";
        case Family::Sigma: return "sigma";
        case Family::Xi: return "xi";
    }
    return "?";
}

/// One coordinate of the product space: a family, a finite scope
/// (cluster/edge identifiers) and a 1-based position within the family.
struct CoordinateId {
    Family family;
    std::vector<int> scope;
    int pos = 1;  // >= 1

    auto operator<=>(const CoordinateId&) const = default;
};

inline std::string to_string(const CoordinateId& c) {
    std::string s = family_name(c.family);
    if (!c.scope.empty()) {
        s += '[';
        for (std::size_t i = 0; i < c.scope.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c.scope[i]);
        }
        s += ']';
    }
    s += '_';
    s += std::to_string(c.pos);
    return s;
}

}  // namespace cantornet
