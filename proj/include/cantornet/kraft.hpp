#pragma once

#include "cantornet/coordinates.hpp"
#include "cantornet/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cantornet {

/// Verdict of the completeness check for a code table. A complete
/// prefix-free table induces cylinder blocks that partition {0,1}^Lambda;
/// a prefix conflict names two offending codes, an incomplete table names
/// an uncovered bit string of maximal code length.
struct KraftResult {
    enum class Kind { Complete, PrefixConflict, Incomplete };

    Kind kind = Kind::Complete;
    Rational sum;
    std::pair<std::size_t, std::size_t> conflict{};  // indices into the table
    Bits gap;

    bool complete() const { return kind == Kind::Complete; }
};

namespace detail {

inline bool is_prefix(const Bits& p, const Bits& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

/// Measure of the union of code cylinders inside the subtree rooted at u.
inline Rational subtree_coverage(const std::vector<Bits>& codes, const Bits& u) {
    Rational cov = 0;
    for (const auto& c : codes) {
        if (is_prefix(c, u)) return Rational(1, pow2(static_cast<unsigned>(u.size())));
        if (is_prefix(u, c)) cov += Rational(1, pow2(static_cast<unsigned>(c.size())));
    }
    return cov;
}

}  // namespace detail

/// Checks that the codes are prefix-free with exact Kraft sum 1.
inline KraftResult kraft_check(const std::vector<Bits>& codes) {
    if (codes.empty()) throw std::invalid_argument("kraft_check: empty code list");
    for (const auto& c : codes) require_bits(c);

    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = 0; j < codes.size(); ++j) {
            if (i == j) continue;
            if (detail::is_prefix(codes[i], codes[j]))
                return {KraftResult::Kind::PrefixConflict, Rational(0), {i, j}, {}};
        }

    Rational sum = 0;
    std::size_t max_len = 0;
    for (const auto& c : codes) {
        sum += Rational(1, pow2(static_cast<unsigned>(c.size())));
        max_len = std::max(max_len, c.size());
    }
    if (sum == 1) return {KraftResult::Kind::Complete, sum, {}, {}};

    // Prefix-free implies sum < 1; descend toward an uncovered leaf.
    Bits gap;
    while (gap.size() < max_len) {
        for (Bit b : {Bit(0), Bit(1)}) {
            Bits candidate = gap;
            candidate.push_back(b);
            const Rational full(1, pow2(static_cast<unsigned>(candidate.size())));
            if (detail::subtree_coverage(codes, candidate) < full) {
                gap = std::move(candidate);
                break;
            }
        }
    }
    return {KraftResult::Kind::Incomplete, sum, {}, gap};
}

}  // namespace cantornet
