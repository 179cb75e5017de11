#pragma once

#include "cantornet/cylinder.hpp"
#include "cantornet/graph.hpp"
#include "cantornet/kraft.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cantornet {

/// Prefix code bound to a coordinate family: bit i constrains position
/// i+1 of (family, scope).
struct PrefixCode {
    Bits bits;
    Family family;
    std::vector<int> scope;

    bool operator==(const PrefixCode&) const = default;

    std::map<CoordinateId, Bit> fixed_bits() const {
        std::map<CoordinateId, Bit> out;
        for (std::size_t i = 0; i < bits.size(); ++i)
            out[CoordinateId{family, scope, static_cast<int>(i) + 1}] = bits[i];
        return out;
    }
};

/// Complete prefix-free table over one family: code i is 1^(i-1) 0 and the
/// last code is all ones; count 1 yields the single empty code.
inline std::vector<PrefixCode> assign_codes(int count, Family family,
                                            std::vector<int> scope = {}) {
    if (count < 1) throw std::invalid_argument("assign_codes: count must be >= 1");
    std::vector<PrefixCode> out;
    for (int i = 1; i <= count; ++i) {
        Bits bits(static_cast<std::size_t>(i - 1), Bit(1));
        if (i < count) bits.push_back(0);
        out.push_back(PrefixCode{std::move(bits), family, scope});
    }
    return out;
}

enum class PhaseKind { I, II };

/// Encoding of a phase as a decomposition of {0,1}^Lambda: cluster codes
/// J_i over lambda and per-cluster edge codes K_l over mu (phase I), or a
/// global edge code table L_j over sigma (phase II). Each edge owns a tail
/// family (nu or xi) carrying the binary expansion of the arc parameter.
class Encoding {
public:
    static Encoding of(PhaseI phase) {
        validate(phase);
        Encoding e;
        e.kind_ = PhaseKind::I;
        const int s = static_cast<int>(phase.clusters.size());
        e.cluster_codes_ = assign_codes(s, Family::Lambda);
        for (int i = 0; i < s; ++i)
            e.edge_codes_.push_back(
                assign_codes(static_cast<int>(phase.clusters[i].bonds.size()), Family::Mu,
                             {i + 1}));
        e.phase_ = std::move(phase);
        return e;
    }

    static Encoding of(PhaseII phase) {
        validate(phase);
        Encoding e;
        e.kind_ = PhaseKind::II;
        e.edge_codes_.push_back(
            assign_codes(static_cast<int>(phase.bonds.size()), Family::Sigma));
        e.phase_ = std::move(phase);
        return e;
    }

    PhaseKind kind() const { return kind_; }
    const Phase& phase() const { return phase_; }

    /// J table (phase I only).
    const std::vector<PrefixCode>& cluster_codes() const {
        if (kind_ != PhaseKind::I) throw std::logic_error("phase II has no cluster codes");
        return cluster_codes_;
    }

    /// K table of one cluster (phase I) or the L table (phase II, index 0).
    const std::vector<PrefixCode>& edge_codes(std::size_t cluster = 0) const {
        return edge_codes_.at(cluster);
    }

    TailFamily tail_family(int cluster_idx, int edge_idx) const {
        if (kind_ == PhaseKind::I)
            return TailFamily{Family::Nu, {cluster_idx + 1, edge_idx + 1}};
        return TailFamily{Family::Xi, {edge_idx + 1}};
    }

    /// Cylinder part of one arc-end or interior arc point: the block code
    /// of the edge plus a tail carrying the parameter expansion.
    CylinderPart part(int cluster_idx, int edge_idx, BitStream stream) const {
        CylinderPart p;
        if (kind_ == PhaseKind::I)
            p.fixed = cluster_codes_.at(static_cast<std::size_t>(cluster_idx)).fixed_bits();
        const auto table_idx = kind_ == PhaseKind::I ? static_cast<std::size_t>(cluster_idx) : 0;
        for (const auto& [coord, bit] :
             edge_codes_.at(table_idx).at(static_cast<std::size_t>(edge_idx)).fixed_bits())
            p.fixed[coord] = bit;
        p.tail = TailConstraint{tail_family(cluster_idx, edge_idx), std::move(stream)};
        return p;
    }

    /// Blocks as concatenated J_i . K_l (or L_j) bit strings; complete and
    /// prefix-free for every valid phase.
    std::vector<Bits> concatenated_codes() const {
        std::vector<Bits> out;
        if (kind_ == PhaseKind::II) {
            for (const auto& c : edge_codes_[0]) out.push_back(c.bits);
            return out;
        }
        for (std::size_t i = 0; i < cluster_codes_.size(); ++i)
            for (const auto& k : edge_codes_[i]) {
                Bits cat = cluster_codes_[i].bits;
                cat.insert(cat.end(), k.bits.begin(), k.bits.end());
                out.push_back(std::move(cat));
            }
        return out;
    }

private:
    Encoding() = default;

    PhaseKind kind_ = PhaseKind::I;
    Phase phase_;
    std::vector<PrefixCode> cluster_codes_;
    std::vector<std::vector<PrefixCode>> edge_codes_;
};

/// A point of the phase space: an atom, or an interior point of an edge
/// at exact arc parameter t in (0,1). Edge indices are 1-based; the
/// cluster id is empty for phase II.
struct NodePoint {
    AtomId atom;

    bool operator==(const NodePoint&) const = default;
};

struct EdgePoint {
    std::string cluster;  // empty for phase II
    int edge = 1;         // 1-based within the cluster (or the phase II graph)
    Rational t;

    bool operator==(const EdgePoint&) const = default;
};

using PointRef = std::variant<NodePoint, EdgePoint>;

class PointError : public std::runtime_error {
public:
    enum class Kind { UnknownPoint, EndpointParameter };

    PointError(Kind kind, std::string what_arg)
        : std::runtime_error(std::move(what_arg)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

namespace detail {

struct EdgeSite {
    int cluster_idx;  // 0 for phase II
    int edge_idx;     // 0-based
    const Bond* bond;
};

inline std::vector<EdgeSite> edge_sites(const Encoding& enc) {
    std::vector<EdgeSite> out;
    if (enc.kind() == PhaseKind::I) {
        const auto& p = std::get<PhaseI>(enc.phase());
        for (std::size_t i = 0; i < p.clusters.size(); ++i)
            for (std::size_t l = 0; l < p.clusters[i].bonds.size(); ++l)
                out.push_back({static_cast<int>(i), static_cast<int>(l),
                               &p.clusters[i].bonds[l]});
    } else {
        const auto& p = std::get<PhaseII>(enc.phase());
        for (std::size_t l = 0; l < p.bonds.size(); ++l)
            out.push_back({0, static_cast<int>(l), &p.bonds[l]});
    }
    return out;
}

}  // namespace detail

/// Exact fiber f^-1(point): for a node, one part per incident arc-end
/// (all-zero tail at the u end, all-one tail at the v end); for an
/// interior edge point, one part per binary expansion of t.
inline Fiber fiber(const Encoding& enc, const PointRef& point) {
    Fiber f;
    if (const auto* node = std::get_if<NodePoint>(&point)) {
        for (const auto& site : detail::edge_sites(enc)) {
            if (site.bond->u == node->atom)
                f.parts.push_back(enc.part(site.cluster_idx, site.edge_idx, all_zeros_stream()));
            else if (site.bond->v == node->atom)
                f.parts.push_back(enc.part(site.cluster_idx, site.edge_idx, all_ones_stream()));
        }
        if (f.parts.empty())
            throw PointError(PointError::Kind::UnknownPoint, "unknown atom: " + node->atom);
        return f;
    }

    const auto& ep = std::get<EdgePoint>(point);
    if (ep.t == 0 || ep.t == 1)
        throw PointError(PointError::Kind::EndpointParameter,
                         "t in {0,1} addresses a node, not an interior edge point");
    if (ep.t < 0 || ep.t > 1)
        throw PointError(PointError::Kind::UnknownPoint,
                         "arc parameter outside [0,1]: " + format_rational(ep.t));
    int cluster_idx = 0;
    int edge_count = 0;
    if (enc.kind() == PhaseKind::I) {
        const auto& p = std::get<PhaseI>(enc.phase());
        cluster_idx = -1;
        for (std::size_t i = 0; i < p.clusters.size(); ++i)
            if (p.clusters[i].id == ep.cluster) cluster_idx = static_cast<int>(i);
        if (cluster_idx < 0)
            throw PointError(PointError::Kind::UnknownPoint, "unknown cluster: " + ep.cluster);
        edge_count = static_cast<int>(p.clusters[static_cast<std::size_t>(cluster_idx)].bonds.size());
    } else {
        if (!ep.cluster.empty())
            throw PointError(PointError::Kind::UnknownPoint,
                             "phase II has no clusters: " + ep.cluster);
        edge_count = static_cast<int>(std::get<PhaseII>(enc.phase()).bonds.size());
    }
    if (ep.edge < 1 || ep.edge > edge_count)
        throw PointError(PointError::Kind::UnknownPoint,
                         "edge index out of range: " + std::to_string(ep.edge));
    for (auto& stream : expansions(ep.t))
        f.parts.push_back(enc.part(cluster_idx, ep.edge - 1, std::move(stream)));
    return f;
}

/// Fiber split into the common cluster factor and per-part edge factors.
struct FactoredFiber {
    std::optional<PrefixCode> cluster_code;  // J, phase I only
    std::vector<std::pair<PrefixCode, BitStream>> parts;
};

class FactorError : public std::runtime_error {
public:
    explicit FactorError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline const PrefixCode* match_code(const std::vector<PrefixCode>& table,
                                    const std::map<CoordinateId, Bit>& fixed) {
    for (const auto& code : table)
        if (code.fixed_bits() == fixed) return &code;
    return nullptr;
}

}  // namespace detail

/// Extracts the common lambda prefix (phase I) and the per-part edge code
/// and tail stream; re-multiplying the factors reproduces the fiber.
inline FactoredFiber factor(const Fiber& f, const Encoding& enc) {
    if (f.parts.empty()) throw FactorError("empty fiber");
    FactoredFiber out;
    std::optional<std::map<CoordinateId, Bit>> lambda_bits;
    for (const auto& part : f.parts) {
        std::map<CoordinateId, Bit> lam, rest;
        for (const auto& [coord, bit] : part.fixed)
            (coord.family == Family::Lambda ? lam : rest)[coord] = bit;
        if (enc.kind() == PhaseKind::II && !lam.empty())
            throw FactorError("phase II fiber constrains a lambda coordinate");
        if (!lambda_bits)
            lambda_bits = lam;
        else if (*lambda_bits != lam)
            throw FactorError("MixedClusters: parts carry different lambda prefixes");
        if (!part.tail) throw FactorError("fiber part without a tail constraint");

        const std::vector<PrefixCode>* table = nullptr;
        if (enc.kind() == PhaseKind::I) {
            const auto& scope = part.tail->family.scope;  // {cluster, edge}, 1-based
            table = &enc.edge_codes(static_cast<std::size_t>(scope.at(0) - 1));
        } else {
            table = &enc.edge_codes();
        }
        const PrefixCode* code = detail::match_code(*table, rest);
        if (!code) throw FactorError("fiber part does not match any edge code");
        out.parts.emplace_back(*code, part.tail->stream);
    }
    if (enc.kind() == PhaseKind::I) {
        const PrefixCode* j = detail::match_code(enc.cluster_codes(), *lambda_bits);
        if (!j) throw FactorError("lambda prefix does not match any cluster code");
        out.cluster_code = *j;
    }
    return out;
}

/// Inverse of factor: multiplies the factors back into a fiber.
inline Fiber rebuild(const FactoredFiber& ff, const Encoding& enc) {
    Fiber f;
    for (const auto& [code, stream] : ff.parts) {
        CylinderPart p;
        if (ff.cluster_code) p.fixed = ff.cluster_code->fixed_bits();
        for (const auto& [coord, bit] : code.fixed_bits()) p.fixed[coord] = bit;
        TailFamily family{enc.kind() == PhaseKind::I ? Family::Nu : Family::Xi, {}};
        if (enc.kind() == PhaseKind::I) {
            // Scope {cluster, edge}: recover both from the code tables.
            int cluster_idx = 0;
            for (std::size_t i = 0; i < enc.cluster_codes().size(); ++i)
                if (enc.cluster_codes()[i] == *ff.cluster_code)
                    cluster_idx = static_cast<int>(i);
            family.scope = {cluster_idx + 1, 0};
            const auto& table = enc.edge_codes(static_cast<std::size_t>(cluster_idx));
            for (std::size_t l = 0; l < table.size(); ++l)
                if (table[l] == code) family.scope[1] = static_cast<int>(l) + 1;
        } else {
            const auto& table = enc.edge_codes();
            family.scope = {0};
            for (std::size_t l = 0; l < table.size(); ++l)
                if (table[l] == code) family.scope[0] = static_cast<int>(l) + 1;
        }
        p.tail = TailConstraint{family, stream};
        f.parts.push_back(std::move(p));
    }
    return f;
}

/// Per-atom comparison of the two phases' fibers: the cluster factor J is
/// present in every phase I part and absent from phase II.
struct DiffReport {
    AtomId atom;
    int degree_i = 0;   // p: parts in the phase I fiber
    int degree_ii = 0;  // q: parts in the phase II fiber
    PrefixCode j_code;
    std::vector<PrefixCode> k_codes;
    std::vector<PrefixCode> l_codes;
};

inline DiffReport diff(const Encoding& enc_i, const Encoding& enc_ii, const AtomId& atom) {
    if (enc_i.kind() != PhaseKind::I || enc_ii.kind() != PhaseKind::II)
        throw std::invalid_argument("diff expects a phase I and a phase II encoding");
    const auto atoms_i = all_atoms(enc_i.phase());
    const auto atoms_ii = all_atoms(enc_ii.phase());
    if (std::set<AtomId>(atoms_i.begin(), atoms_i.end()) !=
        std::set<AtomId>(atoms_ii.begin(), atoms_ii.end()))
        throw std::invalid_argument("diff requires identical atom universes");
    auto in = [&](const std::vector<AtomId>& v) {
        return std::find(v.begin(), v.end(), atom) != v.end();
    };
    if (!in(atoms_i) || !in(atoms_ii))
        throw PointError(PointError::Kind::UnknownPoint, "AtomMissingInPhase: " + atom);

    const auto ff_i = factor(fiber(enc_i, NodePoint{atom}), enc_i);
    const auto ff_ii = factor(fiber(enc_ii, NodePoint{atom}), enc_ii);
    DiffReport rep;
    rep.atom = atom;
    rep.degree_i = static_cast<int>(ff_i.parts.size());
    rep.degree_ii = static_cast<int>(ff_ii.parts.size());
    rep.j_code = *ff_i.cluster_code;
    for (const auto& [code, stream] : ff_i.parts) rep.k_codes.push_back(code);
    for (const auto& [code, stream] : ff_ii.parts) rep.l_codes.push_back(code);
    return rep;
}

/// Pairwise disjointness of the fibers of distinct points; a violation is
/// the first intersecting pair.
struct SampleVerdict {
    bool all_disjoint = true;
    std::size_t first = 0;
    std::size_t second = 0;
    std::vector<CoordinateId> witnesses;  // one per checked pair when disjoint
};

inline SampleVerdict decomposition_sample(const Encoding& enc,
                                          const std::vector<PointRef>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("duplicated point at indices " + std::to_string(i) +
                                            " and " + std::to_string(j));
    std::vector<Fiber> fibers;
    for (const auto& p : points) fibers.push_back(fiber(enc, p));
    SampleVerdict v;
    for (std::size_t i = 0; i < fibers.size(); ++i)
        for (std::size_t j = i + 1; j < fibers.size(); ++j) {
            auto d = fibers_disjoint(fibers[i], fibers[j]);
            if (!d.disjoint()) return {false, i, j, {}};
            v.witnesses.push_back(*d.witness);
        }
    return v;
}

struct CoverVerdict {
    bool pass = false;
    std::string reason;
    Bits witness;  // uncovered or doubly covered assignment
};

inline constexpr int kCoverDepthLimit = 24;

/// Verifies the blocks partition the space: the concatenated code table is
/// complete prefix-free, and every depth-length bit assignment has exactly
/// one block code as prefix.
inline CoverVerdict cover_check(const std::vector<Bits>& codes, int depth) {
    std::size_t max_len = 0;
    for (const auto& c : codes) max_len = std::max(max_len, c.size());
    if (depth < static_cast<int>(max_len))
        throw std::invalid_argument("DepthTooSmall: need depth >= " + std::to_string(max_len));
    if (depth > kCoverDepthLimit)
        throw std::invalid_argument("depth exceeds enumeration limit " +
                                    std::to_string(kCoverDepthLimit));

    const auto kraft = kraft_check(codes);
    if (kraft.kind == KraftResult::Kind::PrefixConflict)
        return {false, "prefix conflict", codes[kraft.conflict.first]};
    if (kraft.kind == KraftResult::Kind::Incomplete) return {false, "gap", kraft.gap};

    for (std::uint64_t word = 0; word < (std::uint64_t(1) << depth); ++word) {
        Bits assignment(static_cast<std::size_t>(depth));
        for (int i = 0; i < depth; ++i)
            assignment[static_cast<std::size_t>(i)] = Bit((word >> (depth - 1 - i)) & 1);
        int hits = 0;
        for (const auto& c : codes)
            if (detail::is_prefix(c, assignment)) ++hits;
        if (hits != 1)
            return {false, hits == 0 ? "uncovered assignment" : "overlapping blocks", assignment};
    }
    return {true, "", {}};
}

inline CoverVerdict cover_check(const Encoding& enc, int depth) {
    return cover_check(enc.concatenated_codes(), depth);
}

}  // namespace cantornet
