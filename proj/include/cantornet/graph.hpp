#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cantornet {

using AtomId = std::string;

/// Bond between two distinct atoms. The input order fixes the arc
/// orientation: parameter 0 sits at u, parameter 1 at v.
struct Bond {
    AtomId u;
    AtomId v;

    bool operator==(const Bond&) const = default;
};

/// Connected cluster C_i of phase I.
struct ClusterGraph {
    std::string id;
    std::vector<AtomId> atoms;
    std::vector<Bond> bonds;
};

/// Clustered phase: disjoint union of clusters.
struct PhaseI {
    std::vector<ClusterGraph> clusters;
};

/// Fully connected phase: one graph over all atoms.
struct PhaseII {
    std::vector<AtomId> atoms;
    std::vector<Bond> bonds;
};

using Phase = std::variant<PhaseI, PhaseII>;

enum class ValidationFault {
    DuplicateAtom,
    SelfLoop,
    UnknownEndpoint,
    DisconnectedCluster,
    Disconnected,
    IsolatedAtom,
    EmptyPhase,
};

inline const char* fault_name(ValidationFault f) {
    switch (f) {
        case ValidationFault::DuplicateAtom: return "DuplicateAtom";
        case ValidationFault::SelfLoop: return "SelfLoop";
        case ValidationFault::UnknownEndpoint: return "UnknownEndpoint";
        case ValidationFault::DisconnectedCluster: return "DisconnectedCluster";
        case ValidationFault::Disconnected: return "Disconnected";
        case ValidationFault::IsolatedAtom: return "IsolatedAtom";
        case ValidationFault::EmptyPhase: return "EmptyPhase";
    }
    return "?";
}

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationFault fault, std::string element)
        : std::runtime_error(std::string(fault_name(fault)) + ": " + element),
          fault_(fault),
          element_(std::move(element)) {}

    ValidationFault fault() const { return fault_; }
    const std::string& element() const { return element_; }

private:
    ValidationFault fault_;
    std::string element_;
};

/// Connected components as a reachability partition; component order is
/// by first appearance of an atom, members keep input order.
inline std::vector<std::vector<AtomId>> components(const std::vector<AtomId>& atoms,
                                                   const std::vector<Bond>& bonds) {
    std::map<AtomId, std::vector<AtomId>> adj;
    for (const auto& a : atoms) adj[a];
    for (const auto& b : bonds) {
        adj[b.u].push_back(b.v);
        adj[b.v].push_back(b.u);
    }
    std::set<AtomId> visited;
    std::vector<std::vector<AtomId>> out;
    for (const auto& a : atoms) {
        if (visited.count(a)) continue;
        std::vector<AtomId> comp;
        std::vector<AtomId> stack{a};
        visited.insert(a);
        while (!stack.empty()) {
            AtomId cur = stack.back();
            stack.pop_back();
            comp.push_back(cur);
            for (const auto& nb : adj[cur])
                if (visited.insert(nb).second) stack.push_back(nb);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

namespace detail {

inline void check_graph_core(const std::vector<AtomId>& atoms, const std::vector<Bond>& bonds,
                             std::set<AtomId>& universe) {
    if (atoms.empty()) throw ValidationError(ValidationFault::EmptyPhase, "no atoms");
    std::set<AtomId> local;
    for (const auto& a : atoms) {
        if (a.empty()) throw ValidationError(ValidationFault::DuplicateAtom, "<empty id>");
        if (!local.insert(a).second || !universe.insert(a).second)
            throw ValidationError(ValidationFault::DuplicateAtom, a);
    }
    std::map<AtomId, int> degree;
    for (const auto& b : bonds) {
        if (b.u == b.v) throw ValidationError(ValidationFault::SelfLoop, b.u);
        if (!local.count(b.u)) throw ValidationError(ValidationFault::UnknownEndpoint, b.u);
        if (!local.count(b.v)) throw ValidationError(ValidationFault::UnknownEndpoint, b.v);
        ++degree[b.u];
        ++degree[b.v];
    }
    for (const auto& a : atoms)
        if (degree[a] == 0) throw ValidationError(ValidationFault::IsolatedAtom, a);
}

}  // namespace detail

inline void validate(const PhaseI& phase) {
    if (phase.clusters.empty()) throw ValidationError(ValidationFault::EmptyPhase, "no clusters");
    std::set<AtomId> universe;
    for (const auto& c : phase.clusters) {
        detail::check_graph_core(c.atoms, c.bonds, universe);
        if (components(c.atoms, c.bonds).size() != 1)
            throw ValidationError(ValidationFault::DisconnectedCluster, c.id);
    }
}

inline void validate(const PhaseII& phase) {
    std::set<AtomId> universe;
    detail::check_graph_core(phase.atoms, phase.bonds, universe);
    if (components(phase.atoms, phase.bonds).size() != 1)
        throw ValidationError(ValidationFault::Disconnected, "phase2");
}

inline std::vector<AtomId> all_atoms(const PhaseI& p) {
    std::vector<AtomId> out;
    for (const auto& c : p.clusters) out.insert(out.end(), c.atoms.begin(), c.atoms.end());
    return out;
}

inline std::vector<Bond> all_bonds(const PhaseI& p) {
    std::vector<Bond> out;
    for (const auto& c : p.clusters) out.insert(out.end(), c.bonds.begin(), c.bonds.end());
    return out;
}

inline std::vector<AtomId> all_atoms(const Phase& p) {
    if (const auto* a = std::get_if<PhaseI>(&p)) return all_atoms(*a);
    return std::get<PhaseII>(p).atoms;
}

inline std::vector<Bond> all_bonds(const Phase& p) {
    if (const auto* a = std::get_if<PhaseI>(&p)) return all_bonds(*a);
    return std::get<PhaseII>(p).bonds;
}

inline std::map<AtomId, int> degrees(const std::vector<AtomId>& atoms,
                                     const std::vector<Bond>& bonds) {
    std::map<AtomId, int> deg;
    for (const auto& a : atoms) deg[a];
    for (const auto& b : bonds) {
        ++deg[b.u];
        ++deg[b.v];
    }
    return deg;
}

}  // namespace cantornet
