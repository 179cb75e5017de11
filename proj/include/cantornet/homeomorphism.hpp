#pragma once

#include "cantornet/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace cantornet {

/// One component after suppressing every degree-2 node. A component whose
/// nodes all have degree 2 is a circle and collapses to a canonical
/// marker: one node with one loop.
struct ReducedComponent {
    bool pure_cycle = false;
    std::vector<AtomId> nodes;                // branch nodes, or the marker
    std::vector<std::pair<int, int>> edges;   // index pairs, loops allowed

    int node_degree(int idx) const {
        int d = 0;
        for (const auto& [a, b] : edges) {
            if (a == idx) ++d;
            if (b == idx) ++d;
        }
        return d;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> seq;
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
            seq.push_back(node_degree(i));
        std::sort(seq.begin(), seq.end());
        return seq;
    }

    int loop_count() const {
        int n = 0;
        for (const auto& [a, b] : edges)
            if (a == b) ++n;
        return n;
    }

    /// Multiset of multiplicities of non-loop node pairs.
    std::vector<int> parallel_multiplicities() const {
        std::map<std::pair<int, int>, int> mult;
        for (auto [a, b] : edges) {
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            ++mult[{a, b}];
        }
        std::vector<int> out;
        for (const auto& [pair, m] : mult) out.push_back(m);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Subdivision-invariant fingerprint used before attempting isomorphism.
    using Key = std::tuple<bool, std::size_t, std::size_t, std::vector<int>, int, std::vector<int>>;
    Key key() const {
        return {pure_cycle, nodes.size(), edges.size(), degree_sequence(), loop_count(),
                parallel_multiplicities()};
    }
};

struct ReducedGraph {
    std::vector<ReducedComponent> comps;
};

struct InvariantReport {
    int component_count = 0;
    int nodes = 0;
    int edges = 0;
    std::vector<int> degree_sequence;  // sorted descending
    int cycle_rank = 0;                // E - V + c
    ReducedGraph reduced;
};

/// Suppresses degree-2 nodes: each maximal chain through degree-2 nodes
/// becomes one edge between branch nodes; pure-cycle components become
/// loop markers. The result is a homeomorphism invariant of the graph.
inline ReducedGraph reduce(const std::vector<AtomId>& atoms, const std::vector<Bond>& bonds) {
    const auto deg = degrees(atoms, bonds);
    ReducedGraph out;
    for (const auto& comp : components(atoms, bonds)) {
        const std::set<AtomId> in_comp(comp.begin(), comp.end());
        bool all_two = true;
        for (const auto& a : comp) all_two = all_two && deg.at(a) == 2;
        if (all_two) {
            ReducedComponent rc;
            rc.pure_cycle = true;
            rc.nodes = {"<cycle:" + comp.front() + ">"};
            rc.edges = {{0, 0}};
            out.comps.push_back(std::move(rc));
            continue;
        }

        ReducedComponent rc;
        std::map<AtomId, int> node_index;
        for (const auto& a : comp)
            if (deg.at(a) != 2) {
                node_index[a] = static_cast<int>(rc.nodes.size());
                rc.nodes.push_back(a);
            }

        // Half-edge walk: bond index * 2 + end (0 = u, 1 = v).
        std::vector<std::pair<std::size_t, int>> incident_halves;  // flattened per atom
        std::map<AtomId, std::vector<std::size_t>> halves_at;
        for (std::size_t bi = 0; bi < bonds.size(); ++bi) {
            if (!in_comp.count(bonds[bi].u)) continue;
            halves_at[bonds[bi].u].push_back(bi * 2);
            halves_at[bonds[bi].v].push_back(bi * 2 + 1);
        }
        auto node_of = [&](std::size_t half) -> const AtomId& {
            const Bond& b = bonds[half / 2];
            return half % 2 == 0 ? b.u : b.v;
        };
        std::set<std::size_t> visited;
        for (const auto& [start, start_idx] : node_index) {
            for (std::size_t h : halves_at[start]) {
                if (visited.count(h)) continue;
                visited.insert(h);
                std::size_t opposite = h ^ 1;
                visited.insert(opposite);
                AtomId cur = node_of(opposite);
                while (deg.at(cur) == 2) {
                    std::size_t next = halves_at[cur][0];
                    if (next == opposite) next = halves_at[cur][1];
                    visited.insert(next);
                    opposite = next ^ 1;
                    visited.insert(opposite);
                    cur = node_of(opposite);
                }
                rc.edges.emplace_back(start_idx, node_index.at(cur));
            }
        }
        std::sort(rc.edges.begin(), rc.edges.end(), [](auto a, auto b) {
            if (a.first > a.second) std::swap(a.first, a.second);
            if (b.first > b.second) std::swap(b.first, b.second);
            return a < b;
        });
        out.comps.push_back(std::move(rc));
    }
    return out;
}

inline ReducedGraph reduce(const Phase& phase) { return reduce(all_atoms(phase), all_bonds(phase)); }

inline InvariantReport invariants(const std::vector<AtomId>& atoms,
                                  const std::vector<Bond>& bonds) {
    InvariantReport rep;
    rep.component_count = static_cast<int>(components(atoms, bonds).size());
    rep.nodes = static_cast<int>(atoms.size());
    rep.edges = static_cast<int>(bonds.size());
    for (const auto& [atom, d] : degrees(atoms, bonds)) rep.degree_sequence.push_back(d);
    std::sort(rep.degree_sequence.rbegin(), rep.degree_sequence.rend());
    rep.cycle_rank = rep.edges - rep.nodes + rep.component_count;
    rep.reduced = reduce(atoms, bonds);
    return rep;
}

inline InvariantReport invariants(const Phase& phase) {
    return invariants(all_atoms(phase), all_bonds(phase));
}

enum class HomeoVerdict { Homeomorphic, NotHomeomorphic, Inconclusive };

struct ObstructionResult {
    HomeoVerdict verdict = HomeoVerdict::Inconclusive;
    std::string witness;  // violated invariant, or empty
    std::vector<std::pair<AtomId, AtomId>> mapping;  // reduced-node pairs when homeomorphic
};

namespace detail {

/// Brute-force multigraph isomorphism over <= 10 nodes via backtracking
/// on degree-compatible assignments; adjacency compared as edge counts.
inline bool reduced_isomorphism(const ReducedComponent& a, const ReducedComponent& b,
                                std::vector<int>& mapping_out) {
    const int n = static_cast<int>(a.nodes.size());
    if (n != static_cast<int>(b.nodes.size()) || a.edges.size() != b.edges.size()) return false;
    auto counts = [n](const ReducedComponent& g) {
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
        for (auto [x, y] : g.edges) {
            ++m[x][y];
            if (x != y) ++m[y][x];
        }
        return m;
    };
    const auto ma = counts(a);
    const auto mb = counts(b);
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto backtrack = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || a.node_degree(i) != b.node_degree(j) || ma[i][i] != mb[j][j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k) ok = ma[i][k] == mb[j][map[k]];
            if (!ok) continue;
            map[i] = j;
            used[j] = true;
            if (self(self, i + 1)) return true;
            map[i] = -1;
            used[j] = false;
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return false;
    mapping_out = map;
    return true;
}

inline std::string join_ints(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "}";
}

}  // namespace detail

inline constexpr int kIsomorphismNodeBound = 10;

/// Decides homeomorphism of two phases through reduced-graph invariants:
/// component count, cycle rank, per-component fingerprints, then explicit
/// isomorphism of reduced components. Inconclusive beyond the node bound.
inline ObstructionResult obstruction(const Phase& a, const Phase& b) {
    const auto inv_a = invariants(a);
    const auto inv_b = invariants(b);
    if (inv_a.component_count != inv_b.component_count)
        return {HomeoVerdict::NotHomeomorphic,
                "components " + std::to_string(inv_a.component_count) + " vs " +
                    std::to_string(inv_b.component_count),
                {}};
    if (inv_a.cycle_rank != inv_b.cycle_rank)
        return {HomeoVerdict::NotHomeomorphic,
                "cycle rank " + std::to_string(inv_a.cycle_rank) + " vs " +
                    std::to_string(inv_b.cycle_rank),
                {}};

    auto keys = [](const ReducedGraph& g) {
        std::vector<ReducedComponent::Key> ks;
        for (const auto& c : g.comps) ks.push_back(c.key());
        std::sort(ks.begin(), ks.end());
        return ks;
    };
    const auto& ra = inv_a.reduced;
    const auto& rb = inv_b.reduced;
    if (keys(ra) != keys(rb)) {
        auto degs = [](const ReducedGraph& g) {
            std::vector<int> d;
            for (const auto& c : g.comps)
                for (int x : c.degree_sequence()) d.push_back(x);
            std::sort(d.begin(), d.end());
            return d;
        };
        return {HomeoVerdict::NotHomeomorphic,
                "reduced degree sequences " + detail::join_ints(degs(ra)) + " vs " +
                    detail::join_ints(degs(rb)),
                {}};
    }

    for (const auto& c : ra.comps)
        if (static_cast<int>(c.nodes.size()) > kIsomorphismNodeBound)
            return {HomeoVerdict::Inconclusive,
                    "reduced component exceeds " + std::to_string(kIsomorphismNodeBound) +
                        " nodes",
                    {}};

    // Greedy per-key matching; within a key group every pairing attempt is
    // tried, so failure means no perfect matching exists for that group.
    std::vector<bool> taken(rb.comps.size(), false);
    std::vector<std::pair<AtomId, AtomId>> mapping;
    for (const auto& ca : ra.comps) {
        bool matched = false;
        for (std::size_t j = 0; j < rb.comps.size() && !matched; ++j) {
            if (taken[j] || !(ca.key() == rb.comps[j].key())) continue;
            std::vector<int> node_map;
            if (detail::reduced_isomorphism(ca, rb.comps[j], node_map)) {
                taken[j] = true;
                matched = true;
                for (std::size_t i = 0; i < ca.nodes.size(); ++i)
                    mapping.emplace_back(ca.nodes[i], rb.comps[j].nodes[node_map[i]]);
            }
        }
        if (!matched)
            return {HomeoVerdict::NotHomeomorphic, "no isomorphism of reduced components", {}};
    }
    return {HomeoVerdict::Homeomorphic, "", mapping};
}

}  // namespace cantornet
