#pragma once

#include "cantornet/graph.hpp"

namespace cantornet {

/// Clustered fixture: a triangle cluster plus a single-bond pair.
inline PhaseI phase_a() {
    PhaseI p;
    p.clusters.push_back(ClusterGraph{
        "c1", {"a1", "a2", "a3"}, {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a1"}}});
    p.clusters.push_back(ClusterGraph{"c2", {"a4", "a5"}, {{"a4", "a5"}}});
    return p;
}

/// Connected fixture on the same atoms: a 5-cycle.
inline PhaseII phase_b() {
    return PhaseII{{"a1", "a2", "a3", "a4", "a5"},
                   {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a5"}, {"a5", "a1"}}};
}

}  // namespace cantornet
