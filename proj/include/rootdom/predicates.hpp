#pragma once

#include "rootdom/graph.hpp"

namespace rootdom {

inline bool is_dominating(const Graph& g, VertexSet d) {
    return g.closed_neighbors(d) == g.vertices();
}

inline bool is_independent(const Graph& g, VertexSet s) {
    return !g.neighbors(s).intersects(s);
}

/// For every v outside D there is u in N(v) ∩ D with N(u) ⊆ D ∪ {v}.
inline bool is_super_dominating(const Graph& g, VertexSet d) {
    for (Vertex v : g.vertices() - d) {
        bool ok = false;
        for (Vertex u : g.neighbors(v) & d) {
            if (g.neighbors(u).is_subset_of(d | VertexSet::single(v))) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

inline bool is_independent_dominating(const Graph& g, VertexSet d) {
    return is_dominating(g, d) && is_independent(g, d);
}

inline bool is_connected_dominating(const Graph& g, VertexSet d) {
    return !d.empty() && is_dominating(g, d) && reach_within(g, d, d.first()) == d;
}

/// Requires a connected host graph (see is_convex_set).
inline bool is_convex_dominating(const Graph& g, VertexSet d) {
    return !d.empty() && is_dominating(g, d) && is_convex_set(g, d);
}

inline bool is_weakly_connected_dominating(const Graph& g, VertexSet d) {
    return is_dominating(g, d) && is_weakly_connected(g, d);
}

}  // namespace rootdom
