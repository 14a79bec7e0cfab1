#pragma once

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootdom/errors.hpp"
#include "rootdom/vertex_set.hpp"

namespace rootdom {

using Edge = std::pair<Vertex, Vertex>;

// Distance between vertices in different components.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kInfinity) {}

    int order() const { return n_; }
    int at(Vertex u, Vertex v) const { return d_[index(u, v)]; }
    int& at(Vertex u, Vertex v) { return d_[index(u, v)]; }
    bool reachable(Vertex u, Vertex v) const { return at(u, v) != kInfinity; }

    bool operator==(const DistanceTable&) const = default;

private:
    std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

    int n_ = 0;
    std::vector<int> d_;
};

/// Immutable undirected simple graph on vertices 0..n-1 (n <= kMaxOrder).
///
/// Copies share a lazily built all-pairs distance table; the table is
/// computed at most once, so concurrent readers are safe.
class Graph {
public:
    Graph() : cache_(std::make_shared<Cache>()) {}

    /// Builds the simple graph on n vertices with the given edges. Duplicate
    /// edges (in either orientation) are merged; loops and out-of-range
    /// endpoints are rejected.
    static Graph from_edge_list(int n, std::span<const Edge> edges) {
        if (n < 0 || n > kMaxOrder) {
            throw InputError("graph order " + std::to_string(n) + " outside [0, " +
                             std::to_string(kMaxOrder) + "]");
        }
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, VertexSet{});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n) {
                throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has an endpoint outside 0.." + std::to_string(n - 1));
            }
            if (u == v) throw InputError("loop at vertex " + std::to_string(u));
            g.adj_[u].insert(v);
            g.adj_[v].insert(u);
        }
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v : g.adj_[u]) {
                if (u < v) g.edges_.emplace_back(u, v);
            }
        }
        return g;
    }

    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    VertexSet closed_neighbors(Vertex v) const { return adj_[v] | VertexSet::single(v); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    int degree(Vertex v) const { return adj_[v].size(); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : kMaxOrder;
        for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }
    int max_degree() const {
        int d = 0;
        for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    /// Open neighborhood of a set: union of N(x) over x in s.
    VertexSet neighbors(VertexSet s) const {
        VertexSet out;
        for (Vertex x : s) out |= adj_[x];
        return out;
    }
    /// Closed neighborhood N[s].
    VertexSet closed_neighbors(VertexSet s) const { return neighbors(s) | s; }

    /// Edges as (u, v) with u < v, sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(VertexSet s) const { return s.fits(n_); }
    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    const DistanceTable& distances() const {
        std::call_once(cache_->once, [this] { cache_->table = compute_distances(); });
        return cache_->table;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    struct Cache {
        std::once_flag once;
        DistanceTable table;
    };

    DistanceTable compute_distances() const {
        DistanceTable t(n_);
        std::vector<Vertex> queue(n_);
        for (Vertex s = 0; s < n_; ++s) {
            std::size_t head = 0, tail = 0;
            queue[tail++] = s;
            t.at(s, s) = 0;
            while (head < tail) {
                Vertex u = queue[head++];
                for (Vertex w : adj_[u]) {
                    if (t.at(s, w) == kInfinity) {
                        t.at(s, w) = t.at(s, u) + 1;
                        queue[tail++] = w;
                    }
                }
            }
        }
        return t;
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<Edge> edges_;
    std::shared_ptr<Cache> cache_;
};

/// A graph derived from a host graph, with explicit id translation.
/// old_to_new[v] is -1 for host vertices that are not present.
struct DerivedGraph {
    Graph graph;
    std::vector<Vertex> old_to_new;
    std::vector<Vertex> new_to_old;

    VertexSet to_host(VertexSet s) const {
        VertexSet out;
        for (Vertex v : s) out.insert(new_to_old[v]);
        return out;
    }
};

inline void require_subset(const Graph& g, VertexSet s, const char* what) {
    if (!g.contains(s)) {
        throw InputError(std::string(what) + " " + s.to_string() +
                         " is not a subset of the vertices of a graph of order " +
                         std::to_string(g.order()));
    }
}

/// Induced subgraph on `keep`, renumbered in increasing host-id order.
inline DerivedGraph induced_subgraph(const Graph& g, VertexSet keep) {
    require_subset(g, keep, "vertex set");
    DerivedGraph out;
    out.old_to_new.assign(g.order(), -1);
    for (Vertex v : keep) {
        out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (keep.contains(u) && keep.contains(v)) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    }
    out.graph = Graph::from_edge_list(static_cast<int>(out.new_to_old.size()), edges);
    return out;
}

/// G - A. Removing every vertex is rejected: no parameter is defined on the
/// empty graph.
inline DerivedGraph delete_vertices(const Graph& g, VertexSet removed) {
    require_subset(g, removed, "deleted set");
    if (g.order() > 0 && removed == g.vertices()) {
        throw InputError("deleting all " + std::to_string(g.order()) + " vertices leaves the empty graph");
    }
    return induced_subgraph(g, g.vertices() - removed);
}

inline DerivedGraph delete_vertex(const Graph& g, Vertex v) { return delete_vertices(g, VertexSet::single(v)); }

/// Vertices reachable from `start` using only vertices in `within`.
inline VertexSet reach_within(const Graph& g, VertexSet within, Vertex start) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next = (g.neighbors(frontier) & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return reach_within(g, g.vertices(), 0) == g.vertices();
}

/// True iff the subgraph induced by s is connected. s must be nonempty.
inline bool is_connected_subset(const Graph& g, VertexSet s) {
    require_subset(g, s, "vertex set");
    if (s.empty()) throw InputError("connectivity of the empty vertex set is undefined");
    return reach_within(g, s, s.first()) == s;
}

/// Vertices lying on some shortest u-w path (including u and w).
inline VertexSet geodesic_interval(const Graph& g, Vertex u, Vertex w) {
    const DistanceTable& d = g.distances();
    VertexSet out;
    if (!d.reachable(u, w)) return out;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (d.reachable(u, x) && d.reachable(x, w) && d.at(u, x) + d.at(x, w) == d.at(u, w)) out.insert(x);
    }
    return out;
}

/// Geodesic convexity. The host graph must be connected.
inline bool is_convex_set(const Graph& g, VertexSet s) {
    require_subset(g, s, "vertex set");
    if (!is_connected(g)) throw InputError("convexity requires a connected graph");
    std::vector<Vertex> members = s.to_vector();
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            if (!geodesic_interval(g, members[a], members[b]).is_subset_of(s)) return false;
        }
    }
    return true;
}

/// G[D]_w: vertex set N[D], edges of G with at least one endpoint in D.
inline DerivedGraph weakly_induced_subgraph(const Graph& g, VertexSet d) {
    require_subset(g, d, "vertex set");
    if (d.empty()) throw InputError("weakly induced subgraph of the empty set is undefined");
    VertexSet keep = g.closed_neighbors(d);
    DerivedGraph out;
    out.old_to_new.assign(g.order(), -1);
    for (Vertex v : keep) {
        out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (d.contains(u) || d.contains(v)) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    }
    out.graph = Graph::from_edge_list(static_cast<int>(out.new_to_old.size()), edges);
    return out;
}

/// Connectivity of G[D]_w without materialising it: from a D-vertex every
/// neighbor is reachable, from a non-D vertex only its D-neighbors are.
inline bool is_weakly_connected(const Graph& g, VertexSet d) {
    if (d.empty()) return false;
    VertexSet target = g.closed_neighbors(d);
    VertexSet seen = VertexSet::single(d.first());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next = g.neighbors(frontier & d) | (g.neighbors(frontier - d) & d);
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen == target;
}

inline VertexSet leaves(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) out.insert(v);
    }
    return out;
}

inline VertexSet support_vertices(const Graph& g) { return g.neighbors(leaves(g)); }

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

/// Vertices whose removal increases the number of components.
inline VertexSet cut_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet rest = g.vertices() - VertexSet::single(v);
        // components of g meeting N(v) must stay joined without v
        VertexSet nb = g.neighbors(v);
        if (nb.size() < 2) continue;
        if (!nb.is_subset_of(reach_within(g, rest, nb.first()))) out.insert(v);
    }
    return out;
}

enum class PrivateNeighborRule {
    Displayed,  // N[v] - N(D - {v}), open neighborhoods subtracted
    Prose,      // { x in N[v] : N[x] ∩ D = {v} }
};

/// Private neighbor set of v with respect to D (v must belong to D).
inline VertexSet private_neighbor_set(const Graph& g, VertexSet d, Vertex v,
                                      PrivateNeighborRule rule = PrivateNeighborRule::Displayed) {
    require_subset(g, d, "vertex set");
    if (!g.contains(v) || !d.contains(v)) {
        throw InputError("private neighbor set requires v in D (v=" + std::to_string(v) + ")");
    }
    VertexSet others = d - VertexSet::single(v);
    if (rule == PrivateNeighborRule::Displayed) return g.closed_neighbors(v) - g.neighbors(others);
    VertexSet out;
    for (Vertex x : g.closed_neighbors(v)) {
        if ((g.closed_neighbors(x) & d) == VertexSet::single(v)) out.insert(x);
    }
    return out;
}

}  // namespace rootdom
