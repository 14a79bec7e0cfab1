#pragma once

// Naive reference enumerators used as correctness referees. They work from
// an adjacency matrix and the textbook definitions only: no pruning, no early
// exit, no shared code with the solvers beyond reading the edge list.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rootdom/graph.hpp"
#include "rootdom/solvers.hpp"

namespace oracle {

using rootdom::Parameter;

struct Naive {
    int n = 0;
    std::vector<std::vector<bool>> adj;
    std::vector<std::vector<int>> dist;  // -1 = unreachable

    explicit Naive(const rootdom::Graph& g) : n(g.order()), adj(n, std::vector<bool>(n, false)) {
        for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
        const int inf = 1 << 20;
        std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
        for (int u = 0; u < n; ++u) {
            d[u][u] = 0;
            for (int v = 0; v < n; ++v)
                if (adj[u][v]) d[u][v] = 1;
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        dist.assign(n, std::vector<int>(n, -1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][j] < inf) dist[i][j] = d[i][j];
    }

    static bool in(std::uint64_t s, int v) { return (s >> v) & 1U; }

    bool graph_connected() const {
        for (int v = 0; v < n; ++v)
            if (dist[0][v] < 0) return false;
        return true;
    }

    bool dominating(std::uint64_t s) const {
        for (int v = 0; v < n; ++v) {
            if (in(s, v)) continue;
            bool hit = false;
            for (int u = 0; u < n; ++u) hit = hit || (in(s, u) && adj[u][v]);
            if (!hit) return false;
        }
        return true;
    }

    bool independent(std::uint64_t s) const {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (in(s, u) && in(s, v) && adj[u][v]) return false;
        return true;
    }

    // Depth-first search restricted to s, over an explicit edge relation.
    template <class Edge>
    bool connected_under(std::uint64_t s, std::uint64_t universe, Edge edge) const {
        int start = -1;
        for (int v = 0; v < n && start < 0; ++v)
            if (in(s, v)) start = v;
        if (start < 0) return false;
        std::vector<bool> seen(n, false);
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (!seen[w] && in(universe, w) && edge(u, w)) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (in(universe, v) && !seen[v]) return false;
        return true;
    }

    bool connected_set(std::uint64_t s) const {
        return connected_under(s, s, [&](int a, int b) { return adj[a][b]; });
    }

    bool convex_set(std::uint64_t s) const {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!in(s, a) || !in(s, b)) continue;
                for (int x = 0; x < n; ++x)
                    if (dist[a][x] + dist[x][b] == dist[a][b] && !in(s, x)) return false;
            }
        return true;
    }

    // Literal G[D]_w: vertex set N[D], edges with an endpoint in D.
    bool weakly_connected(std::uint64_t s) const {
        std::uint64_t closed = s;
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (in(s, u) && adj[u][v]) closed |= std::uint64_t{1} << v;
        return connected_under(s, closed, [&](int a, int b) { return adj[a][b] && (in(s, a) || in(s, b)); });
    }

    bool super_dominating(std::uint64_t s) const {
        for (int v = 0; v < n; ++v) {
            if (in(s, v)) continue;
            bool ok = false;
            for (int u = 0; u < n && !ok; ++u) {
                if (!in(s, u) || !adj[u][v]) continue;
                bool inside = true;
                for (int w = 0; w < n; ++w)
                    if (adj[u][w] && !in(s, w) && w != v) inside = false;
                ok = inside;
            }
            if (!ok) return false;
        }
        return true;
    }

    bool member(Parameter kind, std::uint64_t s) const {
        switch (kind) {
            case Parameter::Domination: return dominating(s);
            case Parameter::Independence: return independent(s);
            case Parameter::IndependentDomination: return dominating(s) && independent(s);
            case Parameter::Connected: return s != 0 && dominating(s) && connected_set(s);
            case Parameter::Convex: return s != 0 && dominating(s) && convex_set(s);
            case Parameter::WeaklyConnected: return s != 0 && dominating(s) && weakly_connected(s);
            case Parameter::Super: return super_dominating(s);
            case Parameter::Roman: break;
        }
        return false;
    }

    // Extremal value over all 2^n subsets; -1 when no subset qualifies.
    int value(Parameter kind) const {
        if (kind == Parameter::Roman) return roman();
        const bool maximize = kind == Parameter::Independence;
        if ((kind == Parameter::Connected || kind == Parameter::Convex || kind == Parameter::WeaklyConnected) &&
            !graph_connected()) {
            return -1;
        }
        int best = -1;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            if (!member(kind, s)) continue;
            int size = __builtin_popcountll(s);
            if (best < 0 || (maximize ? size > best : size < best)) best = size;
        }
        return best;
    }

    // All optimal subsets in increasing bitmask order.
    std::vector<std::uint64_t> optimal_sets(Parameter kind) const {
        const int best = value(kind);
        std::vector<std::uint64_t> out;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
            if (__builtin_popcountll(s) == best && member(kind, s)) out.push_back(s);
        return out;
    }

    // Full 3^n scan over labelings V -> {0,1,2}.
    template <class Visit>
    void each_roman_function(Visit visit) const {
        std::vector<int> f(n, 0);
        while (true) {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                if (f[v] != 0) continue;
                bool two = false;
                for (int u = 0; u < n; ++u) two = two || (adj[u][v] && f[u] == 2);
                ok = two;
            }
            if (ok) visit(f);
            int i = 0;
            while (i < n && f[i] == 2) f[i++] = 0;
            if (i == n) break;
            ++f[i];
        }
    }

    int roman() const {
        int best = 1 << 30;
        each_roman_function([&](const std::vector<int>& f) {
            int w = 0;
            for (int x : f) w += x;
            best = std::min(best, w);
        });
        return best;
    }

    // Labels taken by vertex v across all minimum-weight Roman functions.
    std::vector<int> roman_values_at(int v) const {
        const int best = roman();
        bool seen[3] = {false, false, false};
        each_roman_function([&](const std::vector<int>& f) {
            int w = 0;
            for (int x : f) w += x;
            if (w == best) seen[f[v]] = true;
        });
        std::vector<int> out;
        for (int l = 0; l < 3; ++l)
            if (seen[l]) out.push_back(l);
        return out;
    }

    int roman_optimal_count() const {
        const int best = roman();
        int count = 0;
        each_roman_function([&](const std::vector<int>& f) {
            int w = 0;
            for (int x : f) w += x;
            count += w == best;
        });
        return count;
    }
};

}  // namespace oracle
