#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "facetree/error.hpp"

namespace facetree {

using Vertex = int;
using EdgeId = int;
using DartId = int;
using FaceId = int;

/// Abstract undirected multigraph without loops. Edge ids are dense and stable.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int num_vertices) : incident_(static_cast<std::size_t>(num_vertices)) {}

    int add_vertex()
    {
        incident_.emplace_back();
        return num_vertices() - 1;
    }

    EdgeId add_edge(Vertex u, Vertex v)
    {
        if (u == v)
            throw StructuralError("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
            throw InputError("edge endpoint out of range");
        ends_.push_back({u, v});
        const EdgeId e = num_edges() - 1;
        incident_[u].push_back(e);
        incident_[v].push_back(e);
        return e;
    }

    int num_vertices() const { return static_cast<int>(incident_.size()); }
    int num_edges() const { return static_cast<int>(ends_.size()); }
    int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
    const std::array<Vertex, 2>& ends(EdgeId e) const { return ends_[e]; }
    const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }

    Vertex other(EdgeId e, Vertex v) const { return ends_[e][0] == v ? ends_[e][1] : ends_[e][0]; }

    int min_degree() const
    {
        int d = num_vertices() ? degree(0) : 0;
        for (Vertex v = 1; v < num_vertices(); ++v)
            d = std::min(d, degree(v));
        return d;
    }

    bool is_regular(int d) const
    {
        for (Vertex v = 0; v < num_vertices(); ++v)
            if (degree(v) != d)
                return false;
        return true;
    }

    bool is_eulerian() const
    {
        for (Vertex v = 0; v < num_vertices(); ++v)
            if (degree(v) % 2 != 0)
                return false;
        return true;
    }

private:
    std::vector<std::array<Vertex, 2>> ends_;
    std::vector<std::vector<EdgeId>> incident_;
};

namespace detail {

// Connectivity of the graph with `removed` vertices deleted. Vertices with removed[v] set are ignored.
inline bool connected_without(const Multigraph& g, const std::vector<char>& removed)
{
    const int n = g.num_vertices();
    Vertex start = -1;
    int alive = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0)
                start = v;
        }
    if (alive <= 1)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(v)) {
            const Vertex w = g.other(e, v);
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == alive;
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

} // namespace detail

inline bool is_connected(const Multigraph& g)
{
    return detail::connected_without(g, std::vector<char>(static_cast<std::size_t>(g.num_vertices()), 0));
}

/// Vertex connectivity of the underlying simple graph, by cut enumeration.
/// Complete graphs K_n report n - 1; a disconnected graph reports 0.
inline int connectivity(const Multigraph& g)
{
    const int n = g.num_vertices();
    if (n <= 1)
        return 0;
    std::vector<char> removed(n, 0);
    if (!detail::connected_without(g, removed))
        return 0;
    // Simple-graph degree: distinct neighbours.
    int delta = n - 1;
    for (Vertex v = 0; v < n; ++v) {
        std::set<Vertex> nb;
        for (EdgeId e : g.incident(v))
            nb.insert(g.other(e, v));
        delta = std::min(delta, static_cast<int>(nb.size()));
    }
    for (int k = 1; k < delta; ++k) {
        if (n - k < 2)
            break;
        // Enumerate k-subsets in lexicographic order.
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            for (int i : pick)
                removed[i] = 1;
            const bool ok = detail::connected_without(g, removed);
            for (int i : pick)
                removed[i] = 0;
            if (!ok)
                return k;
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return delta;
}

/// Two-colouring by BFS layering; side[v] in {0, 1}, vertex 0 on side 0.
inline std::optional<std::vector<int>> bipartition(const Multigraph& g)
{
    const int n = g.num_vertices();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                const Vertex w = g.other(e, v);
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

inline bool is_bipartite(const Multigraph& g) { return bipartition(g).has_value(); }

} // namespace facetree
