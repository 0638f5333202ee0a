#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "facetree/error.hpp"
#include "facetree/multigraph.hpp"
#include "facetree/plane_graph.hpp"

namespace facetree {

/// Closed walk through every vertex once. edges[i] joins vertices[i] and vertices[i + 1 mod n].
struct HamiltonianCycle {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

/// Path vertices[0] .. vertices[n - 1]; edges[i] joins vertices[i] and vertices[i + 1].
struct HamiltonianPath {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

struct EdgeConstraints {
    std::vector<EdgeId> forced;
    std::vector<EdgeId> forbidden;
};

inline Verdict verify_hamiltonian_cycle(const Multigraph& g, const HamiltonianCycle& c)
{
    const int n = g.num_vertices();
    if (static_cast<int>(c.vertices.size()) != n || static_cast<int>(c.edges.size()) != n)
        return Verdict::fail("cycle length " + std::to_string(c.edges.size()) + " differs from vertex count " +
                             std::to_string(n));
    if (n < 2)
        return Verdict::fail("no hamiltonian cycle on fewer than two vertices");
    std::vector<char> seen(n, 0), used(g.num_edges(), 0);
    for (int i = 0; i < n; ++i) {
        const Vertex v = c.vertices[i];
        if (v < 0 || v >= n || seen[v])
            return Verdict::fail("vertex " + std::to_string(v) + " missing or repeated");
        seen[v] = 1;
        const EdgeId e = c.edges[i];
        if (e < 0 || e >= g.num_edges() || used[e])
            return Verdict::fail("edge " + std::to_string(e) + " invalid or repeated");
        used[e] = 1;
        const Vertex w = c.vertices[(i + 1) % n];
        const auto& ends = g.ends(e);
        if (!((ends[0] == v && ends[1] == w) || (ends[0] == w && ends[1] == v)))
            return Verdict::fail("edge " + std::to_string(e) + " does not join " + std::to_string(v) + " and " +
                                 std::to_string(w));
    }
    return Verdict::pass();
}

inline Verdict verify_hamiltonian_path(const Multigraph& g, const HamiltonianPath& p, Vertex u, Vertex v)
{
    const int n = g.num_vertices();
    if (static_cast<int>(p.vertices.size()) != n || static_cast<int>(p.edges.size()) != n - 1)
        return Verdict::fail("path does not have n vertices and n - 1 edges");
    if (p.vertices.front() != u || p.vertices.back() != v)
        return Verdict::fail("path has the wrong endpoints");
    std::vector<char> seen(n, 0);
    for (Vertex x : p.vertices) {
        if (x < 0 || x >= n || seen[x])
            return Verdict::fail("vertex " + std::to_string(x) + " missing or repeated");
        seen[x] = 1;
    }
    for (int i = 0; i + 1 < n; ++i) {
        const auto& ends = g.ends(p.edges[i]);
        const Vertex a = p.vertices[i], b = p.vertices[i + 1];
        if (!((ends[0] == a && ends[1] == b) || (ends[0] == b && ends[1] == a)))
            return Verdict::fail("edge " + std::to_string(p.edges[i]) + " is not between consecutive vertices");
    }
    return Verdict::pass();
}

namespace detail {

// Depth-first hamiltonian search shared by the cycle and path front ends.
// For cycles, `target` is -1 and the walk closes back at `start`; for paths it must end at `target`.
class HamSearch {
public:
    HamSearch(const Multigraph& g, const EdgeConstraints& c, Vertex start, Vertex target)
        : g_(g), n_(g.num_vertices()), start_(start), target_(target), forced_(g.num_edges(), 0),
          forbidden_(g.num_edges(), 0), visited_(n_, 0), forced_count_(n_, 0)
    {
        for (EdgeId e : c.forbidden) {
            check_edge(e);
            forbidden_[e] = 1;
        }
        for (EdgeId e : c.forced) {
            check_edge(e);
            if (forbidden_[e])
                throw InputError("edge " + std::to_string(e) + " is both forced and forbidden");
            if (!forced_[e]) {
                forced_[e] = 1;
                ++forced_count_[g.ends(e)[0]];
                ++forced_count_[g.ends(e)[1]];
            }
        }
    }

    template <class Visit>
    void run(EdgeId first_edge, Visit&& visit)
    {
        for (Vertex v = 0; v < n_; ++v)
            if (forced_count_[v] > (target_ >= 0 && (v == start_ || v == target_) ? 1 : 2))
                return;
        visit_ = [&](const std::vector<Vertex>& vs, const std::vector<EdgeId>& es) { return visit(vs, es); };
        first_edge_ = first_edge;
        visited_[start_] = 1;
        path_v_.push_back(start_);
        dfs(start_, -1);
    }

private:
    void check_edge(EdgeId e) const
    {
        if (e < 0 || e >= g_.num_edges())
            throw InputError("unknown edge " + std::to_string(e));
    }

    bool cycle_mode() const { return target_ < 0; }

    // Unvisited vertices plus the two ends must stay connected through usable edges.
    bool feasible(Vertex cur) const
    {
        const int remaining = n_ - static_cast<int>(path_v_.size());
        if (remaining == 0)
            return true;
        auto usable = [&](Vertex x) { return !visited_[x] || x == cur || x == end_vertex(); };
        std::vector<char> seen(n_, 0);
        std::vector<Vertex> stack{cur};
        seen[cur] = 1;
        int reached = 0;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (EdgeId e : g_.incident(x)) {
                if (forbidden_[e])
                    continue;
                const Vertex y = g_.other(e, x);
                if (seen[y] || !usable(y))
                    continue;
                if (visited_[x] && visited_[y])
                    continue;
                seen[y] = 1;
                if (!visited_[y])
                    ++reached;
                stack.push_back(y);
            }
        }
        if (reached != remaining)
            return false;
        // Degree check: each unvisited vertex needs two distinct usable neighbours (one if it is the target).
        for (Vertex x = 0; x < n_; ++x) {
            if (visited_[x])
                continue;
            std::set<Vertex> nb;
            for (EdgeId e : g_.incident(x)) {
                if (forbidden_[e])
                    continue;
                const Vertex y = g_.other(e, x);
                if (usable(y))
                    nb.insert(y);
            }
            const int need = x == target_ ? 1 : (n_ == 2 ? 1 : 2);
            if (static_cast<int>(nb.size()) < need)
                return false;
        }
        return true;
    }

    Vertex end_vertex() const { return cycle_mode() ? start_ : target_; }

    bool dfs(Vertex cur, EdgeId arrived)
    {
        const bool all = static_cast<int>(path_v_.size()) == n_;
        if (all) {
            if (!cycle_mode())
                return cur == target_ ? visit_(path_v_, path_e_) : true;
            // Close the cycle.
            for (EdgeId e : g_.incident(cur)) {
                if (forbidden_[e] || e == arrived || g_.other(e, cur) != start_ || used(e))
                    continue;
                if (forced_unused_at(cur, arrived, e))
                    continue;
                if (forced_unused_at(start_, -1, e))
                    continue;
                if (path_e_.empty() || (first_edge_ < 0 && path_e_.front() > e))
                    continue;
                path_e_.push_back(e);
                const bool go = visit_(path_v_, path_e_);
                path_e_.pop_back();
                if (!go)
                    return false;
            }
            return true;
        }
        if (!cycle_mode() && cur == target_)
            return true;

        EdgeId must = -1;
        if (path_e_.empty() && first_edge_ >= 0) {
            must = first_edge_;
        } else {
            for (EdgeId e : g_.incident(cur))
                if (forced_[e] && e != arrived && !used(e)) {
                    must = e;
                    break;
                }
        }
        for (EdgeId e : g_.incident(cur)) {
            if (forbidden_[e] || e == arrived || (must >= 0 && e != must))
                continue;
            const Vertex w = g_.other(e, cur);
            if (visited_[w])
                continue;
            if (!cycle_mode() && w == target_ && static_cast<int>(path_v_.size()) + 1 != n_)
                continue;
            if (forced_count_[w] > 0 && !forced_[e] && forced_count_[w] > (w == target_ ? 0 : 1))
                continue;
            visited_[w] = 1;
            path_v_.push_back(w);
            path_e_.push_back(e);
            used_.insert(e);
            bool go = true;
            if (feasible(w))
                go = dfs(w, e);
            used_.erase(e);
            path_e_.pop_back();
            path_v_.pop_back();
            visited_[w] = 0;
            if (!go)
                return false;
        }
        return true;
    }

    bool used(EdgeId e) const { return used_.count(e) > 0; }

    // True when v has a forced edge other than `skip_a` and `skip_b` that the walk has not used.
    bool forced_unused_at(Vertex v, EdgeId skip_a, EdgeId skip_b = -1) const
    {
        for (EdgeId e : g_.incident(v))
            if (forced_[e] && e != skip_a && e != skip_b && !used(e))
                return true;
        return false;
    }

    const Multigraph& g_;
    int n_;
    Vertex start_, target_;
    std::vector<char> forced_, forbidden_, visited_;
    std::vector<int> forced_count_;
    std::vector<Vertex> path_v_;
    std::vector<EdgeId> path_e_;
    std::set<EdgeId> used_;
    EdgeId first_edge_ = -1;
    std::function<bool(const std::vector<Vertex>&, const std::vector<EdgeId>&)> visit_;
};

} // namespace detail

/// Calls visit(cycle) for every hamiltonian cycle honouring the constraints, each undirected
/// cycle once. Stops early when visit returns false. Returns the number of cycles visited.
template <class Visit>
long for_each_hamiltonian_cycle(const Multigraph& g, const EdgeConstraints& c, Visit&& visit)
{
    if (g.num_vertices() < 2)
        return 0;
    Vertex start = 0;
    EdgeId first = -1;
    if (!c.forced.empty()) {
        first = *std::min_element(c.forced.begin(), c.forced.end());
        if (first < 0 || first >= g.num_edges())
            throw InputError("unknown edge " + std::to_string(first));
        start = g.ends(first)[0];
    }
    long count = 0;
    detail::HamSearch search(g, c, start, -1);
    search.run(first, [&](const std::vector<Vertex>& vs, const std::vector<EdgeId>& es) {
        ++count;
        return static_cast<bool>(visit(HamiltonianCycle{vs, es}));
    });
    return count;
}

inline std::optional<HamiltonianCycle> find_hamiltonian_cycle(const Multigraph& g, const EdgeConstraints& c = {})
{
    std::optional<HamiltonianCycle> out;
    for_each_hamiltonian_cycle(g, c, [&](const HamiltonianCycle& h) {
        out = h;
        return false;
    });
    return out;
}

inline long count_hamiltonian_cycles(const Multigraph& g, const EdgeConstraints& c = {})
{
    return for_each_hamiltonian_cycle(g, c, [](const HamiltonianCycle&) { return true; });
}

/// Every hamiltonian path from u to v, in the direction u -> v.
template <class Visit>
long for_each_hamiltonian_path(const Multigraph& g, Vertex u, Vertex v, Visit&& visit)
{
    const int n = g.num_vertices();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw InputError("path endpoint out of range");
    if (u == v)
        throw InputError("hamiltonian path endpoints must differ");
    long count = 0;
    detail::HamSearch search(g, {}, u, v);
    search.run(-1, [&](const std::vector<Vertex>& vs, const std::vector<EdgeId>& es) {
        ++count;
        return static_cast<bool>(visit(HamiltonianPath{vs, es}));
    });
    return count;
}

inline std::optional<HamiltonianPath> find_hamiltonian_path(const Multigraph& g, Vertex u, Vertex v)
{
    std::optional<HamiltonianPath> out;
    for_each_hamiltonian_path(g, u, v, [&](const HamiltonianPath& p) {
        out = p;
        return false;
    });
    return out;
}

/// inside[f] for every face f of g, relative to the simple cycle with the given edges.
/// The region holding the outer face is the outside.
inline std::vector<char> cycle_sides(const PlaneGraph& g, const std::vector<EdgeId>& cycle_edges)
{
    std::vector<char> on_cycle(g.num_edges(), 0);
    for (EdgeId e : cycle_edges) {
        if (e < 0 || e >= g.num_edges())
            throw InputError("unknown edge " + std::to_string(e));
        on_cycle[e] = 1;
    }
    std::vector<char> outside(g.num_faces(), 0);
    std::vector<FaceId> stack{g.outer_face()};
    outside[g.outer_face()] = 1;
    while (!stack.empty()) {
        const FaceId f = stack.back();
        stack.pop_back();
        for (DartId d : g.face(f).boundary) {
            if (on_cycle[PlaneGraph::edge_of(d)])
                continue;
            const FaceId o = g.face_of(PlaneGraph::twin(d));
            if (!outside[o]) {
                outside[o] = 1;
                stack.push_back(o);
            }
        }
    }
    std::vector<char> inside(g.num_faces());
    for (FaceId f = 0; f < g.num_faces(); ++f)
        inside[f] = !outside[f];
    return inside;
}

/// Edges with exactly one inside face: the boundary of a face region.
inline std::vector<EdgeId> region_boundary(const PlaneGraph& g, const std::vector<char>& inside)
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (inside[g.face_of(2 * e)] != inside[g.face_of(2 * e + 1)])
            out.push_back(e);
    return out;
}

/// Orders an edge set forming one cycle through all vertices into a HamiltonianCycle,
/// starting at vertex 0 and leaving along the smaller of its two cycle edges.
inline std::optional<HamiltonianCycle> cycle_from_edges(const Multigraph& g, const std::vector<EdgeId>& edges)
{
    const int n = g.num_vertices();
    if (static_cast<int>(edges.size()) != n || n < 2)
        return std::nullopt;
    std::vector<std::vector<EdgeId>> at(n);
    for (EdgeId e : edges) {
        at[g.ends(e)[0]].push_back(e);
        at[g.ends(e)[1]].push_back(e);
    }
    for (Vertex v = 0; v < n; ++v)
        if (at[v].size() != 2)
            return std::nullopt;
    HamiltonianCycle c;
    Vertex v = 0;
    EdgeId e = std::min(at[0][0], at[0][1]);
    for (int i = 0; i < n; ++i) {
        c.vertices.push_back(v);
        c.edges.push_back(e);
        v = g.other(e, v);
        e = at[v][0] == e ? at[v][1] : at[v][0];
    }
    if (v != 0 || !verify_hamiltonian_cycle(g, c))
        return std::nullopt;
    return c;
}

} // namespace facetree
