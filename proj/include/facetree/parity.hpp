#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "facetree/error.hpp"
#include "facetree/face_tree.hpp"
#include "facetree/multigraph.hpp"
#include "facetree/plane_graph.hpp"

namespace facetree {

/// Spanning tree parity: find a spanning tree holding both or neither edge of every pair.
struct ParityInstance {
    Multigraph graph;
    std::vector<std::pair<EdgeId, EdgeId>> pairs;
};

inline Verdict validate_parity_instance(const ParityInstance& p)
{
    std::vector<char> seen(p.graph.num_edges(), 0);
    for (const auto& [a, b] : p.pairs) {
        for (EdgeId e : {a, b}) {
            if (e < 0 || e >= p.graph.num_edges())
                return Verdict::fail("pair names unknown edge " + std::to_string(e));
            if (seen[e])
                return Verdict::fail("edge " + std::to_string(e) + " appears in two pairs");
            seen[e] = 1;
        }
        if (a == b)
            return Verdict::fail("pair repeats edge " + std::to_string(a));
    }
    return Verdict::pass();
}

/// True when `tree` is a spanning tree of p.graph meeting every pair in 0 or 2 edges.
inline bool is_parity_tree(const ParityInstance& p, const std::vector<EdgeId>& tree)
{
    const int n = p.graph.num_vertices();
    if (static_cast<int>(tree.size()) != n - 1)
        return false;
    std::vector<char> in(p.graph.num_edges(), 0);
    detail::UnionFind uf(n);
    for (EdgeId e : tree) {
        if (e < 0 || e >= p.graph.num_edges() || in[e])
            return false;
        in[e] = 1;
        if (!uf.unite(p.graph.ends(e)[0], p.graph.ends(e)[1]))
            return false;
    }
    for (const auto& [a, b] : p.pairs)
        if (in[a] != in[b])
            return false;
    return true;
}

/// Exact solver: branches each pair in or out, keeps the chosen pairs acyclic and the remaining
/// graph connected, then completes with unpaired edges in id order. Returns sorted edge ids.
inline std::optional<std::vector<EdgeId>> solve_spanning_tree_parity(const ParityInstance& p)
{
    if (auto v = validate_parity_instance(p); !v)
        throw InputError(v.diagnostic);
    const Multigraph& g = p.graph;
    const int n = g.num_vertices();
    if (n == 0)
        return std::nullopt;
    std::vector<char> paired(g.num_edges(), 0);
    for (const auto& [a, b] : p.pairs)
        paired[a] = paired[b] = 1;
    const int k = static_cast<int>(p.pairs.size());
    std::vector<int> decision(k, -1); // 1 in, 0 out, -1 open

    auto connected_with_open = [&]() {
        detail::UnionFind uf(n);
        int comps = n;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            bool usable = !paired[e];
            if (paired[e])
                for (int i = 0; i < k && !usable; ++i)
                    if ((p.pairs[i].first == e || p.pairs[i].second == e) && decision[i] != 0)
                        usable = true;
            if (usable && uf.unite(g.ends(e)[0], g.ends(e)[1]))
                --comps;
        }
        return comps == 1;
    };

    std::optional<std::vector<EdgeId>> result;
    auto dfs = [&](auto&& self, int i, detail::UnionFind uf) -> bool {
        if (!connected_with_open())
            return false;
        if (i == k) {
            std::vector<EdgeId> tree;
            for (int j = 0; j < k; ++j)
                if (decision[j] == 1) {
                    tree.push_back(p.pairs[j].first);
                    tree.push_back(p.pairs[j].second);
                }
            for (EdgeId e = 0; e < g.num_edges(); ++e)
                if (!paired[e] && uf.unite(g.ends(e)[0], g.ends(e)[1]))
                    tree.push_back(e);
            if (static_cast<int>(tree.size()) != n - 1)
                return false;
            std::sort(tree.begin(), tree.end());
            result = tree;
            return true;
        }
        const auto [a, b] = p.pairs[i];
        detail::UnionFind with = uf;
        if (with.unite(g.ends(a)[0], g.ends(a)[1]) && with.unite(g.ends(b)[0], g.ends(b)[1])) {
            decision[i] = 1;
            if (self(self, i + 1, with))
                return true;
        }
        decision[i] = 0;
        if (self(self, i + 1, uf))
            return true;
        decision[i] = -1;
        return false;
    };
    dfs(dfs, 0, detail::UnionFind(n));
    return result;
}

/// Spanning tree of faces drawn from the digons and triangles d, found through the parity
/// reduction: a digon on x, y becomes edge xy; a triangle xyz becomes the pair {xy, yz}.
inline std::optional<FaceTree> face_tree_via_parity(const PlaneGraph& h, const std::vector<FaceId>& d,
                                                    ParityInstance* instance_out = nullptr)
{
    ParityInstance inst{Multigraph(h.num_vertices()), {}};
    std::vector<FaceId> face_of_edge;
    std::vector<char> seen(h.num_faces(), 0);
    for (FaceId f : d) {
        if (f < 0 || f >= h.num_faces())
            throw InputError("unknown face " + std::to_string(f));
        if (f == h.outer_face())
            throw InputError("face " + std::to_string(f) + " is the outer face");
        if (seen[f])
            throw InputError("face " + std::to_string(f) + " listed twice");
        seen[f] = 1;
        const int len = h.face(f).length();
        if (len > 3)
            throw PreconditionError("face " + std::to_string(f) + " has " + std::to_string(len) +
                                    " sides; only digons and triangles reduce to spanning tree parity");
        if (!h.face_is_simple_cycle(f))
            throw PreconditionError("face " + std::to_string(f) + " is not bounded by a cycle");
        const auto vs = h.face_vertices(f);
        if (len == 2) {
            inst.graph.add_edge(vs[0], vs[1]);
            face_of_edge.push_back(f);
        } else {
            const EdgeId a = inst.graph.add_edge(vs[0], vs[1]);
            const EdgeId b = inst.graph.add_edge(vs[1], vs[2]);
            face_of_edge.push_back(f);
            face_of_edge.push_back(f);
            inst.pairs.push_back({a, b});
        }
    }
    if (instance_out)
        *instance_out = inst;
    if (h.num_vertices() == 1)
        return FaceTree{{}, {0}};
    const auto tree = solve_spanning_tree_parity(inst);
    if (!tree)
        return std::nullopt;
    std::set<FaceId> faces;
    for (EdgeId e : *tree)
        faces.insert(face_of_edge[e]);
    FaceTree ft{{faces.begin(), faces.end()}, {}};
    for (Vertex v = 0; v < h.num_vertices(); ++v)
        ft.proper.push_back(v);
    if (auto v = verify_face_tree(h, ft); !v)
        throw InternalError("parity tree maps to an invalid tree of faces: " + v.diagnostic);
    return ft;
}

} // namespace facetree
