#pragma once

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <vector>

#include "facetree/error.hpp"
#include "facetree/plane_graph.hpp"

namespace facetree {

/// Proper face colouring with colours 1..palette; color[f] is the colour of face f.
struct FaceColoring {
    std::vector<int> color;
    int palette = 0;

    std::vector<FaceId> faces_of(int c) const
    {
        std::vector<FaceId> out;
        for (FaceId f = 0; f < static_cast<FaceId>(color.size()); ++f)
            if (color[f] == c)
                out.push_back(f);
        return out;
    }
};

inline Verdict verify_face_coloring(const PlaneGraph& g, const FaceColoring& c)
{
    if (static_cast<int>(c.color.size()) != g.num_faces())
        return Verdict::fail("colouring has " + std::to_string(c.color.size()) + " entries for " +
                             std::to_string(g.num_faces()) + " faces");
    for (FaceId f = 0; f < g.num_faces(); ++f)
        if (c.color[f] < 1 || c.color[f] > c.palette)
            return Verdict::fail("face " + std::to_string(f) + " has colour outside 1.." + std::to_string(c.palette));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const FaceId a = g.face_of(2 * e), b = g.face_of(2 * e + 1);
        if (c.color[a] == c.color[b])
            return Verdict::fail("edge " + std::to_string(e) + " has colour " + std::to_string(c.color[a]) +
                                 " on both sides");
    }
    return Verdict::pass();
}

/// The 2-face-colouring of an Eulerian plane graph, outer face coloured 1.
inline FaceColoring face_2_coloring(const PlaneGraph& h)
{
    if (!h.skeleton().is_eulerian())
        throw PreconditionError("2-face-colouring needs an Eulerian graph");
    FaceColoring c{std::vector<int>(h.num_faces(), 0), 2};
    std::queue<FaceId> q;
    c.color[h.outer_face()] = 1;
    q.push(h.outer_face());
    while (!q.empty()) {
        const FaceId f = q.front();
        q.pop();
        for (DartId d : h.face(f).boundary) {
            const FaceId o = h.face_of(PlaneGraph::twin(d));
            if (o == f)
                throw InternalError("Eulerian graph with a bridge");
            if (!c.color[o]) {
                c.color[o] = 3 - c.color[f];
                q.push(o);
            } else if (c.color[o] == c.color[f]) {
                throw InternalError("Eulerian graph without a 2-face-colouring");
            }
        }
    }
    return c;
}

/// A proper 3-face-colouring of a bipartite cubic plane graph, found by DSATUR backtracking.
///
/// The outer face receives `outer_color`. The two remaining classes get the two remaining
/// colours in increasing order of their smallest face id, so the result is canonical.
inline FaceColoring face_3_coloring(const PlaneGraph& g, int outer_color = 3)
{
    if (outer_color < 1 || outer_color > 3)
        throw InputError("outer colour must be 1, 2 or 3");
    if (!g.skeleton().is_regular(3))
        throw PreconditionError("3-face-colouring needs a cubic graph");
    if (!is_bipartite(g.skeleton()))
        throw PreconditionError("3-face-colouring needs a bipartite graph");
    const int F = g.num_faces();
    std::vector<std::set<FaceId>> adj(F);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const FaceId a = g.face_of(2 * e), b = g.face_of(2 * e + 1);
        if (a == b)
            throw PreconditionError("face " + std::to_string(a) + " meets itself along edge " + std::to_string(e));
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<int> col(F, 0);
    auto saturation = [&](FaceId f) {
        std::array<bool, 4> seen{};
        for (FaceId o : adj[f])
            seen[col[o]] = true;
        return int(seen[1]) + int(seen[2]) + int(seen[3]);
    };
    auto solve = [&](auto&& self, int coloured) -> bool {
        if (coloured == F)
            return true;
        FaceId pick = -1;
        int best = -1;
        for (FaceId f = 0; f < F; ++f)
            if (!col[f]) {
                const int s = saturation(f);
                if (s > best) {
                    best = s;
                    pick = f;
                }
            }
        for (int c = 1; c <= 3; ++c) {
            bool clash = false;
            for (FaceId o : adj[pick])
                clash = clash || col[o] == c;
            if (clash)
                continue;
            col[pick] = c;
            if (self(self, coloured + 1))
                return true;
            col[pick] = 0;
        }
        return false;
    };
    col[g.outer_face()] = outer_color;
    if (!solve(solve, 1))
        throw InternalError("bipartite cubic plane graph without a 3-face-colouring");

    // Canonical relabelling.
    std::array<int, 4> first{F, F, F, F};
    for (FaceId f = F - 1; f >= 0; --f)
        first[col[f]] = f;
    std::vector<int> others;
    for (int c = 1; c <= 3; ++c)
        if (c != outer_color)
            others.push_back(c);
    std::array<int, 4> rename{0, 0, 0, 0};
    rename[outer_color] = outer_color;
    if (first[others[0]] <= first[others[1]]) {
        rename[others[0]] = others[0];
        rename[others[1]] = others[1];
    } else {
        rename[others[0]] = others[1];
        rename[others[1]] = others[0];
    }
    FaceColoring out{std::vector<int>(F), 3};
    for (FaceId f = 0; f < F; ++f)
        out.color[f] = rename[col[f]];
    return out;
}

} // namespace facetree
