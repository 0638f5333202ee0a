#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "facetree/atrail.hpp"
#include "facetree/colorings.hpp"
#include "facetree/constructions.hpp"
#include "facetree/error.hpp"
#include "facetree/face_tree.hpp"
#include "facetree/hamiltonian.hpp"
#include "facetree/plane_graph.hpp"

namespace facetree {

/// The weak dual of the region `inside` (inside faces, adjacent across shared edges) is a tree.
inline bool weak_dual_is_tree(const PlaneGraph& g, const std::vector<char>& inside)
{
    const int nodes = static_cast<int>(std::count(inside.begin(), inside.end(), 1));
    if (nodes == 0)
        return false;
    detail::UnionFind uf(g.num_faces());
    int links = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const FaceId a = g.face_of(2 * e), b = g.face_of(2 * e + 1);
        if (inside[a] && inside[b]) {
            ++links;
            if (!uf.unite(a, b))
                return false;
        }
    }
    return links == nodes - 1;
}

/// The hamiltonian cycle bounding the face region `inside`, if its boundary is one.
inline std::optional<HamiltonianCycle> region_cycle(const PlaneGraph& g, const std::vector<char>& inside)
{
    return cycle_from_edges(g.skeleton(), region_boundary(g, inside));
}

// ---------------------------------------------------------------------------------------------
// A-trails and trees of faces

/// T = all 2-faces, U = V minus the quasi class V1 of the induced partition.
inline FaceTree atrail_to_face_tree(const PlaneGraph& h, const ATrail& l, const FaceColoring& c)
{
    for (Vertex v = 0; v < h.num_vertices(); ++v)
        if (h.degree(v) < 4)
            throw PreconditionError("host needs minimum degree 4; vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(h.degree(v)));
    if (c.palette != 2 || static_cast<int>(c.color.size()) != h.num_faces() || c.color[h.outer_face()] != 1)
        throw InputError("expected the 2-face-colouring with the outer face coloured 1");
    if (auto v = verify_a_trail(h, l); !v)
        throw ConversionError("input is not an A-trail: " + v.diagnostic);
    const VertexPartition part = induced_partition(h, l, c);
    FaceTree ft{c.faces_of(2), {}};
    std::vector<char> quasi(h.num_vertices(), 0);
    for (Vertex v : part.v1)
        quasi[v] = 1;
    for (Vertex v = 0; v < h.num_vertices(); ++v)
        if (!quasi[v])
            ft.proper.push_back(v);
    if (auto v = verify_face_tree(h, ft); !v)
        throw ConversionError("trail does not induce a quasi spanning tree of faces: " + v.diagnostic);
    return ft;
}

/// The A-trail of H_T determined by a (quasi) spanning tree of faces. At a proper vertex the
/// trail turns through the corners outside T, at a quasi vertex through the corners of T.
/// The result starts with the even dart of the smallest edge of H_T.
inline ATrail face_tree_to_atrail(const PlaneGraph& h, const FaceTree& ft)
{
    if (auto v = verify_face_tree(h, ft); !v)
        throw PreconditionError("invalid tree of faces: " + v.diagnostic);
    const std::vector<EdgeId> edges = face_tree_edges(h, ft);
    if (edges.empty())
        return {};
    std::vector<char> mask(h.num_edges(), 0), in_t(h.num_faces(), 0), proper(h.num_vertices(), 0);
    for (EdgeId e : edges)
        mask[e] = 1;
    for (FaceId f : ft.faces)
        in_t[f] = 1;
    for (Vertex v : ft.proper)
        proper[v] = 1;
    const detail::SubRotation sub(h, mask);
    std::vector<int> state(h.num_vertices(), 0);
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        const auto& around = sub.around[v];
        const int k = static_cast<int>(around.size());
        if (k <= 2)
            continue;
        auto t_corner = [&](int p) {
            const DartId d = around[(p + 1) % k];
            return in_t[h.face_of(d)] && h.next_cw(d) == around[p];
        };
        int chosen = -1;
        for (int s = 0; s < 2 && chosen < 0; ++s) {
            bool ok = true;
            for (int p = s; p < k && ok; p += 2)
                ok = t_corner(p) != static_cast<bool>(proper[v]);
            if (ok)
                chosen = s;
        }
        if (chosen < 0)
            throw InternalError("tree of faces gives no consistent transition at vertex " + std::to_string(v));
        state[v] = chosen;
    }
    auto next_dart = [&](DartId d) {
        const DartId back = PlaneGraph::twin(d);
        const Vertex v = h.tail(back);
        const int k = static_cast<int>(sub.around[v].size());
        const int p = sub.sub_pos[back];
        const int q = ((p - state[v]) % 2 + 2) % 2 == 0 ? (p + 1) % k : (p + k - 1) % k;
        return sub.around[v][q];
    };
    ATrail l;
    const DartId start = 2 * edges.front();
    DartId d = start;
    do {
        l.darts.push_back(d);
        d = next_dart(d);
    } while (d != start && l.darts.size() <= edges.size());
    if (auto v = verify_a_trail(h, l, &edges); !v)
        throw InternalError("tree of faces did not produce an A-trail: " + v.diagnostic);
    return l;
}

// ---------------------------------------------------------------------------------------------
// Trees of faces in G/Q and hamiltonian cycles of G

/// Checks the side conditions linking a hamiltonian cycle of g to a tree of faces of H = g/Q:
/// the outer face of H comes from a face outside the cycle, and no two edge-sharing Q^c faces
/// are both inside.
inline Verdict pr1_cycle_conforms(const PlaneGraph& g, const Contraction& red, const std::vector<char>& inside)
{
    const FaceId outer = red.map.face_origin[red.graph.outer_face()];
    if (inside[outer])
        return Verdict::fail("external Q^c face " + std::to_string(outer) + " lies inside the cycle");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const FaceId a = g.face_of(2 * e), b = g.face_of(2 * e + 1);
        if (red.map.vertex_of_face[a] < 0 && red.map.vertex_of_face[b] < 0 && inside[a] && inside[b])
            return Verdict::fail("Q^c faces " + std::to_string(std::min(a, b)) + " and " +
                                 std::to_string(std::max(a, b)) + " share edge " + std::to_string(e) +
                                 " and both lie inside");
    }
    return Verdict::pass();
}

/// First pair of faces of T sharing an edge of h, if any. Only quasi vertices allow this.
inline std::optional<std::pair<FaceId, FaceId>> faces_sharing_edge(const PlaneGraph& h, const FaceTree& ft)
{
    std::vector<char> in_t(h.num_faces(), 0);
    for (FaceId f : ft.faces)
        in_t[f] = 1;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        const FaceId a = h.face_of(2 * e), b = h.face_of(2 * e + 1);
        if (a != b && in_t[a] && in_t[b])
            return std::pair{std::min(a, b), std::max(a, b)};
    }
    return std::nullopt;
}

/// A tree of faces of H = G/Q that maps to a conforming hamiltonian cycle: no two of its faces
/// share an edge. Such trees and conforming cycles correspond one to one.
inline std::optional<FaceTree> find_conforming_face_tree(const Contraction& red)
{
    std::optional<FaceTree> out;
    for_each_face_tree(red.graph, {}, [&](const FaceTree& ft) {
        if (faces_sharing_edge(red.graph, ft))
            return true;
        out = ft;
        return false;
    });
    return out;
}

inline HamiltonianCycle face_tree_to_ham_cycle(const PlaneGraph& g, const Contraction& red, const FaceTree& ft)
{
    if (auto v = verify_face_tree(red.graph, ft); !v)
        throw PreconditionError("invalid tree of faces: " + v.diagnostic);
    if (const auto p = faces_sharing_edge(red.graph, ft))
        throw PreconditionError("faces " + std::to_string(p->first) + " and " + std::to_string(p->second) +
                                " of the tree share an edge; their Q^c faces would both lie inside");
    std::vector<char> inside(g.num_faces(), 0);
    for (Vertex x : ft.proper)
        inside[red.map.vertex_origin[x]] = 1;
    for (FaceId f : ft.faces)
        inside[red.map.face_origin[f]] = 1;
    auto c = region_cycle(g, inside);
    if (!c)
        throw InternalError("tree of faces does not bound a hamiltonian cycle");
    if (cycle_sides(g, c->edges) != inside)
        throw InternalError("cycle sides disagree with the tree of faces");
    if (auto v = pr1_cycle_conforms(g, red, inside); !v)
        throw InternalError(v.diagnostic);
    return *c;
}

inline FaceTree ham_cycle_to_face_tree(const PlaneGraph& g, const Contraction& red, const HamiltonianCycle& c)
{
    if (auto v = verify_hamiltonian_cycle(g.skeleton(), c); !v)
        throw PreconditionError("not a hamiltonian cycle: " + v.diagnostic);
    const std::vector<char> inside = cycle_sides(g, c.edges);
    if (auto v = pr1_cycle_conforms(g, red, inside); !v)
        throw ConversionError(v.diagnostic);
    FaceTree ft;
    for (FaceId f = 0; f < red.graph.num_faces(); ++f)
        if (inside[red.map.face_origin[f]])
            ft.faces.push_back(f);
    for (Vertex x = 0; x < red.graph.num_vertices(); ++x)
        if (inside[red.map.vertex_origin[x]])
            ft.proper.push_back(x);
    if (auto v = verify_face_tree(red.graph, ft); !v)
        throw ConversionError("cycle does not give a quasi spanning tree of faces: " + v.diagnostic);
    return ft;
}

// ---------------------------------------------------------------------------------------------
// Four equivalent certificates on a 3-face-coloured bipartite cubic graph

struct Pr3Context {
    PlaneGraph g;
    FaceColoring coloring;
    Contraction h1; // 1-faces contracted: statement (ii)
    Contraction h2; // 2-faces contracted: statement (iii)
    Contraction h3; // 3-faces contracted: statement (iv)
};

struct Pr3Certificates {
    HamiltonianCycle cycle;
    ATrail trail;
    FaceTree tree_iii;
    FaceTree tree_iv;
};

inline Pr3Context make_pr3_context(const PlaneGraph& g, const FaceColoring& c)
{
    if (!g.skeleton().is_regular(3) || !is_bipartite(g.skeleton()))
        throw PreconditionError("expected a bipartite cubic plane graph");
    if (auto v = verify_face_coloring(g, c); !v || c.palette != 3)
        throw PreconditionError("expected a proper 3-face-colouring: " + v.diagnostic);
    if (c.color[g.outer_face()] != 3)
        throw PreconditionError("the outer face must be a 3-face");
    const auto twos = c.faces_of(2);
    if (twos.empty())
        throw PreconditionError("colouring without 2-faces");
    return {g, c, contract_factor(g, {c.faces_of(1)}), contract_factor(g, {c.faces_of(2)}),
            contract_factor(g, {c.faces_of(3)}, twos.front())};
}

/// Checks statement (i): hamiltonian with every 2-face inside and every 3-face outside.
inline Verdict check_pr3_cycle(const Pr3Context& ctx, const HamiltonianCycle& c)
{
    if (auto v = verify_hamiltonian_cycle(ctx.g.skeleton(), c); !v)
        return v;
    const auto inside = cycle_sides(ctx.g, c.edges);
    for (FaceId f = 0; f < ctx.g.num_faces(); ++f) {
        if (ctx.coloring.color[f] == 2 && !inside[f])
            return Verdict::fail("2-face " + std::to_string(f) + " lies outside");
        if (ctx.coloring.color[f] == 3 && inside[f])
            return Verdict::fail("3-face " + std::to_string(f) + " lies inside");
    }
    return Verdict::pass();
}

namespace detail {

// The trail induced in H1 by a cycle: its edges between 2- and 3-faces, in cycle order.
inline ATrail pr3_trail_of_cycle(const Pr3Context& ctx, const HamiltonianCycle& c)
{
    ATrail l;
    const int n = static_cast<int>(c.vertices.size());
    for (int i = 0; i < n; ++i) {
        const EdgeId e = c.edges[i];
        const EdgeId he = ctx.h1.map.edge_of_edge[e];
        if (he < 0)
            continue;
        const int side = ctx.g.skeleton().ends(e)[0] == c.vertices[i] ? 0 : 1;
        l.darts.push_back(2 * he + side);
    }
    return canonical_trail(l);
}

inline FaceTree pr3_tree_of_region(const Contraction& red, const std::vector<char>& region)
{
    FaceTree ft;
    for (FaceId f = 0; f < red.graph.num_faces(); ++f)
        if (region[red.map.face_origin[f]])
            ft.faces.push_back(f);
    for (Vertex x = 0; x < red.graph.num_vertices(); ++x)
        ft.proper.push_back(x);
    return ft;
}

} // namespace detail

/// Validates all four certificates independently.
inline Verdict check_pr3(const Pr3Context& ctx, const Pr3Certificates& cert)
{
    if (auto v = check_pr3_cycle(ctx, cert.cycle); !v)
        return Verdict::fail("(i) " + v.diagnostic);
    if (auto v = verify_a_trail(ctx.h1.graph, cert.trail); !v)
        return Verdict::fail("(ii) " + v.diagnostic);
    for (const auto* part : {&cert.tree_iii, &cert.tree_iv}) {
        const Contraction& red = part == &cert.tree_iii ? ctx.h2 : ctx.h3;
        const char* tag = part == &cert.tree_iii ? "(iii) " : "(iv) ";
        if (auto v = verify_face_tree(red.graph, *part); !v)
            return Verdict::fail(tag + v.diagnostic);
        if (!is_spanning(red.graph, *part))
            return Verdict::fail(std::string(tag) + "tree is not spanning");
        for (FaceId f : part->faces)
            if (ctx.coloring.color[red.map.face_origin[f]] != 1)
                return Verdict::fail(std::string(tag) + "tree uses a face that is not a 1-face");
    }
    return Verdict::pass();
}

inline Pr3Certificates pr3_from_cycle(const Pr3Context& ctx, const HamiltonianCycle& c)
{
    if (auto v = check_pr3_cycle(ctx, c); !v)
        throw PreconditionError("source cycle: " + v.diagnostic);
    const auto inside = cycle_sides(ctx.g, c.edges);
    if (!weak_dual_is_tree(ctx.g, inside))
        throw InternalError("weak dual of the inside of a hamiltonian cycle is not a tree");
    std::vector<char> outside(inside.size());
    for (std::size_t f = 0; f < inside.size(); ++f)
        outside[f] = !inside[f];
    Pr3Certificates cert{*cycle_from_edges(ctx.g.skeleton(), c.edges), detail::pr3_trail_of_cycle(ctx, c),
                         detail::pr3_tree_of_region(ctx.h2, inside), detail::pr3_tree_of_region(ctx.h3, outside)};
    if (auto v = check_pr3(ctx, cert); !v)
        throw InternalError("converted certificates fail validation: " + v.diagnostic);
    return cert;
}

inline Pr3Certificates pr3_from_atrail(const Pr3Context& ctx, const ATrail& l)
{
    if (auto v = verify_a_trail(ctx.h1.graph, l); !v)
        throw PreconditionError("source A-trail: " + v.diagnostic);
    const PlaneGraph& g = ctx.g;
    std::vector<EdgeId> edges;
    const int m = static_cast<int>(l.darts.size());
    for (int i = 0; i < m; ++i) {
        const DartId in = ctx.h1.map.dart_origin(l.darts[i]);
        const DartId out = ctx.h1.map.dart_origin(l.darts[(i + 1) % m]);
        edges.push_back(PlaneGraph::edge_of(in));
        const Vertex a = g.head(in), b = g.tail(out);
        const FaceId f = ctx.h1.map.vertex_origin[ctx.h1.graph.head(l.darts[i])];
        EdgeId link = -1;
        for (DartId d : g.face(f).boundary)
            if ((g.tail(d) == a && g.head(d) == b) || (g.tail(d) == b && g.head(d) == a))
                link = PlaneGraph::edge_of(d);
        if (link < 0)
            throw InternalError("A-trail transition does not follow a 1-face edge");
        edges.push_back(link);
    }
    const auto c = cycle_from_edges(g.skeleton(), edges);
    if (!c)
        throw InternalError("A-trail does not lift to a hamiltonian cycle");
    return pr3_from_cycle(ctx, *c);
}

inline Pr3Certificates pr3_from_tree_iii(const Pr3Context& ctx, const FaceTree& ft)
{
    if (auto v = verify_face_tree(ctx.h2.graph, ft); !v || !is_spanning(ctx.h2.graph, ft))
        throw PreconditionError("source tree (iii) is not a spanning tree of faces");
    std::vector<char> inside(ctx.g.num_faces(), 0);
    for (FaceId f = 0; f < ctx.g.num_faces(); ++f)
        inside[f] = ctx.coloring.color[f] == 2;
    for (FaceId f : ft.faces)
        inside[ctx.h2.map.face_origin[f]] = 1;
    const auto c = region_cycle(ctx.g, inside);
    if (!c)
        throw PreconditionError("source tree (iii) does not bound a hamiltonian cycle");
    return pr3_from_cycle(ctx, *c);
}

inline Pr3Certificates pr3_from_tree_iv(const Pr3Context& ctx, const FaceTree& ft)
{
    if (auto v = verify_face_tree(ctx.h3.graph, ft); !v || !is_spanning(ctx.h3.graph, ft))
        throw PreconditionError("source tree (iv) is not a spanning tree of faces");
    std::vector<char> inside(ctx.g.num_faces(), 0);
    for (FaceId f = 0; f < ctx.g.num_faces(); ++f)
        inside[f] = ctx.coloring.color[f] != 3;
    for (FaceId f : ft.faces)
        inside[ctx.h3.map.face_origin[f]] = 0;
    const auto c = region_cycle(ctx.g, inside);
    if (!c)
        throw PreconditionError("source tree (iv) does not bound a hamiltonian cycle");
    return pr3_from_cycle(ctx, *c);
}

/// Existence of statement (i), by enumerating hamiltonian cycles through every 2-3 edge.
inline std::optional<HamiltonianCycle> pr3_find_cycle(const Pr3Context& ctx)
{
    EdgeConstraints cons;
    for (EdgeId e = 0; e < ctx.g.num_edges(); ++e) {
        const int a = ctx.coloring.color[ctx.g.face_of(2 * e)], b = ctx.coloring.color[ctx.g.face_of(2 * e + 1)];
        if (a + b == 5)
            cons.forced.push_back(e);
    }
    std::optional<HamiltonianCycle> out;
    for_each_hamiltonian_cycle(ctx.g.skeleton(), cons, [&](const HamiltonianCycle& c) {
        if (check_pr3_cycle(ctx, c)) {
            out = c;
            return false;
        }
        return true;
    });
    return out;
}

inline FaceTreeConstraints pr3_tree_constraints(const Pr3Context& ctx, const Contraction& red)
{
    FaceTreeConstraints fc;
    fc.require_spanning = true;
    for (FaceId f = 0; f < red.graph.num_faces(); ++f)
        if (ctx.coloring.color[red.map.face_origin[f]] != 1)
            fc.must_exclude.push_back(f);
    return fc;
}

// ---------------------------------------------------------------------------------------------
// Leapfrog lift and projection

struct LeapfrogContext {
    PlaneGraph g;
    Leapfrog lf;
    std::vector<int> side; // bipartition class of each vertex of g

    /// Hexagon face of old vertex v.
    FaceId hexagon(Vertex v) const { return lf.face_of_old_vertex[v]; }
};

inline LeapfrogContext make_leapfrog_context(const PlaneGraph& g)
{
    if (!g.skeleton().is_regular(3))
        throw PreconditionError("leapfrog lift needs a cubic graph");
    const auto side = bipartition(g.skeleton());
    if (!side)
        throw PreconditionError("leapfrog lift needs a bipartite graph");
    return {g, leapfrog(g), *side};
}

namespace detail {

inline EdgeId edge_between(const PlaneGraph& g, Vertex a, Vertex b)
{
    for (DartId d : g.rotation(a))
        if (g.head(d) == b)
            return PlaneGraph::edge_of(d);
    return -1;
}

} // namespace detail

/// Checks the conforming form in Lf(g): hamiltonian, with the inside hexagons exactly one
/// colour class of g and the outer face outside.
inline Verdict check_leapfrog_cycle(const LeapfrogContext& ctx, const HamiltonianCycle& c)
{
    const PlaneGraph& lf = ctx.lf.graph;
    if (auto v = verify_hamiltonian_cycle(lf.skeleton(), c); !v)
        return v;
    const auto inside = cycle_sides(lf, c.edges);
    const int n = ctx.g.num_vertices();
    const int cls = inside[ctx.hexagon(0)] ? ctx.side[0] : 1 - ctx.side[0];
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<bool>(inside[ctx.hexagon(v)]) != (ctx.side[v] == cls))
            return Verdict::fail("hexagon of vertex " + std::to_string(v) + " is on the wrong side");
    return Verdict::pass();
}

/// Lifts a hamiltonian cycle of g to Lf(g) by stitching hexagon arcs that alternate between
/// the inside and the outside of c0.
inline HamiltonianCycle leapfrog_lift(const LeapfrogContext& ctx, const HamiltonianCycle& c0)
{
    const PlaneGraph& g = ctx.g;
    const PlaneGraph& lf = ctx.lf.graph;
    if (auto v = verify_hamiltonian_cycle(g.skeleton(), c0); !v)
        throw PreconditionError("not a hamiltonian cycle of g: " + v.diagnostic);
    const auto inside = cycle_sides(g, c0.edges);
    const int n = static_cast<int>(c0.vertices.size());
    // Endpoint of the hex-hex edge of old edge e lying in the region `in`.
    auto endpoint = [&](EdgeId e, bool in) {
        const DartId d = static_cast<bool>(inside[g.face_of(2 * e)]) == in ? 2 * e : 2 * e + 1;
        return ctx.lf.vertex_of_dart[d];
    };
    std::vector<EdgeId> edges;
    for (int i = 0; i < n; ++i) {
        const EdgeId e_in = c0.edges[i], e_out = c0.edges[(i + 1) % n];
        const Vertex v = c0.vertices[(i + 1) % n];
        const bool in = i % 2 == 0;
        edges.push_back(ctx.lf.edge_of_old_edge(e_in));
        // Arc around the hexagon of v between the two endpoints, avoiding the two hex-hex edges.
        const Vertex from = endpoint(e_in, in), to = endpoint(e_out, in);
        const auto& hex = lf.face(ctx.hexagon(v)).boundary;
        const int k = static_cast<int>(hex.size());
        int start = -1;
        for (int j = 0; j < k; ++j)
            if (lf.tail(hex[j]) == from)
                start = j;
        std::array<std::vector<EdgeId>, 2> arcs;
        for (int dir = 0; dir < 2; ++dir) {
            bool bad = false;
            for (int s = 0; s < k; ++s) {
                const DartId d = dir == 0 ? hex[(start + s) % k] : PlaneGraph::twin(hex[(start - 1 - s + 2 * k) % k]);
                const EdgeId e = PlaneGraph::edge_of(d);
                if (e == ctx.lf.edge_of_old_edge(e_in) || e == ctx.lf.edge_of_old_edge(e_out))
                    bad = true;
                arcs[dir].push_back(e);
                if (lf.head(d) == to)
                    break;
            }
            if (bad)
                arcs[dir].clear();
        }
        const auto& arc = arcs[0].empty() ? arcs[1] : arcs[0];
        if (arc.empty() || (!arcs[0].empty() && !arcs[1].empty()))
            throw InternalError("hexagon arc at vertex " + std::to_string(v) + " is not determined");
        edges.insert(edges.end(), arc.begin(), arc.end());
    }
    const auto c = cycle_from_edges(lf.skeleton(), edges);
    if (!c)
        throw InternalError("stitched arcs do not form a hamiltonian cycle of Lf(g)");
    if (auto v = check_leapfrog_cycle(ctx, *c); !v)
        throw InternalError("lifted cycle has the wrong side map: " + v.diagnostic);
    return *c;
}

/// Inverse of the lift: the old edges separating old faces inside c from old faces outside.
inline HamiltonianCycle leapfrog_project(const LeapfrogContext& ctx, const HamiltonianCycle& c)
{
    if (auto v = check_leapfrog_cycle(ctx, c); !v)
        throw ConversionError("cycle of Lf(g) is not of the conforming form: " + v.diagnostic);
    const auto inside = cycle_sides(ctx.lf.graph, c.edges);
    std::vector<char> old_inside(ctx.g.num_faces());
    for (FaceId f = 0; f < ctx.g.num_faces(); ++f)
        old_inside[f] = inside[ctx.lf.face_of_old_face[f]];
    const auto c0 = region_cycle(ctx.g, old_inside);
    if (!c0)
        throw ConversionError("old faces inside the cycle do not bound a hamiltonian cycle of g");
    return *c0;
}

/// Lf(g)/Q_F with its outer face at the hexagon `outer_hexagon`.
inline Contraction leapfrog_reduction(const LeapfrogContext& ctx, FaceId outer_hexagon)
{
    return contract_factor(ctx.lf.graph, {ctx.lf.face_of_old_face}, outer_hexagon);
}

/// The two quasi spanning trees of faces of Lf(g)/Q_F read off a conforming cycle: one holding
/// the inside hexagons (proper vertices: old faces inside), one holding the outside hexagons
/// (proper vertices: old faces outside). Each comes with the reduction it lives in.
struct HerbertTrees {
    Contraction inner_reduction;
    FaceTree inner;
    Contraction outer_reduction;
    FaceTree outer;
};

inline HerbertTrees herbert_trees(const LeapfrogContext& ctx, const HamiltonianCycle& c)
{
    if (auto v = check_leapfrog_cycle(ctx, c); !v)
        throw ConversionError("cycle of Lf(g) is not of the conforming form: " + v.diagnostic);
    const auto inside = cycle_sides(ctx.lf.graph, c.edges);
    FaceId in_hex = -1, out_hex = -1;
    for (Vertex v = 0; v < ctx.g.num_vertices(); ++v)
        (inside[ctx.hexagon(v)] ? in_hex : out_hex) = ctx.hexagon(v);
    HerbertTrees t{leapfrog_reduction(ctx, out_hex), {}, {}, {}};
    t.inner = ham_cycle_to_face_tree(ctx.lf.graph, t.inner_reduction, c);
    // Viewed from inside an inside hexagon the two sides of c swap.
    const PlaneGraph flipped = ctx.lf.graph.with_outer_face(in_hex);
    t.outer_reduction = contract_factor(flipped, {ctx.lf.face_of_old_face}, in_hex);
    t.outer = ham_cycle_to_face_tree(flipped, t.outer_reduction, c);
    return t;
}

} // namespace facetree
