#pragma once

#include <algorithm>
#include <array>
#include <map>
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

namespace detail {

// Rotation system as labelled counterclockwise neighbour lists, convenient for local surgery.
// Entry (w, label) at v is one end of the edge `label`; labels pair the two ends.
struct LabelledRotation {
    std::vector<std::vector<std::pair<Vertex, int>>> adj;
    std::vector<char> removed;
    int next_label = 0;

    static LabelledRotation of(const PlaneGraph& g)
    {
        LabelledRotation r;
        r.adj.resize(g.num_vertices());
        r.removed.assign(g.num_vertices(), 0);
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            for (DartId d : g.rotation(v))
                r.adj[v].push_back({g.head(d), PlaneGraph::edge_of(d)});
        r.next_label = g.num_edges();
        return r;
    }

    Vertex add_vertex()
    {
        adj.emplace_back();
        removed.push_back(0);
        return static_cast<Vertex>(adj.size()) - 1;
    }

    int fresh_label() { return next_label++; }

    // Position of the end of edge `label` at v.
    int find(Vertex v, int label) const
    {
        for (int i = 0; i < static_cast<int>(adj[v].size()); ++i)
            if (adj[v][i].second == label)
                return i;
        throw InternalError("edge end not found during surgery");
    }

    // Builds the plane graph on the surviving vertices, renumbered in order. The outer face is
    // the face to the right of the end of `outer_label` at `outer_vertex` (old numbering).
    PlaneGraph build(Vertex outer_vertex, int outer_label, std::vector<Vertex>* new_id_out = nullptr) const
    {
        std::vector<Vertex> id(adj.size(), -1);
        int n = 0;
        for (std::size_t v = 0; v < adj.size(); ++v)
            if (!removed[v])
                id[v] = n++;
        std::vector<std::vector<Vertex>> ccw(n);
        std::vector<std::vector<int>> labels(n);
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (removed[v])
                continue;
            for (const auto& [w, label] : adj[v]) {
                if (removed[w])
                    throw InternalError("edge to a removed vertex survived surgery");
                ccw[id[v]].push_back(id[w]);
                labels[id[v]].push_back(label);
            }
        }
        if (new_id_out)
            *new_id_out = id;
        int idx = 0;
        if (outer_vertex >= 0 && !removed[outer_vertex])
            idx = find(outer_vertex, outer_label);
        const Vertex ov = outer_vertex >= 0 && !removed[outer_vertex] ? id[outer_vertex] : 0;
        return from_neighbor_lists(ccw, ov, idx, &labels);
    }
};

} // namespace detail

/// g minus edge e, with edge_origin[new edge] = old edge. Edge order is kept.
struct EdgeDeletion {
    PlaneGraph graph;
    std::vector<EdgeId> edge_origin;
};

inline EdgeDeletion delete_edge(const PlaneGraph& g, EdgeId e)
{
    if (e < 0 || e >= g.num_edges())
        throw InputError("unknown edge " + std::to_string(e));
    Multigraph skel(g.num_vertices());
    std::vector<EdgeId> new_of(g.num_edges(), -1), origin;
    for (EdgeId x = 0; x < g.num_edges(); ++x)
        if (x != e) {
            new_of[x] = skel.add_edge(g.skeleton().ends(x)[0], g.skeleton().ends(x)[1]);
            origin.push_back(x);
        }
    auto map_dart = [&](DartId d) { return 2 * new_of[PlaneGraph::edge_of(d)] + (d & 1); };
    std::vector<std::vector<DartId>> rot(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (DartId d : g.rotation(v))
            if (PlaneGraph::edge_of(d) != e)
                rot[v].push_back(map_dart(d));
    DartId outer = g.outer_dart();
    while (PlaneGraph::edge_of(outer) == e)
        outer = g.face_next(outer);
    return {PlaneGraph(std::move(skel), std::move(rot), map_dart(outer)), std::move(origin)};
}

// ---------------------------------------------------------------------------------------------
// Hamiltonian u-v paths versus spanning trees of 2-faces

struct Theorem4Instance {
    PlaneGraph g0;
    EdgeId removed_edge = -1;
    PlaneGraph g0_prime;
    std::vector<EdgeId> prime_edge_origin; // g0' edge -> g0 edge
    Vertex u = -1, v = -1;
    PlaneGraph h;                      // radial graph of g0' with every edge doubled
    int h_vertex_nodes = 0;            // h vertex x < h_vertex_nodes is a vertex of g0'
    FaceColoring h_coloring;           // digons 3, quadrilaterals 2
    std::vector<EdgeId> quad_edge;     // h face -> g0' edge for quadrilaterals, else -1
    std::vector<FaceId> quad_of_edge;  // g0' edge -> h quadrilateral
    Truncation truncation;             // g = Tr(h)
    PlaneGraph g;
    FaceColoring coloring;             // on g: vertex cycles 1, from quadrilaterals 2, from digons 3
};

/// Builds the instance: g0' = g0 - e, h = R(g0') with doubled edges and a digon as outer face,
/// g = Tr(h) with its induced 3-face-colouring.
inline Theorem4Instance build_theorem4(const PlaneGraph& g0, EdgeId e)
{
    if (!g0.skeleton().is_regular(3))
        throw PreconditionError("expected a cubic graph");
    Theorem4Instance inst;
    inst.g0 = g0;
    inst.removed_edge = e;
    auto del = delete_edge(g0, e);
    inst.g0_prime = std::move(del.graph);
    inst.prime_edge_origin = std::move(del.edge_origin);
    inst.u = g0.skeleton().ends(e)[0];
    inst.v = g0.skeleton().ends(e)[1];

    const RadialGraph r = radial(inst.g0_prime);
    const PlaneGraph& r0 = r.graph;
    inst.h_vertex_nodes = r.num_vertex_nodes;
    Multigraph skel(r0.num_vertices());
    for (EdgeId x = 0; x < r0.num_edges(); ++x) {
        skel.add_edge(r0.skeleton().ends(x)[0], r0.skeleton().ends(x)[1]);
        skel.add_edge(r0.skeleton().ends(x)[0], r0.skeleton().ends(x)[1]);
    }
    std::vector<std::vector<DartId>> rot(r0.num_vertices());
    for (Vertex x = 0; x < r0.num_vertices(); ++x)
        for (DartId d : r0.rotation(x)) {
            const EdgeId re = PlaneGraph::edge_of(d);
            const int side = d & 1;
            const DartId a = 2 * (2 * re) + side, b = 2 * (2 * re + 1) + side;
            if (side == 0) {
                rot[x].push_back(a);
                rot[x].push_back(b);
            } else {
                rot[x].push_back(b);
                rot[x].push_back(a);
            }
        }
    // Outer face: the digon of radial edge 0, to the right of its second copy leaving end 0.
    inst.h = PlaneGraph(std::move(skel), std::move(rot), 2 * 1);

    const PlaneGraph& h = inst.h;
    inst.h_coloring = {std::vector<int>(h.num_faces(), 0), 3};
    inst.quad_edge.assign(h.num_faces(), -1);
    inst.quad_of_edge.assign(inst.g0_prime.num_edges(), -1);
    const int n0 = inst.h_vertex_nodes;
    for (const Face& f : h.faces()) {
        if (f.length() == 2) {
            inst.h_coloring.color[f.id] = 3;
            continue;
        }
        if (f.length() != 4)
            throw InternalError("doubled radial graph has a face of length " + std::to_string(f.length()));
        inst.h_coloring.color[f.id] = 2;
        std::vector<Vertex> xs;
        std::vector<FaceId> fs;
        for (Vertex x : h.face_vertices(f.id))
            (x < n0 ? xs : fs).push_back(x < n0 ? x : x - n0);
        const PlaneGraph& p = inst.g0_prime;
        for (EdgeId pe = 0; pe < p.num_edges(); ++pe) {
            const auto& ends = p.skeleton().ends(pe);
            const std::set<Vertex> ev{ends[0], ends[1]}, fv{xs.begin(), xs.end()};
            const std::set<FaceId> ef{p.face_of(2 * pe), p.face_of(2 * pe + 1)}, ff{fs.begin(), fs.end()};
            if (ev == fv && ef == ff && inst.quad_of_edge[pe] < 0) {
                inst.quad_edge[f.id] = pe;
                inst.quad_of_edge[pe] = f.id;
                break;
            }
        }
        if (inst.quad_edge[f.id] < 0)
            throw InternalError("quadrilateral without a matching edge of g0'");
    }

    inst.truncation = truncate(h);
    inst.g = inst.truncation.graph;
    inst.coloring = {std::vector<int>(inst.g.num_faces(), 0), 3};
    for (FaceId f = 0; f < inst.g.num_faces(); ++f) {
        const FaceOrigin& o = inst.truncation.face_origin[f];
        inst.coloring.color[f] = o.from_vertex ? 1 : inst.h_coloring.color[o.id];
    }
    if (auto ok = verify_face_coloring(inst.g, inst.coloring); !ok)
        throw InternalError("induced colouring of Tr(h) is not proper: " + ok.diagnostic);
    return inst;
}

/// Quadrilaterals of h as the must-exclude complement: constraints for a spanning tree of 2-faces.
inline FaceTreeConstraints theorem4_tree_constraints(const Theorem4Instance& inst)
{
    FaceTreeConstraints c;
    c.require_spanning = true;
    for (FaceId f = 0; f < inst.h.num_faces(); ++f)
        if (inst.h_coloring.color[f] != 2)
            c.must_exclude.push_back(f);
    return c;
}

struct Claim3Report {
    long paths = 0;
    long trees = 0;
    long counterexamples = 0;
    std::vector<std::string> notes;

    bool ok() const { return counterexamples == 0 && paths == trees; }
};

/// Exhaustive check, in both directions, that hamiltonian u-v paths of g0' and spanning trees of
/// 2-faces of h correspond by taking complements.
inline Claim3Report certify_claim3(const Theorem4Instance& inst, int max_vertices = 14)
{
    const PlaneGraph& p = inst.g0_prime;
    if (p.num_vertices() > max_vertices)
        throw ScaleError("g0' has " + std::to_string(p.num_vertices()) + " vertices; exhaustive limit is " +
                         std::to_string(max_vertices));
    Claim3Report rep;
    auto note = [&](std::string s) {
        ++rep.counterexamples;
        if (rep.notes.size() < 8)
            rep.notes.push_back(std::move(s));
    };
    for_each_hamiltonian_path(p.skeleton(), inst.u, inst.v, [&](const HamiltonianPath& path) {
        ++rep.paths;
        std::vector<char> in_l(p.num_edges(), 0);
        for (EdgeId e : path.edges)
            in_l[e] = 1;
        FaceTree ft;
        for (EdgeId e = 0; e < p.num_edges(); ++e)
            if (!in_l[e])
                ft.faces.push_back(inst.quad_of_edge[e]);
        std::sort(ft.faces.begin(), ft.faces.end());
        for (Vertex x = 0; x < inst.h.num_vertices(); ++x)
            ft.proper.push_back(x);
        if (auto v = verify_face_tree(inst.h, ft); !v)
            note("path complement is not a spanning tree of 2-faces: " + v.diagnostic);
        return true;
    });
    for_each_face_tree(inst.h, theorem4_tree_constraints(inst), [&](const FaceTree& ft) {
        ++rep.trees;
        std::vector<char> in_t(p.num_edges(), 0);
        for (FaceId f : ft.faces)
            in_t[inst.quad_edge[f]] = 1;
        std::vector<int> deg(p.num_vertices(), 0);
        Multigraph l(p.num_vertices());
        for (EdgeId e = 0; e < p.num_edges(); ++e)
            if (!in_t[e]) {
                const auto& ends = p.skeleton().ends(e);
                l.add_edge(ends[0], ends[1]);
                ++deg[ends[0]];
                ++deg[ends[1]];
            }
        bool ok = l.num_edges() == p.num_vertices() - 1 && is_connected(l);
        for (Vertex x = 0; x < p.num_vertices() && ok; ++x)
            ok = deg[x] == (x == inst.u || x == inst.v ? 1 : 2);
        if (!ok)
            note("tree complement is not a hamiltonian u-v path");
        return true;
    });
    if (rep.paths != rep.trees && rep.notes.size() < 8)
        rep.notes.push_back("path count " + std::to_string(rep.paths) + " differs from tree count " +
                            std::to_string(rep.trees));
    return rep;
}

/// g with its 2-faces (the octagons) contracted: an 8-regular reduced graph.
inline Contraction corollary3_contract(const Theorem4Instance& inst)
{
    Contraction c = contract_factor(inst.g, {inst.coloring.faces_of(2)}, inst.g.outer_face());
    if (!c.graph.skeleton().is_regular(8))
        throw InternalError("contraction of the 2-faces is not 8-regular");
    return c;
}

struct Corollary4 {
    PlaneGraph h0;
    FaceColoring coloring;              // octagons and new digons 2, triangles 3
    std::vector<FaceId> face_of_h_face; // quadrilateral of h -> its octagon in h0, else -1
};

/// Splits every 3-coloured digon of h: both edges are subdivided and the two new vertices are
/// joined by two parallel edges, giving two triangles around a 2-coloured digon.
inline Corollary4 corollary4_split(const Theorem4Instance& inst)
{
    const PlaneGraph& h = inst.h;
    detail::LabelledRotation r = detail::LabelledRotation::of(h);
    // Subdivide every edge: label e keeps the half at ends(e)[0], label e' is the half at ends(e)[1].
    std::vector<Vertex> mid(h.num_edges());
    std::vector<int> far_label(h.num_edges());
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        const Vertex a = h.skeleton().ends(e)[0], b = h.skeleton().ends(e)[1];
        mid[e] = r.add_vertex();
        far_label[e] = r.fresh_label();
        r.adj[a][r.find(a, e)].first = mid[e];
        r.adj[b][r.find(b, e)] = {mid[e], far_label[e]};
    }
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        const Vertex a = h.skeleton().ends(e)[0], b = h.skeleton().ends(e)[1];
        r.adj[mid[e]] = {{b, far_label[e]}, {a, e}};
    }
    // Per digon: darts d1 (on e) and d2 (on f) with the digon on their right.
    for (const Face& f : h.faces()) {
        if (inst.h_coloring.color[f.id] != 3)
            continue;
        const DartId d1 = f.boundary[0], d2 = f.boundary[1];
        const EdgeId e1 = PlaneGraph::edge_of(d1), e2 = PlaneGraph::edge_of(d2);
        const int g1 = r.fresh_label(), g2 = r.fresh_label();
        // At a subdivision vertex, the digon side follows the dart pointing at the head of d.
        auto attach = [&](DartId d, int first, int second) {
            const Vertex m = mid[PlaneGraph::edge_of(d)];
            const Vertex other = mid[PlaneGraph::edge_of(d) == e1 ? e2 : e1];
            const Vertex tail = h.tail(d), head = h.head(d);
            const int lt = (d & 1) == 0 ? PlaneGraph::edge_of(d) : far_label[PlaneGraph::edge_of(d)];
            const int lh = (d & 1) == 0 ? far_label[PlaneGraph::edge_of(d)] : PlaneGraph::edge_of(d);
            r.adj[m] = {{head, lh}, {tail, lt}, {other, first}, {other, second}};
        };
        attach(d1, g1, g2);
        attach(d2, g2, g1);
    }
    // Outer face: a triangle inside the outer digon of h.
    const DartId od = h.outer_dart();
    const EdgeId oe = PlaneGraph::edge_of(od);
    const Vertex om = mid[oe];
    PlaneGraph h0 = r.build(om, r.adj[om][2].second);
    Corollary4 out{h0, {std::vector<int>(h0.num_faces(), 0), 3}, std::vector<FaceId>(h.num_faces(), -1)};
    for (const Face& f : h0.faces()) {
        if (f.length() == 3)
            out.coloring.color[f.id] = 3;
        else if (f.length() == 2 || f.length() == 8)
            out.coloring.color[f.id] = 2;
        else
            throw InternalError("split graph has a face of length " + std::to_string(f.length()));
    }
    // Octagon of each quadrilateral: it contains the original vertices of the quadrilateral.
    for (const Face& q : h.faces()) {
        if (inst.h_coloring.color[q.id] != 2)
            continue;
        std::set<Vertex> qv;
        for (Vertex x : h.face_vertices(q.id))
            qv.insert(x);
        for (const Face& f : h0.faces()) {
            if (f.length() != 8)
                continue;
            std::set<Vertex> fv;
            for (Vertex x : h0.face_vertices(f.id))
                if (x < h.num_vertices())
                    fv.insert(x);
            if (fv == qv) {
                // Several octagons can share the same corner set only with parallel structure;
                // pick the one whose midpoints match the quadrilateral edges.
                std::set<Vertex> mids, want;
                for (Vertex x : h0.face_vertices(f.id))
                    if (x >= h.num_vertices())
                        mids.insert(x);
                for (EdgeId e : h.face_edges(q.id))
                    want.insert(mid[e]);
                if (mids == want)
                    out.face_of_h_face[q.id] = f.id;
            }
        }
        if (out.face_of_h_face[q.id] < 0)
            throw InternalError("quadrilateral without an octagon");
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Local surgery on cubic bipartite graphs

struct QuadSplit {
    PlaneGraph first;  // w1x1 and y1z1 added
    PlaneGraph second; // w1z1 and x1y1 added
};

/// Removes the quadrilateral face q = wxyz of a cubic graph and reconnects its four outside
/// neighbours in the two non-crossing ways.
inline QuadSplit quad_split(const PlaneGraph& g0, FaceId q)
{
    if (q < 0 || q >= g0.num_faces())
        throw InputError("unknown face " + std::to_string(q));
    if (!g0.skeleton().is_regular(3))
        throw PreconditionError("quad split needs a cubic graph");
    const Face& f = g0.face(q);
    if (f.length() != 4 || !g0.face_is_simple_cycle(q))
        throw PreconditionError("face " + std::to_string(q) + " is not a quadrilateral");
    // Outside dart at each corner: the one not on the face.
    std::array<Vertex, 4> corner{}, outside{};
    std::array<int, 4> label{};
    for (int i = 0; i < 4; ++i) {
        const DartId d = f.boundary[i];
        corner[i] = g0.tail(d);
        const DartId back = PlaneGraph::twin(f.boundary[(i + 3) % 4]);
        DartId o = -1;
        for (DartId x : g0.rotation(corner[i]))
            if (x != d && x != back)
                o = x;
        outside[i] = g0.head(o);
        label[i] = PlaneGraph::edge_of(o);
    }
    const std::set<Vertex> distinct{outside.begin(), outside.end()};
    if (distinct.size() != 4)
        throw InputError("outside neighbours of the quadrilateral are not distinct");
    for (Vertex x : outside)
        if (std::find(corner.begin(), corner.end(), x) != corner.end())
            throw InputError("quadrilateral has a chord");
    auto make = [&](int a, int b, int c, int d) {
        detail::LabelledRotation r = detail::LabelledRotation::of(g0);
        for (Vertex x : corner)
            r.removed[x] = 1;
        const int l1 = r.fresh_label(), l2 = r.fresh_label();
        r.adj[outside[a]][r.find(outside[a], label[a])] = {outside[b], l1};
        r.adj[outside[b]][r.find(outside[b], label[b])] = {outside[a], l1};
        r.adj[outside[c]][r.find(outside[c], label[c])] = {outside[d], l2};
        r.adj[outside[d]][r.find(outside[d], label[d])] = {outside[c], l2};
        // Keep g0's outer face when it survives, else use the new edge at outside[a].
        const DartId od = g0.outer_dart();
        const bool keep = !r.removed[g0.tail(od)] && !r.removed[g0.head(od)];
        return keep ? r.build(g0.tail(od), PlaneGraph::edge_of(od)) : r.build(outside[a], l1);
    };
    // Boundary order is w, x, y, z.
    return {make(0, 1, 2, 3), make(0, 3, 1, 2)};
}

/// Result of replacing vertex x of g by gadget minus u.
struct Substitution {
    PlaneGraph graph;
    std::vector<Vertex> host_vertex;   // g vertex -> new vertex (-1 for x)
    std::vector<Vertex> gadget_vertex; // gadget vertex -> new vertex (-1 for u)
    std::array<EdgeId, 3> link{};      // new edge joining y_i to its gadget partner
};

/// Default wiring: y_i, the i-th neighbour of x counterclockwise, meets v_{-i mod 3}, the
/// matching neighbour of u, so the two rotations are glued with opposite orientation.
inline std::array<int, 3> planar_wiring() { return {0, 2, 1}; }

/// Replaces x (degree 3 in g) by gadget - u (u of degree 3), joining the neighbour of x at
/// rotation position i to the neighbour of u at position wiring[i].
inline Substitution substitute_vertex(const PlaneGraph& g, Vertex x, const PlaneGraph& gadget, Vertex u,
                                      std::array<int, 3> wiring = planar_wiring())
{
    if (x < 0 || x >= g.num_vertices() || u < 0 || u >= gadget.num_vertices())
        throw InputError("substitution vertex out of range");
    if (g.degree(x) != 3 || gadget.degree(u) != 3)
        throw InputError("substituted vertices must have degree 3");
    {
        std::array<int, 3> s = wiring;
        std::sort(s.begin(), s.end());
        if (s != std::array<int, 3>{0, 1, 2})
            throw InputError("wiring must be a permutation of 0, 1, 2");
    }
    const int n = g.num_vertices();
    detail::LabelledRotation r = detail::LabelledRotation::of(g);
    const int shift = g.num_edges();
    for (Vertex y = 0; y < gadget.num_vertices(); ++y) {
        r.add_vertex();
        for (DartId d : gadget.rotation(y))
            r.adj[n + y].push_back({n + gadget.head(d), shift + PlaneGraph::edge_of(d)});
    }
    r.next_label = shift + gadget.num_edges();
    r.removed[x] = 1;
    r.removed[n + u] = 1;
    std::array<int, 3> link_label{};
    for (int i = 0; i < 3; ++i) {
        const DartId a = g.rotation(x)[i];
        const DartId b = gadget.rotation(u)[wiring[i]];
        const Vertex y = g.head(a), v = n + gadget.head(b);
        const int l = r.fresh_label();
        link_label[i] = l;
        r.adj[y][r.find(y, PlaneGraph::edge_of(a))] = {v, l};
        r.adj[v][r.find(v, shift + PlaneGraph::edge_of(b))] = {y, l};
    }
    const DartId od = g.outer_dart();
    const bool keep = g.tail(od) != x && g.head(od) != x;
    std::vector<Vertex> id;
    PlaneGraph out;
    try {
        out = keep ? r.build(g.tail(od), PlaneGraph::edge_of(od), &id)
                   : r.build(g.head(g.rotation(x)[0]), link_label[0], &id);
    } catch (const StructuralError& err) {
        throw InputError(std::string("wiring does not give a plane graph: ") + err.what());
    }
    Substitution s{out, std::vector<Vertex>(n), std::vector<Vertex>(gadget.num_vertices()), {}};
    for (Vertex y = 0; y < n; ++y)
        s.host_vertex[y] = id[y];
    for (Vertex y = 0; y < gadget.num_vertices(); ++y)
        s.gadget_vertex[y] = id[n + y];
    for (int i = 0; i < 3; ++i) {
        const Vertex y = s.host_vertex[g.head(g.rotation(x)[i])];
        const Vertex v = s.gadget_vertex[gadget.head(gadget.rotation(u)[wiring[i]])];
        for (DartId d : out.rotation(y))
            if (out.head(d) == v)
                s.link[i] = PlaneGraph::edge_of(d);
    }
    return s;
}

/// One pin of a multiple substitution: replace host vertex x by gadget minus u.
struct Pin {
    Vertex x;
    PlaneGraph gadget;
    Vertex u;
    std::array<int, 3> wiring = planar_wiring();
};

/// Applies the pins one after another; pin vertices refer to g and must be distinct.
inline PlaneGraph vertex_substitution(const PlaneGraph& g, const std::vector<Pin>& pins)
{
    std::set<Vertex> seen;
    for (const Pin& p : pins)
        if (!seen.insert(p.x).second)
            throw InputError("vertex " + std::to_string(p.x) + " pinned twice");
    PlaneGraph cur = g;
    std::vector<Vertex> where(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        where[v] = v;
    for (const Pin& p : pins) {
        const Substitution s = substitute_vertex(cur, where[p.x], p.gadget, p.u, p.wiring);
        for (Vertex& w : where)
            w = w >= 0 ? s.host_vertex[w] : -1;
        cur = s.graph;
    }
    return cur;
}

/// Replaces u0 by a cube with one vertex removed.
inline Substitution q3_splice(const PlaneGraph& g1, Vertex u0, std::array<int, 3> wiring = planar_wiring())
{
    std::vector<std::vector<Vertex>> cube(8);
    for (int i = 0; i < 4; ++i) {
        cube[i] = {(i + 1) % 4, 4 + i, (i + 3) % 4};
        cube[4 + i] = {i, 4 + (i + 1) % 4, 4 + (i + 3) % 4};
    }
    return substitute_vertex(g1, u0, from_neighbor_lists(cube), 0, wiring);
}

/// Pairs {j, k} (positions in the rotation of u) such that the gadget has a hamiltonian cycle
/// using the edges at positions j and k. Index: 0 = {0,1}, 1 = {0,2}, 2 = {1,2}.
inline std::array<bool, 3> realizable_pairs(const PlaneGraph& gadget, Vertex u)
{
    std::array<bool, 3> out{};
    const auto rot = gadget.rotation(u);
    const std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (int i = 0; i < 3; ++i) {
        EdgeConstraints c;
        c.forced = {PlaneGraph::edge_of(rot[pairs[i][0]]), PlaneGraph::edge_of(rot[pairs[i][1]])};
        out[i] = find_hamiltonian_cycle(gadget.skeleton(), c).has_value();
    }
    return out;
}

struct SubstitutionReport {
    bool composed_hamiltonian = false;
    bool predicted_hamiltonian = false;
    bool forced_edge_claim_applies = false; // every gadget forces one edge and allows both others
    bool forced_edge_prediction = false;    // host has a cycle through every pinned edge x y_1

    bool ok() const
    {
        return composed_hamiltonian == predicted_hamiltonian &&
               (!forced_edge_claim_applies || forced_edge_prediction == composed_hamiltonian);
    }
};

/// Certifies a multiple substitution by enumeration: the composed graph is hamiltonian iff the
/// host has a hamiltonian cycle whose pair of edges at every pinned vertex is realizable in that
/// pin's gadget.
inline SubstitutionReport certify_substitution(const PlaneGraph& g, const std::vector<Pin>& pins)
{
    SubstitutionReport rep;
    rep.composed_hamiltonian = find_hamiltonian_cycle(vertex_substitution(g, pins).skeleton()).has_value();
    std::vector<std::array<bool, 3>> real;
    for (const Pin& p : pins)
        real.push_back(realizable_pairs(p.gadget, p.u));
    for_each_hamiltonian_cycle(g.skeleton(), {}, [&](const HamiltonianCycle& c) {
        std::vector<char> used(g.num_edges(), 0);
        for (EdgeId e : c.edges)
            used[e] = 1;
        for (std::size_t i = 0; i < pins.size(); ++i) {
            const auto rot = g.rotation(pins[i].x);
            std::array<int, 2> at{};
            int k = 0;
            for (int j = 0; j < 3; ++j)
                if (used[PlaneGraph::edge_of(rot[j])])
                    at[k++] = pins[i].wiring[j];
            std::sort(at.begin(), at.end());
            const int idx = at[0] == 0 ? (at[1] == 1 ? 0 : 1) : 2;
            if (!real[i][idx])
                return true;
        }
        rep.predicted_hamiltonian = true;
        return false;
    });
    // The forced-edge form: gadget realizes exactly the two pairs through one edge.
    rep.forced_edge_claim_applies = !pins.empty();
    EdgeConstraints through;
    for (std::size_t i = 0; i < pins.size(); ++i) {
        const auto& r = real[i];
        int forced_pos = -1;
        if (r[0] && r[1] && !r[2])
            forced_pos = 0;
        else if (r[0] && r[2] && !r[1])
            forced_pos = 1;
        else if (r[1] && r[2] && !r[0])
            forced_pos = 2;
        if (forced_pos < 0) {
            rep.forced_edge_claim_applies = false;
            continue;
        }
        // Host position whose gadget partner is the forced position.
        for (int j = 0; j < 3; ++j)
            if (pins[i].wiring[j] == forced_pos)
                through.forced.push_back(PlaneGraph::edge_of(g.rotation(pins[i].x)[j]));
    }
    if (rep.forced_edge_claim_applies)
        rep.forced_edge_prediction = find_hamiltonian_cycle(g.skeleton(), through).has_value();
    return rep;
}

// ---------------------------------------------------------------------------------------------
// Two-edge-cut decomposition

/// A two-edge-cut {e1, e2} of a connected multigraph, smallest ids first, if one exists.
inline std::optional<std::pair<EdgeId, EdgeId>> find_two_edge_cut(const Multigraph& g)
{
    for (EdgeId a = 0; a < g.num_edges(); ++a)
        for (EdgeId b = a + 1; b < g.num_edges(); ++b) {
            Multigraph rest(g.num_vertices());
            for (EdgeId e = 0; e < g.num_edges(); ++e)
                if (e != a && e != b)
                    rest.add_edge(g.ends(e)[0], g.ends(e)[1]);
            if (!is_connected(rest)) {
                // Both edges must be needed: removing either alone keeps the graph connected.
                return std::make_pair(a, b);
            }
        }
    return std::nullopt;
}

/// A piece of the decomposition: a graph and the edges its hamiltonian cycle must use.
struct CutPiece {
    Multigraph graph;
    std::vector<EdgeId> required;
};

struct TwoCutSplit {
    CutPiece left, right;
    bool parity_ok = true; // the new edge joins vertices of opposite colour on both sides
};

/// Splits g along the two-edge-cut {e1, e2}: each side keeps its vertices and gains an edge
/// joining its two cut endpoints. `required` edges of g carry over to the side holding them.
inline TwoCutSplit split_two_edge_cut(const Multigraph& g, EdgeId e1, EdgeId e2,
                                      const std::vector<EdgeId>& required = {})
{
    Multigraph rest(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (e != e1 && e != e2)
            rest.add_edge(g.ends(e)[0], g.ends(e)[1]);
    std::vector<int> comp(g.num_vertices(), -1);
    std::vector<Vertex> stack{g.ends(e1)[0]};
    comp[g.ends(e1)[0]] = 0;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId e : rest.incident(v)) {
            const Vertex w = rest.other(e, v);
            if (comp[w] < 0) {
                comp[w] = 0;
                stack.push_back(w);
            }
        }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (comp[v] < 0)
            comp[v] = 1;
    if (comp[g.ends(e1)[1]] != 1 || comp[g.ends(e2)[0]] == comp[g.ends(e2)[1]])
        throw InputError("edges do not form a two-edge-cut");
    std::vector<Vertex> local(g.num_vertices());
    std::array<int, 2> count{0, 0};
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        local[v] = count[comp[v]]++;
    TwoCutSplit s{{Multigraph(count[0]), {}}, {Multigraph(count[1]), {}}, true};
    std::array<CutPiece*, 2> piece{&s.left, &s.right};
    std::vector<char> req(g.num_edges(), 0);
    for (EdgeId e : required)
        req[e] = 1;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (e == e1 || e == e2)
            continue;
        const Vertex a = g.ends(e)[0], b = g.ends(e)[1];
        const EdgeId ne = piece[comp[a]]->graph.add_edge(local[a], local[b]);
        if (req[e])
            piece[comp[a]]->required.push_back(ne);
    }
    const auto colour = bipartition(g);
    for (int side = 0; side < 2; ++side) {
        const Vertex a = comp[g.ends(e1)[0]] == side ? g.ends(e1)[0] : g.ends(e1)[1];
        const Vertex b = comp[g.ends(e2)[0]] == side ? g.ends(e2)[0] : g.ends(e2)[1];
        if (a == b)
            throw InputError("cut edges share an endpoint; the new edge would be a loop");
        piece[side]->required.push_back(piece[side]->graph.add_edge(local[a], local[b]));
        if (colour && (*colour)[a] == (*colour)[b])
            s.parity_ok = false;
    }
    return s;
}

struct Decomposition {
    std::vector<CutPiece> pieces;
    bool parity_ok = true;
};

/// Repeats two-edge-cut splitting until no piece has a two-edge-cut.
inline Decomposition decompose_two_edge_cuts(const Multigraph& g)
{
    Decomposition d;
    std::vector<CutPiece> work{{g, {}}};
    while (!work.empty()) {
        CutPiece p = std::move(work.back());
        work.pop_back();
        const auto cut = find_two_edge_cut(p.graph);
        if (!cut || p.graph.num_vertices() <= 2) {
            d.pieces.push_back(std::move(p));
            continue;
        }
        TwoCutSplit s = split_two_edge_cut(p.graph, cut->first, cut->second, p.required);
        d.parity_ok = d.parity_ok && s.parity_ok;
        work.push_back(std::move(s.right));
        work.push_back(std::move(s.left));
    }
    return d;
}

/// Hamiltonicity through the decomposition: every piece has a cycle using its required edges.
inline bool hamiltonian_by_decomposition(const Decomposition& d)
{
    for (const CutPiece& p : d.pieces)
        if (!find_hamiltonian_cycle(p.graph, {p.required, {}}))
            return false;
    return true;
}

} // namespace facetree
