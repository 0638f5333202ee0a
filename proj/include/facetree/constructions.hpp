#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "facetree/error.hpp"
#include "facetree/multigraph.hpp"
#include "facetree/plane_graph.hpp"

namespace facetree {

/// Dual graph. Dual vertex f is face f of g; dual edge e crosses edge e, and dual dart d runs
/// from the face right of d to the face left of d. The dual face around vertex v is made of the
/// dual darts d with head(d) == v.
///
/// The outer face of the dual is the face around tail(g.outer_dart()), chosen so that taking the
/// dual twice brings the outer face back to g.outer_face().
inline PlaneGraph dual(const PlaneGraph& g)
{
    if (g.num_edges() == 0)
        return PlaneGraph();
    Multigraph skel(g.num_faces());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const FaceId a = g.face_of(2 * e), b = g.face_of(2 * e + 1);
        if (a == b)
            throw PreconditionError("edge " + std::to_string(e) + " is a bridge; its dual would be a loop");
        skel.add_edge(a, b);
    }
    std::vector<std::vector<DartId>> rot(g.num_faces());
    for (const Face& f : g.faces())
        rot[f.id].assign(f.boundary.rbegin(), f.boundary.rend());
    return PlaneGraph(std::move(skel), std::move(rot), g.face_prev(g.outer_dart()));
}

/// Radial graph on V(g) followed by F(g): node v < num_vertex_nodes is vertex v, node
/// num_vertex_nodes + f is face f. Radial edge d joins tail(d) to the face right of d, one per corner.
struct RadialGraph {
    PlaneGraph graph;
    int num_vertex_nodes = 0;

    bool is_face_node(Vertex x) const { return x >= num_vertex_nodes; }
    FaceId face_of_node(Vertex x) const { return x - num_vertex_nodes; }
};

namespace detail {

inline void require_cycle_faces(const PlaneGraph& g, const char* what)
{
    if (g.num_vertices() < 2)
        throw PreconditionError(std::string(what) + " needs at least two vertices");
    for (const Face& f : g.faces())
        if (!g.face_is_simple_cycle(f.id))
            throw PreconditionError(std::string(what) + " needs a 2-connected graph; face " + std::to_string(f.id) +
                                    " is not a cycle");
}

} // namespace detail

inline RadialGraph radial(const PlaneGraph& g)
{
    detail::require_cycle_faces(g, "radial graph");
    const int n = g.num_vertices();
    Multigraph skel(n + g.num_faces());
    for (DartId d = 0; d < g.num_darts(); ++d)
        skel.add_edge(g.tail(d), n + g.face_of(d));
    std::vector<std::vector<DartId>> rot(n + g.num_faces());
    for (Vertex v = 0; v < n; ++v)
        for (DartId a : g.rotation(v))
            rot[v].push_back(2 * a);
    for (const Face& f : g.faces())
        for (auto it = f.boundary.rbegin(); it != f.boundary.rend(); ++it)
            rot[n + f.id].push_back(2 * *it + 1);
    return {PlaneGraph(std::move(skel), std::move(rot), 2 * g.outer_dart() + 1), n};
}

/// Abstract bipartite graph: nodes [0, vertices.size()) are vertices, the rest are faces.
struct RestrictedRadial {
    std::vector<Vertex> vertices;
    std::vector<FaceId> faces;
    Multigraph graph;

    bool is_tree() const
    {
        const int nodes = graph.num_vertices();
        return nodes > 0 && graph.num_edges() == nodes - 1 && is_connected(graph);
    }
};

/// Subgraph of the radial graph induced on u and the bounded faces t.
inline RestrictedRadial restricted_radial(const PlaneGraph& h, const std::vector<Vertex>& u,
                                          const std::vector<FaceId>& t)
{
    RestrictedRadial r;
    r.vertices = u;
    r.faces = t;
    r.graph = Multigraph(static_cast<int>(u.size() + t.size()));
    std::vector<int> node_of(h.num_vertices(), -1);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] >= h.num_vertices())
            throw InputError("unknown vertex " + std::to_string(u[i]));
        node_of[u[i]] = static_cast<int>(i);
    }
    for (std::size_t j = 0; j < t.size(); ++j) {
        const FaceId f = t[j];
        if (f < 0 || f >= h.num_faces())
            throw InputError("unknown face " + std::to_string(f));
        if (f == h.outer_face())
            throw InputError("restricted radial graph takes bounded faces only; face " + std::to_string(f) +
                             " is the outer face");
        std::set<Vertex> on_face;
        for (Vertex x : h.face_vertices(f))
            on_face.insert(x);
        for (Vertex x : on_face)
            if (node_of[x] >= 0)
                r.graph.add_edge(node_of[x], static_cast<int>(u.size() + j));
    }
    return r;
}

/// Face of a truncation: either an enlarged old face or the cycle replacing an old vertex.
struct FaceOrigin {
    bool from_vertex = false;
    int id = -1;
};

/// Truncation. New vertex d sits on old dart d near tail(d); new edge e < E(g) is old edge e,
/// and the cycle replacing v runs through the new vertices of its darts.
struct Truncation {
    PlaneGraph graph;
    std::vector<FaceOrigin> face_origin;
    std::vector<FaceId> face_of_old_face;
    std::vector<FaceId> face_of_old_vertex;
};

inline Truncation truncate(const PlaneGraph& g)
{
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) < 3)
            throw PreconditionError("truncation needs minimum degree 3; vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(g.degree(v)));
    const int E = g.num_edges();
    Multigraph skel(g.num_darts());
    for (EdgeId e = 0; e < E; ++e)
        skel.add_edge(2 * e, 2 * e + 1);
    std::vector<std::vector<DartId>> rot(g.num_darts());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto r = g.rotation(v);
        const int k = static_cast<int>(r.size());
        const EdgeId first = skel.num_edges();
        for (int i = 0; i < k; ++i)
            skel.add_edge(r[i], r[(i + 1) % k]);
        for (int i = 0; i < k; ++i) {
            const EdgeId to_next = first + i;
            const EdgeId to_prev = first + (i + k - 1) % k;
            rot[r[i]] = {r[i], 2 * to_next, 2 * to_prev + 1};
        }
    }
    Truncation t{PlaneGraph(std::move(skel), std::move(rot), g.outer_dart()), {}, {}, {}};
    t.face_of_old_face.assign(g.num_faces(), -1);
    t.face_of_old_vertex.assign(g.num_vertices(), -1);
    for (const Face& f : t.graph.faces()) {
        FaceOrigin o{true, g.tail(t.graph.tail(f.boundary.front()))};
        for (DartId d : f.boundary)
            if (PlaneGraph::edge_of(d) < E) {
                o = {false, g.face_of(d)};
                break;
            }
        t.face_origin.push_back(o);
        (o.from_vertex ? t.face_of_old_vertex : t.face_of_old_face)[o.id] = f.id;
    }
    return t;
}

/// Leapfrog extension, built as the dual of the superposition of g and its radial graph.
///
/// The superposition has vertex nodes [0, n) and face nodes n + f; its edge e < E(g) is edge e of
/// g and edge E(g) + d is the radial edge of corner d. Faces of the result correspond to nodes of
/// the superposition: one hexagon-like face per old vertex and one face per old face.
struct Leapfrog {
    PlaneGraph graph;
    PlaneGraph superposition;
    std::vector<FaceOrigin> face_origin;      // Lf face -> old vertex or old face
    std::vector<FaceId> face_of_old_vertex;    // C6(v) for cubic g
    std::vector<FaceId> face_of_old_face;      // the facial 2-factor Q_F
    std::vector<Vertex> vertex_of_dart;        // Lf vertex on the triangle (tail d, head d, face right of d)

    /// Lf edge shared by the faces of the two ends of old edge e.
    EdgeId edge_of_old_edge(EdgeId e) const { return e; }
};

inline Leapfrog leapfrog(const PlaneGraph& g)
{
    detail::require_cycle_faces(g, "leapfrog extension");
    const int n = g.num_vertices();
    const int E = g.num_edges();
    Multigraph skel(n + g.num_faces());
    for (EdgeId e = 0; e < E; ++e)
        skel.add_edge(g.skeleton().ends(e)[0], g.skeleton().ends(e)[1]);
    for (DartId d = 0; d < g.num_darts(); ++d)
        skel.add_edge(g.tail(d), n + g.face_of(d));
    auto radial_dart = [E](DartId d, int side) { return 2 * (E + d) + side; };
    std::vector<std::vector<DartId>> rot(n + g.num_faces());
    for (Vertex v = 0; v < n; ++v) {
        const auto r = g.rotation(v);
        const int k = static_cast<int>(r.size());
        for (int i = 0; i < k; ++i) {
            rot[v].push_back(r[i]);
            rot[v].push_back(radial_dart(r[(i + 1) % k], 0));
        }
    }
    for (const Face& f : g.faces())
        for (auto it = f.boundary.rbegin(); it != f.boundary.rend(); ++it)
            rot[n + f.id].push_back(radial_dart(*it, 1));
    PlaneGraph sup(std::move(skel), std::move(rot), g.outer_dart());

    PlaneGraph lf = dual(sup);
    Leapfrog out;
    auto origin_of = [&](const PlaneGraph& graph, FaceId f) {
        const Vertex node = sup.head(graph.face(f).boundary.front());
        return node < n ? FaceOrigin{true, node} : FaceOrigin{false, node - n};
    };
    FaceId outer = -1;
    for (const Face& f : lf.faces()) {
        const FaceOrigin o = origin_of(lf, f.id);
        if (!o.from_vertex && o.id == g.outer_face())
            outer = f.id;
    }
    out.graph = lf.with_outer_face(outer);
    out.face_of_old_vertex.assign(n, -1);
    out.face_of_old_face.assign(g.num_faces(), -1);
    for (const Face& f : out.graph.faces()) {
        const FaceOrigin o = origin_of(out.graph, f.id);
        out.face_origin.push_back(o);
        (o.from_vertex ? out.face_of_old_vertex : out.face_of_old_face)[o.id] = f.id;
    }
    out.vertex_of_dart.resize(g.num_darts());
    for (DartId d = 0; d < g.num_darts(); ++d)
        out.vertex_of_dart[d] = sup.face_of(d);
    out.superposition = std::move(sup);
    return out;
}

/// Correspondence between a reduced graph H = G/Q and its host G.
struct ContractionMap {
    std::vector<FaceId> vertex_origin;  // H vertex -> Q-face of G
    std::vector<EdgeId> edge_origin;    // H edge -> G edge (not on any Q-face)
    std::vector<FaceId> face_origin;    // H face -> Q^c face of G
    std::vector<Vertex> vertex_of_face; // G face -> H vertex, or -1
    std::vector<FaceId> face_of_face;   // G face -> H face, or -1
    std::vector<EdgeId> edge_of_edge;   // G edge -> H edge, or -1

    /// G dart matching H dart h (same orientation).
    DartId dart_origin(DartId h) const { return 2 * edge_origin[PlaneGraph::edge_of(h)] + (h & 1); }
};

struct Contraction {
    PlaneGraph graph;
    ContractionMap map;
};

/// Contracts every face of the facial 2-factor q to a vertex, keeping parallel edges.
/// H vertex i is q.faces[i]. The outer face of H is the image of `outer_hint` when given,
/// else of g's outer face when that is a Q^c face, else of the lowest-id Q^c face.
inline Contraction contract_factor(const PlaneGraph& g, const FacialTwoFactor& q,
                                   std::optional<FaceId> outer_hint = std::nullopt)
{
    if (auto v = verify_facial_two_factor(g, q); !v)
        throw PreconditionError("not a facial 2-factor: " + v.diagnostic);
    ContractionMap m;
    m.vertex_origin = q.faces;
    m.vertex_of_face.assign(g.num_faces(), -1);
    for (std::size_t i = 0; i < q.faces.size(); ++i)
        m.vertex_of_face[q.faces[i]] = static_cast<int>(i);
    std::vector<Vertex> image(g.num_vertices(), -1);
    for (std::size_t i = 0; i < q.faces.size(); ++i)
        for (Vertex v : g.face_vertices(q.faces[i]))
            image[v] = static_cast<int>(i);

    Multigraph skel(static_cast<int>(q.faces.size()));
    m.edge_of_edge.assign(g.num_edges(), -1);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (m.vertex_of_face[g.face_of(2 * e)] >= 0 || m.vertex_of_face[g.face_of(2 * e + 1)] >= 0)
            continue;
        const Vertex a = image[g.skeleton().ends(e)[0]], b = image[g.skeleton().ends(e)[1]];
        if (a == b)
            throw PreconditionError("edge " + std::to_string(e) + " joins two vertices of the same Q-face; "
                                    "contraction would create a loop");
        m.edge_of_edge[e] = skel.add_edge(a, b);
        m.edge_origin.push_back(e);
    }
    auto hdart = [&](DartId d) { return 2 * m.edge_of_edge[PlaneGraph::edge_of(d)] + (d & 1); };

    std::vector<std::vector<DartId>> rot(q.faces.size());
    for (std::size_t i = 0; i < q.faces.size(); ++i) {
        const auto& b = g.face(q.faces[i]).boundary;
        const int k = static_cast<int>(b.size());
        for (int step = 0; step < k; ++step) {
            const int j = (k - step) % k;
            const DartId stop = PlaneGraph::twin(b[(j + k - 1) % k]);
            for (DartId x = g.next_ccw(b[j]); x != stop; x = g.next_ccw(x))
                rot[i].push_back(hdart(x));
        }
    }

    FaceId hint = -1;
    if (outer_hint) {
        if (*outer_hint < 0 || *outer_hint >= g.num_faces() || m.vertex_of_face[*outer_hint] >= 0)
            throw InputError("outer hint must be a Q^c face");
        hint = *outer_hint;
    } else if (m.vertex_of_face[g.outer_face()] < 0) {
        hint = g.outer_face();
    } else {
        for (FaceId f = 0; f < g.num_faces() && hint < 0; ++f)
            if (m.vertex_of_face[f] < 0)
                hint = f;
    }
    DartId outer = -1;
    for (DartId d = 0; d < g.num_darts() && outer < 0 && hint >= 0; ++d)
        if (g.face_of(d) == hint && m.edge_of_edge[PlaneGraph::edge_of(d)] >= 0)
            outer = hdart(d);
    if (skel.num_edges() > 0 && outer < 0)
        throw PreconditionError("no Q^c face available for the outer face of the reduced graph");

    PlaneGraph h(std::move(skel), std::move(rot), outer);
    m.face_of_face.assign(g.num_faces(), -1);
    for (const Face& f : h.faces()) {
        const FaceId origin = f.boundary.empty() ? hint : g.face_of(m.dart_origin(f.boundary.front()));
        m.face_origin.push_back(origin);
        m.face_of_face[origin] = f.id;
    }
    int qc = 0;
    for (FaceId f = 0; f < g.num_faces(); ++f)
        if (m.vertex_of_face[f] < 0)
            ++qc;
    if (qc != h.num_faces())
        throw InternalError("reduced graph faces do not match the Q^c faces");
    return {std::move(h), std::move(m)};
}

} // namespace facetree
