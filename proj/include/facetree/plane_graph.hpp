#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "facetree/error.hpp"
#include "facetree/multigraph.hpp"

namespace facetree {

/// A traced face: the cyclic dart sequence d, next(d), ... with the face on the right of every dart.
struct Face {
    FaceId id = -1;
    std::vector<DartId> boundary;

    int length() const { return static_cast<int>(boundary.size()); }
};

/// Connected plane multigraph stored as a rotation system.
///
/// Edge e owns darts 2e and 2e + 1; dart 2e leaves ends(e)[0], dart 2e + 1 leaves ends(e)[1].
/// rotation(v) lists the darts leaving v in counterclockwise order. The face to the right of
/// dart d continues with next_ccw(twin(d)), so bounded faces are traced clockwise.
/// Instances are immutable; every transformation builds a new graph.
class PlaneGraph {
public:
    PlaneGraph() : PlaneGraph(Multigraph(1), {{}}, -1) {}

    PlaneGraph(Multigraph skeleton, std::vector<std::vector<DartId>> rotation, DartId outer_dart)
        : skeleton_(std::move(skeleton)), rotation_(std::move(rotation)), outer_dart_(outer_dart)
    {
        validate_rotation();
        trace();
        const int euler = num_vertices() - num_edges() + num_faces();
        if (euler != 2)
            throw StructuralError("rotation system is not planar: V - E + F = " + std::to_string(euler));
        if (num_edges() == 0) {
            outer_dart_ = -1;
        } else if (outer_dart_ < 0 || outer_dart_ >= num_darts()) {
            throw InputError("outer dart out of range");
        }
    }

    static constexpr DartId twin(DartId d) { return d ^ 1; }
    static constexpr EdgeId edge_of(DartId d) { return d >> 1; }
    static constexpr DartId dart_of(EdgeId e, int side) { return 2 * e + side; }

    int num_vertices() const { return skeleton_.num_vertices(); }
    int num_edges() const { return skeleton_.num_edges(); }
    int num_darts() const { return 2 * num_edges(); }
    int num_faces() const { return static_cast<int>(faces_.size()); }
    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }

    const Multigraph& skeleton() const { return skeleton_; }

    Vertex tail(DartId d) const { return skeleton_.ends(edge_of(d))[d & 1]; }
    Vertex head(DartId d) const { return skeleton_.ends(edge_of(d))[(d & 1) ^ 1]; }

    std::span<const DartId> rotation(Vertex v) const { return rotation_[v]; }
    int position(DartId d) const { return position_[d]; }

    DartId next_ccw(DartId d) const
    {
        const auto& r = rotation_[tail(d)];
        return r[(position_[d] + 1) % r.size()];
    }

    DartId next_cw(DartId d) const
    {
        const auto& r = rotation_[tail(d)];
        return r[(position_[d] + r.size() - 1) % r.size()];
    }

    DartId face_next(DartId d) const { return next_ccw(twin(d)); }
    DartId face_prev(DartId d) const { return twin(next_cw(d)); }

    FaceId face_of(DartId d) const { return face_of_[d]; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(FaceId f) const { return faces_[f]; }

    DartId outer_dart() const { return outer_dart_; }
    FaceId outer_face() const { return outer_dart_ < 0 ? 0 : face_of_[outer_dart_]; }

    std::vector<Vertex> face_vertices(FaceId f) const
    {
        std::vector<Vertex> out;
        for (DartId d : faces_[f].boundary)
            out.push_back(tail(d));
        return out;
    }

    std::vector<EdgeId> face_edges(FaceId f) const
    {
        std::vector<EdgeId> out;
        for (DartId d : faces_[f].boundary)
            out.push_back(edge_of(d));
        return out;
    }

    bool face_is_simple_cycle(FaceId f) const
    {
        auto vs = face_vertices(f);
        std::sort(vs.begin(), vs.end());
        return !vs.empty() && std::adjacent_find(vs.begin(), vs.end()) == vs.end();
    }

    /// Faces incident to v, listed once each in counterclockwise order around v.
    std::vector<FaceId> faces_around(Vertex v) const
    {
        std::vector<FaceId> out;
        for (DartId d : rotation_[v]) {
            const FaceId f = face_of_[d];
            if (std::find(out.begin(), out.end(), f) == out.end())
                out.push_back(f);
        }
        return out;
    }

    PlaneGraph with_outer_face(FaceId f) const
    {
        if (f < 0 || f >= num_faces())
            throw InputError("unknown face id " + std::to_string(f));
        if (num_edges() == 0)
            return *this;
        return PlaneGraph(skeleton_, rotation_, faces_[f].boundary.front());
    }

    const std::vector<std::vector<DartId>>& rotations() const { return rotation_; }

private:
    void validate_rotation()
    {
        const int n = num_vertices();
        if (n == 0)
            throw StructuralError("empty graph");
        if (static_cast<int>(rotation_.size()) != n)
            throw StructuralError("rotation count does not match vertex count");
        position_.assign(static_cast<std::size_t>(num_darts()), -1);
        for (Vertex v = 0; v < n; ++v) {
            for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
                const DartId d = rotation_[v][i];
                if (d < 0 || d >= num_darts())
                    throw StructuralError("dart id out of range in rotation of vertex " + std::to_string(v));
                if (tail(d) != v)
                    throw StructuralError("dart " + std::to_string(d) + " listed at a vertex that is not its tail");
                if (position_[d] >= 0)
                    throw StructuralError("dart " + std::to_string(d) + " duplicated in rotation");
                position_[d] = i;
            }
        }
        for (DartId d = 0; d < num_darts(); ++d)
            if (position_[d] < 0)
                throw StructuralError("dart " + std::to_string(d) + " missing from rotation");
        if (!is_connected(skeleton_))
            throw StructuralError("graph is not connected");
    }

    void trace()
    {
        faces_.clear();
        face_of_.assign(static_cast<std::size_t>(num_darts()), -1);
        if (num_edges() == 0) {
            faces_.push_back(Face{0, {}});
            return;
        }
        for (DartId start = 0; start < num_darts(); ++start) {
            if (face_of_[start] >= 0)
                continue;
            Face f;
            f.id = num_faces();
            DartId d = start;
            do {
                face_of_[d] = f.id;
                f.boundary.push_back(d);
                d = face_next(d);
            } while (d != start);
            faces_.push_back(std::move(f));
        }
    }

    Multigraph skeleton_;
    std::vector<std::vector<DartId>> rotation_;
    std::vector<int> position_;
    std::vector<FaceId> face_of_;
    std::vector<Face> faces_;
    DartId outer_dart_ = -1;
};

/// Re-traces the faces of g; identical to g.faces(), exposed as a free operation.
inline std::vector<Face> trace_faces(const PlaneGraph& g) { return g.faces(); }

namespace detail {

inline int count_faces(const Multigraph& skel, const std::vector<std::vector<DartId>>& rot)
{
    const int darts = 2 * skel.num_edges();
    std::vector<int> pos(darts, -1);
    for (const auto& r : rot)
        for (int i = 0; i < static_cast<int>(r.size()); ++i)
            pos[r[i]] = i;
    auto tail = [&](DartId d) { return skel.ends(d >> 1)[d & 1]; };
    std::vector<char> seen(darts, 0);
    int faces = 0;
    for (DartId s = 0; s < darts; ++s) {
        if (seen[s])
            continue;
        ++faces;
        DartId d = s;
        do {
            seen[d] = 1;
            const DartId t = d ^ 1;
            const auto& r = rot[tail(t)];
            d = r[(pos[t] + 1) % r.size()];
        } while (d != s);
    }
    return faces;
}

} // namespace detail

/// Builds a plane graph from counterclockwise neighbour lists.
///
/// Parallel edges are paired by list position: the occurrences of w around u meet the
/// occurrences of u around w in reversed cyclic order, and the cyclic shift is the first one
/// (in lexicographic order over all parallel classes) that satisfies the Euler formula.
/// When `edge_labels` is given, entries with equal labels are paired directly instead.
/// The outer face is the face to the right of dart `outer_index` at `outer_vertex`.
inline PlaneGraph from_neighbor_lists(const std::vector<std::vector<Vertex>>& ccw, Vertex outer_vertex = 0,
                                      int outer_index = 0,
                                      const std::vector<std::vector<int>>* edge_labels = nullptr)
{
    const int n = static_cast<int>(ccw.size());
    if (n == 0)
        throw StructuralError("graph without vertices");
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : ccw[u]) {
            if (w < 0 || w >= n)
                throw StructuralError("neighbour " + std::to_string(w) + " out of range at vertex " + std::to_string(u));
            if (w == u)
                throw StructuralError("loop at vertex " + std::to_string(u));
        }

    // partner[u][i] = (w, j): entry i of u is the same edge as entry j of w.
    std::vector<std::vector<std::pair<int, int>>> partner(n);
    for (Vertex u = 0; u < n; ++u)
        partner[u].assign(ccw[u].size(), {-1, -1});

    struct Bundle {
        Vertex u, w;
        std::vector<int> at_u, at_w;
    };
    std::vector<Bundle> bundles;

    if (edge_labels) {
        std::map<int, std::vector<std::pair<int, int>>> by_label;
        for (Vertex u = 0; u < n; ++u) {
            if ((*edge_labels)[u].size() != ccw[u].size())
                throw StructuralError("edge label count mismatch at vertex " + std::to_string(u));
            for (int i = 0; i < static_cast<int>(ccw[u].size()); ++i)
                by_label[(*edge_labels)[u][i]].push_back({u, i});
        }
        for (const auto& [label, ends] : by_label) {
            if (ends.size() != 2 || ccw[ends[0].first][ends[0].second] != ends[1].first ||
                ccw[ends[1].first][ends[1].second] != ends[0].first)
                throw StructuralError("edge label " + std::to_string(label) + " does not name a single edge");
            partner[ends[0].first][ends[0].second] = ends[1];
            partner[ends[1].first][ends[1].second] = ends[0];
        }
    } else {
        for (Vertex u = 0; u < n; ++u) {
            std::map<Vertex, std::vector<int>> occ;
            for (int i = 0; i < static_cast<int>(ccw[u].size()); ++i)
                occ[ccw[u][i]].push_back(i);
            for (auto& [w, at_u] : occ) {
                if (w < u)
                    continue;
                std::vector<int> at_w;
                for (int j = 0; j < static_cast<int>(ccw[w].size()); ++j)
                    if (ccw[w][j] == u)
                        at_w.push_back(j);
                if (at_w.size() != at_u.size())
                    throw StructuralError("asymmetric adjacency between " + std::to_string(u) + " and " +
                                          std::to_string(w));
                bundles.push_back({u, w, at_u, at_w});
            }
        }
    }

    auto build = [&](const std::vector<int>& shifts, bool check_only) -> std::optional<PlaneGraph> {
        auto part = partner;
        for (std::size_t b = 0; b < bundles.size(); ++b) {
            const auto& B = bundles[b];
            const int k = static_cast<int>(B.at_u.size());
            for (int i = 0; i < k; ++i) {
                const int j = B.at_w[((shifts[b] - i) % k + k) % k];
                part[B.u][B.at_u[i]] = {B.w, j};
                part[B.w][j] = {B.u, B.at_u[i]};
            }
        }
        Multigraph skel(n);
        std::vector<std::vector<DartId>> rot(n);
        for (Vertex u = 0; u < n; ++u)
            rot[u].assign(ccw[u].size(), -1);
        for (Vertex u = 0; u < n; ++u)
            for (int i = 0; i < static_cast<int>(ccw[u].size()); ++i) {
                const auto [w, j] = part[u][i];
                if (w < u || (w == u && j < i) || rot[u][i] >= 0)
                    continue;
                const EdgeId e = skel.add_edge(u, w);
                rot[u][i] = 2 * e;
                rot[w][j] = 2 * e + 1;
            }
        if (!is_connected(skel))
            throw StructuralError("graph is not connected");
        if (n - skel.num_edges() + detail::count_faces(skel, rot) != 2)
            return std::nullopt;
        if (check_only)
            return PlaneGraph();
        if (outer_vertex < 0 || outer_vertex >= n)
            throw InputError("outer vertex out of range");
        DartId outer = -1;
        if (skel.num_edges() > 0) {
            if (outer_index < 0 || outer_index >= static_cast<int>(rot[outer_vertex].size()))
                throw InputError("outer dart index out of range");
            outer = rot[outer_vertex][outer_index];
        }
        return PlaneGraph(std::move(skel), std::move(rot), outer);
    };

    std::vector<int> multi;
    for (std::size_t b = 0; b < bundles.size(); ++b)
        if (bundles[b].at_u.size() > 1)
            multi.push_back(static_cast<int>(b));
    std::vector<int> shifts(bundles.size(), 0);
    std::uint64_t combos = 1;
    for (int b : multi) {
        combos *= bundles[b].at_u.size();
        if (combos > (1u << 16))
            throw StructuralError("too many parallel-edge pairings to resolve");
    }
    for (std::uint64_t c = 0; c < combos; ++c) {
        std::uint64_t rest = c;
        for (auto it = multi.rbegin(); it != multi.rend(); ++it) {
            const auto k = bundles[*it].at_u.size();
            shifts[*it] = static_cast<int>(rest % k);
            rest /= k;
        }
        if (build(shifts, true))
            return *build(shifts, false);
    }
    throw StructuralError("neighbour lists admit no planar pairing (Euler formula fails)");
}

/// Counterclockwise neighbour lists, the inverse of from_neighbor_lists for simple graphs.
inline std::vector<std::vector<Vertex>> neighbor_lists(const PlaneGraph& g)
{
    std::vector<std::vector<Vertex>> out(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (DartId d : g.rotation(v))
            out[v].push_back(g.head(d));
    return out;
}

/// A set of faces of a host graph, meant to form a 2-factor of face boundaries.
struct FacialTwoFactor {
    std::vector<FaceId> faces;
};

struct Verdict {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const { return ok; }

    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

inline Verdict verify_facial_two_factor(const PlaneGraph& g, const FacialTwoFactor& q)
{
    std::vector<int> cover(g.num_vertices(), 0);
    std::vector<char> chosen(g.num_faces(), 0);
    for (FaceId f : q.faces) {
        if (f < 0 || f >= g.num_faces())
            throw InputError("unknown face id " + std::to_string(f));
        if (chosen[f])
            return Verdict::fail("face " + std::to_string(f) + " listed twice");
        chosen[f] = 1;
        if (!g.face_is_simple_cycle(f))
            return Verdict::fail("face " + std::to_string(f) + " is not bounded by a simple cycle");
        for (Vertex v : g.face_vertices(f))
            ++cover[v];
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (cover[v] != 1)
            return Verdict::fail("vertex " + std::to_string(v) + " lies on " + std::to_string(cover[v]) +
                                 " chosen faces");
    return Verdict::pass();
}

enum class OuterFace { match, ignore };

namespace detail {

// Extends the dart correspondence a0 -> b0 along twins and rotations; reflect mirrors rotations.
inline std::optional<std::vector<DartId>> extend_dart_map(const PlaneGraph& a, const PlaneGraph& b, DartId a0,
                                                          DartId b0, bool reflect)
{
    const int darts = a.num_darts();
    std::vector<DartId> phi(darts, -1), inv(darts, -1);
    std::vector<Vertex> vmap(a.num_vertices(), -1), vinv(b.num_vertices(), -1);
    std::vector<DartId> stack;
    auto assign = [&](DartId x, DartId y) {
        if (phi[x] >= 0)
            return phi[x] == y;
        if (inv[y] >= 0)
            return false;
        const Vertex tx = a.tail(x), ty = b.tail(y);
        if (a.degree(tx) != b.degree(ty))
            return false;
        if (vmap[tx] >= 0 ? vmap[tx] != ty : vinv[ty] >= 0)
            return false;
        vmap[tx] = ty;
        vinv[ty] = tx;
        phi[x] = y;
        inv[y] = x;
        stack.push_back(x);
        return true;
    };
    if (!assign(a0, b0))
        return std::nullopt;
    while (!stack.empty()) {
        const DartId x = stack.back();
        stack.pop_back();
        const DartId y = phi[x];
        if (!assign(PlaneGraph::twin(x), PlaneGraph::twin(y)))
            return std::nullopt;
        if (!assign(a.next_ccw(x), reflect ? b.next_cw(y) : b.next_ccw(y)))
            return std::nullopt;
    }
    return phi;
}

} // namespace detail

/// Embedded-graph isomorphism: rotations map to rotations (optionally all reversed) and,
/// with OuterFace::match, the outer face maps to the outer face.
inline bool same_graph(const PlaneGraph& a, const PlaneGraph& b, OuterFace mode = OuterFace::match)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() || a.num_faces() != b.num_faces())
        return false;
    if (a.num_edges() == 0)
        return true;
    auto degree_profile = [](const PlaneGraph& g) {
        std::vector<int> d;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    auto face_profile = [](const PlaneGraph& g) {
        std::vector<int> d;
        for (const auto& f : g.faces())
            d.push_back(f.length());
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_profile(a) != degree_profile(b) || face_profile(a) != face_profile(b))
        return false;
    if (mode == OuterFace::match && a.face(a.outer_face()).length() != b.face(b.outer_face()).length())
        return false;

    const DartId a0 = mode == OuterFace::match ? a.outer_dart() : 0;
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (DartId b0 = 0; b0 < b.num_darts(); ++b0) {
            if (mode == OuterFace::match) {
                const FaceId image = reflect ? b.face_of(PlaneGraph::twin(b0)) : b.face_of(b0);
                if (image != b.outer_face())
                    continue;
            }
            if (detail::extend_dart_map(a, b, a0, b0, reflect != 0))
                return true;
        }
    }
    return false;
}

} // namespace facetree
