#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "facetree/colorings.hpp"
#include "facetree/error.hpp"
#include "facetree/plane_graph.hpp"

namespace facetree {

/// Closed trail given as darts; head(darts[i]) == tail(darts[i + 1]) cyclically.
struct ATrail {
    std::vector<DartId> darts;

    bool operator==(const ATrail&) const = default;
};

namespace detail {

// Darts of the edge subset around each vertex, in rotation order; sub_pos[d] is the index of d there.
struct SubRotation {
    std::vector<std::vector<DartId>> around;
    std::vector<int> sub_pos;

    SubRotation(const PlaneGraph& h, const std::vector<char>& in_subset)
        : around(h.num_vertices()), sub_pos(h.num_darts(), -1)
    {
        for (Vertex v = 0; v < h.num_vertices(); ++v)
            for (DartId d : h.rotation(v))
                if (in_subset[PlaneGraph::edge_of(d)]) {
                    sub_pos[d] = static_cast<int>(around[v].size());
                    around[v].push_back(d);
                }
    }
};

inline std::vector<char> edge_mask(const PlaneGraph& h, const std::vector<EdgeId>* subset)
{
    std::vector<char> mask(h.num_edges(), subset ? 0 : 1);
    if (subset)
        for (EdgeId e : *subset) {
            if (e < 0 || e >= h.num_edges())
                throw InputError("unknown edge " + std::to_string(e));
            mask[e] = 1;
        }
    return mask;
}

} // namespace detail

/// Checks that l is an A-trail of h, or of the subgraph formed by `subset` with its inherited
/// rotation: every subset edge used once, and each pass through v enters and leaves along darts
/// that are neighbours in the rotation of v.
inline Verdict verify_a_trail(const PlaneGraph& h, const ATrail& l, const std::vector<EdgeId>* subset = nullptr)
{
    const auto mask = detail::edge_mask(h, subset);
    const int m = static_cast<int>(std::count(mask.begin(), mask.end(), 1));
    if (static_cast<int>(l.darts.size()) != m)
        return Verdict::fail("trail has " + std::to_string(l.darts.size()) + " darts for " + std::to_string(m) +
                             " edges");
    if (m == 0)
        return Verdict::pass();
    std::vector<char> used(h.num_edges(), 0);
    for (DartId d : l.darts) {
        if (d < 0 || d >= h.num_darts())
            return Verdict::fail("dart " + std::to_string(d) + " out of range");
        const EdgeId e = PlaneGraph::edge_of(d);
        if (!mask[e])
            return Verdict::fail("edge " + std::to_string(e) + " is outside the host");
        if (used[e])
            return Verdict::fail("edge " + std::to_string(e) + " used twice");
        used[e] = 1;
    }
    const detail::SubRotation sub(h, mask);
    for (int i = 0; i < m; ++i) {
        const DartId in = PlaneGraph::twin(l.darts[i]);
        const DartId out = l.darts[(i + 1) % m];
        const Vertex v = h.tail(out);
        if (h.tail(in) != v)
            return Verdict::fail("trail breaks between positions " + std::to_string(i) + " and " +
                                 std::to_string((i + 1) % m));
        const int k = static_cast<int>(sub.around[v].size());
        const int gap = ((sub.sub_pos[out] - sub.sub_pos[in]) % k + k) % k;
        if (gap != 1 && gap != k - 1)
            return Verdict::fail("transition at vertex " + std::to_string(v) + " (position " + std::to_string(i) +
                                 ") is not between rotation neighbours");
    }
    return Verdict::pass();
}

/// Rotates and orients a closed trail so it starts with the smallest dart over both directions.
inline ATrail canonical_trail(const ATrail& l)
{
    if (l.darts.empty())
        return l;
    std::vector<DartId> rev;
    for (auto it = l.darts.rbegin(); it != l.darts.rend(); ++it)
        rev.push_back(PlaneGraph::twin(*it));
    auto best = [](std::vector<DartId> s) {
        std::rotate(s.begin(), std::min_element(s.begin(), s.end()), s.end());
        return s;
    };
    auto a = best(l.darts), b = best(rev);
    return {a.front() <= b.front() ? a : b};
}

struct ATrailOptions {
    bool require_non_separating = false;
};

namespace detail {

// Transition-system search. Each vertex of degree 2k picks one of two ways to pair the darts
// around it with their rotation neighbours: state s pairs positions (p, p + 1) with p = s mod 2.
class ATrailSearch {
public:
    ATrailSearch(const PlaneGraph& h, const std::vector<char>& mask, ATrailOptions opt)
        : h_(h), mask_(mask), opt_(opt), sub_(h, mask), state_(h.num_vertices(), -1)
    {
        for (Vertex v = 0; v < h.num_vertices(); ++v)
            if (sub_.around[v].size() % 2)
                throw PreconditionError("A-trail needs even degrees; vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(sub_.around[v].size()));
        edges_ = static_cast<int>(std::count(mask.begin(), mask.end(), 1));
        // Vertex order: breadth first over the subgraph, from the tail of the smallest subset edge.
        std::vector<char> seen(h.num_vertices(), 0);
        for (EdgeId e = 0; e < h.num_edges() && order_.empty(); ++e)
            if (mask[e]) {
                std::queue<Vertex> q;
                q.push(h.tail(2 * e));
                seen[h.tail(2 * e)] = 1;
                while (!q.empty()) {
                    const Vertex v = q.front();
                    q.pop();
                    order_.push_back(v);
                    for (DartId d : sub_.around[v])
                        if (!seen[h.head(d)]) {
                            seen[h.head(d)] = 1;
                            q.push(h.head(d));
                        }
                }
            }
        for (Vertex v = 0; v < h.num_vertices(); ++v)
            if (!sub_.around[v].empty() && !seen[v])
                connected_ = false;
    }

    template <class Visit>
    void run(Visit&& visit)
    {
        if (!connected_)
            return;
        if (edges_ == 0) {
            visit(ATrail{});
            return;
        }
        dfs(0, visit);
    }

private:
    int partner(Vertex v, int p) const
    {
        const int k = static_cast<int>(sub_.around[v].size());
        const int s = state_[v];
        return ((p - s) % 2 + 2) % 2 == 0 ? (p + 1) % k : (p + k - 1) % k;
    }

    // Dart leaving head(d) after arriving along d.
    DartId next_dart(DartId d) const
    {
        const DartId back = PlaneGraph::twin(d);
        const Vertex v = h_.tail(back);
        return sub_.around[v][partner(v, sub_.sub_pos[back])];
    }

    // Pruning: a closed sub-trail made only of decided vertices that misses some edge.
    bool premature_circuit(int decided) const
    {
        std::vector<char> done(h_.num_vertices(), 0);
        for (int i = 0; i < decided; ++i)
            done[order_[i]] = 1;
        std::vector<char> seen(h_.num_darts(), 0);
        for (int i = 0; i < decided; ++i)
            for (DartId start : sub_.around[order_[i]]) {
                if (seen[start])
                    continue;
                // Follow the trail forward from start while heads are decided.
                int len = 0;
                DartId d = start;
                bool closed = true;
                while (true) {
                    seen[d] = 1;
                    ++len;
                    if (!done[h_.head(d)]) {
                        closed = false;
                        break;
                    }
                    d = next_dart(d);
                    if (d == start)
                        break;
                    if (seen[d]) {
                        closed = false;
                        break;
                    }
                }
                if (closed && len < edges_)
                    return true;
            }
        return false;
    }

    bool non_separating() const
    {
        for (const Face& f : h_.faces()) {
            bool pinched = false;
            for (DartId d : f.boundary) {
                // Corner of f at tail(d) lies between next_cw(d) and d.
                const Vertex v = h_.tail(d);
                const int p = sub_.sub_pos[d];
                const int k = static_cast<int>(sub_.around[v].size());
                if (partner(v, p) == (p + k - 1) % k) {
                    pinched = true;
                    break;
                }
            }
            if (!pinched)
                return false;
        }
        return true;
    }

    ATrail extract() const
    {
        ATrail l;
        DartId start = -1;
        for (EdgeId e = 0; e < h_.num_edges() && start < 0; ++e)
            if (mask_[e])
                start = 2 * e;
        DartId d = start;
        do {
            l.darts.push_back(d);
            d = next_dart(d);
        } while (d != start);
        return l;
    }

    template <class Visit>
    bool dfs(int i, Visit& visit)
    {
        if (i == static_cast<int>(order_.size())) {
            if (opt_.require_non_separating && !non_separating())
                return true;
            ATrail l = extract();
            if (static_cast<int>(l.darts.size()) != edges_)
                return true;
            return static_cast<bool>(visit(l));
        }
        const Vertex v = order_[i];
        const int states = sub_.around[v].size() == 2 ? 1 : 2;
        for (int s = 0; s < states; ++s) {
            state_[v] = s;
            if (!premature_circuit(i + 1) && !dfs(i + 1, visit)) {
                state_[v] = -1;
                return false;
            }
        }
        state_[v] = -1;
        return true;
    }

    const PlaneGraph& h_;
    const std::vector<char>& mask_;
    ATrailOptions opt_;
    SubRotation sub_;
    std::vector<int> state_;
    std::vector<Vertex> order_;
    int edges_ = 0;
    bool connected_ = true;
};

inline void require_triangulation(const PlaneGraph& h)
{
    for (const Face& f : h.faces())
        if (f.length() != 3)
            throw PreconditionError("non-separating A-trails are defined on triangulations; face " +
                                    std::to_string(f.id) + " has length " + std::to_string(f.length()));
}

} // namespace detail

/// Every A-trail of h (or of the edge subset), each once, starting with the smallest dart of the
/// smallest edge. Returns false if visit stopped the enumeration.
template <class Visit>
void for_each_a_trail(const PlaneGraph& h, ATrailOptions opt, Visit&& visit, const std::vector<EdgeId>* subset = nullptr)
{
    if (opt.require_non_separating)
        detail::require_triangulation(h);
    const auto mask = detail::edge_mask(h, subset);
    detail::ATrailSearch search(h, mask, opt);
    search.run(visit);
}

inline std::optional<ATrail> find_a_trail(const PlaneGraph& h, ATrailOptions opt = {},
                                          const std::vector<EdgeId>* subset = nullptr)
{
    std::optional<ATrail> out;
    for_each_a_trail(
        h, opt,
        [&](const ATrail& l) {
            out = l;
            return false;
        },
        subset);
    return out;
}

inline long count_a_trails(const PlaneGraph& h, ATrailOptions opt = {}, const std::vector<EdgeId>* subset = nullptr)
{
    long n = 0;
    for_each_a_trail(
        h, opt,
        [&](const ATrail&) {
            ++n;
            return true;
        },
        subset);
    return n;
}

struct VertexPartition {
    std::vector<Vertex> v1;
    std::vector<Vertex> v2;
};

/// Vertex partition induced by an A-trail and a 2-face-colouring: v lands in V_i when the trail
/// pinches v at a corner lying in a face of colour 3 - i. A vertex of degree 2 is pinched at both
/// of its corners and is put in V1. Vertices the trail does not reach are left out.
inline VertexPartition induced_partition(const PlaneGraph& h, const ATrail& l, const FaceColoring& c)
{
    if (c.palette != 2 || static_cast<int>(c.color.size()) != h.num_faces())
        throw InputError("induced partition needs a 2-face-colouring of the host");
    std::vector<int> cls(h.num_vertices(), 0);
    const int m = static_cast<int>(l.darts.size());
    for (int i = 0; i < m; ++i) {
        const DartId in = PlaneGraph::twin(l.darts[i]);
        const DartId out = l.darts[(i + 1) % m];
        const Vertex v = h.tail(out);
        if (h.tail(in) != v)
            throw InputError("not a closed trail: break at position " + std::to_string(i));
        const int k = h.degree(v);
        int which;
        if (k == 2) {
            which = 1;
        } else {
            const int p = h.position(in), q = h.position(out);
            DartId right;
            if (q == (p + 1) % k)
                right = out;
            else if (p == (q + 1) % k)
                right = in;
            else
                throw InputError("not an A-trail: transition at vertex " + std::to_string(v) +
                                 " skips rotation neighbours");
            which = 3 - c.color[h.face_of(right)];
        }
        if (cls[v] && cls[v] != which)
            throw InputError("not an A-trail: vertex " + std::to_string(v) + " is pinched in faces of both colours");
        cls[v] = which;
    }
    VertexPartition out;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        if (cls[v] == 1)
            out.v1.push_back(v);
        else if (cls[v] == 2)
            out.v2.push_back(v);
    }
    return out;
}

} // namespace facetree
