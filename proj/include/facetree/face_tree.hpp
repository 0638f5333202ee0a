#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "facetree/constructions.hpp"
#include "facetree/error.hpp"
#include "facetree/plane_graph.hpp"

namespace facetree {

/// A (quasi) spanning tree of faces: bounded faces T and proper vertices U. Vertices outside U
/// are quasi. Both lists are kept sorted.
struct FaceTree {
    std::vector<FaceId> faces;
    std::vector<Vertex> proper;

    bool operator==(const FaceTree&) const = default;
};

inline bool is_spanning(const PlaneGraph& h, const FaceTree& ft)
{
    return static_cast<int>(ft.proper.size()) == h.num_vertices();
}

/// Edges of H_T, the union of the boundaries of the faces in T, sorted.
inline std::vector<EdgeId> face_tree_edges(const PlaneGraph& h, const FaceTree& ft)
{
    std::set<EdgeId> out;
    for (FaceId f : ft.faces)
        for (EdgeId e : h.face_edges(f))
            out.insert(e);
    return {out.begin(), out.end()};
}

/// Checks the quasi spanning tree conditions directly: faces distinct and bounded, every quasi
/// vertex on exactly half its degree of faces of T, R(U, T) a tree, and every vertex of h on
/// some face of T (a single vertex with T empty is the vacuous tree).
inline Verdict verify_face_tree(const PlaneGraph& h, const FaceTree& ft)
{
    const int n = h.num_vertices();
    std::vector<char> in_t(h.num_faces(), 0), proper(n, 0);
    for (FaceId f : ft.faces) {
        if (f < 0 || f >= h.num_faces())
            return Verdict::fail("unknown face " + std::to_string(f));
        if (f == h.outer_face())
            return Verdict::fail("face " + std::to_string(f) + " is the outer face");
        if (in_t[f])
            return Verdict::fail("face " + std::to_string(f) + " listed twice");
        in_t[f] = 1;
    }
    for (Vertex v : ft.proper) {
        if (v < 0 || v >= n)
            return Verdict::fail("unknown vertex " + std::to_string(v));
        if (proper[v])
            return Verdict::fail("vertex " + std::to_string(v) + " listed twice");
        proper[v] = 1;
    }
    std::vector<int> on(n, 0);
    for (FaceId f : ft.faces) {
        std::set<Vertex> vs;
        for (Vertex x : h.face_vertices(f))
            vs.insert(x);
        for (Vertex x : vs)
            ++on[x];
    }
    for (Vertex x = 0; x < n; ++x) {
        if (proper[x]) {
            if (on[x] == 0 && !(ft.faces.empty() && n == 1))
                return Verdict::fail("proper vertex " + std::to_string(x) + " lies on no face of T");
        } else if (2 * on[x] != h.degree(x)) {
            return Verdict::fail("quasi vertex " + std::to_string(x) + " lies on " + std::to_string(on[x]) +
                                 " faces of T, degree " + std::to_string(h.degree(x)));
        } else if (on[x] == 0) {
            return Verdict::fail("vertex " + std::to_string(x) + " lies on no face of T");
        }
    }
    const RestrictedRadial r = restricted_radial(h, ft.proper, ft.faces);
    if (!r.is_tree())
        return Verdict::fail("restricted radial graph R(U, T) is not a tree");
    return Verdict::pass();
}

struct FaceTreeConstraints {
    bool require_spanning = false;
    std::vector<FaceId> must_contain;
    std::vector<FaceId> must_exclude;
    std::vector<Vertex> fixed_proper;
    std::vector<Vertex> fixed_quasi;
};

namespace detail {

// Grows R(U, T) one face at a time. The lowest face of T is chosen first; afterwards the
// candidate is always the lowest undecided face touching exactly one proper vertex of the tree,
// which is either included or excluded. Faces touching two proper vertices would close a
// cycle and are dropped. Vertex status (proper or quasi) is decided when a vertex is first
// covered.
class FaceTreeSearch {
public:
    FaceTreeSearch(const PlaneGraph& h, const FaceTreeConstraints& c)
        : h_(h), c_(c), n_(h.num_vertices()), F_(h.num_faces()), fstate_(F_, 0), vstate_(n_, 0), count_(n_, 0),
          avail_(n_, 0), must_(F_, 0), fix_(n_, 0), face_vs_(F_), faces_at_(n_)
    {
        for (FaceId f : c.must_exclude) {
            check_face(f);
            fstate_[f] = 2;
        }
        for (FaceId f : c.must_contain) {
            check_face(f);
            if (f == h.outer_face())
                throw InputError("the outer face cannot belong to a tree of faces");
            if (fstate_[f] == 2)
                throw InputError("face " + std::to_string(f) + " is both required and excluded");
            must_[f] = 1;
        }
        for (Vertex v : c.fixed_proper) {
            check_vertex(v);
            fix_[v] = 1;
        }
        for (Vertex v : c.fixed_quasi) {
            check_vertex(v);
            if (fix_[v] == 1)
                throw InputError("vertex " + std::to_string(v) + " fixed both proper and quasi");
            if (c.require_spanning)
                throw InputError("a spanning tree of faces has no quasi vertices");
            fix_[v] = 2;
        }
        if (c.require_spanning)
            for (Vertex v = 0; v < n_; ++v)
                fix_[v] = 1;
        fstate_[h.outer_face()] = 2;
        for (FaceId f = 0; f < F_; ++f) {
            std::set<Vertex> vs;
            for (Vertex x : h.face_vertices(f))
                vs.insert(x);
            face_vs_[f].assign(vs.begin(), vs.end());
            for (Vertex x : vs)
                faces_at_[x].push_back(f);
        }
        for (FaceId f = 0; f < F_; ++f)
            if (fstate_[f] == 0)
                for (Vertex x : face_vs_[f])
                    ++avail_[x];
    }

    template <class Visit>
    void run(Visit&& visit)
    {
        if (n_ == 1) {
            if (c_.must_contain.empty() && fix_[0] != 2)
                visit(FaceTree{{}, {0}});
            return;
        }
        for (FaceId f0 = 0; f0 < F_; ++f0) {
            if (fstate_[f0] != 0)
                continue;
            if (!include(f0, true, visit))
                return;
            // f0 is not the lowest face of any later tree.
            if (must_[f0])
                return;
            set_face(f0, 2);
        }
    }

private:
    void check_face(FaceId f) const
    {
        if (f < 0 || f >= F_)
            throw InputError("unknown face " + std::to_string(f));
    }
    void check_vertex(Vertex v) const
    {
        if (v < 0 || v >= n_)
            throw InputError("unknown vertex " + std::to_string(v));
    }

    int half(Vertex x) const { return h_.degree(x) / 2; }

    // Face state changes keep avail_ (undecided-or-included faces at x) current; undo logs them.
    void set_face(FaceId f, int s)
    {
        const int old = fstate_[f];
        if (old == s)
            return;
        if (old != 2 && s == 2)
            for (Vertex x : face_vs_[f])
                --avail_[x];
        if (old == 2 && s != 2)
            for (Vertex x : face_vs_[f])
                ++avail_[x];
        if (s == 1)
            for (Vertex x : face_vs_[f])
                ++count_[x];
        if (old == 1)
            for (Vertex x : face_vs_[f])
                --count_[x];
        fstate_[f] = s;
        log_.push_back({f, old});
    }

    void undo_to(std::size_t mark)
    {
        while (log_.size() > mark) {
            const auto [f, old] = log_.back();
            log_.pop_back();
            const int s = fstate_[f];
            if (s == 1)
                for (Vertex x : face_vs_[f])
                    --count_[x];
            if (s == 2 && old != 2)
                for (Vertex x : face_vs_[f])
                    ++avail_[x];
            if (s != 2 && old == 2)
                for (Vertex x : face_vs_[f])
                    --avail_[x];
            if (old == 1)
                for (Vertex x : face_vs_[f])
                    ++count_[x];
            fstate_[f] = old;
        }
    }

    bool feasible() const
    {
        for (FaceId f = 0; f < F_; ++f)
            if (must_[f] && fstate_[f] == 2)
                return false;
        for (Vertex x = 0; x < n_; ++x) {
            if (avail_[x] == 0)
                return false;
            if (vstate_[x] == 2 && (count_[x] > half(x) || avail_[x] < half(x)))
                return false;
            if (vstate_[x] == 0 && fix_[x] == 2 && avail_[x] < half(x))
                return false;
        }
        return true;
    }

    int proper_touch(FaceId f) const
    {
        int k = 0;
        for (Vertex x : face_vs_[f])
            k += vstate_[x] == 1;
        return k;
    }

    template <class Visit>
    bool include(FaceId f, bool root, Visit& visit)
    {
        const std::size_t mark = log_.size();
        set_face(f, 1);
        std::vector<Vertex> fresh;
        bool ok = true;
        for (Vertex x : face_vs_[f]) {
            if (vstate_[x] == 0)
                fresh.push_back(x);
            else if (vstate_[x] == 2 && count_[x] > half(x))
                ok = false;
        }
        if (!root && proper_touch(f) != 1)
            ok = false;
        bool go = true;
        if (ok)
            go = assign(fresh, 0, visit);
        undo_to(mark);
        return go;
    }

    template <class Visit>
    bool assign(const std::vector<Vertex>& fresh, std::size_t i, Visit& visit)
    {
        if (i == fresh.size())
            return feasible() ? grow(visit) : true;
        const Vertex x = fresh[i];
        for (int s = 1; s <= 2; ++s) {
            if (fix_[x] && fix_[x] != s)
                continue;
            if (s == 2 && (h_.degree(x) % 2 || count_[x] > half(x)))
                continue;
            vstate_[x] = s;
            const bool go = assign(fresh, i + 1, visit);
            vstate_[x] = 0;
            if (!go)
                return false;
        }
        return true;
    }

    template <class Visit>
    bool grow(Visit& visit)
    {
        const std::size_t mark = log_.size();
        // Drop faces that can no longer join: two proper vertices or a saturated quasi vertex.
        FaceId cand = -1;
        for (FaceId f = 0; f < F_; ++f) {
            if (fstate_[f] != 0)
                continue;
            const int p = proper_touch(f);
            bool dead = p >= 2;
            for (Vertex x : face_vs_[f])
                dead = dead || (vstate_[x] == 2 && count_[x] >= half(x));
            if (dead)
                set_face(f, 2);
            else if (p == 1 && cand < 0)
                cand = f;
        }
        bool go = true;
        if (!feasible()) {
            go = true;
        } else if (cand < 0) {
            go = finish(visit);
        } else {
            go = include(cand, false, visit);
            if (go && !must_[cand]) {
                const std::size_t m2 = log_.size();
                set_face(cand, 2);
                if (feasible())
                    go = grow(visit);
                undo_to(m2);
            }
        }
        undo_to(mark);
        return go;
    }

    template <class Visit>
    bool finish(Visit& visit)
    {
        FaceTree ft;
        for (Vertex x = 0; x < n_; ++x) {
            if (vstate_[x] == 0)
                return true;
            if (vstate_[x] == 2 && count_[x] != half(x))
                return true;
            if (vstate_[x] == 1)
                ft.proper.push_back(x);
        }
        for (FaceId f = 0; f < F_; ++f) {
            if (must_[f] && fstate_[f] != 1)
                return true;
            if (fstate_[f] == 1)
                ft.faces.push_back(f);
        }
        return static_cast<bool>(visit(ft));
    }

    const PlaneGraph& h_;
    const FaceTreeConstraints& c_;
    int n_, F_;
    std::vector<int> fstate_, vstate_, count_, avail_;
    std::vector<char> must_, fix_;
    std::vector<std::vector<Vertex>> face_vs_;
    std::vector<std::vector<FaceId>> faces_at_;
    std::vector<std::pair<FaceId, int>> log_;
};

} // namespace detail

/// Every (quasi) spanning tree of faces honouring the constraints, each exactly once.
template <class Visit>
void for_each_face_tree(const PlaneGraph& h, const FaceTreeConstraints& c, Visit&& visit)
{
    detail::FaceTreeSearch search(h, c);
    search.run(visit);
}

inline std::optional<FaceTree> find_face_tree(const PlaneGraph& h, const FaceTreeConstraints& c = {})
{
    std::optional<FaceTree> out;
    for_each_face_tree(h, c, [&](const FaceTree& ft) {
        out = ft;
        return false;
    });
    return out;
}

inline long count_face_trees(const PlaneGraph& h, const FaceTreeConstraints& c = {})
{
    long n = 0;
    for_each_face_tree(h, c, [&](const FaceTree&) {
        ++n;
        return true;
    });
    return n;
}

} // namespace facetree
