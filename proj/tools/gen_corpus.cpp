// Generates the cubic polyhedra used as the test corpus. Every 3-connected cubic plane graph
// arises from K4 by repeatedly joining the midpoints of two edges of one face, so the search
// grows each level from the previous one and keeps one representative per isomorphism class
// (mirror images identified).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <vector>

#include "facetree/fixtures.hpp"
#include "facetree/io.hpp"
#include "facetree/reductions.hpp"

using namespace facetree;

namespace {

using Code = std::vector<std::uint8_t>;

// BFS code from dart d0, walking rotations counterclockwise (dir = 1) or clockwise (dir = -1).
// Returns false as soon as the code exceeds `best`.
bool code_from(const PlaneGraph& g, DartId d0, int dir, Code& out, const Code* best)
{
    const int n = g.num_vertices();
    std::vector<int> label(n, 0);
    std::vector<DartId> entry(n, -1);
    std::vector<Vertex> order{g.tail(d0)};
    label[g.tail(d0)] = 1;
    entry[g.tail(d0)] = d0;
    int next = 2;
    out.clear();
    bool equal_so_far = best != nullptr;
    auto emit = [&](std::uint8_t x) {
        if (equal_so_far) {
            const std::uint8_t b = (*best)[out.size()];
            if (x > b)
                return false;
            if (x < b)
                equal_so_far = false;
        }
        out.push_back(x);
        return true;
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        const int k = g.degree(v);
        const int p = g.position(entry[v]);
        for (int j = 0; j < k; ++j) {
            const DartId d = g.rotation(v)[((p + dir * j) % k + k) % k];
            const Vertex w = g.head(d);
            if (!label[w]) {
                label[w] = next++;
                entry[w] = PlaneGraph::twin(d);
                order.push_back(w);
            }
            if (!emit(static_cast<std::uint8_t>(label[w])))
                return false;
        }
        if (!emit(0))
            return false;
    }
    return true;
}

Code canonical_code(const PlaneGraph& g)
{
    Code best, cur;
    bool have = false;
    for (DartId d = 0; d < g.num_darts(); ++d)
        for (int dir : {1, -1})
            if (code_from(g, d, dir, cur, have ? &best : nullptr) && (!have || cur < best)) {
                best = cur;
                have = true;
            }
    return best;
}

// A cubic plane graph is 3-connected iff no face meets itself and no two faces share two edges.
bool three_connected_cubic(const PlaneGraph& g)
{
    std::set<std::pair<FaceId, FaceId>> seen;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        FaceId a = g.face_of(2 * e), b = g.face_of(2 * e + 1);
        if (a == b)
            return false;
        if (a > b)
            std::swap(a, b);
        if (!seen.insert({a, b}).second)
            return false;
    }
    return true;
}

// Joins the midpoints of the edges of darts d1 and d2, both with face f on their right.
PlaneGraph insert_edge(const PlaneGraph& g, DartId d1, DartId d2)
{
    detail::LabelledRotation r = detail::LabelledRotation::of(g);
    const int link = r.fresh_label();
    for (DartId d : {d1, d2}) {
        const EdgeId e = PlaneGraph::edge_of(d);
        const Vertex x = g.tail(d), y = g.head(d);
        const Vertex m = r.add_vertex();
        const int far = r.fresh_label();
        // Label e stays on the tail side, `far` is the new head side.
        r.adj[y][r.find(y, e)] = {m, far};
        r.adj[x][r.find(x, e)].first = m;
        r.adj[m] = {{y, far}, {x, e}, {-1, link}};
    }
    const Vertex m1 = g.num_vertices(), m2 = m1 + 1;
    r.adj[m1][2].first = m2;
    r.adj[m2][2].first = m1;
    return r.build(m1, link);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generate cubic polyhedra in planar_code"};
    int max_n = 14, bip_max = 20;
    std::string all_out, bip_out;
    app.add_option("--max", max_n, "largest vertex count written to --all");
    app.add_option("--bipartite-max", bip_max, "largest vertex count written to --bipartite");
    app.add_option("--all", all_out, "output file for all cubic polyhedra");
    app.add_option("--bipartite", bip_out, "output file for bipartite cubic polyhedra");
    CLI11_PARSE(app, argc, argv);

    const int top = std::max(max_n, bip_max);
    std::vector<PlaneGraph> all, bip;
    std::vector<PlaneGraph> level{fixtures::k4()};
    for (int n = 4; n <= top; n += 2) {
        std::sort(level.begin(), level.end(),
                  [](const PlaneGraph& a, const PlaneGraph& b) { return canonical_code(a) < canonical_code(b); });
        long nb = 0;
        for (const PlaneGraph& g : level) {
            if (n <= max_n)
                all.push_back(g);
            if (n <= bip_max && is_bipartite(g.skeleton())) {
                bip.push_back(g);
                ++nb;
            }
        }
        std::cout << "n=" << n << " cubic=" << level.size() << " bipartite=" << nb << std::endl;
        if (n == top)
            break;
        std::set<Code> seen;
        std::vector<PlaneGraph> next;
        for (const PlaneGraph& g : level)
            for (const Face& f : g.faces())
                for (int i = 0; i < f.length(); ++i)
                    for (int j = i + 1; j < f.length(); ++j) {
                        PlaneGraph h = insert_edge(g, f.boundary[i], f.boundary[j]);
                        if (!three_connected_cubic(h))
                            continue;
                        if (seen.insert(canonical_code(h)).second)
                            next.push_back(std::move(h));
                    }
        level = std::move(next);
    }
    auto write = [](const std::string& path, const std::vector<PlaneGraph>& gs) {
        if (path.empty())
            return;
        std::ofstream out(path, std::ios::binary);
        out << write_planar_code(gs);
    };
    write(all_out, all);
    write(bip_out, bip);
    return 0;
}
