#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "facetree/atrail.hpp"
#include "facetree/colorings.hpp"
#include "facetree/constructions.hpp"
#include "facetree/face_tree.hpp"
#include "facetree/fixtures.hpp"
#include "facetree/hamiltonian.hpp"
#include "facetree/parity.hpp"
#include "support/oracles.hpp"

using namespace facetree;
namespace fx = facetree::fixtures;

// ---------------------------------------------------------------------------------------------
// Hamiltonian cycles and paths

TEST_CASE("hamiltonian cycle counts match permutation enumeration", "[solvers]")
{
    for (const PlaneGraph& g : {fx::k4(), fx::cube(), fx::octahedron(), fx::triangular_prism(), fx::prism(5),
                                fx::hexagonal_prism(), fx::theta(), fx::cycle(6)})
        CHECK(count_hamiltonian_cycles(g.skeleton()) == oracle::count_hamiltonian_cycles(g.skeleton()));
    CHECK(count_hamiltonian_cycles(fx::cube().skeleton()) == 6);
    CHECK(count_hamiltonian_cycles(fx::k4().skeleton()) == 3);
}

TEST_CASE("the Petersen graph is not hamiltonian", "[solvers]")
{
    const Multigraph p = fx::petersen();
    CHECK_FALSE(find_hamiltonian_cycle(p).has_value());
    CHECK(oracle::count_hamiltonian_cycles(p) == 0);
    // Removing any vertex leaves a hamiltonian graph.
    Multigraph q(9);
    for (EdgeId e = 0; e < p.num_edges(); ++e)
        if (p.ends(e)[0] != 0 && p.ends(e)[1] != 0)
            q.add_edge(p.ends(e)[0] - 1, p.ends(e)[1] - 1);
    CHECK(find_hamiltonian_cycle(q).has_value());
}

TEST_CASE("every reported cycle verifies and constraints filter exactly", "[solvers]")
{
    const PlaneGraph g = fx::hexagonal_prism();
    std::vector<HamiltonianCycle> all;
    for_each_hamiltonian_cycle(g.skeleton(), {}, [&](const HamiltonianCycle& c) {
        CHECK(verify_hamiltonian_cycle(g.skeleton(), c));
        all.push_back(c);
        return true;
    });
    for (EdgeId f = 0; f < g.num_edges(); f += 5)
        for (EdgeId x = 1; x < g.num_edges(); x += 7) {
            if (f == x)
                continue;
            long expect = 0;
            for (const auto& c : all) {
                const bool has_f = std::count(c.edges.begin(), c.edges.end(), f) > 0;
                const bool has_x = std::count(c.edges.begin(), c.edges.end(), x) > 0;
                expect += has_f && !has_x;
            }
            CHECK(count_hamiltonian_cycles(g.skeleton(), {{f}, {x}}) == expect);
        }
}

TEST_CASE("hamiltonian path counts", "[solvers]")
{
    const PlaneGraph g = fx::cube();
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
            long n = for_each_hamiltonian_path(g.skeleton(), u, v, [&](const HamiltonianPath& p) {
                CHECK(verify_hamiltonian_path(g.skeleton(), p, u, v));
                return true;
            });
            CHECK(n == oracle::count_hamiltonian_paths(g.skeleton(), u, v));
        }
}

TEST_CASE("cycle sides partition the faces", "[solvers]")
{
    const PlaneGraph g = fx::cube();
    const auto c = find_hamiltonian_cycle(g.skeleton());
    REQUIRE(c);
    const auto inside = cycle_sides(g, c->edges);
    CHECK_FALSE(inside[g.outer_face()]);
    const auto boundary = region_boundary(g, inside);
    auto sorted = c->edges;
    std::sort(sorted.begin(), sorted.end());
    CHECK(boundary == sorted);
    const auto back = cycle_from_edges(g.skeleton(), boundary);
    REQUIRE(back);
    CHECK(verify_hamiltonian_cycle(g.skeleton(), *back));
}

// ---------------------------------------------------------------------------------------------
// A-trails

TEST_CASE("A-trail counts match transition-system enumeration", "[solvers]")
{
    std::vector<PlaneGraph> hs{fx::octahedron(), fx::bowtie(), fx::digon(), fx::cycle(4)};
    // Contractions of bipartite cubic graphs are eulerian.
    for (const PlaneGraph& g : {fx::cube(), fx::hexagonal_prism()}) {
        const FaceColoring c = face_3_coloring(g);
        for (int k = 1; k <= 3; ++k)
            hs.push_back(contract_factor(g, {c.faces_of(k)}).graph);
    }
    for (const PlaneGraph& h : hs) {
        CHECK(count_a_trails(h) == oracle::count_a_trails(h));
        for_each_a_trail(h, {}, [&](const ATrail& l) {
            CHECK(verify_a_trail(h, l));
            return true;
        });
    }
    CHECK(count_a_trails(fx::octahedron()) == 16);
}

TEST_CASE("non-separating A-trails on the octahedron", "[solvers]")
{
    const PlaneGraph o = fx::octahedron();
    ATrailOptions opt;
    opt.require_non_separating = true;
    CHECK(count_a_trails(o, opt) == oracle::count_a_trails(o, true));
    CHECK_THROWS_AS(count_a_trails(fx::cube(), opt), PreconditionError);
}

TEST_CASE("A-trail verifier rejects a non-A eulerian circuit", "[solvers]")
{
    const PlaneGraph o = fx::octahedron();
    const auto l = find_a_trail(o);
    REQUIRE(l);
    ATrail broken = *l;
    std::swap(broken.darts[0], broken.darts[1]);
    CHECK_FALSE(verify_a_trail(o, broken));
    CHECK(canonical_trail(*l) == canonical_trail(canonical_trail(*l)));
}

TEST_CASE("induced partition of an A-trail", "[solvers]")
{
    const PlaneGraph o = fx::octahedron();
    const FaceColoring c = face_2_coloring(o);
    for_each_a_trail(o, {}, [&](const ATrail& l) {
        const VertexPartition p = induced_partition(o, l, c);
        CHECK(p.v1.size() + p.v2.size() == 6);
        return true;
    });
}

// ---------------------------------------------------------------------------------------------
// Trees of faces

TEST_CASE("tree-of-faces counts match subset enumeration", "[solvers]")
{
    std::vector<PlaneGraph> hs{fx::octahedron(), fx::k4(), fx::cube(), fx::triangular_prism(), fx::theta(),
                               fx::digon(), dual(fx::prism(5)), fx::bowtie()};
    const PlaneGraph c = fx::cube();
    const FaceColoring col = face_3_coloring(c);
    hs.push_back(contract_factor(c, {col.faces_of(1)}).graph);
    for (const PlaneGraph& h : hs) {
        CHECK(count_face_trees(h) == oracle::count_quasi_trees(h));
        FaceTreeConstraints s;
        s.require_spanning = true;
        CHECK(count_face_trees(h, s) == oracle::count_quasi_trees(h, true));
        for_each_face_tree(h, {}, [&](const FaceTree& ft) {
            CHECK(verify_face_tree(h, ft));
            CHECK(oracle::is_quasi_tree(h, ft.faces, ft.proper));
            return true;
        });
    }
    CHECK(count_face_trees(fx::octahedron()) == 121);
}

TEST_CASE("tree-of-faces constraints", "[solvers]")
{
    const PlaneGraph h = dual(fx::prism(5));
    std::vector<FaceTree> all;
    for_each_face_tree(h, {}, [&](const FaceTree& ft) {
        all.push_back(ft);
        return true;
    });
    for (FaceId f = 0; f < h.num_faces(); ++f) {
        if (f == h.outer_face())
            continue;
        FaceTreeConstraints in, out;
        in.must_contain = {f};
        out.must_exclude = {f};
        long with = 0;
        for (const auto& ft : all)
            with += std::count(ft.faces.begin(), ft.faces.end(), f);
        CHECK(count_face_trees(h, in) == with);
        CHECK(count_face_trees(h, out) == static_cast<long>(all.size()) - with);
    }
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        FaceTreeConstraints p, q;
        p.fixed_proper = {v};
        q.fixed_quasi = {v};
        long proper = 0;
        for (const auto& ft : all)
            proper += std::count(ft.proper.begin(), ft.proper.end(), v);
        CHECK(count_face_trees(h, p) == proper);
        CHECK(count_face_trees(h, q) == static_cast<long>(all.size()) - proper);
    }
}

TEST_CASE("tree-of-faces verifier rejects cycles and outer faces", "[solvers]")
{
    const PlaneGraph o = fx::octahedron();
    std::vector<FaceId> bounded;
    for (FaceId f = 0; f < o.num_faces(); ++f)
        if (f != o.outer_face())
            bounded.push_back(f);
    CHECK_FALSE(verify_face_tree(o, {bounded, {0, 1, 2, 3, 4, 5}}));
    CHECK_FALSE(verify_face_tree(o, {{o.outer_face()}, {0, 1, 2}}));
    CHECK_FALSE(verify_face_tree(o, {{}, {}}));
}

// ---------------------------------------------------------------------------------------------
// Spanning tree parity

TEST_CASE("parity solver agrees with spanning-tree enumeration", "[solvers]")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        const int m = std::uniform_int_distribution<int>(n - 1, std::min(12, n * (n - 1) / 2 + 2))(rng);
        Multigraph g(n);
        // A random spanning path keeps the graph connected.
        for (int v = 1; v < n; ++v)
            g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
        while (g.num_edges() < m) {
            const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
            const int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
            if (a != b)
                g.add_edge(a, b);
        }
        std::vector<EdgeId> ids(m);
        std::iota(ids.begin(), ids.end(), 0);
        std::shuffle(ids.begin(), ids.end(), rng);
        const int k = std::uniform_int_distribution<int>(0, std::min(3, m / 2))(rng);
        ParityInstance p{g, {}};
        for (int i = 0; i < k; ++i)
            p.pairs.push_back({ids[2 * i], ids[2 * i + 1]});
        const auto t = solve_spanning_tree_parity(p);
        CHECK(t.has_value() == oracle::parity_tree_exists(p));
        if (t)
            CHECK(is_parity_tree(p, *t));
    }
}

TEST_CASE("parity instance validation", "[solvers]")
{
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    CHECK_THROWS_AS(solve_spanning_tree_parity({g, {{0, 1}, {1, 2}}}), InputError);
    CHECK_THROWS_AS(solve_spanning_tree_parity({g, {{0, 7}}}), InputError);
    CHECK(solve_spanning_tree_parity({g, {{0, 1}}}).has_value());
}

TEST_CASE("trees of digons and triangles via parity", "[solvers]")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const PlaneGraph h = oracle::random_digon_triangle_graph(rng, std::uniform_int_distribution<int>(3, 6)(rng),
                                                                 std::uniform_int_distribution<int>(0, 3)(rng));
        std::vector<FaceId> d;
        for (FaceId f = 0; f < h.num_faces(); ++f)
            if (f != h.outer_face() && std::uniform_int_distribution<int>(0, 3)(rng) > 0)
                d.push_back(f);
        FaceTreeConstraints c;
        c.require_spanning = true;
        for (FaceId f = 0; f < h.num_faces(); ++f)
            if (std::find(d.begin(), d.end(), f) == d.end())
                c.must_exclude.push_back(f);
        const auto via = face_tree_via_parity(h, d);
        CHECK(via.has_value() == find_face_tree(h, c).has_value());
        if (via)
            CHECK(verify_face_tree(h, *via));
    }
    CHECK_THROWS_AS(face_tree_via_parity(fx::cube(), {1}), PreconditionError);
    CHECK_THROWS_AS(face_tree_via_parity(fx::octahedron(), {fx::octahedron().outer_face()}), InputError);
}
