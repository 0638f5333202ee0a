#include <catch_amalgamated.hpp>

#include "facetree/equivalences.hpp"
#include "facetree/fixtures.hpp"
#include "facetree/reductions.hpp"
#include "support/oracles.hpp"

using namespace facetree;
namespace fx = facetree::fixtures;

namespace {

std::vector<PlaneGraph> small_cubic()
{
    return {fx::k4(), fx::triangular_prism(), fx::cube(), fx::prism(5)};
}

// Two cubic graphs with edge a removed from one and edge b from the other, joined by two
// crossing edges: a 2-edge cut.
Multigraph join_across(const Multigraph& x, EdgeId a, const Multigraph& y, EdgeId b)
{
    const int n = x.num_vertices();
    Multigraph r(n + y.num_vertices());
    for (EdgeId e = 0; e < x.num_edges(); ++e)
        if (e != a)
            r.add_edge(x.ends(e)[0], x.ends(e)[1]);
    for (EdgeId e = 0; e < y.num_edges(); ++e)
        if (e != b)
            r.add_edge(n + y.ends(e)[0], n + y.ends(e)[1]);
    r.add_edge(x.ends(a)[0], n + y.ends(b)[0]);
    r.add_edge(x.ends(a)[1], n + y.ends(b)[1]);
    return r;
}

} // namespace

TEST_CASE("edge deletion keeps the embedding", "[reductions]")
{
    const PlaneGraph g = fx::cube();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const EdgeDeletion d = delete_edge(g, e);
        CHECK(d.graph.num_vertices() == 8);
        CHECK(d.graph.num_edges() == 11);
        CHECK(d.graph.num_faces() == 5);
        CHECK(std::count(d.edge_origin.begin(), d.edge_origin.end(), e) == 0);
    }
}

TEST_CASE("the bipartite cubic instance built from an edge", "[reductions]")
{
    for (const PlaneGraph& g0 : small_cubic())
        for (EdgeId e = 0; e < g0.num_edges(); e += 4) {
            const Theorem4Instance inst = build_theorem4(g0, e);
            const int E = inst.g0_prime.num_edges();
            CHECK(E == g0.num_edges() - 1);
            // h: radial graph with every edge doubled, so 4E edges and 3E faces.
            CHECK(inst.h.num_edges() == 4 * E);
            CHECK(inst.h.num_faces() == 3 * E);
            CHECK(verify_face_coloring(inst.h, inst.h_coloring));
            CHECK(inst.g.skeleton().is_regular(3));
            CHECK(is_bipartite(inst.g.skeleton()));
            CHECK(inst.g.num_vertices() == 8 * E);
            CHECK(verify_face_coloring(inst.g, inst.coloring));
            CHECK(inst.coloring.palette == 3);
        }
    CHECK_THROWS(build_theorem4(fx::cube(), 99));
}

TEST_CASE("paths of the deleted-edge graph match trees in the instance", "[reductions]")
{
    for (const PlaneGraph& g0 : small_cubic())
        for (EdgeId e = 0; e < 3; ++e) {
            const Theorem4Instance inst = build_theorem4(g0, e);
            const Claim3Report rep = certify_claim3(inst);
            CHECK(rep.ok());
            CHECK(rep.counterexamples == 0);
            // Independent count of hamiltonian u-v paths.
            CHECK(rep.paths == oracle::count_hamiltonian_paths(inst.g0_prime.skeleton(), inst.u, inst.v));
            CHECK(rep.trees == rep.paths);
        }
    CHECK_THROWS_AS(certify_claim3(build_theorem4(fx::hexagonal_prism(), 0), 10), ScaleError);
}

TEST_CASE("contracting the 2-faces gives an 8-regular host", "[reductions]")
{
    for (const PlaneGraph& g0 : small_cubic()) {
        const Theorem4Instance inst = build_theorem4(g0, 0);
        const Contraction c = corollary3_contract(inst);
        CHECK(c.graph.skeleton().is_regular(8));
        CHECK(c.graph.num_vertices() == inst.g0_prime.num_edges());
        const bool trail = find_a_trail(c.graph).has_value();
        const bool tree = find_face_tree(inst.h, theorem4_tree_constraints(inst)).has_value();
        const bool path = oracle::count_hamiltonian_paths(inst.g0_prime.skeleton(), inst.u, inst.v) > 0;
        CHECK(trail == tree);
        CHECK(tree == path);
    }
}

TEST_CASE("splitting digons gives triangles, digons and octagons", "[reductions]")
{
    for (const PlaneGraph& g0 : small_cubic()) {
        const Theorem4Instance inst = build_theorem4(g0, 1);
        const Corollary4 c = corollary4_split(inst);
        const int E = inst.g0_prime.num_edges();
        int tri = 0, dig = 0, oct = 0, other = 0;
        for (const Face& f : c.h0.faces())
            (f.length() == 3 ? tri : f.length() == 2 ? dig : f.length() == 8 ? oct : other)++;
        CHECK(tri == 4 * E);
        CHECK(dig == 2 * E);
        CHECK(oct == E);
        CHECK(other == 0);
        CHECK(verify_face_coloring(c.h0, c.coloring));
        FaceTreeConstraints spanning;
        spanning.require_spanning = true;
        CHECK(find_face_tree(c.h0, spanning).has_value() ==
              find_face_tree(inst.h, theorem4_tree_constraints(inst)).has_value());
    }
}

TEST_CASE("quadrilateral split", "[reductions]")
{
    const PlaneGraph g = fx::hexagonal_prism();
    for (const Face& f : g.faces()) {
        if (f.length() != 4)
            continue;
        const QuadSplit s = quad_split(g, f.id);
        for (const PlaneGraph* h : {&s.first, &s.second}) {
            CHECK(h->skeleton().is_regular(3));
            CHECK(h->num_vertices() == g.num_vertices() - 4);
        }
    }
    CHECK_THROWS_AS(quad_split(g, g.outer_face()), PreconditionError);
}

TEST_CASE("vertex substitution", "[reductions]")
{
    const PlaneGraph cube = fx::cube();
    const Substitution s = q3_splice(cube, 0);
    CHECK(s.graph.num_vertices() == 14);
    CHECK(s.graph.num_faces() == 9);
    CHECK(s.graph.skeleton().is_regular(3));
    CHECK(is_bipartite(s.graph.skeleton()));
    CHECK_THROWS_AS(q3_splice(cube, 0, {0, 1, 2}), InputError);

    const std::vector<Pin> pins{{0, cube, 0}, {6, cube, 0}};
    const PlaneGraph a = vertex_substitution(cube, pins);
    const PlaneGraph b = vertex_substitution(cube, {pins[1], pins[0]});
    CHECK(same_graph(a, b, OuterFace::ignore));
    CHECK(a.num_vertices() == 8 + 2 * 6);
    const SubstitutionReport rep = certify_substitution(cube, pins);
    CHECK(rep.ok());
    CHECK(rep.composed_hamiltonian == find_hamiltonian_cycle(a.skeleton()).has_value());
}

TEST_CASE("realizable edge pairs match deletion", "[reductions]")
{
    for (const PlaneGraph& g : {fx::cube(), fx::triangular_prism(), fx::prism(5)}) {
        const auto pairs = realizable_pairs(g, 0);
        const auto rot = g.rotation(0);
        // Pair {i, j} is on a cycle iff deleting the third edge leaves a hamiltonian graph.
        const std::array<std::array<int, 3>, 3> idx{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
        for (int p = 0; p < 3; ++p) {
            const EdgeId drop = PlaneGraph::edge_of(rot[idx[p][2]]);
            Multigraph m(g.num_vertices());
            for (EdgeId e = 0; e < g.num_edges(); ++e)
                if (e != drop)
                    m.add_edge(g.skeleton().ends(e)[0], g.skeleton().ends(e)[1]);
            CHECK(pairs[p] == (oracle::count_hamiltonian_cycles(m) > 0));
        }
    }
}

TEST_CASE("two-edge cuts decompose hamiltonicity", "[reductions]")
{
    const Multigraph cube = fx::cube().skeleton(), prism = fx::triangular_prism().skeleton();
    const Multigraph pet = fx::petersen();
    struct Case {
        Multigraph x, y;
    };
    for (const auto& [x, y] : std::vector<Case>{{cube, cube}, {cube, prism}, {prism, pet}, {cube, pet}})
        for (EdgeId a = 0; a < 3; ++a) {
            const Multigraph r = join_across(x, a, y, 0);
            const auto cut = find_two_edge_cut(r);
            REQUIRE(cut);
            const Decomposition d = decompose_two_edge_cuts(r);
            CHECK(d.pieces.size() >= 2);
            CHECK(hamiltonian_by_decomposition(d) == find_hamiltonian_cycle(r).has_value());
        }
    CHECK_FALSE(find_two_edge_cut(cube).has_value());
}
