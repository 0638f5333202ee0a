#include <catch_amalgamated.hpp>

#include "facetree/constructions.hpp"
#include "facetree/fixtures.hpp"

using namespace facetree;
namespace fx = facetree::fixtures;

namespace {

std::vector<PlaneGraph> two_connected_fixtures()
{
    return {fx::k4(), fx::cube(), fx::octahedron(), fx::hexagonal_prism(), fx::theta(), fx::digon(),
            fx::triangular_prism(), fx::cycle(4), fx::prism(5)};
}

FaceId face_with_vertices(const PlaneGraph& g, std::set<Vertex> want)
{
    for (const Face& f : g.faces()) {
        const auto vs = g.face_vertices(f.id);
        if (std::set<Vertex>(vs.begin(), vs.end()) == want)
            return f.id;
    }
    return -1;
}

} // namespace

TEST_CASE("dual is an involution and swaps the census", "[constructions]")
{
    for (const PlaneGraph& g : two_connected_fixtures()) {
        const PlaneGraph d = dual(g);
        CHECK(d.num_vertices() == g.num_faces());
        CHECK(d.num_faces() == g.num_vertices());
        CHECK(d.num_edges() == g.num_edges());
        CHECK(same_graph(dual(d), g));
    }
}

TEST_CASE("duals of the platonic fixtures", "[constructions]")
{
    CHECK(same_graph(dual(fx::cube()), fx::octahedron(), OuterFace::ignore));
    CHECK(same_graph(dual(fx::k4()), fx::k4(), OuterFace::ignore));
    CHECK(same_graph(dual(fx::digon()), fx::digon(), OuterFace::ignore));
    CHECK(same_graph(dual(fx::theta()), fx::cycle(3), OuterFace::ignore));
}

TEST_CASE("dual rejects bridges", "[constructions]") { CHECK_THROWS_AS(dual(fx::path3()), PreconditionError); }

TEST_CASE("radial graph is a bipartite quadrangulation", "[constructions]")
{
    for (const PlaneGraph& g : two_connected_fixtures()) {
        const RadialGraph r = radial(g);
        CHECK(r.num_vertex_nodes == g.num_vertices());
        CHECK(r.graph.num_vertices() == g.num_vertices() + g.num_faces());
        CHECK(r.graph.num_edges() == 2 * g.num_edges());
        CHECK(r.graph.num_faces() == g.num_edges());
        CHECK(is_bipartite(r.graph.skeleton()));
        for (const Face& f : r.graph.faces())
            CHECK(f.length() == 4);
        // Each radial edge joins a vertex node to a face node.
        for (EdgeId e = 0; e < r.graph.num_edges(); ++e) {
            const auto [a, b] = r.graph.skeleton().ends(e);
            CHECK((a < r.num_vertex_nodes) != (b < r.num_vertex_nodes));
        }
    }
}

TEST_CASE("radial graph of the dual is the radial graph", "[constructions]")
{
    for (const PlaneGraph& g : {fx::cube(), fx::k4(), fx::prism(5)})
        CHECK(same_graph(radial(g).graph, radial(dual(g)).graph, OuterFace::ignore));
}

TEST_CASE("restricted radial graph", "[constructions]")
{
    const PlaneGraph o = fx::octahedron();
    const RestrictedRadial r = restricted_radial(o, {0, 1, 2, 3, 4, 5}, {});
    CHECK(r.graph.num_vertices() == 6);
    CHECK(r.graph.num_edges() == 0);
    CHECK_FALSE(r.is_tree());
    // One bounded triangle with its three vertices is a tree (a star).
    const FaceId t = face_with_vertices(o, {3, 4, 5});
    REQUIRE(t >= 0);
    const RestrictedRadial s = restricted_radial(o, {3, 4, 5}, {t});
    CHECK(s.is_tree());
    CHECK_THROWS_AS(restricted_radial(o, {0}, {o.outer_face()}), InputError);
}

TEST_CASE("truncation census and cubic result", "[constructions]")
{
    for (const PlaneGraph& g : two_connected_fixtures()) {
        if (g.skeleton().min_degree() < 3) {
            CHECK_THROWS_AS(truncate(g), PreconditionError);
            continue;
        }
        const Truncation t = truncate(g);
        const int E = g.num_edges();
        CHECK(t.graph.num_vertices() == 2 * E);
        CHECK(t.graph.num_edges() == 3 * E);
        CHECK(t.graph.num_faces() == g.num_vertices() + g.num_faces());
        CHECK(t.graph.skeleton().is_regular(3));
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            CHECK(t.graph.face(t.face_of_old_vertex[v]).length() == g.degree(v));
        for (FaceId f = 0; f < g.num_faces(); ++f)
            CHECK(t.graph.face(t.face_of_old_face[f]).length() == 2 * g.face(f).length());
    }
    const Truncation k = truncate(fx::k4());
    CHECK(k.graph.num_vertices() == 12);
    CHECK(k.graph.num_faces() == 8);
}

TEST_CASE("leapfrog census", "[constructions]")
{
    for (const PlaneGraph& g : two_connected_fixtures()) {
        const Leapfrog lf = leapfrog(g);
        const int E = g.num_edges();
        CHECK(lf.graph.num_vertices() == 2 * E);
        CHECK(lf.graph.num_edges() == 3 * E);
        CHECK(lf.graph.num_faces() == g.num_vertices() + g.num_faces());
        CHECK(lf.graph.skeleton().is_regular(3));
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            CHECK(lf.graph.face(lf.face_of_old_vertex[v]).length() == 2 * g.degree(v));
        for (FaceId f = 0; f < g.num_faces(); ++f)
            CHECK(lf.graph.face(lf.face_of_old_face[f]).length() == g.face(f).length());
    }
}

TEST_CASE("leapfrog of the cube is the truncated octahedron", "[constructions]")
{
    const Leapfrog lf = leapfrog(fx::cube());
    CHECK(lf.graph.num_vertices() == 24);
    CHECK(same_graph(lf.graph, truncate(fx::octahedron()).graph, OuterFace::ignore));
    // Leapfrog is truncation of the dual in general.
    for (const PlaneGraph& g : {fx::k4(), fx::prism(5), fx::hexagonal_prism()})
        CHECK(same_graph(leapfrog(g).graph, truncate(dual(g)).graph, OuterFace::ignore));
}

TEST_CASE("contracting old faces of the leapfrog gives the dual", "[constructions]")
{
    for (const PlaneGraph& g : {fx::k4(), fx::cube(), fx::triangular_prism(), fx::hexagonal_prism(), fx::prism(5)}) {
        const Leapfrog lf = leapfrog(g);
        const Contraction c = contract_factor(lf.graph, {lf.face_of_old_face});
        CHECK(same_graph(c.graph, dual(g), OuterFace::ignore));
    }
}

TEST_CASE("contraction of a facial 2-factor", "[constructions]")
{
    const PlaneGraph c = fx::cube();
    const FaceId outer = c.outer_face(), inner = face_with_vertices(c, {4, 5, 6, 7});
    REQUIRE(inner >= 0);
    // Contracting the two squares leaves two vertices joined by the four spokes.
    FaceId side = -1;
    for (FaceId f = 0; f < c.num_faces(); ++f)
        if (f != outer && f != inner)
            side = f;
    const Contraction h = contract_factor(c, {{outer, inner}}, side);
    CHECK(h.graph.num_vertices() == 2);
    CHECK(h.graph.num_edges() == 4);
    CHECK(h.graph.num_faces() == 4);
    CHECK(h.map.face_origin[h.graph.outer_face()] == side);
    for (EdgeId e = 0; e < h.graph.num_edges(); ++e) {
        const EdgeId g = h.map.edge_origin[e];
        CHECK(h.map.edge_of_edge[g] == e);
        for (int s = 0; s < 2; ++s) {
            const DartId hd = 2 * e + s;
            const DartId gd = h.map.dart_origin(hd);
            CHECK(h.map.vertex_of_face[c.face_of(gd)] == -1);
            CHECK(h.map.face_of_face[c.face_of(gd)] == h.graph.face_of(hd));
        }
    }
    CHECK_THROWS_AS(contract_factor(c, {{outer, inner}}, outer), InputError);
    CHECK_THROWS_AS(contract_factor(c, {{outer}}), PreconditionError);
}

TEST_CASE("contraction of a cubic graph is eulerian", "[constructions]")
{
    const PlaneGraph g = fx::hexagonal_prism();
    const FaceId outer = g.outer_face();
    FaceId inner = -1;
    for (const Face& f : g.faces())
        if (f.length() == 6 && f.id != outer)
            inner = f.id;
    const Contraction h = contract_factor(g, {{outer, inner}});
    CHECK(h.graph.skeleton().is_eulerian());
    CHECK(h.graph.skeleton().is_regular(6));
}
