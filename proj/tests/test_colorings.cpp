#include <catch_amalgamated.hpp>

#include "facetree/colorings.hpp"
#include "facetree/constructions.hpp"
#include "facetree/fixtures.hpp"

using namespace facetree;
namespace fx = facetree::fixtures;

TEST_CASE("2-face-colouring of eulerian graphs", "[colorings]")
{
    for (const PlaneGraph& h : {fx::octahedron(), fx::digon(), fx::cycle(5), fx::bowtie()}) {
        const FaceColoring c = face_2_coloring(h);
        CHECK(verify_face_coloring(h, c));
        CHECK(c.color[h.outer_face()] == 1);
    }
    const FaceColoring o = face_2_coloring(fx::octahedron());
    CHECK(o.faces_of(1).size() == 4);
    CHECK(o.faces_of(2).size() == 4);
    CHECK_THROWS_AS(face_2_coloring(fx::k4()), PreconditionError);
}

TEST_CASE("3-face-colouring of bipartite cubic graphs", "[colorings]")
{
    for (const PlaneGraph& g : {fx::cube(), fx::hexagonal_prism()}) {
        const FaceColoring c = face_3_coloring(g);
        CHECK(verify_face_coloring(g, c));
        CHECK(c.color[g.outer_face()] == 3);
        // Each colour class is a facial 2-factor.
        for (int k = 1; k <= 3; ++k)
            CHECK(verify_facial_two_factor(g, {c.faces_of(k)}));
        for (int outer = 1; outer <= 3; ++outer)
            CHECK(face_3_coloring(g, outer).color[g.outer_face()] == outer);
    }
    CHECK_THROWS_AS(face_3_coloring(fx::k4()), PreconditionError);
    CHECK_THROWS_AS(face_3_coloring(fx::octahedron()), PreconditionError);
    CHECK_THROWS_AS(face_3_coloring(fx::cube(), 4), InputError);
}

TEST_CASE("colouring is canonical", "[colorings]")
{
    const PlaneGraph g = fx::hexagonal_prism();
    const FaceColoring a = face_3_coloring(g), b = face_3_coloring(g);
    CHECK(a.color == b.color);
    const auto ones = a.faces_of(1), twos = a.faces_of(2);
    REQUIRE(!ones.empty());
    REQUIRE(!twos.empty());
    CHECK(ones.front() < twos.front());
}

TEST_CASE("colouring verifier rejects conflicts", "[colorings]")
{
    const PlaneGraph g = fx::cube();
    FaceColoring c = face_3_coloring(g);
    const FaceId a = g.face_of(0), b = g.face_of(1);
    c.color[a] = c.color[b];
    CHECK_FALSE(verify_face_coloring(g, c));
    FaceColoring short_one{{1, 2}, 3};
    CHECK_FALSE(verify_face_coloring(g, short_one));
}

TEST_CASE("truncation faces take the third colour", "[colorings]")
{
    // Tr(h) of an eulerian h: vertex cycles, and old faces with the 2-colouring of h.
    const PlaneGraph h = fx::octahedron();
    const Truncation t = truncate(h);
    const FaceColoring c2 = face_2_coloring(h);
    FaceColoring c{std::vector<int>(t.graph.num_faces()), 3};
    for (FaceId f = 0; f < t.graph.num_faces(); ++f)
        c.color[f] = t.face_origin[f].from_vertex ? 3 : c2.color[t.face_origin[f].id];
    CHECK(verify_face_coloring(t.graph, c));
    CHECK(is_bipartite(t.graph.skeleton()));
}
