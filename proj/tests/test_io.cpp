#include <catch_amalgamated.hpp>

#include "facetree/fixtures.hpp"
#include "facetree/io.hpp"
#include "facetree/pipelines.hpp"

using namespace facetree;
namespace fx = facetree::fixtures;

namespace {

std::string record(const std::vector<std::vector<int>>& cw)
{
    std::string s(1, static_cast<char>(cw.size()));
    for (const auto& l : cw) {
        for (int w : l)
            s += static_cast<char>(w);
        s += '\0';
    }
    return s;
}

std::string header() { return std::string(planar_code_header); }

long count_lines(const std::string& s, const std::string& needle)
{
    long n = 0;
    for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("planar_code reads K4", "[io]")
{
    const auto gs = read_planar_code(header() + record({{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}}));
    REQUIRE(gs.size() == 1);
    CHECK(gs[0].num_vertices() == 4);
    CHECK(gs[0].num_faces() == 4);
    CHECK(same_graph(gs[0], fx::k4(), OuterFace::ignore));
    CHECK(read_planar_code(header()).empty());
}

TEST_CASE("exactly two of the sixteen K4 rotation systems are plane", "[io]")
{
    // K4 is 3-connected, so its embedding is unique up to reflection.
    const std::vector<std::vector<int>> base{{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}};
    int plane = 0, rejected = 0;
    for (int mask = 0; mask < 16; ++mask) {
        auto cw = base;
        for (int v = 0; v < 4; ++v)
            if (mask >> v & 1)
                std::swap(cw[v][1], cw[v][2]);
        try {
            read_planar_code(header() + record(cw));
            ++plane;
        } catch (const ParseError& e) {
            CHECK(e.offset() == planar_code_header.size());
            ++rejected;
        }
    }
    CHECK(plane == 2);
    CHECK(rejected == 14);
}

TEST_CASE("planar_code errors carry byte offsets", "[io]")
{
    CHECK_THROWS_AS(read_planar_code("planar_code"), ParseError);
    const std::string h = header();
    try {
        read_planar_code(h + std::string("\x04\x02\x03", 3));
        FAIL("truncated record accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == h.size() + 3);
    }
    try {
        read_planar_code(h + record({{2, 9}, {1}}));
        FAIL("out of range neighbour accepted");
    } catch (const ParseError& e) {
        CHECK(e.offset() == h.size() + 2);
    }
    CHECK_THROWS_AS(read_planar_code(h + std::string(1, '\0')), ParseError);
}

TEST_CASE("planar_code round trip keeps the outer face", "[io]")
{
    std::vector<PlaneGraph> gs{fx::k4(), fx::cube(), fx::octahedron(), fx::prism(5)};
    gs.push_back(fx::cube().with_outer_face(3));
    const auto back = read_planar_code(write_planar_code(gs));
    REQUIRE(back.size() == gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i)
        CHECK(same_graph(gs[i], back[i]));
}

TEST_CASE("native format round trip", "[io]")
{
    std::string all = "# fixtures\n";
    const std::vector<PlaneGraph> gs{fx::k4(), fx::cube(), fx::digon(), fx::theta(), fx::bowtie(),
                                     fx::triangular_prism().with_outer_face(1)};
    for (const PlaneGraph& g : gs)
        all += write_native(g);
    const auto back = read_native(all);
    REQUIRE(back.size() == gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        CHECK(same_graph(gs[i], back[i]));
        CHECK(write_native(back[i]) == write_native(gs[i]));
    }
    CHECK_THROWS_AS(read_native("vertices 2\n0: 1/0\n"), ParseError);
    CHECK_THROWS_AS(read_native("vertices x\n"), ParseError);
    CHECK_THROWS_AS(read_native("edges 3\n"), ParseError);
}

TEST_CASE("DOT export", "[io]")
{
    const PlaneGraph c = fx::cube();
    const std::string dot = write_dot(c);
    CHECK(count_lines(dot, " -- ") == 12);
    CHECK(count_lines(dot, "// face") == 6);
    const FaceColoring col = face_3_coloring(c);
    CHECK(count_lines(write_dot(c, &col), "right_color=") == 12);
}

TEST_CASE("graph hash depends on the embedding", "[io]")
{
    CHECK(graph_hash(fx::cube()) == graph_hash(fx::cube()));
    CHECK(graph_hash(fx::cube()).size() == 16);
    CHECK(graph_hash(fx::cube()) != graph_hash(fx::cube().with_outer_face(2)));
    CHECK(fnv1a("") == 14695981039346656037ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("certificates round trip and revalidate", "[io]")
{
    const PlaneGraph cube = fx::cube();
    const auto c = find_hamiltonian_cycle(cube.skeleton());
    const CertificateDocument doc = certificate_of(cube, c);
    const std::string text = write_certificate(doc);
    const CertificateDocument back = read_certificate(text);
    CHECK(back.kind == CertificateKind::ham_cycle);
    CHECK(back.verdict == CertificateVerdict::found);
    CHECK(back.payload == doc.payload);
    CHECK(validate_certificate(back, cube));
    CHECK_NOTHROW(load_certificate(text, cube));
    // Wrong host: the hash no longer matches.
    CHECK_FALSE(validate_certificate(back, fx::prism(5)));
    CHECK_THROWS_AS(load_certificate(text, fx::prism(5)), InputError);

    // A "none" verdict is checked by search.
    const PlaneGraph o = fx::octahedron();
    CertificateDocument lie = certificate_of(o, std::optional<HamiltonianCycle>{});
    CHECK_FALSE(validate_certificate(lie, o));
    CHECK(validate_certificate(lie, o, false));

    const auto l = find_a_trail(o);
    CHECK(validate_certificate(read_certificate(write_certificate(certificate_of(o, l))), o));
    FaceTreeConstraints sp;
    sp.require_spanning = true;
    const auto ft = find_face_tree(o, sp);
    CHECK(validate_certificate(read_certificate(write_certificate(certificate_of(o, ft, true))), o));
    const auto p = find_hamiltonian_path(cube.skeleton(), 0, 1);
    CHECK(validate_certificate(read_certificate(write_certificate(certificate_of(cube, 0, 1, p))), cube));

    // Tampering with the payload is caught.
    CertificateDocument bad = doc;
    std::swap(bad.payload["edges"][0], bad.payload["edges"][1]);
    bad.payload["edges"][0] = (bad.payload["edges"][0] + 1) % cube.num_edges();
    CHECK_FALSE(validate_certificate(bad, cube));
    CHECK_THROWS_AS(read_certificate("host x fnv1a:0\n"), ParseError);
}

TEST_CASE("bundled corpora are duplicate free with the expected counts", "[io]")
{
    const auto all = load_corpus(FACETREE_DATA_DIR "/cubic_polyhedra_le14.pc");
    const auto bip = load_corpus(FACETREE_DATA_DIR "/bipartite_cubic_polyhedra_le20.pc");
    CHECK(all.size() == 73);
    CHECK(bip.size() == 15);
    std::map<int, int> by_n;
    for (const auto& r : all) {
        CHECK(r.tags.cubic);
        CHECK(r.tags.three_connected);
        ++by_n[r.graph.num_vertices()];
    }
    CHECK(by_n == std::map<int, int>{{4, 1}, {6, 1}, {8, 2}, {10, 5}, {12, 14}, {14, 50}});
    // Independent dedupe: no two graphs of the same order are isomorphic plane graphs.
    auto distinct = [](const std::vector<CorpusRecord>& rs) {
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j)
                if (rs[i].graph.num_vertices() == rs[j].graph.num_vertices() &&
                    same_graph(rs[i].graph, rs[j].graph, OuterFace::ignore))
                    return false;
        return true;
    };
    CHECK(distinct(all));
    CHECK(distinct(bip));
    // The bipartite graphs of order at most 14 are exactly those in the general file.
    int small_bip = 0;
    for (const auto& r : bip) {
        CHECK(r.tags.bipartite);
        CHECK(r.tags.cubic);
        if (r.graph.num_vertices() > 14)
            continue;
        ++small_bip;
        bool found = false;
        for (const auto& s : all)
            found = found || same_graph(r.graph, s.graph, OuterFace::ignore);
        CHECK(found);
    }
    CHECK(small_bip == std::count_if(all.begin(), all.end(), [](const CorpusRecord& r) { return r.tags.bipartite; }));
}
