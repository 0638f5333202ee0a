#include <catch_amalgamated.hpp>

#include "facetree/fixtures.hpp"
#include "facetree/pipelines.hpp"

using namespace facetree;
namespace fx = facetree::fixtures;

namespace {

std::vector<CorpusRecord> small_corpus()
{
    auto all = load_corpus(FACETREE_DATA_DIR "/cubic_polyhedra_le14.pc");
    std::vector<CorpusRecord> out;
    for (auto& r : all)
        if (r.graph.num_vertices() <= 10)
            out.push_back(std::move(r));
    return out;
}

} // namespace

TEST_CASE("every registered pipeline runs clean on the small corpus", "[pipelines]")
{
    const auto corpus = small_corpus();
    REQUIRE(corpus.size() == 9);
    for (const auto& [name, job] : pipelines()) {
        const PipelineReport r = run_pipeline(name, corpus);
        INFO(r.format());
        CHECK(r.rows.size() == corpus.size());
        CHECK(r.exit_code() == 0);
        CHECK(r.count(RowStatus::violation) == 0);
        CHECK(r.count(RowStatus::error) == 0);
    }
}

TEST_CASE("reports do not depend on the thread count", "[pipelines]")
{
    const auto corpus = small_corpus();
    for (const char* name : {"structural", "barnette_sweep", "claim3_sweep"}) {
        PipelineOptions one, two;
        two.threads = 3;
        CHECK(run_pipeline(name, corpus, one).format() == run_pipeline(name, corpus, two).format());
    }
}

TEST_CASE("rows follow corpus order and name their source", "[pipelines]")
{
    const auto corpus = small_corpus();
    const PipelineReport r = run_pipeline("structural", corpus);
    for (std::size_t i = 0; i < corpus.size(); ++i)
        CHECK(r.rows[i].source == corpus[i].name());
}

TEST_CASE("exit codes", "[pipelines]")
{
    PipelineReport r{"x", {}};
    CHECK(r.exit_code() == 0);
    r.rows.push_back({});
    r.rows.back().status = RowStatus::skip;
    CHECK(r.exit_code() == 0);
    r.rows.push_back({});
    r.rows.back().status = RowStatus::error;
    CHECK(r.exit_code() == 1);
    r.rows.push_back({});
    r.rows.back().fail("broken");
    CHECK(r.exit_code() == 2);
    CHECK_THROWS_AS(run_pipeline("no_such_pipeline", {}), InputError);
}

TEST_CASE("graphs outside a pipeline's domain are skipped", "[pipelines]")
{
    const auto corpus = make_corpus("fixtures", {fx::k4(), fx::octahedron(), fx::cube()});
    const PipelineReport b = run_pipeline("barnette_sweep", corpus);
    CHECK(b.rows[0].status == RowStatus::skip);
    CHECK(b.rows[1].status == RowStatus::skip);
    CHECK(b.rows[2].status == RowStatus::ok);
    const PipelineReport o = run_pipeline("obs1_roundtrip", corpus);
    CHECK(o.rows[1].status == RowStatus::ok);
    CHECK(o.rows[2].status == RowStatus::skip);
}

TEST_CASE("vertex limit turns rows into skips", "[pipelines]")
{
    PipelineOptions o;
    o.max_vertices = 6;
    const PipelineReport r = run_pipeline("structural", small_corpus(), o);
    for (const auto& row : r.rows)
        CHECK((row.status == RowStatus::skip) == (row.source != "cubic_polyhedra_le14.pc#0" &&
                                                   row.source != "cubic_polyhedra_le14.pc#1"));
}

TEST_CASE("corpus parsing detects the format", "[pipelines]")
{
    const std::string native = write_native(fx::cube()) + write_native(fx::k4());
    CHECK(parse_graphs(native).size() == 2);
    CHECK(parse_graphs(write_planar_code({fx::cube()})).size() == 1);
    const auto tags = compute_tags(fx::octahedron());
    CHECK(tags.eulerian);
    CHECK_FALSE(tags.cubic);
    CHECK(tags.three_connected);
}
