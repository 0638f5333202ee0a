// Acceptance run: one PASS/FAIL line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "facetree.hpp"
#include "support/oracles.hpp"

using namespace facetree;
namespace fx = facetree::fixtures;

namespace {

// Every criterion tolerates zero disagreements.
constexpr long kMaxDisagreements = 0;
constexpr int kRandomParityInstances = 200;
constexpr int kBruteParityInstances = 600;

struct Outcome {
    long checked = 0;
    long failures = 0;
    std::string detail;

    void expect(bool ok, const std::string& what)
    {
        ++checked;
        if (ok)
            return;
        ++failures;
        if (failures <= 5)
            detail += (detail.empty() ? "" : "; ") + what;
    }

    void absorb(const PipelineReport& r)
    {
        for (const PipelineRow& row : r.rows) {
            if (row.status == RowStatus::skip)
                continue;
            expect(row.status == RowStatus::ok, r.pipeline + " " + row.source + ": " + row.note);
        }
    }
};

std::vector<CorpusRecord> cubic_corpus() { return load_corpus(FACETREE_DATA_DIR "/cubic_polyhedra_le14.pc"); }
std::vector<CorpusRecord> bipartite_corpus() { return load_corpus(FACETREE_DATA_DIR "/bipartite_cubic_polyhedra_le20.pc"); }

std::vector<CorpusRecord> up_to(std::vector<CorpusRecord> rs, int n)
{
    std::erase_if(rs, [&](const CorpusRecord& r) { return r.graph.num_vertices() > n; });
    return rs;
}

std::vector<CorpusRecord> fixture_corpus()
{
    return make_corpus("fixtures", {fx::k4(), fx::cube(), fx::octahedron(), fx::hexagonal_prism(), fx::theta(),
                                    fx::digon()});
}

int run(int number, const std::string& title, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.failures = 1;
        o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.failures <= kMaxDisagreements && o.checked > 0;
    std::printf("criterion %2d %s  %-34s checked=%ld failures=%ld time=%.1fs%s%s\n", number, pass ? "PASS" : "FAIL",
                title.c_str(), o.checked, o.failures, s, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    return pass ? 0 : 1;
}

// 1 ---------------------------------------------------------------------------------------------

Outcome structural()
{
    Outcome o;
    o.absorb(run_pipeline("structural", fixture_corpus()));
    o.absorb(run_pipeline("structural", up_to(cubic_corpus(), 24)));
    o.absorb(run_pipeline("structural", up_to(bipartite_corpus(), 24)));
    return o;
}

// 2 ---------------------------------------------------------------------------------------------

Outcome leapfrog_identity()
{
    Outcome o;
    std::vector<PlaneGraph> cubic{fx::k4(), fx::cube(), fx::triangular_prism(), fx::prism(5), fx::hexagonal_prism()};
    for (const auto& r : up_to(cubic_corpus(), 12))
        cubic.push_back(r.graph);
    for (const PlaneGraph& g : cubic) {
        const Leapfrog lf = leapfrog(g);
        const Contraction c = contract_factor(lf.graph, {lf.face_of_old_face});
        o.expect(same_graph(c.graph, dual(g), OuterFace::ignore), "Lf/Q_F differs from the dual");
    }
    o.expect(same_graph(leapfrog(fx::cube()).graph, truncate(fx::octahedron()).graph, OuterFace::ignore),
             "leapfrog(cube) is not the truncated octahedron");
    return o;
}

// 3 ---------------------------------------------------------------------------------------------

/// Eulerian graphs of minimum degree 4: the octahedron and every colour-class contraction of
/// the bipartite corpus with at most 14 vertices.
std::vector<CorpusRecord> eulerian_corpus()
{
    std::vector<PlaneGraph> hs{fx::octahedron()};
    for (const auto& r : bipartite_corpus()) {
        const FaceColoring c = face_3_coloring(r.graph);
        for (int k = 1; k <= 3; ++k) {
            const auto faces = c.faces_of(k);
            if (static_cast<int>(faces.size()) > 14)
                continue;
            FaceId outer = -1;
            for (FaceId f = 0; f < r.graph.num_faces() && outer < 0; ++f)
                if (c.color[f] != k)
                    outer = f;
            hs.push_back(contract_factor(r.graph, {faces}, outer).graph);
        }
    }
    return make_corpus("contractions", hs);
}

Outcome obs1()
{
    Outcome o;
    const auto corpus = eulerian_corpus();
    const PipelineReport r = run_pipeline("obs1_roundtrip", corpus);
    o.absorb(r);
    long trails = 0;
    for (const auto& row : r.rows)
        for (const auto& [k, v] : row.fields)
            if (k == "trails")
                trails += std::stol(v);
    o.expect(trails > 0, "no A-trails exercised");
    o.detail = o.detail.empty() ? "hosts=" + std::to_string(corpus.size()) + " trails=" + std::to_string(trails)
                                : o.detail;
    return o;
}

// 4, 5 ------------------------------------------------------------------------------------------

Outcome pr1()
{
    Outcome o;
    o.absorb(run_pipeline("pr1_equivalence", up_to(cubic_corpus(), 14)));
    o.absorb(run_pipeline("pr1_equivalence", up_to(bipartite_corpus(), 14)));
    return o;
}

Outcome pr3()
{
    Outcome o;
    o.absorb(run_pipeline("pr3_agreement", up_to(bipartite_corpus(), 16)));
    o.absorb(run_pipeline("pr3_agreement", make_corpus("fixtures", {fx::cube(), fx::hexagonal_prism()})));
    return o;
}

// 6 ---------------------------------------------------------------------------------------------

Outcome parity()
{
    Outcome o;
    std::mt19937 rng(20261016);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int t = 0; t < kRandomParityInstances; ++t) {
        const PlaneGraph h = oracle::random_digon_triangle_graph(rng, uniform(3, 8), uniform(0, 4));
        std::vector<FaceId> d;
        FaceTreeConstraints c;
        c.require_spanning = true;
        for (FaceId f = 0; f < h.num_faces(); ++f) {
            if (f != h.outer_face() && uniform(0, 4) > 0)
                d.push_back(f);
            else
                c.must_exclude.push_back(f);
        }
        o.expect(face_tree_via_parity(h, d).has_value() == find_face_tree(h, c).has_value(),
                 "random instance " + std::to_string(t));
    }
    o.absorb(run_pipeline("parity_vs_bruteforce", cubic_corpus()));
    for (int t = 0; t < kBruteParityInstances; ++t) {
        const int n = uniform(1, 8);
        Multigraph g(n);
        for (int v = 1; v < n; ++v)
            g.add_edge(uniform(0, v - 1), v);
        const int extra = uniform(0, 6);
        for (int i = 0; i < extra && n > 1; ++i) {
            const int a = uniform(0, n - 1), b = uniform(0, n - 1);
            if (a != b)
                g.add_edge(a, b);
        }
        std::vector<EdgeId> ids(g.num_edges());
        std::iota(ids.begin(), ids.end(), 0);
        std::shuffle(ids.begin(), ids.end(), rng);
        ParityInstance p{g, {}};
        const int k = uniform(0, std::min(3, g.num_edges() / 2));
        for (int i = 0; i < k; ++i)
            p.pairs.push_back({ids[2 * i], ids[2 * i + 1]});
        const auto tree = solve_spanning_tree_parity(p);
        o.expect(tree.has_value() == oracle::parity_tree_exists(p), "parity instance " + std::to_string(t));
        if (tree)
            o.expect(is_parity_tree(p, *tree), "returned tree violates parity");
    }
    return o;
}

// 7, 8 ------------------------------------------------------------------------------------------

Outcome claim3()
{
    Outcome o;
    const auto corpus = up_to(cubic_corpus(), 10);
    o.absorb(run_pipeline("claim3_sweep", corpus));
    o.expect(corpus.size() == 9, "expected 9 cubic polyhedra up to 10 vertices");
    return o;
}

Outcome corollaries()
{
    Outcome o;
    for (const PlaneGraph& g0 : {fx::k4(), fx::triangular_prism(), fx::cube(), fx::prism(5), fx::hexagonal_prism()})
        for (EdgeId e = 0; e < g0.num_edges(); ++e) {
            const Theorem4Instance inst = build_theorem4(g0, e);
            const bool tree = find_face_tree(inst.h, theorem4_tree_constraints(inst)).has_value();
            const Contraction c = corollary3_contract(inst);
            o.expect(c.graph.skeleton().is_regular(8), "contraction is not 8-regular");
            o.expect(find_a_trail(c.graph).has_value() == tree, "A-trail answer differs");
            const Corollary4 c4 = corollary4_split(inst);
            FaceTreeConstraints spanning;
            spanning.require_spanning = true;
            o.expect(find_face_tree(c4.h0, spanning).has_value() == tree, "H0 answer differs");
        }
    return o;
}

// 9, 10 -----------------------------------------------------------------------------------------

Outcome fixture_facts()
{
    Outcome o;
    o.expect(!find_hamiltonian_cycle(fx::petersen()).has_value(), "Petersen graph reported hamiltonian");
    const auto bip = up_to(bipartite_corpus(), 20);
    const PipelineReport b = run_pipeline("barnette_sweep", bip);
    o.absorb(b);
    o.expect(b.count(RowStatus::ok) == static_cast<long>(bip.size()), "barnette sweep skipped graphs");
    auto everything = cubic_corpus();
    for (auto& r : bip)
        everything.push_back(r);
    const PipelineReport g = run_pipeline("goodey_sweep", everything);
    o.absorb(g);
    o.expect(g.count(RowStatus::ok) > 0, "no graph with only quadrilaterals and hexagons");
    return o;
}

Outcome herbert()
{
    Outcome o;
    auto corpus = make_corpus("fixtures", {fx::cube(), fx::hexagonal_prism()});
    for (auto& r : up_to(bipartite_corpus(), 16))
        corpus.push_back(r);
    o.absorb(run_pipeline("herbert_roundtrip", corpus));
    // Every cycle of the cube, without the enumeration cap.
    const LeapfrogContext ctx = make_leapfrog_context(fx::cube());
    for_each_hamiltonian_cycle(ctx.g.skeleton(), {}, [&](const HamiltonianCycle& c0) {
        const HamiltonianCycle up = leapfrog_lift(ctx, c0);
        o.expect(static_cast<bool>(verify_hamiltonian_cycle(ctx.lf.graph.skeleton(), up)), "lift not hamiltonian");
        o.expect(static_cast<bool>(check_leapfrog_cycle(ctx, up)), "lift has the wrong sides");
        auto a = leapfrog_project(ctx, up).edges, b = c0.edges;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        o.expect(a == b, "projection does not invert the lift");
        return true;
    });
    return o;
}

} // namespace

int main()
{
    int failed = 0;
    failed += run(1, "structural suite", structural);
    failed += run(2, "leapfrog identity", leapfrog_identity);
    failed += run(3, "A-trail round trip", obs1);
    failed += run(4, "2-factor reduction equivalence", pr1);
    failed += run(5, "four-way agreement", pr3);
    failed += run(6, "parity oracle equivalence", parity);
    failed += run(7, "path/tree sweep", claim3);
    failed += run(8, "8-regular and H0 agreements", corollaries);
    failed += run(9, "fixture facts", fixture_facts);
    failed += run(10, "leapfrog lift", herbert);
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
