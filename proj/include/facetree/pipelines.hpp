#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "facetree/atrail.hpp"
#include "facetree/colorings.hpp"
#include "facetree/constructions.hpp"
#include "facetree/equivalences.hpp"
#include "facetree/face_tree.hpp"
#include "facetree/hamiltonian.hpp"
#include "facetree/io.hpp"
#include "facetree/parity.hpp"
#include "facetree/reductions.hpp"

namespace facetree {

// ---------------------------------------------------------------------------------------------
// Corpus

struct GraphTags {
    bool cubic = false;
    bool bipartite = false;
    bool three_connected = false;
    bool eulerian = false;
};

inline GraphTags compute_tags(const PlaneGraph& g)
{
    const Multigraph& s = g.skeleton();
    return {s.is_regular(3), is_bipartite(s), connectivity(s) >= 3, s.is_eulerian()};
}

struct CorpusRecord {
    std::string source; // file name
    int index = 0;      // position within the file
    PlaneGraph graph;
    GraphTags tags;     // always recomputed, never read from input

    std::string name() const { return source + "#" + std::to_string(index); }
};

inline std::vector<CorpusRecord> make_corpus(const std::string& source, const std::vector<PlaneGraph>& graphs)
{
    std::vector<CorpusRecord> out;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        out.push_back({source, static_cast<int>(i), graphs[i], compute_tags(graphs[i])});
    return out;
}

/// planar_code or native text, chosen by the header.
inline std::vector<PlaneGraph> parse_graphs(std::string_view bytes, PlanarCodeOptions opt = {})
{
    if (bytes.substr(0, planar_code_header.size()) == planar_code_header)
        return read_planar_code(bytes, opt);
    return read_native(bytes);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<CorpusRecord> load_corpus(const std::string& path, PlanarCodeOptions opt = {})
{
    return make_corpus(std::filesystem::path(path).filename().string(), parse_graphs(read_file(path), opt));
}

// ---------------------------------------------------------------------------------------------
// Reports

enum class RowStatus { ok, skip, violation, error };

inline const char* to_string(RowStatus s)
{
    switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::skip: return "skip";
    case RowStatus::violation: return "violation";
    case RowStatus::error: return "error";
    }
    return "?";
}

struct PipelineRow {
    std::string source;
    RowStatus status = RowStatus::ok;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<std::string> certificates; // files written for this row
    std::string note;
    double seconds = 0;

    void set(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
    void set(std::string key, long value) { set(std::move(key), std::to_string(value)); }
    void fail(std::string why)
    {
        status = RowStatus::violation;
        if (!note.empty())
            note += "; ";
        note += std::move(why);
    }
};

struct PipelineOptions {
    int threads = 1;
    int max_vertices = 0;       // 0: the pipeline's own default
    long enumeration_limit = 0; // 0: unlimited where the pipeline enumerates
    std::string certificate_dir;
    bool timings = false;
};

struct PipelineReport {
    std::string pipeline;
    std::vector<PipelineRow> rows;

    long count(RowStatus s) const
    {
        return std::count_if(rows.begin(), rows.end(), [&](const PipelineRow& r) { return r.status == s; });
    }

    /// 0 clean, 2 property violation, 1 operational error.
    int exit_code() const
    {
        if (count(RowStatus::violation) > 0)
            return 2;
        if (count(RowStatus::error) > 0)
            return 1;
        return 0;
    }

    std::string format(bool timings = false) const
    {
        std::ostringstream os;
        os << "# pipeline " << pipeline << "\n";
        for (const PipelineRow& r : rows) {
            os << r.source << "\t" << to_string(r.status);
            for (const auto& [k, v] : r.fields)
                os << "\t" << k << "=" << v;
            for (const auto& c : r.certificates)
                os << "\tcert=" << c;
            if (timings)
                os << "\tseconds=" << r.seconds;
            if (!r.note.empty())
                os << "\t# " << r.note;
            os << "\n";
        }
        os << "# rows " << rows.size() << " ok " << count(RowStatus::ok) << " skip " << count(RowStatus::skip)
           << " violation " << count(RowStatus::violation) << " error " << count(RowStatus::error) << "\n";
        return os.str();
    }
};

// ---------------------------------------------------------------------------------------------
// Per-graph jobs

using PipelineJob = std::function<void(const CorpusRecord&, const PipelineOptions&, PipelineRow&)>;

namespace detail {

inline void skip(PipelineRow& row, std::string why)
{
    row.status = RowStatus::skip;
    row.note = std::move(why);
}

inline int limit_or(const PipelineOptions& o, int fallback) { return o.max_vertices > 0 ? o.max_vertices : fallback; }

inline void write_certificate_file(const PipelineOptions& o, const std::string& pipeline, const CorpusRecord& rec,
                                   CertificateDocument doc, PipelineRow& row)
{
    if (o.certificate_dir.empty())
        return;
    doc.host = rec.name();
    std::string file = pipeline + "_" + rec.source + "_" + std::to_string(rec.index) + ".cert";
    std::replace(file.begin(), file.end(), '/', '_');
    const auto path = std::filesystem::path(o.certificate_dir) / file;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << write_certificate(doc);
    row.certificates.push_back(file);
}

/// Every facial 2-factor of g: sets of faces whose boundaries are cycles covering every vertex once.
inline std::vector<FacialTwoFactor> facial_two_factors(const PlaneGraph& g, long limit = 0)
{
    std::vector<FacialTwoFactor> out;
    std::vector<std::vector<FaceId>> at(g.num_vertices());
    for (const Face& f : g.faces())
        if (g.face_is_simple_cycle(f.id))
            for (Vertex v : g.face_vertices(f.id))
                at[v].push_back(f.id);
    std::vector<char> covered(g.num_vertices(), 0);
    std::vector<FaceId> chosen;
    auto rec = [&](auto&& self) -> void {
        if (limit > 0 && static_cast<long>(out.size()) >= limit)
            return;
        Vertex v = 0;
        while (v < g.num_vertices() && covered[v])
            ++v;
        if (v == g.num_vertices()) {
            FacialTwoFactor q{chosen};
            std::sort(q.faces.begin(), q.faces.end());
            out.push_back(q);
            return;
        }
        for (FaceId f : at[v]) {
            const auto vs = g.face_vertices(f);
            if (std::any_of(vs.begin(), vs.end(), [&](Vertex x) { return covered[x]; }))
                continue;
            for (Vertex x : vs)
                covered[x] = 1;
            chosen.push_back(f);
            self(self);
            chosen.pop_back();
            for (Vertex x : vs)
                covered[x] = 0;
        }
    };
    rec(rec);
    return out;
}

inline std::vector<EdgeId> sorted(std::vector<EdgeId> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace detail

/// Euler formula, dual involution, radial quadrilaterals, truncation and leapfrog censuses.
inline void structural_job(const CorpusRecord& rec, const PipelineOptions& o, PipelineRow& row)
{
    const PlaneGraph& g = rec.graph;
    if (g.num_vertices() > detail::limit_or(o, 24))
        return detail::skip(row, "too many vertices");
    const int V = g.num_vertices(), E = g.num_edges(), F = g.num_faces();
    row.set("V", V);
    row.set("E", E);
    row.set("F", F);
    if (V - E + F != 2)
        row.fail("Euler formula fails");
    bool bridge = false;
    for (EdgeId e = 0; e < E; ++e)
        bridge = bridge || g.face_of(2 * e) == g.face_of(2 * e + 1);
    if (!bridge) {
        const PlaneGraph d = dual(g);
        if (d.num_vertices() != F || d.num_faces() != V)
            row.fail("dual census");
        if (!same_graph(dual(d), g))
            row.fail("dual is not an involution");
    }
    bool simple_faces = V >= 2;
    for (FaceId f = 0; f < F && simple_faces; ++f)
        simple_faces = g.face_is_simple_cycle(f);
    if (simple_faces) {
        const RadialGraph r = radial(g);
        if (r.graph.num_vertices() != V + F || r.graph.num_edges() != 2 * E)
            row.fail("radial census");
        for (const Face& f : r.graph.faces())
            if (f.length() != 4)
                row.fail("radial face " + std::to_string(f.id) + " is not a quadrilateral");
        if (!is_bipartite(r.graph.skeleton()))
            row.fail("radial graph is not bipartite");
    }
    // Truncation needs minimum degree 3.
    if (g.skeleton().min_degree() >= 3) {
        const Truncation t = truncate(g);
        if (t.graph.num_vertices() != 2 * E || t.graph.num_edges() != 3 * E || t.graph.num_faces() != V + F ||
            !t.graph.skeleton().is_regular(3))
            row.fail("truncation census");
    }
    if (!bridge && simple_faces) {
        const Leapfrog lf = leapfrog(g);
        if (lf.graph.num_vertices() != 2 * E || lf.graph.num_edges() != 3 * E || lf.graph.num_faces() != V + F)
            row.fail("leapfrog census");
        if (rec.tags.cubic) {
            const Contraction c = contract_factor(lf.graph, {lf.face_of_old_face});
            if (!same_graph(c.graph, dual(g), OuterFace::ignore))
                row.fail("leapfrog contracted on old faces is not the dual");
            for (Vertex v = 0; v < V; ++v)
                if (lf.graph.face(lf.face_of_old_vertex[v]).length() != 6)
                    row.fail("vertex face of the leapfrog is not a hexagon");
        }
    }
}

/// Existence answers for statements (i)-(iv) and conversions from each found certificate.
inline void pr3_job(const CorpusRecord& rec, const PipelineOptions& o, PipelineRow& row)
{
    if (!rec.tags.cubic || !rec.tags.bipartite || !rec.tags.three_connected)
        return detail::skip(row, "not a cubic bipartite polyhedron");
    if (rec.graph.num_vertices() > detail::limit_or(o, 16))
        return detail::skip(row, "too many vertices");
    const Pr3Context ctx = make_pr3_context(rec.graph, face_3_coloring(rec.graph));
    const auto c = pr3_find_cycle(ctx);
    const auto l = find_a_trail(ctx.h1.graph);
    const auto t3 = find_face_tree(ctx.h2.graph, pr3_tree_constraints(ctx, ctx.h2));
    const auto t4 = find_face_tree(ctx.h3.graph, pr3_tree_constraints(ctx, ctx.h3));
    const std::string answers = std::string(c ? "1" : "0") + (l ? "1" : "0") + (t3 ? "1" : "0") + (t4 ? "1" : "0");
    row.set("answers", answers);
    if (answers != "0000" && answers != "1111")
        row.fail("statements disagree");
    auto check = [&](const char* from, const Pr3Certificates& cert) {
        if (auto v = check_pr3(ctx, cert); !v)
            row.fail(std::string("conversion from ") + from + ": " + v.diagnostic);
    };
    std::optional<Pr3Certificates> base;
    if (c) {
        base = pr3_from_cycle(ctx, *c);
        check("cycle", *base);
        detail::write_certificate_file(o, "pr3", rec, certificate_of(rec.graph, c), row);
    }
    if (l) {
        const auto x = pr3_from_atrail(ctx, *l);
        check("trail", x);
        if (base) {
            const auto y = pr3_from_atrail(ctx, base->trail);
            if (!(y.trail == base->trail))
                row.fail("trail round trip");
        }
    }
    if (t3) {
        const auto x = pr3_from_tree_iii(ctx, *t3);
        check("tree (iii)", x);
        if (base && !(pr3_from_tree_iii(ctx, base->tree_iii).trail == base->trail))
            row.fail("tree (iii) round trip");
    }
    if (t4) {
        const auto x = pr3_from_tree_iv(ctx, *t4);
        check("tree (iv)", x);
        if (base && !(pr3_from_tree_iv(ctx, base->tree_iv).trail == base->trail))
            row.fail("tree (iv) round trip");
    }
}

inline void barnette_job(const CorpusRecord& rec, const PipelineOptions& o, PipelineRow& row)
{
    if (!rec.tags.cubic || !rec.tags.bipartite || !rec.tags.three_connected)
        return detail::skip(row, "not a cubic bipartite polyhedron");
    if (rec.graph.num_vertices() > detail::limit_or(o, 64))
        return detail::skip(row, "too many vertices");
    const auto c = find_hamiltonian_cycle(rec.graph.skeleton());
    row.set("hamiltonian", c ? "yes" : "no");
    if (!c)
        row.fail("no hamiltonian cycle");
    detail::write_certificate_file(o, "barnette", rec, certificate_of(rec.graph, c), row);
}

inline void goodey_job(const CorpusRecord& rec, const PipelineOptions& o, PipelineRow& row)
{
    if (!rec.tags.cubic || !rec.tags.three_connected)
        return detail::skip(row, "not a cubic polyhedron");
    for (const Face& f : rec.graph.faces())
        if (f.length() != 4 && f.length() != 6)
            return detail::skip(row, "has a face that is neither a quadrilateral nor a hexagon");
    if (rec.graph.num_vertices() > detail::limit_or(o, 64))
        return detail::skip(row, "too many vertices");
    const auto c = find_hamiltonian_cycle(rec.graph.skeleton());
    row.set("hamiltonian", c ? "yes" : "no");
    if (!c)
        row.fail("no hamiltonian cycle");
    detail::write_certificate_file(o, "goodey", rec, certificate_of(rec.graph, c), row);
}

inline void claim3_job(const CorpusRecord& rec, const PipelineOptions& o, PipelineRow& row)
{
    if (!rec.tags.cubic || !rec.tags.three_connected)
        return detail::skip(row, "not a cubic polyhedron");
    if (rec.graph.num_vertices() > detail::limit_or(o, 10))
        return detail::skip(row, "too many vertices");
    long paths = 0, bad = 0;
    for (EdgeId e = 0; e < rec.graph.num_edges(); ++e) {
        const Claim3Report r = certify_claim3(build_theorem4(rec.graph, e));
        paths += r.paths;
        if (!r.ok()) {
            ++bad;
            row.fail("edge " + std::to_string(e) + ": " + (r.notes.empty() ? "mismatch" : r.notes.front()));
        }
    }
    row.set("edges", rec.graph.num_edges());
    row.set("paths", paths);
    row.set("counterexamples", bad);
}

/// Lifts hamiltonian cycles to the leapfrog, projects them back and builds both trees.
inline void herbert_job(const CorpusRecord& rec, const PipelineOptions& o, PipelineRow& row)
{
    if (!rec.tags.cubic || !rec.tags.bipartite)
        return detail::skip(row, "not cubic bipartite");
    if (rec.graph.num_vertices() > detail::limit_or(o, 16))
        return detail::skip(row, "too many vertices");
    const LeapfrogContext ctx = make_leapfrog_context(rec.graph);
    const long limit = o.enumeration_limit > 0 ? o.enumeration_limit : 256;
    long cycles = 0;
    for_each_hamiltonian_cycle(rec.graph.skeleton(), {}, [&](const HamiltonianCycle& c0) {
        ++cycles;
        const HamiltonianCycle up = leapfrog_lift(ctx, c0);
        if (auto v = check_leapfrog_cycle(ctx, up); !v)
            row.fail("lift: " + v.diagnostic);
        if (detail::sorted(leapfrog_project(ctx, up).edges) != detail::sorted(c0.edges))
            row.fail("projection does not invert the lift");
        const HerbertTrees t = herbert_trees(ctx, up);
        if (auto v = verify_face_tree(t.inner_reduction.graph, t.inner); !v)
            row.fail("inner tree: " + v.diagnostic);
        if (auto v = verify_face_tree(t.outer_reduction.graph, t.outer); !v)
            row.fail("outer tree: " + v.diagnostic);
        return cycles < limit;
    });
    row.set("cycles", cycles);
}

/// Spanning tree of triangles in the dual triangulation: parity route versus direct search.
inline void parity_job(const CorpusRecord& rec, const PipelineOptions& o, PipelineRow& row)
{
    if (!rec.tags.cubic || !rec.tags.three_connected)
        return detail::skip(row, "not a cubic polyhedron");
    if (rec.graph.num_vertices() > detail::limit_or(o, 20))
        return detail::skip(row, "too many vertices");
    const PlaneGraph h = dual(rec.graph);
    std::vector<FaceId> d;
    for (FaceId f = 0; f < h.num_faces(); ++f)
        if (f != h.outer_face())
            d.push_back(f);
    const auto via = face_tree_via_parity(h, d);
    FaceTreeConstraints c;
    c.require_spanning = true;
    c.must_exclude = {h.outer_face()};
    const auto direct = find_face_tree(h, c);
    row.set("parity", via ? "found" : "none");
    row.set("direct", direct ? "found" : "none");
    if (via.has_value() != direct.has_value())
        row.fail("parity route and direct search disagree");
}

/// Every A-trail of an eulerian graph of minimum degree 4 goes to a tree of faces and back.
inline void obs1_job(const CorpusRecord& rec, const PipelineOptions& o, PipelineRow& row)
{
    if (!rec.tags.eulerian || rec.graph.skeleton().min_degree() < 4)
        return detail::skip(row, "not eulerian with minimum degree 4");
    if (rec.graph.num_vertices() > detail::limit_or(o, 14))
        return detail::skip(row, "too many vertices");
    const PlaneGraph& h = rec.graph;
    const FaceColoring c2 = face_2_coloring(h);
    long trails = 0;
    const long limit = o.enumeration_limit;
    for_each_a_trail(h, {}, [&](const ATrail& l) {
        ++trails;
        try {
            const FaceTree ft = atrail_to_face_tree(h, l, c2);
            if (!(face_tree_to_atrail(h, ft) == canonical_trail(l)))
                row.fail("round trip changes the trail");
        } catch (const Error& e) {
            row.fail(e.what());
        }
        return limit == 0 || trails < limit;
    });
    row.set("trails", trails);
}

/// Face-tree existence in G/Q against conforming hamiltonian cycles of G, for every facial
/// 2-factor Q and every choice of outer Q^c face.
inline void pr1_job(const CorpusRecord& rec, const PipelineOptions& o, PipelineRow& row)
{
    if (!rec.tags.cubic)
        return detail::skip(row, "not cubic");
    if (rec.graph.num_vertices() > detail::limit_or(o, 14))
        return detail::skip(row, "too many vertices");
    const auto factors = detail::facial_two_factors(rec.graph);
    long cases = 0, found = 0;
    std::vector<HamiltonianCycle> cycles;
    for_each_hamiltonian_cycle(rec.graph.skeleton(), {}, [&](const HamiltonianCycle& c) {
        cycles.push_back(c);
        return true;
    });
    for (const FacialTwoFactor& q : factors) {
        std::vector<char> in_q(rec.graph.num_faces(), 0);
        for (FaceId f : q.faces)
            in_q[f] = 1;
        for (FaceId outer = 0; outer < rec.graph.num_faces(); ++outer) {
            if (in_q[outer])
                continue;
            ++cases;
            const PlaneGraph g = rec.graph.with_outer_face(outer);
            const Contraction red = contract_factor(g, q, outer);
            const auto tree = find_face_tree(red.graph);
            std::optional<HamiltonianCycle> conforming;
            for (const HamiltonianCycle& c : cycles)
                if (pr1_cycle_conforms(g, red, cycle_sides(g, c.edges))) {
                    conforming = c;
                    break;
                }
            if (tree.has_value() != conforming.has_value()) {
                row.fail("disagreement for outer face " + std::to_string(outer));
                continue;
            }
            if (!tree)
                continue;
            ++found;
            try {
                const auto usable = find_conforming_face_tree(red);
                if (!usable) {
                    row.fail("no tree without edge-sharing faces for outer face " + std::to_string(outer));
                    continue;
                }
                const HamiltonianCycle c = face_tree_to_ham_cycle(g, red, *usable);
                const FaceTree back = ham_cycle_to_face_tree(g, red, *conforming);
                if (auto v = verify_hamiltonian_cycle(g.skeleton(), c); !v)
                    row.fail(v.diagnostic);
                if (auto v = verify_face_tree(red.graph, back); !v)
                    row.fail(v.diagnostic);
            } catch (const Error& e) {
                row.fail(e.what());
            }
        }
    }
    row.set("factors", static_cast<long>(factors.size()));
    row.set("cases", cases);
    row.set("found", found);
}

inline const std::map<std::string, PipelineJob>& pipelines()
{
    static const std::map<std::string, PipelineJob> table{
        {"structural", structural_job},   {"pr3_agreement", pr3_job},
        {"barnette_sweep", barnette_job}, {"goodey_sweep", goodey_job},
        {"claim3_sweep", claim3_job},     {"herbert_roundtrip", herbert_job},
        {"parity_vs_bruteforce", parity_job}, {"obs1_roundtrip", obs1_job},
        {"pr1_equivalence", pr1_job},
    };
    return table;
}

/// Runs a named pipeline over the corpus on a bounded worker pool. Rows follow corpus order;
/// per-graph exceptions become error rows.
inline PipelineReport run_pipeline(const std::string& name, const std::vector<CorpusRecord>& corpus,
                                   const PipelineOptions& opt = {})
{
    const auto it = pipelines().find(name);
    if (it == pipelines().end())
        throw InputError("unknown pipeline '" + name + "'");
    const PipelineJob& job = it->second;
    PipelineReport report{name, std::vector<PipelineRow>(corpus.size())};
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < corpus.size(); i = next++) {
            PipelineRow& row = report.rows[i];
            row.source = corpus[i].name();
            const auto t0 = std::chrono::steady_clock::now();
            try {
                job(corpus[i], opt, row);
            } catch (const std::exception& e) {
                row.status = RowStatus::error;
                row.note = e.what();
            }
            row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(corpus.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return report;
}

} // namespace facetree
