// Command-line front end: ingest, solve, convert, reduce, pipeline, export, verify.
// Exit codes: 0 clean, 2 property violation or failed verification, 1 operational error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "facetree.hpp"

using namespace facetree;

namespace {

struct Source {
    std::string path;
    int index = 0;
    int outer_vertex = 0;

    void add(CLI::App* cmd, bool with_file = true)
    {
        if (with_file)
            cmd->add_option("file", path, "graph file (planar_code or native text)")->required();
        cmd->add_option("--index", index, "graph position within the file");
        cmd->add_option("--outer-vertex", outer_vertex, "planar_code: outer face is right of this vertex's first dart");
    }

    PlaneGraph load() const
    {
        const auto graphs = parse_graphs(read_file(path), {outer_vertex});
        if (index < 0 || index >= static_cast<int>(graphs.size()))
            throw InputError("file holds " + std::to_string(graphs.size()) + " graphs; no index " +
                             std::to_string(index));
        return graphs[index];
    }
};

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + out_path);
    out << text;
}

int verdict_exit(const Verdict& v)
{
    if (v)
        return 0;
    std::cerr << "violation: " << v.diagnostic << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Plane graph certificates: hamiltonian cycles, A-trails and spanning trees of faces"};
    app.require_subcommand(1);
    int code = 0;

    // ingest
    auto* ingest = app.add_subcommand("ingest", "parse a corpus file and list its graphs");
    Source ingest_src;
    ingest_src.add(ingest);

    // solve
    auto* solve = app.add_subcommand("solve", "run an exact solver and print a certificate");
    std::string problem, solve_out;
    Source solve_src;
    std::vector<int> forced, forbidden, must_contain, must_exclude, parity_faces;
    bool spanning = false, non_separating = false;
    int path_u = -1, path_v = -1;
    solve->add_option("problem", problem, "ham | path | atrail | facetree | parity")
        ->required()
        ->check(CLI::IsMember({"ham", "path", "atrail", "facetree", "parity"}));
    solve_src.add(solve);
    solve->add_option("--forced", forced, "edges every cycle must use");
    solve->add_option("--forbidden", forbidden, "edges no cycle may use");
    solve->add_option("--from", path_u, "path start");
    solve->add_option("--to", path_v, "path end");
    solve->add_flag("--spanning", spanning, "tree of faces must make every vertex proper");
    solve->add_option("--must-contain", must_contain, "faces the tree must contain");
    solve->add_option("--must-exclude", must_exclude, "faces the tree must avoid");
    solve->add_flag("--non-separating", non_separating, "A-trail must be non-separating");
    solve->add_option("--faces", parity_faces, "parity: digons and triangles to use (default: all but outer)");
    solve->add_option("-o,--out", solve_out, "write the certificate here");

    // convert
    auto* convert = app.add_subcommand("convert", "convert certificates between equivalent statements");
    std::string conversion;
    Source conv_src;
    int factor_color = 1;
    convert->add_option("conversion", conversion, "pr1 | pr3 | obs1 | leapfrog")
        ->required()
        ->check(CLI::IsMember({"pr1", "pr3", "obs1", "leapfrog"}));
    conv_src.add(convert);
    convert->add_option("--color", factor_color, "pr1: colour class contracted");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "apply a hardness reduction and print the result");
    std::string reduction, reduce_out;
    Source red_src;
    int red_edge = 0, red_face = 0;
    std::vector<int> red_vertices;
    reduce->add_option("reduction", reduction, "t4 | c3 | c4 | splice | subst | quad")
        ->required()
        ->check(CLI::IsMember({"t4", "c3", "c4", "splice", "subst", "quad"}));
    red_src.add(reduce);
    reduce->add_option("--edge", red_edge, "t4, c3, c4: edge removed from the cubic graph");
    reduce->add_option("--vertex", red_vertices, "splice, subst: vertices replaced by a cube minus a vertex");
    reduce->add_option("--face", red_face, "quad: quadrilateral removed");
    reduce->add_option("-o,--out", reduce_out, "write the result here (native text)");

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "run a named batch pipeline over corpus files");
    std::string pipeline_name;
    std::vector<std::string> corpus_files;
    PipelineOptions popt;
    int pipe_outer = 0;
    std::string report_out;
    pipeline->add_option("name", pipeline_name, "pipeline name")->required();
    pipeline->add_option("files", corpus_files, "corpus files")->required();
    pipeline->add_option("--threads", popt.threads, "worker threads");
    pipeline->add_option("--max-vertices", popt.max_vertices, "skip larger graphs (0: pipeline default)");
    pipeline->add_option("--limit", popt.enumeration_limit, "cap on enumerated certificates per graph");
    pipeline->add_option("--cert-dir", popt.certificate_dir, "write certificate documents here");
    pipeline->add_option("--outer-vertex", pipe_outer, "planar_code outer-face vertex");
    pipeline->add_flag("--timings", popt.timings, "add per-row seconds (breaks byte-identical reports)");
    pipeline->add_option("-o,--out", report_out, "write the report here");

    // export
    auto* exporter = app.add_subcommand("export", "write a graph as DOT, native text or planar_code");
    Source exp_src;
    std::string format = "native", export_out;
    int export_coloring = 0;
    exp_src.add(exporter);
    exporter->add_option("--format", format, "dot | native | planar_code")
        ->check(CLI::IsMember({"dot", "native", "planar_code"}));
    exporter->add_option("--coloring", export_coloring, "dot: attach a 2- or 3-face-colouring");
    exporter->add_option("-o,--out", export_out, "output file");

    // verify
    auto* verify = app.add_subcommand("verify", "re-validate a certificate document against its host graph");
    std::string cert_path;
    Source ver_src;
    verify->add_option("certificate", cert_path, "certificate document")->required();
    ver_src.add(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) {
            const auto graphs = parse_graphs(read_file(ingest_src.path), {ingest_src.outer_vertex});
            const auto corpus = make_corpus(ingest_src.path, graphs);
            for (const auto& r : corpus)
                std::cout << r.index << "\tV=" << r.graph.num_vertices() << "\tE=" << r.graph.num_edges()
                          << "\tF=" << r.graph.num_faces() << "\tcubic=" << r.tags.cubic
                          << "\tbipartite=" << r.tags.bipartite << "\t3-connected=" << r.tags.three_connected
                          << "\teulerian=" << r.tags.eulerian << "\n";
            std::cout << "# graphs " << corpus.size() << "\n";
        } else if (*solve) {
            const PlaneGraph g = solve_src.load();
            CertificateDocument doc;
            if (problem == "ham") {
                doc = certificate_of(g, find_hamiltonian_cycle(g.skeleton(), {forced, forbidden}));
            } else if (problem == "path") {
                doc = certificate_of(g, path_u, path_v, find_hamiltonian_path(g.skeleton(), path_u, path_v));
            } else if (problem == "atrail") {
                ATrailOptions opt;
                opt.require_non_separating = non_separating;
                doc = certificate_of(g, find_a_trail(g, opt));
            } else if (problem == "facetree") {
                FaceTreeConstraints c;
                c.require_spanning = spanning;
                c.must_contain = must_contain;
                c.must_exclude = must_exclude;
                doc = certificate_of(g, find_face_tree(g, c), spanning);
            } else {
                if (parity_faces.empty())
                    for (FaceId f = 0; f < g.num_faces(); ++f)
                        if (f != g.outer_face())
                            parity_faces.push_back(f);
                ParityInstance inst;
                const auto ft = face_tree_via_parity(g, parity_faces, &inst);
                doc = certificate_of(g, ft, true);
            }
            doc.host = solve_src.path + "#" + std::to_string(solve_src.index);
            emit(write_certificate(doc), solve_out);
        } else if (*convert) {
            const PlaneGraph g = conv_src.load();
            if (conversion == "pr3") {
                const Pr3Context ctx = make_pr3_context(g, face_3_coloring(g));
                const auto c = pr3_find_cycle(ctx);
                if (!c) {
                    std::cout << "none: no cycle with 2-faces inside and 3-faces outside\n";
                } else {
                    const Pr3Certificates cert = pr3_from_cycle(ctx, *c);
                    code = verdict_exit(check_pr3(ctx, cert));
                    std::cout << "cycle";
                    for (EdgeId e : cert.cycle.edges)
                        std::cout << " " << e;
                    std::cout << "\ntrail";
                    for (DartId d : cert.trail.darts)
                        std::cout << " " << d;
                    std::cout << "\ntree_iii";
                    for (FaceId f : cert.tree_iii.faces)
                        std::cout << " " << f;
                    std::cout << "\ntree_iv";
                    for (FaceId f : cert.tree_iv.faces)
                        std::cout << " " << f;
                    std::cout << "\n";
                }
            } else if (conversion == "pr1") {
                const FaceColoring col = face_3_coloring(g);
                const Contraction red = contract_factor(g, {col.faces_of(factor_color)});
                const auto ft = find_conforming_face_tree(red);
                if (!ft) {
                    std::cout << "none: no tree of faces in the contraction\n";
                } else {
                    const HamiltonianCycle c = face_tree_to_ham_cycle(g, red, *ft);
                    code = verdict_exit(verify_hamiltonian_cycle(g.skeleton(), c));
                    std::cout << "faces";
                    for (FaceId f : ft->faces)
                        std::cout << " " << f;
                    std::cout << "\ncycle";
                    for (EdgeId e : c.edges)
                        std::cout << " " << e;
                    std::cout << "\n";
                }
            } else if (conversion == "obs1") {
                const auto l = find_a_trail(g);
                if (!l) {
                    std::cout << "none: no A-trail\n";
                } else {
                    const FaceTree ft = atrail_to_face_tree(g, *l, face_2_coloring(g));
                    const ATrail back = face_tree_to_atrail(g, ft);
                    code = back == canonical_trail(*l) ? 0 : 2;
                    std::cout << "faces";
                    for (FaceId f : ft.faces)
                        std::cout << " " << f;
                    std::cout << "\nround_trip " << (code == 0 ? "ok" : "differs") << "\n";
                }
            } else {
                const LeapfrogContext ctx = make_leapfrog_context(g);
                const auto c = find_hamiltonian_cycle(g.skeleton());
                if (!c) {
                    std::cout << "none: not hamiltonian\n";
                } else {
                    const HamiltonianCycle up = leapfrog_lift(ctx, *c);
                    code = verdict_exit(check_leapfrog_cycle(ctx, up));
                    std::cout << "lifted";
                    for (EdgeId e : up.edges)
                        std::cout << " " << e;
                    std::cout << "\n";
                }
            }
        } else if (*reduce) {
            const PlaneGraph g = red_src.load();
            std::string text;
            if (reduction == "t4" || reduction == "c3" || reduction == "c4") {
                const Theorem4Instance inst = build_theorem4(g, red_edge);
                if (reduction == "t4")
                    text = write_native(inst.g);
                else if (reduction == "c3")
                    text = write_native(corollary3_contract(inst).graph);
                else
                    text = write_native(corollary4_split(inst).h0);
            } else if (reduction == "splice") {
                text = write_native(q3_splice(g, red_vertices.empty() ? 0 : red_vertices.front()).graph);
            } else if (reduction == "subst") {
                const PlaneGraph cube = fixtures::cube();
                std::vector<Pin> pins;
                for (int x : red_vertices.empty() ? std::vector<int>{0} : red_vertices)
                    pins.push_back({x, cube, 0});
                const SubstitutionReport rep = certify_substitution(g, pins);
                std::cerr << "composed_hamiltonian " << rep.composed_hamiltonian << " predicted "
                          << rep.predicted_hamiltonian << "\n";
                if (!rep.ok())
                    code = 2;
                text = write_native(vertex_substitution(g, pins));
            } else {
                const QuadSplit s = quad_split(g, red_face);
                text = write_native(s.first) + write_native(s.second);
            }
            emit(text, reduce_out);
        } else if (*pipeline) {
            std::vector<CorpusRecord> corpus;
            for (const auto& f : corpus_files) {
                auto part = load_corpus(f, {pipe_outer});
                corpus.insert(corpus.end(), part.begin(), part.end());
            }
            const PipelineReport rep = run_pipeline(pipeline_name, corpus, popt);
            emit(rep.format(popt.timings), report_out);
            code = rep.exit_code();
        } else if (*exporter) {
            const PlaneGraph g = exp_src.load();
            if (format == "native") {
                emit(write_native(g), export_out);
            } else if (format == "planar_code") {
                emit(write_planar_code({g}), export_out);
            } else {
                std::optional<FaceColoring> col;
                if (export_coloring == 2)
                    col = face_2_coloring(g);
                else if (export_coloring == 3)
                    col = face_3_coloring(g);
                emit(write_dot(g, col ? &*col : nullptr), export_out);
            }
        } else if (*verify) {
            const PlaneGraph g = ver_src.load();
            const CertificateDocument doc = read_certificate(read_file(cert_path));
            const Verdict v = validate_certificate(doc, g);
            code = verdict_exit(v);
            if (v)
                std::cout << "valid " << to_string(doc.kind) << " (" << to_string(doc.verdict) << ")\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
