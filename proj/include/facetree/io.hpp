#pragma once

#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "facetree/atrail.hpp"
#include "facetree/colorings.hpp"
#include "facetree/error.hpp"
#include "facetree/face_tree.hpp"
#include "facetree/hamiltonian.hpp"
#include "facetree/parity.hpp"
#include "facetree/plane_graph.hpp"

namespace facetree {

// ---------------------------------------------------------------------------------------------
// planar_code: ">>planar_code<<", then per graph one byte n and, for each vertex, its clockwise
// neighbours (1-based) terminated by 0. Lists are reversed to counterclockwise on load.

inline constexpr std::string_view planar_code_header = ">>planar_code<<";

struct PlanarCodeOptions {
    // Outer face: the face to the right of the first listed dart of this (0-based) vertex.
    Vertex outer_vertex = 0;
};

inline std::vector<PlaneGraph> read_planar_code(std::string_view bytes, PlanarCodeOptions opt = {})
{
    if (bytes.substr(0, planar_code_header.size()) != planar_code_header)
        throw ParseError("missing >>planar_code<< header", 0);
    std::vector<PlaneGraph> out;
    std::size_t pos = planar_code_header.size();
    auto byte = [&](std::size_t at) { return static_cast<unsigned char>(bytes[at]); };
    while (pos < bytes.size()) {
        const std::size_t start = pos;
        const int n = byte(pos++);
        if (n == 0)
            throw ParseError("16-bit planar_code records are not supported", start);
        std::vector<std::vector<Vertex>> cw(n);
        for (int v = 0; v < n; ++v) {
            for (;;) {
                if (pos >= bytes.size())
                    throw ParseError("truncated record", pos);
                const int w = byte(pos++);
                if (w == 0)
                    break;
                if (w > n)
                    throw ParseError("neighbour " + std::to_string(w) + " exceeds vertex count " + std::to_string(n),
                                     pos - 1);
                cw[v].push_back(w - 1);
            }
        }
        for (auto& l : cw) {
            if (l.empty())
                throw ParseError("isolated vertex", start);
            // Reverse while keeping the first entry first.
            std::reverse(l.begin() + 1, l.end());
        }
        if (opt.outer_vertex < 0 || opt.outer_vertex >= n)
            throw ParseError("outer vertex out of range", start);
        try {
            out.push_back(from_neighbor_lists(cw, opt.outer_vertex, 0));
        } catch (const StructuralError& e) {
            throw ParseError(std::string("invalid embedding: ") + e.what(), start);
        }
    }
    return out;
}

/// Writes clockwise lists starting from the outer dart when it leaves vertex 0.
inline std::string write_planar_code(const std::vector<PlaneGraph>& graphs)
{
    std::string out(planar_code_header);
    for (const PlaneGraph& g : graphs) {
        if (g.num_vertices() > 255)
            throw InputError("planar_code writer supports at most 255 vertices");
        out.push_back(static_cast<char>(g.num_vertices()));
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const auto rot = g.rotation(v);
            const int k = static_cast<int>(rot.size());
            int first = 0;
            if (g.tail(g.outer_dart()) == v)
                first = g.position(g.outer_dart());
            for (int i = 0; i < k; ++i)
                out.push_back(static_cast<char>(g.head(rot[(first - i + k) % k]) + 1));
            out.push_back(0);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Native text format:
//   vertices N
//   v: w/e w/e ...     counterclockwise, w the neighbour, e the edge label pairing both ends
//   outer v i          outer face is right of the i-th dart at v
// Blank lines and '#' comments are ignored; several graphs may follow each other.

inline std::string write_native(const PlaneGraph& g)
{
    std::ostringstream os;
    os << "vertices " << g.num_vertices() << "\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        os << v << ":";
        for (DartId d : g.rotation(v))
            os << " " << g.head(d) << "/" << PlaneGraph::edge_of(d);
        os << "\n";
    }
    os << "outer " << g.tail(g.outer_dart()) << " " << g.position(g.outer_dart()) << "\n";
    return os.str();
}

inline std::vector<PlaneGraph> read_native(std::string_view text)
{
    std::vector<PlaneGraph> out;
    std::vector<std::vector<Vertex>> ccw;
    std::vector<std::vector<int>> labels;
    std::vector<char> seen;
    int n = -1;
    Vertex ov = 0;
    int oi = 0;
    std::size_t graph_start = 0;
    auto flush = [&]() {
        if (n < 0)
            return;
        for (int v = 0; v < n; ++v)
            if (!seen[v])
                throw ParseError("vertex " + std::to_string(v) + " has no rotation line", graph_start);
        if (ov < 0 || ov >= n || oi < 0 || oi >= static_cast<int>(ccw[ov].size()))
            throw ParseError("outer dart out of range", graph_start);
        try {
            out.push_back(from_neighbor_lists(ccw, ov, oi, &labels));
        } catch (const StructuralError& e) {
            throw ParseError(std::string("invalid embedding: ") + e.what(), graph_start);
        }
        n = -1;
    };
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string line(text.substr(pos, eol - pos));
        const std::size_t at = pos;
        pos = eol + 1;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head))
            continue;
        if (head == "vertices") {
            flush();
            if (!(ls >> n) || n <= 0)
                throw ParseError("bad vertex count", at);
            ccw.assign(n, {});
            labels.assign(n, {});
            seen.assign(n, 0);
            ov = 0;
            oi = 0;
            graph_start = at;
        } else if (n < 0) {
            throw ParseError("expected 'vertices'", at);
        } else if (head == "outer") {
            if (!(ls >> ov >> oi))
                throw ParseError("bad outer line", at);
        } else {
            if (head.back() != ':')
                throw ParseError("expected 'v:'", at);
            Vertex v = -1;
            try {
                v = std::stoi(head.substr(0, head.size() - 1));
            } catch (const std::exception&) {
                throw ParseError("bad vertex id", at);
            }
            if (v < 0 || v >= n || seen[v])
                throw ParseError("vertex id out of range or repeated", at);
            seen[v] = 1;
            std::string tok;
            while (ls >> tok) {
                const auto slash = tok.find('/');
                try {
                    if (slash == std::string::npos)
                        throw std::invalid_argument("no slash");
                    ccw[v].push_back(std::stoi(tok.substr(0, slash)));
                    labels[v].push_back(std::stoi(tok.substr(slash + 1)));
                } catch (const std::exception&) {
                    throw ParseError("bad entry '" + tok + "'", at);
                }
                if (ccw[v].back() < 0 || ccw[v].back() >= n)
                    throw ParseError("neighbour out of range", at);
            }
        }
    }
    flush();
    return out;
}

// ---------------------------------------------------------------------------------------------
// DOT

inline std::string write_dot(const PlaneGraph& g, const FaceColoring* coloring = nullptr)
{
    std::ostringstream os;
    os << "graph G {\n";
    os << "  outer_face=" << g.outer_face() << ";\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        os << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const FaceId right = g.face_of(2 * e), left = g.face_of(2 * e + 1);
        os << "  " << g.skeleton().ends(e)[0] << " -- " << g.skeleton().ends(e)[1] << " [label=" << e
           << ", right_face=" << right << ", left_face=" << left;
        if (coloring)
            os << ", right_color=" << coloring->color[right] << ", left_color=" << coloring->color[left];
        os << "];\n";
    }
    for (const Face& f : g.faces()) {
        os << "  // face " << f.id;
        if (coloring)
            os << " color " << coloring->color[f.id];
        os << ":";
        for (Vertex v : g.face_vertices(f.id))
            os << " " << v;
        os << "\n";
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------------------------
// Certificate documents

inline std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Content hash of a plane graph: FNV-1a over its native serialization, as 16 hex digits.
inline std::string graph_hash(const PlaneGraph& g)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(write_native(g));
    return os.str();
}

enum class CertificateKind { ham_cycle, ham_path, a_trail, face_tree, parity_tree };
enum class CertificateVerdict { found, none, error };

inline const char* to_string(CertificateKind k)
{
    switch (k) {
    case CertificateKind::ham_cycle: return "ham_cycle";
    case CertificateKind::ham_path: return "ham_path";
    case CertificateKind::a_trail: return "a_trail";
    case CertificateKind::face_tree: return "face_tree";
    case CertificateKind::parity_tree: return "parity_tree";
    }
    return "?";
}

inline const char* to_string(CertificateVerdict v)
{
    switch (v) {
    case CertificateVerdict::found: return "found";
    case CertificateVerdict::none: return "none";
    case CertificateVerdict::error: return "error";
    }
    return "?";
}

/// Payload fields by kind:
///   ham_cycle: edges            ham_path: ends (u v), edges
///   a_trail: darts              face_tree: faces, proper, and optional flag spanning
///   parity_tree: pairs (flattened), tree
struct CertificateDocument {
    CertificateKind kind = CertificateKind::ham_cycle;
    std::string host;      // free-form reference, e.g. "corpus.pc#3"
    std::string host_hash; // graph_hash of the host
    CertificateVerdict verdict = CertificateVerdict::found;
    std::map<std::string, std::vector<long>> payload;

    const std::vector<long>& field(const std::string& name) const
    {
        static const std::vector<long> empty;
        const auto it = payload.find(name);
        return it == payload.end() ? empty : it->second;
    }
};

inline std::string write_certificate(const CertificateDocument& doc)
{
    std::ostringstream os;
    os << "certificate " << to_string(doc.kind) << "\n";
    os << "host " << (doc.host.empty() ? "-" : doc.host) << " fnv1a:" << doc.host_hash << "\n";
    os << "verdict " << to_string(doc.verdict) << "\n";
    for (const auto& [name, values] : doc.payload) {
        os << name;
        for (long x : values)
            os << " " << x;
        os << "\n";
    }
    return os.str();
}

inline CertificateDocument read_certificate(std::string_view text)
{
    CertificateDocument doc;
    bool have_kind = false, have_host = false, have_verdict = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string line(text.substr(pos, eol - pos));
        const std::size_t at = pos;
        pos = eol + 1;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#')
            continue;
        if (key == "certificate") {
            std::string k;
            ls >> k;
            const std::map<std::string, CertificateKind> kinds{{"ham_cycle", CertificateKind::ham_cycle},
                                                               {"ham_path", CertificateKind::ham_path},
                                                               {"a_trail", CertificateKind::a_trail},
                                                               {"face_tree", CertificateKind::face_tree},
                                                               {"parity_tree", CertificateKind::parity_tree}};
            const auto it = kinds.find(k);
            if (it == kinds.end())
                throw ParseError("unknown certificate kind '" + k + "'", at);
            doc.kind = it->second;
            have_kind = true;
        } else if (key == "host") {
            std::string ref, hash;
            ls >> ref >> hash;
            if (hash.rfind("fnv1a:", 0) != 0)
                throw ParseError("host line needs an fnv1a: hash", at);
            doc.host = ref == "-" ? "" : ref;
            doc.host_hash = hash.substr(6);
            have_host = true;
        } else if (key == "verdict") {
            std::string v;
            ls >> v;
            if (v == "found")
                doc.verdict = CertificateVerdict::found;
            else if (v == "none")
                doc.verdict = CertificateVerdict::none;
            else if (v == "error")
                doc.verdict = CertificateVerdict::error;
            else
                throw ParseError("unknown verdict '" + v + "'", at);
            have_verdict = true;
        } else {
            auto& values = doc.payload[key];
            std::string tok;
            while (ls >> tok) {
                try {
                    values.push_back(std::stol(tok));
                } catch (const std::exception&) {
                    throw ParseError("bad number '" + tok + "'", at);
                }
            }
        }
    }
    if (!have_kind || !have_host || !have_verdict)
        throw ParseError("certificate lacks a certificate, host or verdict line", 0);
    return doc;
}

namespace detail {

inline std::vector<int> to_ints(const std::vector<long>& v) { return {v.begin(), v.end()}; }

} // namespace detail

/// Re-validates a certificate against its host. A "none" verdict is rechecked by exhaustive
/// search when `recheck_none` is set; "error" documents never validate.
inline Verdict validate_certificate(const CertificateDocument& doc, const PlaneGraph& host, bool recheck_none = true)
{
    if (doc.host_hash != graph_hash(host))
        return Verdict::fail("host hash mismatch");
    if (doc.verdict == CertificateVerdict::error)
        return Verdict::fail("document records an error verdict");
    const bool none = doc.verdict == CertificateVerdict::none;
    auto in_range = [](const std::vector<long>& xs, long hi) {
        for (long x : xs)
            if (x < 0 || x >= hi)
                return false;
        return true;
    };
    switch (doc.kind) {
    case CertificateKind::ham_cycle: {
        if (none) {
            if (recheck_none && find_hamiltonian_cycle(host.skeleton()))
                return Verdict::fail("a hamiltonian cycle exists");
            return Verdict::pass();
        }
        if (!in_range(doc.field("edges"), host.num_edges()))
            return Verdict::fail("edge id out of range");
        const auto c = cycle_from_edges(host.skeleton(), detail::to_ints(doc.field("edges")));
        if (!c)
            return Verdict::fail("edges do not form a cycle");
        return verify_hamiltonian_cycle(host.skeleton(), *c);
    }
    case CertificateKind::ham_path: {
        const auto& ends = doc.field("ends");
        if (ends.size() != 2 || !in_range(ends, host.num_vertices()))
            return Verdict::fail("ham_path needs valid ends");
        const Vertex u = static_cast<Vertex>(ends[0]), v = static_cast<Vertex>(ends[1]);
        if (none) {
            if (recheck_none && find_hamiltonian_path(host.skeleton(), u, v))
                return Verdict::fail("a hamiltonian path exists");
            return Verdict::pass();
        }
        const auto& es = doc.field("edges");
        if (!in_range(es, host.num_edges()))
            return Verdict::fail("edge id out of range");
        // Rebuild the vertex sequence by walking from u.
        HamiltonianPath p;
        p.edges = detail::to_ints(es);
        std::vector<char> used(es.size(), 0);
        Vertex cur = u;
        p.vertices.push_back(u);
        for (std::size_t step = 0; step < es.size(); ++step) {
            bool moved = false;
            for (std::size_t i = 0; i < es.size() && !moved; ++i) {
                const auto& e = host.skeleton().ends(static_cast<EdgeId>(es[i]));
                if (!used[i] && (e[0] == cur || e[1] == cur)) {
                    used[i] = 1;
                    cur = e[0] == cur ? e[1] : e[0];
                    p.vertices.push_back(cur);
                    moved = true;
                }
            }
            if (!moved)
                return Verdict::fail("edges do not form a path from u");
        }
        // Edge order must follow the walk.
        p.edges.clear();
        {
            std::vector<char> taken(es.size(), 0);
            for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k)
                for (std::size_t i = 0; i < es.size(); ++i) {
                    const auto& e = host.skeleton().ends(static_cast<EdgeId>(es[i]));
                    const bool fits = (e[0] == p.vertices[k] && e[1] == p.vertices[k + 1]) ||
                                      (e[1] == p.vertices[k] && e[0] == p.vertices[k + 1]);
                    if (!taken[i] && fits) {
                        taken[i] = 1;
                        p.edges.push_back(static_cast<EdgeId>(es[i]));
                        break;
                    }
                }
        }
        return verify_hamiltonian_path(host.skeleton(), p, u, v);
    }
    case CertificateKind::a_trail: {
        if (none) {
            if (recheck_none && find_a_trail(host))
                return Verdict::fail("an A-trail exists");
            return Verdict::pass();
        }
        if (!in_range(doc.field("darts"), host.num_darts()))
            return Verdict::fail("dart id out of range");
        return verify_a_trail(host, ATrail{detail::to_ints(doc.field("darts"))});
    }
    case CertificateKind::face_tree: {
        const bool spanning = !doc.field("spanning").empty() && doc.field("spanning")[0] != 0;
        if (none) {
            FaceTreeConstraints c;
            c.require_spanning = spanning;
            if (recheck_none && find_face_tree(host, c))
                return Verdict::fail("a tree of faces exists");
            return Verdict::pass();
        }
        if (!in_range(doc.field("faces"), host.num_faces()) || !in_range(doc.field("proper"), host.num_vertices()))
            return Verdict::fail("face or vertex id out of range");
        const FaceTree ft{detail::to_ints(doc.field("faces")), detail::to_ints(doc.field("proper"))};
        if (spanning && !is_spanning(host, ft))
            return Verdict::fail("tree is not spanning");
        return verify_face_tree(host, ft);
    }
    case CertificateKind::parity_tree: {
        const auto& flat = doc.field("pairs");
        if (flat.size() % 2 != 0 || !in_range(flat, host.num_edges()))
            return Verdict::fail("pairs must list an even number of valid edge ids");
        ParityInstance inst{host.skeleton(), {}};
        for (std::size_t i = 0; i < flat.size(); i += 2)
            inst.pairs.push_back({static_cast<EdgeId>(flat[i]), static_cast<EdgeId>(flat[i + 1])});
        if (auto v = validate_parity_instance(inst); !v)
            return v;
        if (none) {
            if (recheck_none && solve_spanning_tree_parity(inst))
                return Verdict::fail("a parity tree exists");
            return Verdict::pass();
        }
        if (!in_range(doc.field("tree"), host.num_edges()))
            return Verdict::fail("edge id out of range");
        return is_parity_tree(inst, detail::to_ints(doc.field("tree"))) ? Verdict::pass()
                                                                         : Verdict::fail("not a parity tree");
    }
    }
    return Verdict::fail("unknown kind");
}

/// Loads and validates in one step; throws InputError when validation fails.
inline CertificateDocument load_certificate(std::string_view text, const PlaneGraph& host)
{
    CertificateDocument doc = read_certificate(text);
    if (auto v = validate_certificate(doc, host); !v)
        throw InputError("certificate does not validate: " + v.diagnostic);
    return doc;
}

inline CertificateDocument make_certificate(CertificateKind kind, const PlaneGraph& host, std::string host_ref = {})
{
    CertificateDocument doc;
    doc.kind = kind;
    doc.host = std::move(host_ref);
    doc.host_hash = graph_hash(host);
    return doc;
}

inline CertificateDocument certificate_of(const PlaneGraph& host, const std::optional<HamiltonianCycle>& c)
{
    auto doc = make_certificate(CertificateKind::ham_cycle, host);
    doc.verdict = c ? CertificateVerdict::found : CertificateVerdict::none;
    if (c)
        doc.payload["edges"] = {c->edges.begin(), c->edges.end()};
    return doc;
}

inline CertificateDocument certificate_of(const PlaneGraph& host, const std::optional<ATrail>& l)
{
    auto doc = make_certificate(CertificateKind::a_trail, host);
    doc.verdict = l ? CertificateVerdict::found : CertificateVerdict::none;
    if (l)
        doc.payload["darts"] = {l->darts.begin(), l->darts.end()};
    return doc;
}

inline CertificateDocument certificate_of(const PlaneGraph& host, const std::optional<FaceTree>& ft, bool spanning)
{
    auto doc = make_certificate(CertificateKind::face_tree, host);
    doc.verdict = ft ? CertificateVerdict::found : CertificateVerdict::none;
    doc.payload["spanning"] = {spanning ? 1 : 0};
    if (ft) {
        doc.payload["faces"] = {ft->faces.begin(), ft->faces.end()};
        doc.payload["proper"] = {ft->proper.begin(), ft->proper.end()};
    }
    return doc;
}

inline CertificateDocument certificate_of(const PlaneGraph& host, Vertex u, Vertex v,
                                          const std::optional<HamiltonianPath>& p)
{
    auto doc = make_certificate(CertificateKind::ham_path, host);
    doc.verdict = p ? CertificateVerdict::found : CertificateVerdict::none;
    doc.payload["ends"] = {u, v};
    if (p)
        doc.payload["edges"] = {p->edges.begin(), p->edges.end()};
    return doc;
}

} // namespace facetree
