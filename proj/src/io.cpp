#include "fum/io.hpp"

#include <fstream>
#include <sstream>

namespace fum {

std::vector<PlaneGraph> parse_planar_code(const std::vector<uint8_t>& bytes) {
    const std::string header = kPlanarCodeHeader;
    if (bytes.size() < header.size() ||
        !std::equal(header.begin(), header.end(), bytes.begin()))
        throw GraphError(Err::BadHeader, "planar_code header missing");

    std::vector<PlaneGraph> out;
    size_t pos = header.size();
    int record = 0;
    while (pos < bytes.size()) {
        int n = bytes[pos++];
        if (n == 0)
            throw GraphError(Err::WideFormatUnsupported,
                             "record " + std::to_string(record) +
                                 ": 16-bit planar_code records are not supported");
        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v) {
            for (;;) {
                if (pos >= bytes.size())
                    throw GraphError(Err::TruncatedRecord,
                                     "record " + std::to_string(record) + ", vertex " +
                                         std::to_string(v));
                int w = bytes[pos++];
                if (w == 0) break;
                if (w > n)
                    throw GraphError(Err::NeighborOutOfRange,
                                     "record " + std::to_string(record) + ": neighbor " +
                                         std::to_string(w) + " of vertex " + std::to_string(v));
                rot[v].push_back(w - 1);
            }
        }
        std::optional<Dart> outer;
        if (!rot[0].empty()) outer = Dart{0, rot[0][0]};
        for (int v = 0; v < n && !outer; ++v)
            if (!rot[v].empty()) outer = Dart{v, rot[v][0]};
        try {
            out.push_back(PlaneGraph::build(n, std::move(rot), outer));
        } catch (const GraphError& e) {
            throw GraphError(Err::EmbeddingInvalid,
                             "record " + std::to_string(record) + ": " + e.what());
        }
        ++record;
    }
    return out;
}

std::vector<uint8_t> serialize_planar_code(const std::vector<PlaneGraph>& graphs) {
    std::vector<uint8_t> out;
    const std::string header = kPlanarCodeHeader;
    out.insert(out.end(), header.begin(), header.end());
    for (const PlaneGraph& g : graphs) {
        if (g.vertex_count() < 1 || g.vertex_count() > 255)
            throw GraphError(Err::BadInput, "planar_code records hold 1..255 vertices");
        out.push_back(static_cast<uint8_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int w : g.neighbors(v)) out.push_back(static_cast<uint8_t>(w + 1));
            out.push_back(0);
        }
    }
    return out;
}

PlaneGraph parse_rotation_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> rot;
    std::vector<Dart> outer_darts;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto fail = [&](const std::string& msg) {
            throw GraphError(Err::BadInput, "line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok == "n") {
            if (n != -1) fail("duplicate vertex-count line");
            if (!(ls >> n) || n < 0) fail("bad vertex count");
            rot.assign(n, {});
        } else if (tok == "outer") {
            int u, v;
            if (!(ls >> u >> v)) fail("outer line needs two vertex ids");
            outer_darts.push_back(Dart{u, v});
        } else {
            if (n == -1) fail("vertex line before the n line");
            if (tok.empty() || tok.back() != ':') fail("expected `<v>:`");
            int v;
            try {
                v = std::stoi(tok.substr(0, tok.size() - 1));
            } catch (...) {
                fail("bad vertex id");
                return {};
            }
            if (v < 0 || v >= n) fail("vertex id out of range");
            if (!rot[v].empty()) fail("duplicate vertex line");
            int w;
            while (ls >> w) rot[v].push_back(w);
            if (!ls.eof()) fail("bad neighbor id");
        }
    }
    if (n == -1) throw GraphError(Err::BadInput, "missing `n <count>` line");
    if (outer_darts.empty()) return PlaneGraph::build(n, std::move(rot));
    if (outer_darts.size() == 1)
        return PlaneGraph::build(n, std::move(rot), outer_darts.front());
    return PlaneGraph::build_with_outer_darts(n, std::move(rot), outer_darts);
}

std::string serialize_rotation_text(const PlaneGraph& g) {
    std::ostringstream os;
    os << "n " << g.vertex_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << v << ":";
        for (int w : g.neighbors(v)) os << " " << w;
        os << "\n";
    }
    for (const Dart& d : g.outer_darts()) os << "outer " << d.tail << " " << d.head << "\n";
    return os.str();
}

std::vector<uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw GraphError(Err::BadInput, "cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw GraphError(Err::BadInput, "cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

std::vector<PlaneGraph> load_graphs(const std::vector<uint8_t>& bytes,
                                    std::optional<Dart> outer_override) {
    const std::string header = kPlanarCodeHeader;
    std::vector<PlaneGraph> gs;
    if (bytes.size() >= header.size() &&
        std::equal(header.begin(), header.end(), bytes.begin())) {
        gs = parse_planar_code(bytes);
    } else {
        gs.push_back(parse_rotation_text(std::string(bytes.begin(), bytes.end())));
    }
    if (outer_override) {
        for (PlaneGraph& g : gs)
            g = PlaneGraph::build(g.vertex_count(), g.rotation(), outer_override);
    }
    return gs;
}

nlohmann::json to_json(const Verdict& v) {
    nlohmann::json out;
    out["ok"] = v.ok;
    nlohmann::json arr = nlohmann::json::array();
    for (const Violation& viol : v.violations) {
        nlohmann::json j;
        j["kind"] = violation_name(viol.kind);
        if (viol.face >= 0) j["face"] = viol.face;
        if (!viol.vertices.empty()) j["vertices"] = viol.vertices;
        if (!viol.edges.empty()) {
            nlohmann::json es = nlohmann::json::array();
            for (const Edge& e : viol.edges) es.push_back({e.a, e.b});
            j["edges"] = es;
        }
        j["detail"] = viol.detail;
        arr.push_back(j);
    }
    out["violations"] = arr;
    return out;
}

nlohmann::json to_json(const VertexColoring& c) {
    return nlohmann::json(c.colors);
}

nlohmann::json to_json(const EdgeColoring& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, col] : c.colors) {
        nlohmann::json j;
        j["edge"] = {e.a, e.b};
        j["color"] = col;
        arr.push_back(j);
    }
    return arr;
}

nlohmann::json to_json(const Classification& c) {
    nlohmann::json j;
    j["is_subcubic"] = c.is_subcubic;
    j["is_outerplane"] = c.is_outerplane;
    j["is_quadrangulation"] = c.is_quadrangulation;
    j["is_bipartite"] = c.is_bipartite;
    j["is_2connected"] = c.is_2connected;
    j["girth"] = c.girth ? nlohmann::json(*c.girth) : nlohmann::json(nullptr);
    return j;
}

std::string export_dot(const PlaneGraph& g, const VertexColoring* vc, const EdgeColoring* ec) {
    static const char* palette[6] = {"#e6194b", "#3cb44b", "#ffe119",
                                     "#4363d8", "#f58231", "#911eb4"};
    std::ostringstream os;
    os << "graph fum {\n";
    os << "  node [style=filled fillcolor=white];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << v << " [label=\"" << v;
        if (vc && (*vc)[v] > 0) os << "\\n" << (*vc)[v];
        os << "\"";
        if (vc && (*vc)[v] > 0)
            os << " fillcolor=\"" << palette[((*vc)[v] - 1) % 6] << "\"";
        os << "];\n";
    }
    for (const Edge& e : g.edges()) {
        os << "  v" << e.a << " -- v" << e.b;
        if (ec && ec->at(e) > 0) {
            os << " [label=\"" << ec->at(e) << "\" color=\"" << palette[(ec->at(e) - 1) % 6]
               << "\"]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace fum
