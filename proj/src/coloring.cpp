#include "fum/coloring.hpp"

#include <algorithm>

namespace fum {

int VertexColoring::max_color() const {
    int m = 0;
    for (int c : colors) m = std::max(m, c);
    return m;
}

int EdgeColoring::max_color() const {
    int m = 0;
    for (const auto& [e, c] : colors) m = std::max(m, c);
    return m;
}

bool PrecoloredPath::contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::optional<int> PrecoloredPath::color_of(int v) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return colors[i];
    return std::nullopt;
}

void PrecoloredPath::validate(const PlaneGraph& g) const {
    if (vertices.size() > 2 || vertices.size() != colors.size())
        throw GraphError(Err::BadInput, "precolored path has at most two vertices");
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw GraphError(Err::BadInput, "precolored path vertex out of range");
        if (colors[i] < 1 || colors[i] > 3)
            throw GraphError(Err::BadInput, "precolored path colors lie in {1,2,3}");
        if (!g.vertex_on_outer(v))
            throw GraphError(Err::PathNotOnOuterFace,
                             "vertex " + std::to_string(v) + " is not on the outer face");
    }
    if (vertices.size() == 2) {
        if (vertices[0] == vertices[1])
            throw GraphError(Err::BadInput, "precolored path repeats a vertex");
        if (colors[0] == colors[1])
            throw GraphError(Err::BadInput, "precolored path is not properly colored");
        int f = g.outer_face_index_of_component(g.component_of(vertices[0]));
        bool consecutive = false;
        if (f != -1)
            for (const Dart& d : g.face(f).walk)
                if ((d.tail == vertices[0] && d.head == vertices[1]) ||
                    (d.tail == vertices[1] && d.head == vertices[0]))
                    consecutive = true;
        if (!consecutive)
            throw GraphError(Err::PathNotOnOuterFace,
                             "path vertices are not adjacent along the outer face");
    }
}

const char* violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::ImproperEdge: return "ImproperEdge";
        case ViolationKind::DuplicateFaceMax: return "DuplicateFaceMax";
        case ViolationKind::NoFaceMax: return "NoFaceMax";
        case ViolationKind::OuterColorTooBig: return "OuterColorTooBig";
        case ViolationKind::ColorAboveFour: return "ColorAboveFour";
        case ViolationKind::PrecoloringMismatch: return "PrecoloringMismatch";
    }
    return "UnknownViolation";
}

std::vector<SemanticFace> semantic_faces(const PlaneGraph& g) {
    const auto& faces = g.faces();
    bool needs_designation = false;
    if (g.edge_count() > 0 && !g.has_outer_designation()) {
        // fine for a single connected component: every face stands alone
        needs_designation = g.component_count() > 1;
        if (needs_designation)
            throw GraphError(Err::MissingOuterDart,
                             "disconnected graph needs a designated outer face");
        std::vector<SemanticFace> out;
        for (size_t i = 0; i < faces.size(); ++i) {
            SemanticFace sf;
            sf.vertices = faces[i].vertices;
            sf.edges = faces[i].edges;
            sf.source_faces = {static_cast<int>(i)};
            out.push_back(std::move(sf));
        }
        return out;
    }

    std::vector<SemanticFace> out;
    SemanticFace outer;
    outer.is_outer = true;
    bool have_outer = false;
    for (size_t i = 0; i < faces.size(); ++i) {
        const Face& f = faces[i];
        if (f.is_outer) {
            have_outer = true;
            outer.source_faces.push_back(static_cast<int>(i));
            outer.vertices.insert(outer.vertices.end(), f.vertices.begin(), f.vertices.end());
            outer.edges.insert(outer.edges.end(), f.edges.begin(), f.edges.end());
        } else {
            SemanticFace sf;
            sf.vertices = f.vertices;
            sf.edges = f.edges;
            sf.source_faces = {static_cast<int>(i)};
            out.push_back(std::move(sf));
        }
    }
    if (have_outer) {
        std::sort(outer.vertices.begin(), outer.vertices.end());
        outer.vertices.erase(std::unique(outer.vertices.begin(), outer.vertices.end()),
                             outer.vertices.end());
        std::sort(outer.edges.begin(), outer.edges.end());
        outer.edges.erase(std::unique(outer.edges.begin(), outer.edges.end()), outer.edges.end());
        out.insert(out.begin(), std::move(outer));
    }
    return out;
}

std::set<std::pair<Edge, Edge>> facial_adjacent_edge_pairs(const PlaneGraph& g) {
    std::set<std::pair<Edge, Edge>> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& r = g.neighbors(v);
        int d = static_cast<int>(r.size());
        if (d < 2) continue;
        for (int i = 0; i < d; ++i) {
            Edge e(v, r[i]);
            Edge f(v, r[(i + 1) % d]);
            if (e != f) out.insert(FreePairSet::normalize(e, f));
        }
    }
    return out;
}

namespace {

void require_total_vertices(const PlaneGraph& g, const VertexColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw GraphError(Err::PartialColoring, "coloring size differs from vertex count");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.colors[v] <= 0)
            throw GraphError(Err::PartialColoring, "vertex " + std::to_string(v) + " uncolored");
}

void require_total_edges(const PlaneGraph& g, const EdgeColoring& c) {
    for (const Edge& e : g.edges())
        if (c.at(e) <= 0)
            throw GraphError(Err::PartialColoring, "edge (" + std::to_string(e.a) + "," +
                                                       std::to_string(e.b) + ") uncolored");
}

void check_face_unique_max_vertices(const std::vector<SemanticFace>& sfs, const VertexColoring& c,
                                    bool skip_outer, Verdict& verdict) {
    for (size_t i = 0; i < sfs.size(); ++i) {
        const SemanticFace& sf = sfs[i];
        if (skip_outer && sf.is_outer) continue;
        if (sf.vertices.empty()) continue;
        int mx = 0;
        for (int v : sf.vertices) mx = std::max(mx, c[v]);
        std::vector<int> at_max;
        for (int v : sf.vertices)
            if (c[v] == mx) at_max.push_back(v);
        if (at_max.size() != 1) {
            Violation viol;
            viol.kind = ViolationKind::DuplicateFaceMax;
            viol.face = static_cast<int>(i);
            viol.vertices = at_max;
            viol.detail = "maximum color " + std::to_string(mx) + " occurs " +
                          std::to_string(at_max.size()) + " times";
            verdict.add(std::move(viol));
        }
    }
}

}  // namespace

Verdict check_fum_vertex(const PlaneGraph& g, const VertexColoring& c) {
    require_total_vertices(g, c);
    Verdict verdict;
    for (const Edge& e : g.edges()) {
        if (c[e.a] == c[e.b]) {
            Violation v;
            v.kind = ViolationKind::ImproperEdge;
            v.edges = {e};
            v.detail = "both endpoints colored " + std::to_string(c[e.a]);
            verdict.add(std::move(v));
        }
    }
    auto sfs = semantic_faces(g);
    check_face_unique_max_vertices(sfs, c, /*skip_outer=*/false, verdict);
    return verdict;
}

Verdict check_f_facial_edge_coloring(const PlaneGraph& g, const EdgeColoring& c,
                                     const FreePairSet& fp) {
    require_total_edges(g, c);
    Verdict verdict;
    for (const auto& [e, f] : facial_adjacent_edge_pairs(g)) {
        if (fp.contains(e, f)) continue;
        if (c.at(e) == c.at(f)) {
            Violation v;
            v.kind = ViolationKind::ImproperEdge;
            v.edges = {e, f};
            v.detail = "facially adjacent edges share color " + std::to_string(c.at(e));
            verdict.add(std::move(v));
        }
    }
    return verdict;
}

Verdict check_fum_edge(const PlaneGraph& g, const EdgeColoring& c, const FreePairSet& fp,
                       bool exclude_outer, std::optional<int> outer_cap) {
    Verdict verdict = check_f_facial_edge_coloring(g, c, fp);
    auto sfs = semantic_faces(g);
    for (size_t i = 0; i < sfs.size(); ++i) {
        const SemanticFace& sf = sfs[i];
        if (sf.is_outer) {
            if (outer_cap)
                for (const Edge& e : sf.edges)
                    if (c.at(e) > *outer_cap) {
                        Violation v;
                        v.kind = ViolationKind::OuterColorTooBig;
                        v.face = static_cast<int>(i);
                        v.edges = {e};
                        v.detail = "outer edge colored " + std::to_string(c.at(e)) +
                                   " above cap " + std::to_string(*outer_cap);
                        verdict.add(std::move(v));
                    }
            if (exclude_outer) continue;
        }
        if (sf.edges.empty()) continue;
        int mx = 0;
        for (const Edge& e : sf.edges) mx = std::max(mx, c.at(e));
        std::vector<Edge> at_max;
        for (const Edge& e : sf.edges)
            if (c.at(e) == mx) at_max.push_back(e);
        if (at_max.size() != 1) {
            Violation v;
            v.kind = ViolationKind::DuplicateFaceMax;
            v.face = static_cast<int>(i);
            v.edges = at_max;
            v.detail = "maximum color " + std::to_string(mx) + " occurs " +
                       std::to_string(at_max.size()) + " times";
            verdict.add(std::move(v));
        }
    }
    return verdict;
}

Verdict check_lemma6_conditions(const PlaneGraph& g, const PrecoloredPath& p,
                                const VertexColoring& c) {
    p.validate(g);
    require_total_vertices(g, c);
    if (g.edge_count() > 0 && !g.has_outer_designation())
        throw GraphError(Err::MissingOuterDart, "lemma conditions reference the outer face");

    Verdict verdict;
    for (const Edge& e : g.edges())
        if (c[e.a] == c[e.b]) {
            Violation v;
            v.kind = ViolationKind::ImproperEdge;
            v.edges = {e};
            v.detail = "both endpoints colored " + std::to_string(c[e.a]);
            verdict.add(std::move(v));
        }
    for (int i = 0; i < p.size(); ++i)
        if (c[p.vertices[i]] != p.colors[i]) {
            Violation v;
            v.kind = ViolationKind::PrecoloringMismatch;
            v.vertices = {p.vertices[i]};
            v.detail = "expected " + std::to_string(p.colors[i]) + ", got " +
                       std::to_string(c[p.vertices[i]]);
            verdict.add(std::move(v));
        }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c[v] > 4) {
            Violation viol;
            viol.kind = ViolationKind::ColorAboveFour;
            viol.vertices = {v};
            viol.detail = "colored " + std::to_string(c[v]);
            verdict.add(std::move(viol));
        } else if (c[v] > 3 && g.vertex_on_outer(v)) {
            Violation viol;
            viol.kind = ViolationKind::OuterColorTooBig;
            viol.vertices = {v};
            viol.detail = "outer vertex colored " + std::to_string(c[v]);
            verdict.add(std::move(viol));
        }
    }
    auto sfs = semantic_faces(g);
    check_face_unique_max_vertices(sfs, c, /*skip_outer=*/true, verdict);
    return verdict;
}

}  // namespace fum
