#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fum/plane_graph.hpp"

namespace fum {

/// Vertex colors indexed by vertex id; 0 means uncolored. Verifiers require
/// totality and throw PartialColoring otherwise.
struct VertexColoring {
    std::vector<int> colors;

    VertexColoring() = default;
    explicit VertexColoring(int n) : colors(n, 0) {}
    int& operator[](int v) { return colors[v]; }
    int operator[](int v) const { return colors[v]; }
    int max_color() const;
};

struct EdgeColoring {
    std::map<Edge, int> colors;

    int at(Edge e) const {
        auto it = colors.find(e);
        return it == colors.end() ? 0 : it->second;
    }
    void set(Edge e, int c) { colors[e] = c; }
    int max_color() const;
};

/// Precolored path on the outer face: at most two vertices, adjacent along
/// the outer walk when there are two, colors in {1,2,3}.
struct PrecoloredPath {
    std::vector<int> vertices;
    std::vector<int> colors;

    static PrecoloredPath empty() { return {}; }
    static PrecoloredPath single(int v, int c) { return {{v}, {c}}; }
    static PrecoloredPath pair(int u, int cu, int v, int cv) { return {{u, v}, {cu, cv}}; }
    int size() const { return static_cast<int>(vertices.size()); }
    bool contains(int v) const;
    std::optional<int> color_of(int v) const;

    /// Throws PathNotOnOuterFace / BadInput when invalid for g.
    void validate(const PlaneGraph& g) const;
};

enum class ViolationKind {
    ImproperEdge,        // endpoints share a color
    DuplicateFaceMax,    // face's maximum color is not unique
    NoFaceMax,           // face has no element to carry a maximum (edge check)
    OuterColorTooBig,    // outer element above the allowed cap
    ColorAboveFour,
    PrecoloringMismatch,
};

const char* violation_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int face = -1;                    // semantic face index, when applicable
    std::vector<int> vertices;
    std::vector<Edge> edges;
    std::string detail;
};

struct Verdict {
    bool ok = true;
    std::vector<Violation> violations;
    void add(Violation v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

/// A face as the verification contracts see it: the outer walks of all
/// components (plus isolated vertices) merge into one outer face; an element
/// occurring several times on one walk counts once.
struct SemanticFace {
    std::vector<int> vertices;      // sorted, deduplicated
    std::vector<Edge> edges;        // sorted, deduplicated
    std::vector<int> source_faces;  // indices into g.faces()
    bool is_outer = false;
};

/// Throws MissingOuterDart when the merge needs a designation it lacks
/// (disconnected graph with edges and no outer dart).
std::vector<SemanticFace> semantic_faces(const PlaneGraph& g);

/// All unordered pairs {e, f} of distinct edges consecutive on some facial
/// walk. Every edge participates in at most four pairs.
std::set<std::pair<Edge, Edge>> facial_adjacent_edge_pairs(const PlaneGraph& g);

/// Proper vertex coloring where every face has exactly one vertex carrying
/// its maximum color.
Verdict check_fum_vertex(const PlaneGraph& g, const VertexColoring& c);

/// Facially adjacent edges outside the free-pair set get distinct colors.
Verdict check_f_facial_edge_coloring(const PlaneGraph& g, const EdgeColoring& c,
                                     const FreePairSet& fp);

/// F-facial properness plus unique maximum edge per face. With
/// exclude_outer the outer face is not required to have a unique maximum;
/// outer_cap bounds the colors of outer-face edges. Defaults give the plain
/// FUM-edge-coloring test.
Verdict check_fum_edge(const PlaneGraph& g, const EdgeColoring& c, const FreePairSet& fp = {},
                       bool exclude_outer = false, std::optional<int> outer_cap = std::nullopt);

/// Proper, matches the precolored path, outer-face vertices in {1,2,3}, all
/// colors <= 4, and every inner face has a unique maximal vertex.
Verdict check_lemma6_conditions(const PlaneGraph& g, const PrecoloredPath& p,
                                const VertexColoring& c);

}  // namespace fum
