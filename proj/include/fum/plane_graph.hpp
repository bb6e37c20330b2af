#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fum {

enum class Err {
    AsymmetricAdjacency,
    SelfLoop,
    DuplicateNeighbor,
    EulerViolation,
    InvalidOuterDart,
    MissingOuterDart,
    NotAnEdge,
    PartialColoring,
    PathNotOnOuterFace,
    NotApplicable,
    InternalExhaustion,
    PreconditionViolated,
    FallbackExhausted,
    OddGirth,
    FaceNotQuadrilateral,
    OuterBoundaryNotC4,
    GluingNotSimple,
    BadHeader,
    TruncatedRecord,
    NeighborOutOfRange,
    WideFormatUnsupported,
    EmbeddingInvalid,
    BadInput,
};

const char* err_name(Err e);

class GraphError : public std::runtime_error {
public:
    GraphError(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

/// Directed occurrence of an edge; faces are closed walks of darts.
struct Dart {
    int tail = -1;
    int head = -1;
    auto operator<=>(const Dart&) const = default;
    Dart reversed() const { return Dart{head, tail}; }
};

/// Undirected edge with normalized endpoints (a < b).
struct Edge {
    int a = -1;
    int b = -1;
    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
    auto operator<=>(const Edge&) const = default;
    bool has(int v) const { return v == a || v == b; }
    int other(int v) const { return v == a ? b : a; }
};

struct Face {
    std::vector<Dart> walk;        // empty for an isolated-vertex face
    int isolated_vertex = -1;      // set iff walk is empty
    bool is_outer = false;         // borders the unbounded region
    std::vector<int> vertices;     // sorted, deduplicated
    std::vector<Edge> edges;       // sorted, deduplicated
    int length() const { return static_cast<int>(walk.size()); }
};

/// Simple plane graph stored as a rotation system with a designated outer
/// face per edge-bearing component. Immutable after construction; all the
/// editing operations below return new graphs.
///
/// Face tracing convention: the dart following (u,v) is (v,w) where w is the
/// rotation successor of u at v. Rotations are read as clockwise neighbor
/// orders.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Validates all invariants eagerly. When outer_dart is given, the
    /// remaining edge-bearing components get a canonical outer designation
    /// (face through (v, rotation[v][0]) for the smallest non-isolated v).
    static PlaneGraph build(int vertex_count,
                            std::vector<std::vector<int>> rotation,
                            std::optional<Dart> outer_dart = std::nullopt);

    /// Same validation, with the outer dart of every edge-bearing component
    /// supplied explicitly (any order; exactly one per such component).
    static PlaneGraph build_with_outer_darts(int vertex_count,
                                             std::vector<std::vector<int>> rotation,
                                             const std::vector<Dart>& outer_darts);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& rotation() const { return rot_; }
    const std::vector<int>& neighbors(int v) const { return rot_[v]; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    bool has_edge(int u, int v) const;
    bool has_dart(Dart d) const;
    const std::vector<Edge>& edges() const { return edges_; }

    /// Primary designation as given at build time (if any).
    std::optional<Dart> outer_dart() const { return outer_dart_; }
    /// One dart per edge-bearing component, sorted.
    const std::vector<Dart>& outer_darts() const { return outer_darts_; }
    /// True when outer faces are identified (always true for edgeless graphs).
    bool has_outer_designation() const { return !outer_darts_.empty() || edges_.empty(); }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int idx) const { return faces_[idx]; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_of(Dart d) const;
    const std::vector<int>& faces_at(int v) const { return vertex_faces_[v]; }
    bool vertex_on_outer(int v) const;
    bool edge_on_outer(Edge e) const;
    /// Index of the outer face of v's component, -1 if undesignated/isolated.
    int outer_face_index_of_component(int comp) const;

    int component_count() const { return comp_count_; }
    int component_of(int v) const { return comp_[v]; }

    int rotation_index(int v, int nbr) const;
    int rotation_succ(int v, int nbr) const;
    int rotation_pred(int v, int nbr) const;

    std::string debug_dump() const;

private:
    void finish_build(std::optional<Dart> primary, std::vector<Dart> per_component);

    int n_ = 0;
    std::vector<std::vector<int>> rot_;
    std::vector<std::vector<int>> adj_sorted_;
    std::vector<Edge> edges_;
    std::optional<Dart> outer_dart_;
    std::vector<Dart> outer_darts_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> dart_face_;   // dart_face_[v][i]: face of (v, rot_[v][i])
    std::vector<std::vector<int>> vertex_faces_;
    std::vector<int> comp_;
    int comp_count_ = 0;
    std::vector<int> comp_outer_face_;          // per component, -1 if none
};

inline const std::vector<Face>& trace_faces(const PlaneGraph& g) { return g.faces(); }

struct Block {
    std::vector<int> vertices;       // sorted
    std::vector<Edge> edges;         // sorted; empty for an isolated vertex
    std::vector<int> cut_vertices;   // the block's cut vertices, sorted
    bool is_cycle() const;
};

/// Block-cut decomposition. The tree structure is kept bipartite
/// (block, cut vertex) so it stays acyclic when three or more blocks meet
/// at one cut vertex.
struct BlockTree {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;                 // sorted
    std::vector<std::pair<int, int>> incidence;    // (block index, cut vertex)
    bool is_cut_vertex(int v) const;
};

BlockTree blocks(const PlaneGraph& g);

/// Blocks of tree-degree <= 1, i.e. containing at most one cut vertex.
std::vector<int> leaf_blocks(const BlockTree& t);

struct DeletionResult {
    PlaneGraph graph;
    std::vector<int> old_to_new;   // -1 for deleted vertices
};

/// Induced subembedding on the surviving vertices. The outer face of each
/// resulting component is the face containing the first surviving dart of
/// the old outer walk; components with none inherit the face opened by the
/// deletion (the wedge left at the first vertex that lost a neighbor).
DeletionResult delete_vertices(const PlaneGraph& g, const std::vector<int>& to_delete);

DeletionResult extract_component(const PlaneGraph& g, int comp);

/// Unordered pairs of edges exempt from the facial-adjacency color
/// constraint.
class FreePairSet {
public:
    using Pair = std::pair<Edge, Edge>;

    static Pair normalize(Edge e, Edge f) { return e < f ? Pair{e, f} : Pair{f, e}; }

    bool contains(Edge e, Edge f) const { return pairs_.count(normalize(e, f)) > 0; }
    void insert(Edge e, Edge f) {
        if (e != f) pairs_.insert(normalize(e, f));
    }
    void erase_pairs_with(Edge e);
    bool has_pair_at(int v, Edge e) const;   // some pair {e, x} with x incident to v
    const std::set<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

private:
    std::set<Pair> pairs_;
};

struct EdgeRemovalResult {
    PlaneGraph graph;
    FreePairSet free_pairs;
};

/// Removes e = uv. At each endpoint of degree >= 4 the two rotation
/// neighbors of e become facially adjacent in G - e without being so in G;
/// those pairs are added to the free-pair set. Pairs mentioning e itself
/// are dropped.
EdgeRemovalResult remove_edge_tracking_free_pairs(const PlaneGraph& g, Edge e,
                                                  const FreePairSet& fp);

/// Removes a set of edges, adding every pair of edges facially adjacent in
/// the result but not in g (computed by set difference of the facial
/// adjacency relations). Vertex ids are preserved.
EdgeRemovalResult remove_edges_tracking_free_pairs(const PlaneGraph& g,
                                                   const std::vector<Edge>& to_remove,
                                                   const FreePairSet& fp);

/// Replaces every edge uv by a path u-w-v through a fresh vertex w.
/// New vertices are numbered n, n+1, ... in edge order.
PlaneGraph subdivide_all(const PlaneGraph& g);

struct Classification {
    bool is_subcubic = false;
    bool is_outerplane = false;
    bool is_quadrangulation = false;
    bool is_bipartite = false;
    bool is_2connected = false;
    std::optional<int> girth;   // nullopt for forests
};

Classification classify(const PlaneGraph& g);

/// Proper 2-coloring with classes 0/1; class 0 holds the smallest vertex of
/// each component. Throws NotApplicable on odd cycles.
std::vector<int> bipartition_sides(const PlaneGraph& g);

}  // namespace fum
