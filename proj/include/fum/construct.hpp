#pragma once

#include <vector>

#include "fum/coloring.hpp"
#include "fum/plane_graph.hpp"

namespace fum {

enum class ReductionKind {
    SplitComponents,
    ExtendPath,
    CutVertex,
    Chord,
    CycleBase,
    Claim4Removal,
    ConfigA,
    ConfigB,
    LeafCycle,
};

const char* reduction_name(ReductionKind k);

/// One recursion step, recorded for tracing and tests. Ids refer to the
/// graph the step ran on (they change across vertex deletions).
struct Reduction {
    ReductionKind kind;
    std::vector<int> vertices;
    std::vector<Edge> edges;
};

using ReductionTrace = std::vector<Reduction>;

/// Extends a precoloring of at most two adjacent outer vertices to the whole
/// graph with at most four colors: outer vertices stay within {1,2,3} and
/// every inner face gets a unique maximal vertex. Requires a subcubic or
/// outerplane input.
VertexColoring color_with_precolored_path(const PlaneGraph& g, const PrecoloredPath& p,
                                          ReductionTrace* trace = nullptr);

/// FUM coloring with at most four colors for subcubic plane or outerplane
/// graphs: removes one outer vertex, extends over the rest, colors it 4.
VertexColoring fum_color(const PlaneGraph& g, ReductionTrace* trace = nullptr);

struct QuadrangulationColoringOptions {
    bool force_fallback = false;   // skip the labeling route, use exact search
};

/// FUM coloring with at most four colors for plane quadrangulations via the
/// red/blue/black labeling (red -> 4, blue -> 3, bipartition classes -> 1/2);
/// falls back to the exact solver capped at four colors when no labeling
/// with independent blue/red classes exists.
VertexColoring color_quadrangulation(const PlaneGraph& g,
                                     const QuadrangulationColoringOptions& opt = {},
                                     ReductionTrace* trace = nullptr);

/// v carries a good pair: two of its edges are a free pair, or deg(v) <= 2.
bool is_good_vertex(const PlaneGraph& g, const FreePairSet& fp, int v);

/// F-facial edge coloring with colors {1,2,3,4}, outer edges within {1,2,3},
/// and a unique maximal edge on every inner face. Requires every edge-bearing
/// leaf-block to have a good vertex on the outer face.
EdgeColoring f_facial_edge_color(const PlaneGraph& g, const FreePairSet& fp,
                                 ReductionTrace* trace = nullptr);

/// Plain FUM edge coloring with at most four colors for 2-connected plane
/// graphs: removes one outer edge with free-pair tracking, colors the rest,
/// assigns 4 to the removed edge.
EdgeColoring fum_edge_color_2connected(const PlaneGraph& g, ReductionTrace* trace = nullptr);

}  // namespace fum
