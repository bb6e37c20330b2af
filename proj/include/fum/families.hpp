#pragma once

#include <optional>
#include <vector>

#include "fum/plane_graph.hpp"

namespace fum {

/// Chain of three g-cycles, consecutive cycles sharing a cut vertex.
/// Outerplane, girth g, four faces, every vertex on at most three faces;
/// needs four colors for a FUM vertex coloring.
PlaneGraph gen_girth_vertex_family(int g);

/// Two g-cycles sharing a single edge (g even). Subcubic, outerplane,
/// bipartite, girth g; needs four colors for a FUM edge coloring.
PlaneGraph gen_girth_edge_family(int g);

/// All plane quadrangulations reachable from the 4-cycle by repeatedly
/// placing a new degree-2 vertex across a face diagonal, up to max_n
/// vertices, deduplicated up to embedding isomorphism anchored at the outer
/// face. Every member has a degree-2 vertex; this does not reach
/// quadrangulations of minimum degree 3.
std::vector<PlaneGraph> enumerate_quadrangulations(int max_n);

struct HardSearchResult {
    std::optional<PlaneGraph> instance;
    int examined = 0;
};

/// First source instance (ascending index) that is a quadrangulation with
/// FUM chromatic number exactly 4, stopping after `budget` instances.
/// Workers split the stream in chunks; the earliest index wins regardless
/// of scheduling.
HardSearchResult find_hard_quadrangulation(const std::vector<PlaneGraph>& source, int budget,
                                           int parallelism = 1);

/// Glues `depth` nested copies of q into the chosen inner 4-face by
/// identifying the copy's outer 4-cycle with the face boundary. Tries all
/// eight alignments (four rotations, two reflections) and keeps the first
/// that yields a valid simple plane graph.
PlaneGraph nest_quadrangulation(const PlaneGraph& q, int inner_face, int depth);

/// True when the structural premises of the counting argument hold, which
/// forces a fourth color on any proper FUM vertex coloring: all vertices on
/// the outer face, at least four faces, every vertex on at most three faces,
/// every inner face a simple cycle.
bool vertex_family_lower_bound_argument(const PlaneGraph& g);

/// Edge-coloring analogue: exactly three faces, all edges but one on the
/// outer cycle, both inner faces simple cycles of length at least four
/// sharing that edge. Forces a fourth color on any FUM edge coloring.
bool edge_family_lower_bound_argument(const PlaneGraph& g);

}  // namespace fum
