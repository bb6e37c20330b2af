#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "fum/coloring.hpp"
#include "fum/plane_graph.hpp"

namespace fum {

struct SolveLimits {
    std::optional<std::chrono::milliseconds> time_budget;
};

struct ChiResult {
    std::optional<int> value;   // nullopt: exceeded max_k (or timed out)
    bool timed_out = false;
    bool exceeded() const { return !value.has_value(); }
};

/// First FUM vertex coloring with colors {1..k} in the fixed search order
/// (vertices by descending degree then id, colors ascending), or nullopt.
std::optional<VertexColoring> find_fum_coloring(const PlaneGraph& g, int k,
                                                const SolveLimits& limits = {},
                                                bool* timed_out = nullptr);

/// Smallest k <= max_k admitting a FUM vertex coloring.
ChiResult chi_fum(const PlaneGraph& g, int max_k = 6, const SolveLimits& limits = {});

/// Same for the plain FUM edge coloring (no free pairs, outer face included;
/// edges ordered by descending facial-adjacency count then lexicographically).
std::optional<EdgeColoring> find_fum_edge_coloring(const PlaneGraph& g, int k,
                                                   const SolveLimits& limits = {},
                                                   bool* timed_out = nullptr);

ChiResult chi_fum_edge(const PlaneGraph& g, int max_k = 6, const SolveLimits& limits = {});

enum class RbbColor { Black = 0, Blue = 1, Red = 2 };

/// Labeling where every face sees at most one red vertex and every red-free
/// face sees exactly one blue vertex.
struct RbbLabeling {
    std::vector<RbbColor> label;
};

/// Searches for a labeling satisfying the two face conditions; with
/// extra_independence additionally no two blue and no two red vertices are
/// adjacent. Without the extra requirement a labeling always exists.
std::optional<RbbLabeling> find_rbb(const PlaneGraph& g, bool extra_independence = false,
                                    const SolveLimits& limits = {}, bool* timed_out = nullptr);

/// Direct re-check of the two labeling conditions (and independence when
/// requested).
bool check_rbb(const PlaneGraph& g, const RbbLabeling& l, bool extra_independence = false);

/// Regression tripwire: every plane graph admits a FUM coloring with at
/// most five colors, so a false return signals a solver bug.
bool verify_bound_thm2(const PlaneGraph& g);

}  // namespace fum
