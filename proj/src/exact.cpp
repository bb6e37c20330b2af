#include "fum/exact.hpp"

#include <algorithm>
#include <numeric>

namespace fum {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::optional<Clock::time_point> at;
    mutable long counter = 0;

    explicit Deadline(const SolveLimits& limits) {
        if (limits.time_budget) at = Clock::now() + *limits.time_budget;
    }
    bool hit() const {
        if (!at) return false;
        if (++counter % 4096 != 0) return false;
        return Clock::now() >= *at;
    }
};

// Shared backtracking engine over "elements" (vertices or edges) with
// pairwise conflicts and per-face unique-maximum constraints.
//
// Pruning: a conflicting pair never shares a color; a face whose maximum
// occurs twice backtracks once the face is fully colored, or immediately
// when that maximum already equals k.
struct UniqueMaxSearch {
    int element_count = 0;
    int k = 0;
    std::vector<std::vector<int>> conflicts;      // element -> conflicting elements
    std::vector<std::vector<int>> element_faces;  // element -> face indices
    std::vector<std::vector<int>> face_elements;  // face -> elements

    std::vector<int> order;                       // assignment order
    std::vector<int> color;                       // 0 = unassigned

    struct FaceState {
        std::vector<int> count;  // count[c] for c in 1..k
        int uncolored = 0;
    };
    std::vector<FaceState> fs;

    bool face_ok_after_assign(int f) const {
        const FaceState& s = fs[f];
        int mx = 0;
        for (int c = k; c >= 1; --c)
            if (s.count[c] > 0) {
                mx = c;
                break;
            }
        if (mx == 0) return true;
        int at_max = s.count[mx];
        if (at_max >= 2 && mx == k) return false;
        if (s.uncolored == 0 && at_max != 1) return false;
        return true;
    }

    bool solve(const Deadline& deadline, bool* timed_out) {
        fs.assign(face_elements.size(), {});
        for (size_t f = 0; f < face_elements.size(); ++f) {
            fs[f].count.assign(k + 1, 0);
            fs[f].uncolored = static_cast<int>(face_elements[f].size());
        }
        color.assign(element_count, 0);
        return rec(0, deadline, timed_out);
    }

    bool rec(int pos, const Deadline& deadline, bool* timed_out) {
        if (pos == element_count) return true;
        if (deadline.hit()) {
            if (timed_out) *timed_out = true;
            return false;
        }
        int x = order[pos];
        for (int c = 1; c <= k; ++c) {
            bool conflict = false;
            for (int y : conflicts[x])
                if (color[y] == c) {
                    conflict = true;
                    break;
                }
            if (conflict) continue;
            color[x] = c;
            bool ok = true;
            for (int f : element_faces[x]) {
                ++fs[f].count[c];
                --fs[f].uncolored;
            }
            for (int f : element_faces[x])
                if (!face_ok_after_assign(f)) {
                    ok = false;
                    break;
                }
            if (ok && rec(pos + 1, deadline, timed_out)) return true;
            for (int f : element_faces[x]) {
                --fs[f].count[c];
                ++fs[f].uncolored;
            }
            color[x] = 0;
            if (timed_out && *timed_out) return false;
        }
        return false;
    }
};

UniqueMaxSearch vertex_search(const PlaneGraph& g, int k) {
    UniqueMaxSearch s;
    s.element_count = g.vertex_count();
    s.k = k;
    s.conflicts.assign(g.vertex_count(), {});
    for (const Edge& e : g.edges()) {
        s.conflicts[e.a].push_back(e.b);
        s.conflicts[e.b].push_back(e.a);
    }
    auto sfs = semantic_faces(g);
    s.face_elements.resize(sfs.size());
    s.element_faces.assign(g.vertex_count(), {});
    for (size_t f = 0; f < sfs.size(); ++f) {
        s.face_elements[f] = sfs[f].vertices;
        for (int v : sfs[f].vertices) s.element_faces[v].push_back(static_cast<int>(f));
    }
    s.order.resize(g.vertex_count());
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return s;
}

UniqueMaxSearch edge_search(const PlaneGraph& g, int k, const std::vector<Edge>& edge_list) {
    UniqueMaxSearch s;
    s.element_count = static_cast<int>(edge_list.size());
    s.k = k;
    auto index_of = [&](Edge e) {
        return static_cast<int>(std::lower_bound(edge_list.begin(), edge_list.end(), e) -
                                edge_list.begin());
    };
    s.conflicts.assign(edge_list.size(), {});
    for (const auto& [e, f] : facial_adjacent_edge_pairs(g)) {
        int ie = index_of(e), jf = index_of(f);
        s.conflicts[ie].push_back(jf);
        s.conflicts[jf].push_back(ie);
    }
    auto sfs = semantic_faces(g);
    s.element_faces.assign(edge_list.size(), {});
    for (size_t f = 0; f < sfs.size(); ++f) {
        std::vector<int> ids;
        for (const Edge& e : sfs[f].edges) {
            int ie = index_of(e);
            ids.push_back(ie);
            s.element_faces[ie].push_back(static_cast<int>(f));
        }
        s.face_elements.push_back(std::move(ids));
    }
    s.order.resize(edge_list.size());
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        return s.conflicts[a].size() > s.conflicts[b].size();
    });
    return s;
}

}  // namespace

std::optional<VertexColoring> find_fum_coloring(const PlaneGraph& g, int k,
                                                const SolveLimits& limits, bool* timed_out) {
    if (k < 1) throw GraphError(Err::BadInput, "k must be positive");
    Deadline deadline(limits);
    UniqueMaxSearch s = vertex_search(g, k);
    if (!s.solve(deadline, timed_out)) return std::nullopt;
    VertexColoring c(g.vertex_count());
    c.colors = s.color;
    return c;
}

ChiResult chi_fum(const PlaneGraph& g, int max_k, const SolveLimits& limits) {
    if (max_k < 1) throw GraphError(Err::BadInput, "max_k must be positive");
    ChiResult r;
    for (int k = 1; k <= max_k; ++k) {
        bool to = false;
        if (find_fum_coloring(g, k, limits, &to)) {
            r.value = k;
            return r;
        }
        if (to) {
            r.timed_out = true;
            return r;
        }
    }
    return r;
}

std::optional<EdgeColoring> find_fum_edge_coloring(const PlaneGraph& g, int k,
                                                   const SolveLimits& limits, bool* timed_out) {
    if (k < 1) throw GraphError(Err::BadInput, "k must be positive");
    Deadline deadline(limits);
    const auto& edge_list = g.edges();
    UniqueMaxSearch s = edge_search(g, k, edge_list);
    if (!s.solve(deadline, timed_out)) return std::nullopt;
    EdgeColoring c;
    for (size_t i = 0; i < edge_list.size(); ++i) c.set(edge_list[i], s.color[i]);
    return c;
}

ChiResult chi_fum_edge(const PlaneGraph& g, int max_k, const SolveLimits& limits) {
    if (max_k < 1) throw GraphError(Err::BadInput, "max_k must be positive");
    ChiResult r;
    if (g.edge_count() == 0) {
        r.value = 1;   // vacuous: no edges to color
        return r;
    }
    for (int k = 1; k <= max_k; ++k) {
        bool to = false;
        if (find_fum_edge_coloring(g, k, limits, &to)) {
            r.value = k;
            return r;
        }
        if (to) {
            r.timed_out = true;
            return r;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// red/blue/black labeling

namespace {

struct RbbSearch {
    const PlaneGraph& g;
    bool independence;
    std::vector<std::vector<int>> face_vertices;
    std::vector<std::vector<int>> vertex_faces;
    std::vector<int> order;
    std::vector<int> label;   // -1 unassigned, else RbbColor
    std::vector<int> red_cnt, blue_cnt, unlabeled;

    explicit RbbSearch(const PlaneGraph& graph, bool indep) : g(graph), independence(indep) {
        auto sfs = semantic_faces(g);
        face_vertices.resize(sfs.size());
        vertex_faces.assign(g.vertex_count(), {});
        for (size_t f = 0; f < sfs.size(); ++f) {
            face_vertices[f] = sfs[f].vertices;
            for (int v : sfs[f].vertices) vertex_faces[v].push_back(static_cast<int>(f));
        }
        order.resize(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        label.assign(g.vertex_count(), -1);
        red_cnt.assign(sfs.size(), 0);
        blue_cnt.assign(sfs.size(), 0);
        unlabeled.assign(sfs.size(), 0);
        for (size_t f = 0; f < sfs.size(); ++f)
            unlabeled[f] = static_cast<int>(face_vertices[f].size());
    }

    bool face_ok(int f) const {
        if (red_cnt[f] >= 2) return false;
        if (unlabeled[f] == 0 && red_cnt[f] == 0 && blue_cnt[f] != 1) return false;
        return true;
    }

    bool rec(int pos, const Deadline& deadline, bool* timed_out) {
        if (pos == g.vertex_count()) return true;
        if (deadline.hit()) {
            if (timed_out) *timed_out = true;
            return false;
        }
        int v = order[pos];
        for (int c = 0; c <= 2; ++c) {
            if (independence && c != 0) {
                bool clash = false;
                for (int w : g.neighbors(v))
                    if (label[w] == c) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
            }
            label[v] = c;
            for (int f : vertex_faces[v]) {
                --unlabeled[f];
                if (c == 2) ++red_cnt[f];
                if (c == 1) ++blue_cnt[f];
            }
            bool ok = true;
            for (int f : vertex_faces[v])
                if (!face_ok(f)) {
                    ok = false;
                    break;
                }
            if (ok && rec(pos + 1, deadline, timed_out)) return true;
            for (int f : vertex_faces[v]) {
                ++unlabeled[f];
                if (c == 2) --red_cnt[f];
                if (c == 1) --blue_cnt[f];
            }
            label[v] = -1;
            if (timed_out && *timed_out) return false;
        }
        return false;
    }
};

}  // namespace

std::optional<RbbLabeling> find_rbb(const PlaneGraph& g, bool extra_independence,
                                    const SolveLimits& limits, bool* timed_out) {
    Deadline deadline(limits);
    RbbSearch s(g, extra_independence);
    if (!s.rec(0, deadline, timed_out)) return std::nullopt;
    RbbLabeling l;
    l.label.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        l.label.push_back(static_cast<RbbColor>(s.label[v]));
    return l;
}

bool check_rbb(const PlaneGraph& g, const RbbLabeling& l, bool extra_independence) {
    if (static_cast<int>(l.label.size()) != g.vertex_count()) return false;
    for (const SemanticFace& sf : semantic_faces(g)) {
        int red = 0, blue = 0;
        for (int v : sf.vertices) {
            if (l.label[v] == RbbColor::Red) ++red;
            if (l.label[v] == RbbColor::Blue) ++blue;
        }
        if (red > 1) return false;
        if (red == 0 && blue != 1 && !sf.vertices.empty()) return false;
    }
    if (extra_independence)
        for (const Edge& e : g.edges()) {
            if (l.label[e.a] == l.label[e.b] &&
                (l.label[e.a] == RbbColor::Red || l.label[e.a] == RbbColor::Blue))
                return false;
        }
    return true;
}

bool verify_bound_thm2(const PlaneGraph& g) { return !chi_fum(g, 5).exceeded(); }

}  // namespace fum
