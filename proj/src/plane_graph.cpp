#include "fum/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "fum/coloring.hpp"

namespace fum {

const char* err_name(Err e) {
    switch (e) {
        case Err::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case Err::SelfLoop: return "SelfLoop";
        case Err::DuplicateNeighbor: return "DuplicateNeighbor";
        case Err::EulerViolation: return "EulerViolation";
        case Err::InvalidOuterDart: return "InvalidOuterDart";
        case Err::MissingOuterDart: return "MissingOuterDart";
        case Err::NotAnEdge: return "NotAnEdge";
        case Err::PartialColoring: return "PartialColoring";
        case Err::PathNotOnOuterFace: return "PathNotOnOuterFace";
        case Err::NotApplicable: return "NotApplicable";
        case Err::InternalExhaustion: return "InternalExhaustion";
        case Err::PreconditionViolated: return "PreconditionViolated";
        case Err::FallbackExhausted: return "FallbackExhausted";
        case Err::OddGirth: return "OddGirth";
        case Err::FaceNotQuadrilateral: return "FaceNotQuadrilateral";
        case Err::OuterBoundaryNotC4: return "OuterBoundaryNotC4";
        case Err::GluingNotSimple: return "GluingNotSimple";
        case Err::BadHeader: return "BadHeader";
        case Err::TruncatedRecord: return "TruncatedRecord";
        case Err::NeighborOutOfRange: return "NeighborOutOfRange";
        case Err::WideFormatUnsupported: return "WideFormatUnsupported";
        case Err::EmbeddingInvalid: return "EmbeddingInvalid";
        case Err::BadInput: return "BadInput";
    }
    return "UnknownError";
}

// ---------------------------------------------------------------------------
// construction and validation

PlaneGraph PlaneGraph::build(int vertex_count, std::vector<std::vector<int>> rotation,
                             std::optional<Dart> outer_dart) {
    PlaneGraph g;
    g.n_ = vertex_count;
    g.rot_ = std::move(rotation);
    g.finish_build(outer_dart, {});
    return g;
}

PlaneGraph PlaneGraph::build_with_outer_darts(int vertex_count,
                                              std::vector<std::vector<int>> rotation,
                                              const std::vector<Dart>& outer_darts) {
    PlaneGraph g;
    g.n_ = vertex_count;
    g.rot_ = std::move(rotation);
    g.finish_build(std::nullopt, outer_darts);
    return g;
}

void PlaneGraph::finish_build(std::optional<Dart> primary, std::vector<Dart> per_component) {
    if (n_ < 0) throw GraphError(Err::BadInput, "negative vertex count");
    if (static_cast<int>(rot_.size()) != n_)
        throw GraphError(Err::BadInput, "rotation list size does not match vertex count");

    adj_sorted_.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
        for (int w : rot_[v]) {
            if (w < 0 || w >= n_)
                throw GraphError(Err::NeighborOutOfRange, "vertex " + std::to_string(v) +
                                                              " lists neighbor " + std::to_string(w));
            if (w == v) throw GraphError(Err::SelfLoop, "at vertex " + std::to_string(v));
        }
        adj_sorted_[v] = rot_[v];
        std::sort(adj_sorted_[v].begin(), adj_sorted_[v].end());
        for (size_t i = 1; i < adj_sorted_[v].size(); ++i)
            if (adj_sorted_[v][i] == adj_sorted_[v][i - 1])
                throw GraphError(Err::DuplicateNeighbor,
                                 "vertex " + std::to_string(v) + " repeats neighbor " +
                                     std::to_string(adj_sorted_[v][i]));
    }
    for (int v = 0; v < n_; ++v)
        for (int w : rot_[v])
            if (!std::binary_search(adj_sorted_[w].begin(), adj_sorted_[w].end(), v))
                throw GraphError(Err::AsymmetricAdjacency, std::to_string(v) + " lists " +
                                                               std::to_string(w) +
                                                               " but not vice versa");

    edges_.clear();
    for (int v = 0; v < n_; ++v)
        for (int w : rot_[v])
            if (v < w) edges_.push_back(Edge(v, w));
    std::sort(edges_.begin(), edges_.end());

    comp_.assign(n_, -1);
    comp_count_ = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp_[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        comp_[s] = comp_count_;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : rot_[v])
                if (comp_[w] == -1) {
                    comp_[w] = comp_count_;
                    q.push(w);
                }
        }
        ++comp_count_;
    }

    // face tracing: successor of (u,v) is (v, rotation successor of u at v)
    faces_.clear();
    dart_face_.assign(n_, {});
    for (int v = 0; v < n_; ++v) dart_face_[v].assign(rot_[v].size(), -1);
    for (int v = 0; v < n_; ++v) {
        if (rot_[v].empty()) {
            Face f;
            f.isolated_vertex = v;
            f.vertices = {v};
            faces_.push_back(std::move(f));
            continue;
        }
        for (size_t i = 0; i < rot_[v].size(); ++i) {
            if (dart_face_[v][i] != -1) continue;
            int fid = static_cast<int>(faces_.size());
            Face f;
            int t = v, hi = static_cast<int>(i);
            do {
                dart_face_[t][hi] = fid;
                int h = rot_[t][hi];
                f.walk.push_back(Dart{t, h});
                int j = rotation_index(h, t);
                int jn = (j + 1) % static_cast<int>(rot_[h].size());
                t = h;
                hi = jn;
            } while (!(t == v && hi == static_cast<int>(i)));
            for (const Dart& d : f.walk) {
                f.vertices.push_back(d.tail);
                f.edges.push_back(Edge(d.tail, d.head));
            }
            std::sort(f.vertices.begin(), f.vertices.end());
            f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
            std::sort(f.edges.begin(), f.edges.end());
            f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());
            faces_.push_back(std::move(f));
        }
    }

    // Euler check per component
    {
        std::vector<int> vcnt(comp_count_, 0), ecnt(comp_count_, 0), fcnt(comp_count_, 0);
        for (int v = 0; v < n_; ++v) ++vcnt[comp_[v]];
        for (const Edge& e : edges_) ++ecnt[comp_[e.a]];
        for (const Face& f : faces_) {
            int v = f.walk.empty() ? f.isolated_vertex : f.walk.front().tail;
            ++fcnt[comp_[v]];
        }
        for (int c = 0; c < comp_count_; ++c)
            if (vcnt[c] - ecnt[c] + fcnt[c] != 2)
                throw GraphError(Err::EulerViolation, "component " + std::to_string(c) +
                                                          ": V-E+F = " +
                                                          std::to_string(vcnt[c] - ecnt[c] + fcnt[c]));
    }

    comp_outer_face_.assign(comp_count_, -1);
    outer_darts_.clear();
    outer_dart_ = primary;
    if (primary) {
        if (!has_dart(*primary))
            throw GraphError(Err::InvalidOuterDart,
                             "(" + std::to_string(primary->tail) + "," +
                                 std::to_string(primary->head) + ") is not a dart of the graph");
        std::vector<Dart> darts;
        darts.push_back(*primary);
        int designated = comp_[primary->tail];
        for (int c = 0; c < comp_count_; ++c) {
            if (c == designated) continue;
            for (int v = 0; v < n_; ++v)
                if (comp_[v] == c && !rot_[v].empty()) {
                    darts.push_back(Dart{v, rot_[v][0]});
                    break;
                }
        }
        per_component = std::move(darts);
    }
    if (!per_component.empty()) {
        std::vector<char> seen(comp_count_, 0);
        for (const Dart& d : per_component) {
            if (!has_dart(d))
                throw GraphError(Err::InvalidOuterDart,
                                 "(" + std::to_string(d.tail) + "," + std::to_string(d.head) +
                                     ") is not a dart of the graph");
            int c = comp_[d.tail];
            if (seen[c])
                throw GraphError(Err::InvalidOuterDart,
                                 "two outer darts in component " + std::to_string(c));
            seen[c] = 1;
            comp_outer_face_[c] = face_of(d);
        }
        for (int c = 0; c < comp_count_; ++c) {
            bool edged = false;
            for (int v = 0; v < n_ && !edged; ++v)
                if (comp_[v] == c && !rot_[v].empty()) edged = true;
            if (edged && !seen[c])
                throw GraphError(Err::InvalidOuterDart,
                                 "missing outer dart for component " + std::to_string(c));
        }
        for (int c = 0; c < comp_count_; ++c)
            if (comp_outer_face_[c] != -1) faces_[comp_outer_face_[c]].is_outer = true;
        outer_darts_ = std::move(per_component);
        std::sort(outer_darts_.begin(), outer_darts_.end());
        if (!outer_dart_) outer_dart_ = outer_darts_.front();
    }
    // isolated vertices sit in the unbounded region (components are laid out
    // side by side, never nested)
    for (size_t i = 0; i < faces_.size(); ++i) {
        Face& f = faces_[i];
        if (f.isolated_vertex >= 0) {
            f.is_outer = true;
            comp_outer_face_[comp_[f.isolated_vertex]] = static_cast<int>(i);
        }
    }

    vertex_faces_.assign(n_, {});
    for (size_t i = 0; i < faces_.size(); ++i)
        for (int v : faces_[i].vertices) vertex_faces_[v].push_back(static_cast<int>(i));
}

bool PlaneGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return std::binary_search(adj_sorted_[u].begin(), adj_sorted_[u].end(), v);
}

bool PlaneGraph::has_dart(Dart d) const { return has_edge(d.tail, d.head); }

int PlaneGraph::face_of(Dart d) const {
    if (!has_dart(d)) throw GraphError(Err::NotAnEdge, "face_of on a non-dart");
    return dart_face_[d.tail][rotation_index(d.tail, d.head)];
}

bool PlaneGraph::vertex_on_outer(int v) const {
    if (!has_outer_designation())
        throw GraphError(Err::MissingOuterDart, "outer face not designated");
    int f = comp_outer_face_[comp_[v]];
    if (f == -1) return false;
    const auto& vs = faces_[f].vertices;
    return std::binary_search(vs.begin(), vs.end(), v);
}

bool PlaneGraph::edge_on_outer(Edge e) const {
    if (!has_outer_designation())
        throw GraphError(Err::MissingOuterDart, "outer face not designated");
    int f = comp_outer_face_[comp_[e.a]];
    if (f == -1) return false;
    const auto& es = faces_[f].edges;
    return std::binary_search(es.begin(), es.end(), e);
}

int PlaneGraph::outer_face_index_of_component(int comp) const { return comp_outer_face_[comp]; }

int PlaneGraph::rotation_index(int v, int nbr) const {
    const auto& r = rot_[v];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == nbr) return static_cast<int>(i);
    throw GraphError(Err::NotAnEdge,
                     std::to_string(nbr) + " is not a neighbor of " + std::to_string(v));
}

int PlaneGraph::rotation_succ(int v, int nbr) const {
    int i = rotation_index(v, nbr);
    return rot_[v][(i + 1) % rot_[v].size()];
}

int PlaneGraph::rotation_pred(int v, int nbr) const {
    int i = rotation_index(v, nbr);
    return rot_[v][(i + rot_[v].size() - 1) % rot_[v].size()];
}

std::string PlaneGraph::debug_dump() const {
    std::ostringstream os;
    os << "n " << n_ << "\n";
    for (int v = 0; v < n_; ++v) {
        os << v << ":";
        for (int w : rot_[v]) os << " " << w;
        os << "\n";
    }
    for (const Dart& d : outer_darts_) os << "outer " << d.tail << " " << d.head << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// block-cut decomposition (iterative lowpoint DFS)

bool Block::is_cycle() const { return vertices.size() >= 3 && vertices.size() == edges.size(); }

bool BlockTree::is_cut_vertex(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockTree blocks(const PlaneGraph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> estack;
    BlockTree t;
    int timer = 0;

    auto pop_block = [&](Edge until) {
        Block b;
        std::set<int> vs;
        while (!estack.empty()) {
            Edge e = estack.back();
            estack.pop_back();
            b.edges.push_back(e);
            vs.insert(e.a);
            vs.insert(e.b);
            if (e == until) break;
        }
        b.vertices.assign(vs.begin(), vs.end());
        std::sort(b.edges.begin(), b.edges.end());
        t.blocks.push_back(std::move(b));
    };

    struct Frame {
        int v;
        size_t i;
    };

    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        if (g.degree(s) == 0) {
            Block b;
            b.vertices = {s};
            t.blocks.push_back(std::move(b));
            disc[s] = timer++;
            continue;
        }
        std::vector<Frame> st;
        st.push_back({s, 0});
        disc[s] = low[s] = timer++;
        int root_children = 0;
        while (!st.empty()) {
            Frame& fr = st.back();
            int v = fr.v;
            if (fr.i < g.neighbors(v).size()) {
                int w = g.neighbors(v)[fr.i++];
                if (w == parent[v]) continue;
                if (disc[w] == -1) {
                    estack.push_back(Edge(v, w));
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    if (v == s) ++root_children;
                    st.push_back({w, 0});
                } else if (disc[w] < disc[v]) {
                    estack.push_back(Edge(v, w));
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                st.pop_back();
                if (!st.empty()) {
                    int u = st.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        pop_block(Edge(u, v));
                        if (u != s) is_cut[u] = 1;
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[s] = 1;
    }

    for (int v = 0; v < n; ++v)
        if (is_cut[v]) t.cut_vertices.push_back(v);
    for (size_t b = 0; b < t.blocks.size(); ++b) {
        for (int v : t.blocks[b].vertices)
            if (is_cut[v]) {
                t.blocks[b].cut_vertices.push_back(v);
                t.incidence.push_back({static_cast<int>(b), v});
            }
    }
    return t;
}

std::vector<int> leaf_blocks(const BlockTree& t) {
    std::vector<int> out;
    for (size_t b = 0; b < t.blocks.size(); ++b)
        if (t.blocks[b].cut_vertices.size() <= 1) out.push_back(static_cast<int>(b));
    return out;
}

// ---------------------------------------------------------------------------
// outer-face inheritance shared by the editing operations

namespace {

// Chooses an outer dart for every edge-bearing component of `built`.
// old_outer_walks: walks of the designated outer faces of the source graph,
// in component order. survives(d): the dart survives the edit unchanged.
// map_vertex: old id -> new id (-1 when deleted). lost_incidence(v): vertex
// lost at least one incident dart. deleted_at(v, i): the i-th rotation entry
// of old vertex v was removed by the edit.
template <typename Survives, typename LostIncidence, typename DeletedAt>
std::vector<Dart> inherit_outer_darts(const PlaneGraph& old_g, const PlaneGraph& built,
                                      const std::vector<int>& map_vertex, Survives survives,
                                      LostIncidence lost_incidence, DeletedAt deleted_at) {
    std::vector<Dart> result(built.component_count(), Dart{-1, -1});
    std::vector<char> comp_has_edge(built.component_count(), 0);
    for (const Edge& e : built.edges()) comp_has_edge[built.component_of(e.a)] = 1;

    if (old_g.has_outer_designation()) {
        for (int oc = 0; oc < old_g.component_count(); ++oc) {
            int of = old_g.outer_face_index_of_component(oc);
            if (of == -1) continue;
            for (const Dart& d : old_g.face(of).walk) {
                if (!survives(d)) continue;
                int nt = map_vertex[d.tail], nh = map_vertex[d.head];
                int c = built.component_of(nt);
                if (result[c].tail == -1) result[c] = Dart{nt, nh};
            }
        }
    }
    for (int c = 0; c < built.component_count(); ++c) {
        if (!comp_has_edge[c] || result[c].tail != -1) continue;
        // the face opened by the edit: the wedge at the first vertex that
        // lost an incident dart, entered right after a removed run
        bool found = false;
        for (int nv = 0; nv < built.vertex_count() && !found; ++nv) {
            if (built.component_of(nv) != c || built.degree(nv) == 0) continue;
            int ov = -1;
            for (size_t i = 0; i < map_vertex.size(); ++i)
                if (map_vertex[i] == nv) {
                    ov = static_cast<int>(i);
                    break;
                }
            if (ov == -1 || !lost_incidence(ov)) continue;
            int deg = old_g.degree(ov);
            for (int i = 0; i < deg && !found; ++i) {
                if (!deleted_at(ov, i)) continue;
                for (int k = 1; k <= deg; ++k) {
                    int j = (i + k) % deg;
                    if (!deleted_at(ov, j)) {
                        int s = map_vertex[old_g.neighbors(ov)[j]];
                        result[c] = Dart{nv, s};
                        found = true;
                        break;
                    }
                }
            }
        }
        if (!found) {
            for (int nv = 0; nv < built.vertex_count(); ++nv)
                if (built.component_of(nv) == c && built.degree(nv) > 0) {
                    result[c] = Dart{nv, built.neighbors(nv)[0]};
                    break;
                }
        }
    }
    std::vector<Dart> darts;
    for (int c = 0; c < built.component_count(); ++c)
        if (result[c].tail != -1) darts.push_back(result[c]);
    return darts;
}

}  // namespace

DeletionResult delete_vertices(const PlaneGraph& g, const std::vector<int>& to_delete) {
    int n = g.vertex_count();
    std::vector<char> del(n, 0);
    for (int v : to_delete) {
        if (v < 0 || v >= n) throw GraphError(Err::BadInput, "delete_vertices: bad vertex id");
        del[v] = 1;
    }
    std::vector<int> old_to_new(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!del[v]) old_to_new[v] = m++;

    std::vector<std::vector<int>> rot(m);
    for (int v = 0; v < n; ++v) {
        if (del[v]) continue;
        for (int w : g.neighbors(v))
            if (!del[w]) rot[old_to_new[v]].push_back(old_to_new[w]);
    }
    PlaneGraph built = PlaneGraph::build(m, rot);
    if (!g.has_outer_designation() || built.edge_count() == 0)
        return DeletionResult{std::move(built), std::move(old_to_new)};

    auto survives = [&](const Dart& d) { return !del[d.tail] && !del[d.head]; };
    auto lost = [&](int ov) {
        for (int w : g.neighbors(ov))
            if (del[w]) return true;
        return false;
    };
    auto deleted_at = [&](int ov, int i) { return del[g.neighbors(ov)[i]] != 0; };
    std::vector<Dart> darts = inherit_outer_darts(g, built, old_to_new, survives, lost, deleted_at);
    return DeletionResult{PlaneGraph::build_with_outer_darts(m, std::move(rot), darts),
                          std::move(old_to_new)};
}

DeletionResult extract_component(const PlaneGraph& g, int comp) {
    std::vector<int> doomed;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.component_of(v) != comp) doomed.push_back(v);
    return delete_vertices(g, doomed);
}

void FreePairSet::erase_pairs_with(Edge e) {
    for (auto it = pairs_.begin(); it != pairs_.end();)
        if (it->first == e || it->second == e)
            it = pairs_.erase(it);
        else
            ++it;
}

bool FreePairSet::has_pair_at(int v, Edge e) const {
    for (const auto& p : pairs_) {
        if (p.first == e && p.second.has(v)) return true;
        if (p.second == e && p.first.has(v)) return true;
    }
    return false;
}

namespace {

EdgeRemovalResult remove_edges_impl(const PlaneGraph& g, const std::vector<Edge>& to_remove,
                                    const FreePairSet& fp, bool generic_pairs) {
    std::set<Edge> gone(to_remove.begin(), to_remove.end());
    for (const Edge& e : to_remove)
        if (!g.has_edge(e.a, e.b))
            throw GraphError(Err::NotAnEdge, "remove_edges: (" + std::to_string(e.a) + "," +
                                                 std::to_string(e.b) + ")");

    int n = g.vertex_count();
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            if (!gone.count(Edge(v, w))) rot[v].push_back(w);

    PlaneGraph built = PlaneGraph::build(n, rot);

    FreePairSet out = fp;
    for (const Edge& e : to_remove) out.erase_pairs_with(e);
    if (generic_pairs) {
        auto before = facial_adjacent_edge_pairs(g);
        auto after = facial_adjacent_edge_pairs(built);
        for (const auto& p : after)
            if (!before.count(p)) out.insert(p.first, p.second);
    } else {
        // single-edge local rule: at an endpoint of degree >= 4 the two
        // rotation neighbors of the removed edge become facially adjacent
        const Edge e = to_remove.front();
        for (int u : {e.a, e.b}) {
            if (g.degree(u) < 4) continue;
            int other = e.other(u);
            out.insert(Edge(u, g.rotation_pred(u, other)), Edge(u, g.rotation_succ(u, other)));
        }
    }

    if (!g.has_outer_designation() || built.edge_count() == 0)
        return EdgeRemovalResult{std::move(built), std::move(out)};

    std::vector<int> identity(n);
    for (int v = 0; v < n; ++v) identity[v] = v;
    auto survives = [&](const Dart& d) { return !gone.count(Edge(d.tail, d.head)); };
    auto lost = [&](int ov) {
        for (int w : g.neighbors(ov))
            if (gone.count(Edge(ov, w))) return true;
        return false;
    };
    auto deleted_at = [&](int ov, int i) {
        return gone.count(Edge(ov, g.neighbors(ov)[i])) > 0;
    };
    std::vector<Dart> darts = inherit_outer_darts(g, built, identity, survives, lost, deleted_at);
    return EdgeRemovalResult{PlaneGraph::build_with_outer_darts(n, std::move(rot), darts),
                             std::move(out)};
}

}  // namespace

EdgeRemovalResult remove_edge_tracking_free_pairs(const PlaneGraph& g, Edge e,
                                                  const FreePairSet& fp) {
    return remove_edges_impl(g, {e}, fp, /*generic_pairs=*/false);
}

EdgeRemovalResult remove_edges_tracking_free_pairs(const PlaneGraph& g,
                                                   const std::vector<Edge>& to_remove,
                                                   const FreePairSet& fp) {
    return remove_edges_impl(g, to_remove, fp, /*generic_pairs=*/true);
}

PlaneGraph subdivide_all(const PlaneGraph& g) {
    int n = g.vertex_count();
    const auto& es = g.edges();
    std::map<Edge, int> mid;
    for (size_t i = 0; i < es.size(); ++i) mid[es[i]] = n + static_cast<int>(i);

    std::vector<std::vector<int>> rot(n + es.size());
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) rot[v].push_back(mid[Edge(v, w)]);
    for (const auto& [e, w] : mid) rot[w] = {e.a, e.b};

    std::vector<Dart> darts;
    for (const Dart& d : g.outer_darts()) darts.push_back(Dart{d.tail, mid[Edge(d.tail, d.head)]});
    if (darts.empty()) return PlaneGraph::build(n + static_cast<int>(es.size()), std::move(rot));
    return PlaneGraph::build_with_outer_darts(n + static_cast<int>(es.size()), std::move(rot),
                                              darts);
}

// ---------------------------------------------------------------------------
// classification

std::vector<int> bipartition_sides(const PlaneGraph& g) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    throw GraphError(Err::NotApplicable, "graph is not bipartite");
                }
            }
        }
    }
    return side;
}

Classification classify(const PlaneGraph& g) {
    if (!g.has_outer_designation())
        throw GraphError(Err::MissingOuterDart, "classify needs a designated outer face");
    Classification c;
    int n = g.vertex_count();

    c.is_subcubic = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 3) c.is_subcubic = false;

    c.is_outerplane = true;
    for (int v = 0; v < n; ++v)
        if (!g.vertex_on_outer(v)) c.is_outerplane = false;

    c.is_quadrangulation = true;
    for (const Face& f : g.faces())
        if (f.length() != 4) c.is_quadrangulation = false;

    try {
        bipartition_sides(g);
        c.is_bipartite = true;
    } catch (const GraphError&) {
        c.is_bipartite = false;
    }

    BlockTree t = blocks(g);
    c.is_2connected = n >= 3 && g.component_count() == 1 && t.cut_vertices.empty();

    // girth by BFS from every vertex
    int best = -1;
    for (int r = 0; r < n; ++r) {
        std::vector<int> dist(n, -1), par(n, -1);
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    q.push(w);
                } else if (w != par[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best != -1) c.girth = best;
    return c;
}

}  // namespace fum
