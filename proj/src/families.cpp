#include "fum/families.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <queue>
#include <set>
#include <thread>

#include "fum/exact.hpp"

namespace fum {

namespace {

// Rebuilds the graph with the face covering every vertex as the outer face.
PlaneGraph designate_spanning_face_as_outer(int n, std::vector<std::vector<int>> rot) {
    PlaneGraph tmp = PlaneGraph::build(n, rot);
    for (const Face& f : tmp.faces())
        if (static_cast<int>(f.vertices.size()) == n)
            return PlaneGraph::build(n, std::move(rot), f.walk.front());
    throw GraphError(Err::InternalExhaustion, "no face covers every vertex");
}

}  // namespace

PlaneGraph gen_girth_vertex_family(int g) {
    if (g < 3) throw GraphError(Err::BadInput, "cycle length must be at least 3");
    int n = 3 * g - 2;
    std::vector<std::vector<int>> rot(n);
    // first cycle 0..g-1
    for (int i = 0; i < g; ++i) rot[i] = {(i + g - 1) % g, (i + 1) % g};
    // attach a cycle of new vertices first..last at v: the appended pair
    // (last, first) keeps the fresh disk as one traced face
    auto attach = [&](int v, int first, int last) {
        rot[v].push_back(last);
        rot[v].push_back(first);
        rot[first] = {v, first + 1};
        for (int w = first + 1; w < last; ++w) rot[w] = {w - 1, w + 1};
        rot[last] = {last - 1, v};
    };
    int c1 = g - 1;
    attach(c1, g, 2 * g - 2);
    int c2 = (g - 1) + g / 2;   // part-way around the middle cycle
    attach(c2, 2 * g - 1, 3 * g - 3);
    return designate_spanning_face_as_outer(n, std::move(rot));
}

PlaneGraph gen_girth_edge_family(int g) {
    if (g < 4 || g % 2 != 0)
        throw GraphError(Err::OddGirth, "the shared-edge family needs an even cycle length >= 4");
    int n = 2 * g - 2;
    std::vector<std::vector<int>> rot(n);
    rot[0] = {g - 1, 1, 2 * g - 3};
    rot[1] = {0, 2, g};
    for (int i = 2; i <= g - 2; ++i) rot[i] = {i - 1, i + 1};
    rot[g - 1] = {g - 2, 0};
    rot[g] = {1, g + 1};
    for (int j = g + 1; j <= 2 * g - 4; ++j) rot[j] = {j - 1, j + 1};
    rot[2 * g - 3] = {2 * g - 4, 0};
    return designate_spanning_face_as_outer(n, std::move(rot));
}

// ---------------------------------------------------------------------------
// quadrangulation enumeration

namespace {

// Canonical code of a connected embedding, anchored at the outer face:
// minimum over outer-walk start darts and both orientations of a
// breadth-first relabeling that emits each vertex's rotation.
std::vector<int> canonical_code(const PlaneGraph& g) {
    int n = g.vertex_count();
    int of = g.outer_face_index_of_component(0);
    std::vector<Dart> starts = g.face(of).walk;
    std::vector<int> best;
    for (const Dart& start : starts) {
        for (int refl = 0; refl < 2; ++refl) {
            std::vector<int> label(n, -1), order;
            std::vector<int> anchor(n, -1);   // neighbor the BFS entered from
            label[start.tail] = 0;
            order.push_back(start.tail);
            anchor[start.tail] = start.head;
            int next_label = 1;
            std::vector<int> code;
            for (size_t qi = 0; qi < order.size(); ++qi) {
                int v = order[qi];
                const auto& r = g.neighbors(v);
                int d = static_cast<int>(r.size());
                int a = g.rotation_index(v, anchor[v]);
                code.push_back(-1);
                for (int s = 0; s < d; ++s) {
                    int w = refl ? r[((a - s) % d + d) % d] : r[(a + s) % d];
                    if (label[w] == -1) {
                        label[w] = next_label++;
                        order.push_back(w);
                        anchor[w] = v;
                    }
                    code.push_back(label[w]);
                }
            }
            if (best.empty() || code < best) best = code;
        }
    }
    return best;
}

// New degree-2 vertex across the (corner_a, corner_c) diagonal of a 4-face.
PlaneGraph split_quad_face(const PlaneGraph& g, int face_idx, int diagonal) {
    const Face& f = g.face(face_idx);
    int a = f.walk[diagonal].tail;
    int c = f.walk[(diagonal + 2) % 4].tail;
    if (a == c) throw GraphError(Err::BadInput, "degenerate diagonal");
    int x = g.vertex_count();
    std::vector<std::vector<int>> rot = g.rotation();
    auto insert_in_corner = [&](int v, const Dart& incoming) {
        // the face's corner at v lies between the incoming walk dart and its
        // rotation successor
        int i = rot[v].empty() ? 0 : (g.rotation_index(v, incoming.tail) + 1) %
                                         static_cast<int>(rot[v].size());
        rot[v].insert(rot[v].begin() + i, x);
    };
    insert_in_corner(a, f.walk[(diagonal + 3) % 4]);
    insert_in_corner(c, f.walk[(diagonal + 1) % 4]);
    rot.push_back({c, a});
    return PlaneGraph::build(x + 1, std::move(rot), g.outer_dart());
}

}  // namespace

std::vector<PlaneGraph> enumerate_quadrangulations(int max_n) {
    std::vector<PlaneGraph> out;
    if (max_n < 4) return out;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> c4 = {{3, 1}, {0, 2}, {1, 3}, {2, 0}};
    PlaneGraph start = PlaneGraph::build(4, c4, Dart{1, 0});
    seen.insert(canonical_code(start));
    out.push_back(start);
    for (size_t qi = 0; qi < out.size(); ++qi) {
        PlaneGraph g = out[qi];   // copy: out may reallocate
        if (g.vertex_count() >= max_n) continue;
        for (int fi = 0; fi < g.face_count(); ++fi) {
            for (int diag = 0; diag < 2; ++diag) {
                const Face& f = g.face(fi);
                if (f.walk[diag].tail == f.walk[(diag + 2) % 4].tail) continue;
                PlaneGraph h = split_quad_face(g, fi, diag);
                auto code = canonical_code(h);
                if (seen.insert(std::move(code)).second) out.push_back(std::move(h));
            }
        }
    }
    return out;
}

HardSearchResult find_hard_quadrangulation(const std::vector<PlaneGraph>& source, int budget,
                                           int parallelism) {
    int count = std::min<int>(budget, static_cast<int>(source.size()));
    HardSearchResult result;
    result.examined = count;
    if (count <= 0) return result;

    auto is_hard = [&](int i) {
        try {
            Classification cl = classify(source[i]);
            if (!cl.is_quadrangulation) return false;
        } catch (const GraphError&) {
            return false;
        }
        ChiResult chi = chi_fum(source[i], 4);
        return chi.value == 4;
    };

    if (parallelism <= 1) {
        for (int i = 0; i < count; ++i)
            if (is_hard(i)) {
                result.instance = source[i];
                return result;
            }
        return result;
    }

    std::atomic<int> next{0};
    std::atomic<int> best{count};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count || i >= best.load()) return;
            if (is_hard(i)) {
                int cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < parallelism; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    // the chunked scan may overshoot: re-verify everything below the found
    // index sequentially so the earliest instance wins deterministically
    int found = best.load();
    if (found < count) {
        for (int i = 0; i < found; ++i)
            if (is_hard(i)) {
                found = i;
                break;
            }
        result.instance = source[found];
    }
    return result;
}

// ---------------------------------------------------------------------------
// nesting

namespace {

struct GlueResult {
    PlaneGraph graph;
    int next_target_face;
};

GlueResult glue_copy_into_face(const PlaneGraph& host, int face_idx, const PlaneGraph& q,
                               int q_face_idx) {
    const Face& target = host.face(face_idx);
    std::vector<int> fv;   // target cycle in walk order
    for (const Dart& d : target.walk) fv.push_back(d.tail);

    int q_outer = q.outer_face_index_of_component(0);
    std::vector<int> ov;
    for (const Dart& d : q.face(q_outer).walk) ov.push_back(d.tail);

    int nq = q.vertex_count();
    for (int r = 0; r < 4; ++r) {
        for (int refl = 0; refl < 2; ++refl) {
            std::vector<int> map_copy(nq, -1);
            bool on_cycle_ok = true;
            for (int j = 0; j < 4; ++j) {
                int idx = refl ? (r - j + 8) % 4 : (r + j) % 4;
                map_copy[ov[j]] = fv[idx];
            }
            int fresh = host.vertex_count();
            for (int v = 0; v < nq; ++v)
                if (map_copy[v] == -1) map_copy[v] = fresh++;

            std::vector<std::vector<int>> rot(fresh);
            for (int v = 0; v < host.vertex_count(); ++v) rot[v] = host.neighbors(v);

            // interior copy vertices keep their (possibly reflected) rotation
            for (int v = 0; v < nq; ++v) {
                if (std::find(ov.begin(), ov.end(), v) != ov.end()) continue;
                std::vector<int> rr;
                for (int w : q.neighbors(v)) rr.push_back(map_copy[w]);
                if (refl) std::reverse(rr.begin(), rr.end());
                rot[map_copy[v]] = std::move(rr);
            }

            // outer-cycle copy vertices: splice their interior-side neighbors
            // into the target face's corner
            for (int j = 0; j < 4 && on_cycle_ok; ++j) {
                int o = ov[j];
                int hv = map_copy[o];
                std::vector<int> rr = q.neighbors(o);
                if (refl) std::reverse(rr.begin(), rr.end());
                int x = map_copy[ov[(j + 3) % 4]];   // image of the previous cycle vertex
                int y = map_copy[ov[(j + 1) % 4]];
                // rotate rr so it starts at the preimage of x
                int px = ov[(j + 3) % 4], py = ov[(j + 1) % 4];
                auto it = std::find(rr.begin(), rr.end(), px);
                std::rotate(rr.begin(), it, rr.end());
                if (rr.back() != py) {
                    on_cycle_ok = false;   // orientation mismatch for this alignment
                    break;
                }
                // host corner of the target face at hv: between the incoming
                // walk dart's tail and the outgoing head
                int in_tail = -1;
                for (const Dart& d : target.walk)
                    if (d.head == hv) in_tail = d.tail;
                int pos = (host.rotation_index(hv, in_tail) + 1) %
                          std::max<int>(1, static_cast<int>(rot[hv].size()));
                std::vector<int> mids;
                for (size_t s = 1; s + 1 < rr.size(); ++s) mids.push_back(map_copy[rr[s]]);
                rot[hv].insert(rot[hv].begin() + pos, mids.begin(), mids.end());
            }
            if (!on_cycle_ok) continue;

            try {
                PlaneGraph built = PlaneGraph::build(fresh, rot, host.outer_dart());
                const Face& qf = q.face(q_face_idx);
                Dart probe{map_copy[qf.walk.front().tail], map_copy[qf.walk.front().head]};
                int next_face = built.face_of(probe);
                return GlueResult{std::move(built), next_face};
            } catch (const GraphError&) {
                continue;   // alignment yields a non-simple or non-planar result
            }
        }
    }
    throw GraphError(Err::GluingNotSimple, "no alignment glues to a simple plane graph");
}

void require_simple_quad_face(const Face& f, Err code, const char* what) {
    if (f.length() != 4 || f.vertices.size() != 4)
        throw GraphError(code, std::string(what) + " is not a simple 4-cycle");
}

}  // namespace

PlaneGraph nest_quadrangulation(const PlaneGraph& q, int inner_face, int depth) {
    if (depth < 1) throw GraphError(Err::BadInput, "depth must be at least 1");
    if (!q.has_outer_designation() || q.component_count() != 1)
        throw GraphError(Err::BadInput, "nesting needs a connected graph with an outer face");
    int q_outer = q.outer_face_index_of_component(0);
    require_simple_quad_face(q.face(q_outer), Err::OuterBoundaryNotC4, "outer boundary");
    if (inner_face < 0 || inner_face >= q.face_count() || inner_face == q_outer)
        throw GraphError(Err::FaceNotQuadrilateral, "inner face index out of range");
    require_simple_quad_face(q.face(inner_face), Err::FaceNotQuadrilateral, "target face");

    PlaneGraph cur = q;
    int target = inner_face;
    for (int d = 0; d < depth; ++d) {
        require_simple_quad_face(cur.face(target), Err::FaceNotQuadrilateral, "target face");
        GlueResult res = glue_copy_into_face(cur, target, q, inner_face);
        cur = std::move(res.graph);
        target = res.next_target_face;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// tightness certificates

bool vertex_family_lower_bound_argument(const PlaneGraph& g) {
    if (g.vertex_count() == 0 || g.component_count() != 1 || !g.has_outer_designation())
        return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.vertex_on_outer(v)) return false;
    if (g.face_count() < 4) return false;
    int outer = g.outer_face_index_of_component(0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.faces_at(v).size() > 3) return false;
    for (int fi = 0; fi < g.face_count(); ++fi) {
        if (fi == outer) continue;
        const Face& f = g.face(fi);
        if (f.vertices.size() < 3 || f.vertices.size() != f.walk.size()) return false;
    }
    return true;
}

bool edge_family_lower_bound_argument(const PlaneGraph& g) {
    if (g.component_count() != 1 || !g.has_outer_designation()) return false;
    if (g.face_count() != 3) return false;
    int outer = g.outer_face_index_of_component(0);
    const Face& fo = g.face(outer);
    if (static_cast<int>(fo.edges.size()) != g.edge_count() - 1) return false;
    if (fo.edges.size() != fo.walk.size() || fo.walk.size() < 3) return false;
    Edge shared;
    bool found = false;
    for (const Edge& e : g.edges())
        if (!std::binary_search(fo.edges.begin(), fo.edges.end(), e)) {
            shared = e;
            found = true;
        }
    if (!found) return false;
    for (int fi = 0; fi < g.face_count(); ++fi) {
        if (fi == outer) continue;
        const Face& f = g.face(fi);
        if (f.edges.size() < 4 || f.edges.size() != f.walk.size()) return false;
        if (!std::binary_search(f.edges.begin(), f.edges.end(), shared)) return false;
    }
    return true;
}

}  // namespace fum
