#include "fum/construct.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "fum/exact.hpp"

namespace fum {

const char* reduction_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::SplitComponents: return "SplitComponents";
        case ReductionKind::ExtendPath: return "ExtendPath";
        case ReductionKind::CutVertex: return "CutVertex";
        case ReductionKind::Chord: return "Chord";
        case ReductionKind::CycleBase: return "CycleBase";
        case ReductionKind::Claim4Removal: return "Claim4Removal";
        case ReductionKind::ConfigA: return "ConfigA";
        case ReductionKind::ConfigB: return "ConfigB";
        case ReductionKind::LeafCycle: return "LeafCycle";
    }
    return "UnknownReduction";
}

namespace {

[[noreturn]] void trip(const PlaneGraph& g, const std::string& what) {
    throw GraphError(Err::InternalExhaustion, what + "\n" + g.debug_dump());
}

void record(ReductionTrace* trace, ReductionKind k, std::vector<int> vs, std::vector<Edge> es) {
    if (trace) trace->push_back(Reduction{k, std::move(vs), std::move(es)});
}

int smallest_color_not_in(const std::set<int>& used) {
    for (int c = 1; c <= 3; ++c)
        if (!used.count(c)) return c;
    return -1;
}

PrecoloredPath map_path(const PrecoloredPath& p, const std::vector<int>& old_to_new) {
    PrecoloredPath out;
    for (int i = 0; i < p.size(); ++i) {
        int nv = old_to_new[p.vertices[i]];
        if (nv != -1) {
            out.vertices.push_back(nv);
            out.colors.push_back(p.colors[i]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// precoloring extension (vertex side)

VertexColoring lemma6(const PlaneGraph& g, PrecoloredPath p, ReductionTrace* trace);

VertexColoring lemma6_on_deletion(const PlaneGraph& g, const std::vector<int>& doomed,
                                  const PrecoloredPath& p, ReductionTrace* trace,
                                  VertexColoring& into) {
    DeletionResult d = delete_vertices(g, doomed);
    VertexColoring sub = lemma6(d.graph, map_path(p, d.old_to_new), trace);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (d.old_to_new[v] != -1) into[v] = sub[d.old_to_new[v]];
    return sub;
}

// Colors a cycle given on its outer walk order: the precolored pair keeps
// its colors, exactly one vertex gets 3, everything else alternates 1/2.
void color_cycle(const std::vector<int>& walk, const PrecoloredPath& p, VertexColoring& c) {
    int k = static_cast<int>(walk.size());
    int i0 = -1;
    for (int i = 0; i < k; ++i)
        if (walk[i] == p.vertices[0]) i0 = i;
    std::vector<int> seq(k);
    if (walk[(i0 + 1) % k] == p.vertices[1]) {
        for (int j = 0; j < k; ++j) seq[j] = walk[(i0 + j) % k];
    } else {
        for (int j = 0; j < k; ++j) seq[j] = walk[(i0 - j + k) % k];
    }
    int ca = p.colors[0], cb = p.colors[1];
    c[seq[0]] = ca;
    c[seq[1]] = cb;
    auto other12 = [](int col) { return col == 1 ? 2 : 1; };
    if (ca == 3) {
        for (int t = 2; t < k; ++t)
            c[seq[t]] = (c[seq[t - 1]] == 1) ? 2 : 1;
    } else if (cb == 3) {
        c[seq[k - 1]] = other12(ca);
        for (int t = k - 2; t >= 2; --t) c[seq[t]] = other12(c[seq[t + 1]]);
    } else {
        c[seq[2]] = 3;
        if (k > 3) {
            c[seq[k - 1]] = other12(ca);
            for (int t = k - 2; t >= 3; --t) c[seq[t]] = other12(c[seq[t + 1]]);
        }
    }
}

std::vector<int> component_of_without(const PlaneGraph& g, const std::vector<int>& removed,
                                      int anchor) {
    std::vector<char> blocked(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : removed) blocked[v] = 1;
    std::vector<int> out;
    std::queue<int> q;
    q.push(anchor);
    seen[anchor] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        out.push_back(v);
        for (int w : g.neighbors(v))
            if (!seen[w] && !blocked[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    return out;
}

VertexColoring lemma6(const PlaneGraph& g, PrecoloredPath p, ReductionTrace* trace) {
    const int n = g.vertex_count();
    VertexColoring c(n);
    if (n == 0) return c;

    if (g.component_count() > 1) {
        record(trace, ReductionKind::SplitComponents, {}, {});
        for (int comp = 0; comp < g.component_count(); ++comp) {
            DeletionResult ex = extract_component(g, comp);
            PrecoloredPath pc;
            for (int i = 0; i < p.size(); ++i)
                if (g.component_of(p.vertices[i]) == comp) {
                    pc.vertices.push_back(ex.old_to_new[p.vertices[i]]);
                    pc.colors.push_back(p.colors[i]);
                }
            VertexColoring sub = lemma6(ex.graph, pc, trace);
            for (int v = 0; v < n; ++v)
                if (ex.old_to_new[v] != -1) c[v] = sub[ex.old_to_new[v]];
        }
        return c;
    }

    if (n <= 2) {
        for (int i = 0; i < p.size(); ++i) c[p.vertices[i]] = p.colors[i];
        for (int v = 0; v < n; ++v) {
            if (c[v] != 0) continue;
            std::set<int> used;
            for (int w : g.neighbors(v))
                if (c[w] != 0) used.insert(c[w]);
            c[v] = smallest_color_not_in(used);
        }
        return c;
    }

    const int outer_idx = g.outer_face_index_of_component(0);
    if (outer_idx == -1) throw GraphError(Err::MissingOuterDart, "recursion needs an outer face");

    while (p.size() < 2) {
        const Face& outer = g.face(outer_idx);
        if (p.size() == 0) {
            int v = outer.vertices.front();
            record(trace, ReductionKind::ExtendPath, {v}, {});
            p = PrecoloredPath::single(v, 1);
        } else {
            int u = p.vertices[0];
            int best = -1;
            for (const Dart& d : outer.walk) {
                if (d.tail == u && (best == -1 || d.head < best)) best = d.head;
                if (d.head == u && (best == -1 || d.tail < best)) best = d.tail;
            }
            if (best == -1) trip(g, "no outer-walk neighbor to extend the path to");
            record(trace, ReductionKind::ExtendPath, {u, best}, {});
            int col = (p.colors[0] == 1) ? 2 : 1;
            p = PrecoloredPath::pair(u, p.colors[0], best, col);
        }
    }

    const Face& outer = g.face(outer_idx);

    // a vertex repeated on the outer walk is a cut vertex on the outer face
    {
        std::vector<char> seen(n, 0);
        int cut = -1;
        for (const Dart& d : outer.walk) {
            if (seen[d.tail]) {
                cut = d.tail;
                break;
            }
            seen[d.tail] = 1;
        }
        if (cut != -1) {
            record(trace, ReductionKind::CutVertex, {cut}, {});
            int anchor = (p.vertices[0] != cut) ? p.vertices[0] : p.vertices[1];
            std::vector<int> w0 = component_of_without(g, {cut}, anchor);
            std::vector<char> in_w(n, 0);
            for (int v : w0) in_w[v] = 1;
            in_w[cut] = 1;
            std::vector<int> not_w, w0_only;
            for (int v = 0; v < n; ++v)
                if (!in_w[v]) not_w.push_back(v);
            for (int v : w0)
                if (v != cut) w0_only.push_back(v);

            lemma6_on_deletion(g, not_w, p, trace, c);
            PrecoloredPath px = PrecoloredPath::single(cut, c[cut]);
            VertexColoring keep_cut = c;
            lemma6_on_deletion(g, w0_only, px, trace, c);
            if (c[cut] != keep_cut[cut]) trip(g, "cut-vertex color mismatch at merge");
            for (int v : w0) c[v] = keep_cut[v];
            return c;
        }
    }

    // the outer face is bounded by a cycle
    std::vector<int> cyc;
    for (const Dart& d : outer.walk) cyc.push_back(d.tail);
    const int k = static_cast<int>(cyc.size());
    std::vector<char> on_c(n, 0);
    std::vector<int> cyc_pos(n, -1);
    for (int i = 0; i < k; ++i) {
        on_c[cyc[i]] = 1;
        cyc_pos[cyc[i]] = i;
    }

    // chord of the outer cycle
    for (int i = 0; i < k; ++i) {
        int u = cyc[i];
        for (int w : g.neighbors(u)) {
            if (!on_c[w]) continue;
            int j = cyc_pos[w];
            if ((i + 1) % k == j || (j + 1) % k == i) continue;
            record(trace, ReductionKind::Chord, {u, w}, {Edge(u, w)});
            int anchor = -1;
            for (int t = 0; t < p.size(); ++t)
                if (p.vertices[t] != u && p.vertices[t] != w) anchor = p.vertices[t];
            if (anchor == -1) trip(g, "precolored path swallowed by a chord");
            std::vector<int> w0 = component_of_without(g, {u, w}, anchor);
            std::vector<char> in_w(n, 0);
            for (int v : w0) in_w[v] = 1;
            in_w[u] = in_w[w] = 1;
            std::vector<int> not_w, w0_only;
            for (int v = 0; v < n; ++v)
                if (!in_w[v]) not_w.push_back(v);
            for (int v : w0)
                if (v != u && v != w) w0_only.push_back(v);

            lemma6_on_deletion(g, not_w, p, trace, c);
            PrecoloredPath px = PrecoloredPath::pair(u, c[u], w, c[w]);
            VertexColoring keep = c;
            lemma6_on_deletion(g, w0_only, px, trace, c);
            if (c[u] != keep[u] || c[w] != keep[w]) trip(g, "chord colors mismatch at merge");
            for (int v : w0) c[v] = keep[v];
            return c;
        }
    }

    if (k == n) {
        bool all_deg2 = true;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) != 2) all_deg2 = false;
        if (all_deg2) {
            record(trace, ReductionKind::CycleBase, cyc, {});
            color_cycle(cyc, p, c);
            return c;
        }
        trip(g, "all vertices on a chordless outer cycle yet not a plain cycle");
    }

    // a deletable pair (v on the cycle, u interior)
    int wv = -1, wu = -1;
    for (int i = 0; i < k && wv == -1; ++i) {
        int v = cyc[i];
        if (p.contains(v) || g.degree(v) != 3) continue;
        int prev = cyc[(i + k - 1) % k], next = cyc[(i + 1) % k];
        for (int u : g.neighbors(v))
            if (u != prev && u != next && !on_c[u]) {
                wv = v;
                wu = u;
                break;
            }
    }
    if (wv == -1) {
        for (int i = 0; i < k && wv == -1; ++i) {
            int v = cyc[i];
            if (p.contains(v) || g.degree(v) != 2) continue;
            for (int fi : g.faces_at(v)) {
                if (fi == outer_idx) continue;
                for (const Dart& d : g.face(fi).walk)
                    if (!on_c[d.tail]) {
                        wv = v;
                        wu = d.tail;
                        break;
                    }
                if (wv != -1) break;
            }
        }
    }
    if (wv == -1) trip(g, "no deletable cycle/interior vertex pair found");
    record(trace, ReductionKind::Claim4Removal, {wv, wu}, {});

    DeletionResult d = delete_vertices(g, {wu, wv});
    // every vertex sharing a face with the interior vertex must end up on
    // the outer face of the reduced graph, so 4 stays a unique maximum
    for (int fi : g.faces_at(wu))
        for (int x : g.face(fi).vertices) {
            if (x == wu || x == wv) continue;
            if (!d.graph.vertex_on_outer(d.old_to_new[x]))
                trip(g, "face neighbor of the interior vertex not on the reduced outer face");
        }
    lemma6_on_deletion(g, {wu, wv}, p, trace, c);
    c[wu] = 4;
    int prev = cyc[(cyc_pos[wv] + k - 1) % k], next = cyc[(cyc_pos[wv] + 1) % k];
    int col = smallest_color_not_in({c[prev], c[next]});
    if (col == -1) trip(g, "no color left for the removed cycle vertex");
    c[wv] = col;
    return c;
}

}  // namespace

VertexColoring color_with_precolored_path(const PlaneGraph& g, const PrecoloredPath& p,
                                          ReductionTrace* trace) {
    if (g.vertex_count() > 0) {
        Classification cl = classify(g);
        if (!cl.is_subcubic && !cl.is_outerplane)
            throw GraphError(Err::NotApplicable, "needs a subcubic or outerplane input");
    }
    p.validate(g);
    return lemma6(g, p, trace);
}

VertexColoring fum_color(const PlaneGraph& g, ReductionTrace* trace) {
    if (g.vertex_count() == 0) throw GraphError(Err::NotApplicable, "empty graph");
    Classification cl = classify(g);
    if (!cl.is_subcubic && !cl.is_outerplane)
        throw GraphError(Err::NotApplicable, "needs a subcubic plane or outerplane input");

    int v = -1;
    for (int u = 0; u < g.vertex_count() && v == -1; ++u)
        if (g.vertex_on_outer(u)) v = u;
    if (v == -1) throw GraphError(Err::MissingOuterDart, "no vertex on the outer face");

    DeletionResult d = delete_vertices(g, {v});
    PrecoloredPath p;
    std::vector<int> nbrs = g.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end());
    for (int w : nbrs) {
        int nw = d.old_to_new[w];
        if (nw != -1 && d.graph.vertex_on_outer(nw)) {
            p = PrecoloredPath::single(nw, 1);
            break;
        }
    }
    VertexColoring sub = lemma6(d.graph, p, trace);
    VertexColoring c(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        if (d.old_to_new[u] != -1) c[u] = sub[d.old_to_new[u]];
    c[v] = 4;
    return c;
}

VertexColoring color_quadrangulation(const PlaneGraph& g,
                                     const QuadrangulationColoringOptions& opt,
                                     ReductionTrace* trace) {
    (void)trace;
    Classification cl = classify(g);
    if (!cl.is_quadrangulation || !cl.is_bipartite)
        throw GraphError(Err::NotApplicable, "needs a bipartite plane quadrangulation");

    if (!opt.force_fallback) {
        if (auto rbb = find_rbb(g, /*extra_independence=*/true)) {
            std::vector<int> side = bipartition_sides(g);
            VertexColoring c(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) {
                switch (rbb->label[v]) {
                    case RbbColor::Red: c[v] = 4; break;
                    case RbbColor::Blue: c[v] = 3; break;
                    case RbbColor::Black: c[v] = (side[v] == 0) ? 1 : 2; break;
                }
            }
            return c;
        }
    }
    auto witness = find_fum_coloring(g, 4);
    if (!witness)
        throw GraphError(Err::FallbackExhausted,
                         "no FUM coloring with 4 colors found for a quadrangulation — "
                         "this contradicts the proven bound, report the instance\n" +
                             g.debug_dump());
    return *witness;
}

// ---------------------------------------------------------------------------
// F-facial edge coloring (edge side)

namespace {

std::vector<Edge> facially_adjacent_to(const PlaneGraph& g, Edge e) {
    std::set<Edge> out;
    for (int u : {e.a, e.b}) {
        if (g.degree(u) < 2) continue;
        int o = e.other(u);
        out.insert(Edge(u, g.rotation_pred(u, o)));
        out.insert(Edge(u, g.rotation_succ(u, o)));
    }
    out.erase(e);
    return {out.begin(), out.end()};
}

std::set<int> used_adjacent_colors(const PlaneGraph& g, const FreePairSet& fp,
                                   const EdgeColoring& c, Edge e) {
    std::set<int> used;
    for (const Edge& x : facially_adjacent_to(g, e)) {
        if (fp.contains(e, x)) continue;
        if (int col = c.at(x); col > 0) used.insert(col);
    }
    return used;
}

void assign_smallest(const PlaneGraph& g, const FreePairSet& fp, EdgeColoring& c, Edge e) {
    int col = smallest_color_not_in(used_adjacent_colors(g, fp, c, e));
    if (col == -1) trip(g, "no color in {1,2,3} available for an extension edge");
    c.set(e, col);
}

EdgeColoring lemma8(const PlaneGraph& g, const FreePairSet& fp, ReductionTrace* trace);

void extend_leaf_cycle(const PlaneGraph& g, const FreePairSet& fp, EdgeColoring& c,
                       const Block& b, int attach) {
    // order the block's edges around its cycle, starting and ending at the
    // attachment vertex (or the smallest block vertex when detached)
    int start = (attach != -1) ? attach : b.vertices.front();
    auto in_block = [&](Edge e) {
        return std::binary_search(b.edges.begin(), b.edges.end(), e);
    };
    Edge first;
    bool found = false;
    for (int w : g.neighbors(start)) {
        if (in_block(Edge(start, w))) {
            first = Edge(start, w);
            found = true;
            break;
        }
    }
    if (!found) trip(g, "attachment vertex has no block edge");
    std::vector<Edge> ring = {first};
    int cur = first.other(start);
    Edge prev = first;
    while (cur != start) {
        bool step = false;
        for (int w : g.neighbors(cur)) {
            Edge e(cur, w);
            if (e != prev && in_block(e)) {
                ring.push_back(e);
                prev = e;
                cur = w;
                step = true;
                break;
            }
        }
        if (!step) trip(g, "leaf block is not a closed cycle");
    }
    const int k = static_cast<int>(ring.size());
    auto other12 = [](int col) { return col == 1 ? 2 : 1; };

    if (attach == -1) {
        c.set(ring[0], 3);
        c.set(ring[1], 1);
        for (int t = 2; t < k; ++t) c.set(ring[t], other12(c.at(ring[t - 1])));
        return;
    }

    std::set<int> used1 = used_adjacent_colors(g, fp, c, ring[0]);
    std::set<int> used2 = used_adjacent_colors(g, fp, c, ring[k - 1]);
    auto pick12 = [&](const std::set<int>& used, int also_avoid) {
        for (int col : {1, 2})
            if (!used.count(col) && col != also_avoid) return col;
        return -1;
    };

    if (!used1.count(3)) {
        c.set(ring[0], 3);
        int col = pick12(used2, 0);
        if (col == -1) trip(g, "no color for the second attachment edge");
        c.set(ring[k - 1], col);
        for (int t = k - 2; t >= 1; --t) c.set(ring[t], other12(c.at(ring[t + 1])));
    } else if (!used2.count(3)) {
        c.set(ring[k - 1], 3);
        int col = pick12(used1, 0);
        if (col == -1) trip(g, "no color for the first attachment edge");
        c.set(ring[0], col);
        for (int t = 1; t <= k - 2; ++t) c.set(ring[t], other12(c.at(ring[t - 1])));
    } else {
        int c1 = pick12(used1, 0);
        if (c1 == -1) trip(g, "attachment edge has no color in {1,2}");
        c.set(ring[0], c1);
        int c2 = pick12(used2, c1);
        if (c2 == -1) trip(g, "attachment edges cannot take distinct colors");
        c.set(ring[k - 1], c2);
        int j = (k - 1) / 2;
        j = std::max(1, std::min(j, k - 2));
        c.set(ring[j], 3);
        for (int t = 1; t < j; ++t) c.set(ring[t], other12(c.at(ring[t - 1])));
        for (int t = k - 2; t > j; --t) c.set(ring[t], other12(c.at(ring[t + 1])));
    }
}

EdgeColoring lemma8(const PlaneGraph& g, const FreePairSet& fp, ReductionTrace* trace) {
    if (g.edge_count() == 0) return {};

    // (A) a degree-1 vertex on the outer face
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 1 || !g.vertex_on_outer(v)) continue;
        Edge e(v, g.neighbors(v)[0]);
        record(trace, ReductionKind::ConfigA, {v}, {e});
        EdgeRemovalResult r = remove_edges_tracking_free_pairs(g, {e}, fp);
        EdgeColoring c = lemma8(r.graph, r.free_pairs, trace);
        assign_smallest(g, fp, c, e);
        return c;
    }

    // (B) an outer edge in a good pair at one end, flanked at the other end
    // by an edge out of the outer face
    for (int fi = 0; fi < g.face_count(); ++fi) {
        const Face& f = g.face(fi);
        if (!f.is_outer) continue;
        for (const Dart& d : f.walk) {
            for (int flip = 0; flip < 2; ++flip) {
                int u = flip ? d.head : d.tail;
                int v = flip ? d.tail : d.head;
                Edge e(u, v);
                if (!(g.degree(u) == 2 || fp.has_pair_at(u, e))) continue;
                for (int x : {g.rotation_pred(v, u), g.rotation_succ(v, u)}) {
                    Edge fe(v, x);
                    if (fe == e || g.edge_on_outer(fe)) continue;
                    record(trace, ReductionKind::ConfigB, {u, v}, {e, fe});
                    EdgeRemovalResult r = remove_edges_tracking_free_pairs(g, {e, fe}, fp);
                    EdgeColoring c = lemma8(r.graph, r.free_pairs, trace);
                    for (const Edge& y : facially_adjacent_to(g, fe))
                        if (c.at(y) == 4) trip(g, "edge next to the lifted 4-edge already has 4");
                    c.set(fe, 4);
                    assign_smallest(g, fp, c, e);
                    return c;
                }
            }
        }
    }

    // a leaf block that is a cycle lying on the outer face
    BlockTree t = blocks(g);
    for (int bi : leaf_blocks(t)) {
        const Block& b = t.blocks[bi];
        if (b.edges.empty() || !b.is_cycle()) continue;
        bool all_outer = true;
        for (const Edge& e : b.edges)
            if (!g.edge_on_outer(e)) all_outer = false;
        if (!all_outer) continue;
        int attach = b.cut_vertices.empty() ? -1 : b.cut_vertices.front();
        std::vector<int> wit = b.vertices;
        record(trace, ReductionKind::LeafCycle, wit, b.edges);
        EdgeRemovalResult r = remove_edges_tracking_free_pairs(g, b.edges, fp);
        EdgeColoring c = lemma8(r.graph, r.free_pairs, trace);
        extend_leaf_cycle(g, fp, c, b, attach);
        return c;
    }

    trip(g, "no reduction applies although edges remain");
}

}  // namespace

bool is_good_vertex(const PlaneGraph& g, const FreePairSet& fp, int v) {
    int deg = g.degree(v);
    if (deg == 1 || deg == 2) return true;
    for (const auto& pr : fp.pairs())
        if (pr.first.has(v) && pr.second.has(v)) return true;
    return false;
}

EdgeColoring f_facial_edge_color(const PlaneGraph& g, const FreePairSet& fp,
                                 ReductionTrace* trace) {
    for (const auto& pr : fp.pairs())
        if (!g.has_edge(pr.first.a, pr.first.b) || !g.has_edge(pr.second.a, pr.second.b))
            throw GraphError(Err::BadInput, "free pair references a missing edge");
    if (g.edge_count() > 0 && !g.has_outer_designation())
        throw GraphError(Err::MissingOuterDart, "edge coloring references the outer face");

    BlockTree t = blocks(g);
    for (int bi : leaf_blocks(t)) {
        const Block& b = t.blocks[bi];
        if (b.edges.empty()) continue;
        bool ok = false;
        for (int v : b.vertices)
            if (g.vertex_on_outer(v) && is_good_vertex(g, fp, v)) ok = true;
        if (!ok)
            throw GraphError(Err::PreconditionViolated,
                             "leaf block without a good vertex on the outer face");
    }
    return lemma8(g, fp, trace);
}

EdgeColoring fum_edge_color_2connected(const PlaneGraph& g, ReductionTrace* trace) {
    Classification cl = classify(g);
    if (!cl.is_2connected)
        throw GraphError(Err::NotApplicable, "needs a 2-connected plane graph");

    int of = g.outer_face_index_of_component(0);
    Edge e = g.face(of).edges.front();   // lexicographically smallest outer edge
    EdgeRemovalResult r = remove_edge_tracking_free_pairs(g, e, {});
    EdgeColoring c = f_facial_edge_color(r.graph, r.free_pairs, trace);
    c.set(e, 4);
    return c;
}

}  // namespace fum
