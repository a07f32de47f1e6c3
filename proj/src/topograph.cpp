#include "qp/topograph.hpp"

#include <algorithm>

#include "qp/error.hpp"

namespace qp {

const Vertex* TopoGraph::vertex(int id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

const TopoEdge* TopoGraph::edge(int id) const {
    for (const auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::BAD_REFERENCE: return "BAD_REFERENCE";
        case ViolationKind::BAD_CURVE: return "BAD_CURVE";
        case ViolationKind::ENDPOINT_MISMATCH: return "ENDPOINT_MISMATCH";
        case ViolationKind::VERTEX_ON_EDGE: return "VERTEX_ON_EDGE";
        case ViolationKind::TANGENCY: return "TANGENCY";
        case ViolationKind::OVERLAP: return "OVERLAP";
        case ViolationKind::SIMPLICITY: return "SIMPLICITY";
        case ViolationKind::NOT_X_MONOTONE: return "NOT_X_MONOTONE";
        case ViolationKind::DUPLICATE_VERTEX: return "DUPLICATE_VERTEX";
    }
    return "UNKNOWN";
}

std::vector<Violation> validate(const TopoGraph& g) {
    std::vector<Violation> out;

    for (size_t i = 0; i < g.vertices.size(); ++i)
        for (size_t j = i + 1; j < g.vertices.size(); ++j)
            if (g.vertices[i].p == g.vertices[j].p || g.vertices[i].id == g.vertices[j].id)
                out.push_back({ViolationKind::DUPLICATE_VERTEX, {}, g.vertices[i].id,
                               "vertex point or id coincides with vertex " +
                                   std::to_string(g.vertices[j].id)});

    for (const auto& e : g.edges) {
        const Vertex* u = g.vertex(e.u);
        const Vertex* v = g.vertex(e.v);
        if (!u || !v) {
            out.push_back({ViolationKind::BAD_REFERENCE, {e.id}, -1, "unknown endpoint id"});
            continue;
        }
        std::string why;
        if (!e.curve.valid(&why)) {
            out.push_back({ViolationKind::BAD_CURVE, {e.id}, -1, why});
            continue;
        }
        if (e.curve.front() != u->p || e.curve.back() != v->p)
            out.push_back({ViolationKind::ENDPOINT_MISMATCH, {e.id}, -1,
                           "curve does not run from u's point to v's point"});
        if (g.x_monotone_declared) {
            bool inc = true;
            for (size_t i = 0; i + 1 < e.curve.waypoints.size(); ++i)
                if (!(e.curve.waypoints[i].x < e.curve.waypoints[i + 1].x)) inc = false;
            if (!inc)
                out.push_back({ViolationKind::NOT_X_MONOTONE, {e.id}, -1,
                               "declared x-monotone but curve is not"});
        }
        for (const auto& w : g.vertices) {
            if (w.id == e.u || w.id == e.v) continue;
            if (e.curve.contains_point(w.p))
                out.push_back({ViolationKind::VERTEX_ON_EDGE, {e.id}, w.id,
                               "edge passes through a non-endpoint vertex"});
        }
    }
    if (!out.empty()) return out;  // pairwise checks assume sane curves

    for (size_t i = 0; i < g.edges.size(); ++i) {
        for (size_t j = i + 1; j < g.edges.size(); ++j) {
            const auto& a = g.edges[i];
            const auto& b = g.edges[j];
            try {
                auto recs = crossings(a.curve, b.curve);
                if (g.simple_declared && recs.size() > 1)
                    out.push_back({ViolationKind::SIMPLICITY, {a.id, b.id}, -1,
                                   "edge pair intersects more than once"});
            } catch (const Error& err) {
                ViolationKind k = err.code() == ErrorCode::OVERLAP ? ViolationKind::OVERLAP
                                                                   : ViolationKind::TANGENCY;
                out.push_back({k, {a.id, b.id}, -1, err.what()});
            }
        }
    }
    return out;
}

CrossingGraph crossing_graph(const TopoGraph& g) {
    CrossingGraph cg;
    for (const auto& e : g.edges) cg.nodes.push_back(e.id);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        for (size_t j = i + 1; j < g.edges.size(); ++j) {
            const auto& a = g.edges[i];
            const auto& b = g.edges[j];
            bool share_endpoint = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (share_endpoint) continue;
            int proper = 0;
            for (const auto& r : crossings(a.curve, b.curve))
                if (r.kind == CrossingKind::PROPER_CROSSING) ++proper;
            if (proper > 0) {
                auto key = std::make_pair(std::min(a.id, b.id), std::max(a.id, b.id));
                cg.adjacency.insert(key);
                cg.crossing_counts[key] = proper;
            }
        }
    }
    return cg;
}

namespace {

struct CliqueSearch {
    const CrossingGraph& cg;
    int k;
    std::vector<int> nodes;
    std::vector<int> current;
    std::optional<std::vector<int>> found;

    explicit CliqueSearch(const CrossingGraph& g, int target) : cg(g), k(target) {
        nodes = cg.nodes;
        // descending degree order helps both branching and the color bound
        std::map<int, int> deg;
        for (const auto& [a, b] : cg.adjacency) {
            ++deg[a];
            ++deg[b];
        }
        std::sort(nodes.begin(), nodes.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    }

    int greedy_color_count(const std::vector<int>& cand) const {
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            bool placed = false;
            for (auto& cls : classes) {
                bool ok = true;
                for (int u : cls)
                    if (cg.adjacent(u, v)) { ok = false; break; }
                if (ok) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        return static_cast<int>(classes.size());
    }

    void run(std::vector<int> cand) {
        if (found) return;
        if (static_cast<int>(current.size()) == k) {
            found = current;
            return;
        }
        int need = k - static_cast<int>(current.size());
        if (static_cast<int>(cand.size()) < need) return;
        if (greedy_color_count(cand) < need) return;
        for (size_t i = 0; i < cand.size() && !found; ++i) {
            if (static_cast<int>(cand.size() - i) < need) return;
            int v = cand[i];
            std::vector<int> next;
            for (size_t j = i + 1; j < cand.size(); ++j)
                if (cg.adjacent(v, cand[j])) next.push_back(cand[j]);
            current.push_back(v);
            run(next);
            current.pop_back();
        }
    }
};

}  // namespace

std::optional<std::vector<int>> find_clique(const CrossingGraph& cg, int k) {
    if (k < 1) throw Error(ErrorCode::BAD_INPUT, "clique size must be >= 1");
    if (k == 1) {
        if (cg.nodes.empty()) return std::nullopt;
        return std::vector<int>{cg.nodes.front()};
    }
    CliqueSearch search(cg, k);
    search.run(search.nodes);
    return search.found;
}

std::optional<std::vector<int>> find_pairwise_crossing(const TopoGraph& g, int k) {
    if (k < 2) throw Error(ErrorCode::BAD_INPUT, "k must be >= 2");
    auto cg = crossing_graph(g);
    auto clique = find_clique(cg, k);
    if (!clique) return std::nullopt;
    // re-verify each pair geometrically
    for (size_t i = 0; i < clique->size(); ++i) {
        for (size_t j = i + 1; j < clique->size(); ++j) {
            const TopoEdge* a = g.edge((*clique)[i]);
            const TopoEdge* b = g.edge((*clique)[j]);
            bool proper = false;
            for (const auto& r : crossings(a->curve, b->curve))
                if (r.kind == CrossingKind::PROPER_CROSSING) proper = true;
            if (!proper)
                throw Error(ErrorCode::BAD_INPUT, "internal: clique pair fails geometric recheck");
        }
    }
    return clique;
}

int quasi_planarity_order(const TopoGraph& g) {
    auto cg = crossing_graph(g);
    for (int k = 2;; ++k) {
        if (!find_clique(cg, k)) return k;
    }
}

}  // namespace qp
