#include "qp/construct.hpp"

#include <algorithm>
#include <map>

#include "qp/error.hpp"
#include "qp/structure.hpp"

namespace qp {

Sequence SequencePair::to_sequence(const std::vector<int>& vertex_ids) {
    std::map<int, Symbol> code;
    std::vector<Symbol> syms;
    for (int id : vertex_ids) {
        auto [it, inserted] = code.emplace(id, static_cast<Symbol>(code.size()));
        syms.push_back(it->second);
    }
    return Sequence(std::move(syms), static_cast<int>(code.size()));
}

namespace {

// Parameter of a point along a polyline, for ordering events.
std::pair<int, Rat> param_on_curve(const Curve& c, const Point& p) {
    for (size_t i = 0; i + 1 < c.waypoints.size(); ++i) {
        const Point& a = c.waypoints[i];
        const Point& b = c.waypoints[i + 1];
        if (orientation(a, b, p) != 0) continue;
        if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
            std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y)) {
            Rat t = (a.x != b.x) ? (p.x - a.x) / (b.x - a.x) : (p.y - a.y) / (b.y - a.y);
            return {static_cast<int>(i), t};
        }
    }
    throw Error(ErrorCode::BAD_INPUT, "internal: point not on curve");
}

int cross_sign(const Point& d, const Point& r) {
    Rat cr = d.x * r.y - d.y * r.x;
    if (cr > 0) return 1;
    if (cr < 0) return -1;
    return 0;
}

// Walk directions of a curve at a point on it (one or two, pointing forward).
std::vector<Point> walk_directions(const Curve& c, const Point& p) {
    const auto& w = c.waypoints;
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] != p) continue;
        std::vector<Point> out;
        if (k > 0) out.push_back(Point{p.x - w[k - 1].x, p.y - w[k - 1].y});
        if (k + 1 < w.size()) out.push_back(Point{w[k + 1].x - p.x, w[k + 1].y - p.y});
        return out;
    }
    auto [i, t] = param_on_curve(c, p);
    const Point& a = w[static_cast<size_t>(i)];
    const Point& b = w[static_cast<size_t>(i) + 1];
    return {Point{b.x - a.x, b.y - a.y}};
}

// Which side of e's walk direction each branch of `other` departs to;
// returns the vertex id reached by the LEFT branch (and by implication the
// other endpoint for the right branch).
std::pair<int, int> left_right_endpoints(const Curve& e_curve, const TopoEdge& other,
                                         const Point& p) {
    auto dirs = walk_directions(e_curve, p);
    const auto& w = other.curve.waypoints;

    Point ray_front{0, 0}, ray_back{0, 0};  // toward front / back endpoint
    bool at_waypoint = false;
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] == p) {
            if (k == 0 || k + 1 == w.size())
                throw Error(ErrorCode::DEGENERATE, "crossing at a curve endpoint");
            ray_front = Point{w[k - 1].x - p.x, w[k - 1].y - p.y};
            ray_back = Point{w[k + 1].x - p.x, w[k + 1].y - p.y};
            at_waypoint = true;
            break;
        }
    }
    if (!at_waypoint) {
        auto [i, t] = param_on_curve(other.curve, p);
        ray_front = Point{w[static_cast<size_t>(i)].x - p.x, w[static_cast<size_t>(i)].y - p.y};
        ray_back = Point{w[static_cast<size_t>(i) + 1].x - p.x, w[static_cast<size_t>(i) + 1].y - p.y};
    }

    int side_front = 0, side_back = 0;
    for (const Point& d : dirs) {
        int sf = cross_sign(d, ray_front);
        int sb = cross_sign(d, ray_back);
        if (sf == 0 || sb == 0 || sf == sb)
            throw Error(ErrorCode::DEGENERATE, "branch side ambiguous at crossing");
        if (side_front == 0) {
            side_front = sf;
            side_back = sb;
        } else if (side_front != sf) {
            throw Error(ErrorCode::DEGENERATE, "walk direction kinks across the other curve");
        }
    }
    // left of the walk direction means positive cross product
    int left_vertex = (side_front > 0) ? other.u : other.v;
    int right_vertex = (side_front > 0) ? other.v : other.u;
    return {left_vertex, right_vertex};
}

}  // namespace

SequencePair build_from_crossing_edge(const TopoGraph& g, int e_id) {
    const TopoEdge* e = g.edge(e_id);
    if (!e) throw Error(ErrorCode::BAD_INPUT, "unknown edge id");

    struct Hit {
        Point p;
        std::pair<int, Rat> param;
        int edge_id;
    };
    std::vector<Hit> hits;
    for (const auto& f : g.edges) {
        if (f.id == e_id) continue;
        if (f.u == e->u || f.u == e->v || f.v == e->u || f.v == e->v) continue;
        std::vector<Point> proper;
        for (const auto& r : crossings(e->curve, f.curve))
            if (r.kind == CrossingKind::PROPER_CROSSING) proper.push_back(r.point);
        if (proper.empty()) continue;
        if (proper.size() > 1)
            throw Error(ErrorCode::MULTIPLE_CROSSINGS,
                        "edge " + std::to_string(f.id) + " crosses the spine more than once");
        hits.push_back({proper.front(), param_on_curve(e->curve, proper.front()), f.id});
    }
    for (size_t i = 0; i < hits.size(); ++i)
        for (size_t j = i + 1; j < hits.size(); ++j)
            if (hits[i].p == hits[j].p)
                throw Error(ErrorCode::COINCIDENT_CROSSINGS,
                            "two edges cross the spine at the same point");
    std::sort(hits.begin(), hits.end(),
              [](const Hit& a, const Hit& b) { return a.param < b.param; });

    SequencePair out;
    out.provenance = Provenance::ALL_CROSSING_EDGE;
    out.source_edge = e_id;
    for (const Hit& h : hits) {
        auto [left, right] = left_right_endpoints(e->curve, *g.edge(h.edge_id), h.p);
        out.s1.push_back(left);
        out.s2.push_back(right);
        out.order.push_back(h.edge_id);
    }
    return out;
}

MedianPartition median_line_partition(const TopoGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    if (n < 2) throw Error(ErrorCode::BAD_INPUT, "need at least 2 vertices");
    std::vector<Rat> xs;
    for (const auto& v : g.vertices) xs.push_back(v.p.x);
    std::sort(xs.begin(), xs.end());
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (xs[i] == xs[i + 1])
            throw Error(ErrorCode::DUPLICATE_X, "two vertices share an x-coordinate");

    MedianPartition mp;
    mp.line_x = (xs[static_cast<size_t>(n / 2 - 1)] + xs[static_cast<size_t>(n / 2)]) / 2;
    std::map<int, bool> left_of;
    for (const auto& v : g.vertices) {
        bool l = v.p.x < mp.line_x;
        left_of[v.id] = l;
        (l ? mp.v1 : mp.v2).push_back(v.id);
    }
    for (const auto& e : g.edges) {
        bool lu = left_of.at(e.u), lv = left_of.at(e.v);
        if (lu && lv) mp.e1.push_back(e.id);
        else if (!lu && !lv) mp.e2.push_back(e.id);
        else mp.e_prime.push_back(e.id);
    }
    return mp;
}

namespace {

Curve oriented_left_to_right(const Curve& c) {
    if (c.front().x <= c.back().x) return c;
    Curve r = c;
    std::reverse(r.waypoints.begin(), r.waypoints.end());
    return r;
}

}  // namespace

SequencePair build_from_vertical_line(const TopoGraph& g, const Rat& line_x,
                                      const std::vector<int>& edge_ids) {
    struct Entry {
        Rat y;
        int edge_id;
        int left_vertex, right_vertex;
    };
    std::vector<Entry> entries;
    for (int id : edge_ids) {
        const TopoEdge* e = g.edge(id);
        if (!e) throw Error(ErrorCode::BAD_INPUT, "unknown edge id");
        auto pt = crossing_point_on_line(oriented_left_to_right(e->curve), line_x);
        if (!pt)
            throw Error(ErrorCode::NOT_CROSSING,
                        "edge " + std::to_string(id) + " misses the line");
        bool u_left = g.vertex(e->u)->p.x < g.vertex(e->v)->p.x;
        entries.push_back({pt->y, id, u_left ? e->u : e->v, u_left ? e->v : e->u});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.y < b.y; });
    for (size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i].y == entries[i + 1].y)
            throw Error(ErrorCode::COINCIDENT_CROSSINGS,
                        "two edges meet the line at the same point");

    SequencePair out;
    out.provenance = Provenance::VERTICAL_LINE;
    out.line_x = line_x;
    for (const Entry& en : entries) {
        out.s1.push_back(en.left_vertex);
        out.s2.push_back(en.right_vertex);
        out.order.push_back(en.edge_id);
    }
    return out;
}

PipelineReport xmono_pipeline(const TopoGraph& g, int k) {
    if (k < 2) throw Error(ErrorCode::BAD_INPUT, "k must be >= 2");
    if (!validate(g).empty())
        throw Error(ErrorCode::BAD_INPUT, "drawing fails validation");

    PipelineReport rep;
    rep.partition = median_line_partition(g);
    rep.spanning_count = static_cast<int>(rep.partition.e_prime.size());

    auto prune_pass = [&](const std::vector<int>& edge_ids, bool by_left, Side side) {
        std::map<int, std::vector<std::pair<int, Curve>>> bundles;
        for (int id : edge_ids) {
            const TopoEdge* e = g.edge(id);
            bool u_left = g.vertex(e->u)->p.x < g.vertex(e->v)->p.x;
            int anchor = by_left ? (u_left ? e->u : e->v) : (u_left ? e->v : e->u);
            bundles[anchor].push_back({id, e->curve});
        }
        std::vector<int> survivors;
        for (auto& [anchor, bundle] : bundles) {
            auto kept = prune_incomparability(bundle, side, rep.partition.line_x, k);
            survivors.insert(survivors.end(), kept.begin(), kept.end());
        }
        return survivors;
    };

    auto after_left = prune_pass(rep.partition.e_prime, true, Side::LEFT_OF_L);
    rep.after_left_prune = static_cast<int>(after_left.size());
    auto retained = prune_pass(after_left, false, Side::RIGHT_OF_L);
    rep.retained_count = static_cast<int>(retained.size());

    rep.pair = build_from_vertical_line(g, rep.partition.line_x, retained);

    const int l = k * k * k + 2;
    rep.witness_s1 = contains_up_down_up(SequencePair::to_sequence(rep.pair.s1), l);
    rep.witness_s2 = contains_up_down_up(SequencePair::to_sequence(rep.pair.s2), l);
    if (rep.witness_s1 || rep.witness_s2) {
        rep.crossing_clique = find_pairwise_crossing(g, k);
        rep.failure = !rep.crossing_clique.has_value();
    }
    return rep;
}

}  // namespace qp
