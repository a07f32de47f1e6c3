#include "qp/structure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qp/error.hpp"

namespace qp {

ArcPoset ArcPoset::build(const std::vector<ArcElement>& elements, OrderKind kind,
                         const std::set<std::pair<int, int>>& crossing_pairs) {
    ArcPoset p;
    p.elements = elements;
    p.order_kind = kind;
    auto crossing = [&](int a, int b) {
        return crossing_pairs.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    for (const auto& a : elements) {
        for (const auto& b : elements) {
            if (a.rank >= b.rank) continue;
            bool x_ok = (kind == OrderKind::PREC1) ? (a.x < b.x) : (a.x > b.x);
            if (x_ok && !crossing(a.id, b.id)) p.comparability.insert({a.id, b.id});
        }
    }
    return p;
}

namespace {

void check_strict_partial_order(const ArcPoset& p) {
    for (const auto& [a, b] : p.comparability) {
        if (a == b) throw Error(ErrorCode::NOT_A_POSET, "relation is not irreflexive");
        if (p.comparability.count({b, a}))
            throw Error(ErrorCode::NOT_A_POSET, "relation is not antisymmetric");
    }
    for (const auto& [a, b] : p.comparability)
        for (const auto& e : p.elements)
            if (p.less(b, e.id) && !p.less(a, e.id))
                throw Error(ErrorCode::NOT_A_POSET, "relation is not transitive");
}

// Kuhn augmenting-path matching on the comparability bipartite graph.
struct ChainMatcher {
    const std::vector<int>& ids;
    const ArcPoset& p;
    std::map<int, int> succ, pred;  // matched successor / predecessor

    ChainMatcher(const std::vector<int>& ids_, const ArcPoset& p_) : ids(ids_), p(p_) {}

    bool augment(int a, std::set<int>& visited) {
        for (int b : ids) {
            if (!p.less(a, b) || visited.count(b)) continue;
            visited.insert(b);
            auto it = pred.find(b);
            if (it == pred.end() || augment(it->second, visited)) {
                succ[a] = b;
                pred[b] = a;
                return true;
            }
        }
        return false;
    }

    void run() {
        for (int a : ids) {
            std::set<int> visited;
            augment(a, visited);
        }
    }
};

}  // namespace

std::vector<std::vector<int>> chain_cover(const ArcPoset& p) {
    check_strict_partial_order(p);
    std::vector<int> ids;
    for (const auto& e : p.elements) ids.push_back(e.id);

    ChainMatcher matcher(ids, p);
    matcher.run();

    std::vector<std::vector<int>> chains;
    for (int a : ids) {
        if (matcher.pred.count(a)) continue;  // not a chain head
        std::vector<int> chain{a};
        int cur = a;
        while (true) {
            auto it = matcher.succ.find(cur);
            if (it == matcher.succ.end()) break;
            cur = it->second;
            chain.push_back(cur);
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

namespace {

// Longest chain (as ids) of a poset whose elements are pre-sorted so that
// comparability only points forward.
std::vector<int> longest_chain(const std::vector<ArcElement>& sorted, const ArcPoset& p) {
    const int n = static_cast<int>(sorted.size());
    std::vector<int> len(static_cast<size_t>(n), 1), par(static_cast<size_t>(n), -1);
    int best = 0, best_i = n > 0 ? 0 : -1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (p.less(sorted[static_cast<size_t>(j)].id, sorted[static_cast<size_t>(i)].id) &&
                len[static_cast<size_t>(j)] + 1 > len[static_cast<size_t>(i)]) {
                len[static_cast<size_t>(i)] = len[static_cast<size_t>(j)] + 1;
                par[static_cast<size_t>(i)] = j;
            }
        }
        if (len[static_cast<size_t>(i)] > best) {
            best = len[static_cast<size_t>(i)];
            best_i = i;
        }
    }
    std::vector<int> out;
    for (int i = best_i; i >= 0; i = par[static_cast<size_t>(i)])
        out.push_back(sorted[static_cast<size_t>(i)].id);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> heights(const std::vector<ArcElement>& sorted, const ArcPoset& p) {
    const int n = static_cast<int>(sorted.size());
    std::vector<int> h(static_cast<size_t>(n), 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (p.less(sorted[static_cast<size_t>(j)].id, sorted[static_cast<size_t>(i)].id))
                h[static_cast<size_t>(i)] = std::max(h[static_cast<size_t>(i)],
                                                     h[static_cast<size_t>(j)] + 1);
    return h;
}

}  // namespace

DilworthTriple dilworth_triple(const std::vector<ArcElement>& arcs,
                               const std::set<std::pair<int, int>>& crossing_pairs, int k) {
    if (k < 2) throw Error(ErrorCode::BAD_INPUT, "k must be >= 2");
    auto crossing = [&](int a, int b) {
        return crossing_pairs.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    ArcPoset p1 = ArcPoset::build(arcs, OrderKind::PREC1, crossing_pairs);
    ArcPoset p2 = ArcPoset::build(arcs, OrderKind::PREC2, crossing_pairs);
    // the trichotomy argument needs genuine partial orders
    check_strict_partial_order(p1);
    check_strict_partial_order(p2);

    // hypothesis: incomparable in both orders implies crossing
    for (size_t i = 0; i < arcs.size(); ++i) {
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            int a = arcs[i].id, b = arcs[j].id;
            bool cmp = p1.less(a, b) || p1.less(b, a) || p2.less(a, b) || p2.less(b, a);
            if (!cmp && !crossing(a, b))
                throw Error(ErrorCode::PRECONDITION,
                            "arcs incomparable in both orders do not cross");
        }
    }

    std::vector<ArcElement> sorted = arcs;
    std::sort(sorted.begin(), sorted.end(),
              [](const ArcElement& a, const ArcElement& b) { return a.rank < b.rank; });

    auto verify_chain = [&](const std::vector<int>& ids, const ArcPoset& p) {
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j)
                if (!p.less(ids[i], ids[j]) && !p.less(ids[j], ids[i]))
                    throw Error(ErrorCode::BAD_INPUT, "internal: chain certificate invalid");
    };

    auto c1 = longest_chain(sorted, p1);
    if (static_cast<int>(c1.size()) >= k) {
        c1.resize(static_cast<size_t>(k));
        verify_chain(c1, p1);
        return {DilworthTriple::Kind::CHAIN1, c1};
    }
    auto c2 = longest_chain(sorted, p2);
    if (static_cast<int>(c2.size()) >= k) {
        c2.resize(static_cast<size_t>(k));
        verify_chain(c2, p2);
        return {DilworthTriple::Kind::CHAIN2, c2};
    }

    // No k-chain in either order: slice by PREC1 height (< k classes), take
    // the biggest class, slice that by PREC2 height; the biggest slice is an
    // antichain of both orders, hence pairwise crossing by the hypothesis.
    auto h1 = heights(sorted, p1);
    std::map<int, std::vector<ArcElement>> by_h1;
    for (size_t i = 0; i < sorted.size(); ++i) by_h1[h1[i]].push_back(sorted[i]);
    std::vector<ArcElement> level1;
    for (auto& [h, grp] : by_h1)
        if (grp.size() > level1.size()) level1 = grp;

    ArcPoset p2_level = ArcPoset::build(level1, OrderKind::PREC2, crossing_pairs);
    auto h2 = heights(level1, p2_level);
    std::map<int, std::vector<int>> by_h2;
    for (size_t i = 0; i < level1.size(); ++i) by_h2[h2[i]].push_back(level1[i].id);
    std::vector<int> best;
    for (auto& [h, grp] : by_h2)
        if (grp.size() > best.size()) best = grp;

    if (static_cast<int>(best.size()) < k)
        throw Error(ErrorCode::PRECONDITION,
                    "no outcome found; input smaller than (k-1)^3 + 1");
    best.resize(static_cast<size_t>(k));
    for (size_t i = 0; i < best.size(); ++i)
        for (size_t j = i + 1; j < best.size(); ++j)
            if (!crossing(best[i], best[j]))
                throw Error(ErrorCode::BAD_INPUT, "internal: crossing clique invalid");
    return {DilworthTriple::Kind::CROSSING_CLIQUE, best};
}

namespace {

Curve oriented_left_to_right(const Curve& c) {
    if (c.front().x <= c.back().x) return c;
    Curve r = c;
    std::reverse(r.waypoints.begin(), r.waypoints.end());
    return r;
}

}  // namespace

std::vector<int> prune_incomparability(const std::vector<std::pair<int, Curve>>& bundle,
                                       Side side, const Rat& line_x, int k) {
    if (k < 2) throw Error(ErrorCode::BAD_INPUT, "k must be >= 2");
    const int m = static_cast<int>(bundle.size());
    if (m == 0) return {};

    std::vector<Rat> y_at_line;
    for (const auto& [id, curve] : bundle) {
        auto pt = crossing_point_on_line(oriented_left_to_right(curve), line_x);
        if (!pt) throw Error(ErrorCode::NOT_CROSSING, "bundle edge does not meet the line");
        y_at_line.push_back(pt->y);
    }

    // side-crossing graph: adjacency iff a proper crossing on the stated side
    std::vector<std::vector<char>> crosses(static_cast<size_t>(m),
                                           std::vector<char>(static_cast<size_t>(m), 0));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (const auto& r : crossings(bundle[static_cast<size_t>(i)].second,
                                           bundle[static_cast<size_t>(j)].second)) {
                if (r.kind != CrossingKind::PROPER_CROSSING) continue;
                bool on_side = (side == Side::LEFT_OF_L) ? (r.point.x < line_x)
                                                         : (r.point.x > line_x);
                if (on_side) {
                    crosses[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
                    crosses[static_cast<size_t>(j)][static_cast<size_t>(i)] = 1;
                }
            }
        }
    }

    // Non-crossing pairs are comparable in the "below on this side" order;
    // the arc machinery applies with rank = y-order and x = y height, making
    // PREC1 exactly that order.
    std::vector<int> y_order(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) y_order[static_cast<size_t>(i)] = i;
    std::sort(y_order.begin(), y_order.end(),
              [&](int a, int b) { return y_at_line[static_cast<size_t>(a)] < y_at_line[static_cast<size_t>(b)]; });

    std::vector<ArcElement> elems;
    std::set<std::pair<int, int>> crossing_pairs;
    for (int r = 0; r < m; ++r)
        elems.push_back({y_order[static_cast<size_t>(r)], r, Rat(r)});
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (crosses[static_cast<size_t>(i)][static_cast<size_t>(j)])
                crossing_pairs.insert({i, j});

    ArcPoset order = ArcPoset::build(elems, OrderKind::PREC1, crossing_pairs);

    // hypothesis check: a k-antichain of the order is k pairwise side-crossing
    // edges (Dilworth: antichain max == chain cover size)
    if (static_cast<int>(chain_cover(order).size()) >= k)
        throw Error(ErrorCode::HYPOTHESIS_VIOLATED,
                    "k pairwise crossing edges on the stated side");

    std::vector<ArcElement> sorted = elems;
    std::sort(sorted.begin(), sorted.end(),
              [](const ArcElement& a, const ArcElement& b) { return a.rank < b.rank; });
    std::vector<int> best = longest_chain(sorted, order);

    // direct geometric recheck of the retained set
    for (size_t i = 0; i < best.size(); ++i)
        for (size_t j = i + 1; j < best.size(); ++j)
            if (crosses[static_cast<size_t>(best[i])][static_cast<size_t>(best[j])])
                throw Error(ErrorCode::BAD_INPUT, "internal: retained pair crosses on side");
    if (static_cast<int>(best.size()) * (k - 1) < m)
        throw Error(ErrorCode::BAD_INPUT, "internal: retained set below m/(k-1)");

    std::vector<int> ids;
    for (int idx : best) ids.push_back(bundle[static_cast<size_t>(idx)].first);
    return ids;
}

std::set<std::pair<int, int>> intersecting_pairs(const std::vector<Curve>& curves) {
    std::set<std::pair<int, int>> out;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j)
            if (!crossings(curves[i], curves[j]).empty())
                out.insert({static_cast<int>(i), static_cast<int>(j)});
    return out;
}

namespace {

std::vector<std::vector<int>> components(const std::vector<int>& nodes,
                                         const std::set<std::pair<int, int>>& adj) {
    std::map<int, std::vector<int>> nbrs;
    for (auto [a, b] : adj) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    std::set<int> in(nodes.begin(), nodes.end());
    std::set<int> seen;
    std::vector<std::vector<int>> comps;
    for (int start : nodes) {
        if (seen.count(start)) continue;
        std::vector<int> comp, stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : nbrs[v])
                if (in.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Greedy bin packing of component sizes into two halves; success iff both
// stay within `cap`.
bool pack_two_bins(const std::vector<std::vector<int>>& comps, int cap,
                   std::vector<int>& bin1, std::vector<int>& bin2) {
    std::vector<size_t> order(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return comps[a].size() > comps[b].size(); });
    bin1.clear();
    bin2.clear();
    for (size_t i : order) {
        auto& target = bin1.size() <= bin2.size() ? bin1 : bin2;
        target.insert(target.end(), comps[i].begin(), comps[i].end());
    }
    return static_cast<int>(bin1.size()) <= cap && static_cast<int>(bin2.size()) <= cap;
}

// Planarized arrangement of a curve subset: nodes are endpoints and
// intersection points, arcs join consecutive events along each curve.
struct Arrangement {
    std::map<Point, int> node_of;
    std::vector<std::vector<int>> adj;        // node -> neighbor nodes
    std::vector<std::vector<int>> curves_at;  // node -> curve indices through it

    int node(const Point& p) {
        auto [it, inserted] = node_of.emplace(p, static_cast<int>(node_of.size()));
        if (inserted) {
            adj.emplace_back();
            curves_at.emplace_back();
        }
        return it->second;
    }
};

// Parameter of a point along a polyline, for ordering events.
std::pair<int, Rat> curve_param(const Curve& c, const Point& p) {
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
    throw Error(ErrorCode::BAD_INPUT, "internal: event point not on curve");
}

Arrangement build_arrangement(const std::vector<Curve>& curves, const std::vector<int>& subset) {
    Arrangement arr;
    std::map<int, std::vector<Point>> events;
    for (int ci : subset) {
        events[ci].push_back(curves[static_cast<size_t>(ci)].front());
        events[ci].push_back(curves[static_cast<size_t>(ci)].back());
    }
    for (size_t a = 0; a < subset.size(); ++a) {
        for (size_t b = a + 1; b < subset.size(); ++b) {
            for (const auto& r : crossings(curves[static_cast<size_t>(subset[a])],
                                           curves[static_cast<size_t>(subset[b])])) {
                events[subset[a]].push_back(r.point);
                events[subset[b]].push_back(r.point);
            }
        }
    }
    for (int ci : subset) {
        auto& ev = events[ci];
        const Curve& c = curves[static_cast<size_t>(ci)];
        std::sort(ev.begin(), ev.end());
        ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
        std::sort(ev.begin(), ev.end(), [&](const Point& p, const Point& q) {
            return curve_param(c, p) < curve_param(c, q);
        });
        int prev = -1;
        for (const Point& p : ev) {
            int n = arr.node(p);
            arr.curves_at[static_cast<size_t>(n)].push_back(ci);
            if (prev >= 0 && prev != n) {
                arr.adj[static_cast<size_t>(prev)].push_back(n);
                arr.adj[static_cast<size_t>(n)].push_back(prev);
            }
            prev = n;
        }
    }
    return arr;
}

}  // namespace

SeparatorResult curve_separator(const std::vector<Curve>& curves) {
    SeparatorResult res;
    const int m = static_cast<int>(curves.size());
    long long x = 0;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j)
            x += static_cast<long long>(crossings(curves[i], curves[j]).size());
    res.intersection_count_x = x;
    if (m == 0) return res;

    auto adj = intersecting_pairs(curves);
    const int cap = (2 * m + 2) / 3;  // ceil(2m/3)

    std::vector<int> remaining(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) remaining[static_cast<size_t>(i)] = i;
    std::set<int> v0;

    while (true) {
        auto comps = components(remaining, adj);
        std::vector<int> bin1, bin2;
        if (pack_two_bins(comps, cap, bin1, bin2)) {
            res.v0.assign(v0.begin(), v0.end());
            res.v1 = std::move(bin1);
            res.v2 = std::move(bin2);
            std::sort(res.v1.begin(), res.v1.end());
            std::sort(res.v2.begin(), res.v2.end());
            return res;
        }
        // cut the biggest component along a BFS level of its arrangement
        auto big = std::max_element(comps.begin(), comps.end(),
                                    [](const auto& a, const auto& b) { return a.size() < b.size(); });
        Arrangement arr = build_arrangement(curves, *big);
        const int nn = static_cast<int>(arr.adj.size());
        std::vector<int> level(static_cast<size_t>(nn), -1);
        std::vector<int> queue{0};
        level[0] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : arr.adj[static_cast<size_t>(v)])
                if (level[static_cast<size_t>(w)] < 0) {
                    level[static_cast<size_t>(w)] = level[static_cast<size_t>(v)] + 1;
                    queue.push_back(w);
                }
        }
        int max_level = *std::max_element(level.begin(), level.end());

        std::set<int> best_cut;
        size_t best_worst = big->size() + 1;
        for (int l = 0; l <= max_level; ++l) {
            std::set<int> cut;
            for (int n = 0; n < nn; ++n)
                if (level[static_cast<size_t>(n)] == l)
                    for (int ci : arr.curves_at[static_cast<size_t>(n)]) cut.insert(ci);
            std::vector<int> rest;
            for (int ci : *big)
                if (!cut.count(ci)) rest.push_back(ci);
            size_t worst = 0;
            for (const auto& c : components(rest, adj)) worst = std::max(worst, c.size());
            if (worst < best_worst || (worst == best_worst && cut.size() < best_cut.size())) {
                best_worst = worst;
                best_cut = cut;
            }
        }
        if (best_cut.empty()) best_cut.insert(big->front());  // defensive progress
        for (int ci : best_cut) v0.insert(ci);
        std::vector<int> next_remaining;
        for (int ci : remaining)
            if (!v0.count(ci)) next_remaining.push_back(ci);
        remaining = std::move(next_remaining);
    }
}

namespace {

struct Decomposer {
    const std::vector<Curve>& curves;
    const std::set<std::pair<int, int>>& adj;
    int t;
    double c;

    bool intersects(int a, int b) const {
        return adj.count({std::min(a, b), std::max(a, b)}) > 0;
    }

    Decomposition run(const std::vector<int>& subset) {
        Decomposition d;
        if (subset.empty()) return d;

        auto comps = components(subset, adj);
        bool all_dominated = true;
        std::vector<Decomposition::Part> comp_parts;
        for (const auto& comp : comps) {
            int dom = -1;
            for (int cand : comp) {
                bool universal = true;
                for (int other : comp)
                    if (other != cand && !intersects(cand, other)) { universal = false; break; }
                if (universal) { dom = cand; break; }
            }
            if (dom < 0) { all_dominated = false; break; }
            comp_parts.push_back({comp, dom});
        }
        if (all_dominated) {
            d.parts = std::move(comp_parts);
            return d;
        }

        const int m = static_cast<int>(subset.size());
        long long x = 0;
        for (size_t i = 0; i < subset.size(); ++i)
            for (size_t j = i + 1; j < subset.size(); ++j)
                if (intersects(subset[i], subset[j])) ++x;
        double potential = c * m / (t * std::log2(static_cast<double>(m))) +
                           static_cast<double>(x) / m;

        // star of a maximum-degree curve
        int best_deg = -1, best_c = subset.front();
        for (int cand : subset) {
            int deg = 0;
            for (int other : subset)
                if (other != cand && intersects(cand, other)) ++deg;
            if (deg > best_deg) { best_deg = deg; best_c = cand; }
        }
        if (best_deg + 1 >= potential) {
            Decomposition::Part star;
            star.dominating = best_c;
            star.members.push_back(best_c);
            for (int other : subset)
                if (other != best_c && intersects(best_c, other)) star.members.push_back(other);
            std::set<int> in_star(star.members.begin(), star.members.end());
            for (int cand : subset)
                if (!in_star.count(cand)) d.leftover.push_back(cand);
            d.parts.push_back(std::move(star));
            return d;
        }

        std::vector<Curve> sub_curves;
        for (int ci : subset) sub_curves.push_back(curves[static_cast<size_t>(ci)]);
        SeparatorResult sep = curve_separator(sub_curves);
        auto to_global = [&](const std::vector<int>& local) {
            std::vector<int> out;
            for (int li : local) out.push_back(subset[static_cast<size_t>(li)]);
            return out;
        };
        Decomposition d1 = run(to_global(sep.v1));
        Decomposition d2 = run(to_global(sep.v2));
        d.parts = std::move(d1.parts);
        d.parts.insert(d.parts.end(), d2.parts.begin(), d2.parts.end());
        d.leftover = to_global(sep.v0);
        d.leftover.insert(d.leftover.end(), d1.leftover.begin(), d1.leftover.end());
        d.leftover.insert(d.leftover.end(), d2.leftover.begin(), d2.leftover.end());
        return d;
    }
};

}  // namespace

Decomposition decompose(const std::vector<Curve>& curves, int t_max_pair_intersections,
                        double c1) {
    if (t_max_pair_intersections < 1)
        throw Error(ErrorCode::BAD_INPUT, "t must be >= 1");
    auto adj = intersecting_pairs(curves);
    for (auto [a, b] : adj) {
        if (static_cast<int>(crossings(curves[static_cast<size_t>(a)],
                                       curves[static_cast<size_t>(b)]).size()) >
            t_max_pair_intersections)
            throw Error(ErrorCode::PRECONDITION, "curve pair exceeds t intersections");
    }
    Decomposer dec{curves, adj, t_max_pair_intersections, 1.0 / (576.0 * c1 * c1)};
    std::vector<int> all(curves.size());
    for (size_t i = 0; i < curves.size(); ++i) all[i] = static_cast<int>(i);
    return dec.run(all);
}

}  // namespace qp
