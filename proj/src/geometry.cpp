#include "qp/geometry.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qp/error.hpp"

namespace qp {

int orientation(const Point& a, const Point& b, const Point& c) {
    Rat cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (cr > 0) return 1;
    if (cr < 0) return -1;
    return 0;
}

namespace {

bool on_segment_collinear(const Point& a, const Point& b, const Point& p) {
    // assumes p collinear with ab
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool point_on_segment(const Point& a, const Point& b, const Point& p) {
    return orientation(a, b, p) == 0 && on_segment_collinear(a, b, p);
}

struct SegHit {
    bool overlap = false;
    std::optional<Point> point;
};

SegHit seg_intersect(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    SegHit hit;
    int o1 = orientation(a1, a2, b1);
    int o2 = orientation(a1, a2, b2);
    int o3 = orientation(b1, b2, a1);
    int o4 = orientation(b1, b2, a2);

    if (o1 == 0 && o2 == 0) {
        // collinear: compare 1-d extents along the dominant axis
        bool use_x = (a1.x != a2.x || b1.x != b2.x);
        auto key = [use_x](const Point& p) { return use_x ? p.x : p.y; };
        Rat alo = std::min(key(a1), key(a2)), ahi = std::max(key(a1), key(a2));
        Rat blo = std::min(key(b1), key(b2)), bhi = std::max(key(b1), key(b2));
        Rat lo = std::max(alo, blo), hi = std::min(ahi, bhi);
        if (lo > hi) return hit;
        if (lo < hi) {
            hit.overlap = true;
            return hit;
        }
        // touch in exactly one point
        for (const Point* p : {&a1, &a2, &b1, &b2}) {
            if (key(*p) == lo) {
                hit.point = *p;
                return hit;
            }
        }
        return hit;
    }

    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        Rat denom = (a2.x - a1.x) * (b2.y - b1.y) - (a2.y - a1.y) * (b2.x - b1.x);
        Rat s = ((b1.x - a1.x) * (b2.y - b1.y) - (b1.y - a1.y) * (b2.x - b1.x)) / denom;
        hit.point = Point{a1.x + s * (a2.x - a1.x), a1.y + s * (a2.y - a1.y)};
        return hit;
    }
    if (o1 == 0 && on_segment_collinear(a1, a2, b1)) hit.point = b1;
    else if (o2 == 0 && on_segment_collinear(a1, a2, b2)) hit.point = b2;
    else if (o3 == 0 && on_segment_collinear(b1, b2, a1)) hit.point = a1;
    else if (o4 == 0 && on_segment_collinear(b1, b2, a2)) hit.point = a2;
    return hit;
}

// Direction rays leaving an interior point of a polyline (one ray when the
// point is a curve endpoint).
std::vector<Point> local_rays(const Curve& c, const Point& p) {
    std::vector<Point> rays;
    const auto& w = c.waypoints;
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] == p) {
            if (k > 0) rays.push_back(Point{w[k - 1].x - p.x, w[k - 1].y - p.y});
            if (k + 1 < w.size()) rays.push_back(Point{w[k + 1].x - p.x, w[k + 1].y - p.y});
            return rays;
        }
    }
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (point_on_segment(w[i], w[i + 1], p)) {
            rays.push_back(Point{w[i].x - p.x, w[i].y - p.y});
            rays.push_back(Point{w[i + 1].x - p.x, w[i + 1].y - p.y});
            return rays;
        }
    }
    return rays;
}

int half_of(const Point& d) {
    return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1;
}

bool angle_less(const Point& u, const Point& v) {
    int hu = half_of(u), hv = half_of(v);
    if (hu != hv) return hu < hv;
    Rat cr = u.x * v.y - u.y * v.x;
    return cr > 0;
}

bool same_direction(const Point& u, const Point& v) {
    return u.x * v.y - u.y * v.x == 0 && u.x * v.x + u.y * v.y > 0;
}

}  // namespace

Curve::Curve(std::vector<Point> wps, bool xmono) : waypoints(std::move(wps)), x_monotone(xmono) {}

bool Curve::valid(std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (waypoints.size() < 2) return fail("fewer than 2 waypoints");
    for (size_t i = 0; i + 1 < waypoints.size(); ++i)
        if (waypoints[i] == waypoints[i + 1]) return fail("consecutive waypoints coincide");
    if (x_monotone) {
        for (size_t i = 0; i + 1 < waypoints.size(); ++i)
            if (!(waypoints[i].x < waypoints[i + 1].x))
                return fail("declared x-monotone but x not strictly increasing");
    }
    const int ns = segment_count();
    for (int i = 0; i < ns; ++i) {
        for (int j = i + 1; j < ns; ++j) {
            SegHit h = seg_intersect(waypoints[static_cast<size_t>(i)], waypoints[static_cast<size_t>(i) + 1],
                                     waypoints[static_cast<size_t>(j)], waypoints[static_cast<size_t>(j) + 1]);
            if (h.overlap) return fail("self-overlapping segments");
            if (!h.point) continue;
            bool closed_joint = (i == 0 && j == ns - 1 && *h.point == waypoints.front() &&
                                 waypoints.front() == waypoints.back());
            if (j == i + 1) {
                if (*h.point != waypoints[static_cast<size_t>(j)]) return fail("self-intersection");
            } else if (!closed_joint) {
                return fail("self-intersection");
            }
        }
    }
    return true;
}

bool Curve::contains_point(const Point& p) const {
    for (size_t i = 0; i + 1 < waypoints.size(); ++i)
        if (point_on_segment(waypoints[i], waypoints[i + 1], p)) return true;
    return false;
}

std::vector<CrossingRecord> crossings(const Curve& a, const Curve& b) {
    std::vector<Point> pts;
    for (size_t i = 0; i + 1 < a.waypoints.size(); ++i) {
        for (size_t j = 0; j + 1 < b.waypoints.size(); ++j) {
            SegHit h = seg_intersect(a.waypoints[i], a.waypoints[i + 1],
                                     b.waypoints[j], b.waypoints[j + 1]);
            if (h.overlap) throw Error(ErrorCode::OVERLAP, "curves share a 1-dimensional piece");
            if (h.point && std::find(pts.begin(), pts.end(), *h.point) == pts.end())
                pts.push_back(*h.point);
        }
    }

    std::vector<CrossingRecord> out;
    for (const Point& p : pts) {
        bool end_a = (p == a.front() || p == a.back());
        bool end_b = (p == b.front() || p == b.back());
        if (end_a && end_b) {
            out.push_back({p, CrossingKind::SHARED_ENDPOINT});
            continue;
        }
        if (end_a || end_b)
            throw Error(ErrorCode::TANGENCY, "curve endpoint rests on the other curve");
        std::vector<Point> ra = local_rays(a, p), rb = local_rays(b, p);
        if (ra.size() != 2 || rb.size() != 2)
            throw Error(ErrorCode::DEGENERATE, "could not resolve local geometry at intersection");
        for (const Point& u : ra)
            for (const Point& v : rb)
                if (same_direction(u, v))
                    throw Error(ErrorCode::OVERLAP, "curves leave an intersection along the same ray");
        // side-exchange: the four rays must alternate a,b,a,b around p
        struct Labeled { Point d; int owner; };
        std::vector<Labeled> rays = {{ra[0], 0}, {ra[1], 0}, {rb[0], 1}, {rb[1], 1}};
        std::sort(rays.begin(), rays.end(),
                  [](const Labeled& u, const Labeled& v) { return angle_less(u.d, v.d); });
        bool alternate = rays[0].owner != rays[1].owner && rays[1].owner != rays[2].owner &&
                         rays[2].owner != rays[3].owner;
        if (!alternate)
            throw Error(ErrorCode::TANGENCY, "curves touch without exchanging sides");
        out.push_back({p, CrossingKind::PROPER_CROSSING});
    }
    std::sort(out.begin(), out.end(),
              [](const CrossingRecord& u, const CrossingRecord& v) { return u.point < v.point; });
    return out;
}

bool validate_simple_pair(const Curve& a, const Curve& b) {
    return crossings(a, b).size() <= 1;
}

std::optional<Point> crossing_point_on_line(const Curve& c, const Rat& vertical_x) {
    const auto& w = c.waypoints;
    bool increasing = true;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (!(w[i].x < w[i + 1].x)) { increasing = false; break; }
    if (!increasing)
        throw Error(ErrorCode::BAD_INPUT, "curve is not x-monotone");
    if (vertical_x < w.front().x || vertical_x > w.back().x) return std::nullopt;
    for (const Point& p : w)
        if (p.x == vertical_x)
            throw Error(ErrorCode::DEGENERATE, "waypoint lies exactly on the query line");
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].x < vertical_x && vertical_x < w[i + 1].x) {
            Rat s = (vertical_x - w[i].x) / (w[i + 1].x - w[i].x);
            return Point{vertical_x, w[i].y + s * (w[i + 1].y - w[i].y)};
        }
    }
    return std::nullopt;
}

}  // namespace qp
