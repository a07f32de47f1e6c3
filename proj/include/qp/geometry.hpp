#pragma once

#include <optional>
#include <vector>

#include "qp/numeric.hpp"

namespace qp {

struct Point {
    Rat x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

/// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn.
int orientation(const Point& a, const Point& b, const Point& c);

/// Polyline curve with exact rational waypoints. The x_monotone flag is a
/// declared property: waypoint x-coordinates strictly increasing.
struct Curve {
    std::vector<Point> waypoints;
    bool x_monotone = false;

    Curve() = default;
    Curve(std::vector<Point> wps, bool xmono = false);

    const Point& front() const { return waypoints.front(); }
    const Point& back() const { return waypoints.back(); }
    int segment_count() const { return static_cast<int>(waypoints.size()) - 1; }

    /// Structural validity: >= 2 waypoints, consecutive waypoints distinct,
    /// no self-intersection, monotone x if declared.
    bool valid(std::string* why = nullptr) const;

    bool contains_point(const Point& p) const;
};

enum class CrossingKind { PROPER_CROSSING, SHARED_ENDPOINT };

struct CrossingRecord {
    Point point;
    CrossingKind kind;
};

/// All intersection points of two curves, classified. Exact arithmetic;
/// proper crossings are certified by a local side-exchange (cyclic
/// alternation) test. Throws TANGENCY for an interior touch without
/// crossing and OVERLAP for a shared 1-dimensional piece.
std::vector<CrossingRecord> crossings(const Curve& a, const Curve& b);

/// True iff the two curves intersect at most once in total.
bool validate_simple_pair(const Curve& a, const Curve& b);

/// Unique intersection of an x-monotone curve with the vertical line
/// x = vertical_x, or nullopt when the x-range excludes it. Throws
/// DEGENERATE if a waypoint lies exactly on the line.
std::optional<Point> crossing_point_on_line(const Curve& c, const Rat& vertical_x);

}  // namespace qp
