// Shared hand-built drawings used by unit and acceptance tests.
#pragma once

#include "qp/topograph.hpp"

namespace fixtures {

inline qp::Point pt(long long x, long long y) {
    return qp::Point{qp::Rat(x), qp::Rat(y)};
}

// A spine edge e = (u,v) drawn on the x-axis, crossed by five edges whose
// left/right walk endpoints spell out the sequences
//   S1 = v1, v3, v4, v3, v2   and   S2 = v2, v2, v1, v5, v5.
// Edges 3 and 5 wrap around the spine's endpoints, so their "left turn"
// branch ends below the axis — the walk, not the endpoint side, decides.
// Vertex ids: u=100, v=101, v1..v5 = 1..5; spine edge id 0, others 1..5.
inline qp::TopoGraph figure_drawing() {
    using qp::Curve;
    qp::TopoGraph g;
    g.simple_declared = true;
    g.vertices = {
        {100, pt(0, 0)}, {101, pt(24, 0)}, {1, pt(3, 4)},   {2, pt(4, -3)},
        {3, pt(10, 7)},  {4, pt(9, 5)},    {5, pt(16, -5)},
    };
    g.edges = {
        {0, 100, 101, Curve({pt(0, 0), pt(24, 0)})},
        {1, 1, 2, Curve({pt(3, 4), pt(4, -3)})},
        {2, 3, 2, Curve({pt(10, 7), pt(4, -3)})},
        {3, 4, 1,
         Curve({pt(9, 5), pt(11, -4), pt(-1, -4), pt(-1, 3), pt(3, 4)})},
        {4, 3, 5, Curve({pt(10, 7), pt(16, -5)})},
        {5, 2, 5,
         Curve({pt(4, -3), pt(5, -6), pt(25, -6), pt(25, 2), pt(19, 2),
                pt(17, -1), pt(16, -5)})},
    };
    return g;
}

}  // namespace fixtures
