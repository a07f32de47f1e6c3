#include <doctest.h>

#include <functional>

#include "qp/error.hpp"
#include "qp/geometry.hpp"

using namespace qp;

namespace {

Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }
Curve seg(Point a, Point b) { return Curve({a, b}); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::logic_error("expected a domain error");
}

}  // namespace

TEST_SUITE("test_geometry") {

TEST_CASE("orientation signs") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, -1)) == -1);
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);
}

TEST_CASE("curve validity") {
    CHECK(seg(pt(0, 0), pt(1, 1)).valid());
    CHECK_FALSE(Curve({pt(0, 0)}).valid());
    CHECK_FALSE(Curve({pt(0, 0), pt(0, 0)}).valid());
    CHECK_FALSE(Curve({pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)}).valid());  // self-crossing
    CHECK(Curve({pt(0, 0), pt(1, 3), pt(4, 3)}, true).valid());
    CHECK_FALSE(Curve({pt(0, 0), pt(1, 3), pt(1, 4)}, true).valid());  // not increasing x
}

TEST_CASE("X configuration crosses properly") {
    auto recs = crossings(seg(pt(0, 0), pt(2, 2)), seg(pt(0, 2), pt(2, 0)));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].kind == CrossingKind::PROPER_CROSSING);
    CHECK(recs[0].point == pt(1, 1));
}

TEST_CASE("shared endpoint is classified, not an error") {
    auto recs = crossings(seg(pt(0, 0), pt(1, 0)), seg(pt(0, 0), pt(0, 1)));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].kind == CrossingKind::SHARED_ENDPOINT);
}

TEST_CASE("apex touch is a tangency") {
    Curve tent({pt(0, 0), pt(1, 1), pt(2, 0)});
    Curve roof = seg(pt(0, 1), pt(2, 1));
    CHECK(code_of([&] { crossings(tent, roof); }) == ErrorCode::TANGENCY);
}

TEST_CASE("interior endpoint rest is a tangency") {
    CHECK(code_of([&] { crossings(seg(pt(0, 0), pt(2, 0)), seg(pt(1, 0), pt(1, 2))); }) ==
          ErrorCode::TANGENCY);
}

TEST_CASE("collinear sharing is an overlap") {
    CHECK(code_of([&] { crossings(seg(pt(0, 0), pt(2, 0)), seg(pt(1, 0), pt(3, 0))); }) ==
          ErrorCode::OVERLAP);
}

TEST_CASE("polyline waypoint crossing exchanges sides") {
    // the second curve bends exactly at the crossing point but still crosses
    Curve bent({pt(1, -1), pt(1, 0), pt(2, 1)});
    auto recs = crossings(seg(pt(0, 0), pt(3, 0)), bent);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].kind == CrossingKind::PROPER_CROSSING);
    CHECK(recs[0].point == pt(1, 0));
}

TEST_CASE("polyline waypoint touch without side exchange is a tangency") {
    Curve vee({pt(0, 1), pt(1, 0), pt(2, 1)});
    CHECK(code_of([&] { crossings(seg(pt(0, 0), pt(3, 0)), vee); }) == ErrorCode::TANGENCY);
}

TEST_CASE("crossings is symmetric") {
    Curve a({pt(0, 0), pt(2, 2), pt(4, 0)});
    Curve b = seg(pt(0, 1), pt(4, 1));
    auto ab = crossings(a, b);
    auto ba = crossings(b, a);
    REQUIRE(ab.size() == ba.size());
    for (size_t i = 0; i < ab.size(); ++i) CHECK(ab[i].point == ba[i].point);
}

TEST_CASE("simplicity predicate") {
    CHECK(validate_simple_pair(seg(pt(0, 0), pt(2, 2)), seg(pt(0, 2), pt(2, 0))));
    CHECK(validate_simple_pair(seg(pt(0, 0), pt(1, 0)), seg(pt(5, 5), pt(6, 6))));
    // S-shaped polyline over a horizontal segment: two crossings
    Curve s_shape({pt(0, 1), pt(1, -1), pt(2, 1)});
    CHECK_FALSE(validate_simple_pair(s_shape, seg(pt(-1, 0), pt(3, 0))));
}

TEST_CASE("vertical line crossing point") {
    auto p = crossing_point_on_line(seg(pt(0, 0), pt(2, 2)), Rat(1));
    REQUIRE(p);
    CHECK(*p == pt(1, 1));
    CHECK_FALSE(crossing_point_on_line(seg(pt(0, 0), pt(2, 2)), Rat(3)).has_value());

    Curve poly({pt(0, 0), pt(1, 3), Point{Rat(4), Rat(7, 2)}});
    auto q = crossing_point_on_line(poly, Rat(2));
    REQUIRE(q);
    CHECK(q->x == Rat(2));
    CHECK(q->y == Rat(3) + Rat(1, 6));

    CHECK(code_of([&] { crossing_point_on_line(poly, Rat(1)); }) == ErrorCode::DEGENERATE);
}

}  // TEST_SUITE
