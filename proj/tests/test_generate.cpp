#include <doctest.h>

#include "qp/generate.hpp"
#include "qp/io.hpp"

using namespace qp;

TEST_SUITE("test_generate") {

TEST_CASE("convex complete K4") {
    TopoGraph g = generate(GeneratorSpec::convex_complete(4, 1));
    CHECK(g.vertices.size() == 4);
    CHECK(g.edges.size() == 6);
    CHECK(validate(g).empty());
    CHECK(crossing_graph(g).adjacency.size() == 1);
    CHECK(quasi_planarity_order(g) == 3);
}

TEST_CASE("thinning removes every 3-clique of K8") {
    auto spec = GeneratorSpec::thinned(GeneratorSpec::convex_complete(8, 2), 3);
    TopoGraph g = generate(spec);
    CHECK(validate(g).empty());
    CHECK_FALSE(find_pairwise_crossing(g, 3));
    CHECK(quasi_planarity_order(g) <= 3);
    CHECK(g.edges.size() < 28);  // K8 has 3-cliques, so something was deleted
}

TEST_CASE("generators are deterministic") {
    auto a = topograph_to_json(generate(GeneratorSpec::random_segments(20, 40, 1))).dump();
    auto b = topograph_to_json(generate(GeneratorSpec::random_segments(20, 40, 1))).dump();
    CHECK(a == b);
    auto c = topograph_to_json(generate(GeneratorSpec::random_segments(20, 40, 2))).dump();
    CHECK(a != c);
}

TEST_CASE("random instances validate clean") {
    for (unsigned long long seed = 1; seed <= 5; ++seed) {
        TopoGraph g = generate(GeneratorSpec::random_segments(15, 25, seed));
        CHECK(validate(g).empty());
        TopoGraph h = generate(GeneratorSpec::random_xmonotone(12, 20, seed));
        CHECK(validate(h).empty());
        CHECK(h.x_monotone_declared);
        for (const auto& e : h.edges)
            CHECK(g.vertex(e.u) != nullptr);
    }
}

TEST_CASE("json round trip preserves the drawing") {
    TopoGraph g = generate(GeneratorSpec::random_segments(10, 15, 7));
    TopoGraph h = topograph_from_json(topograph_to_json(g));
    CHECK(topograph_to_json(h) == topograph_to_json(g));
}

TEST_CASE("verify on a planar instance, k=2") {
    auto spec = GeneratorSpec::thinned(GeneratorSpec::random_segments(10, 14, 3), 2);
    TopoGraph g = generate(spec);
    auto rep = verify_instance(g, 2, "planar");
    CHECK(rep.order == 2);
    CHECK_FALSE(rep.failure);
    bool planar_checked = false;
    for (const auto& b : rep.bounds)
        if (b.name == BoundName::PLANAR) {
            planar_checked = true;
            CHECK_FALSE(b.exceeded.value_or(true));  // |E| <= 3n-6
        }
    CHECK(planar_checked);
}

TEST_CASE("verify on convex K6, k=4") {
    TopoGraph g = generate(GeneratorSpec::convex_complete(6, 1));
    auto rep = verify_instance(g, 4, "k6");
    CHECK(rep.order == 4);
    bool thm1 = false;
    for (const auto& b : rep.bounds)
        if (b.name == BoundName::THM1) {
            thm1 = true;
            CHECK(b.log2_value >= log2_bf(BigInt(15)));
        }
    CHECK(thm1);
    CHECK(rep.csv_row().find("k6") == 0);
}

TEST_CASE("verify runs the pipeline on x-monotone instances") {
    auto spec = GeneratorSpec::thinned(GeneratorSpec::random_xmonotone(12, 22, 5), 3);
    TopoGraph g = generate(spec);
    auto rep = verify_instance(g, 3, "xm");
    CHECK(rep.xmono_checked);
    if (rep.pipeline) {
        CHECK_FALSE(rep.pipeline->witness_s1);
        CHECK_FALSE(rep.pipeline->witness_s2);
    }
    CHECK_FALSE(rep.failure);
}

}  // TEST_SUITE
