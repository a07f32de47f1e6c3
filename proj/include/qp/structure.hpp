#pragma once

#include <set>
#include <utility>
#include <vector>

#include "qp/geometry.hpp"

namespace qp {

/// One arc in the vertical-line posets: its id, its index in the crossing
/// order along the line, and the x-coordinate of its far endpoint.
struct ArcElement {
    int id;
    int rank;
    Rat x;
};

enum class OrderKind { PREC1, PREC2 };

/// Strict partial order on arcs. PREC1: i < j, x_i < x_j and the arcs are
/// disjoint; PREC2: i < j, x_i > x_j and the arcs are disjoint.
struct ArcPoset {
    std::vector<ArcElement> elements;
    OrderKind order_kind;
    std::set<std::pair<int, int>> comparability;  // ordered (smaller-id, larger-id) by relation

    bool less(int a, int b) const { return comparability.count({a, b}) > 0; }

    /// Build from the defining relation; `crossing_pairs` lists unordered id
    /// pairs of arcs that intersect.
    static ArcPoset build(const std::vector<ArcElement>& elements, OrderKind kind,
                          const std::set<std::pair<int, int>>& crossing_pairs);
};

/// Minimum chain cover (lists of element ids, each totally ordered), via the
/// standard reduction to maximum bipartite matching. By Dilworth's theorem
/// the number of chains equals the maximum antichain size. Throws
/// NOT_A_POSET when the comparability relation is not transitive/irreflexive.
std::vector<std::vector<int>> chain_cover(const ArcPoset& p);

struct DilworthTriple {
    enum class Kind { CROSSING_CLIQUE, CHAIN1, CHAIN2 } kind;
    std::vector<int> ids;
};

/// k arcs that are pairwise crossing, or a k-chain in PREC1, or a k-chain in
/// PREC2. Requires that arcs incomparable in both orders cross (throws
/// PRECONDITION otherwise); with |arcs| >= (k-1)^3 + 1 one outcome exists by
/// double counting over height classes.
DilworthTriple dilworth_triple(const std::vector<ArcElement>& arcs,
                               const std::set<std::pair<int, int>>& crossing_pairs, int k);

enum class Side { LEFT_OF_L, RIGHT_OF_L };

/// Edges of a one-vertex bundle, pruned to a maximum subset that is pairwise
/// non-crossing on the given side of the vertical line. Returns ids; the
/// retained set has size >= ceil(m/(k-1)) whenever no k bundle edges
/// pairwise cross on that side (otherwise HYPOTHESIS_VIOLATED).
std::vector<int> prune_incomparability(const std::vector<std::pair<int, Curve>>& bundle,
                                       Side side, const Rat& line_x, int k);

/// Separator of a curve collection's intersection graph: V0/V1/V2 partition
/// curve indices, |V1|,|V2| <= ceil(2m/3), and no V1 curve intersects a V2
/// curve. Found by planarizing the arrangement and cutting BFS levels.
struct SeparatorResult {
    std::vector<int> v0, v1, v2;  // indices into the input collection
    long long intersection_count_x = 0;
};

SeparatorResult curve_separator(const std::vector<Curve>& curves);

/// Partition of a subcollection into parts, each dominated by one curve that
/// intersects every other member; distinct parts are disjoint.
struct Decomposition {
    struct Part {
        std::vector<int> members;  // indices into the input collection
        int dominating;
    };
    std::vector<Part> parts;
    std::vector<int> leftover;

    int covered_size() const {
        int s = 0;
        for (const auto& p : parts) s += static_cast<int>(p.members.size());
        return s;
    }
};

/// Decomposable-subcollection recursion: if the max-degree star reaches the
/// potential d(m,x,t) = c*m/(t*log2 m) + x/m take it, else separate and
/// recurse on both sides. c = 1/(576*c1^2).
Decomposition decompose(const std::vector<Curve>& curves, int t_max_pair_intersections,
                        double c1 = 4.0);

/// Unordered intersecting pairs of a curve collection (indices).
std::set<std::pair<int, int>> intersecting_pairs(const std::vector<Curve>& curves);

}  // namespace qp
