#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qp/geometry.hpp"

namespace qp {

struct Vertex {
    int id;
    Point p;
};

struct TopoEdge {
    int id;
    int u, v;
    Curve curve;  // drawn from u's point to v's point
};

/// A graph drawn in the plane: vertices as points, edges as polyline curves.
struct TopoGraph {
    std::vector<Vertex> vertices;
    std::vector<TopoEdge> edges;
    bool simple_declared = false;
    bool x_monotone_declared = false;

    const Vertex* vertex(int id) const;
    const TopoEdge* edge(int id) const;
};

enum class ViolationKind {
    BAD_REFERENCE,
    BAD_CURVE,
    ENDPOINT_MISMATCH,
    VERTEX_ON_EDGE,
    TANGENCY,
    OVERLAP,
    SIMPLICITY,
    NOT_X_MONOTONE,
    DUPLICATE_VERTEX,
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::vector<int> edge_ids;
    int vertex_id = -1;
    std::string detail;
};

/// Checks every drawing-model invariant; an empty result means the drawing
/// is a valid topological graph under its declared flags.
std::vector<Violation> validate(const TopoGraph& g);

/// Derived graph on edge ids: adjacency iff the two edges properly cross
/// and share no endpoint.
struct CrossingGraph {
    std::vector<int> nodes;
    std::set<std::pair<int, int>> adjacency;  // normalized (min,max) pairs
    std::map<std::pair<int, int>, int> crossing_counts;

    bool adjacent(int a, int b) const {
        return adjacency.count({std::min(a, b), std::max(a, b)}) > 0;
    }
};

CrossingGraph crossing_graph(const TopoGraph& g);

/// A clique of size k in a crossing graph, found by branch and bound with a
/// greedy-coloring bound, or nullopt.
std::optional<std::vector<int>> find_clique(const CrossingGraph& cg, int k);

/// k edges of g that pairwise properly cross, re-verified geometrically
/// before returning.
std::optional<std::vector<int>> find_pairwise_crossing(const TopoGraph& g, int k);

/// Smallest k >= 2 such that g has no k pairwise crossing edges.
int quasi_planarity_order(const TopoGraph& g);

}  // namespace qp
