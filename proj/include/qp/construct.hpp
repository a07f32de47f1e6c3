#pragma once

#include <optional>
#include <vector>

#include "qp/sequence.hpp"
#include "qp/topograph.hpp"

namespace qp {

enum class Provenance { ALL_CROSSING_EDGE, VERTICAL_LINE };

/// Two vertex-id sequences read off a drawing: s1[i]/s2[i] name endpoints of
/// the edge order[i].
struct SequencePair {
    std::vector<int> s1, s2;     // vertex ids
    std::vector<int> order;      // edge ids in traversal order
    Provenance provenance;
    int source_edge = -1;        // ALL_CROSSING_EDGE
    Rat line_x = 0;              // VERTICAL_LINE

    /// Dense-alphabet view of a vertex-id sequence (first-occurrence coding).
    static Sequence to_sequence(const std::vector<int>& vertex_ids);
};

/// Walk along edge e from u to v; at the i-th crossing with another edge,
/// s1 records the endpoint reached by turning left, s2 the endpoint reached
/// by turning right. Edges sharing an endpoint with e are skipped.
SequencePair build_from_crossing_edge(const TopoGraph& g, int e_id);

struct MedianPartition {
    Rat line_x;
    std::vector<int> v1, v2;            // vertex ids left / right of the line
    std::vector<int> e1, e2, e_prime;   // edge ids: both-left, both-right, spanning
};

/// Vertical line strictly between the floor(n/2)-th and next smallest vertex
/// x-coordinates; edges partitioned by endpoint side.
MedianPartition median_line_partition(const TopoGraph& g);

/// Order the given edges bottom-to-top by their crossing point with the
/// vertical line; s1 takes left endpoints, s2 right endpoints.
SequencePair build_from_vertical_line(const TopoGraph& g, const Rat& line_x,
                                      const std::vector<int>& edge_ids);

struct PipelineReport {
    MedianPartition partition;
    int spanning_count = 0;
    int after_left_prune = 0;
    int retained_count = 0;           // after both pruning passes
    SequencePair pair;
    std::optional<PatternWitness> witness_s1, witness_s2;
    std::optional<std::vector<int>> crossing_clique;  // edge ids, when a witness appeared
    bool failure = false;             // witness found but no k pairwise crossing edges
};

/// Median line, per-bundle incomparability pruning on both sides, sequence
/// pair from the survivors, and the up-down-up(k^3+2) scan; any witness must
/// be matched by k pairwise crossing edges in g.
PipelineReport xmono_pipeline(const TopoGraph& g, int k);

}  // namespace qp
