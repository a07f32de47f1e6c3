#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qp/bounds.hpp"
#include "qp/construct.hpp"
#include "qp/topograph.hpp"

namespace qp {

/// Deterministic instance generator description. THINNED wraps a base spec
/// and greedily deletes edges until no k pairwise crossing edges remain.
struct GeneratorSpec {
    enum class Family { CONVEX_COMPLETE, RANDOM_SEGMENTS, RANDOM_XMONOTONE, THINNED };
    Family family;
    int n = 0;
    int edge_count = 0;                    // random families
    unsigned long long seed = 0;
    int thin_k = 0;                        // THINNED
    std::shared_ptr<GeneratorSpec> base;   // THINNED
    int general_position_retries = 200;

    static GeneratorSpec convex_complete(int n, unsigned long long seed = 0);
    static GeneratorSpec random_segments(int n, int edges, unsigned long long seed);
    static GeneratorSpec random_xmonotone(int n, int edges, unsigned long long seed);
    static GeneratorSpec thinned(GeneratorSpec base, int k);
};

/// Deterministic under (spec, seed); output always passes validate().
TopoGraph generate(const GeneratorSpec& spec);

struct ExperimentReport {
    std::string instance_id;
    int n = 0, edge_count = 0, k = 0, order = 0;

    bool spine_found = false;        // an edge crossed by every independent edge
    bool up_check_vacuous = true;    // pattern length exceeds sequence length
    std::optional<PatternWitness> spine_witness;
    bool xmono_checked = false;
    std::optional<PipelineReport> pipeline;
    std::string pipeline_error;

    bool failure = false;            // a lemma contrapositive failed to certify
    std::vector<BoundReport> bounds;

    int decomposition_size = 0;
    long long separator_v0 = 0;
    long long intersection_count = 0;
    double separator_ratio = 0.0;    // |V0| / sqrt(x), 0 when x = 0

    static std::string csv_header();
    std::string csv_row() const;
};

/// Quasi-planarity order, the applicable sequence construction with its
/// pattern scans, bound evaluations at the observed edge count, and
/// separator/decomposition metrics. Failures land in the report.
ExperimentReport verify_instance(const TopoGraph& g, int k,
                                 const std::string& instance_id = "");

}  // namespace qp
