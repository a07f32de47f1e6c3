#include "qp/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qp/error.hpp"
#include "qp/structure.hpp"

namespace qp {

GeneratorSpec GeneratorSpec::convex_complete(int n, unsigned long long seed) {
    GeneratorSpec s;
    s.family = Family::CONVEX_COMPLETE;
    s.n = n;
    s.seed = seed;
    return s;
}

GeneratorSpec GeneratorSpec::random_segments(int n, int edges, unsigned long long seed) {
    GeneratorSpec s;
    s.family = Family::RANDOM_SEGMENTS;
    s.n = n;
    s.edge_count = edges;
    s.seed = seed;
    return s;
}

GeneratorSpec GeneratorSpec::random_xmonotone(int n, int edges, unsigned long long seed) {
    GeneratorSpec s = random_segments(n, edges, seed);
    s.family = Family::RANDOM_XMONOTONE;
    return s;
}

GeneratorSpec GeneratorSpec::thinned(GeneratorSpec base, int k) {
    GeneratorSpec s;
    s.family = Family::THINNED;
    s.thin_k = k;
    s.seed = base.seed;
    s.base = std::make_shared<GeneratorSpec>(std::move(base));
    return s;
}

namespace {

bool distinct_x(const std::vector<Vertex>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i].p.x == vs[j].p.x) return false;
    return true;
}

bool clean(const TopoGraph& g) {
    try {
        return distinct_x(g.vertices) && validate(g).empty();
    } catch (const Error&) {
        return false;
    }
}

TopoGraph gen_convex(const GeneratorSpec& spec) {
    if (spec.n < 3) throw Error(ErrorCode::BAD_INPUT, "need n >= 3");
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<long long> jitter(-500, 500);
    constexpr double kRadius = 1e6;
    for (int attempt = 0; attempt < spec.general_position_retries; ++attempt) {
        TopoGraph g;
        g.simple_declared = true;
        for (int i = 0; i < spec.n; ++i) {
            double a = 2.0 * M_PI * i / spec.n;
            long long x = std::llround(kRadius * std::cos(a)) + jitter(rng);
            long long y = std::llround(kRadius * std::sin(a)) + jitter(rng);
            g.vertices.push_back({i, Point{Rat(x), Rat(y)}});
        }
        int eid = 0;
        for (int i = 0; i < spec.n; ++i)
            for (int j = i + 1; j < spec.n; ++j)
                g.edges.push_back({eid++, i, j,
                                   Curve({g.vertices[static_cast<size_t>(i)].p,
                                          g.vertices[static_cast<size_t>(j)].p})});
        if (clean(g)) return g;
    }
    throw Error(ErrorCode::RETRIES_EXHAUSTED, "no general-position convex drawing found");
}

TopoGraph gen_random(const GeneratorSpec& spec, bool xmono) {
    const long long max_edges =
        static_cast<long long>(spec.n) * (spec.n - 1) / 2;
    if (spec.n < 2 || spec.edge_count < 1 || spec.edge_count > max_edges)
        throw Error(ErrorCode::BAD_INPUT, "bad n or edge count");
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<long long> coord(0, 1'000'000);
    for (int attempt = 0; attempt < spec.general_position_retries; ++attempt) {
        TopoGraph g;
        g.simple_declared = true;
        g.x_monotone_declared = xmono;
        for (int i = 0; i < spec.n; ++i)
            g.vertices.push_back({i, Point{Rat(coord(rng)), Rat(coord(rng))}});

        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < spec.n; ++i)
            for (int j = i + 1; j < spec.n; ++j) pairs.push_back({i, j});
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (int e = 0; e < spec.edge_count; ++e) {
            auto [u, v] = pairs[static_cast<size_t>(e)];
            const Point& pu = g.vertices[static_cast<size_t>(u)].p;
            const Point& pv = g.vertices[static_cast<size_t>(v)].p;
            if (xmono && pv.x < pu.x) std::swap(u, v);
            const Point& a = g.vertices[static_cast<size_t>(u)].p;
            const Point& b = g.vertices[static_cast<size_t>(v)].p;
            g.edges.push_back({e, u, v, Curve({a, b}, xmono)});
        }
        if (clean(g)) return g;
    }
    throw Error(ErrorCode::RETRIES_EXHAUSTED, "no general-position drawing found");
}

TopoGraph gen_thinned(const GeneratorSpec& spec) {
    if (!spec.base) throw Error(ErrorCode::BAD_INPUT, "thinned spec without base");
    if (spec.thin_k < 2) throw Error(ErrorCode::BAD_INPUT, "k must be >= 2");
    TopoGraph g = generate(*spec.base);
    while (true) {
        auto clique = find_pairwise_crossing(g, spec.thin_k);
        if (!clique) return g;
        auto cg = crossing_graph(g);
        // total crossing-pair count per edge, densest deleted first
        auto load = [&](int id) {
            int s = 0;
            for (const auto& [pair, cnt] : cg.crossing_counts)
                if (pair.first == id || pair.second == id) s += cnt;
            return s;
        };
        int victim = (*clique)[0];
        for (int id : *clique)
            if (load(id) > load(victim)) victim = id;
        g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(),
                                     [&](const TopoEdge& e) { return e.id == victim; }),
                      g.edges.end());
    }
}

}  // namespace

TopoGraph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case GeneratorSpec::Family::CONVEX_COMPLETE: return gen_convex(spec);
        case GeneratorSpec::Family::RANDOM_SEGMENTS: return gen_random(spec, false);
        case GeneratorSpec::Family::RANDOM_XMONOTONE: return gen_random(spec, true);
        case GeneratorSpec::Family::THINNED: return gen_thinned(spec);
    }
    throw Error(ErrorCode::BAD_INPUT, "unknown generator family");
}

std::string ExperimentReport::csv_header() {
    return "instance,n,edges,k,order,spine_found,up_vacuous,up_witness,"
           "xmono_checked,udu_witness,failure,thm1_log2,planar_log2,"
           "decomposition_size,separator_ratio";
}

std::string ExperimentReport::csv_row() const {
    std::ostringstream os;
    os << instance_id << ',' << n << ',' << edge_count << ',' << k << ',' << order << ','
       << spine_found << ',' << up_check_vacuous << ',' << spine_witness.has_value() << ','
       << xmono_checked << ','
       << (pipeline && (pipeline->witness_s1 || pipeline->witness_s2)) << ','
       << failure << ',';
    std::string thm1 = "0", planar = "0";
    for (const auto& b : bounds) {
        // str() keeps huge log2 values printable where double would overflow
        if (b.name == BoundName::THM1) thm1 = b.log2_value.str(9);
        if (b.name == BoundName::PLANAR) planar = b.log2_value.str(9);
    }
    os << thm1 << ',' << planar << ',' << decomposition_size << ',' << separator_ratio;
    return os.str();
}

ExperimentReport verify_instance(const TopoGraph& g, int k, const std::string& instance_id) {
    ExperimentReport rep;
    rep.instance_id = instance_id;
    rep.n = static_cast<int>(g.vertices.size());
    rep.edge_count = static_cast<int>(g.edges.size());
    rep.k = k;
    rep.order = quasi_planarity_order(g);

    // an edge properly crossed by every edge it shares no endpoint with
    auto cg = crossing_graph(g);
    const TopoEdge* spine = nullptr;
    for (const auto& e : g.edges) {
        bool all = true;
        for (const auto& f : g.edges) {
            if (f.id == e.id) continue;
            if (f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v) continue;
            if (!cg.adjacent(e.id, f.id)) { all = false; break; }
        }
        if (all && !g.edges.empty()) { spine = &e; break; }
    }
    if (spine) {
        rep.spine_found = true;
        SequencePair pair = build_from_crossing_edge(g, spine->id);
        long long l = (k <= 5) ? (1LL << (k * k + k)) : -1;
        long long t = 1LL << k;
        long long len = static_cast<long long>(pair.s1.size());
        rep.up_check_vacuous = (l < 0 || l * t > len);
        if (!rep.up_check_vacuous) {
            auto w1 = contains_up(SequencePair::to_sequence(pair.s1),
                                  static_cast<int>(l), static_cast<int>(t));
            auto w2 = contains_up(SequencePair::to_sequence(pair.s2),
                                  static_cast<int>(l), static_cast<int>(t));
            rep.spine_witness = w1 ? w1 : w2;
            if (rep.spine_witness && !find_pairwise_crossing(g, k)) rep.failure = true;
        }
    }

    if (g.x_monotone_declared) {
        rep.xmono_checked = true;
        try {
            rep.pipeline = xmono_pipeline(g, k);
            if (rep.pipeline->failure) rep.failure = true;
        } catch (const Error& e) {
            rep.pipeline_error = e.what();
        }
    }

    BigInt m(rep.edge_count);
    if (rep.n >= 2)
        rep.bounds.push_back(
            make_bound_report(BoundName::THM1, BigInt(rep.n), k, std::nullopt, m));
    if (rep.n >= 3) {
        auto planar = make_bound_report(BoundName::PLANAR, BigInt(rep.n), k, std::nullopt, m);
        if (rep.order == 2 && planar.exceeded.value_or(false)) rep.failure = true;
        rep.bounds.push_back(std::move(planar));
    }

    std::vector<Curve> curves;
    for (const auto& e : g.edges) curves.push_back(e.curve);
    int t_max = 1;
    for (const auto& [pair, cnt] : cg.crossing_counts) t_max = std::max(t_max, cnt);
    SeparatorResult sep = curve_separator(curves);
    rep.separator_v0 = static_cast<long long>(sep.v0.size());
    rep.intersection_count = sep.intersection_count_x;
    rep.separator_ratio = sep.intersection_count_x > 0
                              ? static_cast<double>(rep.separator_v0) /
                                    std::sqrt(static_cast<double>(sep.intersection_count_x))
                              : 0.0;
    rep.decomposition_size = decompose(curves, t_max).covered_size();
    return rep;
}

}  // namespace qp
