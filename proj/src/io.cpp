#include "qp/io.hpp"

#include <sstream>

#include "qp/error.hpp"

namespace qp {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::BAD_INPUT, "zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw Error(ErrorCode::BAD_INPUT, "malformed rational: " + s);
    }
}

namespace {

Json point_to_json(const Point& p) {
    return Json::array({rat_to_string(p.x), rat_to_string(p.y)});
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw Error(ErrorCode::BAD_INPUT, "expected a rational as \"p/q\" or integer");
}

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error(ErrorCode::BAD_INPUT, "expected a [x, y] pair");
    return Point{rat_from_json(j[0]), rat_from_json(j[1])};
}

}  // namespace

Json topograph_to_json(const TopoGraph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : g.vertices)
        j["vertices"].push_back({{"id", v.id},
                                 {"x", rat_to_string(v.p.x)},
                                 {"y", rat_to_string(v.p.y)}});
    j["edges"] = Json::array();
    for (const auto& e : g.edges) {
        Json wp = Json::array();
        for (const auto& p : e.curve.waypoints) wp.push_back(point_to_json(p));
        j["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"waypoints", wp}});
    }
    j["flags"] = {{"simple", g.simple_declared}, {"x_monotone", g.x_monotone_declared}};
    return j;
}

TopoGraph topograph_from_json(const Json& j) {
    TopoGraph g;
    for (const auto& jv : j.at("vertices"))
        g.vertices.push_back({jv.at("id").get<int>(),
                              Point{rat_from_json(jv.at("x")), rat_from_json(jv.at("y"))}});
    for (const auto& je : j.at("edges")) {
        std::vector<Point> wps;
        for (const auto& jp : je.at("waypoints")) wps.push_back(point_from_json(jp));
        g.edges.push_back({je.at("id").get<int>(), je.at("u").get<int>(),
                           je.at("v").get<int>(), Curve(std::move(wps))});
    }
    if (j.contains("flags")) {
        g.simple_declared = j["flags"].value("simple", false);
        g.x_monotone_declared = j["flags"].value("x_monotone", false);
    }
    return g;
}

std::vector<Sequence> sequences_from_text(const std::string& text) {
    std::vector<Sequence> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream words(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (words >> tok) tokens.push_back(tok);
        if (!tokens.empty()) out.push_back(sequence_from_tokens(tokens));
    }
    return out;
}

Json witness_to_json(const PatternWitness& w) {
    Json j;
    j["kind"] = w.kind == PatternKind::UP ? "up" : "up-down-up";
    j["l"] = w.l;
    if (w.kind == PatternKind::UP) j["t"] = w.t;
    j["positions"] = w.positions;
    return j;
}

Json violation_to_json(const Violation& v) {
    return {{"kind", to_string(v.kind)},
            {"edges", v.edge_ids},
            {"vertex", v.vertex_id},
            {"detail", v.detail}};
}

Json bound_report_to_json(const BoundReport& r) {
    Json j;
    j["name"] = to_string(r.name);
    j["parameters"] = r.parameters;
    j["log2_value"] = r.log2_value.str(20);
    if (r.exceeded) j["exceeded"] = *r.exceeded;
    return j;
}

Json separator_to_json(const SeparatorResult& s) {
    return {{"v0", s.v0}, {"v1", s.v1}, {"v2", s.v2},
            {"intersection_count", s.intersection_count_x}};
}

Json decomposition_to_json(const Decomposition& d) {
    Json parts = Json::array();
    for (const auto& p : d.parts)
        parts.push_back({{"members", p.members}, {"dominating", p.dominating}});
    return {{"parts", parts}, {"leftover", d.leftover}, {"covered", d.covered_size()}};
}

Json sequence_pair_to_json(const SequencePair& p) {
    Json j;
    j["s1"] = p.s1;
    j["s2"] = p.s2;
    j["order"] = p.order;
    if (p.provenance == Provenance::ALL_CROSSING_EDGE) {
        j["provenance"] = {{"kind", "all_crossing_edge"}, {"edge", p.source_edge}};
    } else {
        j["provenance"] = {{"kind", "vertical_line"}, {"line_x", rat_to_string(p.line_x)}};
    }
    return j;
}

}  // namespace qp
