// Command-line front end: generators, drawing validation, sequence analysis,
// bound evaluation, decomposition, and the full per-instance verifier.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qp/error.hpp"
#include "qp/generate.hpp"
#include "qp/io.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw qp::Error(qp::ErrorCode::BAD_INPUT, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw qp::Error(qp::ErrorCode::BAD_INPUT, "cannot open " + path);
    out << text << "\n";
}

qp::TopoGraph load_graph(const std::string& path) {
    return qp::topograph_from_json(qp::Json::parse(slurp(path)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for quasi-planar drawings and forbidden-pattern sequences"};
    app.require_subcommand(1);

    // --- generate ---
    auto* gen = app.add_subcommand("generate", "emit a drawing as JSON");
    std::string gen_family = "convex";
    int gen_n = 8, gen_edges = 0, gen_thin_k = 0, gen_retries = 200;
    unsigned long long gen_seed = 0;
    std::string gen_out;
    gen->add_option("--family", gen_family, "convex | segments | xmonotone")
        ->check(CLI::IsMember({"convex", "segments", "xmonotone"}));
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--edges", gen_edges, "edge count (random families)");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--thin-k", gen_thin_k, "thin until no k pairwise crossing edges");
    gen->add_option("--retries", gen_retries, "general-position retry budget");
    gen->add_option("-o,--out", gen_out, "output path (default stdout)");

    // --- validate ---
    auto* val = app.add_subcommand("validate", "check a drawing's invariants");
    std::string val_in = "-";
    val->add_option("-i,--in", val_in, "drawing JSON (default stdin)");

    // --- analyze ---
    auto* ana = app.add_subcommand("analyze", "scan sequences for forbidden patterns");
    std::string ana_in = "-";
    int ana_up_l = 0, ana_up_t = 0, ana_udu_l = 0, ana_reg_l = 0;
    ana->add_option("-i,--in", ana_in, "sequence text file, one sequence per line");
    ana->add_option("--up-l", ana_up_l, "block length for up(l,t)");
    ana->add_option("--up-t", ana_up_t, "repeat count for up(l,t)");
    ana->add_option("--udu-l", ana_udu_l, "block length for up-down-up(l)");
    ana->add_option("--regular-l", ana_reg_l, "check l-regularity");

    // --- bounds ---
    auto* bnd = app.add_subcommand("bounds", "evaluate theorem bounds in log2 scale");
    std::string bnd_name = "thm1";
    std::string bnd_n = "1000";
    int bnd_k = 3, bnd_l = 0, bnd_t = 0;
    double bnd_const = 0;
    bool bnd_has_const = false;
    std::string bnd_observed;
    long long bnd_ack_base = 2;
    bnd->add_option("--name", bnd_name, "klazar | pettie | thm1 | thm2 | planar")
        ->check(CLI::IsMember({"klazar", "pettie", "thm1", "thm2", "planar"}));
    bnd->add_option("--n", bnd_n, "number of vertices (big integer)");
    bnd->add_option("--k", bnd_k, "quasi-planarity parameter");
    bnd->add_option("--l", bnd_l, "pattern block length (klazar/pettie)");
    bnd->add_option("--t", bnd_t, "pattern repeat count (klazar)");
    bnd->add_option("--constant", bnd_const, "constant override")
        ->each([&](const std::string&) { bnd_has_const = true; });
    bnd->add_option("--observed", bnd_observed, "observed edge count to compare");
    bnd->add_option("--ack-base", bnd_ack_base, "Ackermann base value A_k(1)");

    // --- decompose ---
    auto* dec = app.add_subcommand("decompose", "separator and decomposition of edge curves");
    std::string dec_in = "-";
    int dec_t = 0;
    double dec_c1 = 4.0;
    dec->add_option("-i,--in", dec_in, "drawing JSON");
    dec->add_option("--t", dec_t, "max pairwise intersections (0 = measure)");
    dec->add_option("--c1", dec_c1, "separator constant c1");

    // --- verify ---
    auto* ver = app.add_subcommand("verify", "full instance report");
    std::string ver_in = "-", ver_id = "instance";
    int ver_k = 3;
    bool ver_csv = false;
    ver->add_option("-i,--in", ver_in, "drawing JSON");
    ver->add_option("--k", ver_k, "quasi-planarity parameter");
    ver->add_option("--id", ver_id, "instance id for the report");
    ver->add_flag("--csv", ver_csv, "emit a CSV row instead of JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            qp::GeneratorSpec spec;
            if (gen_family == "convex")
                spec = qp::GeneratorSpec::convex_complete(gen_n, gen_seed);
            else if (gen_family == "segments")
                spec = qp::GeneratorSpec::random_segments(gen_n, gen_edges, gen_seed);
            else
                spec = qp::GeneratorSpec::random_xmonotone(gen_n, gen_edges, gen_seed);
            spec.general_position_retries = gen_retries;
            if (gen_thin_k > 0) spec = qp::GeneratorSpec::thinned(spec, gen_thin_k);
            emit(gen_out, qp::topograph_to_json(qp::generate(spec)).dump(2));
        } else if (*val) {
            auto g = load_graph(val_in);
            auto violations = qp::validate(g);
            qp::Json j = qp::Json::array();
            for (const auto& v : violations) j.push_back(qp::violation_to_json(v));
            std::cout << j.dump(2) << "\n";
            return violations.empty() ? 0 : 1;
        } else if (*ana) {
            auto seqs = qp::sequences_from_text(slurp(ana_in));
            qp::Json out = qp::Json::array();
            for (const auto& s : seqs) {
                qp::Json j;
                j["length"] = s.length();
                j["alphabet"] = s.alphabet_size;
                if (ana_up_l > 0 && ana_up_t > 0) {
                    auto w = qp::contains_up(s, ana_up_l, ana_up_t);
                    j["up"] = w ? qp::witness_to_json(*w) : qp::Json(nullptr);
                }
                if (ana_udu_l > 0) {
                    auto w = qp::contains_up_down_up(s, ana_udu_l);
                    j["up_down_up"] = w ? qp::witness_to_json(*w) : qp::Json(nullptr);
                }
                if (ana_reg_l > 0) j["regular"] = qp::is_l_regular(s, ana_reg_l);
                out.push_back(j);
            }
            std::cout << out.dump(2) << "\n";
        } else if (*bnd) {
            qp::AckermannConfig cfg;
            cfg.base_value_at_one = bnd_ack_base;
            qp::BigInt n(bnd_n);
            std::optional<double> cst;
            if (bnd_has_const) cst = bnd_const;
            qp::BoundReport rep;
            if (bnd_name == "klazar" || bnd_name == "pettie") {
                if (bnd_l <= 0)
                    throw qp::Error(qp::ErrorCode::BAD_INPUT, "--l required");
                rep.name = bnd_name == "klazar" ? qp::BoundName::KLAZAR : qp::BoundName::PETTIE;
                rep.parameters = {{"n", bnd_n}, {"l", std::to_string(bnd_l)}};
                if (bnd_name == "klazar") {
                    if (bnd_t <= 0)
                        throw qp::Error(qp::ErrorCode::BAD_INPUT, "--t required");
                    rep.parameters["t"] = std::to_string(bnd_t);
                    rep.log2_value = qp::klazar_bound_log2(n, bnd_l, bnd_t, cfg);
                } else {
                    if (!cst)
                        throw qp::Error(qp::ErrorCode::MISSING_CONSTANT, "--constant required");
                    rep.log2_value = qp::pettie_bound_log2(n, bnd_l, *cst);
                }
            } else {
                qp::BoundName name = bnd_name == "thm1"  ? qp::BoundName::THM1
                                     : bnd_name == "thm2" ? qp::BoundName::THM2
                                                          : qp::BoundName::PLANAR;
                std::optional<qp::BigInt> observed;
                if (!bnd_observed.empty()) observed = qp::BigInt(bnd_observed);
                rep = qp::make_bound_report(name, n, bnd_k, cst, observed, cfg);
            }
            std::cout << qp::bound_report_to_json(rep).dump(2) << "\n";
            std::cout << qp::to_string(rep.name) << ": log2 = " << rep.log2_value.str(10)
                      << "\n";
        } else if (*dec) {
            auto g = load_graph(dec_in);
            std::vector<qp::Curve> curves;
            for (const auto& e : g.edges) curves.push_back(e.curve);
            auto sep = qp::curve_separator(curves);
            int t = dec_t;
            if (t <= 0) {
                t = 1;
                for (size_t i = 0; i < curves.size(); ++i)
                    for (size_t j = i + 1; j < curves.size(); ++j)
                        t = std::max(t, static_cast<int>(qp::crossings(curves[i], curves[j]).size()));
            }
            auto d = qp::decompose(curves, t, dec_c1);
            qp::Json j;
            j["separator"] = qp::separator_to_json(sep);
            j["decomposition"] = qp::decomposition_to_json(d);
            std::cout << j.dump(2) << "\n";
        } else if (*ver) {
            auto g = load_graph(ver_in);
            auto rep = qp::verify_instance(g, ver_k, ver_id);
            if (ver_csv) {
                std::cout << qp::ExperimentReport::csv_header() << "\n"
                          << rep.csv_row() << "\n";
            } else {
                qp::Json j;
                j["instance"] = rep.instance_id;
                j["n"] = rep.n;
                j["edges"] = rep.edge_count;
                j["k"] = rep.k;
                j["order"] = rep.order;
                j["spine_found"] = rep.spine_found;
                j["up_check_vacuous"] = rep.up_check_vacuous;
                if (rep.spine_witness) j["up_witness"] = qp::witness_to_json(*rep.spine_witness);
                j["xmono_checked"] = rep.xmono_checked;
                if (rep.pipeline) {
                    qp::Json pj;
                    pj["spanning"] = rep.pipeline->spanning_count;
                    pj["after_left_prune"] = rep.pipeline->after_left_prune;
                    pj["retained"] = rep.pipeline->retained_count;
                    pj["pair"] = qp::sequence_pair_to_json(rep.pipeline->pair);
                    if (rep.pipeline->witness_s1)
                        pj["witness_s1"] = qp::witness_to_json(*rep.pipeline->witness_s1);
                    if (rep.pipeline->witness_s2)
                        pj["witness_s2"] = qp::witness_to_json(*rep.pipeline->witness_s2);
                    if (rep.pipeline->crossing_clique)
                        pj["crossing_clique"] = *rep.pipeline->crossing_clique;
                    j["pipeline"] = pj;
                }
                if (!rep.pipeline_error.empty()) j["pipeline_error"] = rep.pipeline_error;
                j["bounds"] = qp::Json::array();
                for (const auto& b : rep.bounds) j["bounds"].push_back(qp::bound_report_to_json(b));
                j["decomposition_size"] = rep.decomposition_size;
                j["separator_v0"] = rep.separator_v0;
                j["intersection_count"] = rep.intersection_count;
                j["separator_ratio"] = rep.separator_ratio;
                j["failure"] = rep.failure;
                std::cout << j.dump(2) << "\n";
            }
            return rep.failure ? 1 : 0;
        }
    } catch (const qp::Error& e) {
        std::cerr << "error [" << qp::to_string(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
