// hgcolor: batch CLI over the recoloring toolkit. One binary, subcommand
// style; JSON is the canonical output format, CSV is available for sweep
// tables. All randomness flows from --seed (or HGCOLOR_SEED), and results
// never depend on --threads.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "hgcolor/ap_vdw.hpp"
#include "hgcolor/certificates.hpp"
#include "hgcolor/hypergraph.hpp"
#include "hgcolor/json_io.hpp"
#include "hgcolor/local_lemma.hpp"
#include "hgcolor/recolor.hpp"

namespace {

using namespace hgcolor;

constexpr std::uint64_t kDefaultSeed = 20240501;

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HGCOLOR_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return kDefaultSeed;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        write_text_file(out_path, text.back() == '\n' ? text : text + "\n");
    }
}

void emit_json(const Json& j, const std::string& out_path) {
    emit(j.dump(2), out_path);
}

LoadedHypergraph load_hypergraph(const std::string& path) {
    LoadedHypergraph loaded = hypergraph_from_json(read_json_file(path));
    if (!loaded.labels.empty()) {
        std::cerr << "note: normalized " << loaded.labels.size()
                  << " vertex labels to dense 0-based ids\n";
    }
    return loaded;
}

struct CommonOpts {
    std::uint64_t seed = default_seed();
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "random seed (default from HGCOLOR_SEED or built-in)");
    cmd->add_option("--threads", opts.threads, "trial-level parallelism; never changes results");
    cmd->add_option("--format", opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("-o,--out", opts.out_path, "output file (stdout when omitted)");
}

int cmd_gen(const CommonOpts& opts, const std::string& named, const std::string& ap,
            int n, int vertices, int edges, int degree_cap) {
    if (!named.empty()) {
        emit_json(hypergraph_to_json(gen_named(named)), opts.out_path);
        return kExitOk;
    }
    if (!ap.empty()) {
        const auto comma = ap.find(',');
        if (comma == std::string::npos) {
            std::cerr << "--ap needs n,M\n";
            return kExitUsage;
        }
        const int ap_n = std::stoi(ap.substr(0, comma));
        const int ap_m = std::stoi(ap.substr(comma + 1));
        emit_json(hypergraph_to_json(generate_ap_hypergraph({ap_n, ap_m})), opts.out_path);
        return kExitOk;
    }
    const RandomGenResult result =
        gen_random_simple(n, vertices, edges, degree_cap, opts.seed);
    if (!result.reached_target) {
        std::cerr << "warning: attempt budget exhausted after " << result.attempts
                  << " draws; generated " << result.hypergraph.edge_count() << " of "
                  << edges << " edges\n";
    }
    emit_json(hypergraph_to_json(result.hypergraph), opts.out_path);
    return result.reached_target ? kExitOk : kExitDomainFailure;
}

int cmd_color(const CommonOpts& opts, const std::string& input_path, int r, double p,
              const std::string& schedule) {
    const LoadedHypergraph loaded = load_hypergraph(input_path);
    const double threshold = p > 0.0 ? p : default_free_threshold(loaded.hypergraph.n());
    const RunInput input = sample_input(loaded.hypergraph, r, threshold, opts.seed);
    const SchedulePolicy policy = schedule == "input-order" ? SchedulePolicy::InputOrder
                                                            : SchedulePolicy::MinSigma;
    const RunTrace trace = run_recolor(loaded.hypergraph, input, policy);
    emit_json(run_record_to_json(loaded.hypergraph, input, trace), opts.out_path);
    return kExitOk;
}

int cmd_verify(const CommonOpts& opts, const std::string& input_path,
               const std::string& coloring_path) {
    const LoadedHypergraph loaded = load_hypergraph(input_path);
    const Json cj = read_json_file(coloring_path);
    std::vector<int> coloring;
    if (cj.is_array()) {
        coloring = cj.get<std::vector<int>>();
    } else if (cj.contains("coloring")) {
        coloring = cj.at("coloring").get<std::vector<int>>();
    } else if (cj.contains("trace")) {
        coloring = cj.at("trace").at("final_coloring").get<std::vector<int>>();
    } else {
        std::cerr << "coloring file must be an array, {\"coloring\": ...} or a run record\n";
        return kExitUsage;
    }
    const ProperCheck check = verify_proper(loaded.hypergraph, coloring);
    Json j;
    j["outcome"] = check.outcome == Outcome::Proper ? "proper" : "failed";
    j["monochromatic_edges"] = check.monochromatic_edges;
    emit_json(j, opts.out_path);
    return check.outcome == Outcome::Proper ? kExitOk : kExitDomainFailure;
}

int cmd_certify(const CommonOpts& opts, const std::string& input_path,
                const std::string& trace_path) {
    const LoadedHypergraph loaded = load_hypergraph(input_path);
    const Hypergraph& h = loaded.hypergraph;
    const Json record = read_json_file(trace_path);
    if (record.contains("hypergraph_digest") &&
        record.at("hypergraph_digest").get<std::string>() != digest(hypergraph_to_json(h))) {
        std::cerr << "trace was produced on a different hypergraph\n";
        return kExitUsage;
    }
    const RunInput input = input_from_json(record.at("input"));
    const RunTrace trace = trace_from_json(record.at("trace"));

    const BlameGraph graph = build_blame_graph(h, trace, input);
    Json j;
    j["hypergraph_digest"] = digest(hypergraph_to_json(h));
    j["input_digest"] = digest(input_to_json(input));
    j["blame_graph"] = blame_graph_to_json(graph);
    Json::array_t certificates;
    bool all_complete = true;
    if (trace.outcome == Outcome::Failed) {
        for (int failed : trace.monochromatic_edges) {
            const HTree tree = extract_complete_htree(h, trace, input, failed);
            Json cert;
            cert["failed_edge"] = failed;
            cert["htree"] = htree_to_json(tree);
            cert["is_htree"] = is_htree(tree, h);
            cert["complete"] = is_complete(tree, h, input);
            all_complete = all_complete && is_complete(tree, h, input);
            certificates.push_back(cert);
        }
    }
    j["certificates"] = certificates;
    emit_json(j, opts.out_path);
    return graph.acyclic && all_complete ? kExitOk : kExitDomainFailure;
}

int cmd_enumerate(const CommonOpts& opts, const std::string& input_path,
                  const std::string& kind, int vertex, int size, long long budget,
                  bool list_items) {
    const LoadedHypergraph loaded = load_hypergraph(input_path);
    const Hypergraph& h = loaded.hypergraph;
    const DegreeProfile profile = degree_profile(h);
    const double delta = profile.max_edge_degree;
    Json j;
    j["kind"] = kind;
    j["vertex"] = vertex;
    j["size"] = size;
    bool within = true;
    if (kind == "htrees") {
        const auto trees = enumerate_disjoint_htrees(h, vertex, size, budget);
        const double bound = std::pow(4.0 * delta, size);
        within = static_cast<double>(trees.size()) <= bound;
        j["count"] = trees.size();
        j["bound"] = bound;
        j["within_bound"] = within;
        if (list_items) {
            Json::array_t items;
            for (const auto& tree : trees) items.push_back(htree_to_json(tree));
            j["items"] = items;
        }
    } else {
        const auto cycles = enumerate_simple_cycles(h, vertex, size, budget);
        const bool simple = check_simple(h).is_simple;
        j["count"] = cycles.size();
        if (simple) {
            const double bound = size * std::pow(delta, size - 1) * h.n() * h.n();
            within = static_cast<double>(cycles.size()) <= bound;
            j["bound"] = bound;
            j["within_bound"] = within;
        } else {
            j["bound"] = nullptr;  // the cycle bound is stated for simple hypergraphs
            j["within_bound"] = nullptr;
        }
        if (list_items) {
            Json::array_t items;
            for (const auto& cycle : cycles) items.push_back(Json(cycle.edges));
            j["items"] = items;
        }
    }
    emit_json(j, opts.out_path);
    return within ? kExitOk : kExitDomainFailure;
}

int cmd_analyze(const CommonOpts& opts, int n, int r, double p, double D,
                const std::string& variant_name, bool search_alpha) {
    const PolyVariant variant =
        variant_name == "ap" ? PolyVariant::AP : PolyVariant::Simple;
    const double threshold = p > 0.0 ? p : default_free_threshold(n);
    if (search_alpha) {
        const AdmissibleSearch search = max_admissible_D(n, r, threshold, variant);
        if (opts.format == "csv") {
            std::string text = poly_report_csv_header(variant) + "\n";
            // ladder of probes up to the first failure, then the optimum
            for (double probe = 1.0; probe <= search.max_d * 2.0 + 2.0; probe *= 2.0) {
                text += poly_report_csv_row(evaluate_polynomials(
                            make_params(n, r, probe, threshold), variant)) +
                        "\n";
                if (probe > search.max_d) break;
            }
            text += poly_report_csv_row(evaluate_polynomials(
                        make_params(n, r, search.max_d, threshold), variant)) +
                    "\n";
            emit(text, opts.out_path);
        } else {
            Json j;
            j["n"] = n;
            j["r"] = r;
            j["p"] = threshold;
            j["variant"] = variant_name;
            j["max_D"] = search.max_d;
            j["alpha"] = search.alpha;
            j["vdw_M_bound"] = search.vdw_m_bound;
            j["report_at_max_D"] = poly_report_to_json(
                evaluate_polynomials(make_params(n, r, search.max_d, threshold), variant));
            emit_json(j, opts.out_path);
        }
        return kExitOk;
    }
    const PolyReport report =
        evaluate_polynomials(make_params(n, r, D, threshold), variant);
    if (opts.format == "csv") {
        emit(poly_report_csv_header(variant) + "\n" + poly_report_csv_row(report) + "\n",
             opts.out_path);
    } else {
        emit_json(poly_report_to_json(report), opts.out_path);
    }
    return kExitOk;
}

int cmd_vdw(const CommonOpts& opts, bool exact, int n, int r, int M, long long trials,
            double p, long long budget) {
    VdWResult result;
    if (exact) {
        result = vdw_exact(n, r, budget);
    } else {
        const double threshold = p > 0.0 ? p : default_free_threshold(n);
        result = vdw_randomized(n, r, M, trials, threshold, opts.seed, opts.threads);
    }
    if (opts.format == "csv") {
        emit(vdw_result_csv_header() + "\n" + vdw_result_csv_row(result) + "\n",
             opts.out_path);
    } else {
        emit_json(vdw_result_to_json(result), opts.out_path);
    }
    if (exact) {
        if (result.exact_value) std::cerr << "W(" << n << "," << r << ") = " << *result.exact_value << "\n";
        return result.complete ? kExitOk : kExitDomainFailure;
    }
    return kExitOk;
}

int cmd_props(const CommonOpts& opts, int n, int M, int M_max) {
    if (M_max > 0) {
        std::string text = ap_props_csv_header() + "\n";
        bool all_ok = true;
        for (int m = n; m <= M_max; ++m) {
            const APPropsReport report = validate_ap_props({n, m});
            all_ok = all_ok && report.all_ok;
            text += ap_props_csv_row(report) + "\n";
        }
        emit(text, opts.out_path);
        return all_ok ? kExitOk : kExitDomainFailure;
    }
    const APPropsReport report = validate_ap_props({n, M});
    if (opts.format == "csv") {
        emit(ap_props_csv_header() + "\n" + ap_props_csv_row(report) + "\n", opts.out_path);
    } else {
        emit_json(ap_props_to_json(report), opts.out_path);
    }
    return report.all_ok ? kExitOk : kExitDomainFailure;
}

int cmd_table(const CommonOpts& opts, int n, int r, double p) {
    const double threshold = p > 0.0 ? p : default_free_threshold(n);
    const auto rows = bound_table(n, r, threshold);
    if (opts.format == "csv") {
        emit(bound_rows_csv(rows), opts.out_path);
    } else {
        emit_json(bound_rows_to_json(rows), opts.out_path);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomized recoloring toolkit for uniform hypergraph coloring"};
    app.require_subcommand(1);

    CommonOpts opts;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a hypergraph (named / random simple / progressions)");
    std::string gen_named_name, gen_ap;
    int gen_n = 3, gen_vertices = 12, gen_edges = 10, gen_cap = 6;
    gen->add_option("--named", gen_named_name, "fixture name, e.g. fano or path(3)");
    gen->add_option("--ap", gen_ap, "arithmetic progressions: n,M");
    gen->add_option("-n", gen_n, "edge size");
    gen->add_option("--vertices", gen_vertices, "vertex count");
    gen->add_option("--edges", gen_edges, "edge target");
    gen->add_option("--degree-cap", gen_cap, "max edge degree to keep");
    add_common(gen, opts);

    // color
    auto* color = app.add_subcommand("color", "sample a random input and run the recoloring pass");
    std::string color_input, color_schedule = "min-sigma";
    int color_r = 2;
    double color_p = 0.0;
    color->add_option("--input", color_input, "hypergraph file")->required();
    color->add_option("-r", color_r, "number of colors");
    color->add_option("-p", color_p, "free threshold (default min(5 ln n / n, 0.49))");
    color->add_option("--schedule", color_schedule, "min-sigma or input-order")
        ->check(CLI::IsMember({"min-sigma", "input-order"}));
    add_common(color, opts);

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring for monochromatic edges");
    std::string verify_input, verify_coloring;
    verify->add_option("--input", verify_input, "hypergraph file")->required();
    verify->add_option("--coloring", verify_coloring, "coloring or run record file")->required();
    add_common(verify, opts);

    // certify
    auto* certify = app.add_subcommand("certify", "blame graph + failure certificates for a run record");
    std::string certify_input, certify_trace;
    certify->add_option("--input", certify_input, "hypergraph file")->required();
    certify->add_option("--trace", certify_trace, "run record file")->required();
    add_common(certify, opts);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "count disjoint h-trees or simple cycles vs their bounds");
    std::string enum_input, enum_kind = "htrees";
    int enum_vertex = 0, enum_size = 2;
    long long enum_budget = 10'000'000;
    bool enum_list = false;
    enumerate->add_option("--input", enum_input, "hypergraph file")->required();
    enumerate->add_option("--kind", enum_kind, "htrees or cycles")
        ->check(CLI::IsMember({"htrees", "cycles"}));
    enumerate->add_option("-v,--vertex", enum_vertex, "vertex that must be covered");
    enumerate->add_option("-N,--size", enum_size, "tree size / cycle length");
    enumerate->add_option("--budget", enum_budget, "enumeration budget");
    enumerate->add_flag("--list", enum_list, "include the objects, not just counts");
    add_common(enumerate, opts);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "evaluate the local polynomials or search the degree bound");
    int analyze_n = 100, analyze_r = 2;
    double analyze_p = 0.0, analyze_D = 0.0;
    std::string analyze_variant = "simple";
    bool analyze_search = false;
    analyze->add_option("-n", analyze_n, "uniformity");
    analyze->add_option("-r", analyze_r, "colors");
    analyze->add_option("-p", analyze_p, "free threshold (default min(5 ln n / n, 0.49))");
    analyze->add_option("-D", analyze_D, "edge degree bound");
    analyze->add_option("--variant", analyze_variant, "simple or ap")
        ->check(CLI::IsMember({"simple", "ap"}));
    analyze->add_flag("--search-alpha", analyze_search, "binary-search the largest admissible D");
    add_common(analyze, opts);

    // vdw
    auto* vdw = app.add_subcommand("vdw", "randomized or exact Van der Waerden experiments");
    bool vdw_exact_mode = false;
    int vdw_n = 3, vdw_r = 2, vdw_M = 8;
    long long vdw_trials = 1000, vdw_budget = 4'000'000'000LL;
    double vdw_p = 0.0;
    vdw->add_flag("--exact", vdw_exact_mode, "exact value by exhaustive search");
    vdw->add_option("-n", vdw_n, "progression length");
    vdw->add_option("-r", vdw_r, "colors");
    vdw->add_option("-M", vdw_M, "interval size (randomized mode)");
    vdw->add_option("--trials", vdw_trials, "number of randomized trials");
    vdw->add_option("-p", vdw_p, "free threshold (default min(5 ln n / n, 0.49))");
    vdw->add_option("--budget", vdw_budget, "node budget for the exact search");
    add_common(vdw, opts);

    // props
    auto* props = app.add_subcommand("props", "validate progression-hypergraph degree properties");
    int props_n = 3, props_M = 9, props_M_max = 0;
    props->add_option("-n", props_n, "progression length");
    props->add_option("-M", props_M, "interval size");
    props->add_option("--M-max", props_M_max, "sweep M from n to this value (CSV)");
    add_common(props, opts);

    // table
    auto* table = app.add_subcommand("table", "lower bounds next to the published upper bound");
    int table_n = 5, table_r = 2;
    double table_p = 0.0;
    table->add_option("-n", table_n, "uniformity");
    table->add_option("-r", table_r, "colors");
    table->add_option("-p", table_p, "free threshold (default min(5 ln n / n, 0.49))");
    add_common(table, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(opts, gen_named_name, gen_ap, gen_n, gen_vertices, gen_edges, gen_cap);
        }
        if (color->parsed()) return cmd_color(opts, color_input, color_r, color_p, color_schedule);
        if (verify->parsed()) return cmd_verify(opts, verify_input, verify_coloring);
        if (certify->parsed()) return cmd_certify(opts, certify_input, certify_trace);
        if (enumerate->parsed()) {
            return cmd_enumerate(opts, enum_input, enum_kind, enum_vertex, enum_size,
                                 enum_budget, enum_list);
        }
        if (analyze->parsed()) {
            return cmd_analyze(opts, analyze_n, analyze_r, analyze_p, analyze_D,
                               analyze_variant, analyze_search);
        }
        if (vdw->parsed()) {
            return cmd_vdw(opts, vdw_exact_mode, vdw_n, vdw_r, vdw_M, vdw_trials, vdw_p,
                           vdw_budget);
        }
        if (props->parsed()) return cmd_props(opts, props_n, props_M, props_M_max);
        if (table->parsed()) return cmd_table(opts, table_n, table_r, table_p);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitDomainFailure;
    } catch (const DegenerateDangerousError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitDomainFailure;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kExitDomainFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
