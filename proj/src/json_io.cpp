#include "hgcolor/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace hgcolor {

namespace {

std::string format_double(double x) {
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

Json::array_t int_matrix(const std::vector<std::vector<int>>& rows) {
    Json::array_t out;
    for (const auto& row : rows) out.push_back(row);
    return out;
}

}  // namespace

Json hypergraph_to_json(const Hypergraph& h) {
    Json j;
    j["n"] = h.n();
    j["vertex_count"] = h.vertex_count();
    j["edges"] = int_matrix(h.edges());
    return j;
}

LoadedHypergraph hypergraph_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("edges")) {
        throw ValidationError("hypergraph file needs \"n\" and \"edges\"");
    }
    const int n = j.at("n").get<int>();
    auto raw = j.at("edges").get<std::vector<std::vector<long long>>>();

    if (j.contains("vertex_count") && !j.at("vertex_count").is_null()) {
        const int vc = j.at("vertex_count").get<int>();
        bool dense = true;
        for (const auto& e : raw) {
            for (long long v : e) {
                if (v < 0 || v >= vc) dense = false;
            }
        }
        if (!dense) {
            throw ValidationError(
                "edge labels fall outside [0, vertex_count); drop \"vertex_count\" "
                "to let labels be normalized");
        }
        std::vector<std::vector<int>> edges;
        edges.reserve(raw.size());
        for (const auto& e : raw) edges.emplace_back(e.begin(), e.end());
        return {Hypergraph(n, vc, std::move(edges)), {}};
    }

    // arbitrary labels: map the sorted distinct values to dense ids
    std::vector<long long> labels;
    for (const auto& e : raw) labels.insert(labels.end(), e.begin(), e.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::map<long long, int> id_of;
    for (size_t i = 0; i < labels.size(); ++i) id_of[labels[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (long long v : e) mapped.push_back(id_of.at(v));
        edges.push_back(std::move(mapped));
    }
    return {Hypergraph(n, static_cast<int>(labels.size()), std::move(edges)),
            std::move(labels)};
}

Json input_to_json(const RunInput& input) {
    Json j;
    j["r"] = input.r;
    j["p"] = input.p;
    j["c0"] = input.c0;
    j["sigma"] = input.sigma;
    return j;
}

RunInput input_from_json(const Json& j) {
    RunInput input;
    input.r = j.at("r").get<int>();
    input.p = j.at("p").get<double>();
    input.c0 = j.at("c0").get<std::vector<int>>();
    input.sigma = j.at("sigma").get<std::vector<double>>();
    return input;
}

Json trace_to_json(const RunTrace& trace) {
    Json j;
    j["algorithm"] = trace.algorithm == Algorithm::Recolor ? "recolor" : "list_recolor";
    Json::array_t events;
    for (const auto& ev : trace.events) {
        events.push_back(Json::array_t{ev.step, ev.vertex, ev.old_color, ev.new_color,
                                       ev.blamed_edge});
    }
    j["events"] = events;
    j["final_coloring"] = trace.final_coloring;
    j["outcome"] = trace.outcome == Outcome::Proper ? "proper" : "failed";
    j["monochromatic_edges"] = trace.monochromatic_edges;
    return j;
}

RunTrace trace_from_json(const Json& j) {
    RunTrace trace;
    const std::string algorithm = j.at("algorithm").get<std::string>();
    if (algorithm == "recolor") {
        trace.algorithm = Algorithm::Recolor;
    } else if (algorithm == "list_recolor") {
        trace.algorithm = Algorithm::ListRecolor;
    } else {
        throw ValidationError("unknown trace algorithm '" + algorithm + "'");
    }
    for (const auto& row : j.at("events")) {
        if (!row.is_array() || row.size() != 5) {
            throw ValidationError("trace events must be [step, vertex, old, new, blamed]");
        }
        trace.events.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                                row[3].get<int>(), row[4].get<int>()});
    }
    trace.final_coloring = j.at("final_coloring").get<std::vector<int>>();
    const std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "proper") {
        trace.outcome = Outcome::Proper;
    } else if (outcome == "failed") {
        trace.outcome = Outcome::Failed;
    } else {
        throw ValidationError("unknown trace outcome '" + outcome + "'");
    }
    trace.monochromatic_edges = j.at("monochromatic_edges").get<std::vector<int>>();
    return trace;
}

Json run_record_to_json(const Hypergraph& h, const RunInput& input,
                        const RunTrace& trace) {
    Json j;
    j["hypergraph_digest"] = digest(hypergraph_to_json(h));
    j["input"] = input_to_json(input);
    j["trace"] = trace_to_json(trace);
    return j;
}

Json blame_graph_to_json(const BlameGraph& graph) {
    Json j;
    j["edge_count"] = graph.edge_count;
    Json::array_t arcs;
    for (const auto& [a, b] : graph.arcs) arcs.push_back(Json::array_t{a, b});
    j["arcs"] = arcs;
    j["acyclic"] = graph.acyclic;
    return j;
}

Json htree_to_json(const HTree& tree) {
    Json j;
    Json::array_t nodes;
    for (const auto& node : tree.nodes) {
        nodes.push_back(Json::array_t{node.edge, node.parent, node.parent_vertex});
    }
    j["nodes"] = nodes;
    return j;
}

HTree htree_from_json(const Json& j) {
    HTree tree;
    for (const auto& row : j.at("nodes")) {
        if (!row.is_array() || row.size() != 3) {
            throw ValidationError("h-tree nodes must be [edge, parent, parent_vertex]");
        }
        tree.nodes.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
    }
    return tree;
}

namespace {

Json log_term_to_json(const LogTerm& term) {
    Json j;
    j["log_value"] = term.divergent || std::isinf(term.log_value)
                         ? Json(nullptr)
                         : Json(term.log_value);
    j["value"] = term.divergent ? Json(nullptr) : Json(term.value());
    j["divergent"] = term.divergent;
    return j;
}

std::string log_term_csv(const LogTerm& term) {
    if (term.divergent) return "divergent";
    return format_double(term.value());
}

}  // namespace

Json poly_report_to_json(const PolyReport& report) {
    Json j;
    j["n"] = report.params.n;
    j["r"] = report.params.r;
    j["p"] = report.params.p;
    j["D"] = report.params.D;
    j["tau0"] = report.params.tau0;
    j["z0"] = report.params.z0;
    j["variant"] = report.variant == PolyVariant::Simple ? "simple" : "ap";
    j["w_D"] = log_term_to_json(report.w_d);
    j["w_CT"] = log_term_to_json(report.w_ct);
    j["w_DT"] = log_term_to_json(report.w_dt);
    if (report.variant == PolyVariant::Simple) {
        j["w_EC"] = log_term_to_json(report.w_ec);
    } else {
        j["w_EC0"] = log_term_to_json(report.w_ec0);
        j["w_EC1"] = log_term_to_json(report.w_ec1);
        j["w_EC2"] = log_term_to_json(report.w_ec2);
    }
    j["log_total"] = report.any_divergent || std::isinf(report.log_total)
                         ? Json(nullptr)
                         : Json(report.log_total);
    j["total"] = report.any_divergent ? Json(nullptr) : Json(std::exp(report.log_total));
    j["condition_met"] = report.condition_met;
    return j;
}

std::string poly_report_csv_header(PolyVariant variant) {
    if (variant == PolyVariant::Simple) {
        return "n,r,p,D,w_D,w_CT,w_DT,w_EC,total,condition_met";
    }
    return "n,r,p,D,w_D,w_CT,w_DT,w_EC0,w_EC1,w_EC2,total,condition_met";
}

std::string poly_report_csv_row(const PolyReport& report) {
    std::ostringstream out;
    out << report.params.n << ',' << report.params.r << ','
        << format_double(report.params.p) << ',' << format_double(report.params.D) << ','
        << log_term_csv(report.w_d) << ',' << log_term_csv(report.w_ct) << ','
        << log_term_csv(report.w_dt) << ',';
    if (report.variant == PolyVariant::Simple) {
        out << log_term_csv(report.w_ec) << ',';
    } else {
        out << log_term_csv(report.w_ec0) << ',' << log_term_csv(report.w_ec1) << ','
            << log_term_csv(report.w_ec2) << ',';
    }
    if (report.any_divergent) {
        out << "divergent,";
    } else {
        out << format_double(std::exp(report.log_total)) << ',';
    }
    out << (report.condition_met ? "true" : "false");
    return out.str();
}

Json vdw_result_to_json(const VdWResult& result) {
    Json j;
    j["mode"] = result.mode == VdWMode::Randomized ? "randomized" : "exact";
    j["n"] = result.n;
    j["r"] = result.r;
    j["M"] = result.M;
    j["trials"] = result.trials;
    j["successes"] = result.successes;
    j["witness"] = result.witness ? Json(*result.witness) : Json(nullptr);
    j["exact_value"] = result.exact_value ? Json(*result.exact_value) : Json(nullptr);
    j["nodes_visited"] = result.nodes_visited;
    j["complete"] = result.complete;
    return j;
}

std::string vdw_result_csv_header() { return "n,r,M,trials,successes,success_rate"; }

std::string vdw_result_csv_row(const VdWResult& result) {
    std::ostringstream out;
    const double rate = result.trials > 0
                            ? static_cast<double>(result.successes) /
                                  static_cast<double>(result.trials)
                            : 0.0;
    out << result.n << ',' << result.r << ',' << result.M << ',' << result.trials << ','
        << result.successes << ',' << format_double(rate);
    return out.str();
}

Json ap_props_to_json(const APPropsReport& report) {
    Json j;
    j["n"] = report.n;
    j["M"] = report.M;
    j["edge_count"] = report.edge_count;
    j["max_vertex_degree"] = report.max_vertex_degree;
    j["vertex_degree_ok"] = report.vertex_degree_ok;
    j["max_codegree"] = report.max_codegree;
    j["codegree_ok"] = report.codegree_ok;
    j["max_two_intersections"] = report.max_two_intersections;
    j["two_intersections_ok"] = report.two_intersections_ok;
    j["max_long_overlap_pairs"] = report.max_long_overlap_pairs;
    j["long_overlap_ok"] = report.long_overlap_ok;
    j["max_edge_degree"] = report.max_edge_degree;
    j["edge_degree_ok"] = report.edge_degree_ok;
    j["all_ok"] = report.all_ok;
    return j;
}

std::string ap_props_csv_header() {
    return "n,M,edges,max_vertex_degree,vertex_degree_ok,max_codegree,codegree_ok,"
           "max_two_intersections,two_intersections_ok,max_long_overlap_pairs,"
           "long_overlap_ok,max_edge_degree,edge_degree_ok,all_ok";
}

std::string ap_props_csv_row(const APPropsReport& r) {
    std::ostringstream out;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out << r.n << ',' << r.M << ',' << r.edge_count << ',' << r.max_vertex_degree << ','
        << flag(r.vertex_degree_ok) << ',' << r.max_codegree << ',' << flag(r.codegree_ok)
        << ',' << r.max_two_intersections << ',' << flag(r.two_intersections_ok) << ','
        << r.max_long_overlap_pairs << ',' << flag(r.long_overlap_ok) << ','
        << r.max_edge_degree << ',' << flag(r.edge_degree_ok) << ',' << flag(r.all_ok);
    return out.str();
}

Json bound_rows_to_json(const std::vector<BoundRow>& rows) {
    Json::array_t out;
    for (const auto& row : rows) {
        Json j;
        j["name"] = row.name;
        j["formula"] = row.formula;
        j["value"] = row.value;
        j["source"] = row.source;
        out.push_back(j);
    }
    return out;
}

std::string bound_rows_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "name,formula,value,source\n";
    for (const auto& row : rows) {
        out << row.name << ",\"" << row.formula << "\"," << format_double(row.value)
            << ',' << row.source << '\n';
    }
    return out.str();
}

std::string digest(const Json& j) {
    const std::string text = j.dump();
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << hash;
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << content;
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace hgcolor
