#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hgcolor/ap_vdw.hpp"
#include "hgcolor/certificates.hpp"
#include "hgcolor/hypergraph.hpp"
#include "hgcolor/local_lemma.hpp"
#include "hgcolor/recolor.hpp"

namespace hgcolor {

// ordered_json keeps key order stable, so equal values serialize to equal
// bytes; every writer below goes through it.
using Json = nlohmann::ordered_json;

Json hypergraph_to_json(const Hypergraph& h);

struct LoadedHypergraph {
    Hypergraph hypergraph;
    // original vertex labels when the file needed normalization; empty
    // when ids were already dense 0-based
    std::vector<long long> labels;
};

// Accepts the canonical schema {"n", "vertex_count", "edges"}. When
// vertex_count is absent the edge labels may be arbitrary integers; they
// are normalized to dense 0-based ids and the sorted label map is
// returned.
LoadedHypergraph hypergraph_from_json(const Json& j);

Json input_to_json(const RunInput& input);
RunInput input_from_json(const Json& j);

Json trace_to_json(const RunTrace& trace);
RunTrace trace_from_json(const Json& j);

// Self-contained run record: the input plus digests tying it to its
// hypergraph, so a certificate can be validated later in isolation.
Json run_record_to_json(const Hypergraph& h, const RunInput& input,
                        const RunTrace& trace);

Json blame_graph_to_json(const BlameGraph& graph);
Json htree_to_json(const HTree& tree);
HTree htree_from_json(const Json& j);

Json poly_report_to_json(const PolyReport& report);
std::string poly_report_csv_header(PolyVariant variant);
std::string poly_report_csv_row(const PolyReport& report);

Json vdw_result_to_json(const VdWResult& result);
std::string vdw_result_csv_header();
std::string vdw_result_csv_row(const VdWResult& result);

Json ap_props_to_json(const APPropsReport& report);
std::string ap_props_csv_header();
std::string ap_props_csv_row(const APPropsReport& report);

Json bound_rows_to_json(const std::vector<BoundRow>& rows);
std::string bound_rows_csv(const std::vector<BoundRow>& rows);

// FNV-1a over the canonical dump, as a hex string.
std::string digest(const Json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace hgcolor
