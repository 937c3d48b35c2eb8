#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgcolor/json_io.hpp"

using namespace hgcolor;

TEST_CASE("hypergraph json round trip is canonical") {
    const Hypergraph h = gen_named("fano");
    const Json j = hypergraph_to_json(h);
    const LoadedHypergraph back = hypergraph_from_json(j);
    CHECK(back.hypergraph.edges() == h.edges());
    CHECK(back.labels.empty());
    CHECK(hypergraph_to_json(back.hypergraph).dump() == j.dump());

    // unordered input normalizes to the same canonical bytes
    Json shuffled;
    shuffled["n"] = 3;
    shuffled["vertex_count"] = 7;
    Json::array_t edges;
    for (int i = h.edge_count() - 1; i >= 0; --i) {
        const auto& e = h.edge(i);
        edges.push_back(Json::array_t{e[2], e[0], e[1]});
    }
    shuffled["edges"] = edges;
    CHECK(hypergraph_to_json(hypergraph_from_json(shuffled).hypergraph).dump() == j.dump());
}

TEST_CASE("arbitrary labels normalize with a stored label map") {
    Json j;
    j["n"] = 3;
    j["edges"] = Json::array_t{Json::array_t{10, 30, 20}, Json::array_t{30, 40, 50}};
    const LoadedHypergraph loaded = hypergraph_from_json(j);
    CHECK(loaded.hypergraph.vertex_count() == 5);
    CHECK(loaded.labels == std::vector<long long>{10, 20, 30, 40, 50});
    CHECK(loaded.hypergraph.edges() ==
          std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});

    // out-of-range ids with an explicit vertex_count are rejected
    j["vertex_count"] = 5;
    CHECK_THROWS_AS(hypergraph_from_json(j), ValidationError);
}

TEST_CASE("run records round trip") {
    const Hypergraph h = gen_named("path(2)");
    const RunInput input = sample_input(h, 2, 0.3, 9);
    const RunTrace trace = run_recolor(h, input);
    const Json record = run_record_to_json(h, input, trace);

    const RunInput input_back = input_from_json(record.at("input"));
    CHECK(input_back.r == input.r);
    CHECK(input_back.p == input.p);
    CHECK(input_back.c0 == input.c0);
    CHECK(input_back.sigma == input.sigma);  // exact double round trip

    const RunTrace trace_back = trace_from_json(record.at("trace"));
    CHECK(trace_back.final_coloring == trace.final_coloring);
    CHECK(trace_back.outcome == trace.outcome);
    CHECK(trace_back.events.size() == trace.events.size());
    CHECK(record.at("hypergraph_digest").get<std::string>() ==
          digest(hypergraph_to_json(h)));
}

TEST_CASE("htree serialization round trips") {
    HTree tree;
    tree.nodes.push_back({0, -1, -1});
    tree.nodes.push_back({2, 0, 2});
    tree.nodes.push_back({1, 1, 4});
    const HTree back = htree_from_json(htree_to_json(tree));
    REQUIRE(back.nodes.size() == 3);
    CHECK(back.nodes[2].edge == 1);
    CHECK(back.nodes[2].parent == 1);
    CHECK(back.nodes[2].parent_vertex == 4);
}

TEST_CASE("poly report serialization carries divergence") {
    const PolyReport diverged = evaluate_polynomials(
        make_params(10, 2, 10.0 * std::pow(2.0, 9), 0.2), PolyVariant::Simple);
    REQUIRE(diverged.any_divergent);
    const Json j = poly_report_to_json(diverged);
    CHECK(j.at("w_CT").at("divergent").get<bool>());
    CHECK(j.at("total").is_null());
    CHECK_FALSE(j.at("condition_met").get<bool>());
    const std::string row = poly_report_csv_row(diverged);
    CHECK(row.find("divergent") != std::string::npos);

    const PolyReport fine = evaluate_polynomials(make_params(10, 2, 1.0, 0.1),
                                                 PolyVariant::AP);
    const std::string header = poly_report_csv_header(PolyVariant::AP);
    CHECK(header.find("w_EC0") != std::string::npos);
    CHECK(poly_report_csv_row(fine).find("divergent") == std::string::npos);
}

TEST_CASE("identical values serialize to identical bytes") {
    const Hypergraph a = gen_random_simple(3, 12, 10, 6, 77).hypergraph;
    const Hypergraph b = gen_random_simple(3, 12, 10, 6, 77).hypergraph;
    CHECK(hypergraph_to_json(a).dump(2) == hypergraph_to_json(b).dump(2));
    CHECK(digest(hypergraph_to_json(a)) == digest(hypergraph_to_json(b)));
}
