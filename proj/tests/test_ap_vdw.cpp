#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hgcolor/ap_vdw.hpp"
#include "hgcolor/recolor.hpp"

using namespace hgcolor;

TEST_CASE("progression hypergraph generation") {
    const Hypergraph h39 = generate_ap_hypergraph({3, 9});
    CHECK(h39.edge_count() == 16);  // 7 + 5 + 3 + 1 over d = 1..4
    CHECK(h39.vertex_count() == 9);

    const Hypergraph h33 = generate_ap_hypergraph({3, 3});
    REQUIRE(h33.edge_count() == 1);
    CHECK(h33.edge(0) == std::vector<int>{0, 1, 2});

    const Hypergraph h47 = generate_ap_hypergraph({4, 7});
    CHECK(h47.edge_count() == 5);  // d = 1: 4 starts, d = 2: 1 start

    CHECK_THROWS_AS(generate_ap_hypergraph({2, 9}), ValidationError);
    CHECK_THROWS_AS(generate_ap_hypergraph({4, 3}), ValidationError);
}

TEST_CASE("edge count closed form matches enumeration") {
    for (int n = 3; n <= 5; ++n) {
        for (int M = n; M <= 60; ++M) {
            CHECK(ap_edge_count_closed_form(n, M) ==
                  generate_ap_hypergraph({n, M}).edge_count());
        }
    }
}

TEST_CASE("progression degree properties at small sizes") {
    const APPropsReport r39 = validate_ap_props({3, 9});
    CHECK(r39.all_ok);
    CHECK(r39.max_codegree <= 9);
    // the middle vertex 5 (0-based 4) lies on 8 progressions
    const Hypergraph h39 = generate_ap_hypergraph({3, 9});
    int degree_of_center = 0;
    for (int i = 0; i < h39.edge_count(); ++i) {
        degree_of_center += h39.edge_contains(i, 4) ? 1 : 0;
    }
    CHECK(degree_of_center == 8);

    CHECK(validate_ap_props({3, 3}).all_ok);

    CHECK_THROWS_AS(validate_ap_props({3, 501}), ResourceError);
}

TEST_CASE("properties hold on a spread of intervals") {
    for (int n = 3; n <= 4; ++n) {
        for (int M : {n, 2 * n, 17, 40, 80}) {
            if (M < n) continue;
            CHECK(validate_ap_props({n, M}).all_ok);
        }
    }
    for (int M : {5, 10, 40, 80}) {
        const APPropsReport report = validate_ap_props({5, M});
        CHECK(report.vertex_degree_ok);
        CHECK(report.codegree_ok);
        CHECK(report.two_intersections_ok);
        CHECK(report.edge_degree_ok);
    }
}

TEST_CASE("the long-overlap constant fails for five-term progressions") {
    // 5-term progressions with differences d and 2d share three points
    // without forming one longer progression, so the (3n/2)^2 count is
    // exceeded once the interval is long enough: 58 pairs through the
    // extremal vertex pair of [61], over the claimed 56.25
    const APPropsReport report = validate_ap_props({5, 61});
    CHECK(report.max_long_overlap_pairs == 58);
    CHECK_FALSE(report.long_overlap_ok);
    CHECK(report.vertex_degree_ok);
    CHECK(report.codegree_ok);
    CHECK(report.two_intersections_ok);
    CHECK(report.edge_degree_ok);

    // with equal differences forced (n = 3, 4 stay in range), the claim
    // holds across the whole desk-scale sweep
    CHECK(validate_ap_props({5, 55}).long_overlap_ok);  // still under at M = 55
}

TEST_CASE("exact Van der Waerden values") {
    const VdWResult w32 = vdw_exact(3, 2);
    REQUIRE(w32.exact_value.has_value());
    CHECK(*w32.exact_value == 9);
    CHECK(w32.complete);
    REQUIRE(w32.witness.has_value());
    CHECK(w32.witness->size() == 8);
    const Hypergraph h38 = generate_ap_hypergraph({3, 8});
    CHECK(verify_proper(h38, *w32.witness).outcome == Outcome::Proper);
}

TEST_CASE("exact search returns a flagged partial result on tiny budgets") {
    const VdWResult partial = vdw_exact(4, 2, 50);
    CHECK_FALSE(partial.complete);
    CHECK_FALSE(partial.exact_value.has_value());
}

TEST_CASE("randomized harness on colorable and uncolorable intervals") {
    // W(3,2) = 9: the interval [8] is colorable and trials find witnesses
    const VdWResult sat = vdw_randomized(3, 2, 8, 400, 0.45, 11);
    CHECK(sat.successes >= 1);
    REQUIRE(sat.witness.has_value());
    CHECK(verify_proper(generate_ap_hypergraph({3, 8}), *sat.witness).outcome ==
          Outcome::Proper);

    // the interval [9] is not 2-colorable, so no trial can ever succeed
    const VdWResult unsat = vdw_randomized(3, 2, 9, 400, 0.45, 11);
    CHECK(unsat.successes == 0);
    CHECK_FALSE(unsat.witness.has_value());
    CHECK_FALSE(solve_ap_coloring(3, 2, 9, 1'000'000).has_value());

    // intervals shorter than the progression length succeed vacuously
    const VdWResult vacuous = vdw_randomized(4, 2, 3, 10, 0.3, 1);
    CHECK(vacuous.successes == 10);

    // determinism across thread counts
    const VdWResult serial = vdw_randomized(3, 2, 8, 300, 0.45, 5, 1);
    const VdWResult parallel = vdw_randomized(3, 2, 8, 300, 0.45, 5, 4);
    CHECK(serial.successes == parallel.successes);
    CHECK(serial.witness == parallel.witness);
}

TEST_CASE("bound table stays below certified values") {
    const auto rows = bound_vs_exact_table({{3, 2}, {4, 2}}, 100'000'000LL);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].exact_value == 9);
    CHECK(rows[0].consistent);
    CHECK(rows[0].computed_lower <= 9.0);
    CHECK(rows[1].exact_value == 35);
    CHECK(rows[1].consistent);
    CHECK(rows[1].computed_lower <= 35.0);

    CHECK(bound_vs_exact_table({}).empty());
}
