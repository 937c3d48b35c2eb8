#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "hgcolor/hypergraph.hpp"

using namespace hgcolor;

namespace {

// independent simplicity oracle: mark membership per edge, count overlaps
bool brute_simple(const Hypergraph& h) {
    for (int i = 0; i < h.edge_count(); ++i) {
        for (int j = i + 1; j < h.edge_count(); ++j) {
            std::set<int> a(h.edge(i).begin(), h.edge(i).end());
            int shared = 0;
            for (int v : h.edge(j)) shared += a.count(v) ? 1 : 0;
            if (shared >= 2) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("construction validates and canonicalizes") {
    Hypergraph h(3, 5, {{4, 2, 0}, {1, 2, 3}});
    CHECK(h.edge(0) == std::vector<int>{0, 2, 4});  // sorted edge, sorted list
    CHECK(h.edge(1) == std::vector<int>{1, 2, 3});

    CHECK_THROWS_AS(Hypergraph(3, 5, {{0, 1}}), ValidationError);
    CHECK_THROWS_AS(Hypergraph(3, 5, {{0, 1, 5}}), ValidationError);
    CHECK_THROWS_AS(Hypergraph(3, 5, {{0, 1, 1}}), ValidationError);
    CHECK_THROWS_AS(Hypergraph(3, 5, {{0, 1, 2}, {2, 1, 0}}), ValidationError);
    CHECK_THROWS_AS(Hypergraph(1, 5, {}), ValidationError);
}

TEST_CASE("check_simple: fano is simple, shared pairs are reported") {
    const Hypergraph fano = gen_named("fano");
    const SimplicityReport report = check_simple(fano);
    CHECK(report.is_simple);
    CHECK(brute_simple(fano));

    const Hypergraph clash(3, 5, {{0, 1, 2}, {0, 1, 3}});
    const SimplicityReport bad = check_simple(clash);
    REQUIRE_FALSE(bad.is_simple);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].edge_a == 0);
    CHECK(bad.violations[0].edge_b == 1);
    CHECK(bad.violations[0].shared == 2);

    CHECK(check_simple(Hypergraph(3, 3, {{0, 1, 2}})).is_simple);
}

TEST_CASE("degree_profile on the fixtures") {
    const DegreeProfile fano = degree_profile(gen_named("fano"));
    CHECK(fano.max_edge_degree == 6);  // every line meets all six others
    CHECK(fano.max_vertex_degree == 3);
    for (int d : fano.per_vertex_degrees) CHECK(d == 3);

    CHECK(degree_profile(gen_named("disjoint(2)")).max_edge_degree == 0);
    CHECK(degree_profile(gen_named("path(3)")).max_edge_degree == 2);
}

TEST_CASE("codegree") {
    const Hypergraph fano = gen_named("fano");
    for (int u = 0; u < 7; ++u) {
        for (int v = u + 1; v < 7; ++v) CHECK(codegree(fano, u, v) == 1);
    }
    CHECK(codegree(gen_named("disjoint(2)"), 0, 3) == 0);
    CHECK(codegree(Hypergraph(3, 5, {{0, 1, 2}, {0, 1, 3}}), 0, 1) == 2);
    CHECK_THROWS_AS(codegree(fano, 2, 2), ValidationError);
}

TEST_CASE("codegree never exceeds either vertex degree") {
    const auto h = gen_random_simple(3, 12, 14, 6, 99).hypergraph;
    const auto degrees = degree_profile(h).per_vertex_degrees;
    for (int u = 0; u < h.vertex_count(); ++u) {
        for (int v = u + 1; v < h.vertex_count(); ++v) {
            CHECK(codegree(h, u, v) <= std::min(degrees[static_cast<size_t>(u)],
                                                degrees[static_cast<size_t>(v)]));
        }
    }
}

TEST_CASE("trim drops a max-degree vertex, smallest id on ties") {
    const Hypergraph single(3, 4, {{1, 2, 3}});
    const Hypergraph trimmed = trim(single);
    CHECK(trimmed.n() == 2);
    CHECK(trimmed.edge(0) == std::vector<int>{2, 3});  // tie broken at vertex 1

    // middle vertex has degree 2 and is removed from both edges
    const Hypergraph chain(3, 5, {{0, 1, 2}, {2, 3, 4}});
    const Hypergraph chain_trimmed = trim(chain);
    CHECK(chain_trimmed.edges() == std::vector<std::vector<int>>{{0, 1}, {3, 4}});

    const Hypergraph fano_trimmed = trim(gen_named("fano"));
    CHECK(fano_trimmed.n() == 2);
    CHECK(fano_trimmed.edge_count() == 7);
    CHECK(check_simple(fano_trimmed).is_simple);

    CHECK_THROWS_AS(trim(Hypergraph(2, 3, {{0, 1}})), ValidationError);
    // non-simple collision: both edges keep {1,2} after dropping vertex 0
    CHECK_THROWS_AS(trim(Hypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}, {0, 2, 3}})),
                    IntegrityError);
}

TEST_CASE("trim preserves simplicity on random instances") {
    int checked = 0;
    for (int n = 3; n <= 5; ++n) {
        for (std::uint64_t seed = 0; seed < 70; ++seed) {
            const auto h = gen_random_simple(n, 6 * n, 10, 5, seed * 31 + n).hypergraph;
            if (h.edge_count() == 0) continue;
            const Hypergraph t = trim(h);
            CHECK(check_simple(t).is_simple);
            ++checked;
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("gen_random_simple respects its contract") {
    const auto empty = gen_random_simple(3, 7, 0, 0, 5);
    CHECK(empty.hypergraph.edge_count() == 0);
    CHECK(empty.reached_target);

    const auto a = gen_random_simple(3, 9, 12, 6, 1);
    const auto b = gen_random_simple(3, 9, 12, 6, 1);
    CHECK(a.hypergraph.edges() == b.hypergraph.edges());  // determinism

    for (std::uint64_t seed : {7ULL, 8ULL, 9ULL}) {
        const auto result = gen_random_simple(4, 16, 10, 4, seed);
        CHECK(check_simple(result.hypergraph).is_simple);
        CHECK(degree_profile(result.hypergraph).max_edge_degree <= 4);
    }

    // 7 vertices cannot host 30 pairwise-disjoint triples: budget runs out
    const auto starved = gen_random_simple(3, 7, 30, 0, 3);
    CHECK_FALSE(starved.reached_target);
    CHECK(starved.attempts == 1000 * 30);

    // n = vertex_count leaves a single possible edge; the generator
    // saturates there and flags the shortfall
    const auto saturated = gen_random_simple(3, 3, 5, 0, 9);
    CHECK(saturated.hypergraph.edge_count() == 1);
    CHECK(saturated.hypergraph.edge(0) == std::vector<int>{0, 1, 2});
    CHECK_FALSE(saturated.reached_target);
}

TEST_CASE("edge degree agrees between pairwise and incidence routes") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto h = gen_random_simple(3, 14, 16, 8, seed).hypergraph;
        CHECK(degree_profile(h).max_edge_degree == max_edge_degree_incidence(h));
    }
    const Hypergraph overlap(3, 6, {{0, 1, 2}, {0, 1, 3}, {3, 4, 5}});
    CHECK(degree_profile(overlap).max_edge_degree == max_edge_degree_incidence(overlap));
}

TEST_CASE("named fixtures") {
    const Hypergraph path = gen_named("path(3)");
    CHECK(path.edge_count() == 3);
    CHECK(path.edges() == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});

    const Hypergraph disjoint = gen_named("disjoint(2)");
    CHECK(disjoint.edges() == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});

    CHECK(gen_named("complete_small").edge_count() == 10);
    CHECK_FALSE(check_simple(gen_named("complete_small")).is_simple);
    CHECK_THROWS_AS(gen_named("petersen"), ValidationError);
}
