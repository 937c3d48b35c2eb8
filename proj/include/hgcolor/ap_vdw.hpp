#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgcolor/hypergraph.hpp"

namespace hgcolor {

struct APHypergraphSpec {
    int n = 3;  // progression length, >= 3
    int M = 3;  // interval size, >= n
};

// Hypergraph on vertices 0..M-1 (the integers 1..M) whose edges are all
// length-n arithmetic progressions with difference >= 1.
Hypergraph generate_ap_hypergraph(const APHypergraphSpec& spec);

// Number of such progressions: sum over d >= 1 of max(0, M - (n-1) d).
long long ap_edge_count_closed_form(int n, int M);

struct APPropsReport {
    int n = 0;
    int M = 0;
    long long edge_count = 0;

    int max_vertex_degree = 0;       // bound: M
    int max_codegree = 0;            // bound: n^2
    int max_two_intersections = 0;   // per edge, partners sharing >= 2; bound: n^4/2
    int max_long_overlap_pairs = 0;  // per vertex pair; bound: (3n/2)^2
    int max_edge_degree = 0;         // bound: strictly below n*M

    bool vertex_degree_ok = false;
    bool codegree_ok = false;
    bool two_intersections_ok = false;
    bool long_overlap_ok = false;
    bool edge_degree_ok = false;
    bool all_ok = false;
};

// Brute-force validation of the degree and codegree properties of the
// progression hypergraph. Desk scale; M above the cap raises
// ResourceError.
APPropsReport validate_ap_props(const APHypergraphSpec& spec, int max_M = 500);

enum class VdWMode { Randomized, Exact };

struct VdWResult {
    VdWMode mode = VdWMode::Randomized;
    int n = 0;
    int r = 0;
    int M = 0;  // interval probed (randomized) or the exact value (exact)
    long long trials = 0;
    long long successes = 0;
    std::optional<std::vector<int>> witness;  // proper coloring; exact mode: of [M-1]
    std::optional<int> exact_value;
    long long nodes_visited = 0;
    bool complete = true;  // false when the search budget ran out
};

// Runs the recoloring algorithm on the progression hypergraph; any
// success certifies that the interval is r-colorable. The first witness
// (by trial index) is re-verified and reported. Thread count never
// changes the result.
VdWResult vdw_randomized(int n, int r, int M, long long trials, double p,
                         std::uint64_t seed, int threads = 1);

// Backtracking with monochromatic-progression propagation, increasing M
// until no proper coloring exists. Exhausting the node budget yields a
// flagged partial result (a lower bound with its witness).
VdWResult vdw_exact(int n, int r, long long budget = 4'000'000'000LL);

// Decides r-colorability of the interval [1..M] directly; exposed so the
// randomized harness can be cross-checked against exhaustive search.
std::optional<std::vector<int>> solve_ap_coloring(int n, int r, int M,
                                                  long long budget,
                                                  long long* nodes_used = nullptr);

struct BoundVsExactRow {
    int n = 0;
    int r = 0;
    double computed_lower = 0.0;     // from the admissible-degree search
    std::optional<int> exact_value;  // from vdw_exact when it finishes
    bool consistent = true;          // lower bound never beats a certified value
};

std::vector<BoundVsExactRow> bound_vs_exact_table(
    const std::vector<std::pair<int, int>>& cases, long long budget = 4'000'000'000LL);

}  // namespace hgcolor
