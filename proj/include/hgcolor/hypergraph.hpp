#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgcolor/errors.hpp"

namespace hgcolor {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b);

// n-uniform hypergraph on dense 0-based vertex ids.
//
// The representation is canonical: each edge is sorted ascending and the
// edge list is sorted lexicographically, regardless of construction
// order. Edge indices therefore survive a write/read round trip.
// Instances are immutable after construction and safe to share across
// threads.
class Hypergraph {
public:
    Hypergraph(int n, int vertex_count, std::vector<std::vector<int>> edges);

    int n() const { return n_; }
    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& edge(int i) const { return edges_[static_cast<size_t>(i)]; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    bool edge_contains(int edge_index, int v) const;

    // vertex -> indices of edges containing it
    std::vector<std::vector<int>> incidence() const;

private:
    int n_;
    int vertex_count_;
    std::vector<std::vector<int>> edges_;
};

struct SimplicityReport {
    struct Violation {
        int edge_a;
        int edge_b;
        int shared;
    };
    bool is_simple = true;
    std::vector<Violation> violations;
};

struct DegreeProfile {
    int max_edge_degree = 0;
    int max_vertex_degree = 0;
    std::vector<int> per_vertex_degrees;
};

// Reports every unordered edge pair sharing >= 2 vertices.
SimplicityReport check_simple(const Hypergraph& h);

// Edge degrees by exact pairwise intersection, vertex degrees by scan.
DegreeProfile degree_profile(const Hypergraph& h);

// Same quantity as degree_profile().max_edge_degree, computed through the
// vertex->edge incidence instead of pairwise intersections. Linear-ish,
// used on large instances and as a consistency cross-check.
int max_edge_degree_incidence(const Hypergraph& h);

// Number of edges containing both u and v. Throws for u == v.
int codegree(const Hypergraph& h, int u, int v);

// Removes from every edge one vertex of maximum degree (smallest id on
// ties), giving an (n-1)-uniform hypergraph on the same vertex set.
// Requires n >= 3. Colliding trimmed edges raise IntegrityError; this
// cannot happen when h is simple.
Hypergraph trim(const Hypergraph& h);

struct RandomGenResult {
    Hypergraph hypergraph;
    bool reached_target = true;  // false: attempt budget ran out first
    long long attempts = 0;
};

// Rejection sampling: draw uniform n-subsets, keep those that preserve
// simplicity and the edge-degree cap. Deterministic per seed. The attempt
// budget is 1000 * edge_target draws; running out is flagged, never
// silent.
RandomGenResult gen_random_simple(int n, int vertex_count, int edge_target,
                                  int degree_cap, std::uint64_t seed);

// Canonical fixtures: "fano", "path(k)", "disjoint(k)", "triangle",
// "complete_small". Unknown names raise ValidationError.
Hypergraph gen_named(const std::string& name);

}  // namespace hgcolor
