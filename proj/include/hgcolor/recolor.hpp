#pragma once

#include <cstdint>
#include <vector>

#include "hgcolor/hypergraph.hpp"

namespace hgcolor {

// Random input of one run: initial coloring, injective weights, the free
// threshold and the number of colors.
struct RunInput {
    int r = 2;
    double p = 0.5;
    std::vector<int> c0;        // vertex -> initial color in [0, r)
    std::vector<double> sigma;  // vertex -> weight in (0, 1], pairwise distinct

    bool is_free(int v) const { return sigma[static_cast<size_t>(v)] <= p; }
};

// Throws ValidationError unless input matches h and its own invariants.
void validate_input(const Hypergraph& h, const RunInput& input);

// p = min(5 ln(n) / n, 0.49); the asymptotic choice clamped into the
// algorithm's domain for small n.
double default_free_threshold(int n);

enum class EdgeKind { Safe, Dangerous };

struct EdgeClassification {
    EdgeKind kind = EdgeKind::Safe;
    int dominating_color = -1;  // meaningful iff kind == Dangerous
    bool degenerate = false;    // at least n/2 free vertices
    int free_count = 0;
    // all-free edge admitting more than one dominating color; the
    // smallest qualifying color is reported
    bool ambiguous_dominating = false;
};

// Verdict for one edge under an input: Dangerous(i) when every non-free
// vertex has initial color i and every free vertex has initial color i or
// (i-1) mod r; Safe otherwise. Degeneracy is flagged independently.
EdgeClassification classify_edge(const Hypergraph& h, int edge_index,
                                 const RunInput& input);

// The main loop leaves the choice of edge open; these two pinned orders
// let schedule independence be tested. Ties between edges sharing the
// same pending vertex break toward the smaller edge index.
enum class SchedulePolicy {
    MinSigma,   // eligible edge whose pending vertex has minimum weight
    InputOrder  // eligible edge with the smallest index
};

enum class Algorithm { Recolor, ListRecolor };

struct TraceEvent {
    int step;
    int vertex;
    int old_color;
    int new_color;
    int blamed_edge;  // the monochromatic edge that caused the recoloring
};

enum class Outcome { Proper, Failed };

struct RunTrace {
    Algorithm algorithm = Algorithm::Recolor;
    std::vector<TraceEvent> events;
    std::vector<int> final_coloring;
    Outcome outcome = Outcome::Proper;
    std::vector<int> monochromatic_edges;  // nonempty iff Failed
};

// Uniform initial coloring plus injective uniform weights; deterministic
// per seed. Requires r >= 2 and p in (0, 1).
RunInput sample_input(const Hypergraph& h, int r, double p, std::uint64_t seed);

// While some monochromatic edge has a free first non-recolored vertex,
// recolor that vertex by +1 mod r. Every vertex moves at most once.
RunTrace run_recolor(const Hypergraph& h, const RunInput& input,
                     SchedulePolicy policy = SchedulePolicy::MinSigma);

struct ListAssignment {
    std::vector<std::vector<int>> lists;  // vertex -> r distinct color ids
};

// Same loop as run_recolor, but the new color is drawn uniformly from
// L(v) minus the current color. Requires c0(v) in L(v) everywhere.
RunTrace run_list_recolor(const Hypergraph& h, const ListAssignment& lists,
                          const RunInput& input, std::uint64_t seed,
                          SchedulePolicy policy = SchedulePolicy::MinSigma);

struct ProperCheck {
    Outcome outcome = Outcome::Proper;
    std::vector<int> monochromatic_edges;
};

// Exact scan listing all monochromatic edges. The coloring must assign
// a nonnegative color to every vertex.
ProperCheck verify_proper(const Hypergraph& h, const std::vector<int>& coloring);

struct SuccessEstimate {
    long long trials = 0;
    long long successes = 0;
    double fraction = 0.0;
    double wilson_low = 0.0;
    double wilson_high = 1.0;
};

// Independent sample_input + run_recolor trials with per-trial seeds;
// the result does not depend on the thread count.
SuccessEstimate estimate_success(const Hypergraph& h, int r, double p,
                                 long long trials, std::uint64_t seed,
                                 int threads = 1);

}  // namespace hgcolor
