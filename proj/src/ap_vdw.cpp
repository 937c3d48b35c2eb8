#include "hgcolor/ap_vdw.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include "hgcolor/local_lemma.hpp"
#include "hgcolor/parallel.hpp"
#include "hgcolor/recolor.hpp"
#include "hgcolor/rng.hpp"

namespace hgcolor {

Hypergraph generate_ap_hypergraph(const APHypergraphSpec& spec) {
    if (spec.n < 3) throw ValidationError("progression length must be at least 3");
    if (spec.M < spec.n) throw ValidationError("interval must fit one progression");
    std::vector<std::vector<int>> edges;
    for (int d = 1; (spec.n - 1) * d <= spec.M - 1; ++d) {
        for (int a = 1; a + (spec.n - 1) * d <= spec.M; ++a) {
            std::vector<int> edge;
            edge.reserve(static_cast<size_t>(spec.n));
            for (int k = 0; k < spec.n; ++k) edge.push_back(a + k * d - 1);
            edges.push_back(std::move(edge));
        }
    }
    return Hypergraph(spec.n, spec.M, std::move(edges));
}

long long ap_edge_count_closed_form(int n, int M) {
    long long total = 0;
    for (int d = 1; (n - 1) * d < M; ++d) {
        total += std::max(0, M - (n - 1) * d);
    }
    return total;
}

APPropsReport validate_ap_props(const APHypergraphSpec& spec, int max_M) {
    if (spec.M > max_M) {
        throw ResourceError("interval size " + std::to_string(spec.M) +
                            " exceeds the validation cap " + std::to_string(max_M));
    }
    const Hypergraph h = generate_ap_hypergraph(spec);
    const int n = spec.n;
    const int M = spec.M;
    const int m = h.edge_count();

    APPropsReport report;
    report.n = n;
    report.M = M;
    report.edge_count = m;

    const auto incidence = h.incidence();
    for (const auto& edges_of_v : incidence) {
        report.max_vertex_degree =
            std::max(report.max_vertex_degree, static_cast<int>(edges_of_v.size()));
    }

    // codegrees via the pairs inside each edge
    std::map<std::pair<int, int>, std::vector<int>> edges_of_pair;
    for (int i = 0; i < m; ++i) {
        const auto& e = h.edge(i);
        for (size_t a = 0; a < e.size(); ++a) {
            for (size_t b = a + 1; b < e.size(); ++b) {
                edges_of_pair[{e[a], e[b]}].push_back(i);
            }
        }
    }
    for (const auto& [key, list] : edges_of_pair) {
        report.max_codegree = std::max(report.max_codegree, static_cast<int>(list.size()));
    }

    // distinct edge pairs sharing >= 2 vertices, each processed once at
    // its smallest shared vertex pair
    std::vector<int> two_partners(static_cast<size_t>(m), 0);
    std::vector<std::pair<int, int>> big_overlap_pairs;  // |intersection| > n/2
    for (const auto& [key, list] : edges_of_pair) {
        for (size_t a = 0; a < list.size(); ++a) {
            for (size_t b = a + 1; b < list.size(); ++b) {
                const int f = list[a];
                const int g = list[b];
                std::vector<int> common;
                std::set_intersection(h.edge(f).begin(), h.edge(f).end(),
                                      h.edge(g).begin(), h.edge(g).end(),
                                      std::back_inserter(common));
                if (std::pair<int, int>(common[0], common[1]) != key) continue;
                two_partners[static_cast<size_t>(f)]++;
                two_partners[static_cast<size_t>(g)]++;
                if (2 * static_cast<int>(common.size()) > n) {
                    big_overlap_pairs.push_back({f, g});
                }
            }
        }
    }
    for (int c : two_partners) report.max_two_intersections = std::max(report.max_two_intersections, c);

    // for distinct vertices (v1, v2): unordered pairs of distinct edges
    // {f, g} with a big overlap such that one edge holds v1 and the other
    // holds v2; each pair counts once even when both labelings fit
    std::vector<int> overlap_counts(static_cast<size_t>(M) * static_cast<size_t>(M), 0);
    std::set<long long> seen;
    for (const auto& [f, g] : big_overlap_pairs) {
        seen.clear();
        auto credit = [&](int a, int b) {
            for (int v1 : h.edge(a)) {
                for (int v2 : h.edge(b)) {
                    if (v1 == v2) continue;
                    const long long key = static_cast<long long>(v1) * M + v2;
                    if (seen.insert(key).second) {
                        overlap_counts[static_cast<size_t>(key)]++;
                    }
                }
            }
        };
        credit(f, g);
        credit(g, f);
    }
    for (int c : overlap_counts) report.max_long_overlap_pairs = std::max(report.max_long_overlap_pairs, c);

    report.max_edge_degree = max_edge_degree_incidence(h);

    report.vertex_degree_ok = report.max_vertex_degree <= M;
    report.codegree_ok = report.max_codegree <= n * n;
    report.two_intersections_ok = 2 * report.max_two_intersections <= n * n * n * n;
    report.long_overlap_ok = 4 * report.max_long_overlap_pairs <= 9 * n * n;
    report.edge_degree_ok = report.max_edge_degree < n * M;
    report.all_ok = report.vertex_degree_ok && report.codegree_ok &&
                    report.two_intersections_ok && report.long_overlap_ok &&
                    report.edge_degree_ok;
    return report;
}

VdWResult vdw_randomized(int n, int r, int M, long long trials, double p,
                         std::uint64_t seed, int threads) {
    if (trials < 1) throw ValidationError("need at least one trial");
    if (r < 2) throw ValidationError("need at least 2 colors");
    VdWResult result;
    result.mode = VdWMode::Randomized;
    result.n = n;
    result.r = r;
    result.M = M;
    result.trials = trials;
    if (M < n) {
        // no progression fits; every coloring works
        result.successes = trials;
        result.witness = std::vector<int>(static_cast<size_t>(std::max(M, 0)), 0);
        return result;
    }
    const Hypergraph h = generate_ap_hypergraph({n, M});
    std::vector<char> success(static_cast<size_t>(trials), 0);
    parallel_for(trials, threads, [&](long long t) {
        const RunInput input =
            sample_input(h, r, p, derive_seed(seed, static_cast<std::uint64_t>(t)));
        const RunTrace trace = run_recolor(h, input);
        success[static_cast<size_t>(t)] = trace.outcome == Outcome::Proper ? 1 : 0;
    });
    long long first_success = -1;
    for (long long t = 0; t < trials; ++t) {
        if (success[static_cast<size_t>(t)]) {
            result.successes++;
            if (first_success < 0) first_success = t;
        }
    }
    if (first_success >= 0) {
        // re-derive the witness from its trial seed and re-verify it
        const RunInput input = sample_input(
            h, r, p, derive_seed(seed, static_cast<std::uint64_t>(first_success)));
        const RunTrace trace = run_recolor(h, input);
        if (verify_proper(h, trace.final_coloring).outcome != Outcome::Proper) {
            throw IntegrityError("witness failed re-verification");
        }
        result.witness = trace.final_coloring;
    }
    return result;
}

namespace {

// progressions listed by their largest element, for incremental conflict
// checks while vertices are assigned in increasing order
std::vector<std::vector<std::vector<int>>> progressions_ending_at(int n, int M) {
    std::vector<std::vector<std::vector<int>>> table(static_cast<size_t>(M));
    for (int d = 1; (n - 1) * d <= M - 1; ++d) {
        for (int a = 1; a + (n - 1) * d <= M; ++a) {
            const int last = a + (n - 1) * d;
            std::vector<int> earlier;
            earlier.reserve(static_cast<size_t>(n - 1));
            for (int k = 0; k < n - 1; ++k) earlier.push_back(a + k * d - 1);
            table[static_cast<size_t>(last - 1)].push_back(std::move(earlier));
        }
    }
    return table;
}

bool extend_coloring(const std::vector<std::vector<std::vector<int>>>& ending,
                     std::vector<int>& colors, int vertex, int r, long long budget,
                     long long& nodes, bool& budget_hit) {
    if (vertex == static_cast<int>(colors.size())) return true;
    if (++nodes > budget) {
        budget_hit = true;
        return false;
    }
    // color permutations are interchangeable, so the first vertex only
    // needs one branch
    const int limit = vertex == 0 ? 1 : r;
    for (int c = 0; c < limit; ++c) {
        colors[static_cast<size_t>(vertex)] = c;
        bool conflict = false;
        for (const auto& earlier : ending[static_cast<size_t>(vertex)]) {
            bool mono = true;
            for (int u : earlier) {
                if (colors[static_cast<size_t>(u)] != c) {
                    mono = false;
                    break;
                }
            }
            if (mono) {
                conflict = true;
                break;
            }
        }
        if (!conflict &&
            extend_coloring(ending, colors, vertex + 1, r, budget, nodes, budget_hit)) {
            return true;
        }
        if (budget_hit) break;
    }
    colors[static_cast<size_t>(vertex)] = -1;
    return false;
}

}  // namespace

std::optional<std::vector<int>> solve_ap_coloring(int n, int r, int M,
                                                  long long budget,
                                                  long long* nodes_used) {
    if (n < 3 || r < 2 || M < 1) throw ValidationError("bad search parameters");
    std::vector<int> colors(static_cast<size_t>(M), -1);
    const auto ending = progressions_ending_at(n, M);
    long long nodes = 0;
    bool budget_hit = false;
    const bool found = extend_coloring(ending, colors, 0, r, budget, nodes, budget_hit);
    if (nodes_used) *nodes_used = nodes;
    if (budget_hit) throw ResourceError("coloring search exceeded its node budget");
    if (!found) return std::nullopt;
    return colors;
}

VdWResult vdw_exact(int n, int r, long long budget) {
    if (n < 3) throw ValidationError("progression length must be at least 3");
    if (r < 2) throw ValidationError("need at least 2 colors");
    VdWResult result;
    result.mode = VdWMode::Exact;
    result.n = n;
    result.r = r;
    long long remaining = budget;
    std::vector<int> last_witness;
    for (int M = n;; ++M) {
        long long nodes = 0;
        std::optional<std::vector<int>> witness;
        try {
            witness = solve_ap_coloring(n, r, M, remaining, &nodes);
        } catch (const ResourceError&) {
            result.M = M - 1;
            if (!last_witness.empty()) result.witness = last_witness;
            result.complete = false;
            return result;  // lower bound only: W(n, r) > M - 1
        }
        result.nodes_visited += nodes;
        remaining -= nodes;
        if (!witness) {
            result.M = M;
            result.exact_value = M;
            if (!last_witness.empty()) result.witness = last_witness;
            return result;
        }
        last_witness = *witness;
    }
}

std::vector<BoundVsExactRow> bound_vs_exact_table(
    const std::vector<std::pair<int, int>>& cases, long long budget) {
    std::vector<BoundVsExactRow> rows;
    for (const auto& [n, r] : cases) {
        BoundVsExactRow row;
        row.n = n;
        row.r = r;
        const double p = default_free_threshold(n);
        const AdmissibleSearch search = max_admissible_D(n, r, p, PolyVariant::AP);
        // a colorable interval of size M certifies W(n, r) > M
        row.computed_lower = search.vdw_m_bound + 1.0;
        const VdWResult exact = vdw_exact(n, r, budget);
        if (exact.complete) row.exact_value = exact.exact_value;
        if (row.exact_value) {
            row.consistent = row.computed_lower <= static_cast<double>(*row.exact_value);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hgcolor
