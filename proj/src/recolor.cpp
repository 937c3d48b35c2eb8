#include "hgcolor/recolor.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hgcolor/parallel.hpp"
#include "hgcolor/rng.hpp"

namespace hgcolor {

void validate_input(const Hypergraph& h, const RunInput& input) {
    if (input.r < 2) throw ValidationError("need at least 2 colors");
    if (!(input.p > 0.0 && input.p < 1.0)) {
        throw ValidationError("free threshold p must lie in (0, 1)");
    }
    const size_t nv = static_cast<size_t>(h.vertex_count());
    if (input.c0.size() != nv) throw ValidationError("initial coloring size mismatch");
    if (input.sigma.size() != nv) throw ValidationError("weight assignment size mismatch");
    for (int c : input.c0) {
        if (c < 0 || c >= input.r) throw ValidationError("initial color out of range");
    }
    std::vector<double> sorted = input.sigma;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (!(sorted[i] > 0.0 && sorted[i] <= 1.0)) {
            throw ValidationError("weights must lie in (0, 1]");
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw ValidationError("weights must be pairwise distinct");
        }
    }
}

double default_free_threshold(int n) {
    return std::min(5.0 * std::log(static_cast<double>(n)) / n, 0.49);
}

RunInput sample_input(const Hypergraph& h, int r, double p, std::uint64_t seed) {
    if (r < 2) throw ValidationError("need at least 2 colors");
    if (!(p > 0.0 && p < 1.0)) throw ValidationError("free threshold p must lie in (0, 1)");
    Rng rng(seed);
    RunInput input;
    input.r = r;
    input.p = p;
    const int nv = h.vertex_count();
    input.c0.resize(static_cast<size_t>(nv));
    input.sigma.resize(static_cast<size_t>(nv));
    for (int v = 0; v < nv; ++v) input.c0[static_cast<size_t>(v)] = rng.below(r);
    for (int v = 0; v < nv; ++v) input.sigma[static_cast<size_t>(v)] = rng.unit_open_closed();
    // resample exact collisions so injectivity is an invariant, not a hope
    for (bool injective = false; !injective;) {
        std::vector<double> sorted = input.sigma;
        std::sort(sorted.begin(), sorted.end());
        injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        if (!injective) {
            std::set<double> seen;
            for (auto& w : input.sigma) {
                while (!seen.insert(w).second) w = rng.unit_open_closed();
            }
        }
    }
    return input;
}

EdgeClassification classify_edge(const Hypergraph& h, int edge_index,
                                 const RunInput& input) {
    const auto& e = h.edge(edge_index);
    const int n = h.n();
    const int r = input.r;
    EdgeClassification result;
    for (int v : e) {
        if (input.is_free(v)) ++result.free_count;
    }
    result.degenerate = 2 * result.free_count >= n;

    auto qualifies = [&](int i) {
        const int prev = (i + r - 1) % r;
        for (int v : e) {
            const int c = input.c0[static_cast<size_t>(v)];
            if (input.is_free(v)) {
                if (c != i && c != prev) return false;
            } else {
                if (c != i) return false;
            }
        }
        return true;
    };

    if (result.free_count < n) {
        // a non-free vertex exists; only its color can dominate
        int common = -1;
        bool consistent = true;
        for (int v : e) {
            if (!input.is_free(v)) {
                const int c = input.c0[static_cast<size_t>(v)];
                if (common == -1) {
                    common = c;
                } else if (common != c) {
                    consistent = false;
                    break;
                }
            }
        }
        if (consistent && qualifies(common)) {
            result.kind = EdgeKind::Dangerous;
            result.dominating_color = common;
        }
    } else {
        int found = 0;
        for (int i = 0; i < r; ++i) {
            if (qualifies(i)) {
                if (found == 0) {
                    result.kind = EdgeKind::Dangerous;
                    result.dominating_color = i;
                }
                ++found;
            }
        }
        result.ambiguous_dominating = found > 1;
    }
    return result;
}

namespace {

struct RunState {
    std::vector<int> colors;
    std::vector<char> recolored;
    // per edge: vertices ordered by ascending weight, plus a cursor to the
    // first not-yet-recolored one (monotone, recoloring never reverts)
    std::vector<std::vector<int>> by_weight;
    std::vector<size_t> cursor;
};

RunState init_state(const Hypergraph& h, const RunInput& input) {
    RunState s;
    s.colors = input.c0;
    s.recolored.assign(static_cast<size_t>(h.vertex_count()), 0);
    s.by_weight.resize(static_cast<size_t>(h.edge_count()));
    s.cursor.assign(static_cast<size_t>(h.edge_count()), 0);
    for (int i = 0; i < h.edge_count(); ++i) {
        auto order = h.edge(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return input.sigma[static_cast<size_t>(a)] < input.sigma[static_cast<size_t>(b)];
        });
        s.by_weight[static_cast<size_t>(i)] = std::move(order);
    }
    return s;
}

bool edge_monochromatic(const Hypergraph& h, const std::vector<int>& colors, int i) {
    const auto& e = h.edge(i);
    const int c = colors[static_cast<size_t>(e[0])];
    for (int v : e) {
        if (colors[static_cast<size_t>(v)] != c) return false;
    }
    return true;
}

// first non-recolored vertex of edge i, or -1 when all moved already
int pending_vertex(RunState& s, int i) {
    auto& order = s.by_weight[static_cast<size_t>(i)];
    auto& cur = s.cursor[static_cast<size_t>(i)];
    while (cur < order.size() && s.recolored[static_cast<size_t>(order[cur])]) ++cur;
    return cur < order.size() ? order[cur] : -1;
}

template <typename PickColor>
RunTrace run_loop(const Hypergraph& h, const RunInput& input,
                  SchedulePolicy policy, Algorithm algorithm,
                  PickColor&& pick_color) {
    validate_input(h, input);
    RunState s = init_state(h, input);
    RunTrace trace;
    trace.algorithm = algorithm;

    for (int step = 0;; ++step) {
        int chosen_edge = -1;
        int chosen_vertex = -1;
        for (int i = 0; i < h.edge_count(); ++i) {
            if (!edge_monochromatic(h, s.colors, i)) continue;
            const int v = pending_vertex(s, i);
            if (v < 0 || !input.is_free(v)) continue;
            if (chosen_edge < 0) {
                chosen_edge = i;
                chosen_vertex = v;
            } else if (policy == SchedulePolicy::MinSigma &&
                       input.sigma[static_cast<size_t>(v)] <
                           input.sigma[static_cast<size_t>(chosen_vertex)]) {
                chosen_edge = i;
                chosen_vertex = v;
            }
            // InputOrder keeps the first hit; MinSigma keeps the smallest
            // weight and, on the shared-vertex tie, the smaller index.
        }
        if (chosen_edge < 0) break;

        const int old_color = s.colors[static_cast<size_t>(chosen_vertex)];
        const int new_color = pick_color(chosen_vertex, old_color);
        s.colors[static_cast<size_t>(chosen_vertex)] = new_color;
        s.recolored[static_cast<size_t>(chosen_vertex)] = 1;
        trace.events.push_back({step, chosen_vertex, old_color, new_color, chosen_edge});
    }

    trace.final_coloring = std::move(s.colors);
    for (int i = 0; i < h.edge_count(); ++i) {
        if (edge_monochromatic(h, trace.final_coloring, i)) {
            trace.monochromatic_edges.push_back(i);
        }
    }
    trace.outcome = trace.monochromatic_edges.empty() ? Outcome::Proper : Outcome::Failed;
    return trace;
}

}  // namespace

RunTrace run_recolor(const Hypergraph& h, const RunInput& input, SchedulePolicy policy) {
    return run_loop(h, input, policy, Algorithm::Recolor,
                    [&](int, int old_color) { return (old_color + 1) % input.r; });
}

RunTrace run_list_recolor(const Hypergraph& h, const ListAssignment& lists,
                          const RunInput& input, std::uint64_t seed,
                          SchedulePolicy policy) {
    const size_t nv = static_cast<size_t>(h.vertex_count());
    if (lists.lists.size() != nv) throw ValidationError("list assignment size mismatch");
    for (size_t v = 0; v < nv; ++v) {
        const auto& list = lists.lists[v];
        if (static_cast<int>(list.size()) != input.r) {
            throw ValidationError("every list must have exactly r colors");
        }
        if (std::set<int>(list.begin(), list.end()).size() != list.size()) {
            throw ValidationError("list colors must be distinct");
        }
        if (std::find(list.begin(), list.end(), input.c0[v]) == list.end()) {
            throw ValidationError("initial color of vertex " + std::to_string(v) +
                                  " is not in its list");
        }
    }
    Rng rng(seed);
    return run_loop(h, input, policy, Algorithm::ListRecolor,
                    [&](int vertex, int old_color) {
                        std::vector<int> options;
                        for (int c : lists.lists[static_cast<size_t>(vertex)]) {
                            if (c != old_color) options.push_back(c);
                        }
                        return options[static_cast<size_t>(
                            rng.below(static_cast<int>(options.size())))];
                    });
}

ProperCheck verify_proper(const Hypergraph& h, const std::vector<int>& coloring) {
    if (coloring.size() != static_cast<size_t>(h.vertex_count())) {
        throw ValidationError("coloring must assign a color to every vertex");
    }
    for (int c : coloring) {
        if (c < 0) throw ValidationError("coloring has an uncolored vertex");
    }
    ProperCheck check;
    for (int i = 0; i < h.edge_count(); ++i) {
        if (edge_monochromatic(h, coloring, i)) check.monochromatic_edges.push_back(i);
    }
    check.outcome = check.monochromatic_edges.empty() ? Outcome::Proper : Outcome::Failed;
    return check;
}

SuccessEstimate estimate_success(const Hypergraph& h, int r, double p,
                                 long long trials, std::uint64_t seed, int threads) {
    if (trials < 1) throw ValidationError("need at least one trial");
    std::vector<char> success(static_cast<size_t>(trials), 0);
    parallel_for(trials, threads, [&](long long t) {
        const RunInput input = sample_input(h, r, p, derive_seed(seed, static_cast<std::uint64_t>(t)));
        const RunTrace trace = run_recolor(h, input);
        success[static_cast<size_t>(t)] = trace.outcome == Outcome::Proper ? 1 : 0;
    });
    SuccessEstimate est;
    est.trials = trials;
    for (char c : success) est.successes += c;
    est.fraction = static_cast<double>(est.successes) / static_cast<double>(trials);
    const double z = 1.959963985;  // 95% Wilson interval
    const double nt = static_cast<double>(trials);
    const double ph = est.fraction;
    const double denom = 1.0 + z * z / nt;
    const double center = ph + z * z / (2.0 * nt);
    const double spread = z * std::sqrt(ph * (1.0 - ph) / nt + z * z / (4.0 * nt * nt));
    est.wilson_low = std::max(0.0, (center - spread) / denom);
    est.wilson_high = std::min(1.0, (center + spread) / denom);
    return est;
}

}  // namespace hgcolor
