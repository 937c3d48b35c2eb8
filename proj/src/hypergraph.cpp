#include "hgcolor/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hgcolor/rng.hpp"

namespace hgcolor {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

Hypergraph::Hypergraph(int n, int vertex_count, std::vector<std::vector<int>> edges)
    : n_(n), vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 2) throw ValidationError("edge size must be at least 2, got " + std::to_string(n_));
    if (vertex_count_ < 0) throw ValidationError("vertex_count must be nonnegative");
    for (size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        if (static_cast<int>(e.size()) != n_) {
            throw ValidationError("edge " + std::to_string(i) + " has " +
                                  std::to_string(e.size()) + " vertices, expected " +
                                  std::to_string(n_));
        }
        std::sort(e.begin(), e.end());
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 0 || e[k] >= vertex_count_) {
                throw ValidationError("edge " + std::to_string(i) + " has vertex " +
                                      std::to_string(e[k]) + " out of range [0, " +
                                      std::to_string(vertex_count_) + ")");
            }
            if (k > 0 && e[k] == e[k - 1]) {
                throw ValidationError("edge " + std::to_string(i) + " repeats vertex " +
                                      std::to_string(e[k]));
            }
        }
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1]) {
            throw ValidationError("duplicate edge at canonical position " + std::to_string(i));
        }
    }
}

bool Hypergraph::edge_contains(int edge_index, int v) const {
    const auto& e = edges_[static_cast<size_t>(edge_index)];
    return std::binary_search(e.begin(), e.end(), v);
}

std::vector<std::vector<int>> Hypergraph::incidence() const {
    std::vector<std::vector<int>> inc(static_cast<size_t>(vertex_count_));
    for (int i = 0; i < edge_count(); ++i) {
        for (int v : edges_[static_cast<size_t>(i)]) inc[static_cast<size_t>(v)].push_back(i);
    }
    return inc;
}

SimplicityReport check_simple(const Hypergraph& h) {
    SimplicityReport report;
    for (int i = 0; i < h.edge_count(); ++i) {
        for (int j = i + 1; j < h.edge_count(); ++j) {
            const int shared = intersection_size(h.edge(i), h.edge(j));
            if (shared >= 2) report.violations.push_back({i, j, shared});
        }
    }
    report.is_simple = report.violations.empty();
    return report;
}

DegreeProfile degree_profile(const Hypergraph& h) {
    DegreeProfile profile;
    profile.per_vertex_degrees.assign(static_cast<size_t>(h.vertex_count()), 0);
    for (int i = 0; i < h.edge_count(); ++i) {
        for (int v : h.edge(i)) profile.per_vertex_degrees[static_cast<size_t>(v)]++;
    }
    for (int d : profile.per_vertex_degrees) {
        profile.max_vertex_degree = std::max(profile.max_vertex_degree, d);
    }
    for (int i = 0; i < h.edge_count(); ++i) {
        int deg = 0;
        for (int j = 0; j < h.edge_count(); ++j) {
            if (j != i && intersection_size(h.edge(i), h.edge(j)) > 0) ++deg;
        }
        profile.max_edge_degree = std::max(profile.max_edge_degree, deg);
    }
    return profile;
}

int max_edge_degree_incidence(const Hypergraph& h) {
    const auto inc = h.incidence();
    std::vector<int> stamp(static_cast<size_t>(h.edge_count()), -1);
    int best = 0;
    for (int i = 0; i < h.edge_count(); ++i) {
        int deg = 0;
        for (int v : h.edge(i)) {
            for (int j : inc[static_cast<size_t>(v)]) {
                if (j != i && stamp[static_cast<size_t>(j)] != i) {
                    stamp[static_cast<size_t>(j)] = i;
                    ++deg;
                }
            }
        }
        best = std::max(best, deg);
    }
    return best;
}

int codegree(const Hypergraph& h, int u, int v) {
    if (u == v) throw ValidationError("codegree requires two distinct vertices");
    if (u < 0 || u >= h.vertex_count() || v < 0 || v >= h.vertex_count()) {
        throw ValidationError("codegree vertex out of range");
    }
    int count = 0;
    for (int i = 0; i < h.edge_count(); ++i) {
        if (h.edge_contains(i, u) && h.edge_contains(i, v)) ++count;
    }
    return count;
}

Hypergraph trim(const Hypergraph& h) {
    if (h.n() < 3) throw ValidationError("trim requires edge size >= 3");
    const auto degrees = degree_profile(h).per_vertex_degrees;
    std::vector<std::vector<int>> trimmed;
    trimmed.reserve(static_cast<size_t>(h.edge_count()));
    for (int i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edge(i);
        int drop = e[0];
        for (int v : e) {
            if (degrees[static_cast<size_t>(v)] > degrees[static_cast<size_t>(drop)]) drop = v;
        }
        std::vector<int> shrunk;
        shrunk.reserve(e.size() - 1);
        for (int v : e) {
            if (v != drop) shrunk.push_back(v);
        }
        trimmed.push_back(std::move(shrunk));
    }
    {
        auto sorted = trimmed;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i] == sorted[i - 1]) {
                throw IntegrityError("trim collapsed two edges onto the same vertex set");
            }
        }
    }
    return Hypergraph(h.n() - 1, h.vertex_count(), std::move(trimmed));
}

RandomGenResult gen_random_simple(int n, int vertex_count, int edge_target,
                                  int degree_cap, std::uint64_t seed) {
    if (n < 2) throw ValidationError("edge size must be at least 2");
    if (n > vertex_count) throw ValidationError("edge size exceeds vertex count");
    if (edge_target < 0 || degree_cap < 0) throw ValidationError("negative target or cap");

    Rng rng(seed);
    std::vector<std::vector<int>> accepted;
    std::vector<int> edge_degrees;  // degree of accepted[i] among accepted edges
    std::vector<int> pool(static_cast<size_t>(vertex_count));
    std::iota(pool.begin(), pool.end(), 0);

    const long long budget = 1000LL * edge_target;
    long long attempts = 0;
    while (static_cast<int>(accepted.size()) < edge_target && attempts < budget) {
        ++attempts;
        // partial Fisher-Yates draw of an n-subset
        for (int k = 0; k < n; ++k) {
            const int j = k + rng.below(vertex_count - k);
            std::swap(pool[static_cast<size_t>(k)], pool[static_cast<size_t>(j)]);
        }
        std::vector<int> candidate(pool.begin(), pool.begin() + n);
        std::sort(candidate.begin(), candidate.end());

        bool ok = true;
        int candidate_degree = 0;
        std::vector<int> touched;
        for (size_t i = 0; i < accepted.size() && ok; ++i) {
            const int shared = intersection_size(candidate, accepted[i]);
            if (shared >= n) ok = false;  // duplicate
            if (shared >= 2) ok = false;  // would break simplicity
            if (shared == 1) {
                if (edge_degrees[i] + 1 > degree_cap) ok = false;
                ++candidate_degree;
                touched.push_back(static_cast<int>(i));
            }
        }
        if (!ok || candidate_degree > degree_cap) continue;
        for (int i : touched) edge_degrees[static_cast<size_t>(i)]++;
        edge_degrees.push_back(candidate_degree);
        accepted.push_back(std::move(candidate));
    }

    RandomGenResult result{Hypergraph(n, vertex_count, std::move(accepted)),
                           true, attempts};
    result.reached_target = result.hypergraph.edge_count() == edge_target;
    return result;
}

namespace {

Hypergraph make_fano() {
    return Hypergraph(3, 7,
                      {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                       {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

// k edges of size 3 chained through shared endpoints
Hypergraph make_path(int k) {
    if (k < 1) throw ValidationError("path(k) requires k >= 1");
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < k; ++i) {
        edges.push_back({2 * i, 2 * i + 1, 2 * i + 2});
    }
    return Hypergraph(3, 2 * k + 1, std::move(edges));
}

Hypergraph make_disjoint(int k) {
    if (k < 1) throw ValidationError("disjoint(k) requires k >= 1");
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < k; ++i) {
        edges.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    }
    return Hypergraph(3, 3 * k, std::move(edges));
}

// three edges pairwise intersecting in three distinct vertices
Hypergraph make_triangle() {
    return Hypergraph(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
}

// all 3-subsets of a 5-set; deliberately not simple
Hypergraph make_complete_small() {
    std::vector<std::vector<int>> edges;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) edges.push_back({a, b, c});
    return Hypergraph(3, 5, std::move(edges));
}

}  // namespace

Hypergraph gen_named(const std::string& name) {
    if (name == "fano") return make_fano();
    if (name == "triangle") return make_triangle();
    if (name == "complete_small") return make_complete_small();
    const auto open = name.find('(');
    if (open != std::string::npos && name.back() == ')') {
        const std::string base = name.substr(0, open);
        const std::string arg = name.substr(open + 1, name.size() - open - 2);
        int k = 0;
        try {
            k = std::stoi(arg);
        } catch (const std::exception&) {
            throw ValidationError("bad argument in fixture name: " + name);
        }
        if (base == "path") return make_path(k);
        if (base == "disjoint") return make_disjoint(k);
    }
    throw ValidationError("unknown fixture '" + name +
                          "'; known: fano, path(k), disjoint(k), triangle, complete_small");
}

}  // namespace hgcolor
